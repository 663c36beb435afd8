//! Quantum transfer-matrix solver for the finite bilayer stack.
//!
//! The photon's stationary wave function is a plane-wave pair in every
//! region: `F·e^{iKx} + F′·e^{−iKx}` in the incident vacuum, amplitude
//! pairs `(A_j^±, B_j^±)` inside medium A and B of each period `j`
//! (absolute-phase convention: the coefficients multiply `e^{±ikx}` with
//! the global coordinate `x`), and a transmitted wave `D·e^{iKx}` beyond
//! the stack. Matching the wave function and its derivative at an
//! interface yields a 2×2 transform matrix from the amplitudes on the left
//! of the interface to those on the right. Because the coefficients carry
//! absolute phases, each matrix depends on the interface position: the
//! entries combine the index mismatch ratio with phase factors `e^{±ikx}`
//! evaluated at the exact boundary position — positions are never
//! accumulated incrementally, so no phase drift builds up over many
//! periods.
//!
//! The cascade composes right-to-left: `M = Mᴺ···M²M¹` with
//! `Mʲ = M_Bʲ·M_Aʲ`, mapping `(F, F′)` directly to the B-layer amplitudes
//! of the last period. Matching to the transmitted wave at the back face
//! then gives the reflection ratio `F′/F` and the transmission amplitude
//! `t = D/F`, with `T = |t|²` and `R = |F′/F|²`. For lossless stacks the
//! probability current is conserved, so `T + R = 1` — a property the test
//! suite checks aggressively, alongside agreement with the independent
//! classical oracle in [`crate::classical`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{ComplexScalar, Matrix2};
use crate::stack::{wave_context, StackSpec, WaveContext};

/// Which interface or composition a [`TransferMatrix`] represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    /// Vacuum → medium A of period 1, interface at x = 0.
    AFirst,
    /// Medium B of period j−1 → medium A of period j, at x = (j−1)(a+b).
    /// Defined for j ≥ 2.
    AGeneral(u32),
    /// Medium A of period j → medium B of period j, at x = j(a+b) − b.
    /// Defined for j ≥ 1.
    BGeneral(u32),
    /// One full period: M_Bʲ·M_Aʲ.
    Period(u32),
    /// The N-period composition M = Mᴺ···M¹ with entries m₁..m₄.
    Total,
}

/// A 2×2 quantum transform matrix tagged with its role in the cascade.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix {
    pub inner: Matrix2,
    pub kind: MatrixKind,
}

/// Incident, reflected, and transmitted amplitudes with F normalized to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryAmplitudes {
    /// Incident amplitude F (normalized to 1).
    pub f: ComplexScalar,
    /// Reflected amplitude F′.
    pub f_prime: ComplexScalar,
    /// Transmitted amplitude D.
    pub d: ComplexScalar,
}

/// Plane-wave amplitudes of one period, absolute-phase convention.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LayerCoefficients {
    /// 1-based period index.
    pub period: u32,
    /// Right-moving amplitude in medium A.
    pub a_plus: ComplexScalar,
    /// Left-moving amplitude in medium A.
    pub a_minus: ComplexScalar,
    /// Right-moving amplitude in medium B.
    pub b_plus: ComplexScalar,
    /// Left-moving amplitude in medium B.
    pub b_minus: ComplexScalar,
}

/// Unit phase factor e^{iθ}.
fn phase(theta: f64) -> ComplexScalar {
    Complex64::cis(theta)
}

/// Interface matrix entries for a boundary at position `x` between media
/// with wavenumbers `k_left` and `k_right`: maps the absolute-phase
/// amplitude pair on the left to the pair on the right.
fn interface(k_left: f64, k_right: f64, x: f64) -> Matrix2 {
    let ratio = k_left / k_right;
    let up = 0.5 * (1.0 + ratio);
    let down = 0.5 * (1.0 - ratio);
    Matrix2::new(
        up * phase((k_left - k_right) * x),
        down * phase(-(k_left + k_right) * x),
        down * phase((k_left + k_right) * x),
        up * phase((k_right - k_left) * x),
    )
}

/// Transform matrix of the vacuum → A interface of the first period,
/// at x = 0: ½·[[1 + K/k_A, 1 − K/k_A], [1 − K/k_A, 1 + K/k_A]].
///
/// All entries are real; the matrix is symmetric and its determinant is
/// K/k_A. For n_a = 1 it degenerates to the identity: an index-matched
/// boundary is no boundary.
pub fn matrix_a_first(ctx: &WaveContext) -> TransferMatrix {
    TransferMatrix {
        inner: interface(ctx.big_k, ctx.k_a, 0.0),
        kind: MatrixKind::AFirst,
    }
}

/// Transform matrix of the B(j−1) → A(j) interface at x = (j−1)(a+b),
/// defined for j ≥ 2 (period 1 starts from vacuum; see
/// [`matrix_a_first`]). Its determinant is k_B/k_A.
pub fn matrix_a_n(ctx: &WaveContext, j: u32) -> Result<TransferMatrix> {
    if j < 2 {
        return Err(Error::invalid(
            "j",
            format!("B→A interface matrices exist for periods j ≥ 2, got {j}"),
        ));
    }
    Ok(TransferMatrix {
        inner: a_general(ctx, j),
        kind: MatrixKind::AGeneral(j),
    })
}

/// Transform matrix of the A(j) → B(j) interface at x = j(a+b) − b,
/// defined for j ≥ 1. Its determinant is k_A/k_B.
pub fn matrix_b_n(ctx: &WaveContext, j: u32) -> Result<TransferMatrix> {
    if j < 1 {
        return Err(Error::invalid(
            "j",
            format!("A→B interface matrices exist for periods j ≥ 1, got {j}"),
        ));
    }
    Ok(TransferMatrix {
        inner: b_general(ctx, j),
        kind: MatrixKind::BGeneral(j),
    })
}

fn a_general(ctx: &WaveContext, j: u32) -> Matrix2 {
    let x = (j - 1) as f64 * ctx.cell_length;
    interface(ctx.k_b, ctx.k_a, x)
}

fn b_general(ctx: &WaveContext, j: u32) -> Matrix2 {
    let x = j as f64 * ctx.cell_length - ctx.thickness_b;
    interface(ctx.k_a, ctx.k_b, x)
}

/// One full period matrix Mʲ = M_Bʲ·M_Aʲ (for j = 1 the A factor is the
/// vacuum → A matrix).
pub fn period_matrix(ctx: &WaveContext, j: u32) -> Result<TransferMatrix> {
    if j < 1 {
        return Err(Error::invalid(
            "j",
            format!("period index must be ≥ 1, got {j}"),
        ));
    }
    let a_factor = if j == 1 {
        matrix_a_first(ctx).inner
    } else {
        a_general(ctx, j)
    };
    Ok(TransferMatrix {
        inner: b_general(ctx, j) * a_factor,
        kind: MatrixKind::Period(j),
    })
}

/// The total transform matrix M = Mᴺ···M²M¹ mapping (F, F′) to the
/// B-layer amplitudes of period N. Its determinant telescopes to K/k_B:
/// the first factor contributes K/k_A, every A→B interface k_A/k_B, and
/// every B→A interface k_B/k_A.
pub fn total_matrix(stack: &StackSpec, ctx: &WaveContext) -> TransferMatrix {
    let mut m = b_general(ctx, 1) * matrix_a_first(ctx).inner;
    for j in 2..=stack.periods {
        m = b_general(ctx, j) * a_general(ctx, j) * m;
    }
    TransferMatrix {
        inner: m,
        kind: MatrixKind::Total,
    }
}

/// Checks that the matrix passed to an extraction routine is a total one.
fn require_total(m: &TransferMatrix) -> Result<()> {
    if m.kind != MatrixKind::Total {
        return Err(Error::invalid(
            "m",
            format!("expected a total transform matrix, got {:?}", m.kind),
        ));
    }
    Ok(())
}

/// Reflection amplitude ratio F′/F.
///
/// Obtained by matching the B-layer wave of period N to the transmitted
/// wave `D·e^{iKx}` at the back face x = N(a+b). With m₁..m₄ the entries
/// of the total matrix and e^± = e^{±i·k_B·N(a+b)}:
///
/// ```text
///         m₁(K − k_B)e^+ + m₃(K + k_B)e^−
/// F′/F = ───────────────────────────────────
///         m₂(k_B − K)e^+ − m₄(K + k_B)e^−
/// ```
///
/// For lossless stacks |F′/F| ≤ 1.
pub fn reflection_ratio(m: &TransferMatrix, ctx: &WaveContext, periods: u32) -> Result<ComplexScalar> {
    require_total(m)?;
    let x_back = periods as f64 * ctx.cell_length;
    let e_plus = phase(ctx.k_b * x_back);
    let e_minus = phase(-ctx.k_b * x_back);
    let sum = ctx.big_k + ctx.k_b;
    let diff = ctx.big_k - ctx.k_b;
    let numerator = m.inner.m11 * diff * e_plus + m.inner.m21 * sum * e_minus;
    let denominator = m.inner.m12 * (-diff) * e_plus - m.inner.m22 * sum * e_minus;
    if denominator.norm() < 1e-300 {
        return Err(Error::NumericalDegeneracy(format!(
            "reflection denominator collapsed at omega = {} rad/s",
            ctx.omega
        )));
    }
    Ok(numerator / denominator)
}

/// Transmission amplitude t = D/F.
///
/// With the reflection ratio r = F′/F already solved:
/// t = (m₁ + m₂r)·e^{i(k_B−K)N(a+b)} + (m₃ + m₄r)·e^{−i(k_B+K)N(a+b)}.
pub fn transmission_t(
    m: &TransferMatrix,
    ctx: &WaveContext,
    periods: u32,
    f_prime_over_f: ComplexScalar,
) -> Result<ComplexScalar> {
    require_total(m)?;
    let x_back = periods as f64 * ctx.cell_length;
    let b_plus = m.inner.m11 + m.inner.m12 * f_prime_over_f;
    let b_minus = m.inner.m21 + m.inner.m22 * f_prime_over_f;
    Ok(b_plus * phase((ctx.k_b - ctx.big_k) * x_back) + b_minus * phase(-(ctx.k_b + ctx.big_k) * x_back))
}

/// Quantum transmissivity and reflectivity (T, R) = (|t|², |F′/F|²) for a
/// stack at one frequency; the convenience wrapper over the full pipeline.
pub fn transmissivity_reflectivity(stack: &StackSpec, omega: f64) -> Result<(f64, f64)> {
    let ctx = wave_context(stack, omega)?;
    let m = total_matrix(stack, &ctx);
    let r = reflection_ratio(&m, &ctx, stack.periods)?;
    let t = transmission_t(&m, &ctx, stack.periods, r)?;
    Ok((t.norm_sqr(), r.norm_sqr()))
}

/// Solves the boundary amplitudes (F = 1, F′, D) for a stack at one ω.
pub fn boundary_amplitudes(stack: &StackSpec, omega: f64) -> Result<BoundaryAmplitudes> {
    let ctx = wave_context(stack, omega)?;
    let m = total_matrix(stack, &ctx);
    let f_prime = reflection_ratio(&m, &ctx, stack.periods)?;
    let d = transmission_t(&m, &ctx, stack.periods, f_prime)?;
    Ok(BoundaryAmplitudes {
        f: Complex64::new(1.0, 0.0),
        f_prime,
        d,
    })
}

/// Propagates the amplitude pair of every period from (F = 1, F′).
pub fn layer_coefficients(stack: &StackSpec, omega: f64) -> Result<Vec<LayerCoefficients>> {
    let ctx = wave_context(stack, omega)?;
    let m = total_matrix(stack, &ctx);
    let f_prime = reflection_ratio(&m, &ctx, stack.periods)?;
    let mut coefficients = Vec::with_capacity(stack.periods as usize);
    let mut carried = (Complex64::new(1.0, 0.0), f_prime);
    for j in 1..=stack.periods {
        let a_pair = if j == 1 {
            matrix_a_first(&ctx).inner.apply(carried)
        } else {
            a_general(&ctx, j).apply(carried)
        };
        let b_pair = b_general(&ctx, j).apply(a_pair);
        coefficients.push(LayerCoefficients {
            period: j,
            a_plus: a_pair.0,
            a_minus: a_pair.1,
            b_plus: b_pair.0,
            b_minus: b_pair.1,
        });
        carried = b_pair;
    }
    Ok(coefficients)
}

/// Reconstructs the wave function ψ at the requested positions.
///
/// Positions must lie in [−Λ, (N+1)Λ]: one period of incident vacuum, the
/// stack, and one period of transmitted vacuum. The incident region uses
/// `F·e^{iKx} + F′·e^{−iKx}` with F = 1; layer regions use the propagated
/// [`LayerCoefficients`]; the transmitted region uses `D·e^{iKx}`. By
/// construction ψ and dψ/dx are continuous at every interface.
pub fn field_profile(
    stack: &StackSpec,
    omega: f64,
    x_samples: &[f64],
) -> Result<Vec<(f64, ComplexScalar)>> {
    let ctx = wave_context(stack, omega)?;
    let amplitudes = boundary_amplitudes(stack, omega)?;
    let coefficients = layer_coefficients(stack, omega)?;
    let cell = ctx.cell_length;
    let back = stack.periods as f64 * cell;
    let mut profile = Vec::with_capacity(x_samples.len());
    for &x in x_samples {
        if !x.is_finite() || x < -cell || x > back + cell {
            return Err(Error::OutOfDomain(format!(
                "x = {x} nm outside [{}, {}] nm",
                -cell,
                back + cell
            )));
        }
        let psi = if x < 0.0 {
            amplitudes.f * phase(ctx.big_k * x) + amplitudes.f_prime * phase(-ctx.big_k * x)
        } else if x >= back {
            amplitudes.d * phase(ctx.big_k * x)
        } else {
            let j = ((x / cell).floor() as usize).min(stack.periods as usize - 1);
            let c = &coefficients[j];
            let local = x - j as f64 * cell;
            if local < ctx.thickness_a {
                c.a_plus * phase(ctx.k_a * x) + c.a_minus * phase(-ctx.k_a * x)
            } else {
                c.b_plus * phase(ctx.k_b * x) + c.b_minus * phase(-ctx.k_b * x)
            }
        };
        profile.push((x, psi));
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stack::Layer;

    fn reference() -> StackSpec {
        StackSpec::reference()
    }

    fn qw_context() -> WaveContext {
        let stack = reference();
        wave_context(&stack, stack.quarter_wave_omega()).unwrap()
    }

    #[test]
    fn first_interface_is_identity_when_index_matched() {
        let stack = StackSpec::from_parameters(1.0, 200.0, 1.5, 100.0, 2).unwrap();
        let ctx = wave_context(&stack, 1.0e15).unwrap();
        let m = matrix_a_first(&ctx).inner;
        assert!((m.m11 - 1.0).norm() < 1e-15);
        assert!((m.m22 - 1.0).norm() < 1e-15);
        assert_eq!(m.m12.norm(), 0.0);
        assert_eq!(m.m21.norm(), 0.0);
    }

    #[test]
    fn first_interface_is_symmetric_with_real_entries() {
        let ctx = qw_context();
        let m = matrix_a_first(&ctx).inner;
        assert_eq!(m.m11, m.m22);
        assert_eq!(m.m12, m.m21);
        assert_eq!(m.m11.im, 0.0);
        assert_eq!(m.m12.im, 0.0);
    }

    #[test]
    fn interface_determinants_follow_the_wavenumber_ratios() {
        let ctx = qw_context();
        let det_a1 = matrix_a_first(&ctx).inner.det();
        assert!((det_a1.re - ctx.big_k / ctx.k_a).abs() < 1e-15);
        assert!((det_a1.re - 0.425531914893617).abs() < 1e-15);
        assert_eq!(det_a1.im, 0.0);

        for j in 1..=6 {
            let det_b = matrix_b_n(&ctx, j).unwrap().inner.det();
            let expected = ctx.k_a / ctx.k_b;
            assert!((det_b - expected).norm() <= 1e-12 * expected);
            assert!((det_b.re - 1.702898550724638).abs() < 1e-12);
        }
        for j in 2..=6 {
            let det_a = matrix_a_n(&ctx, j).unwrap().inner.det();
            let expected = ctx.k_b / ctx.k_a;
            assert!((det_a - expected).norm() <= 1e-12 * expected);
            assert!((det_a.re - 0.5872340425531914).abs() < 1e-12);
        }
    }

    #[test]
    fn matched_media_make_every_interface_trivial() {
        let stack = StackSpec::from_parameters(1.7, 150.0, 1.7, 240.0, 4).unwrap();
        let ctx = wave_context(&stack, 1.4e15).unwrap();
        for j in 1..=4 {
            let m = matrix_b_n(&ctx, j).unwrap().inner;
            assert!((m.m11 - 1.0).norm() < 1e-12, "period {j}");
            assert!(m.m12.norm() < 1e-12 && m.m21.norm() < 1e-12);
        }
        for j in 2..=4 {
            let m = matrix_a_n(&ctx, j).unwrap().inner;
            assert!((m.m11 - 1.0).norm() < 1e-12, "period {j}");
            assert!(m.m12.norm() < 1e-12 && m.m21.norm() < 1e-12);
        }
    }

    #[test]
    fn period_indices_below_range_are_rejected() {
        let ctx = qw_context();
        assert!(matrix_a_n(&ctx, 1).is_err());
        assert!(matrix_a_n(&ctx, 0).is_err());
        assert!(matrix_b_n(&ctx, 0).is_err());
        assert!(period_matrix(&ctx, 0).is_err());
    }

    #[test]
    fn total_matrix_composes_period_matrices() {
        let stack = reference();
        let ctx = qw_context();
        let total = total_matrix(&stack, &ctx).inner;
        let mut product = Matrix2::identity();
        for j in 1..=stack.periods {
            product = period_matrix(&ctx, j).unwrap().inner * product;
        }
        assert!((total.m11 - product.m11).norm() <= 1e-12 * product.m11.norm());
        assert!((total.m22 - product.m22).norm() <= 1e-12 * product.m22.norm());
    }

    #[test]
    fn total_determinant_telescopes_to_ambient_over_k_b() {
        let stack = reference();
        let ctx = qw_context();
        let det = total_matrix(&stack, &ctx).inner.det();
        let expected = ctx.big_k / ctx.k_b;
        assert!((det - expected).norm() <= 1e-12 * expected);
        assert!((det.re - 0.7246376811594204).abs() < 1e-11);
    }

    #[test]
    fn vacuum_stack_is_fully_transparent() {
        let stack = StackSpec::from_parameters(1.0, 165.0, 1.0, 281.0, 8).unwrap();
        let omega = 1.2e15;
        let ctx = wave_context(&stack, omega).unwrap();
        let m = total_matrix(&stack, &ctx);
        let r = reflection_ratio(&m, &ctx, stack.periods).unwrap();
        let t = transmission_t(&m, &ctx, stack.periods, r).unwrap();
        assert!(r.norm() < 1e-15);
        assert!((t.norm() - 1.0).abs() < 1e-14);
        let (big_t, big_r) = transmissivity_reflectivity(&stack, omega).unwrap();
        assert!((big_t - 1.0).abs() < 1e-13);
        assert!(big_r < 1e-13);
    }

    #[test]
    fn quarter_wave_point_sits_deep_in_the_stop_band() {
        let stack = reference();
        let (t, r) = transmissivity_reflectivity(&stack, stack.quarter_wave_omega()).unwrap();
        // An 8-period ZnS/MgF₂ mirror at its quarter-wave point transmits
        // about 4·(n_b/n_a)^{2N} ≈ 8.0e-4 of the incident current.
        assert!(t < 0.01);
        assert!(r > 0.99);
        assert!((t - 7.995874385334803e-4).abs() < 1e-15);
        assert!((t + r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn energy_is_conserved_off_resonance_too() {
        let stack = reference();
        let qw = stack.quarter_wave_omega();
        for factor in [0.37, 0.62, 0.95, 1.13, 1.49] {
            let (t, r) = transmissivity_reflectivity(&stack, factor * qw).unwrap();
            assert!((t + r - 1.0).abs() < 1e-10, "factor {factor}");
            assert!((0.0..=1.0).contains(&t));
        }
    }

    #[test]
    fn reflection_requires_a_total_matrix() {
        let ctx = qw_context();
        let not_total = matrix_a_first(&ctx);
        assert!(reflection_ratio(&not_total, &ctx, 8).is_err());
        assert!(transmission_t(&not_total, &ctx, 8, Complex64::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn coefficients_make_the_wave_function_continuous() {
        let stack = reference();
        let qw = stack.quarter_wave_omega();
        // An off-gap frequency keeps all amplitudes O(1); the quarter-wave
        // point is checked too since decaying amplitudes stress the phases.
        for omega in [0.55 * qw, qw] {
            let ctx = wave_context(&stack, omega).unwrap();
            let amps = boundary_amplitudes(&stack, omega).unwrap();
            let coeffs = layer_coefficients(&stack, omega).unwrap();
            let eval_a = |c: &LayerCoefficients, x: f64| {
                c.a_plus * phase(ctx.k_a * x) + c.a_minus * phase(-ctx.k_a * x)
            };
            let eval_b = |c: &LayerCoefficients, x: f64| {
                c.b_plus * phase(ctx.k_b * x) + c.b_minus * phase(-ctx.k_b * x)
            };
            let diff_a = |c: &LayerCoefficients, x: f64| {
                (c.a_plus * phase(ctx.k_a * x) - c.a_minus * phase(-ctx.k_a * x)) * ctx.k_a
            };
            let diff_b = |c: &LayerCoefficients, x: f64| {
                (c.b_plus * phase(ctx.k_b * x) - c.b_minus * phase(-ctx.k_b * x)) * ctx.k_b
            };

            // Front face x = 0: incident meets A of period 1.
            let incident = amps.f + amps.f_prime;
            let incident_slope = (amps.f - amps.f_prime) * ctx.big_k;
            let first = &coeffs[0];
            assert!((incident - eval_a(first, 0.0)).norm() < 1e-9 * incident.norm().max(1.0));
            assert!(
                (incident_slope - diff_a(first, 0.0)).norm()
                    < 1e-9 * incident_slope.norm().max(1.0)
            );

            for (idx, c) in coeffs.iter().enumerate() {
                let j = idx as f64;
                // A|B interface inside period j+1.
                let x_ab = j * ctx.cell_length + ctx.thickness_a;
                assert!((eval_a(c, x_ab) - eval_b(c, x_ab)).norm() < 1e-9);
                assert!((diff_a(c, x_ab) - diff_b(c, x_ab)).norm() < 1e-9 * ctx.k_a);
                // B|A interface to the next period.
                if let Some(next) = coeffs.get(idx + 1) {
                    let x_ba = (j + 1.0) * ctx.cell_length;
                    assert!((eval_b(c, x_ba) - eval_a(next, x_ba)).norm() < 1e-9);
                    assert!((diff_b(c, x_ba) - diff_a(next, x_ba)).norm() < 1e-9 * ctx.k_a);
                }
            }

            // Back face x = NΛ: B of period N meets the transmitted wave.
            let last = coeffs.last().unwrap();
            let x_back = stack.periods as f64 * ctx.cell_length;
            let transmitted = amps.d * phase(ctx.big_k * x_back);
            let transmitted_slope = amps.d * phase(ctx.big_k * x_back) * ctx.big_k;
            assert!((eval_b(last, x_back) - transmitted).norm() < 1e-9);
            assert!((diff_b(last, x_back) - transmitted_slope).norm() < 1e-9 * ctx.k_a);
        }
    }

    #[test]
    fn vacuum_field_is_a_single_plane_wave() {
        let stack = StackSpec::new(
            Layer::new(1.0, 165.0).unwrap(),
            Layer::new(1.0, 281.0).unwrap(),
            8,
        )
        .unwrap();
        let omega = 1.2e15;
        let ctx = wave_context(&stack, omega).unwrap();
        let xs: Vec<f64> = (0..40)
            .map(|i| -446.0 + i as f64 * (10.0 * 446.0) / 39.0)
            .collect();
        let profile = field_profile(&stack, omega, &xs).unwrap();
        for (x, psi) in profile {
            let expected = phase(ctx.big_k * x);
            assert!((psi - expected).norm() < 1e-12, "x = {x}");
        }
    }

    #[test]
    fn field_positions_outside_the_window_are_rejected() {
        let stack = reference();
        let omega = stack.quarter_wave_omega();
        let too_left = [-446.0 - 1.0];
        let too_right = [9.0 * 446.0 + 1.0];
        assert!(matches!(
            field_profile(&stack, omega, &too_left),
            Err(Error::OutOfDomain(_))
        ));
        assert!(matches!(
            field_profile(&stack, omega, &too_right),
            Err(Error::OutOfDomain(_))
        ));
    }
}
