//! Bloch dispersion relation of the infinite bilayer crystal.
//!
//! For the periodic medium, the trace condition
//!
//! ```text
//! cos(kΛ) = cos(k_A·a)·cos(k_B·b) − ½(k_A/k_B + k_B/k_A)·sin(k_A·a)·sin(k_B·b)
//! ```
//!
//! determines the Bloch wave vector k at each frequency. Where the right
//! side has magnitude at most 1 a propagating Bloch mode exists; where it
//! exceeds 1 the mode is evanescent — the frequency lies in a band gap and
//! the per-cell decay is arccosh of the magnitude, while the real part of
//! kΛ pins to 0 (rhs > 1) or π (rhs < −1).
//!
//! Two prefactor variants are provided. `Corrected` uses the dimensionless
//! ½(k_A/k_B + k_B/k_A), which matches the classical bilayer (Kronig–
//! Penney form) relation and — decisively — satisfies the 4×4
//! boundary-condition determinant that the relation is derived from.
//! `AsPrinted` uses ½(1/k_A + 1/k_B), a form that circulates in print but
//! carries units of length and fails that determinant; it is retained
//! behind an explicit flag for comparison, never as a default.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::ComplexScalar;
use crate::stack::{wave_context, StackSpec, WaveContext};

/// Which prefactor the dispersion right side uses. See the module docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DispersionVariant {
    /// Dimensionless ½(k_A/k_B + k_B/k_A); the default.
    #[default]
    Corrected,
    /// ½(1/k_A + 1/k_B) in nm; dimensionally inconsistent, kept for
    /// side-by-side comparison.
    AsPrinted,
}

/// One frequency sample of the dispersion relation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionPoint {
    /// Angular frequency in rad/s.
    pub omega: f64,
    /// Right side of the trace condition.
    pub rhs: f64,
    /// Bloch wave vector in nm⁻¹, present when the mode propagates
    /// (|rhs| ≤ 1); the arccos branch in [0, π/Λ].
    pub bloch_k: Option<f64>,
    /// Per-cell evanescent decay Im(kΛ) = arccosh|rhs|, present inside a
    /// gap (|rhs| > 1).
    pub evanescent_decay: Option<f64>,
    /// Whether the frequency lies in a band gap. Band-edge points with
    /// |rhs| = 1 exactly count as propagating — a measure-zero set where
    /// some deterministic convention is required.
    pub in_gap: bool,
}

impl DispersionPoint {
    /// Real part of kΛ in [0, π]: arccos(rhs) when propagating, pinned to
    /// 0 or π inside a gap depending on the sign of rhs.
    pub fn bloch_phase(&self) -> f64 {
        self.rhs.clamp(-1.0, 1.0).acos()
    }
}

/// Right side of the trace condition for the selected variant.
pub fn dispersion_rhs(ctx: &WaveContext, variant: DispersionVariant) -> f64 {
    let phase_a = ctx.k_a * ctx.thickness_a;
    let phase_b = ctx.k_b * ctx.thickness_b;
    let prefactor = match variant {
        DispersionVariant::Corrected => 0.5 * (ctx.k_a / ctx.k_b + ctx.k_b / ctx.k_a),
        DispersionVariant::AsPrinted => 0.5 * (1.0 / ctx.k_a + 1.0 / ctx.k_b),
    };
    phase_a.cos() * phase_b.cos() - prefactor * phase_a.sin() * phase_b.sin()
}

/// Solves the trace condition at one frequency, classifying the mode as
/// propagating or evanescent.
pub fn bloch_solve(ctx: &WaveContext, variant: DispersionVariant) -> DispersionPoint {
    let rhs = dispersion_rhs(ctx, variant);
    if rhs.abs() <= 1.0 {
        DispersionPoint {
            omega: ctx.omega,
            rhs,
            bloch_k: Some(rhs.acos() / ctx.cell_length),
            evanescent_decay: None,
            in_gap: false,
        }
    } else {
        // Guarded arccosh: |rhs| can graze 1 from above by rounding only,
        // and the max keeps the sqrt argument nonnegative.
        let decay = rhs.abs().max(1.0).acosh();
        DispersionPoint {
            omega: ctx.omega,
            rhs,
            bloch_k: None,
            evanescent_decay: Some(decay),
            in_gap: true,
        }
    }
}

/// 3×3 complex determinant by direct expansion.
fn det3(m: [[ComplexScalar; 3]; 3]) -> ComplexScalar {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// 4×4 complex determinant by cofactor expansion along the first row.
fn det4(m: [[ComplexScalar; 4]; 4]) -> ComplexScalar {
    let mut det = Complex64::new(0.0, 0.0);
    for col in 0..4 {
        let mut minor = [[Complex64::new(0.0, 0.0); 3]; 3];
        for (mi, row) in m.iter().enumerate().skip(1) {
            let mut mj = 0;
            for (cj, &entry) in row.iter().enumerate() {
                if cj == col {
                    continue;
                }
                minor[mi - 1][mj] = entry;
                mj += 1;
            }
        }
        let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
        det += m[0][col] * sign * det3(minor);
    }
    det
}

/// Evaluates the 4×4 boundary-condition determinant at a trial Bloch wave
/// vector, row-normalized so the result is scale-comparable.
///
/// The four rows express continuity of ψ and dψ/dx at the in-cell A|B
/// interface (x = a) and the Bloch-periodicity condition tying the cell's
/// end (x = Λ) back to its start, for the unknown amplitude vector
/// (A⁺, A⁻, B⁺, B⁻). A nontrivial cell mode exists exactly where the
/// determinant vanishes, so this is the oracle that decides which
/// dispersion prefactor is the true one: at k solved from the `Corrected`
/// relation the normalized determinant sits at rounding level, while the
/// `AsPrinted` relation leaves it far from zero.
///
/// Each row is divided by its entry of largest modulus before expansion;
/// the wavenumber rows would otherwise be smaller by ~|k| ≈ 10⁻² nm⁻¹ per
/// row, making absolute thresholds meaningless.
pub fn dispersion_determinant(ctx: &WaveContext, bloch_k: f64) -> ComplexScalar {
    let cis = |theta: f64| Complex64::cis(theta);
    let a = ctx.thickness_a;
    let cell = ctx.cell_length;
    let (k_a, k_b) = (ctx.k_a, ctx.k_b);
    let bloch = bloch_k * cell;

    let mut rows = [
        [
            cis(k_a * a),
            cis(-k_a * a),
            -cis(k_b * a),
            -cis(-k_b * a),
        ],
        [
            k_a * cis(k_a * a),
            -k_a * cis(-k_a * a),
            -k_b * cis(k_b * a),
            k_b * cis(-k_b * a),
        ],
        [
            cis(bloch),
            cis(bloch),
            -cis(k_b * cell),
            -cis(-k_b * cell),
        ],
        [
            k_a * cis(bloch),
            -k_a * cis(bloch),
            -k_b * cis(k_b * cell),
            k_b * cis(-k_b * cell),
        ],
    ];
    for row in &mut rows {
        let max = row
            .iter()
            .map(|entry| entry.norm())
            .fold(0.0_f64, f64::max);
        if max > 0.0 {
            for entry in row.iter_mut() {
                *entry /= max;
            }
        }
    }
    det4(rows)
}

/// Solves the dispersion relation over a strictly increasing frequency
/// grid.
pub fn band_structure(
    stack: &StackSpec,
    omega_grid: &[f64],
    variant: DispersionVariant,
) -> Result<Vec<DispersionPoint>> {
    for pair in omega_grid.windows(2) {
        if pair[1] <= pair[0] {
            return Err(Error::invalid(
                "omega_grid",
                format!("must be strictly increasing, got {} after {}", pair[1], pair[0]),
            ));
        }
    }
    omega_grid
        .iter()
        .map(|&omega| Ok(bloch_solve(&wave_context(stack, omega)?, variant)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn reference_context_at_qw() -> WaveContext {
        let stack = StackSpec::reference();
        wave_context(&stack, stack.quarter_wave_omega()).unwrap()
    }

    #[test]
    fn uniform_medium_collapses_to_free_propagation() {
        // With k_A = k_B = K the trace condition must reduce to
        // cos(K(a+b)) by the angle-sum identity.
        let stack = StackSpec::from_parameters(1.0, 165.0, 1.0, 281.0, 8).unwrap();
        for omega in [0.4e15, 0.9e15, 1.3e15] {
            let ctx = wave_context(&stack, omega).unwrap();
            let rhs = dispersion_rhs(&ctx, DispersionVariant::Corrected);
            let expected = (ctx.big_k * ctx.cell_length).cos();
            assert!((rhs - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn quarter_wave_right_side_hits_the_index_ratio_mean() {
        let ctx = reference_context_at_qw();
        // At k_A·a = k_B·b = π/2 the right side is −½(r + 1/r) with
        // r = n_a/n_b = 2.35/1.38.
        let rhs = dispersion_rhs(&ctx, DispersionVariant::Corrected);
        assert!((rhs - (-1.145066288182636)).abs() < 1e-12);
        let ratio: f64 = 2.35 / 1.38;
        assert!((rhs + 0.5 * (ratio + 1.0 / ratio)).abs() < 1e-4);
    }

    #[test]
    fn printed_prefactor_is_off_by_orders_of_magnitude() {
        let ctx = reference_context_at_qw();
        let rhs = dispersion_rhs(&ctx, DispersionVariant::AsPrinted);
        // ½(1/k_A + 1/k_B) ≈ ½(105.0 + 178.9) nm: the length scale leaks
        // straight into the supposedly dimensionless right side.
        assert!((rhs - (-141.95928840947133)).abs() < 1e-9);
    }

    #[test]
    fn gap_point_reports_the_log_index_ratio_decay() {
        let ctx = reference_context_at_qw();
        let point = bloch_solve(&ctx, DispersionVariant::Corrected);
        assert!(point.in_gap);
        assert_eq!(point.bloch_k, None);
        let decay = point.evanescent_decay.unwrap();
        // At the quarter-wave point |rhs| = cosh(ln(n_a/n_b)).
        assert!((decay - (2.35_f64 / 1.38).ln()).abs() < 1e-4);
        assert!((decay.cosh() - point.rhs.abs()).abs() < 1e-12);
        // rhs < −1: the real part of kΛ pins to the zone edge π.
        assert!((point.bloch_phase() - PI).abs() < 1e-12);
    }

    #[test]
    fn propagating_point_inverts_the_cosine() {
        let stack = StackSpec::reference();
        let omega = 0.55 * stack.quarter_wave_omega();
        let ctx = wave_context(&stack, omega).unwrap();
        let point = bloch_solve(&ctx, DispersionVariant::Corrected);
        assert!(!point.in_gap);
        assert_eq!(point.evanescent_decay, None);
        let k = point.bloch_k.unwrap();
        assert!(k >= 0.0);
        assert!(((k * ctx.cell_length).cos() - point.rhs).abs() < 1e-12);
        assert!(k * ctx.cell_length <= PI);
        assert!((point.bloch_phase() - k * ctx.cell_length).abs() < 1e-15);
    }

    #[test]
    fn right_side_is_symmetric_under_layer_swap() {
        let forward = StackSpec::from_parameters(2.35, 165.0, 1.38, 281.0, 8).unwrap();
        let swapped = StackSpec::from_parameters(1.38, 281.0, 2.35, 165.0, 8).unwrap();
        for omega_factor in [0.4, 0.8, 1.2, 1.6] {
            let omega = omega_factor * forward.quarter_wave_omega();
            let ctx_f = wave_context(&forward, omega).unwrap();
            let ctx_s = wave_context(&swapped, omega).unwrap();
            for variant in [DispersionVariant::Corrected, DispersionVariant::AsPrinted] {
                let lhs = dispersion_rhs(&ctx_f, variant);
                let rhs = dispersion_rhs(&ctx_s, variant);
                assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
            }
        }
    }

    #[test]
    fn vacuum_satisfies_the_boundary_determinant() {
        let stack = StackSpec::from_parameters(1.0, 165.0, 1.0, 281.0, 8).unwrap();
        // Sub-zone-edge frequency so K·Λ ∈ [0, π] and the free wave is its
        // own Bloch mode with k = K.
        let omega = 0.4e15;
        let ctx = wave_context(&stack, omega).unwrap();
        let det = dispersion_determinant(&ctx, ctx.big_k);
        assert!(det.norm() < 1e-10);
    }

    #[test]
    fn corrected_solution_zeroes_the_determinant_where_printed_does_not() {
        let stack = StackSpec::reference();
        let omega = 0.55 * stack.quarter_wave_omega();
        let ctx = wave_context(&stack, omega).unwrap();
        let corrected = bloch_solve(&ctx, DispersionVariant::Corrected);
        let det_corrected =
            dispersion_determinant(&ctx, corrected.bloch_k.unwrap());
        assert!(det_corrected.norm() < 1e-10);

        let printed = bloch_solve(&ctx, DispersionVariant::AsPrinted);
        let k_printed = printed.bloch_phase() / ctx.cell_length;
        let det_printed = dispersion_determinant(&ctx, k_printed);
        assert!(det_printed.norm() > 1e-4);
    }

    #[test]
    fn band_structure_flags_the_stop_band_and_only_it() {
        let stack = StackSpec::reference();
        let qw = stack.quarter_wave_omega();
        let grid: Vec<f64> = (0..200)
            .map(|i| (0.3 + 1.4 * i as f64 / 199.0) * qw)
            .collect();
        let points = band_structure(&stack, &grid, DispersionVariant::Corrected).unwrap();
        assert_eq!(points.len(), grid.len());
        // The quarter-wave frequency must be inside a flagged gap.
        let nearest = points
            .iter()
            .min_by(|p, q| {
                (p.omega - qw)
                    .abs()
                    .partial_cmp(&(q.omega - qw).abs())
                    .unwrap()
            })
            .unwrap();
        assert!(nearest.in_gap);
        // Every point is classified exactly one way.
        for point in &points {
            assert_eq!(point.in_gap, point.rhs.abs() > 1.0);
            assert_eq!(point.in_gap, point.bloch_k.is_none());
            assert_eq!(point.in_gap, point.evanescent_decay.is_some());
        }
    }

    #[test]
    fn vacuum_band_structure_has_no_gaps() {
        let stack = StackSpec::from_parameters(1.0, 165.0, 1.0, 281.0, 8).unwrap();
        let grid: Vec<f64> = (0..120).map(|i| 0.2e15 + i as f64 * 1.0e13).collect();
        let points = band_structure(&stack, &grid, DispersionVariant::Corrected).unwrap();
        assert!(points.iter().all(|p| !p.in_gap));
    }

    #[test]
    fn non_increasing_grids_are_rejected() {
        let stack = StackSpec::reference();
        let grid = [1.0e15, 1.0e15];
        assert!(band_structure(&stack, &grid, DispersionVariant::Corrected).is_err());
        let grid = [1.2e15, 1.1e15];
        assert!(band_structure(&stack, &grid, DispersionVariant::Corrected).is_err());
    }
}
