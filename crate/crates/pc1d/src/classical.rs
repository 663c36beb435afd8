//! Independent classical thin-film oracle.
//!
//! This module computes transmissivity and reflectivity with the standard
//! normal-incidence characteristic-matrix method: each layer contributes
//! the unimodular matrix
//!
//! ```text
//! ⎡ cos δ      i·sin δ / n ⎤
//! ⎣ i·n·sin δ  cos δ       ⎦ ,   δ = n·(ω/c)·d,
//! ```
//!
//! which relates the tangential field components across the layer; the
//! stack matrix is the product in physical traversal order (first layer
//! leftmost), and the amplitude coefficients follow from the ambient and
//! substrate admittances (both vacuum here).
//!
//! It is deliberately developed apart from [`crate::quantum`]: different
//! primitive (field components per layer, not amplitude pairs per
//! interface), different conventions, different extraction formulas. The
//! two share only the bare 2×2 arithmetic of [`crate::numerics`], so an
//! agreement between them is a genuine cross-check rather than the same
//! code evaluated twice.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::Matrix2;
use crate::stack::{wavenumber, StackSpec};

/// Characteristic matrix of a layer or a stack of layers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicMatrix {
    pub inner: Matrix2,
}

/// Characteristic matrix of a single lossless layer of index `n` and
/// thickness `d` nm at angular frequency `omega`. Its determinant is
/// exactly cos²δ + sin²δ = 1.
pub fn layer_characteristic(n: f64, d: f64, omega: f64) -> Result<CharacteristicMatrix> {
    if !d.is_finite() || d <= 0.0 {
        return Err(Error::invalid(
            "d",
            format!("must be finite and > 0 nm, got {d}"),
        ));
    }
    let delta = wavenumber(omega, n)? * d;
    let (sin, cos) = delta.sin_cos();
    Ok(CharacteristicMatrix {
        inner: Matrix2::new(
            Complex64::new(cos, 0.0),
            Complex64::new(0.0, sin / n),
            Complex64::new(0.0, n * sin),
            Complex64::new(cos, 0.0),
        ),
    })
}

/// Classical transmissivity and reflectivity (T, R) of the stack at one
/// frequency, with vacuum on both sides.
///
/// With the stack matrix `M = M_A·M_B · M_A·M_B · …` (N repetitions,
/// first-traversed layer leftmost) and unit admittances on both sides,
/// the amplitude coefficients are
///
/// ```text
/// t = 2 / (M₁₁ + M₁₂ + M₂₁ + M₂₂),
/// r = (M₁₁ + M₁₂ − M₂₁ − M₂₂) / (M₁₁ + M₁₂ + M₂₁ + M₂₂),
/// ```
///
/// and T = |t|², R = |r|². For lossless layers T + R = 1.
pub fn classical_transmissivity(stack: &StackSpec, omega: f64) -> Result<(f64, f64)> {
    let layer_a = layer_characteristic(
        stack.layer_a.refractive_index,
        stack.layer_a.thickness,
        omega,
    )?
    .inner;
    let layer_b = layer_characteristic(
        stack.layer_b.refractive_index,
        stack.layer_b.thickness,
        omega,
    )?
    .inner;
    let cell = layer_a * layer_b;
    let mut m = Matrix2::identity();
    for _ in 0..stack.periods {
        m = m * cell;
    }
    let denominator = m.m11 + m.m12 + m.m21 + m.m22;
    if denominator.norm() < 1e-300 {
        return Err(Error::NumericalDegeneracy(format!(
            "characteristic-matrix denominator collapsed at omega = {omega} rad/s"
        )));
    }
    let t = 2.0 / denominator;
    let r = (m.m11 + m.m12 - m.m21 - m.m22) / denominator;
    Ok((t.norm_sqr(), r.norm_sqr()))
}
