//! Stack geometry and the frequency-derived scalars consumed by the solvers.
//!
//! A stack is `N` repetitions of a bilayer cell — medium A of index `n_a`
//! and thickness `a`, then medium B of index `n_b` and thickness `b` —
//! surrounded by vacuum on both sides. For each angular frequency ω the
//! solvers need the vacuum wavenumber `K = ω/c`, the in-medium wavenumbers
//! `k = n·ω/c`, and (for diagnostics) the effective photon potential
//! `V = ħω(1−n)` that makes the stationary wave equation formally a
//! piecewise-constant scattering problem. [`WaveContext`] bundles all of
//! them so they are computed once per frequency.
//!
//! Units: lengths in nanometres, ω in rad/s, wavenumbers in nm⁻¹. All
//! solver math reduces to the dimensionless phases `k·d` before any
//! exponential is taken, which keeps intermediate magnitudes benign.

use crate::error::{Error, Result};

/// Speed of light in vacuum, in nanometres per second (exact SI value).
pub const SPEED_OF_LIGHT_NM_PER_S: f64 = 2.997_924_58e17;

/// A homogeneous lossless dielectric layer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Layer {
    /// Real refractive index, strictly positive.
    pub refractive_index: f64,
    /// Thickness in nanometres, strictly positive.
    pub thickness: f64,
}

impl Layer {
    /// Validates and builds a layer.
    pub fn new(refractive_index: f64, thickness: f64) -> Result<Self> {
        if !refractive_index.is_finite() || refractive_index <= 0.0 {
            return Err(Error::invalid(
                "refractive_index",
                format!("must be finite and > 0, got {refractive_index}"),
            ));
        }
        if !thickness.is_finite() || thickness <= 0.0 {
            return Err(Error::invalid(
                "thickness",
                format!("must be finite and > 0 nm, got {thickness}"),
            ));
        }
        Ok(Layer {
            refractive_index,
            thickness,
        })
    }
}

/// A periodic bilayer stack in vacuum: N repetitions of (A then B).
///
/// The incident and transmission half-spaces are vacuum; the ambient index
/// is therefore fixed at 1 and kept private so it cannot be violated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StackSpec {
    /// First layer of each period (medium A).
    pub layer_a: Layer,
    /// Second layer of each period (medium B).
    pub layer_b: Layer,
    /// Number of periods, at least 1.
    pub periods: u32,
    ambient_index: f64,
}

impl StackSpec {
    /// Validates and builds a stack.
    pub fn new(layer_a: Layer, layer_b: Layer, periods: u32) -> Result<Self> {
        if periods < 1 {
            return Err(Error::invalid("periods", "must be at least 1"));
        }
        Ok(StackSpec {
            layer_a,
            layer_b,
            periods,
            ambient_index: 1.0,
        })
    }

    /// Builds a stack from bare numbers; convenience for callers and tests.
    pub fn from_parameters(n_a: f64, a_nm: f64, n_b: f64, b_nm: f64, periods: u32) -> Result<Self> {
        StackSpec::new(Layer::new(n_a, a_nm)?, Layer::new(n_b, b_nm)?, periods)
    }

    /// The ZnS/MgF₂ quarter-wave Bragg mirror used as the crate's reference
    /// configuration: n_a = 2.35, a = 165 nm, n_b = 1.38, b = 281 nm, N = 8.
    /// Its quarter-wave frequency corresponds to a vacuum wavelength of
    /// 4·n_a·a = 1551 nm.
    pub fn reference() -> Self {
        StackSpec::from_parameters(2.35, 165.0, 1.38, 281.0, 8)
            .expect("reference parameters are valid")
    }

    /// Refractive index of the incident and transmission half-spaces
    /// (always 1: vacuum).
    pub fn ambient_index(&self) -> f64 {
        self.ambient_index
    }

    /// Length of one period, Λ = a + b, in nm.
    pub fn cell_length(&self) -> f64 {
        self.layer_a.thickness + self.layer_b.thickness
    }

    /// Total stack length N·Λ in nm.
    pub fn total_length(&self) -> f64 {
        self.periods as f64 * self.cell_length()
    }

    /// The quarter-wave angular frequency of medium A: ω with
    /// k_A·a = π/2, i.e. ω = 2πc / (4·n_a·a). Used as the default
    /// axis-normalization frequency ω₀.
    pub fn quarter_wave_omega(&self) -> f64 {
        2.0 * std::f64::consts::PI * SPEED_OF_LIGHT_NM_PER_S
            / (4.0 * self.layer_a.refractive_index * self.layer_a.thickness)
    }

    /// The same stack with every thickness multiplied by `s`. Physics is
    /// invariant under scaling lengths by `s` and frequencies by `1/s`;
    /// tests rely on this.
    pub fn scaled(&self, s: f64) -> Result<Self> {
        if !s.is_finite() || s <= 0.0 {
            return Err(Error::invalid("s", format!("must be finite and > 0, got {s}")));
        }
        StackSpec::new(
            Layer::new(self.layer_a.refractive_index, self.layer_a.thickness * s)?,
            Layer::new(self.layer_b.refractive_index, self.layer_b.thickness * s)?,
            self.periods,
        )
    }
}

/// All frequency-derived scalars for one ω, computed once per solve.
///
/// The thicknesses are carried along so that downstream formulas can form
/// their dimensionless phases (`k_a·a`, position phases `k·x`) without
/// needing the stack again.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveContext {
    /// Angular frequency in rad/s.
    pub omega: f64,
    /// Vacuum wavelength λ = 2πc/ω in nm.
    pub lambda_vac: f64,
    /// Vacuum wavenumber K = ω/c = 2π/λ in nm⁻¹.
    pub big_k: f64,
    /// Wavenumber in medium A, k_A = n_a·ω/c, in nm⁻¹.
    pub k_a: f64,
    /// Wavenumber in medium B, k_B = n_b·ω/c, in nm⁻¹.
    pub k_b: f64,
    /// Photon potential in medium A, V_a = ω(1−n_a), in units of ħ = 1.
    pub v_a: f64,
    /// Photon potential in medium B, V_b = ω(1−n_b), in units of ħ = 1.
    pub v_b: f64,
    /// Photon energy E = ω in units of ħ = 1.
    pub energy: f64,
    /// Period length Λ = a + b in nm.
    pub cell_length: f64,
    /// Thickness of medium A in nm.
    pub thickness_a: f64,
    /// Thickness of medium B in nm.
    pub thickness_b: f64,
}

/// In-medium wavenumber k = n·ω/c in nm⁻¹.
pub fn wavenumber(omega: f64, n: f64) -> Result<f64> {
    if !omega.is_finite() || omega <= 0.0 {
        return Err(Error::invalid(
            "omega",
            format!("must be finite and > 0 rad/s, got {omega}"),
        ));
    }
    if !n.is_finite() || n <= 0.0 {
        return Err(Error::invalid(
            "n",
            format!("must be finite and > 0, got {n}"),
        ));
    }
    Ok(n * omega / SPEED_OF_LIGHT_NM_PER_S)
}

/// Effective photon potential V = ω(1−n) in units of ħ = 1.
///
/// Negative inside dielectrics (n > 1), zero in vacuum. The potential is
/// diagnostic only: the solvers consume it solely through the identity
/// k = (E − V)/(ħc), which reduces to `n·ω/c` and is what [`wavenumber`]
/// computes — ħ cancels and never enters numerically.
pub fn potential_energy(omega: f64, n: f64) -> Result<f64> {
    if !omega.is_finite() || omega <= 0.0 {
        return Err(Error::invalid(
            "omega",
            format!("must be finite and > 0 rad/s, got {omega}"),
        ));
    }
    if !n.is_finite() || n <= 0.0 {
        return Err(Error::invalid(
            "n",
            format!("must be finite and > 0, got {n}"),
        ));
    }
    Ok(omega * (1.0 - n))
}

/// Assembles the full [`WaveContext`] for a stack at one frequency.
pub fn wave_context(stack: &StackSpec, omega: f64) -> Result<WaveContext> {
    let big_k = wavenumber(omega, stack.ambient_index())?;
    let k_a = wavenumber(omega, stack.layer_a.refractive_index)?;
    let k_b = wavenumber(omega, stack.layer_b.refractive_index)?;
    Ok(WaveContext {
        omega,
        lambda_vac: 2.0 * std::f64::consts::PI / big_k,
        big_k,
        k_a,
        k_b,
        v_a: potential_energy(omega, stack.layer_a.refractive_index)?,
        v_b: potential_energy(omega, stack.layer_b.refractive_index)?,
        energy: omega,
        cell_length: stack.cell_length(),
        thickness_a: stack.layer_a.thickness,
        thickness_b: stack.layer_b.thickness,
    })
}
