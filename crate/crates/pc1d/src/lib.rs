//! Quantum transfer-matrix solver for one-dimensional photonic crystals.
//!
//! The crate models a finite periodic bilayer stack in vacuum — N
//! repetitions of medium A (index n_a, thickness a) followed by medium B
//! (index n_b, thickness b) — by treating the single photon as a
//! stationary scattering problem: each medium contributes the effective
//! potential V = ħω(1−n), turning the wave equation into a piecewise-
//! constant Helmholtz problem. Matching the wave function and its
//! derivative across every interface yields a cascade of 2×2 transform
//! matrices whose product carries the incident and reflected amplitudes
//! through the stack and out the far side.
//!
//! The crate computes, for any such stack:
//!
//! * quantum transmissivity and reflectivity spectra ([`quantum`]),
//! * the Bloch dispersion relation and band gaps of the corresponding
//!   infinite crystal, with a 4×4 boundary-condition determinant as an
//!   internal consistency oracle ([`dispersion`]),
//! * a fully independent classical thin-film result used to cross-check
//!   the quantum route ([`classical`]),
//! * frequency sweeps, gap detection, and parameter trend studies
//!   ([`spectrum`]).
//!
//! Conventions: lengths in nanometres, angular frequencies in rad/s,
//! wavenumbers in nm⁻¹, c exact SI. All solver arithmetic reduces to
//! dimensionless phases k·d before exponentiation. Every operation is
//! pure and deterministic; results are bitwise independent of evaluation
//! order.

pub mod classical;
pub mod dispersion;
pub mod error;
pub mod numerics;
pub mod quantum;
pub mod spectrum;
pub mod stack;

pub use error::{Error, Result};
