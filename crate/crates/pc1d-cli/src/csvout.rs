//! CSV serialization for sweep and dispersion results.
//!
//! Numbers are written with Rust's shortest round-trip formatting: the
//! printed decimal re-parses to exactly the f64 that produced it, so a
//! rerun of the same configuration is byte-identical and downstream
//! consumers lose nothing to truncation. Plain decimal notation, `.` as
//! the decimal point, no grouping separators.

use std::fmt::Write;

use pc1d::dispersion::{DispersionPoint, DispersionVariant};
use pc1d::spectrum::{GapReport, SpectrumPoint};

/// Shortest round-trip decimal form of a float.
fn number(value: f64) -> String {
    format!("{value}")
}

/// Renders a transmission sweep. `gaps` marks which rows fall inside a
/// detected stop band.
pub fn spectrum_csv(points: &[SpectrumPoint], gaps: &GapReport) -> String {
    let mut out = String::with_capacity(points.len() * 96 + 96);
    out.push_str("omega_rad_s,omega_over_omega0,T_quantum,R_quantum,T_classical,rhs_dispersion,in_gap\n");
    for point in points {
        let in_gap = gaps.gap_containing(point.omega).is_some();
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            number(point.omega),
            number(point.omega_normalized),
            number(point.t_quantum),
            number(point.r_quantum),
            number(point.t_classical),
            number(point.rhs_dispersion),
            in_gap,
        )
        .expect("writing to a String cannot fail");
    }
    out
}

/// Renders a band-structure scan. The `evanescent_decay` field is empty
/// for propagating rows, where no decay exists. A non-default variant is
/// recorded in a leading comment so the file is self-describing.
pub fn dispersion_csv(points: &[DispersionPoint], omega0: f64, variant: DispersionVariant) -> String {
    let mut out = String::with_capacity(points.len() * 80 + 96);
    if variant == DispersionVariant::AsPrinted {
        out.push_str("# variant=as_printed\n");
    }
    out.push_str("omega_rad_s,omega_over_omega0,rhs,bloch_k_re_times_cell,evanescent_decay,in_gap\n");
    for point in points {
        let decay = match point.evanescent_decay {
            Some(value) => number(value),
            None => String::new(),
        };
        writeln!(
            out,
            "{},{},{},{},{},{}",
            number(point.omega),
            number(point.omega / omega0),
            number(point.rhs),
            number(point.bloch_phase()),
            decay,
            point.in_gap,
        )
        .expect("writing to a String cannot fail");
    }
    out
}
