//! Frequency sweeps, band-gap detection, and parameter trend studies.
//!
//! A sweep evaluates, on a uniform frequency grid, the quantum
//! transmissivity/reflectivity, the independent classical transmissivity,
//! and the dispersion right side of the infinite crystal. Band gaps can
//! then be read off two ways: from transmission (runs of points where the
//! finite stack transmits less than a threshold) or from dispersion (runs
//! where |rhs| > 1, i.e. no propagating Bloch mode exists). The two agree
//! up to finite-size effects: the finite-N transmission gap sits strictly
//! inside the infinite-crystal dispersion gap and approaches it as N
//! grows.
//!
//! Trend studies re-run the same fixed window while varying one stack
//! parameter, reporting gap counts and widths so that monotone claims
//! ("thicker A layers split the spectrum into more, narrower gaps";
//! "higher A index widens the main gap without changing the count") can
//! be tested mechanically.

use crate::classical::classical_transmissivity;
use crate::dispersion::{dispersion_rhs, DispersionVariant};
use crate::error::{Error, Result};
use crate::quantum::{reflection_ratio, total_matrix, transmission_t};
use crate::stack::{wave_context, Layer, StackSpec};

/// One fully populated sweep sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumPoint {
    /// Angular frequency in rad/s.
    pub omega: f64,
    /// ω/ω₀ with the sweep's normalization frequency ω₀.
    pub omega_normalized: f64,
    /// Quantum transmissivity T = |t|².
    pub t_quantum: f64,
    /// Quantum reflectivity R = |F′/F|².
    pub r_quantum: f64,
    /// Classical (characteristic-matrix) transmissivity.
    pub t_classical: f64,
    /// Right side of the dispersion trace condition (corrected variant;
    /// this column is physics, not a display choice).
    pub rhs_dispersion: f64,
    /// Whether the infinite crystal has no propagating mode here.
    pub in_gap_dispersion: bool,
}

/// Which signal a gap was detected from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapSource {
    /// Runs of low transmissivity of the finite stack.
    Transmission,
    /// Runs of |rhs| > 1 of the infinite crystal.
    Dispersion,
}

impl GapSource {
    /// Stable lower-case name used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            GapSource::Transmission => "transmission",
            GapSource::Dispersion => "dispersion",
        }
    }
}

/// One detected band gap with linearly interpolated edges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gap {
    /// Lower edge in rad/s.
    pub omega_low: f64,
    /// Upper edge in rad/s.
    pub omega_high: f64,
    /// Signal the gap was detected from.
    pub source: GapSource,
}

impl Gap {
    /// Gap width in rad/s.
    pub fn width(&self) -> f64 {
        self.omega_high - self.omega_low
    }

    /// Whether a frequency lies inside the gap (edges inclusive).
    pub fn contains(&self, omega: f64) -> bool {
        self.omega_low <= omega && omega <= self.omega_high
    }
}

/// All gaps found in one sweep from one source, sorted and disjoint.
#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    /// Detected gaps in increasing frequency order.
    pub gaps: Vec<Gap>,
    /// Number of gaps.
    pub count: usize,
    /// Mean gap width in rad/s; 0.0 when no gap was found.
    pub mean_width: f64,
}

impl GapReport {
    fn from_gaps(gaps: Vec<Gap>) -> Self {
        let count = gaps.len();
        let mean_width = if count == 0 {
            0.0
        } else {
            gaps.iter().map(Gap::width).sum::<f64>() / count as f64
        };
        GapReport {
            gaps,
            count,
            mean_width,
        }
    }

    /// The gap containing `omega`, if any.
    pub fn gap_containing(&self, omega: f64) -> Option<&Gap> {
        self.gaps.iter().find(|gap| gap.contains(omega))
    }
}

/// Uniform, endpoint-inclusive frequency grid.
pub fn omega_grid(omega_min: f64, omega_max: f64, points: usize) -> Result<Vec<f64>> {
    if !omega_min.is_finite() || omega_min <= 0.0 {
        return Err(Error::invalid(
            "omega_min",
            format!("must be finite and > 0 rad/s, got {omega_min}"),
        ));
    }
    if !omega_max.is_finite() || omega_max <= omega_min {
        return Err(Error::invalid(
            "omega_max",
            format!("must exceed omega_min = {omega_min} rad/s, got {omega_max}"),
        ));
    }
    if points < 2 {
        return Err(Error::invalid(
            "points",
            format!("a sweep needs at least 2 points, got {points}"),
        ));
    }
    let step = (omega_max - omega_min) / (points - 1) as f64;
    let mut grid: Vec<f64> = (0..points).map(|i| omega_min + i as f64 * step).collect();
    // Pin the last point so the endpoints are exactly as requested even
    // when the step does not divide the interval exactly in binary.
    grid[points - 1] = omega_max;
    Ok(grid)
}

/// Sweeps the stack over [omega_min, omega_max] with the stack's
/// quarter-wave frequency as the normalization ω₀.
pub fn sweep(
    stack: &StackSpec,
    omega_min: f64,
    omega_max: f64,
    points: usize,
) -> Result<Vec<SpectrumPoint>> {
    sweep_normalized(stack, omega_min, omega_max, points, stack.quarter_wave_omega())
}

/// Sweeps the stack with an explicit normalization frequency ω₀ (used
/// only for the `omega_normalized` column; it never affects physics).
pub fn sweep_normalized(
    stack: &StackSpec,
    omega_min: f64,
    omega_max: f64,
    points: usize,
    omega0: f64,
) -> Result<Vec<SpectrumPoint>> {
    if !omega0.is_finite() || omega0 <= 0.0 {
        return Err(Error::invalid(
            "omega0",
            format!("must be finite and > 0 rad/s, got {omega0}"),
        ));
    }
    let grid = omega_grid(omega_min, omega_max, points)?;
    grid.iter()
        .map(|&omega| {
            let ctx = wave_context(stack, omega)?;
            let m = total_matrix(stack, &ctx);
            let f_prime_over_f = reflection_ratio(&m, &ctx, stack.periods)?;
            let t = transmission_t(&m, &ctx, stack.periods, f_prime_over_f)?;
            let (t_classical, _) = classical_transmissivity(stack, omega)?;
            let rhs = dispersion_rhs(&ctx, DispersionVariant::Corrected);
            Ok(SpectrumPoint {
                omega,
                omega_normalized: omega / omega0,
                t_quantum: t.norm_sqr(),
                r_quantum: f_prime_over_f.norm_sqr(),
                t_classical,
                rhs_dispersion: rhs,
                in_gap_dispersion: rhs.abs() > 1.0,
            })
        })
        .collect()
}

/// Detects band gaps in a sweep.
///
/// For [`GapSource::Transmission`], a gap is a maximal run of at least
/// `min_run` consecutive points with `t_quantum < threshold`; `min_run`
/// keeps isolated Fabry–Perot side-lobe minima from registering as gaps.
/// For [`GapSource::Dispersion`], a gap is a maximal run of points with
/// |rhs| > 1; no minimum length applies because the classification is
/// exact rather than threshold-based.
///
/// Gap edges are linearly interpolated between the straddling grid points
/// (of T across the threshold, or of |rhs| across 1), which removes
/// grid-resolution bias from width comparisons. Runs touching the sweep
/// boundary use the boundary frequency as their edge.
pub fn detect_gaps(
    spectrum: &[SpectrumPoint],
    threshold: f64,
    min_run: usize,
    source: GapSource,
) -> Result<GapReport> {
    if spectrum.is_empty() {
        return Err(Error::invalid("spectrum", "must not be empty"));
    }
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(Error::invalid(
            "threshold",
            format!("must lie in (0, 1), got {threshold}"),
        ));
    }
    if min_run < 1 {
        return Err(Error::invalid("min_run", "must be at least 1"));
    }

    // Positive inside a gap, negative outside; linear in the interpolated
    // quantity so edge positions follow from a single zero crossing.
    let excess = |point: &SpectrumPoint| -> f64 {
        match source {
            GapSource::Transmission => threshold - point.t_quantum,
            GapSource::Dispersion => point.rhs_dispersion.abs() - 1.0,
        }
    };
    let required_run = match source {
        GapSource::Transmission => min_run,
        GapSource::Dispersion => 1,
    };

    let crossing = |outside: &SpectrumPoint, inside: &SpectrumPoint| -> f64 {
        let g_out = excess(outside);
        let g_in = excess(inside);
        if g_in == g_out {
            return 0.5 * (outside.omega + inside.omega);
        }
        outside.omega + (inside.omega - outside.omega) * (-g_out) / (g_in - g_out)
    };

    let n = spectrum.len();
    let mut gaps = Vec::new();
    let mut i = 0;
    while i < n {
        if excess(&spectrum[i]) <= 0.0 {
            i += 1;
            continue;
        }
        let start = i;
        while i < n && excess(&spectrum[i]) > 0.0 {
            i += 1;
        }
        let end = i - 1;
        if end - start + 1 < required_run {
            continue;
        }
        let omega_low = if start == 0 {
            spectrum[0].omega
        } else {
            crossing(&spectrum[start - 1], &spectrum[start])
        };
        let omega_high = if end == n - 1 {
            spectrum[n - 1].omega
        } else {
            crossing(&spectrum[end + 1], &spectrum[end])
        };
        gaps.push(Gap {
            omega_low,
            omega_high,
            source,
        });
    }
    Ok(GapReport::from_gaps(gaps))
}

/// Maximum |T_quantum − T_classical| over the sweep and the frequency
/// where it occurs.
pub fn compare_quantum_classical(spectrum: &[SpectrumPoint]) -> Result<(f64, f64)> {
    let mut best: Option<(f64, f64)> = None;
    for point in spectrum {
        let diff = (point.t_quantum - point.t_classical).abs();
        if best.is_none_or(|(max, _)| diff > max) {
            best = Some((diff, point.omega));
        }
    }
    best.ok_or_else(|| Error::invalid("spectrum", "must not be empty"))
}

/// Stack parameter varied by a trend study.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrendParameter {
    /// Thickness of medium A in nm.
    ThicknessA,
    /// Refractive index of medium A.
    IndexNa,
}

/// Sweep window and gap detector used by a trend study.
///
/// Every family member is swept over the *same* absolute window derived
/// from the base stack, so counts and widths are comparable across the
/// family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrendSettings {
    /// Window start in rad/s.
    pub omega_min: f64,
    /// Window end in rad/s.
    pub omega_max: f64,
    /// Grid resolution.
    pub points: usize,
    /// Signal the gap statistics are computed from.
    pub source: GapSource,
    /// Transmission threshold (used when `source` is transmission).
    pub threshold: f64,
    /// Minimum transmission run length (used when `source` is transmission).
    pub min_run: usize,
}

impl TrendSettings {
    /// Documented defaults: ω ∈ [0.25, 1.6]·ω_qw(base) with 4001 points,
    /// gap statistics from the dispersion signal, and transmission
    /// detection parameters threshold = 0.01, min_run = 3 for callers
    /// that switch the source.
    ///
    /// The window deliberately stops at 1.6·ω_qw: beyond it the second-
    /// order gap of thick-A stacks enters for some family members and not
    /// others, which would make gap counts measure the window rather than
    /// the crystal. The dispersion signal is the default source because it
    /// is threshold-free — low-contrast family members (e.g. n_a close to
    /// n_b) have shallow but real gaps that a fixed transmission threshold
    /// misses.
    pub fn for_base(base: &StackSpec) -> Self {
        let qw = base.quarter_wave_omega();
        TrendSettings {
            omega_min: 0.25 * qw,
            omega_max: 1.6 * qw,
            points: 4001,
            source: GapSource::Dispersion,
            threshold: 0.01,
            min_run: 3,
        }
    }
}

/// Runs [`trend_study_with`] under the documented default settings.
pub fn trend_study(
    base: &StackSpec,
    parameter: TrendParameter,
    values: &[f64],
) -> Result<Vec<(f64, GapReport)>> {
    trend_study_with(base, parameter, values, &TrendSettings::for_base(base))
}

/// Sweeps one stack per family value over a shared window and reports the
/// detected gaps for each.
pub fn trend_study_with(
    base: &StackSpec,
    parameter: TrendParameter,
    values: &[f64],
    settings: &TrendSettings,
) -> Result<Vec<(f64, GapReport)>> {
    if values.is_empty() {
        return Err(Error::invalid("values", "must not be empty"));
    }
    let omega0 = base.quarter_wave_omega();
    values
        .iter()
        .map(|&value| {
            let stack = family_member(base, parameter, value)?;
            let spectrum = sweep_normalized(
                &stack,
                settings.omega_min,
                settings.omega_max,
                settings.points,
                omega0,
            )?;
            let report = detect_gaps(&spectrum, settings.threshold, settings.min_run, settings.source)?;
            Ok((value, report))
        })
        .collect()
}

/// The base stack with one parameter replaced.
fn family_member(base: &StackSpec, parameter: TrendParameter, value: f64) -> Result<StackSpec> {
    let layer_a = match parameter {
        TrendParameter::ThicknessA => Layer::new(base.layer_a.refractive_index, value)?,
        TrendParameter::IndexNa => Layer::new(value, base.layer_a.thickness)?,
    };
    StackSpec::new(layer_a, base.layer_b, base.periods)
}

/// Whether gap counts never decrease along the family.
pub fn count_nondecreasing(entries: &[(f64, GapReport)]) -> bool {
    entries.windows(2).all(|w| w[0].1.count <= w[1].1.count)
}

/// Whether mean gap widths never increase along the family.
pub fn mean_width_nonincreasing(entries: &[(f64, GapReport)]) -> bool {
    entries
        .windows(2)
        .all(|w| w[0].1.mean_width >= w[1].1.mean_width)
}

/// Whether every family member has the same gap count.
pub fn count_constant(entries: &[(f64, GapReport)]) -> bool {
    entries.windows(2).all(|w| w[0].1.count == w[1].1.count)
}

/// Whether the width of the gap containing `omega_ref` strictly increases
/// along the family. False if any member has no gap there.
pub fn primary_width_strictly_increasing(entries: &[(f64, GapReport)], omega_ref: f64) -> bool {
    let widths: Option<Vec<f64>> = entries
        .iter()
        .map(|(_, report)| report.gap_containing(omega_ref).map(Gap::width))
        .collect();
    match widths {
        Some(widths) => widths.windows(2).all(|w| w[0] < w[1]),
        None => false,
    }
}
