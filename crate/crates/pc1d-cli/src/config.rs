//! Run configuration: defaults, config-file parsing, flag precedence.
//!
//! A run is described by a flat set of parameters that can come from three
//! places, in increasing precedence: built-in defaults (the reference
//! quarter-wave stack), a `key=value` config file, and command-line flags.
//! Frequencies may be given in absolute rad/s or as multiples of the
//! normalization frequency ω₀ using an `x` suffix (`0.3x` means 0.3·ω₀).

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};

use pc1d::dispersion::DispersionVariant;
use pc1d::stack::StackSpec;

/// A frequency that is either absolute or pegged to ω₀.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OmegaSpec {
    /// Plain angular frequency in rad/s.
    Absolute(f64),
    /// Multiple of the normalization frequency ω₀ (the `x` suffix form).
    Relative(f64),
}

impl OmegaSpec {
    /// The absolute frequency this spec denotes for a given ω₀.
    pub fn resolve(self, omega0: f64) -> f64 {
        match self {
            OmegaSpec::Absolute(value) => value,
            OmegaSpec::Relative(multiple) => multiple * omega0,
        }
    }
}

impl FromStr for OmegaSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let (body, relative) = match trimmed.strip_suffix(['x', 'X']) {
            Some(body) => (body, true),
            None => (trimmed, false),
        };
        let value: f64 = body
            .trim()
            .parse()
            .map_err(|_| anyhow!("expected a number or a number with an 'x' suffix, got {trimmed:?}"))?;
        if !value.is_finite() || value <= 0.0 {
            bail!("frequency must be finite and positive, got {trimmed:?}");
        }
        Ok(if relative {
            OmegaSpec::Relative(value)
        } else {
            OmegaSpec::Absolute(value)
        })
    }
}

impl fmt::Display for OmegaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaSpec::Absolute(value) => write!(f, "{value}"),
            OmegaSpec::Relative(multiple) => write!(f, "{multiple}x"),
        }
    }
}

/// Partially specified run parameters, merged defaults → file → flags.
#[derive(Debug, Default, Clone)]
pub struct Settings {
    pub n_a: Option<f64>,
    pub n_b: Option<f64>,
    pub a_nm: Option<f64>,
    pub b_nm: Option<f64>,
    pub periods: Option<u32>,
    pub omega_min: Option<OmegaSpec>,
    pub omega_max: Option<OmegaSpec>,
    pub points: Option<usize>,
    pub variant: Option<DispersionVariant>,
    pub omega0_thz: Option<f64>,
    pub gap_threshold: Option<f64>,
    pub min_run: Option<usize>,
}

impl Settings {
    /// Overlays `other` on top of `self`: set fields in `other` win.
    pub fn overridden_by(mut self, other: &Settings) -> Settings {
        macro_rules! take {
            ($field:ident) => {
                if other.$field.is_some() {
                    self.$field = other.$field;
                }
            };
        }
        take!(n_a);
        take!(n_b);
        take!(a_nm);
        take!(b_nm);
        take!(periods);
        take!(omega_min);
        take!(omega_max);
        take!(points);
        take!(variant);
        take!(omega0_thz);
        take!(gap_threshold);
        take!(min_run);
        self
    }
}

/// Fully resolved parameters for one command invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n_a: f64,
    pub n_b: f64,
    pub a_nm: f64,
    pub b_nm: f64,
    pub periods: u32,
    pub omega_min: OmegaSpec,
    pub omega_max: OmegaSpec,
    pub points: usize,
    pub variant: DispersionVariant,
    pub omega0_thz: Option<f64>,
    pub gap_threshold: f64,
    pub min_run: usize,
    pub output_path: Option<PathBuf>,
    pub plot_path: Option<PathBuf>,
}

impl RunConfig {
    /// Applies defaults to whatever the file and flags left unset.
    pub fn from_settings(
        settings: Settings,
        output_path: Option<PathBuf>,
        plot_path: Option<PathBuf>,
    ) -> Result<RunConfig> {
        let reference = StackSpec::reference();
        let config = RunConfig {
            n_a: settings.n_a.unwrap_or(reference.layer_a.refractive_index),
            n_b: settings.n_b.unwrap_or(reference.layer_b.refractive_index),
            a_nm: settings.a_nm.unwrap_or(reference.layer_a.thickness),
            b_nm: settings.b_nm.unwrap_or(reference.layer_b.thickness),
            periods: settings.periods.unwrap_or(reference.periods),
            omega_min: settings.omega_min.unwrap_or(OmegaSpec::Relative(0.3)),
            omega_max: settings.omega_max.unwrap_or(OmegaSpec::Relative(1.7)),
            points: settings.points.unwrap_or(2000),
            variant: settings.variant.unwrap_or_default(),
            omega0_thz: settings.omega0_thz,
            gap_threshold: settings.gap_threshold.unwrap_or(0.01),
            min_run: settings.min_run.unwrap_or(3),
            output_path,
            plot_path,
        };
        config.validate()?;
        Ok(config)
    }

    /// Checks every precondition the computation relies on, so failures
    /// surface before any output file is touched.
    fn validate(&self) -> Result<()> {
        self.stack()?;
        if self.points < 2 {
            bail!("points: need at least 2 sweep points, got {}", self.points);
        }
        if let Some(thz) = self.omega0_thz {
            if !thz.is_finite() || thz <= 0.0 {
                bail!("omega0_thz: must be finite and positive, got {thz}");
            }
        }
        if !self.gap_threshold.is_finite() || self.gap_threshold <= 0.0 || self.gap_threshold >= 1.0 {
            bail!(
                "gap_threshold: must lie strictly between 0 and 1, got {}",
                self.gap_threshold
            );
        }
        if self.min_run == 0 {
            bail!("min_run: must be at least 1");
        }
        let omega0 = self.omega0(&self.stack()?);
        let (lo, hi) = self.window(omega0)?;
        if lo >= hi {
            bail!("omega_min: window start {lo} rad/s is not below omega_max {hi} rad/s");
        }
        Ok(())
    }

    /// The stack this configuration describes.
    pub fn stack(&self) -> Result<StackSpec> {
        StackSpec::from_parameters(self.n_a, self.a_nm, self.n_b, self.b_nm, self.periods)
            .map_err(|err| anyhow!(err))
    }

    /// Normalization frequency: explicit THz override, else the stack's
    /// quarter-wave frequency.
    pub fn omega0(&self, stack: &StackSpec) -> f64 {
        match self.omega0_thz {
            Some(thz) => 2.0 * std::f64::consts::PI * thz * 1e12,
            None => stack.quarter_wave_omega(),
        }
    }

    /// The absolute sweep window for a given ω₀.
    pub fn window(&self, omega0: f64) -> Result<(f64, f64)> {
        let lo = self.omega_min.resolve(omega0);
        let hi = self.omega_max.resolve(omega0);
        if !lo.is_finite() || lo <= 0.0 {
            bail!("omega_min: resolves to {lo} rad/s, must be finite and positive");
        }
        if !hi.is_finite() || hi <= 0.0 {
            bail!("omega_max: resolves to {hi} rad/s, must be finite and positive");
        }
        Ok((lo, hi))
    }
}

/// The keys a config file may contain — anything else is an error.
const KNOWN_KEYS: [&str; 12] = [
    "n_a",
    "n_b",
    "a_nm",
    "b_nm",
    "periods",
    "omega_min",
    "omega_max",
    "points",
    "variant",
    "omega0_thz",
    "gap_threshold",
    "min_run",
];

/// Parses a flat `key = value` config file. `#` starts a comment, blank
/// lines are skipped, unknown and repeated keys are errors.
pub fn parse_config_text(text: &str) -> Result<Settings> {
    let mut settings = Settings::default();
    let mut seen: Vec<&str> = Vec::new();

    for (index, raw_line) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = match raw_line.split_once('#') {
            Some((code, _comment)) => code,
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .with_context(|| format!("line {line_no}: expected `key = value`, got {raw_line:?}"))?;
        let key = key.trim();
        let value = value.trim();

        let known = KNOWN_KEYS
            .iter()
            .find(|&&k| k == key)
            .with_context(|| format!("line {line_no}: unknown key {key:?} (known keys: {})", KNOWN_KEYS.join(", ")))?;
        if seen.contains(known) {
            bail!("line {line_no}: key {key:?} given more than once");
        }
        seen.push(known);

        let fail = |what: &str| anyhow!("line {line_no}: key {key:?}: expected {what}, got {value:?}");
        match key {
            "n_a" => settings.n_a = Some(value.parse().map_err(|_| fail("a number"))?),
            "n_b" => settings.n_b = Some(value.parse().map_err(|_| fail("a number"))?),
            "a_nm" => settings.a_nm = Some(value.parse().map_err(|_| fail("a number"))?),
            "b_nm" => settings.b_nm = Some(value.parse().map_err(|_| fail("a number"))?),
            "periods" => settings.periods = Some(value.parse().map_err(|_| fail("a nonnegative integer"))?),
            "omega_min" => {
                settings.omega_min =
                    Some(value.parse().with_context(|| format!("line {line_no}: key \"omega_min\""))?)
            }
            "omega_max" => {
                settings.omega_max =
                    Some(value.parse().with_context(|| format!("line {line_no}: key \"omega_max\""))?)
            }
            "points" => settings.points = Some(value.parse().map_err(|_| fail("a positive integer"))?),
            "variant" => settings.variant = Some(parse_variant(value).ok_or_else(|| fail("corrected or as-printed"))?),
            "omega0_thz" => settings.omega0_thz = Some(value.parse().map_err(|_| fail("a number"))?),
            "gap_threshold" => settings.gap_threshold = Some(value.parse().map_err(|_| fail("a number"))?),
            "min_run" => settings.min_run = Some(value.parse().map_err(|_| fail("a positive integer"))?),
            _ => unreachable!("key was checked against KNOWN_KEYS"),
        }
    }
    Ok(settings)
}

/// Accepts both the flag spelling and the underscore spelling.
fn parse_variant(value: &str) -> Option<DispersionVariant> {
    match value {
        "corrected" => Some(DispersionVariant::Corrected),
        "as-printed" | "as_printed" => Some(DispersionVariant::AsPrinted),
        _ => None,
    }
}
