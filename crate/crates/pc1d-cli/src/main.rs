//! `pc1d` — transmission spectra, band structure, and gap-trend studies
//! for one-dimensional bilayer photonic crystals.
//!
//! Four subcommands cover the workflow: `spectrum` sweeps transmissivity
//! and reflectivity to CSV, `dispersion` scans the Bloch dispersion
//! relation, `trends` runs a parameter family and reports gap statistics
//! as JSON, and `compare` checks the quantum solver against the classical
//! thin-film oracle. Every run is deterministic: the same configuration
//! produces byte-identical output files.

mod config;
mod csvout;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use pc1d::dispersion::{band_structure, DispersionPoint, DispersionVariant};
use pc1d::spectrum::{
    compare_quantum_classical, count_constant, count_nondecreasing, detect_gaps,
    mean_width_nonincreasing, omega_grid, primary_width_strictly_increasing, sweep_normalized,
    GapReport, GapSource, SpectrumPoint, TrendParameter, TrendSettings,
};

use config::{parse_config_text, RunConfig, Settings};

#[derive(Parser)]
#[command(
    name = "pc1d",
    version,
    about = "Transmission and band-structure calculator for 1-D bilayer photonic crystals",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep T and R over a frequency window and write a CSV spectrum.
    Spectrum(CommonArgs),
    /// Scan the Bloch dispersion relation and classify gap frequencies.
    Dispersion(CommonArgs),
    /// Vary one stack parameter over a family and report gap trends as JSON.
    Trends(TrendsArgs),
    /// Print the worst quantum-vs-classical mismatch; exit nonzero if ≥ 1e-8.
    Compare(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Flat `key = value` configuration file; flags override its values.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Refractive index of layer A.
    #[arg(long, value_name = "REAL")]
    n_a: Option<f64>,
    /// Refractive index of layer B.
    #[arg(long, value_name = "REAL")]
    n_b: Option<f64>,
    /// Thickness of layer A in nanometres.
    #[arg(long, value_name = "NM")]
    a_nm: Option<f64>,
    /// Thickness of layer B in nanometres.
    #[arg(long, value_name = "NM")]
    b_nm: Option<f64>,
    /// Number of bilayer periods.
    #[arg(long, value_name = "COUNT")]
    periods: Option<u32>,
    /// Window start: rad/s, or a multiple of ω₀ with an `x` suffix (default 0.3x).
    #[arg(long, value_name = "OMEGA")]
    omega_min: Option<config::OmegaSpec>,
    /// Window end: rad/s or an `x`-suffixed multiple of ω₀ (default 1.7x).
    #[arg(long, value_name = "OMEGA")]
    omega_max: Option<config::OmegaSpec>,
    /// Number of grid points across the window.
    #[arg(long, value_name = "COUNT")]
    points: Option<usize>,
    /// Dispersion-relation variant (`dispersion` subcommand only).
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,
    /// Normalization frequency as ν in THz (ω₀ = 2πν·10¹²); default: the
    /// stack's quarter-wave frequency. Affects only the ω/ω₀ axis.
    #[arg(long, value_name = "THZ")]
    omega0_thz: Option<f64>,
    /// Transmission level below which a sweep point counts as in a gap.
    #[arg(long, value_name = "T")]
    gap_threshold: Option<f64>,
    /// Minimum run of consecutive below-threshold points forming a gap.
    #[arg(long, value_name = "COUNT")]
    min_run: Option<usize>,
    /// Output file (default: stdout).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Also write an SVG plot to this path.
    #[arg(long, value_name = "PATH")]
    plot: Option<PathBuf>,
}

#[derive(Args)]
struct TrendsArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Which stack parameter the family varies.
    #[arg(long, value_enum, default_value = "thickness-a")]
    parameter: ParameterArg,
    /// Comma-separated family values (default: the studied family for the
    /// chosen parameter: 82.5,165,330 nm or 2.02,2.35,3.18).
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    values: Option<Vec<f64>>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VariantArg {
    Corrected,
    AsPrinted,
}

impl From<VariantArg> for DispersionVariant {
    fn from(arg: VariantArg) -> Self {
        match arg {
            VariantArg::Corrected => DispersionVariant::Corrected,
            VariantArg::AsPrinted => DispersionVariant::AsPrinted,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ParameterArg {
    ThicknessA,
    IndexNa,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Spectrum(common) => cmd_spectrum(&resolve(&common)?),
        Command::Dispersion(common) => cmd_dispersion(&resolve(&common)?),
        Command::Trends(args) => cmd_trends(&args),
        Command::Compare(common) => cmd_compare(&resolve(&common)?),
    }
}

/// Merges config-file values under flag values, without applying defaults.
fn merged_settings(common: &CommonArgs) -> Result<Settings> {
    let from_file = match &common.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading config file {}", path.display()))?;
            parse_config_text(&text).with_context(|| format!("config file {}", path.display()))?
        }
        None => Settings::default(),
    };
    let from_flags = Settings {
        n_a: common.n_a,
        n_b: common.n_b,
        a_nm: common.a_nm,
        b_nm: common.b_nm,
        periods: common.periods,
        omega_min: common.omega_min,
        omega_max: common.omega_max,
        points: common.points,
        variant: common.variant.map(Into::into),
        omega0_thz: common.omega0_thz,
        gap_threshold: common.gap_threshold,
        min_run: common.min_run,
    };
    Ok(from_file.overridden_by(&from_flags))
}

fn resolve(common: &CommonArgs) -> Result<RunConfig> {
    RunConfig::from_settings(merged_settings(common)?, common.out.clone(), common.plot.clone())
}

fn write_output(path: Option<&PathBuf>, contents: &str) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, contents)
            .with_context(|| format!("writing {}", path.display())),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(contents.as_bytes())
                .context("writing to stdout")
        }
    }
}

fn cmd_spectrum(config: &RunConfig) -> Result<ExitCode> {
    let stack = config.stack()?;
    let omega0 = config.omega0(&stack);
    let (lo, hi) = config.window(omega0)?;
    let points = sweep_normalized(&stack, lo, hi, config.points, omega0)?;
    let gaps = detect_gaps(&points, config.gap_threshold, config.min_run, GapSource::Transmission)?;

    write_output(config.output_path.as_ref(), &csvout::spectrum_csv(&points, &gaps))?;
    if let Some(path) = &config.plot_path {
        std::fs::write(path, spectrum_chart(&points, &gaps, omega0).render())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_dispersion(config: &RunConfig) -> Result<ExitCode> {
    let stack = config.stack()?;
    let omega0 = config.omega0(&stack);
    let (lo, hi) = config.window(omega0)?;
    let grid = omega_grid(lo, hi, config.points)?;
    let band = band_structure(&stack, &grid, config.variant)?;

    write_output(
        config.output_path.as_ref(),
        &csvout::dispersion_csv(&band, omega0, config.variant),
    )?;
    if let Some(path) = &config.plot_path {
        std::fs::write(path, dispersion_chart(&band, omega0).render())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_trends(args: &TrendsArgs) -> Result<ExitCode> {
    let config = resolve(&args.common)?;
    let merged = merged_settings(&args.common)?;
    let stack = config.stack()?;
    let omega0 = config.omega0(&stack);
    let omega_qw = stack.quarter_wave_omega();

    let parameter = match args.parameter {
        ParameterArg::ThicknessA => TrendParameter::ThicknessA,
        ParameterArg::IndexNa => TrendParameter::IndexNa,
    };
    let values = args.values.clone().unwrap_or_else(|| match parameter {
        TrendParameter::ThicknessA => vec![82.5, 165.0, 330.0],
        TrendParameter::IndexNa => vec![2.02, 2.35, 3.18],
    });

    // Trend studies default to their own documented window; explicit
    // window/grid/detector flags still win.
    let mut settings = TrendSettings::for_base(&stack);
    if let Some(spec) = merged.omega_min {
        settings.omega_min = spec.resolve(omega0);
    }
    if let Some(spec) = merged.omega_max {
        settings.omega_max = spec.resolve(omega0);
    }
    if let Some(points) = merged.points {
        settings.points = points;
    }
    if let Some(threshold) = merged.gap_threshold {
        settings.threshold = threshold;
    }
    if let Some(min_run) = merged.min_run {
        settings.min_run = min_run;
    }

    let entries = pc1d::spectrum::trend_study_with(&stack, parameter, &values, &settings)?;

    let entries_json: Vec<serde_json::Value> = entries
        .iter()
        .map(|(value, report)| {
            let gaps: Vec<serde_json::Value> = report
                .gaps
                .iter()
                .map(|gap| {
                    serde_json::json!({
                        "omega_low_rad_s": gap.omega_low,
                        "omega_high_rad_s": gap.omega_high,
                        "width_rad_s": gap.width(),
                        "omega_low_over_omega0": gap.omega_low / omega0,
                        "omega_high_over_omega0": gap.omega_high / omega0,
                    })
                })
                .collect();
            serde_json::json!({
                "value": value,
                "gap_count": report.count,
                "mean_width_rad_s": report.mean_width,
                "mean_width_over_omega0": report.mean_width / omega0,
                "gaps": gaps,
            })
        })
        .collect();

    let verdicts = match parameter {
        TrendParameter::ThicknessA => serde_json::json!({
            "count_nondecreasing": count_nondecreasing(&entries),
            "mean_width_nonincreasing": mean_width_nonincreasing(&entries),
        }),
        TrendParameter::IndexNa => serde_json::json!({
            "primary_gap_width_increasing": primary_width_strictly_increasing(&entries, omega_qw),
            "count_constant": count_constant(&entries),
        }),
    };

    let document = serde_json::json!({
        "parameter": match parameter {
            TrendParameter::ThicknessA => "thickness_a",
            TrendParameter::IndexNa => "index_na",
        },
        "omega0_rad_s": omega0,
        "window": {
            "omega_min_rad_s": settings.omega_min,
            "omega_max_rad_s": settings.omega_max,
            "points": settings.points,
            "gap_source": settings.source.name(),
        },
        "entries": entries_json,
        "verdicts": verdicts,
    });
    let mut text = serde_json::to_string_pretty(&document).context("serializing trends report")?;
    text.push('\n');
    write_output(config.output_path.as_ref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_compare(config: &RunConfig) -> Result<ExitCode> {
    let stack = config.stack()?;
    let omega0 = config.omega0(&stack);
    let (lo, hi) = config.window(omega0)?;
    let points = sweep_normalized(&stack, lo, hi, config.points, omega0)?;
    let (max_diff, at_omega) = compare_quantum_classical(&points)?;

    println!(
        "max |T_quantum - T_classical| = {max_diff:e} at omega = {at_omega} rad/s ({} points)",
        points.len()
    );
    if max_diff < 1e-8 {
        println!("quantum and classical routes agree within 1e-8");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("MISMATCH: quantum and classical routes differ by 1e-8 or more");
        Ok(ExitCode::FAILURE)
    }
}

fn spectrum_chart(points: &[SpectrumPoint], gaps: &GapReport, omega0: f64) -> svg::Chart {
    let x_range = (
        points.first().map_or(0.0, |p| p.omega_normalized),
        points.last().map_or(1.0, |p| p.omega_normalized),
    );
    svg::Chart {
        x_label: "omega / omega0".into(),
        y_label: "T".into(),
        x_range,
        y_range: (0.0, 1.02),
        shaded: gaps
            .gaps
            .iter()
            .map(|gap| (gap.omega_low / omega0, gap.omega_high / omega0))
            .collect(),
        series: vec![
            svg::Series {
                label: "T quantum".into(),
                color: "#1f6fbf",
                dashed: false,
                points: points.iter().map(|p| (p.omega_normalized, p.t_quantum)).collect(),
            },
            svg::Series {
                label: "T classical oracle".into(),
                color: "#c23b22",
                dashed: true,
                points: points.iter().map(|p| (p.omega_normalized, p.t_classical)).collect(),
            },
        ],
    }
}

fn dispersion_chart(band: &[DispersionPoint], omega0: f64) -> svg::Chart {
    let x_range = (
        band.first().map_or(0.0, |p| p.omega / omega0),
        band.last().map_or(1.0, |p| p.omega / omega0),
    );

    // Contiguous in-gap runs become shaded frequency bands.
    let mut shaded: Vec<(f64, f64)> = Vec::new();
    let mut open: Option<(f64, f64)> = None;
    for point in band {
        let x = point.omega / omega0;
        match (&mut open, point.in_gap) {
            (None, true) => open = Some((x, x)),
            (Some((_, hi)), true) => *hi = x,
            (Some(run), false) => {
                shaded.push(*run);
                open = None;
            }
            (None, false) => {}
        }
    }
    if let Some(run) = open {
        shaded.push(run);
    }

    svg::Chart {
        x_label: "omega / omega0".into(),
        y_label: "k·cell / pi".into(),
        x_range,
        y_range: (0.0, 1.0),
        shaded,
        series: vec![svg::Series {
            label: "Bloch phase".into(),
            color: "#1f6fbf",
            dashed: false,
            points: band
                .iter()
                .map(|p| (p.omega / omega0, p.bloch_phase() / std::f64::consts::PI))
                .collect(),
        }],
    }
}
