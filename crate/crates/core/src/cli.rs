//! Entry points behind the `channel-static` binary.
//!
//! Each command returns a [`Result`]; the binary maps errors to exit status via
//! [`Error::exit_code`].

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::config::{environment_fragment, ScenarioConfig};
use crate::error::{Error, Result};
use crate::io::{to_json, trace_to_csv, write_whole_file, ComparisonReport, RunReport, FORMAT_VERSION};
use crate::metrics::summarize;
use crate::motion::{static_budget_s, KMH_TO_MPS};
use crate::scenario::{run_scenario, run_triplet};

/// Options shared by the commands that read a configuration file.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub seed_override: Option<u64>,
    pub format_version: Option<u32>,
}

impl RunOptions {
    fn check_format(&self) -> Result<()> {
        match self.format_version {
            None | Some(FORMAT_VERSION) => Ok(()),
            Some(v) => Err(Error::Usage(format!(
                "output format version {v} is not supported (this build writes version {FORMAT_VERSION})"
            ))),
        }
    }
}

pub fn load_config(path: &Path, seed_override: Option<u64>) -> Result<ScenarioConfig> {
    let text = fs::read_to_string(path)?;
    let cfg = ScenarioConfig::parse(&text)?;
    match seed_override {
        Some(seed) => cfg.with_seed(seed),
        None => Ok(cfg),
    }
}

/// Runs one scenario and writes `trace.csv` and `summary.json` into `out_dir`.
pub fn cmd_run(config_path: &Path, out_dir: &Path, opts: &RunOptions) -> Result<RunReport> {
    opts.check_format()?;
    let cfg = load_config(config_path, opts.seed_override)?;
    let scenario = cfg.to_scenario()?;
    let trace = run_scenario(&scenario)?;
    let report = RunReport {
        format_version: FORMAT_VERSION,
        summary: summarize(&trace, &scenario)?,
        config: cfg.to_text(),
    };
    fs::create_dir_all(out_dir)?;
    write_whole_file(&out_dir.join("trace.csv"), &trace_to_csv(&trace))?;
    write_whole_file(&out_dir.join("summary.json"), &to_json(&report))?;
    Ok(report)
}

/// Runs the fixed / compensated / stationary triplet and writes `fixed.csv`,
/// `compensated.csv`, `stationary.csv` and `comparison.json` into `out_dir`.
pub fn cmd_triplet(config_path: &Path, out_dir: &Path, opts: &RunOptions) -> Result<ComparisonReport> {
    opts.check_format()?;
    let cfg = load_config(config_path, opts.seed_override)?;
    let scenario = cfg.to_scenario()?;
    let trip = run_triplet(&scenario)?;
    let report = ComparisonReport {
        format_version: FORMAT_VERSION,
        fixed: summarize(&trip.fixed, &scenario)?,
        compensated: summarize(&trip.compensated, &scenario)?,
        stationary: summarize(&trip.stationary, &scenario)?,
        config: cfg.to_text(),
    };
    fs::create_dir_all(out_dir)?;
    for (name, trace) in ["fixed", "compensated", "stationary"].iter().zip(trip.traces()) {
        write_whole_file(&out_dir.join(format!("{name}.csv")), &trace_to_csv(trace))?;
    }
    write_whole_file(&out_dir.join("comparison.json"), &to_json(&report))?;
    Ok(report)
}

/// Writes the generated environment of a configuration as an explicit
/// `[environment]` section.
pub fn cmd_gen_env(config_path: &Path, out_path: &Path, seed_override: Option<u64>) -> Result<String> {
    let cfg = load_config(config_path, seed_override)?;
    let fragment = environment_fragment(&cfg.build_environment()?);
    write_whole_file(out_path, &fragment)?;
    Ok(fragment)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpeedUnit {
    #[default]
    MetersPerSecond,
    KilometersPerHour,
}

impl SpeedUnit {
    pub fn to_m_per_s(self, speed: f64) -> f64 {
        match self {
            SpeedUnit::MetersPerSecond => speed,
            SpeedUnit::KilometersPerHour => speed * KMH_TO_MPS,
        }
    }
}

impl FromStr for SpeedUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m/s" | "mps" => Ok(SpeedUnit::MetersPerSecond),
            "km/h" | "kmh" => Ok(SpeedUnit::KilometersPerHour),
            other => Err(Error::Usage(format!("unknown speed unit `{other}` (expected m/s or km/h)"))),
        }
    }
}

impl fmt::Display for SpeedUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpeedUnit::MetersPerSecond => "m/s",
            SpeedUnit::KilometersPerHour => "km/h",
        })
    }
}

/// 1 cm of rail at 20 km/h. Quoted elsewhere as 1.6 ms, which does not follow
/// from length / speed.
fn is_quoted_phone_case(length_m: f64, speed_m_per_s: f64) -> bool {
    (length_m - 0.01).abs() < 1e-12 && (speed_m_per_s - 20.0 * KMH_TO_MPS).abs() < 1e-3
}

/// Prints how long a rail can hold the channel at a given platform speed and
/// returns the budget in seconds.
pub fn cmd_budget(length_m: f64, speed: f64, unit: SpeedUnit, out: &mut impl Write) -> Result<f64> {
    if !(speed.is_finite() && speed > 0.0) {
        return Err(Error::Usage(format!("speed must be positive, got {speed}")));
    }
    if !(length_m.is_finite() && length_m >= 0.0) {
        return Err(Error::Usage(format!("length must be non-negative, got {length_m}")));
    }
    let speed_m_per_s = unit.to_m_per_s(speed);
    let budget = static_budget_s(length_m, speed_m_per_s)?;
    writeln!(out, "usable length: {length_m} m")?;
    writeln!(out, "speed: {speed_m_per_s:.4} m/s ({speed} {unit})")?;
    writeln!(out, "budget: {:.1} ms", budget * 1e3)?;
    if is_quoted_phone_case(length_m, speed_m_per_s) {
        writeln!(
            out,
            "note: 1 cm at 20 km/h is sometimes quoted as 1.6 ms; length / speed gives {:.1} ms",
            budget * 1e3
        )?;
    }
    Ok(budget)
}

/// Output locations for a run, for callers that want to print them.
pub fn run_outputs(out_dir: &Path) -> [PathBuf; 2] {
    [out_dir.join("trace.csv"), out_dir.join("summary.json")]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget_text(length: f64, speed: f64, unit: SpeedUnit) -> String {
        let mut buf = Vec::new();
        cmd_budget(length, speed, unit, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn budget_lines() {
        assert!(budget_text(4.0, 150.0, SpeedUnit::KilometersPerHour).contains("budget: 96.0 ms"));
        assert!(budget_text(4.0, 42.0, SpeedUnit::MetersPerSecond).contains("budget: 95.2 ms"));
        let phone = budget_text(0.01, 20.0, SpeedUnit::KilometersPerHour);
        assert!(phone.contains("budget: 1.8 ms"));
        assert!(phone.contains("1.6 ms"));
        assert!(!budget_text(4.0, 42.0, SpeedUnit::MetersPerSecond).contains("note"));
        assert!(budget_text(0.0, 3.0, SpeedUnit::MetersPerSecond).contains("budget: 0.0 ms"));
    }

    #[test]
    fn budget_usage_errors() {
        let mut sink = Vec::new();
        for speed in [0.0, -1.0] {
            let e = cmd_budget(1.0, speed, SpeedUnit::MetersPerSecond, &mut sink).unwrap_err();
            assert_eq!(e.exit_code(), 2);
        }
        assert_eq!("furlongs".parse::<SpeedUnit>().unwrap_err().exit_code(), 2);
        assert_eq!("km/h".parse::<SpeedUnit>().unwrap(), SpeedUnit::KilometersPerHour);
    }
}
