//! Drive a run from configuration text and write the CSV and JSON outputs.
//!
//! cargo run --example config_to_csv

use channel_static::cli::{cmd_triplet, RunOptions};
use channel_static::config::ScenarioConfig;

const CONFIG: &str = "
[environment]
kind = office
seed = 7

[trajectory]
total_lambda = 3

[parasitic]
reflectivity = 0.05, 0
";

fn main() -> channel_static::Result<()> {
    let cfg = ScenarioConfig::parse(CONFIG)?;
    println!("canonical form:\n{}", cfg.to_text());

    let dir = std::env::temp_dir().join("channel-static-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("scenario.conf");
    std::fs::write(&path, CONFIG)?;
    let report = cmd_triplet(&path, &dir.join("triplet"), &RunOptions::default())?;
    println!(
        "fixed {:.2} dB / compensated {:.2} dB; outputs in {}",
        report.fixed.amplitude_span_db,
        report.compensated.amplitude_span_db,
        dir.join("triplet").display()
    );
    Ok(())
}
