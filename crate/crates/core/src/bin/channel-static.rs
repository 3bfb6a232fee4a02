use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use channel_static::cli::{cmd_budget, cmd_gen_env, cmd_run, cmd_triplet, RunOptions, SpeedUnit};

#[derive(Parser)]
#[command(name = "channel-static", version, about = "Channel static antenna simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario; writes trace.csv and summary.json
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed_override: Option<u64>,
        #[arg(long)]
        format_version: Option<u32>,
    },
    /// Run fixed, compensated and stationary; writes three CSVs and comparison.json
    Triplet {
        #[arg(long)]
        config: PathBuf,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed_override: Option<u64>,
        #[arg(long)]
        format_version: Option<u32>,
    },
    /// Print how long a rail can hold the channel at a platform speed
    Budget {
        /// Usable antenna travel in meters
        #[arg(allow_negative_numbers = true)]
        length_m: f64,
        /// Platform speed
        #[arg(allow_negative_numbers = true)]
        speed: f64,
        /// m/s or km/h
        #[arg(long, default_value = "m/s")]
        unit: String,
    },
    /// Write a generated environment as an explicit [environment] section
    GenEnv {
        #[arg(long)]
        config: PathBuf,
        /// Output file
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed_override: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run {
            config,
            out,
            seed_override,
            format_version,
        } => cmd_run(&config, &out, &RunOptions { seed_override, format_version }).map(|r| {
            println!(
                "{}: span {:.2} dB, phase excursion {:.2} deg, {} samples -> {}",
                r.summary.mode,
                r.summary.amplitude_span_db,
                r.summary.phase_excursion_deg,
                r.summary.sample_count,
                out.display()
            )
        }),
        Command::Triplet {
            config,
            out,
            seed_override,
            format_version,
        } => cmd_triplet(&config, &out, &RunOptions { seed_override, format_version }).map(|r| {
            for s in [r.fixed, r.compensated, r.stationary] {
                println!(
                    "{:>10}: span {:8.3} dB  phase {:9.3} deg  doppler {:.3} Hz",
                    s.mode.as_str(),
                    s.amplitude_span_db,
                    s.phase_excursion_deg,
                    s.max_abs_doppler_hz
                );
            }
        }),
        Command::Budget { length_m, speed, unit } => unit
            .parse::<SpeedUnit>()
            .and_then(|unit| cmd_budget(length_m, speed, unit, &mut std::io::stdout().lock()))
            .map(|_| ()),
        Command::GenEnv {
            config,
            out,
            seed_override,
        } => cmd_gen_env(&config, &out, seed_override).map(|_| ()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
