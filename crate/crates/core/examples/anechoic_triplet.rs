//! The three-measurement protocol in a nearly reflection-free room.
//!
//! A line-of-sight link with four weak (-30 dB) residual reflections. The fixed
//! antenna's amplitude barely moves but its phase turns through six full cycles;
//! the counter-moving antenna holds both.
//!
//! cargo run --example anechoic_triplet

use channel_static::metrics::summarize;
use channel_static::scenario::{anechoic_scenario, run_triplet};

fn main() -> channel_static::Result<()> {
    let scenario = anechoic_scenario(1);
    let trip = run_triplet(&scenario)?;

    println!("{:>12} {:>10} {:>12}", "mode", "span dB", "phase deg");
    for trace in trip.traces() {
        let s = summarize(trace, &scenario)?;
        println!("{:>12} {:>10.3} {:>12.2}", s.mode.as_str(), s.amplitude_span_db, s.phase_excursion_deg);
    }

    println!("\ntravel  |h| fixed dB  |h| comp dB");
    for (f, c) in trip.fixed.samples.iter().zip(&trip.compensated.samples).step_by(25) {
        let travel = trip.fixed.trajectory.travel_lambda(f.step_index);
        println!("{travel:5.2}λ  {:>11.3}  {:>10.3}", 20.0 * f.h.norm().log10(), 20.0 * c.h.norm().log10());
    }
    Ok(())
}
