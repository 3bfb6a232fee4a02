//! Small-scale fading in a cluttered room, with and without counter-movement.
//!
//! cargo run --example office_fading [seed]

use channel_static::metrics::{amplitude_span_db, phase_excursion_deg};
use channel_static::scenario::{office_scenario, run_triplet};

fn bar(db: f64) -> String {
    let len = ((db + 30.0).clamp(0.0, 30.0)) as usize;
    "#".repeat(len)
}

fn main() -> channel_static::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let trip = run_triplet(&office_scenario(seed))?;

    println!("office seed {seed}: 30 scatterers, 6 λ of platform travel\n");
    println!("travel   fixed |h| (dB)");
    for s in trip.fixed.samples.iter().step_by(10) {
        let db = 20.0 * s.h.norm().log10();
        println!("{:5.2}λ {db:7.2} {}", trip.fixed.trajectory.travel_lambda(s.step_index), bar(db));
    }

    println!();
    for (name, t) in [("fixed", &trip.fixed), ("compensated", &trip.compensated), ("stationary", &trip.stationary)] {
        println!(
            "{name:>12}: span {:6.2} dB, phase excursion {:8.2} deg",
            amplitude_span_db(t),
            phase_excursion_deg(t)
        );
    }
    Ok(())
}
