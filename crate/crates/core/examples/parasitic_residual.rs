//! Residual channel change caused by hardware that moves with the platform.
//!
//! The counter-moving antenna stays put, but a reflector fixed to the platform
//! (0.15 m below the antenna) does not. Sweeping its strength shows how the
//! residual amplitude and phase variation grow.
//!
//! cargo run --example parasitic_residual

use channel_static::metrics::{amplitude_span_db, phase_excursion_deg};
use channel_static::scenario::{office_scenario, run_scenario};
use channel_static::{ComplexGain, Parasitic};

fn main() -> channel_static::Result<()> {
    println!("{:>8} {:>12} {:>14}", "level dB", "span dB", "phase deg");
    for level_db in [-40.0, -30.0, -20.0, -10.0] {
        let mut s = office_scenario(42);
        s.parasitic = Some(Parasitic {
            reflectivity: ComplexGain::new(10f64.powf(level_db / 20.0), 0.0),
            ..Parasitic::default()
        });
        let t = run_scenario(&s)?;
        println!("{level_db:>8.0} {:>12.3} {:>14.3}", amplitude_span_db(&t), phase_excursion_deg(&t));
    }
    Ok(())
}
