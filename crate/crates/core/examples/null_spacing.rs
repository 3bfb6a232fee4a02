//! Two rays from opposite directions along the motion produce a null every
//! half wavelength of antenna travel.
//!
//! cargo run --example null_spacing

use channel_static::scenario::run_scenario;
use channel_static::{CompensationMode, ComplexGain, Environment, Scatterer, Scenario, Vec3};

fn main() -> channel_static::Result<()> {
    let env = Environment {
        scatterers: vec![
            Scatterer::new(Vec3::new(1.0, 0.0, 0.0), ComplexGain::new(0.8, 0.0))?,
            Scatterer::new(Vec3::new(-1.0, 0.0, 0.0), ComplexGain::new(0.8, 0.0))?,
        ],
        los_enabled: false,
        reference_gain: 1.0,
    };
    let mut s = Scenario::new(env).with_mode(CompensationMode::Fixed);
    s.rx_position = Vec3::new(0.0, 5.0, 0.0);
    let trace = run_scenario(&s)?;

    let mags: Vec<f64> = trace.gains().map(|h| h.norm()).collect();
    let nulls: Vec<f64> = (1..mags.len() - 1)
        .filter(|&i| mags[i] < mags[i - 1] && mags[i] <= mags[i + 1])
        .map(|i| trace.trajectory.travel_lambda(i))
        .collect();
    println!("{} nulls at travel (λ): {:?}", nulls.len(), nulls);
    let gaps: Vec<f64> = nulls.windows(2).map(|w| w[1] - w[0]).collect();
    println!("spacing (λ): {gaps:.2?}");
    Ok(())
}
