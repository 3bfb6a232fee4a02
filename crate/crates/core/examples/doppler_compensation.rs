//! Per-path Doppler shifts of a moving antenna, and what the counter-movement
//! leaves of them.
//!
//! cargo run --example doppler_compensation

use channel_static::metrics::summarize;
use channel_static::propagation::path_doppler;
use channel_static::scenario::{office_scenario, run_scenario};
use channel_static::{CompensationMode, SteppedTrajectory, Vec3};

fn main() -> channel_static::Result<()> {
    let mut s = office_scenario(5);
    // car speed along the link
    s.trajectory = SteppedTrajectory::new(Vec3::new(1.0, 0.0, 0.0), 0.02, 0.2, 6.0, 42.0)?;
    let v = s.trajectory.direction() * s.trajectory.speed_m_per_s();

    let shifts = path_doppler(&s.environment, s.tx_anchor, s.rx_position, v, &s.carrier)?;
    println!("antenna rigidly mounted, 42 m/s, 2.45 GHz");
    println!("  line of sight: {:+8.2} Hz", shifts[0]);
    let spread = shifts.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b)) - shifts.iter().fold(f64::INFINITY, |a, &b| a.min(b));
    println!("  {} paths, Doppler spread {spread:.2} Hz", shifts.len());

    for mode in [CompensationMode::Fixed, CompensationMode::Compensate] {
        let sc = s.with_mode(mode);
        let summary = summarize(&run_scenario(&sc)?, &sc)?;
        println!("{mode:>10}: max |LOS Doppler| while moving = {:.3} Hz", summary.max_abs_doppler_hz);
    }
    Ok(())
}
