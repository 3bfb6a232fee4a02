//! A rail shorter than the platform's travel: the channel is held until the
//! antenna reaches the end stop, then it starts to fade like a fixed antenna.
//!
//! cargo run --example rail_saturation

use channel_static::metrics::span_db;
use channel_static::scenario::{office_scenario, run_scenario};
use channel_static::Rail;

fn main() -> channel_static::Result<()> {
    for rail_m in [0.0, 0.2, 0.4, 0.6, 1.0] {
        let mut s = office_scenario(42);
        s.rail = Rail::new(rail_m)?;
        let t = run_scenario(&s)?;
        let held = t.samples.iter().take_while(|x| x.tx_position == s.tx_anchor).count();
        let held_lambda = t.trajectory.travel_lambda(held - 1);
        println!(
            "rail {rail_m:.1} m: held for {held_lambda:5.2} λ of travel, overall span {:6.2} dB",
            span_db(t.gains())
        );
    }
    Ok(())
}
