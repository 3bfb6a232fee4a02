//! How long a rail of a given length can hold the channel.
//!
//! cargo run --example hold_time_budget

use channel_static::cli::{cmd_budget, SpeedUnit};
use channel_static::motion::{static_budget_s, KMH_TO_MPS};

fn main() -> channel_static::Result<()> {
    let mut out = std::io::stdout().lock();
    println!("-- car roof, 4 m at 42 m/s");
    cmd_budget(4.0, 42.0, SpeedUnit::MetersPerSecond, &mut out)?;
    println!("-- phone, 1 cm at 20 km/h");
    cmd_budget(0.01, 20.0, SpeedUnit::KilometersPerHour, &mut out)?;

    // An LTE slot is 0.5 ms.
    println!("\nrail length needed to cover one 0.5 ms slot:");
    for kmh in [5.0, 50.0, 120.0, 300.0] {
        let v = kmh * KMH_TO_MPS;
        let length = 0.5e-3 * v;
        assert!((static_budget_s(length, v)? - 0.5e-3).abs() < 1e-12);
        println!("{kmh:>6.0} km/h -> {:.2} mm", length * 1e3);
    }
    Ok(())
}
