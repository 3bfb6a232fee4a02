//! Monte Carlo over office layouts, one thread per block of seeds.
//!
//! cargo run --release --example seed_sweep [seeds]

use channel_static::metrics::amplitude_span_db;
use channel_static::scenario::{office_scenario, run_triplet};
use channel_static::Parasitic;

fn main() {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    let threads = std::thread::available_parallelism().map_or(4, |p| p.get()) as u64;

    let mut rows: Vec<(f64, f64)> = std::thread::scope(|scope| {
        (0..threads)
            .map(|t| {
                scope.spawn(move || {
                    (1..=n)
                        .filter(|seed| seed % threads == t)
                        .map(|seed| {
                            let mut s = office_scenario(seed);
                            s.parasitic = Some(Parasitic::default());
                            let trip = run_triplet(&s).expect("office scenarios are valid");
                            (amplitude_span_db(&trip.fixed), amplitude_span_db(&trip.compensated))
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flat_map(|h| h.join().unwrap())
            .collect()
    });

    let pct = |v: &mut Vec<f64>, q: f64| {
        v.sort_by(|a, b| a.total_cmp(b));
        v[((v.len() - 1) as f64 * q).round() as usize]
    };
    let mut fixed: Vec<f64> = rows.iter().map(|r| r.0).collect();
    let mut comp: Vec<f64> = rows.drain(..).map(|r| r.1).collect();
    println!("{n} seeds, default parasitic reflector");
    println!("fixed span       p10 {:6.2}  median {:6.2}  p90 {:6.2} dB", pct(&mut fixed, 0.1), pct(&mut fixed, 0.5), pct(&mut fixed, 0.9));
    println!("compensated span p10 {:6.2}  median {:6.2}  p90 {:6.2} dB", pct(&mut comp, 0.1), pct(&mut comp, 0.5), pct(&mut comp, 0.9));
}
