use std::f64::consts::TAU;

use proptest::prelude::*;

use channel_static::geometry::{distance, wavelength};
use channel_static::metrics::{excursion_deg, span_db, unwrap};
use channel_static::motion::{antenna_position, platform_displacement, static_budget_s};
use channel_static::propagation::{channel_gain, enumerate_paths};
use channel_static::scenario::{make_office, run_scenario, DEFAULT_ROOM_EXTENT_M};
use channel_static::*;

fn point() -> impl Strategy<Value = Vec3> {
    (-5.0..5.0f64, -5.0..5.0f64, -3.0..3.0f64).prop_map(|(x, y, z)| Vec3::new(x, y, z))
}

fn scatterer() -> impl Strategy<Value = Scatterer> {
    (point(), 0.0..1.0f64, 0.0..TAU).prop_map(|(p, m, ph)| Scatterer::new(p, ComplexGain::from_polar(m, ph)).unwrap())
}

fn environment() -> impl Strategy<Value = Environment> {
    (prop::collection::vec(scatterer(), 0..12), any::<bool>(), 0.1..10.0f64).prop_map(|(scatterers, los_enabled, reference_gain)| {
        Environment {
            scatterers,
            los_enabled,
            reference_gain,
        }
    })
}

proptest! {
    #[test]
    fn distance_is_a_metric(a in point(), b in point()) {
        prop_assert_eq!(distance(a, b), distance(b, a));
        prop_assert!(distance(a, b) >= 0.0);
        prop_assert_eq!(distance(a, b) == 0.0, a == b);
    }

    #[test]
    fn wavelength_decreases_with_frequency(f in 1e6..1e11f64, k in 1.0001..10.0f64) {
        prop_assert!(wavelength(f * k).unwrap() < wavelength(f).unwrap());
    }

    #[test]
    fn gain_is_reciprocal(env in environment(), a in point(), b in point()) {
        let c = Carrier::ism_2g45();
        let ab = channel_gain(&env, a, b, &c).unwrap();
        let ba = channel_gain(&env, b, a, &c).unwrap();
        prop_assert!((ab.re - ba.re).abs() <= 1e-12 && (ab.im - ba.im).abs() <= 1e-12);
    }

    #[test]
    fn gain_obeys_triangle_bound(env in environment(), a in point(), b in point()) {
        let c = Carrier::ism_2g45();
        let h = channel_gain(&env, a, b, &c).unwrap();
        let bound: f64 = enumerate_paths(&env, a, b).unwrap().iter().map(|p| p.coefficient.norm()).sum();
        prop_assert!(h.norm() <= bound * (1.0 + 1e-12));
    }

    #[test]
    fn los_phase_repeats_every_wavelength(d in 0.5..20.0f64, k in 1u32..50) {
        let c = Carrier::ism_2g45();
        let env = Environment::free_space();
        let near = channel_gain(&env, Vec3::ZERO, Vec3::new(d, 0.0, 0.0), &c).unwrap();
        let far = channel_gain(&env, Vec3::ZERO, Vec3::new(d + k as f64 * c.wavelength_m(), 0.0, 0.0), &c).unwrap();
        let diff = (near.arg() - far.arg()).rem_euclid(TAU);
        prop_assert!(diff.min(TAU - diff) < 1e-9);
    }

    #[test]
    fn gain_is_deterministic(env in environment(), a in point(), b in point()) {
        let c = Carrier::ism_2g45();
        let x = channel_gain(&env, a, b, &c).unwrap();
        let y = channel_gain(&env, a, b, &c).unwrap();
        prop_assert_eq!(x.re.to_bits(), y.re.to_bits());
        prop_assert_eq!(x.im.to_bits(), y.im.to_bits());
    }

    #[test]
    fn unwrap_rewraps_to_input(phases in prop::collection::vec(-std::f64::consts::PI..std::f64::consts::PI, 1..200)) {
        let u = unwrap(&phases);
        prop_assert_eq!(u[0], phases[0]);
        for (w, p) in u.iter().zip(&phases) {
            let d = (w - p).rem_euclid(TAU);
            prop_assert!(d.min(TAU - d) < 1e-12);
        }
        for pair in u.windows(2) {
            let step = pair[1] - pair[0];
            prop_assert!(step > -std::f64::consts::PI - 1e-12 && step <= std::f64::consts::PI + 1e-12);
        }
    }

    #[test]
    fn metrics_ignore_global_scaling(
        gains in prop::collection::vec((0.01..2.0f64, -3.0..3.0f64), 2..60),
        scale in 0.01..100.0f64,
        rot in 0.0..TAU,
    ) {
        let hs: Vec<ComplexGain> = gains.iter().map(|&(m, p)| ComplexGain::from_polar(m, p)).collect();
        let k = ComplexGain::from_polar(scale, rot);
        let a = span_db(hs.iter().copied());
        let b = span_db(hs.iter().map(|h| h * k));
        prop_assert!((a - b).abs() < 1e-9);

        // rotation only: unwrapped excursion unchanged as long as no step is near pi
        let rotated: Vec<f64> = hs.iter().map(|h| (h * ComplexGain::from_polar(1.0, rot)).arg()).collect();
        let plain: Vec<f64> = hs.iter().map(|h| h.arg()).collect();
        let steps_ok = plain.windows(2).all(|w| {
            let d = (w[1] - w[0]).rem_euclid(TAU);
            d.min(TAU - d) < 3.0
        });
        if steps_ok {
            prop_assert!((excursion_deg(&unwrap(&plain)) - excursion_deg(&unwrap(&rotated))).abs() < 1e-6);
        }
    }

    #[test]
    fn budget_is_monotone(len in 0.0..10.0f64, extra in 0.001..5.0f64, v in 0.1..100.0f64, dv in 0.1..50.0f64) {
        prop_assert!(static_budget_s(len + extra, v).unwrap() > static_budget_s(len, v).unwrap());
        if len > 0.0 {
            prop_assert!(static_budget_s(len, v + dv).unwrap() < static_budget_s(len, v).unwrap());
        }
    }

    #[test]
    fn fixed_follows_platform_and_compensate_holds(step in 0usize..=300, anchor in point()) {
        let c = Carrier::ism_2g45();
        let t = SteppedTrajectory::default();
        let rail = Rail::new(1.0).unwrap();
        let d = platform_displacement(step, &t, &c).unwrap();
        prop_assert_eq!(antenna_position(step, &t, CompensationMode::Fixed, &rail, anchor, &c).unwrap(), anchor + d);
        prop_assert_eq!(antenna_position(step, &t, CompensationMode::Compensate, &rail, anchor, &c).unwrap(), anchor);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn compensation_is_exact_in_any_office(seed in any::<u64>(), count in 1usize..40) {
        let mut s = Scenario::new(Environment::free_space());
        s.environment = make_office(seed, count, DEFAULT_ROOM_EXTENT_M, s.link_center()).unwrap();
        let t = run_scenario(&s).unwrap();
        let first = t.samples[0].h;
        prop_assert!(t.samples.iter().all(|x| x.h == first));
        let regenerated = make_office(seed, count, DEFAULT_ROOM_EXTENT_M, s.link_center()).unwrap();
        prop_assert_eq!(regenerated, s.environment);
    }
}
