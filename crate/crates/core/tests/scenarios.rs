use channel_static::metrics::{amplitude_span_db, summarize};
use channel_static::scenario::{anechoic_scenario, make_anechoic, office_scenario, run_scenario, run_triplet};
use channel_static::*;

fn interior_minima(values: &[f64]) -> usize {
    (1..values.len() - 1)
        .filter(|&i| values[i] < values[i - 1] && values[i] <= values[i + 1])
        .count()
}

#[test]
fn fixed_two_path_trace_has_twelve_nulls() {
    let env = Environment {
        scatterers: vec![
            Scatterer::new(Vec3::new(1.0, 0.0, 0.0), ComplexGain::new(0.8, 0.0)).unwrap(),
            Scatterer::new(Vec3::new(-1.0, 0.0, 0.0), ComplexGain::new(0.8, 0.0)).unwrap(),
        ],
        los_enabled: false,
        reference_gain: 1.0,
    };
    let mut s = Scenario::new(env).with_mode(CompensationMode::Fixed);
    s.rx_position = Vec3::new(0.0, 5.0, 0.0);
    let t = run_scenario(&s).unwrap();
    let mags: Vec<f64> = t.gains().map(|h| h.norm()).collect();
    assert_eq!(interior_minima(&mags), 12);
}

#[test]
fn anechoic_triplet_has_equal_lengths() {
    let trip = run_triplet(&anechoic_scenario(3)).unwrap();
    let lens = trip.traces().map(|t| t.len());
    assert_eq!(lens, [301, 301, 301]);
}

#[test]
fn office_fixed_span_exceeds_compensated() {
    for seed in [1, 2, 3] {
        let trip = run_triplet(&office_scenario(seed)).unwrap();
        assert!(amplitude_span_db(&trip.fixed) > amplitude_span_db(&trip.compensated));
    }
}

#[test]
fn parasitic_leaves_a_residual() {
    let mut s = office_scenario(8);
    s.parasitic = Some(Parasitic::default());
    let trip = run_triplet(&s).unwrap();
    assert!(amplitude_span_db(&trip.compensated) > 0.0);
    // nothing moves in stationary mode, parasitic included
    assert_eq!(amplitude_span_db(&trip.stationary), 0.0);
}

#[test]
fn pure_los_anechoic_compensated_equals_stationary() {
    let mut s = Scenario::new(make_anechoic(0, 0, -30.0, Vec3::new(1.0, 0.0, 0.0)).unwrap());
    s.parasitic = None;
    let trip = run_triplet(&s).unwrap();
    let a = summarize(&trip.compensated, &s).unwrap();
    let b = summarize(&trip.stationary, &s).unwrap();
    assert_eq!(
        (a.amplitude_span_db, a.phase_excursion_deg, a.max_abs_doppler_hz),
        (b.amplitude_span_db, b.phase_excursion_deg, b.max_abs_doppler_hz)
    );
    let samples_equal = trip
        .compensated
        .samples
        .iter()
        .zip(&trip.stationary.samples)
        .all(|(x, y)| x.h == y.h && x.tx_position == y.tx_position);
    assert!(samples_equal);
}

#[test]
fn short_rail_saturates_and_the_channel_moves() {
    let mut s = office_scenario(4);
    s.rail = Rail::new(0.3).unwrap();
    let t = run_scenario(&s).unwrap();
    let lambda = s.carrier.wavelength_m();
    let last = t.samples.last().unwrap().tx_position;
    assert!((last.x - (6.0 * lambda - 0.3)).abs() < 1e-9);
    // held while the rail lasts
    let held = t.samples.iter().take_while(|x| x.tx_position == s.tx_anchor).count();
    assert_eq!(held, (0.3 / (0.02 * lambda)).floor() as usize + 1);
    assert!(amplitude_span_db(&t) > 0.0);
    let summary = summarize(&t, &s).unwrap();
    assert!(summary.max_abs_doppler_hz > 0.0);
}

#[test]
fn traces_are_reproducible() {
    let a = run_triplet(&office_scenario(42)).unwrap();
    let b = run_triplet(&office_scenario(42)).unwrap();
    assert_eq!(a, b);
}
