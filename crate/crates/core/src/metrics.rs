//! Figures of merit for channel traces.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geometry::ComplexGain;
use crate::motion::CompensationMode;
use crate::propagation::los_doppler;
use crate::scenario::{ChannelTrace, Scenario};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceSummary {
    pub mode: CompensationMode,
    /// Min-to-max of `20 log10 |h|`. Infinite when `zero_magnitude` is set,
    /// which JSON carries as `null`.
    #[serde(with = "infinite_as_null")]
    pub amplitude_span_db: f64,
    /// Max minus min of the unwrapped phase.
    pub phase_excursion_deg: f64,
    pub sample_count: usize,
    /// Largest line-of-sight Doppler magnitude while moving between steps.
    pub max_abs_doppler_hz: f64,
    /// At least one sample has `h == 0`.
    pub zero_magnitude: bool,
}

mod infinite_as_null {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
    }
}

/// `20 log10(max|h| / min|h|)` over a sequence of gains.
///
/// A sequence containing an exact zero has infinite span. Empty input gives 0.
pub fn span_db<I: IntoIterator<Item = ComplexGain>>(gains: I) -> f64 {
    let (lo, hi) = gains
        .into_iter()
        .map(|h| h.norm())
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), m| (lo.min(m), hi.max(m)));
    if hi == 0.0 && lo.is_infinite() {
        return 0.0;
    }
    if lo == 0.0 {
        return f64::INFINITY;
    }
    20.0 * (hi / lo).log10()
}

pub fn amplitude_span_db(trace: &ChannelTrace) -> f64 {
    span_db(trace.gains())
}

/// Unwraps principal-value phases so that successive differences lie in `(-pi, pi]`.
///
/// Each output is the input plus an integer number of turns; the first value is
/// left untouched.
pub fn unwrap(wrapped: &[f64]) -> Vec<f64> {
    let mut turns = 0i64;
    let mut out = Vec::with_capacity(wrapped.len());
    for (k, &phase) in wrapped.iter().enumerate() {
        if k > 0 {
            let diff = phase - wrapped[k - 1];
            if diff > PI {
                turns -= 1;
            } else if diff <= -PI {
                turns += 1;
            }
        }
        out.push(phase + TAU * turns as f64);
    }
    out
}

/// Unwrapped phase of a trace in radians.
pub fn unwrap_phase(trace: &ChannelTrace) -> Vec<f64> {
    let wrapped: Vec<f64> = trace.gains().map(|h| h.arg()).collect();
    unwrap(&wrapped)
}

/// Spread of unwrapped phases in degrees.
pub fn excursion_deg(unwrapped: &[f64]) -> f64 {
    let (lo, hi) = unwrapped
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &p| (lo.min(p), hi.max(p)));
    if lo > hi {
        return 0.0;
    }
    (hi - lo).to_degrees()
}

pub fn phase_excursion_deg(trace: &ChannelTrace) -> f64 {
    excursion_deg(&unwrap_phase(trace))
}

/// Largest LOS Doppler magnitude over the movement intervals of a trace.
///
/// Between consecutive settled samples the antenna is taken to move at the
/// trajectory speed scaled by how far it moved relative to the platform step,
/// so a held antenna has zero velocity. The shift is evaluated at the start of
/// each interval.
pub fn max_abs_los_doppler(trace: &ChannelTrace, scenario: &Scenario) -> Result<f64> {
    let traj = &trace.trajectory;
    let step_m = trace.carrier.lambdas_to_m(traj.step_lambda());
    let scale = traj.speed_m_per_s() / step_m;
    trace.samples.windows(2).try_fold(0.0f64, |acc, pair| {
        let velocity = (pair[1].tx_position - pair[0].tx_position) * scale;
        let f = los_doppler(pair[0].tx_position, scenario.rx_position, velocity, &trace.carrier)?;
        Ok(acc.max(f.abs()))
    })
}

/// All metrics for one trace. `scenario` supplies the receiver position.
pub fn summarize(trace: &ChannelTrace, scenario: &Scenario) -> Result<TraceSummary> {
    Ok(TraceSummary {
        mode: trace.mode,
        amplitude_span_db: amplitude_span_db(trace),
        phase_excursion_deg: phase_excursion_deg(trace),
        sample_count: trace.len(),
        max_abs_doppler_hz: max_abs_los_doppler(trace, scenario)?,
        zero_magnitude: trace.gains().any(|h| h.norm() == 0.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Carrier, Vec3};
    use crate::motion::SteppedTrajectory;
    use crate::propagation::Environment;
    use crate::scenario::{run_scenario, TraceSample};

    fn trace_of(gains: &[ComplexGain]) -> ChannelTrace {
        ChannelTrace {
            samples: gains
                .iter()
                .enumerate()
                .map(|(k, &h)| TraceSample {
                    step_index: k,
                    time_s: k as f64,
                    tx_position: Vec3::ZERO,
                    h,
                })
                .collect(),
            mode: CompensationMode::Fixed,
            carrier: Carrier::default(),
            trajectory: SteppedTrajectory::default(),
        }
    }

    #[test]
    fn span_examples() {
        let c = ComplexGain::new(0.3, -0.4);
        assert_eq!(amplitude_span_db(&trace_of(&[c, c, c])), 0.0);
        let t = trace_of(&[ComplexGain::new(1.0, 0.0), ComplexGain::new(0.0, 10.0)]);
        assert!((amplitude_span_db(&t) - 20.0).abs() < 1e-12);
        let t = trace_of(&[ComplexGain::new(1.0, 0.0), ComplexGain::new(0.0, 0.0)]);
        assert!(amplitude_span_db(&t).is_infinite());
    }

    #[test]
    fn unwrap_examples() {
        assert_eq!(unwrap(&[0.7, 0.7, 0.7]), vec![0.7, 0.7, 0.7]);
        let u = unwrap(&[3.1, -3.1]);
        assert_eq!(u[0], 3.1);
        // -3.1 + 2 pi
        assert!((u[1] - 3.183_185_307_179_586).abs() < 1e-12);
        assert!(unwrap(&[]).is_empty());
    }

    #[test]
    fn unwrap_handles_multiple_turns() {
        let truth: Vec<f64> = (0..200).map(|k| -0.4 * k as f64).collect();
        let wrapped: Vec<f64> = truth.iter().map(|&p| ComplexGain::from_polar(1.0, p).arg()).collect();
        let u = unwrap(&wrapped);
        for (a, b) in u.iter().zip(&truth) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    fn recession(mode: CompensationMode) -> (Scenario, ChannelTrace) {
        // rx behind the start, platform moving away from it
        let mut s = Scenario::new(Environment::free_space()).with_mode(mode);
        s.rx_position = Vec3::new(-2.0, 0.0, 0.0);
        let t = run_scenario(&s).unwrap();
        (s, t)
    }

    #[test]
    fn los_recession_phase_steps() {
        let (_, t) = recession(CompensationMode::Fixed);
        let u = unwrap_phase(&t);
        let per_step = (TAU * 0.02).to_degrees();
        assert!((per_step - 7.2).abs() < 1e-12);
        for w in u.windows(2) {
            assert!(((w[0] - w[1]).to_degrees() - 7.2).abs() < 1e-6);
        }
        // six wavelengths of recession
        assert!((phase_excursion_deg(&t) - 2160.0).abs() < 1e-6);
    }

    #[test]
    fn compensated_and_stationary_summaries_are_zero() {
        for mode in [CompensationMode::Compensate, CompensationMode::Stationary] {
            let (s, t) = recession(mode);
            let summary = summarize(&t, &s).unwrap();
            assert_eq!(summary.amplitude_span_db, 0.0);
            assert_eq!(summary.phase_excursion_deg, 0.0);
            assert_eq!(summary.max_abs_doppler_hz, 0.0);
            assert_eq!(summary.sample_count, 301);
            assert!(!summary.zero_magnitude);
        }
    }

    #[test]
    fn fixed_head_on_doppler() {
        let mut s = Scenario::new(Environment::free_space()).with_mode(CompensationMode::Fixed);
        s.trajectory = SteppedTrajectory::new(Vec3::new(1.0, 0.0, 0.0), 0.02, 0.2, 6.0, 42.0).unwrap();
        let t = run_scenario(&s).unwrap();
        let summary = summarize(&t, &s).unwrap();
        assert!((summary.max_abs_doppler_hz - 343.2).abs() < 0.1, "{}", summary.max_abs_doppler_hz);
    }
}
