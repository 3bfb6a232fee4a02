//! Stepped platform trajectory, the antenna rail and the counter-movement rule.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Carrier, Vec3};

/// km/h to m/s.
pub const KMH_TO_MPS: f64 = 1.0 / 3.6;

/// Tolerance used when deciding whether `total / step` lands on an integer.
const STEP_COUNT_TOLERANCE: f64 = 1e-9;

/// Straight-line platform motion in equal steps, sampled after each settle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SteppedTrajectory {
    direction: Vec3,
    step_lambda: f64,
    dwell_s: f64,
    total_lambda: f64,
    speed_m_per_s: f64,
}

impl SteppedTrajectory {
    /// Builds a trajectory. `direction` is normalized here; it only needs to be non-zero.
    pub fn new(
        direction: Vec3,
        step_lambda: f64,
        dwell_s: f64,
        total_lambda: f64,
        speed_m_per_s: f64,
    ) -> Result<Self> {
        let direction = direction
            .is_finite()
            .then(|| direction.unit())
            .flatten()
            .ok_or_else(|| Error::Domain("trajectory direction must be a finite non-zero vector".into()))?;
        if !(step_lambda.is_finite() && step_lambda > 0.0) {
            return Err(Error::Domain(format!("step_lambda must be positive, got {step_lambda}")));
        }
        if !(total_lambda.is_finite() && total_lambda >= 0.0) {
            return Err(Error::Domain(format!("total_lambda must be non-negative, got {total_lambda}")));
        }
        if !(dwell_s.is_finite() && dwell_s >= 0.0) {
            return Err(Error::Domain(format!("dwell_s must be non-negative, got {dwell_s}")));
        }
        if !(speed_m_per_s.is_finite() && speed_m_per_s >= 0.0) {
            return Err(Error::Domain(format!("speed_m_per_s must be non-negative, got {speed_m_per_s}")));
        }
        Ok(SteppedTrajectory {
            direction,
            step_lambda,
            dwell_s,
            total_lambda,
            speed_m_per_s,
        })
    }

    pub fn direction(&self) -> Vec3 {
        self.direction
    }
    pub fn step_lambda(&self) -> f64 {
        self.step_lambda
    }
    pub fn dwell_s(&self) -> f64 {
        self.dwell_s
    }
    pub fn total_lambda(&self) -> f64 {
        self.total_lambda
    }
    pub fn speed_m_per_s(&self) -> f64 {
        self.speed_m_per_s
    }

    /// Index of the last settled position, `floor(total / step)`.
    ///
    /// Ratios within 1e-9 of an integer are snapped to it, so 6 / 0.02 gives 300
    /// and not 299.
    pub fn last_step(&self) -> usize {
        let ratio = self.total_lambda / self.step_lambda;
        let nearest = ratio.round();
        if (ratio - nearest).abs() <= STEP_COUNT_TOLERANCE * nearest.max(1.0) {
            nearest as usize
        } else {
            ratio.floor() as usize
        }
    }

    /// Settled positions including the start.
    pub fn sample_count(&self) -> usize {
        self.last_step() + 1
    }

    /// Nominal platform travel at a step, in wavelengths.
    pub fn travel_lambda(&self, step_index: usize) -> f64 {
        step_index as f64 * self.step_lambda
    }

    fn check_step(&self, step_index: usize) -> Result<()> {
        let last = self.last_step();
        if step_index > last {
            return Err(Error::Range {
                step: step_index,
                last,
            });
        }
        Ok(())
    }
}

impl Default for SteppedTrajectory {
    /// 6 wavelengths along +x in 0.02 wavelength steps with 0.2 s settles, moving
    /// at 0.1 m/s between steps.
    fn default() -> Self {
        SteppedTrajectory::new(Vec3::new(1.0, 0.0, 0.0), 0.02, 0.2, 6.0, 0.1)
            .expect("default trajectory is valid")
    }
}

/// Travel available to the antenna on the platform.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rail {
    usable_length_m: f64,
}

impl Rail {
    pub fn new(usable_length_m: f64) -> Result<Self> {
        if !(usable_length_m.is_finite() && usable_length_m >= 0.0) {
            return Err(Error::Domain(format!(
                "usable rail length must be non-negative, got {usable_length_m}"
            )));
        }
        Ok(Rail { usable_length_m })
    }

    pub fn usable_length_m(&self) -> f64 {
        self.usable_length_m
    }
}

impl Default for Rail {
    fn default() -> Self {
        Rail { usable_length_m: 1.0 }
    }
}

/// How the antenna reacts to the platform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CompensationMode {
    /// Rigidly mounted, moves with the platform.
    Fixed,
    /// Counter-moves along the rail to hold its absolute position.
    Compensate,
    /// Neither platform nor antenna moves.
    Stationary,
}

impl CompensationMode {
    pub const ALL: [CompensationMode; 3] = [
        CompensationMode::Fixed,
        CompensationMode::Compensate,
        CompensationMode::Stationary,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CompensationMode::Fixed => "fixed",
            CompensationMode::Compensate => "compensate",
            CompensationMode::Stationary => "stationary",
        }
    }
}

impl std::str::FromStr for CompensationMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "fixed" => Ok(CompensationMode::Fixed),
            "compensate" | "compensated" => Ok(CompensationMode::Compensate),
            "stationary" => Ok(CompensationMode::Stationary),
            other => Err(format!(
                "unknown mode `{other}` (expected fixed, compensate or stationary)"
            )),
        }
    }
}

impl std::fmt::Display for CompensationMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Platform displacement from its start after `step_index` steps.
pub fn platform_displacement(step_index: usize, traj: &SteppedTrajectory, carrier: &Carrier) -> Result<Vec3> {
    traj.check_step(step_index)?;
    Ok(traj.direction * carrier.lambdas_to_m(traj.travel_lambda(step_index)))
}

/// Platform displacement as seen in a given mode; zero when nothing moves.
pub fn platform_offset(
    step_index: usize,
    traj: &SteppedTrajectory,
    mode: CompensationMode,
    carrier: &Carrier,
) -> Result<Vec3> {
    let d = platform_displacement(step_index, traj, carrier)?;
    Ok(match mode {
        CompensationMode::Stationary => Vec3::ZERO,
        _ => d,
    })
}

/// Absolute antenna position after `step_index` steps.
///
/// In compensate mode the antenna holds `anchor` exactly until the platform has
/// travelled the full rail length; beyond that the rail is at its stop and the
/// antenna is carried along by the excess.
pub fn antenna_position(
    step_index: usize,
    traj: &SteppedTrajectory,
    mode: CompensationMode,
    rail: &Rail,
    anchor: Vec3,
    carrier: &Carrier,
) -> Result<Vec3> {
    let displacement = platform_displacement(step_index, traj, carrier)?;
    Ok(match mode {
        CompensationMode::Fixed => anchor + displacement,
        CompensationMode::Stationary => anchor,
        CompensationMode::Compensate => {
            let travel = carrier.lambdas_to_m(traj.travel_lambda(step_index));
            if travel <= rail.usable_length_m() {
                anchor
            } else {
                anchor + traj.direction * (travel - rail.usable_length_m())
            }
        }
    })
}

/// How long a rail of `usable_length_m` can hold the channel at `speed_m_per_s`.
pub fn static_budget_s(usable_length_m: f64, speed_m_per_s: f64) -> Result<f64> {
    if !(speed_m_per_s.is_finite() && speed_m_per_s > 0.0) {
        return Err(Error::Domain(format!("speed must be positive, got {speed_m_per_s}")));
    }
    if !(usable_length_m.is_finite() && usable_length_m >= 0.0) {
        return Err(Error::Domain(format!(
            "usable length must be non-negative, got {usable_length_m}"
        )));
    }
    Ok(usable_length_m / speed_m_per_s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_carrier() -> Carrier {
        Carrier::new(299_792_458.0).unwrap()
    }

    #[test]
    fn default_trajectory_has_301_samples() {
        let t = SteppedTrajectory::default();
        assert_eq!(t.last_step(), 300);
        assert_eq!(t.sample_count(), 301);
    }

    #[test]
    fn sample_count_floors_partial_steps() {
        let t = SteppedTrajectory::new(Vec3::new(1.0, 0.0, 0.0), 0.3, 0.2, 1.0, 0.0).unwrap();
        assert_eq!(t.sample_count(), 4);
        let t = SteppedTrajectory::new(Vec3::new(1.0, 0.0, 0.0), 0.02, 0.2, 0.0, 0.0).unwrap();
        assert_eq!(t.sample_count(), 1);
    }

    #[test]
    fn trajectory_validation() {
        let x = Vec3::new(1.0, 0.0, 0.0);
        assert!(SteppedTrajectory::new(Vec3::ZERO, 0.02, 0.2, 6.0, 1.0).is_err());
        assert!(SteppedTrajectory::new(x, 0.0, 0.2, 6.0, 1.0).is_err());
        assert!(SteppedTrajectory::new(x, 0.02, -0.1, 6.0, 1.0).is_err());
        assert!(SteppedTrajectory::new(x, 0.02, 0.2, -1.0, 1.0).is_err());
        let t = SteppedTrajectory::new(Vec3::new(0.0, 3.0, 4.0), 0.02, 0.2, 6.0, 1.0).unwrap();
        assert!((t.direction().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn displacement_examples() {
        let carrier = Carrier::ism_2g45();
        let t = SteppedTrajectory::default();
        assert_eq!(platform_displacement(0, &t, &carrier).unwrap(), Vec3::ZERO);

        // 300 * 0.02 * 0.1223642686 = 0.7341856...
        let d = platform_displacement(300, &t, &carrier).unwrap();
        assert!((d.x - 0.734_185_611_428_571_4).abs() < 1e-12, "{}", d.x);
        assert_eq!((d.y, d.z), (0.0, 0.0));

        let d = platform_displacement(1, &t, &unit_carrier()).unwrap();
        assert_eq!(d, Vec3::new(0.02, 0.0, 0.0));

        assert!(matches!(
            platform_displacement(301, &t, &carrier),
            Err(Error::Range { step: 301, last: 300 })
        ));
    }

    #[test]
    fn antenna_position_examples() {
        // unit carrier so that travel in wavelengths equals meters
        let carrier = unit_carrier();
        let t = SteppedTrajectory::new(Vec3::new(1.0, 0.0, 0.0), 0.1, 0.2, 2.0, 1.0).unwrap();
        let rail = Rail::new(1.0).unwrap();
        let anchor = Vec3::ZERO;

        // 0.3 m displacement within a 1 m rail
        let p = antenna_position(3, &t, CompensationMode::Compensate, &rail, anchor, &carrier).unwrap();
        assert_eq!(p, anchor);
        // 1.5 m displacement: 0.5 m past the rail stop
        let p = antenna_position(15, &t, CompensationMode::Compensate, &rail, anchor, &carrier).unwrap();
        assert!((p.x - 0.5).abs() < 1e-12 && p.y == 0.0 && p.z == 0.0);
        // rigid mount
        let p = antenna_position(3, &t, CompensationMode::Fixed, &rail, anchor, &carrier).unwrap();
        assert!((p.x - 0.3).abs() < 1e-15);
        let p = antenna_position(15, &t, CompensationMode::Stationary, &rail, anchor, &carrier).unwrap();
        assert_eq!(p, anchor);
    }

    #[test]
    fn saturation_is_continuous() {
        let carrier = unit_carrier();
        let t = SteppedTrajectory::new(Vec3::new(1.0, 0.0, 0.0), 0.001, 0.2, 2.0, 1.0).unwrap();
        let rail = Rail::new(1.0).unwrap();
        let at = |k| {
            antenna_position(k, &t, CompensationMode::Compensate, &rail, Vec3::ZERO, &carrier)
                .unwrap()
                .x
        };
        // the boundary is at step 1000; the jump across it is at most one step
        assert_eq!(at(999), 0.0);
        assert!(at(1000) <= 1e-12);
        assert!((at(1001) - 0.001).abs() < 1e-9);
    }

    #[test]
    fn budget_examples() {
        let car = static_budget_s(4.0, 42.0).unwrap();
        assert!((car - 0.095_238).abs() < 1e-6);
        assert!((car * 1e3 - 95.0).abs() < 0.5);

        let phone = static_budget_s(0.01, 20.0 * KMH_TO_MPS).unwrap();
        assert!((phone - 0.0018).abs() < 1e-12);

        assert_eq!(static_budget_s(0.0, 3.0).unwrap(), 0.0);
        assert!(static_budget_s(1.0, 0.0).is_err());
        assert!(static_budget_s(1.0, -2.0).is_err());
    }

    #[test]
    fn mode_parsing() {
        for m in CompensationMode::ALL {
            assert_eq!(m.as_str().parse::<CompensationMode>().unwrap(), m);
        }
        assert!("wobble".parse::<CompensationMode>().is_err());
    }
}
