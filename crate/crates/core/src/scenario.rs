//! Scenarios: an environment, a link and a motion plan, run step by step.
//!
//! A run visits every settled platform position of the trajectory, places the
//! antenna according to the compensation mode, and records the narrowband
//! channel gain. [`run_triplet`] repeats a scenario for all three modes so the
//! rigid, counter-moving and motionless cases can be compared side by side.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{gain_is_finite, Carrier, ComplexGain, Vec3};
use crate::motion::{antenna_position, platform_offset, CompensationMode, Rail, SteppedTrajectory};
use crate::propagation::{channel_gain, Environment, Scatterer};
use crate::rng::XorShift64Star;

pub const DEFAULT_TX_ANCHOR: Vec3 = Vec3::new(0.0, 0.0, 0.0);
pub const DEFAULT_RX_POSITION: Vec3 = Vec3::new(2.0, 0.0, 0.0);
/// Side of the cube that residual anechoic reflectors are drawn from.
pub const ANECHOIC_BOX_M: f64 = 5.0;
pub const DEFAULT_RESIDUAL_COUNT: usize = 4;
pub const DEFAULT_RESIDUAL_DB: f64 = -30.0;
pub const DEFAULT_OFFICE_SCATTERERS: usize = 30;
pub const DEFAULT_ROOM_EXTENT_M: Vec3 = Vec3::new(6.0, 5.0, 3.0);
/// Office reflectivity magnitudes are uniform in this range.
pub const OFFICE_REFLECTIVITY_RANGE: (f64, f64) = (0.2, 0.9);

/// A reflector carried by the platform, standing in for the drive hardware
/// under the antenna.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Parasitic {
    /// Position relative to the antenna anchor, moving with the platform.
    pub offset: Vec3,
    pub reflectivity: ComplexGain,
}

impl Default for Parasitic {
    /// 0.15 m below the anchor, -20 dB.
    fn default() -> Self {
        Parasitic {
            offset: Vec3::new(0.0, 0.0, -0.15),
            reflectivity: ComplexGain::new(0.1, 0.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Scenario {
    pub environment: Environment,
    pub carrier: Carrier,
    pub trajectory: SteppedTrajectory,
    pub rail: Rail,
    pub mode: CompensationMode,
    pub tx_anchor: Vec3,
    pub rx_position: Vec3,
    pub parasitic: Option<Parasitic>,
}

impl Scenario {
    /// Default link, carrier and trajectory around the given environment, in
    /// compensate mode with a 1 m rail and no parasitic reflector.
    pub fn new(environment: Environment) -> Self {
        Scenario {
            environment,
            carrier: Carrier::default(),
            trajectory: SteppedTrajectory::default(),
            rail: Rail::default(),
            mode: CompensationMode::Compensate,
            tx_anchor: DEFAULT_TX_ANCHOR,
            rx_position: DEFAULT_RX_POSITION,
            parasitic: None,
        }
    }

    pub fn with_mode(&self, mode: CompensationMode) -> Scenario {
        Scenario { mode, ..self.clone() }
    }

    pub fn link_center(&self) -> Vec3 {
        (self.tx_anchor + self.rx_position) * 0.5
    }

    pub fn validate(&self) -> Result<()> {
        self.environment.validate()?;
        if !self.tx_anchor.is_finite() || !self.rx_position.is_finite() {
            return Err(Error::Domain("link endpoints must be finite".into()));
        }
        if self.tx_anchor == self.rx_position {
            return Err(Error::Geometry("rx position equals tx anchor".into()));
        }
        if self.trajectory.sample_count() > 1 && self.trajectory.dwell_s() <= 0.0 {
            return Err(Error::Domain(
                "dwell_s must be positive so sample times strictly increase".into(),
            ));
        }
        if let Some(p) = &self.parasitic {
            if !p.offset.is_finite() || !gain_is_finite(p.reflectivity) {
                return Err(Error::Domain("parasitic fields must be finite".into()));
            }
            if p.reflectivity.norm() > 1.0 {
                return Err(Error::Domain(format!(
                    "parasitic reflectivity magnitude {} exceeds 1",
                    p.reflectivity.norm()
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceSample {
    pub step_index: usize,
    pub time_s: f64,
    pub tx_position: Vec3,
    pub h: ComplexGain,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChannelTrace {
    pub samples: Vec<TraceSample>,
    pub mode: CompensationMode,
    pub carrier: Carrier,
    pub trajectory: SteppedTrajectory,
}

impl ChannelTrace {
    pub fn gains(&self) -> impl Iterator<Item = ComplexGain> + '_ {
        self.samples.iter().map(|s| s.h)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Runs one scenario over every settled position of its trajectory.
pub fn run_scenario(s: &Scenario) -> Result<ChannelTrace> {
    s.validate()?;
    let traj = &s.trajectory;
    let mut env = s.environment.clone();
    let parasitic_slot = s.parasitic.map(|p| {
        env.scatterers.push(Scatterer {
            position: s.tx_anchor + p.offset,
            reflectivity: p.reflectivity,
        });
        (env.scatterers.len() - 1, p.offset)
    });

    let samples = (0..traj.sample_count())
        .map(|step| {
            let at_step = |e: Error| Error::AtStep {
                step,
                source: Box::new(e),
            };
            let tx = antenna_position(step, traj, s.mode, &s.rail, s.tx_anchor, &s.carrier)?;
            if let Some((slot, offset)) = parasitic_slot {
                let platform = platform_offset(step, traj, s.mode, &s.carrier)?;
                env.scatterers[slot].position = s.tx_anchor + platform + offset;
            }
            let h = channel_gain(&env, tx, s.rx_position, &s.carrier).map_err(at_step)?;
            Ok(TraceSample {
                step_index: step,
                time_s: step as f64 * traj.dwell_s(),
                tx_position: tx,
                h,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ChannelTrace {
        samples,
        mode: s.mode,
        carrier: s.carrier,
        trajectory: *traj,
    })
}

/// The same scenario under all three modes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Triplet {
    pub fixed: ChannelTrace,
    pub compensated: ChannelTrace,
    pub stationary: ChannelTrace,
}

impl Triplet {
    /// Traces in fixed, compensated, stationary order.
    pub fn traces(&self) -> [&ChannelTrace; 3] {
        [&self.fixed, &self.compensated, &self.stationary]
    }
}

/// Runs `base` in fixed, compensate and stationary mode concurrently.
///
/// The mode stored in `base` is ignored.
pub fn run_triplet(base: &Scenario) -> Result<Triplet> {
    let [fixed, compensated, stationary] = std::thread::scope(|scope| {
        CompensationMode::ALL
            .map(|mode| {
                let s = base.with_mode(mode);
                scope.spawn(move || run_scenario(&s))
            })
            .map(|handle| handle.join().expect("scenario thread panicked"))
    });
    Ok(Triplet {
        fixed: fixed?,
        compensated: compensated?,
        stationary: stationary?,
    })
}

fn uniform_in_box(rng: &mut XorShift64Star, center: Vec3, extent: Vec3) -> Vec3 {
    let x = rng.uniform(center.x - extent.x / 2.0, center.x + extent.x / 2.0);
    let y = rng.uniform(center.y - extent.y / 2.0, center.y + extent.y / 2.0);
    let z = rng.uniform(center.z - extent.z / 2.0, center.z + extent.z / 2.0);
    Vec3::new(x, y, z)
}

/// Line of sight plus `residual_count` weak reflectors of `residual_db` each.
///
/// Reflectors are uniform in a 5 m cube centred on `center`. Per reflector the
/// generator draws x, y, z, then the reflection phase uniform in `[0, 2 pi)`.
pub fn make_anechoic(seed: u64, residual_count: usize, residual_db: f64, center: Vec3) -> Result<Environment> {
    if !(residual_db.is_finite() && residual_db <= 0.0) {
        return Err(Error::Domain(format!(
            "residual level must be a finite non-positive dB value, got {residual_db}"
        )));
    }
    let magnitude = 10f64.powf(residual_db / 20.0);
    let extent = Vec3::new(ANECHOIC_BOX_M, ANECHOIC_BOX_M, ANECHOIC_BOX_M);
    let mut rng = XorShift64Star::new(seed);
    let scatterers = (0..residual_count)
        .map(|_| {
            let position = uniform_in_box(&mut rng, center, extent);
            let phase = rng.uniform(0.0, std::f64::consts::TAU);
            Scatterer {
                position,
                reflectivity: ComplexGain::from_polar(magnitude, phase),
            }
        })
        .collect();
    Ok(Environment::with_scatterers(scatterers))
}

/// Line of sight plus `scatterer_count` reflectors spread through a room.
///
/// The room is an axis-aligned box of size `room_extent_m` centred on `center`.
/// Per reflector the generator draws x, y, z, the magnitude uniform in
/// `[0.2, 0.9]`, then the phase uniform in `[0, 2 pi)`.
pub fn make_office(seed: u64, scatterer_count: usize, room_extent_m: Vec3, center: Vec3) -> Result<Environment> {
    if scatterer_count == 0 {
        return Err(Error::Domain("an office needs at least one scatterer".into()));
    }
    if !room_extent_m.is_finite() || room_extent_m.x <= 0.0 || room_extent_m.y <= 0.0 || room_extent_m.z <= 0.0 {
        return Err(Error::Domain("room extent must be positive in every dimension".into()));
    }
    let (lo, hi) = OFFICE_REFLECTIVITY_RANGE;
    let mut rng = XorShift64Star::new(seed);
    let scatterers = (0..scatterer_count)
        .map(|_| {
            let position = uniform_in_box(&mut rng, center, room_extent_m);
            let magnitude = rng.uniform(lo, hi);
            let phase = rng.uniform(0.0, std::f64::consts::TAU);
            Scatterer {
                position,
                reflectivity: ComplexGain::from_polar(magnitude, phase),
            }
        })
        .collect();
    Ok(Environment::with_scatterers(scatterers))
}

/// Default office scenario for a seed.
pub fn office_scenario(seed: u64) -> Scenario {
    let mut s = Scenario::new(Environment::free_space());
    s.environment = make_office(seed, DEFAULT_OFFICE_SCATTERERS, DEFAULT_ROOM_EXTENT_M, s.link_center())
        .expect("default office parameters are valid");
    s
}

/// Default anechoic scenario for a seed.
pub fn anechoic_scenario(seed: u64) -> Scenario {
    let mut s = Scenario::new(Environment::free_space());
    s.environment = make_anechoic(seed, DEFAULT_RESIDUAL_COUNT, DEFAULT_RESIDUAL_DB, s.link_center())
        .expect("default anechoic parameters are valid");
    s
}
