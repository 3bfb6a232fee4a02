//! Single-bounce geometric propagation between two isotropic antennas.
//!
//! The channel is the coherent sum of a line-of-sight ray and one ray per point
//! scatterer. Every ray carries `reference_gain / L` spreading over its total
//! length `L`, the scatterer reflectivity for bounced rays, and the carrier
//! phase `exp(-j 2 pi L / lambda)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{distance, gain_is_finite, Carrier, ComplexGain, Vec3};

/// A static point reflector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scatterer {
    pub position: Vec3,
    pub reflectivity: ComplexGain,
}

impl Scatterer {
    pub fn new(position: Vec3, reflectivity: ComplexGain) -> Result<Self> {
        let s = Scatterer {
            position,
            reflectivity,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.position.is_finite() || !gain_is_finite(self.reflectivity) {
            return Err(Error::Domain("scatterer has non-finite fields".into()));
        }
        if self.reflectivity.norm() > 1.0 {
            return Err(Error::Domain(format!(
                "scatterer reflectivity magnitude {} exceeds 1",
                self.reflectivity.norm()
            )));
        }
        Ok(())
    }
}

/// A static propagation environment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub scatterers: Vec<Scatterer>,
    pub los_enabled: bool,
    pub reference_gain: f64,
}

impl Environment {
    /// Line of sight only, unit reference gain.
    pub fn free_space() -> Self {
        Environment {
            scatterers: Vec::new(),
            los_enabled: true,
            reference_gain: 1.0,
        }
    }

    pub fn with_scatterers(scatterers: Vec<Scatterer>) -> Self {
        Environment {
            scatterers,
            ..Environment::free_space()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.reference_gain.is_finite() && self.reference_gain > 0.0) {
            return Err(Error::Domain(format!(
                "reference gain must be positive, got {}",
                self.reference_gain
            )));
        }
        self.scatterers.iter().try_for_each(Scatterer::validate)
    }

    /// Number of paths [`enumerate_paths`] will return.
    pub fn path_count(&self) -> usize {
        self.scatterers.len() + usize::from(self.los_enabled)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PathKind {
    LineOfSight,
    SingleBounce { scatterer: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationPath {
    pub total_length_m: f64,
    /// Spreading loss, reference gain and reflectivity; carrier phase excluded.
    pub coefficient: ComplexGain,
    pub kind: PathKind,
}

fn segment(from: Vec3, to: Vec3, what: &str) -> Result<f64> {
    let d = distance(from, to);
    if d == 0.0 {
        return Err(Error::Geometry(format!(
            "{what} coincide at ({}, {}, {})",
            from.x, from.y, from.z
        )));
    }
    Ok(d)
}

/// Lists the line-of-sight path (if enabled) followed by one path per scatterer,
/// in scatterer order.
pub fn enumerate_paths(env: &Environment, tx: Vec3, rx: Vec3) -> Result<Vec<PropagationPath>> {
    let los_length = segment(tx, rx, "tx and rx")?;
    let mut paths = Vec::with_capacity(env.path_count());
    if env.los_enabled {
        paths.push(PropagationPath {
            total_length_m: los_length,
            coefficient: ComplexGain::new(env.reference_gain / los_length, 0.0),
            kind: PathKind::LineOfSight,
        });
    }
    for (index, s) in env.scatterers.iter().enumerate() {
        let length = segment(tx, s.position, "tx and a scatterer")?
            + segment(s.position, rx, "rx and a scatterer")?;
        paths.push(PropagationPath {
            total_length_m: length,
            coefficient: s.reflectivity * (env.reference_gain / length),
            kind: PathKind::SingleBounce { scatterer: index },
        });
    }
    Ok(paths)
}

/// Narrowband channel gain `sum(coefficient * exp(-j 2 pi L / lambda))`.
pub fn channel_gain(env: &Environment, tx: Vec3, rx: Vec3, carrier: &Carrier) -> Result<ComplexGain> {
    Ok(enumerate_paths(env, tx, rx)?
        .iter()
        .map(|p| p.coefficient * carrier.propagation_phasor(p.total_length_m))
        .sum())
}

/// Doppler shift of the direct tx -> rx ray for a moving tx and a stationary rx.
pub fn los_doppler(tx: Vec3, rx: Vec3, tx_velocity: Vec3, carrier: &Carrier) -> Result<f64> {
    let outward = (tx - rx)
        .unit()
        .ok_or_else(|| Error::Geometry("tx and rx coincide".into()))?;
    Ok(-outward.dot(tx_velocity) / carrier.wavelength_m())
}

/// Per-path Doppler shift in Hz, in [`enumerate_paths`] order.
///
/// Only the tx end moves, so a path's length changes at the rate of its first
/// segment: `unit(tx - first_hop) . v`. The shift is `-(1/lambda)` times that rate.
pub fn path_doppler(
    env: &Environment,
    tx: Vec3,
    rx: Vec3,
    tx_velocity: Vec3,
    carrier: &Carrier,
) -> Result<Vec<f64>> {
    let mut shifts = Vec::with_capacity(env.path_count());
    if env.los_enabled {
        shifts.push(los_doppler(tx, rx, tx_velocity, carrier)?);
    } else {
        segment(tx, rx, "tx and rx")?;
    }
    for s in &env.scatterers {
        segment(s.position, rx, "rx and a scatterer")?;
        let outward = (tx - s.position)
            .unit()
            .ok_or_else(|| Error::Geometry("tx and a scatterer coincide".into()))?;
        shifts.push(-outward.dot(tx_velocity) / carrier.wavelength_m());
    }
    Ok(shifts)
}
