//! Positions, carriers and complex gains.
//!
//! All lengths are meters and all speeds are meters per second. Quantities
//! expressed in wavelengths (step size, total travel) are converted to meters
//! through [`Carrier::wavelength_m`] at the point of use.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Speed of light in vacuum, exact SI value.
pub const SPEED_OF_LIGHT_M_PER_S: f64 = 299_792_458.0;

/// Narrowband complex channel coefficient (dimensionless).
pub type ComplexGain = num_complex::Complex64;

/// A point or velocity in 3-D space.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn unit(self) -> Option<Vec3> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self * (1.0 / n))
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl AddAssign for Vec3 {
    fn add_assign(&mut self, rhs: Vec3) {
        *self = *self + rhs;
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, k: f64) -> Vec3 {
        Vec3::new(self.x * k, self.y * k, self.z * k)
    }
}

/// Euclidean distance between two points.
pub fn distance(a: Vec3, b: Vec3) -> f64 {
    (b - a).norm()
}

/// Free-space wavelength for a carrier frequency.
pub fn wavelength(frequency_hz: f64) -> Result<f64> {
    if !(frequency_hz.is_finite() && frequency_hz > 0.0) {
        return Err(Error::Domain(format!(
            "frequency must be positive and finite, got {frequency_hz}"
        )));
    }
    Ok(SPEED_OF_LIGHT_M_PER_S / frequency_hz)
}

/// Carrier frequency with its derived wavelength.
///
/// The wavelength is computed once on construction and cannot be set on its own.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Carrier {
    frequency_hz: f64,
    wavelength_m: f64,
}

impl Carrier {
    pub fn new(frequency_hz: f64) -> Result<Self> {
        Ok(Carrier {
            frequency_hz,
            wavelength_m: wavelength(frequency_hz)?,
        })
    }

    /// The 2.45 GHz ISM carrier.
    pub fn ism_2g45() -> Self {
        Carrier::new(2.45e9).expect("2.45 GHz is a valid carrier")
    }

    pub fn frequency_hz(&self) -> f64 {
        self.frequency_hz
    }

    pub fn wavelength_m(&self) -> f64 {
        self.wavelength_m
    }

    /// Speed of light used for the derivation.
    pub fn c_m_per_s(&self) -> f64 {
        SPEED_OF_LIGHT_M_PER_S
    }

    /// Converts a length in wavelengths to meters.
    pub fn lambdas_to_m(&self, lambdas: f64) -> f64 {
        lambdas * self.wavelength_m
    }

    /// Phase term `exp(-j 2 pi d / lambda)` for a path of length `length_m`.
    ///
    /// The whole-wavelength part is removed before scaling by 2 pi so that long
    /// paths keep full phase precision.
    pub fn propagation_phasor(&self, length_m: f64) -> ComplexGain {
        let turns = (length_m / self.wavelength_m).rem_euclid(1.0);
        ComplexGain::from_polar(1.0, -std::f64::consts::TAU * turns)
    }
}

impl Default for Carrier {
    fn default() -> Self {
        Carrier::ism_2g45()
    }
}

/// Checks that a complex gain has finite components.
pub fn gain_is_finite(g: ComplexGain) -> bool {
    g.re.is_finite() && g.im.is_finite()
}
