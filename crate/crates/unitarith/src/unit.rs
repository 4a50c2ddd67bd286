use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

/// Exact rational multiple of π.
pub type Angle = Ratio<i128>;

/// Reduces an angle into `[0, 2)`.
pub fn reduce_mod_two(a: Angle) -> Angle {
    let two = Angle::from_integer(2);
    let q = (a / two).floor();
    a - q * two
}

pub(crate) fn angle(num: i128, den: i128) -> Angle {
    Angle::new(num, den)
}

/// The root of unity `e^{πi·angle}` with `angle` kept exact in `[0, 2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactUnit {
    angle: Angle,
}

impl ExactUnit {
    pub fn one() -> Self {
        ExactUnit {
            angle: Angle::zero(),
        }
    }

    pub fn from_angle(angle: Angle) -> Self {
        ExactUnit {
            angle: reduce_mod_two(angle),
        }
    }

    /// `+1` or `-1`.
    pub fn sign(negative: bool) -> Self {
        if negative {
            Self::from_angle(Angle::one())
        } else {
            Self::one()
        }
    }

    pub fn angle(&self) -> Angle {
        self.angle
    }

    pub fn inv(self) -> Self {
        Self::from_angle(-self.angle)
    }

    pub fn pow(self, e: i32) -> Self {
        Self::from_angle(self.angle * i128::from(e))
    }

    pub fn to_complex(&self) -> Complex64 {
        let a = self.angle.to_f64().unwrap_or(0.0);
        // exact quarter turns avoid sin(π) ≠ 0 noise
        if self.angle.denom() <= &2 {
            return match (*self.angle.numer(), *self.angle.denom()) {
                (0, _) => Complex64::new(1.0, 0.0),
                (1, 1) => Complex64::new(-1.0, 0.0),
                (1, 2) => Complex64::new(0.0, 1.0),
                _ => Complex64::new(0.0, -1.0),
            };
        }
        let (s, c) = (std::f64::consts::PI * a).sin_cos();
        Complex64::new(c, s)
    }
}

impl Default for ExactUnit {
    fn default() -> Self {
        Self::one()
    }
}

impl Mul for ExactUnit {
    type Output = ExactUnit;
    fn mul(self, rhs: ExactUnit) -> ExactUnit {
        ExactUnit::from_angle(self.angle + rhs.angle)
    }
}

impl fmt::Debug for ExactUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e^(πi·{})", self.angle)
    }
}

/// A root of unity times a product of real factors `2·sin(π·θ)` with exact `θ`.
///
/// The sine factors are what some unit factors carry in their degenerate branch;
/// they keep the value exact until conversion.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ScaledUnit {
    pub unit: ExactUnit,
    pub sines: Vec<Angle>,
}

impl ScaledUnit {
    pub fn unimodular(unit: ExactUnit) -> Self {
        ScaledUnit {
            unit,
            sines: Vec::new(),
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.sines.is_empty()
    }

    /// `Π 2 sin(πθ)` as a float.
    pub fn scale(&self) -> f64 {
        self.sines
            .iter()
            .map(|t| 2.0 * (std::f64::consts::PI * t.to_f64().unwrap_or(0.0)).sin())
            .product()
    }

    pub fn is_zero(&self) -> bool {
        self.sines.iter().any(|t| t.is_integer())
    }

    pub fn to_complex(&self) -> Complex64 {
        self.unit.to_complex() * self.scale()
    }

    pub fn times_unit(mut self, u: ExactUnit) -> Self {
        self.unit = self.unit * u;
        self
    }
}

impl Mul for ScaledUnit {
    type Output = ScaledUnit;
    fn mul(mut self, rhs: ScaledUnit) -> ScaledUnit {
        self.unit = self.unit * rhs.unit;
        self.sines.extend(rhs.sines);
        self
    }
}

impl fmt::Debug for ScaledUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.unit)?;
        for s in &self.sines {
            write!(f, "·2sin(π·{s})")?;
        }
        Ok(())
    }
}
