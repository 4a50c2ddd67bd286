use std::ops::{Add, AddAssign, Mul, Sub};

use rug::Float;

/// A complex number as a pair of MPFR floats sharing one precision.
#[derive(Clone, Debug, PartialEq)]
pub struct MpComplex {
    pub re: Float,
    pub im: Float,
}

impl MpComplex {
    pub fn zero(prec: u32) -> Self {
        MpComplex {
            re: Float::with_val(prec, 0),
            im: Float::with_val(prec, 0),
        }
    }

    pub fn new(re: Float, im: Float) -> Self {
        MpComplex { re, im }
    }

    pub fn from_real(re: Float) -> Self {
        let prec = re.prec();
        MpComplex {
            re,
            im: Float::with_val(prec, 0),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    /// `e^{πi·num/den}` evaluated exactly up to rounding of the final cos/sin.
    pub fn unit(prec: u32, num: i128, den: i128) -> Self {
        let theta = crate::pi(prec + 16) * crate::from_ratio(prec + 16, num, den);
        let (s, c) = theta.sin_cos(Float::new(prec + 16));
        MpComplex {
            re: Float::with_val(prec, c),
            im: Float::with_val(prec, s),
        }
    }

    /// `e^{x + iy}`.
    pub fn exp(&self) -> Self {
        let prec = self.prec();
        let m = Float::with_val(prec, self.re.exp_ref());
        let (s, c) = self.im.clone().sin_cos(Float::new(prec));
        MpComplex {
            re: Float::with_val(prec, &m * &c),
            im: m * s,
        }
    }

    pub fn cosh(&self) -> Self {
        let prec = self.prec();
        let ch = Float::with_val(prec, self.re.cosh_ref());
        let sh = Float::with_val(prec, self.re.sinh_ref());
        let (s, c) = self.im.clone().sin_cos(Float::new(prec));
        MpComplex {
            re: ch * c,
            im: sh * s,
        }
    }

    pub fn conj(&self) -> Self {
        MpComplex {
            re: self.re.clone(),
            im: Float::with_val(self.prec(), -&self.im),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        let prec = self.prec();
        Float::with_val(prec, self.re.square_ref()) + Float::with_val(prec, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        self.norm_sqr().sqrt()
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        let prec = self.prec();
        MpComplex {
            re: Float::with_val(prec, &self.re / &d),
            im: Float::with_val(prec, -&self.im) / d,
        }
    }

    pub fn div(&self, rhs: &MpComplex) -> Self {
        self * &rhs.recip()
    }

    pub fn scale(&self, s: &Float) -> Self {
        let prec = self.prec();
        MpComplex {
            re: Float::with_val(prec, &self.re * s),
            im: Float::with_val(prec, &self.im * s),
        }
    }

    pub fn powu(&self, n: u32) -> Self {
        let mut acc = MpComplex::from_real(Float::with_val(self.prec(), 1));
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl Add for &MpComplex {
    type Output = MpComplex;
    fn add(self, rhs: &MpComplex) -> MpComplex {
        let prec = self.prec();
        MpComplex {
            re: Float::with_val(prec, &self.re + &rhs.re),
            im: Float::with_val(prec, &self.im + &rhs.im),
        }
    }
}

impl Sub for &MpComplex {
    type Output = MpComplex;
    fn sub(self, rhs: &MpComplex) -> MpComplex {
        let prec = self.prec();
        MpComplex {
            re: Float::with_val(prec, &self.re - &rhs.re),
            im: Float::with_val(prec, &self.im - &rhs.im),
        }
    }
}

impl Mul for &MpComplex {
    type Output = MpComplex;
    fn mul(self, rhs: &MpComplex) -> MpComplex {
        let prec = self.prec();
        let ac = Float::with_val(prec, &self.re * &rhs.re);
        let bd = Float::with_val(prec, &self.im * &rhs.im);
        let ad = Float::with_val(prec, &self.re * &rhs.im);
        let bc = Float::with_val(prec, &self.im * &rhs.re);
        MpComplex {
            re: ac - bd,
            im: ad + bc,
        }
    }
}

impl AddAssign<&MpComplex> for MpComplex {
    fn add_assign(&mut self, rhs: &MpComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_matches_euler() {
        let z = MpComplex::unit(128, 1, 3);
        let (re, im) = z.to_f64_pair();
        assert!((re - 0.5).abs() < 1e-15);
        assert!((im - 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn exp_of_i_pi_is_minus_one() {
        let ipi = MpComplex::new(Float::with_val(128, 0), crate::pi(128));
        let (re, im) = ipi.exp().to_f64_pair();
        assert!((re + 1.0).abs() < 1e-30 && im.abs() < 1e-30);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = MpComplex::new(Float::with_val(96, 1.5), Float::with_val(96, -0.25));
        let b = MpComplex::new(Float::with_val(96, 0.3), Float::with_val(96, 2.0));
        let back = (&a * &b).div(&b);
        let (re, im) = (&back - &a).to_f64_pair();
        assert!(re.abs() < 1e-25 && im.abs() < 1e-25);
    }
}
