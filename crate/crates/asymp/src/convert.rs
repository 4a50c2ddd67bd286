use mpfloat::rug::ops::Pow;
use mpfloat::rug::Float;
use mpfloat::{from_decimal, pi, MpComplex};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::{BigRational, Ratio};
use specfun::KappaValue;
use unitarith::ScaledUnit;

pub(crate) fn big(x: &BigInt, prec: u32) -> Float {
    from_decimal(prec, &x.to_string())
}

pub(crate) fn big_ratio(x: &BigRational, prec: u32) -> Float {
    big(x.numer(), prec + 16) / big(x.denom(), prec + 16)
}

pub(crate) fn ratio(x: &Ratio<i128>, prec: u32) -> Float {
    mpfloat::from_ratio(prec, *x.numer(), *x.denom())
}

/// `κ = rational · π^{pi_power}`
pub(crate) fn kappa_value(v: &KappaValue, prec: u32) -> Float {
    let p = Float::with_val(prec, pi(prec).pow(v.pi_power));
    big_ratio(&v.rational, prec) * p
}

/// `unit · Π 2 sin(πθ)`
pub(crate) fn scaled_unit(u: &ScaledUnit, prec: u32) -> MpComplex {
    let a = u.unit.angle();
    let mut out = MpComplex::unit(prec, *a.numer(), *a.denom());
    for s in &u.sines {
        let theta = pi(prec + 16) * ratio(s, prec + 16);
        let f = Float::with_val(prec, theta.sin()) * 2u32;
        out = out.scale(&f);
    }
    out
}

pub(crate) fn complex(z: Complex64, prec: u32) -> MpComplex {
    MpComplex::new(Float::with_val(prec, z.re), Float::with_val(prec, z.im))
}

/// Principal square root.
pub(crate) fn sqrt(z: &MpComplex) -> MpComplex {
    let prec = z.prec();
    let r = z.abs();
    // √z = √((r+x)/2) + i·sgn(y)√((r−x)/2)
    let re = Float::with_val(prec, (Float::with_val(prec, &r + &z.re) / 2u32).sqrt());
    let mut im = Float::with_val(prec, (Float::with_val(prec, &r - &z.re) / 2u32).sqrt());
    if z.im.is_sign_negative() {
        im = -im;
    }
    MpComplex::new(re, im)
}

/// `z^{j/2}` for any integer `j`, on the principal branch.
pub(crate) fn half_power(z: &MpComplex, j: i32) -> MpComplex {
    let base = if j % 2 != 0 { sqrt(z) } else { MpComplex::from_real(Float::with_val(z.prec(), 1)) };
    let whole = z.powu((j.div_euclid(2)).unsigned_abs());
    let whole = if j.div_euclid(2) < 0 { whole.recip() } else { whole };
    &base * &whole
}
