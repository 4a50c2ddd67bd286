use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::laws::{self, Sides};
use crate::series::lattice_distance;
use crate::{EvaluationPoint, MockError};

/// Seed used by [`verify_transformation`].
pub const DEFAULT_SEED: u64 = 0x6d6f_636b_666f_726d;

const U_MAX: f64 = 0.2;
const U_MARGIN: f64 = 0.05;
const MAX_T: u32 = 23;
const MAX_K: i64 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    #[serde(rename = "eta")]
    Eta,
    #[serde(rename = "theta_elliptic")]
    ThetaElliptic,
    #[serde(rename = "theta_modular")]
    ThetaModular,
    #[serde(rename = "muhat_elliptic")]
    MuhatElliptic,
    #[serde(rename = "muhat_modular")]
    MuhatModular,
    #[serde(rename = "R_props")]
    RProps,
    #[serde(rename = "R_mordell")]
    RMordell,
    #[serde(rename = "R_dissection")]
    RDissection,
    #[serde(rename = "AT_decomposition")]
    AtDecomposition,
    #[serde(rename = "prop_3_1")]
    KernelSum,
    #[serde(rename = "prop_3_2")]
    KernelDual,
    #[serde(rename = "prop_4_1")]
    KernelZeroModular,
    #[serde(rename = "prop_4_2")]
    KernelShiftModular,
    #[serde(rename = "R_composite")]
    RComposite,
    #[serde(rename = "muhat_composite")]
    MuhatComposite,
}

impl Case {
    pub const ALL: [Case; 15] = [
        Case::Eta,
        Case::ThetaElliptic,
        Case::ThetaModular,
        Case::MuhatElliptic,
        Case::MuhatModular,
        Case::RProps,
        Case::RMordell,
        Case::RDissection,
        Case::AtDecomposition,
        Case::KernelSum,
        Case::KernelDual,
        Case::KernelZeroModular,
        Case::KernelShiftModular,
        Case::RComposite,
        Case::MuhatComposite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Case::Eta => "eta",
            Case::ThetaElliptic => "theta_elliptic",
            Case::ThetaModular => "theta_modular",
            Case::MuhatElliptic => "muhat_elliptic",
            Case::MuhatModular => "muhat_modular",
            Case::RProps => "R_props",
            Case::RMordell => "R_mordell",
            Case::RDissection => "R_dissection",
            Case::AtDecomposition => "AT_decomposition",
            Case::KernelSum => "prop_3_1",
            Case::KernelDual => "prop_3_2",
            Case::KernelZeroModular => "prop_4_1",
            Case::KernelShiftModular => "prop_4_2",
            Case::RComposite => "R_composite",
            Case::MuhatComposite => "muhat_composite",
        }
    }

    /// Tolerance used when none is given.
    pub fn default_tolerance(self) -> f64 {
        match self {
            Case::ThetaElliptic => 1e-12,
            Case::KernelShiftModular => 1e-7,
            _ => 1e-8,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case {
    type Err = MockError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Case::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| MockError::Domain(format!("unknown case {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub trial: usize,
    pub inputs: String,
    pub lhs: Option<[f64; 2]>,
    pub rhs: Option<[f64; 2]>,
    pub rel_err: Option<f64>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub case: Case,
    pub seed: u64,
    pub trials: usize,
    pub checks: usize,
    pub tolerance: f64,
    pub max_rel_err: f64,
    pub passed: bool,
    pub failures: Vec<Failure>,
}

/// Runs `trials` randomized checks of one law with [`DEFAULT_SEED`].
pub fn verify_transformation(case: Case, trials: usize, tolerance: f64) -> Report {
    verify_transformation_seeded(case, trials, tolerance, DEFAULT_SEED)
}

/// Same as [`verify_transformation`] with an explicit seed; each trial draws from
/// its own generator keyed by `(seed, case, trial)`, so results do not depend on scheduling.
pub fn verify_transformation_seeded(case: Case, trials: usize, tolerance: f64, seed: u64) -> Report {
    let case_index = Case::ALL.iter().position(|&c| c == case).unwrap_or(0) as u64;
    let outcomes: Vec<(usize, String, Result<Vec<Sides>, MockError>)> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(case_index << 32 | trial as u64);
            let (inputs, result) = run_trial(case, &mut rng);
            (trial, inputs, result)
        })
        .collect();

    let mut max_rel_err: f64 = 0.0;
    let mut checks = 0;
    let mut failures = Vec::new();
    for (trial, inputs, result) in outcomes {
        match result {
            Ok(sides) => {
                for (lhs, rhs) in sides {
                    checks += 1;
                    let err = rel_err(lhs, rhs);
                    max_rel_err = max_rel_err.max(err);
                    if !(err <= tolerance) {
                        failures.push(Failure {
                            trial,
                            inputs: inputs.clone(),
                            lhs: Some([lhs.re, lhs.im]),
                            rhs: Some([rhs.re, rhs.im]),
                            rel_err: err.is_finite().then_some(err),
                            error: None,
                        });
                    }
                }
            }
            Err(e) => {
                max_rel_err = f64::INFINITY;
                failures.push(Failure {
                    trial,
                    inputs,
                    lhs: None,
                    rhs: None,
                    rel_err: None,
                    error: Some(e.to_string()),
                });
            }
        }
    }
    Report {
        case,
        seed,
        trials,
        checks,
        tolerance,
        max_rel_err,
        passed: failures.is_empty() && checks > 0,
        failures,
    }
}

fn rel_err(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        let e = (a - b).norm() / scale;
        if e.is_nan() {
            f64::INFINITY
        } else {
            e
        }
    }
}

struct Sampler<'a> {
    rng: &'a mut ChaCha8Rng,
}

impl Sampler<'_> {
    fn z(&mut self) -> Complex64 {
        Complex64::new(self.rng.gen_range(0.2..=0.9), self.rng.gen_range(-0.4..=0.4))
    }

    fn hk(&mut self) -> (i64, i64) {
        let k = self.rng.gen_range(1..=MAX_K);
        loop {
            let h = self.rng.gen_range(0..k);
            if h.gcd(&k) == 1 {
                return (h, k);
            }
        }
    }

    fn t_mod(&mut self) -> u32 {
        2 * self.rng.gen_range(0..=(MAX_T - 1) / 2) + 1
    }

    fn shift(&mut self, t_mod: u32, nonzero: bool) -> i64 {
        let half = (t_mod as i64 - 1) / 2;
        loop {
            let t = self.rng.gen_range(-half..=half);
            if !nonzero || t != 0 {
                return t;
            }
        }
    }

    fn disc(&mut self, radius: f64) -> Complex64 {
        let r = radius * self.rng.gen::<f64>().sqrt();
        Complex64::from_polar(r, self.rng.gen_range(0.0..2.0 * PI))
    }

    /// Point with `|u| ≤ 0.2` at distance `≥ 0.05` from `ℤ + τℤ`.
    fn off_lattice(&mut self, tau: Complex64) -> Complex64 {
        loop {
            let u = self.disc(U_MAX);
            if lattice_distance(u, tau) >= U_MARGIN {
                return u;
            }
        }
    }

    fn point(&mut self, with_hk: bool) -> EvaluationPoint {
        let z = self.z();
        let (h, k) = if with_hk { self.hk() } else { (0, 1) };
        EvaluationPoint { u: Complex64::new(0.0, 0.0), v: Complex64::new(0.0, 0.0), z, h, k }
    }
}

fn run_trial(case: Case, rng: &mut ChaCha8Rng) -> (String, Result<Vec<Sides>, MockError>) {
    let mut s = Sampler { rng };
    let one = |r: Result<Sides, MockError>| r.map(|x| vec![x]);
    match case {
        Case::Eta => {
            let p = s.point(true);
            (fmt_point(&p), one(laws::eta_modular(&p)))
        }
        Case::ThetaElliptic => {
            let mut p = s.point(true);
            p.v = s.disc(U_MAX);
            let n = s.rng.gen_range(-2..=2);
            (format!("{} n={n}", fmt_point(&p)), laws::theta_elliptic(&p, n))
        }
        Case::ThetaModular => {
            let mut p = s.point(true);
            p.v = s.disc(U_MAX);
            (fmt_point(&p), laws::theta_modular(&p))
        }
        Case::MuhatElliptic => {
            let mut p = s.point(false);
            let tau = Complex64::i() * p.z;
            p.u = s.off_lattice(tau);
            p.v = s.off_lattice(tau);
            let shift = [0; 4].map(|_| s.rng.gen_range(-1..=1));
            (format!("{} shift={shift:?}", fmt_point(&p)), one(laws::muhat_elliptic(&p, shift)))
        }
        Case::MuhatModular => {
            let mut p = s.point(true);
            let tp = dual(&p);
            p.u = s.off_lattice(tp);
            p.v = s.off_lattice(tp);
            (fmt_point(&p), one(laws::muhat_modular(&p)))
        }
        Case::RProps => {
            let mut p = s.point(true);
            p.u = s.disc(0.5);
            (fmt_point(&p), laws::r_props(&p))
        }
        Case::RMordell => {
            let mut p = s.point(false);
            p.u = s.disc(U_MAX);
            (fmt_point(&p), one(laws::r_mordell(&p)))
        }
        Case::RDissection => {
            let mut p = s.point(false);
            p.u = s.disc(0.5);
            let n = s.rng.gen_range(2..=3);
            (format!("{} n={n}", fmt_point(&p)), one(laws::r_dissection(&p, n)))
        }
        Case::AtDecomposition => {
            let mut p = s.point(true);
            let t_mod = s.t_mod();
            p.u = scaled_u(&mut s, t_mod, p.tau());
            p.v = s.off_lattice(p.tau());
            (format!("{} T={t_mod}", fmt_point(&p)), laws::at_decomposition(t_mod, &p))
        }
        Case::KernelSum => {
            let mut p = s.point(true);
            let t_mod = s.t_mod();
            p.u = scaled_u(&mut s, t_mod, p.tau());
            (format!("{} T={t_mod}", fmt_point(&p)), laws::kernel_sum(t_mod, &p))
        }
        Case::KernelDual => {
            let mut p = s.point(true);
            let t_mod = s.t_mod();
            p.u = scaled_u(&mut s, t_mod, p.tau());
            (format!("{} T={t_mod}", fmt_point(&p)), one(laws::kernel_dual(t_mod, &p)))
        }
        Case::KernelZeroModular => {
            let mut p = s.point(true);
            let t_mod = s.t_mod();
            p.u = scaled_u(&mut s, t_mod, p.tau());
            (format!("{} T={t_mod}", fmt_point(&p)), one(laws::kernel_zero_modular(t_mod, &p)))
        }
        Case::KernelShiftModular => {
            let mut p = s.point(true);
            let t_mod = 2 * s.rng.gen_range(1..=(MAX_T - 1) / 2) + 1;
            let t = s.shift(t_mod, true);
            p.u = scaled_u(&mut s, t_mod, p.tau());
            (format!("{} T={t_mod} t={t}", fmt_point(&p)), one(laws::kernel_shift_modular(t_mod, t, &p)))
        }
        Case::RComposite => {
            let mut p = s.point(true);
            let t_mod = s.t_mod();
            let t = s.shift(t_mod, false);
            p.u = s.disc(U_MAX);
            (format!("{} T={t_mod} t={t}", fmt_point(&p)), one(laws::r_composite(t_mod, t, &p)))
        }
        Case::MuhatComposite => {
            let mut p = s.point(true);
            let t_mod = 2 * s.rng.gen_range(1..=(MAX_T - 1) / 2) + 1;
            let t = s.shift(t_mod, true);
            p.u = s.off_lattice(p.tau());
            (format!("{} T={t_mod} t={t}", fmt_point(&p)), one(laws::muhat_composite(t_mod, t, &p)))
        }
    }
}

/// Kernel variable `u = u₀/T` with `u₀` drawn off the lattice `ℤ + Tτℤ`, so that
/// the Appell argument `Tu` stays clear of its poles.
fn scaled_u(s: &mut Sampler<'_>, t_mod: u32, tau: Complex64) -> Complex64 {
    let tf = t_mod as f64;
    s.off_lattice(tf * tau) / tf
}

fn dual(p: &EvaluationPoint) -> Complex64 {
    let (inv, _) = unitarith::mod_inverse_pair(p.h, p.k).unwrap_or((0, 0));
    (Complex64::new(inv as f64, 0.0) + Complex64::i() / p.z) / p.k as f64
}

fn fmt_point(p: &EvaluationPoint) -> String {
    format!(
        "u={:.17e}{:+.17e}i v={:.17e}{:+.17e}i z={:.17e}{:+.17e}i h={} k={}",
        p.u.re, p.u.im, p.v.re, p.v.im, p.z.re, p.z.im, p.h, p.k
    )
}
