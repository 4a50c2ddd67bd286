use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use qexact::{moment_generating_eval, moment_table};
use mockforms::laws;
use mockforms::{
    eta, moment_kernel, moment_kernel_appell, taylor_moments, theta, theta_product,
    verify_transformation, verify_transformation_seeded, zwegers_a, zwegers_a_t, c_kernel,
    c_kernel_eta_quotient, Case, EvaluationPoint, MockError,
};

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm())
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `τ` with `e^{2πiτ} = q`.
fn tau_of(q: Complex64) -> Complex64 {
    q.ln() / (2.0 * PI * Complex64::i())
}

#[test]
fn theta_vanishes_at_origin() {
    for z in [c(0.3, 0.0), c(0.7, -0.2), c(1.5, 0.4)] {
        assert!(theta(c(0.0, 0.0), z).unwrap().norm() < 1e-15);
    }
}

#[test]
fn theta_series_matches_product() {
    let mut x = 0.1234f64;
    let mut next = || {
        x = (x * 9301.0 + 0.49297).fract();
        x
    };
    for _ in 0..20 {
        let v = c(next() - 0.5, 0.6 * (next() - 0.5));
        let z = c(0.2 + 0.8 * next(), 0.8 * (next() - 0.5));
        let a = theta(v, z).unwrap();
        let b = theta_product(v, z).unwrap();
        assert!(rel(a, b) <= 1e-12, "v={v} z={z}");
    }
}

#[test]
fn eta_at_i_is_positive_real() {
    let v = eta(c(1.0, 0.0)).unwrap();
    assert!(v.re > 0.0 && v.im.abs() < 1e-16);
    // η(i) = Γ(1/4)/(2π^{3/4})
    assert!((v.re - 0.768_225_422_326_056_7).abs() < 1e-15);
}

#[test]
fn non_positive_real_part_is_rejected() {
    assert_eq!(eta(c(0.0, 1.0)).unwrap_err(), MockError::NonPositiveRealPart(0.0));
    assert!(theta(c(0.1, 0.0), c(-0.5, 0.0)).is_err());
}

#[test]
fn level_appell_sum_decomposes() {
    let i = Complex64::i();
    for t_mod in [1u32, 3, 5, 7] {
        for j in 0..20 {
            let s = j as f64;
            let z = c(0.3 + 0.03 * s, 0.02 * s - 0.2);
            let tau = i * z;
            let u = c(0.015 + 0.001 * s, 0.005) ;
            let v = c(0.1 - 0.01 * s, 0.07);
            let p = EvaluationPoint { u, v, z, h: 0, k: 1 };
            for (l, r) in laws::at_decomposition(t_mod, &p).unwrap() {
                assert!(rel(l, r) <= 1e-12, "T={t_mod} j={j}");
            }
            assert_eq!(zwegers_a_t(1, u, v, tau).unwrap(), zwegers_a(u, v, tau).unwrap());
        }
    }
}

#[test]
fn single_point_laws() {
    let p = EvaluationPoint { u: c(0.11, 0.05), v: c(-0.07, 0.13), z: c(0.6, 0.25), h: 0, k: 1 };
    let (l, r) = laws::r_props(&p).unwrap()[0];
    assert!(rel(l, r) < 1e-13);
    for n in [2, 3] {
        let (l, r) = laws::r_dissection(&p, n).unwrap();
        assert!(rel(l, r) <= 1e-9);
    }
    for shift in [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, -1, 1, 0], [-1, 0, 1, 1]] {
        let (l, r) = laws::muhat_elliptic(&p, shift).unwrap();
        assert!(rel(l, r) <= 1e-9, "{shift:?}");
    }
}

#[test]
fn kernel_forms_agree() {
    let tau = c(0.1, 0.4);
    let u = c(0.013, 0.004);
    for t_mod in [1u32, 3, 5, 7, 9] {
        let half = (t_mod as i64 - 1) / 2;
        let sum: Complex64 = (-half..=half).map(|t| c_kernel(t_mod, t, u, tau).unwrap()).sum();
        let direct = moment_kernel(t_mod, u, tau).unwrap();
        assert!(rel(sum, direct) <= 1e-12);
        assert!(rel(moment_kernel_appell(t_mod, u, tau).unwrap(), direct) <= 1e-12);
        let a = c_kernel(t_mod, 0, u, tau).unwrap();
        assert!(rel(a, c_kernel_eta_quotient(t_mod, u, tau).unwrap()) <= 1e-10);
    }
    assert!(c_kernel(4, 0, u, tau).is_err());
    assert!(c_kernel(5, 3, u, tau).is_err());
}

#[test]
fn taylor_coefficients_match_exact_moments() {
    let q = c(0.1, 0.0);
    let coeffs = taylor_moments(1, 6, tau_of(q), 0.15).unwrap();
    let scale = coeffs.iter().map(|x| x.norm()).fold(0.0, f64::max);
    for r in 0..=6u32 {
        if r % 2 == 1 {
            assert!(coeffs[r as usize].norm() <= 1e-9 * scale, "r={r}");
            continue;
        }
        let table = moment_table(1, r, 200).unwrap();
        let exact = moment_generating_eval(&table, q, 1e-30).unwrap().value;
        assert!(rel(coeffs[r as usize], exact) <= 1e-7, "r={r}");
    }
}

#[test]
fn taylor_coefficients_match_exact_moments_complex_q() {
    let q = c(0.05, 0.02);
    for t_mod in [1u32, 3, 5] {
        let coeffs = taylor_moments(t_mod, 4, tau_of(q), 0.15).unwrap();
        for r in [2u32, 4] {
            let table = moment_table(t_mod as i64, r, 200).unwrap();
            let exact = moment_generating_eval(&table, q, 1e-30).unwrap().value;
            assert!(rel(coeffs[r as usize], exact) <= 1e-8, "T={t_mod} r={r}");
        }
    }
}

#[test]
fn kernel_modular_laws_at_reference_points() {
    let p = EvaluationPoint { u: c(0.07, 0.02), v: c(0.0, 0.0), z: c(0.4, 0.0), h: 1, k: 2 };
    let (l, r) = laws::kernel_zero_modular(5, &p).unwrap();
    assert!(rel(l, r) <= 1e-8);
    let p = EvaluationPoint { h: 1, k: 3, ..p };
    let (l, r) = laws::kernel_shift_modular(5, 1, &p).unwrap();
    assert!(rel(l, r) <= 1e-7);
    assert!(laws::kernel_shift_modular(5, 0, &p).is_err());
}

#[test]
fn theta_elliptic_suite_is_tight() {
    let report = verify_transformation(Case::ThetaElliptic, 50, 1e-12);
    assert!(report.passed, "{report:?}");
}

#[test]
fn every_case_passes_its_default_tolerance() {
    for case in Case::ALL {
        let report = verify_transformation(case, 24, case.default_tolerance());
        assert!(report.passed, "{case}: {:?}", report.failures);
        assert!(report.checks >= 24);
    }
}

#[test]
fn reports_are_reproducible() {
    for case in [Case::MuhatModular, Case::KernelShiftModular] {
        let a = serde_json::to_string(&verify_transformation_seeded(case, 20, 1e-8, 7)).unwrap();
        let b = serde_json::to_string(&verify_transformation_seeded(case, 20, 1e-8, 7)).unwrap();
        assert_eq!(a, b);
        let c = serde_json::to_string(&verify_transformation_seeded(case, 20, 1e-8, 8)).unwrap();
        assert_ne!(a, c);
    }
}

#[test]
fn impossible_tolerance_is_reported() {
    let report = verify_transformation(Case::MuhatElliptic, 20, 0.0);
    assert!(!report.passed);
    assert!(report.failures.iter().all(|f| f.lhs.is_some() && f.rel_err.is_some()));
}

#[test]
fn case_names_round_trip() {
    for case in Case::ALL {
        assert_eq!(case.name().parse::<Case>().unwrap(), case);
        assert_eq!(serde_json::to_string(&case).unwrap(), format!("\"{}\"", case.name()));
    }
    assert!("nope".parse::<Case>().is_err());
}

#[test]
fn point_validation() {
    let p = EvaluationPoint { u: c(0.1, 0.0), v: c(0.0, 0.1), z: c(0.5, 0.1), h: 1, k: 4 };
    assert!(p.validate(true, false).is_ok());
    assert!(EvaluationPoint { h: 2, ..p }.validate(false, false).is_err());
    assert!(EvaluationPoint { z: c(-0.1, 0.0), ..p }.validate(false, false).is_err());
    assert!(EvaluationPoint { z: c(0.9, 0.9), ..p }.validate(true, false).is_err());
    assert!(EvaluationPoint { k: 3, ..p }.validate(true, true).is_ok());
    assert!(EvaluationPoint { k: 5, h: 1, ..p }.validate(true, true).is_err());
    assert!((p.q().norm() - (-2.0 * PI * 0.5 / 4.0).exp()).abs() < 1e-15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn theta_is_odd(vr in -0.5f64..0.5, vi in -0.3f64..0.3, zr in 0.2f64..1.5, zi in -0.5f64..0.5) {
        let (v, z) = (c(vr, vi), c(zr, zi));
        let a = theta(v, z).unwrap();
        let b = theta(-v, z).unwrap();
        prop_assert!((a + b).norm() <= 1e-13 * a.norm().max(1e-3));
    }

    #[test]
    fn theta_laws_compose(vr in -0.3f64..0.3, vi in -0.2f64..0.2, zr in 0.25f64..0.9, zi in -0.3f64..0.3, k in 1i64..6) {
        // elliptic shift by 1 and the modular law together reproduce the direct value
        let p = EvaluationPoint { u: c(0.0, 0.0), v: c(vr, vi), z: c(zr, zi), h: 1 % k, k };
        for (l, r) in laws::theta_modular(&p).unwrap() {
            prop_assert!(rel(l, r) <= 1e-10);
        }
    }

    #[test]
    fn eta_law_random(zr in 0.2f64..0.9, zi in -0.4f64..0.4, k in 1i64..7, hs in 0.0f64..1.0) {
        let h = (hs * k as f64) as i64 % k;
        prop_assume!(num_integer::Integer::gcd(&h, &k) == 1);
        let p = EvaluationPoint { u: c(0.0, 0.0), v: c(0.0, 0.0), z: c(zr, zi), h, k };
        let (l, r) = laws::eta_modular(&p).unwrap();
        prop_assert!(rel(l, r) <= 1e-12);
    }
}
