use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use proptest::prelude::*;
use unitarith::{
    alpha, chi, jacobi_symbol, kloosterman_k, kloosterman_partial, mod_inverse_pair, rho_t,
    u_h, u_h_star, u_mu, u_theta_star, TransformContext,
};

fn eta(tau: Complex64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    let q = (2.0 * PI * i * tau).exp();
    let mut s = Complex64::new(1.0, 0.0);
    for n in 1..200i32 {
        let a = q.powi(n * (3 * n - 1) / 2);
        let b = q.powi(n * (3 * n + 1) / 2);
        let sign = if n % 2 == 1 { -1.0 } else { 1.0 };
        s += (a + b) * sign;
        if a.norm() < 1e-300 {
            break;
        }
    }
    (2.0 * PI * i * tau / 24.0).exp() * s
}

// Selberg's finite formula for Rademacher's A_k(n), written independently of χ.
fn selberg(k: i64, n: i64) -> f64 {
    let mut s = 0.0;
    for l in 0..2 * k {
        if ((3 * l * l + l) / 2 + n).rem_euclid(k) == 0 {
            let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
            s += sign * (PI * (6 * l + 1) as f64 / (6 * k) as f64).cos();
        }
    }
    (k as f64 / 3.0).sqrt() * s
}

fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
    (1i64..40).prop_flat_map(|k| (0..k, Just(k))).prop_filter("coprime", |(h, k)| h.gcd(k) == 1)
}

#[test]
fn kloosterman_matches_selberg_formula() {
    for k in 1..=40 {
        for n in 0..60 {
            let v = kloosterman_k(k, n).value;
            assert!((v.re - selberg(k, n)).abs() < 1e-11, "k={k} n={n}");
            assert!(v.im.abs() < 1e-11, "k={k} n={n}");
        }
    }
}

#[test]
fn kloosterman_trivial_modulus_and_period() {
    for n in -5..30 {
        let v = kloosterman_k(1, n).value;
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }
    for k in [2, 6, 11, 24] {
        for n in 0..10 {
            assert_eq!(kloosterman_k(k, n).value, kloosterman_k(k, n + k).value);
        }
    }
}

#[test]
fn kloosterman_two_evaluated_directly() {
    // h = 1, [−1]_2 = 1, χ(1,2) from the η law; summand −e^{3πi/4}·e^{0}/χ
    let direct = -Complex64::from_polar(1.0, 0.75 * PI) / chi(1, 2).unwrap().to_complex();
    assert!((kloosterman_k(2, 0).value - direct).norm() < 1e-14);
}

#[test]
fn eta_law_holds_at_sample_points() {
    let i = Complex64::new(0.0, 1.0);
    let zs = [
        Complex64::new(0.6, 0.1),
        Complex64::new(0.9, -0.3),
        Complex64::new(0.5, 0.4),
        Complex64::new(0.75, 0.0),
    ];
    let mut checked = 0;
    for k in 1..=6i64 {
        for h in 0..k {
            if h.gcd(&k) != 1 {
                continue;
            }
            for z in zs {
                let (inv, _) = mod_inverse_pair(h, k).unwrap();
                let lhs = eta((Complex64::new(h as f64, 0.0) + i * z) / k as f64);
                let rhs = (i / z).sqrt()
                    * chi(h, k).unwrap().to_complex()
                    * eta((Complex64::new(inv as f64, 0.0) + i / z) / k as f64);
                assert!((lhs - rhs).norm() <= 1e-9 * lhs.norm(), "h={h} k={k} z={z}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 20);
}

#[test]
fn unit_factors_match_reference_values() {
    // (T, t, l, h, k) → U_H*, reference from an independent multiprecision evaluation
    let uhs = [
        ((5, 1, 0, 1, 2), (-1.9021130325903071, 0.0)),
        ((5, 2, 1, 3, 10), (0.77051324277578923, 0.63742398974868971)),
        ((7, -3, 2, 4, 9), (-1.5530900353549892, 0.18153019030912486)),
        ((3, 1, 0, 2, 3), (-0.5, -0.86602540378443865)),
        ((9, 4, 1, 5, 6), (-0.058144828910475829, -0.99830815827126821)),
        ((5, -1, 0, 0, 1), (1.1755705045849463, 0.0)),
    ];
    for ((tm, t, l, h, k), (re, im)) in uhs {
        let v = u_h_star(tm, t, l, h, k).unwrap().to_complex();
        assert!((v - Complex64::new(re, im)).norm() < 1e-14, "{:?}", (tm, t, l, h, k));
    }
    // (T, t, h, k) → (U_μ, U_θ*)
    let pairs = [
        ((5, 1, 1, 2), (-0.79015501237569037, 0.61290705365297649), (-0.7279071440580286, -1.7573232993331589)),
        ((7, -2, 3, 8), (-0.41209861232042545, -0.91113925045712946), (-0.45390739911121977, 1.496332162637934)),
        ((3, 1, 2, 5), (-0.5735764363510461, -0.81915204428899179), (-1.543268569769601, -0.7863346117024802)),
    ];
    for ((tm, t, h, k), mu, ts) in pairs {
        let a = u_mu(tm, t, h, k).unwrap().to_complex();
        let b = u_theta_star(tm, t, h, k).unwrap().to_complex();
        assert!((a - Complex64::new(mu.0, mu.1)).norm() < 1e-14);
        assert!((b - Complex64::new(ts.0, ts.1)).norm() < 1e-14);
    }
}

#[test]
fn partial_sum_by_direct_loop() {
    let (tm, k, n) = (5, 2, 3);
    for t in [-2i64, -1, 1, 2] {
        for varrho in -2..=2 {
            let v = kloosterman_partial(tm, t, varrho, 0, k, n).unwrap();
            // only h = 1 is coprime to 2; γ_Co = 5
            let mut direct = Complex64::new(0.0, 0.0);
            if rho_t(tm, 5 * t) == varrho {
                direct = Complex64::from_polar(1.0, -2.0 * PI * n as f64 / k as f64)
                    * u_h_star(tm, t, 0, 1, k).unwrap().to_complex();
            }
            assert!((v.value - direct).norm() < 1e-14);
            assert!(v.value.norm() <= v.terms.iter().map(|(_, u)| u.scale().abs()).sum::<f64>() + 1e-12);
        }
    }
}

#[test]
fn alpha_stays_inside_half_unit() {
    let half = Ratio::new(1, 2);
    for tm in (1..=23).step_by(2) {
        for k in 1..=40 {
            for t in -(tm - 1) / 2..=(tm - 1) / 2 {
                for l in 0..k {
                    let a = alpha(tm, t, l, k).unwrap();
                    assert!(a < half && a > -half, "T={tm} t={t} l={l} k={k}");
                }
            }
        }
    }
    assert!(alpha(5, 1, 3, 3).is_err());
}

proptest! {
    #[test]
    fn inverse_pair_satisfies_bezout((h, k) in coprime_pair()) {
        let (inv, beta) = mod_inverse_pair(h, k).unwrap();
        prop_assert!((0..k).contains(&inv));
        prop_assert_eq!(-h * inv - beta * k, 1);
    }

    #[test]
    fn jacobi_is_multiplicative(a in -200i64..200, b in -200i64..200, m in 0i64..60) {
        let n = 2 * m + 1;
        prop_assert_eq!(jacobi_symbol(a * b, n), jacobi_symbol(a, n) * jacobi_symbol(b, n));
    }

    #[test]
    fn rho_is_a_centred_residue(tm in (0i64..12).prop_map(|k| 2 * k + 1), x in -1000i64..1000) {
        let r = rho_t(tm, x);
        prop_assert!(r.abs() <= (tm - 1) / 2);
        prop_assert_eq!((x - r).rem_euclid(tm), 0);
        prop_assert_eq!(rho_t(tm, x + tm), r);
    }

    #[test]
    fn chi_is_unimodular((h, k) in coprime_pair()) {
        prop_assert!((chi(h, k).unwrap().to_complex().norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn mu_and_h_units_are_unimodular(
        tm in (0i64..8).prop_map(|k| 2 * k + 1),
        (h, k) in coprime_pair(),
        ts in 0.0f64..1.0,
        ls in 0.0f64..1.0,
    ) {
        let half = (tm - 1) / 2;
        let t = (ts * (2 * half + 1) as f64) as i64 - half;
        let l = ((ls * k as f64) as i64).min(k - 1);
        prop_assert!((u_mu(tm, t, h, k).unwrap().to_complex().norm() - 1.0).abs() < 1e-14);
        prop_assert!((u_h(tm, t, l, h, k).unwrap().to_complex().norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn kloosterman_bounded_by_totient(k in 1i64..60, n in -100i64..100) {
        let v = kloosterman_k(k, n);
        prop_assert!(v.value.norm() <= v.terms.len() as f64 + 1e-12);
    }

    #[test]
    fn context_factors_are_deterministic(
        tm in (1i64..6).prop_map(|k| 2 * k + 1),
        (h, k) in coprime_pair(),
    ) {
        let ctx = TransformContext::new(tm, 1, 0, h, k).unwrap();
        prop_assert_eq!(ctx.factors().unwrap(), ctx.factors().unwrap());
        prop_assert!(ctx.rho().abs() <= (tm - 1) / 2);
    }
}
