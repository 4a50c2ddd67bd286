use asymp::{
    garvan_scan, mordell_beta, prop56_expansion_check, theorem_a_main, theorem_b_difference_leading,
    theorem_b_leading, AsympError, AsymptoticQuery, THEOREM_A_PREC,
};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use qexact::{moment_table, spt_oracle};

fn main_term(t: u32, r: u32, n: u64) -> asymp::TermBreakdown {
    theorem_a_main(&AsymptoticQuery::new(t, r, n).unwrap(), THEOREM_A_PREC).unwrap()
}

#[test]
fn no_mordell_part_below_five() {
    for t in [1, 3] {
        let b = main_term(t, 2, 400);
        assert!(b.mordell_terms.is_empty());
        assert!(b.mordell_part.is_zero());
    }
}

#[test]
fn relative_error_improves_with_n() {
    let table = moment_table(1, 2, 1000).unwrap();
    let e250 = main_term(1, 2, 250).relative_error(table.value(250));
    let e1000 = main_term(1, 2, 1000).relative_error(table.value(1000));
    assert!(e1000 < e250, "{e1000} vs {e250}");
    assert!(e1000 < 1e-20);
}

#[test]
fn reference_values_at_four_hundred() {
    // independent multiprecision evaluation of the same main term
    let b = main_term(5, 2, 400);
    let mu = b.mu_part.to_string_radix(10, Some(40));
    assert!(mu.starts_with("4953744878425989771005.961976866462"), "{mu}");
    let mord = b.mordell_part.to_f64();
    assert!((mord / 1455844382212.943444093015 - 1.0).abs() < 1e-15);
    assert!(b.dropped_terms > 0);
    let table = moment_table(5, 2, 400).unwrap();
    let e = b.relative_error(table.value(400));
    assert!((e / 1.0284e-21 - 1.0).abs() < 1e-3, "{e}");
}

#[test]
fn first_modulus_dominates() {
    let b = main_term(1, 2, 1000);
    let k1: f64 = b.mu_terms.iter().filter(|t| t.k == 1).map(|t| t.value).sum();
    assert!(k1 / b.mu_part.to_f64() > 0.99);
}

#[test]
fn later_moduli_stay_below_bessel_envelope() {
    let n = 900u64;
    let full = main_term(3, 2, n);
    for cap in [5u32, 10, 20] {
        let q = AsymptoticQuery::new(3, 2, n).unwrap().with_k_cap(cap);
        let part = theorem_a_main(&q, THEOREM_A_PREC).unwrap();
        let change = (full.mu_part.to_f64() - part.mu_part.to_f64()).abs();
        let envelope = (std::f64::consts::PI * ((24 * n - 1) as f64).sqrt() / (6.0 * (cap + 1) as f64)).exp();
        assert!(change < envelope, "cap={cap}: {change} vs {envelope}");
    }
}

#[test]
fn leading_term_matches_first_bessel_term() {
    let dev = |n: u64| {
        let b = main_term(1, 4, n);
        let t = b.mu_terms.iter().find(|t| t.k == 1 && t.a == 0 && t.b == 0 && t.c == 2).unwrap();
        (t.value / theorem_b_leading(4, n) - 1.0).abs()
    };
    let (d400, d1600) = (dev(400), dev(1600));
    assert!(d400 < 3.0 / 20.0);
    assert!(d1600 < 0.6 * d400, "{d1600} vs {d400}");
}

#[test]
fn mordell_terms_sum_to_part() {
    let b = main_term(7, 2, 300);
    let s: f64 = b.mordell_terms.iter().map(|t| t.value[0]).sum();
    assert!((s - b.mordell_part.to_f64()).abs() <= 1e-12 * b.mordell_part.to_f64().abs());
    assert!(b.imag_part.to_f64().abs() <= 1e-30 * b.mu_part.to_f64());
}

#[test]
fn precision_is_stable() {
    let a = main_term(5, 2, 300);
    let q = AsymptoticQuery::new(5, 2, 300).unwrap();
    let b = theorem_a_main(&q, 256).unwrap();
    let d = (a.total() - b.total()).abs().to_f64() / a.total_f64();
    assert!(d < 1e-50, "{d}");
}

#[test]
fn gate_is_exact() {
    // T = 3: the two boundary cases sit exactly on β = 0
    assert_eq!(mordell_beta(3, 1, 0), Ratio::from_integer(0));
    assert_eq!(mordell_beta(3, 3, 1), Ratio::from_integer(0));
    assert!(mordell_beta(5, 5, 1) < Ratio::from_integer(0));
    assert!(mordell_beta(5, 5, 2) > Ratio::from_integer(0));
    for t in (1..24).step_by(2) {
        for rho in -(t as i64 - 1) / 2..=(t as i64 - 1) / 2 {
            assert!(mordell_beta(t, 1, rho) <= Ratio::new(1, 12));
        }
    }
}

#[test]
fn query_validation() {
    assert_eq!(AsymptoticQuery::new(25, 2, 10), Err(AsympError::InvalidT(25)));
    assert_eq!(AsymptoticQuery::new(4, 2, 10), Err(AsympError::InvalidT(4)));
    assert_eq!(AsymptoticQuery::new(5, 3, 10), Err(AsympError::InvalidR(3)));
    assert_eq!(AsymptoticQuery::new(5, 2, 0), Err(AsympError::InvalidN));
    assert_eq!(AsymptoticQuery::new(5, 2, 99).unwrap().k_cap, 9);
}

#[test]
fn leading_term_for_second_moment() {
    for n in [10u64, 250, 2000] {
        let want = 3f64.sqrt() / 6.0 * (std::f64::consts::PI * (2.0 * n as f64 / 3.0).sqrt()).exp();
        assert!((theorem_b_leading(2, n) / want - 1.0).abs() < 1e-14);
    }
}

#[test]
fn leading_ratio_tends_to_one() {
    let table = moment_table(1, 2, 2000).unwrap();
    let dist: Vec<f64> = [250usize, 500, 1000, 2000]
        .iter()
        .map(|&n| (table.value(n).to_f64().unwrap() / theorem_b_leading(2, n as u64) - 1.0).abs())
        .collect();
    assert!(dist.windows(2).all(|w| w[1] < w[0]), "{dist:?}");
}

#[test]
fn difference_term_tends_to_exact_difference() {
    let (m1, m3) = (moment_table(1, 2, 1000).unwrap(), moment_table(3, 2, 1000).unwrap());
    let ratio = |n: usize| (m1.value(n) - m3.value(n)).to_f64().unwrap() / theorem_b_difference_leading(2, n as u64);
    // the stated leading term overshoots by exactly π: the exact ratio tends to 1/π
    let pi = std::f64::consts::PI;
    let (a, b) = (pi * ratio(250), pi * ratio(1000));
    assert!((b - 1.0).abs() < (a - 1.0).abs() && (b - 1.0).abs() < 0.005, "{a} {b}");
    // m_1^2 − m_3^2 = 2 spt(n), enumerated independently
    assert_eq!(m1.value(80) - m3.value(80), BigInt::from(2) * spt_oracle(80).unwrap());
}

#[test]
fn expansion_discrepancy_shrinks() {
    for t in [1u32, 5] {
        let d: Vec<_> = [0.5, 0.25, 0.125]
            .iter()
            .map(|&z| prop56_expansion_check(t, 2, 0, 1, Complex64::new(z, 0.0), None, 192).unwrap())
            .collect();
        assert!(d[1].discrepancy < d[0].discrepancy && d[2].discrepancy < d[1].discrepancy, "T={t}");
        if t == 5 {
            assert!(d[2].discrepancy_without_mordell > d[2].discrepancy);
        } else {
            assert_eq!(d[2].mordell_summand, [0.0, 0.0]);
        }
    }
}

#[test]
fn expansion_at_nontrivial_cusp() {
    let a = prop56_expansion_check(5, 2, 2, 5, Complex64::new(0.25, 0.0), None, 192).unwrap();
    let b = prop56_expansion_check(5, 2, 2, 5, Complex64::new(0.125, 0.0), None, 192).unwrap();
    assert!(b.discrepancy < a.discrepancy);
    assert!(b.discrepancy < 1e-3 * b.discrepancy_without_mordell);
}

#[test]
fn expansion_checks_hypothesis() {
    let e = prop56_expansion_check(5, 2, 2, 5, Complex64::new(0.5, 0.0), None, 192).unwrap_err();
    assert!(matches!(e, AsympError::Hypothesis(_)));
    assert!(prop56_expansion_check(5, 2, 2, 4, Complex64::new(0.1, 0.0), None, 192).is_err());
}

#[test]
fn scan_for_rank_and_crank() {
    let r = garvan_scan(3, 2, 1, 200).unwrap();
    assert!(r.violations.is_empty());
    assert_eq!(r.n0, Some(1));
    assert!(garvan_scan(1, 2, 1, 10).is_err());
    assert!(garvan_scan(5, 3, 1, 10).is_err());
}

#[test]
fn scan_reports_last_violation() {
    let r = garvan_scan(5, 2, 1, 300).unwrap();
    assert_eq!(r.n0, Some(r.violations.last().map_or(1, |v| v + 1)));
    assert!(r.n0.unwrap() <= 50);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn difference_leading_is_positive(h in 1u32..8, n in 1u64..5000) {
        prop_assert!(theorem_b_difference_leading(2 * h, n) > 0.0);
    }

    #[test]
    fn leading_is_positive(h in 1u32..8, n in 1u64..5000) {
        prop_assert!(theorem_b_leading(2 * h, n) > 0.0);
    }
}
