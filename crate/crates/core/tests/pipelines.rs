//! Cross-module closures: each engine's output fed through another route.

use hodge_core::exact::{factorial, Gaussian, Rational};
use hodge_core::hurwitz::{self, hurwitz_table, Method};
use hodge_core::identities;
use hodge_core::mv;
use hodge_core::partitions::{partitions_up_to, Partition};
use num_traits::Zero;

#[test]
fn lambda_g_limit_matches_multinomial_assembly() {
    // l ≤ 5 needs R through λ^9 to leave six orders after dividing out
    let r = mv::build_r(5, 9).unwrap();
    for mu in partitions_up_to(5) {
        let limit = mv::limit_lambda_g(&r, &mu).unwrap();
        let assembled = identities::lambda_g_series_from_values(&mu, 6).unwrap();
        assert_eq!(limit.mismatches(&assembled, 6).unwrap(), vec![], "μ = {mu}");
    }
}

#[test]
fn elsv_inversion_agrees_with_the_limit_series() {
    let table = hurwitz_table(4, 2, &[Method::Oracle]).unwrap();
    let r = mv::build_r(4, 6).unwrap();
    let limit = mv::limit_elsv(&r, 6).unwrap();
    let mut checked = 0;
    for entry in hurwitz::elsv_invert(&table, Method::Oracle) {
        if entry.mu.len() != 1 || entry.g > 2 {
            continue;
        }
        let rr = hurwitz::branch_count(entry.g, &entry.mu) as i64;
        if rr > 6 {
            continue;
        }
        let got = limit.get(&entry.mu).unwrap().scalar_coeff(rr).unwrap();
        assert_eq!(got, Gaussian::from(entry.i.clone()) * Gaussian::i_pow(rr), "g = {}, μ = {}", entry.g, entry.mu);
        checked += 1;
    }
    assert!(checked >= 6);
}

#[test]
fn genus_one_linear_hodge_integrals() {
    // ∫_{M_{1,1}} (1 - λ_1)/(1 - dψ) = (d - 1)/24
    let table = hurwitz_table(4, 1, &[Method::Burnside]).unwrap();
    for entry in hurwitz::elsv_invert(&table, Method::Burnside) {
        if entry.g == 1 && entry.mu.len() == 1 {
            let d = entry.mu.weight() as i64;
            assert_eq!(entry.integral, Rational::new((d - 1).into(), 24.into()), "d = {d}");
        }
    }
}

#[test]
fn derivative_identity_recovers_closed_forms() {
    let ex = mv::ddd_extraction(3, 8).unwrap();
    for g in 2..=3 {
        assert_eq!(ex.cubic_integral(g).unwrap(), identities::cubic_lambda(g).unwrap());
    }
    for g in 1..=3 {
        assert_eq!(ex.g_minus_1[&g].re, -identities::g_minus_1_value(g).unwrap());
        assert!(ex.g_minus_1[&g].im.is_zero());
    }
}

#[test]
fn ddd_polynomials_match_f_expansion() {
    let ex = mv::ddd_extraction(4, 10).unwrap();
    for g in 1..=4 {
        assert_eq!(ex.polynomials[&g], identities::ddd_polynomial_from_f(g).unwrap(), "g = {g}");
    }
}

#[test]
fn burnside_and_cut_join_generate_the_same_phi() {
    let a = hurwitz::burnside_phi(5, 7).unwrap();
    let b = hurwitz::cutjoin_phi(5, 7).unwrap();
    assert!(a.mismatches(&b, 7).unwrap().is_empty());
    assert!(hurwitz::phi_nonnegative(&a));
}

#[test]
fn phi_coefficients_are_hurwitz_numbers_over_r_factorial() {
    let phi = hurwitz::burnside_phi(4, 6).unwrap();
    for (g, parts) in [(0usize, vec![3usize]), (1, vec![2]), (0, vec![2, 1]), (1, vec![1, 1])] {
        let mu = Partition::new(parts).unwrap();
        let r = hurwitz::branch_count(g, &mu);
        let h = hurwitz::oracle_hurwitz(g, &mu).unwrap();
        let want = h / Rational::from_integer(factorial(r));
        assert_eq!(phi.get(&mu).unwrap().scalar_coeff(r as i64).unwrap(), Gaussian::from(want));
    }
}
