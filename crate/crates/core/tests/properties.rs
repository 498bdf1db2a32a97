use hodge_core::exact::{format_rational, parse_rational, LambdaSeries, Rational};
use hodge_core::partitions::{character, partitions_of, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1..=i64::MAX).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..8, 0..6).prop_map(Partition::from_parts)
}

fn real_series() -> impl Strategy<Value = LambdaSeries> {
    (-2i64..2, prop::collection::vec(-20i64..20, 1..6)).prop_map(|(min, cs)| {
        LambdaSeries::from_rationals(min, cs.into_iter().map(|c| Rational::from_integer(c.into())).collect())
    })
}

proptest! {
    #[test]
    fn rational_text_round_trips(q in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn partition_string_round_trips(mu in partition()) {
        prop_assert_eq!(Partition::parse(&mu.canonical_string()).unwrap(), mu);
    }

    #[test]
    fn conjugation_is_an_involution(mu in partition()) {
        prop_assert_eq!(mu.conjugate().conjugate(), mu.clone());
        prop_assert_eq!(mu.conjugate().weight(), mu.weight());
        prop_assert_eq!(mu.conjugate().kappa(), -mu.kappa());
    }

    #[test]
    fn series_product_commutes(a in real_series(), b in real_series()) {
        let (ab, ba) = (a.mul(&b), b.mul(&a));
        prop_assert_eq!(ab.order(), ba.order());
        prop_assert!(ab.mismatches(&ba, ab.order()).unwrap().is_empty());
    }

    #[test]
    fn exp_inverts_log(cs in prop::collection::vec(-5i64..5, 1..5)) {
        // 1 + λ·(...) so log is defined
        let mut v = vec![Rational::from_integer(1.into())];
        v.extend(cs.into_iter().map(|c| Rational::from_integer(c.into())));
        let s = LambdaSeries::from_rationals(0, v);
        let back = s.log().unwrap().exp().unwrap();
        prop_assert!(back.mismatches(&s, s.order()).unwrap().is_empty());
    }
}

#[test]
fn column_orthogonality_up_to_seven() {
    // Σ_ν χ^ν(μ) χ^ν(ρ) = δ_{μρ} z_μ
    for n in 1..=7 {
        let ps = partitions_of(n);
        for mu in &ps {
            for rho in &ps {
                let s: i64 = ps.iter().map(|nu| character(nu, mu).unwrap() * character(nu, rho).unwrap()).sum();
                let want = if mu == rho { mu.z() as i64 } else { 0 };
                assert_eq!(s, want, "n = {n}, μ = {mu}, ρ = {rho}");
            }
        }
    }
}
