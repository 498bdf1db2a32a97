//! Closed forms for the headline Hodge integrals and the elementary identities
//! (Bernoulli numbers, power sums, binomial sums) their derivations rest on.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::{
    abs_bernoulli_even, bernoulli, bernoulli_by_series, binomial, eval_poly, factorial, format_rational, harmonic, int,
    sin_double_half, sinh_double_half, LambdaSeries, Rational,
};
use crate::partitions::Partition;
use crate::report::{rational_array, IdentityReport, Provenance};

fn q(n: i64) -> Rational {
    int(n)
}

fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

fn pow2(e: i64) -> Rational {
    if e >= 0 {
        big(&BigInt::from(2).pow(e as u32))
    } else {
        Rational::new(BigInt::one(), BigInt::from(2).pow((-e) as u32))
    }
}

/// `b_0 = 1`, `b_g = ((2^{2g-1}-1)/2^{2g-1}) |B_{2g}|/(2g)!`.
pub fn b_g(g: usize) -> Rational {
    if g == 0 {
        return Rational::one();
    }
    let p = pow2(2 * g as i64 - 1);
    (&p - Rational::one()) / p * abs_bernoulli_even(g) / big(&factorial(2 * g))
}

/// `(2g+n-3 choose k_1..k_n) b_g`: the `λ_g` integral `∫ ψ^k λ_g` over `M_{g,n}`.
pub fn lambda_g_value(g: usize, k: &[usize]) -> Result<Rational> {
    let n = k.len();
    if n == 0 || (g == 0 && n < 3) {
        return Err(Error::Dimension(format!("(g, n) = ({g}, {n}) is not stable")));
    }
    let dim = 2 * g + n - 3;
    if k.iter().sum::<usize>() != dim {
        return Err(Error::Dimension(format!(
            "dimension constraint violated: Σk = {} ≠ {dim}",
            k.iter().sum::<usize>()
        )));
    }
    let mut multinomial = factorial(dim);
    for &ki in k {
        multinomial /= factorial(ki);
    }
    Ok(big(&multinomial) * b_g(g))
}

/// `∫_{M_g} λ_{g-2}λ_{g-1}λ_g = |B_{2g-2}| |B_{2g}| / (2(2g-2)! (2g-2)(2g))`.
pub fn cubic_lambda(g: usize) -> Result<Rational> {
    if g < 2 {
        return Err(Error::Precondition("cubic λ integral needs g ≥ 2".into()));
    }
    let gi = g as i64;
    Ok(abs_bernoulli_even(g - 1) / q(2 * gi - 2) * abs_bernoulli_even(g)
        / q(2 * gi)
        / (q(2) * big(&factorial(2 * g - 2))))
}

/// `∫_{M_{g,1}} λ_{g-1}/(1-ψ_1)`
/// `= b_g H_{2g-1} - ½ Σ_{g_1+g_2=g, g_i>0} (2g_1-1)!(2g_2-1)!/(2g-1)! b_{g_1}b_{g_2}`.
pub fn g_minus_1_value(g: usize) -> Result<Rational> {
    if g == 0 {
        return Err(Error::Precondition("λ_{g-1} integral needs g ≥ 1".into()));
    }
    let mut conv = Rational::zero();
    for g1 in 1..g {
        let g2 = g - g1;
        conv += big(&(factorial(2 * g1 - 1) * factorial(2 * g2 - 1))) / big(&factorial(2 * g - 1)) * b_g(g1) * b_g(g2);
    }
    Ok(b_g(g) * harmonic(2 * g - 1) - conv / q(2))
}

/// `Σ_{i=1}^{d-1} i^m` by direct summation.
pub fn power_sum_direct(m: usize, d: usize) -> Rational {
    (1..d).map(|i| big(&BigInt::from(i).pow(m as u32))).fold(Rational::zero(), |a, b| a + b)
}

/// Coefficients, ascending in `d`, of `Σ_k C(m+1,k)/(m+1) B_k d^{m+1-k}`.
pub fn power_sum_polynomial(m: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); m + 2];
    for k in 0..=m {
        out[m + 1 - k] = big(&binomial(m + 1, k)) / q(m as i64 + 1) * bernoulli(k);
    }
    out
}

/// Exact `Σ_{i=1}^{d-1} i^m` as a polynomial in `d`, valid for every `m ≥ 0`.
///
/// For `m = 0` the closed form would give `d`; the sum is `d - 1`.
fn power_sum_exact(m: usize) -> Vec<Rational> {
    if m == 0 {
        return vec![-Rational::one(), Rational::one()];
    }
    power_sum_polynomial(m)
}

pub fn power_sum_check(m: usize, d: usize) -> Result<IdentityReport> {
    if m == 0 || d < 2 {
        return Err(Error::Precondition("power sum check needs m ≥ 1 and d ≥ 2".into()));
    }
    let left = power_sum_direct(m, d);
    let right = eval_poly(&power_sum_polynomial(m), &q(d as i64));
    Ok(IdentityReport::new("power-sum", Provenance::DirectSum, Provenance::ClosedForm)
        .param("m", m)
        .param("d", d)
        .rationals(&left, &right))
}

/// `F_{g_1,g_2}(d) = Σ_{i+j=d} i^{2g_1-1} j^{2g_2-1}` split as
/// `poly(d) + harmonic · d^{2g-1} H_{d-1}`; the harmonic part is present only
/// when one of `g_1, g_2` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPolynomial {
    pub g1: usize,
    pub g2: usize,
    pub poly: Vec<Rational>,
    pub harmonic: Rational,
}

impl FPolynomial {
    pub fn eval(&self, d: usize) -> Rational {
        let g = self.g1 + self.g2;
        let x = q(d as i64);
        let h = &self.harmonic * big(&BigInt::from(d).pow(2 * g as u32 - 1)) * harmonic(d.saturating_sub(1));
        eval_poly(&self.poly, &x) + h
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.poly.get(k).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Expand `F_{g_1,g_2}` by the binomial theorem in `j = d - i` and the power
/// sum closed forms. With `g_1 = 0` the `i^{-1}` term yields the harmonic part.
pub fn f_polynomial(g1: usize, g2: usize) -> Result<FPolynomial> {
    let g = g1 + g2;
    if g == 0 {
        return Err(Error::Precondition("F_{0,0} is not polynomial".into()));
    }
    // F is symmetric; put the (possibly zero) index in the i-slot
    let (a, b) = if g2 == 0 { (g2, g1) } else { (g1, g2) };
    let e = 2 * b - 1;
    let mut poly = vec![Rational::zero(); 2 * g + 1];
    let mut harm = Rational::zero();
    for k in 0..=e {
        // C(e,k) d^k (-i)^{e-k}, times i^{2a-1}
        let sign = if (e - k) % 2 == 0 { Rational::one() } else { -Rational::one() };
        let c = sign * big(&binomial(e, k));
        let exp = 2 * a as i64 - 1 + (e - k) as i64;
        if exp < 0 {
            harm += c;
            continue;
        }
        for (j, s) in power_sum_exact(exp as usize).iter().enumerate() {
            poly[j + k] += &c * s;
        }
    }
    while poly.len() > 1 && poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    Ok(FPolynomial { g1, g2, poly, harmonic: harm })
}

/// `Σ_{k=0}^{2g_2-1} (-1)^{2g_2-1-k}/(2g-1-k) C(2g_2-1,k)`.
pub fn beta_binomial_sum(g1: usize, g2: usize) -> Rational {
    let g = g1 + g2;
    let e = 2 * g2 - 1;
    (0..=e).fold(Rational::zero(), |acc, k| {
        let sign = if (e - k).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        acc + sign * big(&binomial(e, k)) / q((2 * g - 1 - k) as i64)
    })
}

/// `Σ_{i=1}^{2g-1} (-1)^i/i C(2g-1,i)`.
pub fn alternating_harmonic_sum(g: usize) -> Rational {
    let n = 2 * g - 1;
    (1..=n).fold(Rational::zero(), |acc, i| {
        let sign = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
        acc + sign * big(&binomial(n, i)) / q(i as i64)
    })
}

/// The two binomial-sum lemmas behind the `λ_{g-1}` formula.
pub fn binomial_sum_lemmas(g1: usize, g2: usize) -> Result<Vec<IdentityReport>> {
    if g1 == 0 || g2 == 0 {
        return Err(Error::Precondition("binomial lemmas need g1, g2 ≥ 1".into()));
    }
    let g = g1 + g2;
    let beta = big(&(factorial(2 * g1 - 1) * factorial(2 * g2 - 1))) / big(&factorial(2 * g - 1));
    Ok(vec![
        IdentityReport::new("beta-binomial-sum", Provenance::DirectSum, Provenance::ClosedForm)
            .param("g1", g1)
            .param("g2", g2)
            .rationals(&beta_binomial_sum(g1, g2), &beta),
        IdentityReport::new("alternating-harmonic-sum", Provenance::DirectSum, Provenance::ClosedForm)
            .param("g", g)
            .rationals(&alternating_harmonic_sum(g), &-harmonic(2 * g - 1)),
    ])
}

/// The coefficients of `d` and `d^{2g-1}` in the polynomial part of `F_{g_1,g_2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FCoefficients {
    pub coeff_of_d: Rational,
    pub coeff_of_d_2g_minus_1: Rational,
}

pub fn f_g1g2_coefficients(g1: usize, g2: usize) -> Result<FCoefficients> {
    let f = f_polynomial(g1, g2)?;
    let g = g1 + g2;
    Ok(FCoefficients { coeff_of_d: f.coeff(1), coeff_of_d_2g_minus_1: f.coeff(2 * g - 1) })
}

/// Check the expansion of `F_{g_1,g_2}` against brute force for
/// `d = 2..=d_max`, and its two distinguished coefficients against the
/// Bernoulli and binomial-sum predictions.
pub fn verify_f_coefficients(g1: usize, g2: usize, d_max: usize) -> Result<Vec<IdentityReport>> {
    let f = f_polynomial(g1, g2)?;
    let g = g1 + g2;
    let mut out = Vec::new();
    let mut bad = None;
    for d in 2..=d_max {
        let direct = (1..d).fold(Rational::zero(), |acc, i| {
            acc + signed_pow(i, 2 * g1 as i64 - 1) * signed_pow(d - i, 2 * g2 as i64 - 1)
        });
        if direct != f.eval(d) {
            bad = Some(json!({"d": d, "direct": format_rational(&direct), "polynomial": format_rational(&f.eval(d))}));
            break;
        }
    }
    out.push(
        IdentityReport::new("f-expansion", Provenance::DirectSum, Provenance::ClosedForm)
            .param("g1", g1)
            .param("g2", g2)
            .param("dMax", d_max)
            .sides(rational_array(&f.poly), format_rational(&f.harmonic))
            .outcome(bad.is_none(), bad),
    );
    let coeffs = f_g1g2_coefficients(g1, g2)?;
    if g >= 2 {
        out.push(
            IdentityReport::new("f-coefficient-of-d", Provenance::DirectSum, Provenance::ClosedForm)
                .param("g1", g1)
                .param("g2", g2)
                .rationals(&coeffs.coeff_of_d, &-bernoulli(2 * g - 2)),
        );
    }
    let predicted = if g1 == 0 || g2 == 0 { alternating_harmonic_sum(g) } else { beta_binomial_sum(g1, g2) };
    out.push(
        IdentityReport::new("f-coefficient-of-d-2g-1", Provenance::DirectSum, Provenance::ClosedForm)
            .param("g1", g1)
            .param("g2", g2)
            .rationals(&coeffs.coeff_of_d_2g_minus_1, &predicted),
    );
    Ok(out)
}

fn signed_pow(base: usize, e: i64) -> Rational {
    if e >= 0 {
        big(&BigInt::from(base).pow(e as u32))
    } else {
        Rational::new(BigInt::one(), BigInt::from(base).pow((-e) as u32))
    }
}

/// `λ^{2g}` coefficient of the derivative identity's right side, assembled
/// from `F` polynomials: `½ Σ_{g_1+g_2=g} b_{g_1} b_{g_2} F_{g_1,g_2}(d)` minus
/// `b_g d^{2g-1} H_{d-1}`. The harmonic parts cancel, so this is a polynomial.
pub fn ddd_polynomial_from_f(g: usize) -> Result<Vec<Rational>> {
    let mut poly = vec![Rational::zero(); 2 * g];
    let mut harm = -b_g(g);
    for g1 in 0..=g {
        let f = f_polynomial(g1, g - g1)?;
        let w = b_g(g1) * b_g(g - g1) / q(2);
        harm += &w * &f.harmonic;
        if f.poly.len() > poly.len() {
            poly.resize(f.poly.len(), Rational::zero());
        }
        for (k, c) in f.poly.iter().enumerate() {
            poly[k] += &w * c;
        }
    }
    if !harm.is_zero() {
        return Err(Error::NotPolynomial(format!("harmonic parts leave {}", format_rational(&harm))));
    }
    while poly.len() > 1 && poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    Ok(poly)
}

/// All compositions of `total` into `n` nonnegative parts.
pub fn compositions(total: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `Σ_g λ^{2g} Σ_{Σk=2g-3+n} Π μ_i^{k_i} ∫ ψ^k λ_g` through `λ^order`, with
/// the unstable genus-zero term taken as `|μ|^{n-3}`.
pub fn lambda_g_series_from_values(mu: &Partition, order: i64) -> Result<LambdaSeries> {
    let n = mu.len();
    let d = mu.weight();
    let mut coeffs = vec![Rational::zero(); order.max(0) as usize + 1];
    for g in 0..=(order.max(0) as usize) / 2 {
        let c = if g == 0 && n < 3 {
            signed_pow(d, n as i64 - 3)
        } else {
            let mut acc = Rational::zero();
            for k in compositions(2 * g + n - 3, n) {
                let mono = mu.parts().iter().zip(&k).fold(Rational::one(), |a, (&m, &e)| a * signed_pow(m, e as i64));
                acc += mono * lambda_g_value(g, &k)?;
            }
            acc
        };
        coeffs[2 * g] = c;
    }
    Ok(LambdaSeries::from_rationals(0, coeffs))
}

/// `B_m` two ways for `m ≤ m_max`.
pub fn verify_bernoulli_routes(m_max: usize) -> IdentityReport {
    let a: Vec<Rational> = (0..=m_max).map(bernoulli).collect();
    let b: Vec<Rational> = (0..=m_max).map(bernoulli_by_series).collect();
    let bad = a.iter().zip(&b).position(|(x, y)| x != y).map(|m| json!({"m": m}));
    IdentityReport::new("bernoulli-two-routes", Provenance::ClosedForm, Provenance::DirectSum)
        .param("mMax", m_max)
        .sides(rational_array(&a), rational_array(&b))
        .outcome(bad.is_none(), bad)
}

/// `Σ_{k=0}^m C(m+1,k) B_k = 0` for `1 ≤ m ≤ m_max`, using the series-derived values.
pub fn verify_bernoulli_recursion(m_max: usize) -> IdentityReport {
    let bad = (1..=m_max)
        .find(|&m| {
            !(0..=m).fold(Rational::zero(), |acc, k| acc + big(&binomial(m + 1, k)) * bernoulli_by_series(k)).is_zero()
        })
        .map(|m| json!({"m": m}));
    IdentityReport::new("bernoulli-recursion", Provenance::DirectSum, Provenance::ClosedForm)
        .param("mMax", m_max)
        .sides("Σ C(m+1,k) B_k", "0")
        .outcome(bad.is_none(), bad)
}

/// Signs: `B_{2n}` has sign `(-1)^{n-1}` and `B_{2m+1} = 0` for `m ≥ 1`.
pub fn verify_bernoulli_signs(m_max: usize) -> IdentityReport {
    let bad = (2..=m_max)
        .find(|&m| {
            let b = bernoulli(m);
            if m % 2 == 1 {
                !b.is_zero()
            } else {
                let n = m / 2;
                (n % 2 == 1) != b.is_positive()
            }
        })
        .map(|m| json!({"m": m}));
    IdentityReport::new("bernoulli-signs", Provenance::ClosedForm, Provenance::ClosedForm)
        .param("mMax", m_max)
        .sides("sign B_m", "(-1)^{m/2-1}, 0 for odd m")
        .outcome(bad.is_none(), bad)
}

fn series_report(name: &str, key: &str, max: usize, got: &[Rational], want: &[Rational]) -> IdentityReport {
    let bad = got.iter().zip(want).position(|(x, y)| x != y).map(|i| json!({key: i}));
    IdentityReport::new(name, Provenance::DirectSum, Provenance::ClosedForm)
        .param(&format!("{key}Max"), max)
        .sides(rational_array(got), rational_array(want))
        .outcome(bad.is_none(), bad)
}

fn coeffs_of(s: &LambdaSeries, upto: usize) -> Vec<Rational> {
    (0..=upto as i64).map(|k| s.scalar_coeff(k).expect("within order").re).collect()
}

/// `(t/2)/sinh(t/2) = Σ ((1-2^{m-1})/2^{m-1}) B_m t^m/m!`.
pub fn verify_sinh(m_max: usize) -> IdentityReport {
    let s = sinh_double_half(1, m_max as i64 + 2).invert().expect("unit").shift(1);
    let got = coeffs_of(&s, m_max);
    let want: Vec<Rational> = (0..=m_max)
        .map(|m| {
            let p = pow2(m as i64 - 1);
            (Rational::one() - &p) / p * bernoulli(m) / big(&factorial(m))
        })
        .collect();
    series_report("sinh-expansion", "m", m_max, &got, &want)
}

/// `(t/2)coth(t/2) = Σ B_{2n} t^{2n}/(2n)!`, with `cosh` expanded directly.
pub fn verify_coth(n_max: usize) -> IdentityReport {
    let order = 2 * n_max as i64;
    let cosh = LambdaSeries::from_rationals(
        0,
        (0..=order as usize)
            .map(|k| if k % 2 == 0 { pow2(-(k as i64)) / big(&factorial(k)) } else { Rational::zero() })
            .collect(),
    );
    let s = sinh_double_half(1, order + 2).invert().expect("unit").shift(1).mul(&cosh);
    let got: Vec<Rational> = (0..=n_max).map(|n| s.scalar_coeff(2 * n as i64).unwrap().re).collect();
    let want: Vec<Rational> = (0..=n_max).map(|n| bernoulli(2 * n) / big(&factorial(2 * n))).collect();
    series_report("coth-expansion", "n", n_max, &got, &want)
}

/// `(t/2)/sin(t/2) = 1 + Σ_{g≥1} b_g t^{2g}` through `t^{order}`.
pub fn verify_tsint(order: usize) -> IdentityReport {
    let s = sin_double_half(1, order as i64 + 2).invert().expect("unit").shift(1);
    let got = coeffs_of(&s, order);
    let want: Vec<Rational> = (0..=order).map(|k| if k % 2 == 0 { b_g(k / 2) } else { Rational::zero() }).collect();
    series_report("t-over-sin-expansion", "order", order, &got, &want)
}

/// `Σ_{i+j=n} (1-2^{1-2i})B_{2i}/(2i)! · (1-2^{1-2j})B_{2j}/(2j)! = (1-2n)B_{2n}/(2n)!`.
pub fn verify_b2(n_max: usize) -> IdentityReport {
    let term = |i: usize| (Rational::one() - pow2(1 - 2 * i as i64)) * bernoulli(2 * i) / big(&factorial(2 * i));
    let got: Vec<Rational> =
        (0..=n_max).map(|n| (0..=n).fold(Rational::zero(), |acc, i| acc + term(i) * term(n - i))).collect();
    let want: Vec<Rational> =
        (0..=n_max).map(|n| q(1 - 2 * n as i64) * bernoulli(2 * n) / big(&factorial(2 * n))).collect();
    series_report("bernoulli-square-convolution", "n", n_max, &got, &want)
}

/// `Σ_{g_1+g_2=g} b_{g_1} b_{g_2} = |B_{2g}|/(2g (2g-2)!)` for `1 ≤ g ≤ g_max`,
/// with `b_0 = 1`.
pub fn verify_bg_convolution(g_max: usize) -> IdentityReport {
    let got: Vec<Rational> =
        (1..=g_max).map(|g| (0..=g).fold(Rational::zero(), |acc, g1| acc + b_g(g1) * b_g(g - g1))).collect();
    let want: Vec<Rational> =
        (1..=g_max).map(|g| abs_bernoulli_even(g) / q(2 * g as i64) / big(&factorial(2 * g - 2))).collect();
    let bad = got.iter().zip(&want).position(|(x, y)| x != y).map(|i| json!({"g": i + 1}));
    IdentityReport::new("b-g-convolution", Provenance::DirectSum, Provenance::ClosedForm)
        .param("gMax", g_max)
        .sides(rational_array(&got), rational_array(&want))
        .outcome(bad.is_none(), bad)
}

/// `b_g` from the closed form against the inverted sine series, `g ≤ g_max`.
pub fn verify_b_g(g_max: usize) -> IdentityReport {
    let s = sin_double_half(1, 2 * g_max as i64 + 2).invert().expect("unit").shift(1);
    let got: Vec<Rational> = (0..=g_max).map(|g| s.scalar_coeff(2 * g as i64).unwrap().re).collect();
    let want: Vec<Rational> = (0..=g_max).map(b_g).collect();
    series_report("b-g", "g", g_max, &got, &want)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn closed_form_examples() {
        assert_eq!(b_g(0), rat(1, 1));
        assert_eq!(b_g(1), rat(1, 24));
        assert_eq!(b_g(2), rat(7, 5760));
        assert_eq!(lambda_g_value(1, &[0]).unwrap(), rat(1, 24));
        assert_eq!(lambda_g_value(1, &[1, 0]).unwrap(), rat(1, 24));
        assert_eq!(lambda_g_value(2, &[2]).unwrap(), rat(7, 5760));
        assert!(matches!(lambda_g_value(1, &[1]), Err(Error::Dimension(_))));
        assert!(lambda_g_value(0, &[0, 0]).is_err());
        assert_eq!(cubic_lambda(2).unwrap(), rat(1, 5760));
        assert_eq!(cubic_lambda(3).unwrap(), rat(1, 1451520));
        assert_eq!(g_minus_1_value(1).unwrap(), rat(1, 24));
        let g2 = rat(7, 5760) * rat(11, 6) - rat(1, 12) * rat(1, 576);
        assert_eq!(g_minus_1_value(2).unwrap(), g2);
    }

    #[test]
    fn binomial_lemmas() {
        assert_eq!(beta_binomial_sum(1, 1), rat(1, 6));
        assert_eq!(beta_binomial_sum(1, 2), rat(1, 20));
        assert_eq!(alternating_harmonic_sum(2), rat(-11, 6));
        for g in 2..=6 {
            for g1 in 1..g {
                assert!(binomial_sum_lemmas(g1, g - g1).unwrap().iter().all(|r| r.pass));
            }
        }
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum_direct(1, 5), rat(10, 1));
        assert!(power_sum_check(2, 4).unwrap().pass);
        assert_eq!(power_sum_direct(2, 4), rat(14, 1));
        assert!(power_sum_check(9, 20).unwrap().pass);
    }

    #[test]
    fn f_polynomials() {
        let c = f_g1g2_coefficients(1, 1).unwrap();
        assert_eq!(c.coeff_of_d, rat(-1, 6));
        let f = f_polynomial(0, 2).unwrap();
        assert_eq!(f.harmonic, rat(1, 1));
        for g in 1..=4 {
            for g1 in 0..=g {
                assert!(verify_f_coefficients(g1, g - g1, 8).unwrap().iter().all(|r| r.pass), "g1 = {g1}, g = {g}");
            }
        }
        // at g = 1 the polynomial part of F_{0,1} is 1 - d
        assert_eq!(f_polynomial(0, 1).unwrap().poly, vec![rat(1, 1), rat(-1, 1)]);
    }

    #[test]
    fn appendix_identities() {
        assert!(verify_bernoulli_routes(20).pass);
        assert!(verify_bernoulli_recursion(20).pass);
        assert!(verify_bernoulli_signs(40).pass);
        assert!(verify_sinh(20).pass);
        assert!(verify_coth(10).pass);
        assert!(verify_tsint(20).pass);
        assert!(verify_b2(10).pass);
        assert!(verify_bg_convolution(10).pass);
        assert!(verify_b_g(10).pass);
    }

    #[test]
    fn displayed_convolution_factor_at_zero_is_minus_one() {
        // the closed factor (2^{2g-1}-1)/2^{2g-1}·|B_{2g}|/(2g)! evaluates to -1 at g = 0, not b_0 = 1
        let p = pow2(-1);
        assert_eq!((&p - Rational::one()) / p * bernoulli(0), rat(-1, 1));
    }

    #[test]
    fn lambda_g_multinomial_series() {
        let mu = Partition::new(vec![2, 1]).unwrap();
        let s = lambda_g_series_from_values(&mu, 4).unwrap();
        assert!(s.mismatches(&crate::mv::lambda_g_target(&mu, 4), 4).unwrap().is_empty());
        let mu = Partition::new(vec![3, 2, 1]).unwrap();
        let s = lambda_g_series_from_values(&mu, 6).unwrap();
        assert!(s.mismatches(&crate::mv::lambda_g_target(&mu, 6), 6).unwrap().is_empty());
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn ddd_polynomial_closed_form() {
        assert_eq!(ddd_polynomial_from_f(1).unwrap(), vec![rat(1, 24), rat(-1, 24)]);
        let p2 = ddd_polynomial_from_f(2).unwrap();
        // coefficient of d is (-1)^{g-1}(2g-2) times the cubic integral
        assert_eq!(p2[1], -rat(2, 1) * cubic_lambda(2).unwrap());
        assert_eq!(p2[3], -g_minus_1_value(2).unwrap());
    }
}
