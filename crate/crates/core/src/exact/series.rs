//! Truncated Laurent series in `λ` with [`TauPoly`] coefficients.
//!
//! A series stores the coefficients of `λ^min_exp ..= λ^order`. Everything
//! below `min_exp` is known to vanish; everything above `order` is unknown.
//! Arithmetic propagates `order` so that no operation ever reports a
//! coefficient it cannot vouch for.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::gaussian::{Gaussian, GaussianJson};
use super::rational::{factorial, Rational};
use super::tau::TauPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaSeries {
    min_exp: i64,
    order: i64,
    coeffs: Vec<TauPoly>,
}

/// Wire form of a series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    #[serde(rename = "minExp")]
    pub min_exp: i64,
    pub order: i64,
    pub coeffs: Vec<Vec<GaussianJson>>,
}

impl LambdaSeries {
    /// Series with coefficients `coeffs[k]` at `λ^(min_exp + k)`, known through
    /// `order`. Missing coefficients up to `order` are zero; extra ones dropped.
    pub fn new(min_exp: i64, order: i64, mut coeffs: Vec<TauPoly>) -> Self {
        let len = (order - min_exp + 1).max(0) as usize;
        coeffs.resize(len, TauPoly::zero());
        let mut s = Self { min_exp, order, coeffs };
        s.normalize();
        s
    }

    pub fn from_rationals(min_exp: i64, coeffs: Vec<Rational>) -> Self {
        let order = min_exp + coeffs.len() as i64 - 1;
        Self::new(min_exp, order, coeffs.into_iter().map(TauPoly::from_rational).collect())
    }

    pub fn from_gaussians(min_exp: i64, coeffs: Vec<Gaussian>) -> Self {
        let order = min_exp + coeffs.len() as i64 - 1;
        Self::new(min_exp, order, coeffs.into_iter().map(TauPoly::constant).collect())
    }

    pub fn zero(order: i64) -> Self {
        Self { min_exp: order + 1, order, coeffs: Vec::new() }
    }

    pub fn constant(c: TauPoly, order: i64) -> Self {
        Self::monomial(c, 0, order)
    }

    pub fn one(order: i64) -> Self {
        Self::constant(TauPoly::one(), order)
    }

    /// `c·λ^exp`, known through `order`.
    pub fn monomial(c: TauPoly, exp: i64, order: i64) -> Self {
        if exp > order {
            return Self::zero(order);
        }
        Self::new(exp, order, vec![c])
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = self.order + 1;
        }
    }

    /// Lowest exponent that may be nonzero. For a series that vanishes
    /// through its order this is `order + 1`.
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent whose coefficient is known.
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero_through_order(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn at(&self, k: i64) -> Option<&TauPoly> {
        if k < self.min_exp || k > self.order {
            return None;
        }
        self.coeffs.get((k - self.min_exp) as usize)
    }

    /// Coefficient of `λ^k`; an error past the validity order.
    pub fn coeff(&self, k: i64) -> Result<TauPoly> {
        if k > self.order {
            return Err(Error::BeyondValidity { exponent: k, order: self.order });
        }
        Ok(self.at(k).cloned().unwrap_or_default())
    }

    /// Coefficient of `λ^k τ^0`, assuming the series is constant in `τ`.
    pub fn scalar_coeff(&self, k: i64) -> Result<Gaussian> {
        Ok(self.coeff(k)?.coeff(0))
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &TauPoly)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (self.min_exp + k as i64, c))
    }

    /// Largest `τ`-degree among the coefficients.
    pub fn tau_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(TauPoly::degree).max()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(TauPoly::is_real)
    }

    /// Forget everything above `order`.
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        Self::new(self.min_exp, order, self.coeffs.clone())
    }

    /// Multiply by `λ^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { min_exp: self.min_exp + k, order: self.order + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        self.map_coeffs(|p| p.scale(c))
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.map_coeffs(|p| p.scale_rational(q))
    }

    /// Multiply every coefficient by a polynomial in `τ`.
    pub fn scale_tau(&self, t: &TauPoly) -> Self {
        self.map_coeffs(|p| p * t)
    }

    pub fn map_coeffs(&self, f: impl Fn(&TauPoly) -> TauPoly) -> Self {
        Self::new(self.min_exp, self.order, self.coeffs.iter().map(f).collect())
    }

    /// `∂/∂τ` applied coefficientwise.
    pub fn deriv_tau(&self) -> Self {
        self.map_coeffs(TauPoly::deriv)
    }

    /// Substitute a value for `τ`.
    pub fn eval_tau(&self, at: &Gaussian) -> Self {
        self.map_coeffs(|p| TauPoly::constant(p.eval(at)))
    }

    /// `∂/∂λ`.
    pub fn deriv_lambda(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.scale_rational(&Rational::from_integer(BigInt::from(self.min_exp + k as i64))))
            .collect();
        Self::new(self.min_exp - 1, self.order - 1, coeffs)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    fn combine(&self, o: &Self, negate: bool) -> Self {
        let order = self.order.min(o.order);
        let lo = self.min_exp.min(o.min_exp);
        if lo > order {
            return Self::zero(order);
        }
        let coeffs = (lo..=order)
            .map(|k| match (self.at(k), o.at(k)) {
                (Some(a), Some(b)) if negate => a - b,
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) if negate => -b,
                (None, Some(b)) => b.clone(),
                (None, None) => TauPoly::zero(),
            })
            .collect();
        Self::new(lo, order, coeffs)
    }

    /// Product; valid through `min(order_a + min_b, order_b + min_a)`.
    pub fn mul(&self, o: &Self) -> Self {
        let order = (self.order + o.min_exp).min(o.order + self.min_exp);
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::zero(order);
        }
        let lo = self.min_exp + o.min_exp;
        if lo > order {
            return Self::zero(order);
        }
        let len = (order - lo + 1) as usize;
        let mut coeffs = vec![TauPoly::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j].add_product(a, b);
            }
        }
        Self::new(lo, order, coeffs)
    }

    /// Multiplicative inverse. The leading coefficient must be a nonzero
    /// constant in `τ`.
    pub fn invert(&self) -> Result<Self> {
        let lead = self.coeffs.first().ok_or(Error::NotAUnit)?;
        if !lead.is_constant() {
            return Err(Error::NotAUnit);
        }
        let inv0 = lead.coeff(0).inv().ok_or(Error::NotAUnit)?;
        let precision = (self.order - self.min_exp) as usize;
        let mut out: Vec<TauPoly> = Vec::with_capacity(precision + 1);
        out.push(TauPoly::constant(inv0.clone()));
        let neg_inv0 = -inv0;
        for n in 1..=precision {
            let mut acc = TauPoly::zero();
            for k in 1..=n {
                acc.add_product(&self.coeffs[k], &out[n - k]);
            }
            out.push(acc.scale(&neg_inv0));
        }
        let min_exp = -self.min_exp;
        Ok(Self::new(min_exp, min_exp + precision as i64, out))
    }

    /// Exponential of a series with no constant or polar part.
    pub fn exp(&self) -> Result<Self> {
        if self.min_exp < 1 {
            return Err(Error::Precondition("exp needs a series with vanishing constant and polar part".into()));
        }
        let n_max = self.order.max(0) as usize;
        let mut e: Vec<TauPoly> = Vec::with_capacity(n_max + 1);
        e.push(TauPoly::one());
        for n in 1..=n_max {
            let mut acc = TauPoly::zero();
            for k in (self.min_exp as usize)..=n {
                let a = self.at(k as i64).expect("k within validity");
                let ka = a.scale_rational(&Rational::from_integer(BigInt::from(k)));
                acc.add_product(&ka, &e[n - k]);
            }
            e.push(acc.scale_rational(&Rational::new(BigInt::one(), BigInt::from(n))));
        }
        Ok(Self::new(0, self.order, e))
    }

    /// Logarithm of a series of the form `1 + O(λ)`.
    pub fn log(&self) -> Result<Self> {
        if self.min_exp != 0 || !self.coeffs[0].is_one() {
            return Err(Error::Precondition("log needs constant term exactly 1".into()));
        }
        let n_max = self.order.max(0) as usize;
        let mut l: Vec<TauPoly> = vec![TauPoly::zero()];
        for n in 1..=n_max {
            let mut acc = TauPoly::zero();
            for (k, lk) in l.iter().enumerate().take(n).skip(1) {
                let klk = lk.scale_rational(&Rational::from_integer(BigInt::from(k)));
                acc.add_product(&klk, &self.coeffs[n - k]);
            }
            let acc = acc.scale_rational(&Rational::new(BigInt::one(), BigInt::from(n)));
            l.push(&self.coeffs[n] - &acc);
        }
        Ok(Self::new(0, self.order, l))
    }

    /// `(exponent, τ-degree)` pairs where the two series differ, checked
    /// through `upto`. Fails if either side is not known that far.
    pub fn mismatches(&self, o: &Self, upto: i64) -> Result<Vec<(i64, usize)>> {
        for s in [self, o] {
            if s.order < upto {
                return Err(Error::BeyondValidity { exponent: upto, order: s.order });
            }
        }
        let lo = self.min_exp.min(o.min_exp);
        let mut out = Vec::new();
        for k in lo..=upto {
            let a = self.at(k).cloned().unwrap_or_default();
            let b = o.at(k).cloned().unwrap_or_default();
            if a != b {
                let d = &a - &b;
                let deg = d.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
                out.push((k, deg));
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> SeriesJson {
        // emit from the lowest stored exponent so zero series stay readable
        SeriesJson {
            min_exp: self.min_exp.min(self.order + 1),
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.coeffs().iter().map(Gaussian::to_json).collect()).collect(),
        }
    }

    pub fn from_json(j: &SeriesJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| c.iter().map(Gaussian::from_json).collect::<Result<Vec<_>>>().map(TauPoly::new))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(j.min_exp, j.order, coeffs))
    }
}

/// `2 sin(hλ/2)`, known through `order`.
pub fn sin_double_half(h: u64, order: i64) -> LambdaSeries {
    odd_half_angle(h, order, true)
}

/// `2 sinh(hλ/2)`, known through `order`.
pub fn sinh_double_half(h: u64, order: i64) -> LambdaSeries {
    odd_half_angle(h, order, false)
}

fn odd_half_angle(h: u64, order: i64, alternating: bool) -> LambdaSeries {
    if order < 1 {
        return LambdaSeries::zero(order);
    }
    let half = Rational::new(BigInt::from(h), BigInt::from(2));
    let coeffs = (1..=order)
        .map(|k| {
            if k % 2 == 0 {
                return Rational::zero();
            }
            let mut c = num_traits::pow(half.clone(), k as usize) / Rational::from_integer(factorial(k as usize))
                * Rational::from_integer(BigInt::from(2));
            if alternating && (k / 2) % 2 == 1 {
                c = -c;
            }
            c
        })
        .collect();
    LambdaSeries::from_rationals(1, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use proptest::prelude::*;

    fn real(min_exp: i64, cs: &[(i64, i64)]) -> LambdaSeries {
        LambdaSeries::from_rationals(min_exp, cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn exponent_cancellation() {
        let inv = LambdaSeries::monomial(TauPoly::one(), -1, 4);
        let lam = LambdaSeries::monomial(TauPoly::one(), 1, 4);
        let p = inv.mul(&lam);
        assert_eq!(p.order(), 3);
        assert_eq!(p.coeff(0).unwrap(), TauPoly::one());
        for k in 1..=3 {
            assert!(p.coeff(k).unwrap().is_zero());
        }
    }

    #[test]
    fn difference_of_squares() {
        let a = real(0, &[(1, 1), (1, 1), (0, 1)]);
        let b = real(0, &[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(a.mul(&b), real(0, &[(1, 1), (0, 1), (-1, 1)]));
    }

    #[test]
    fn product_validity_tracks_poles() {
        let a = real(-1, &[(1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1)]);
        assert_eq!(a.order(), 4);
        let p = a.mul(&a);
        assert!(p.order() <= 3);
        assert!(matches!(p.coeff(4), Err(Error::BeyondValidity { .. })));
    }

    #[test]
    fn inverse_of_half_angle_sine() {
        // 1 - λ²/24 + λ⁴/1920 → 1 + λ²/24 + 7λ⁴/5760
        let a = real(0, &[(1, 1), (0, 1), (-1, 24), (0, 1), (1, 1920)]);
        let b = a.invert().unwrap();
        assert_eq!(b, real(0, &[(1, 1), (0, 1), (1, 24), (0, 1), (7, 5760)]));
        let c = LambdaSeries::constant(TauPoly::from_rational(int(2)), 3).invert().unwrap();
        assert_eq!(c.coeff(0).unwrap(), TauPoly::from_rational(rat(1, 2)));
    }

    #[test]
    fn non_unit_leading_coefficient() {
        let a = LambdaSeries::new(0, 2, vec![TauPoly::tau(), TauPoly::one()]);
        assert_eq!(a.invert(), Err(Error::NotAUnit));
        assert_eq!(LambdaSeries::zero(3).invert(), Err(Error::NotAUnit));
    }

    #[test]
    fn exponential_examples() {
        assert_eq!(LambdaSeries::zero(3).exp().unwrap(), LambdaSeries::one(3));
        let lam = LambdaSeries::monomial(TauPoly::one(), 1, 3);
        assert_eq!(lam.exp().unwrap(), real(0, &[(1, 1), (1, 1), (1, 2), (1, 6)]));

        // exp(i(τ+1/2)λ) through λ²
        let s = TauPoly::new(vec![Gaussian::real(rat(1, 2)), Gaussian::one()]);
        let arg = LambdaSeries::monomial(s.scale(&Gaussian::i()), 1, 2);
        let e = arg.exp().unwrap();
        assert_eq!(e.coeff(1).unwrap(), s.scale(&Gaussian::i()));
        assert_eq!(e.coeff(2).unwrap(), (&s * &s).scale_rational(&rat(-1, 2)));

        assert!(LambdaSeries::one(3).exp().is_err());
        assert!(LambdaSeries::monomial(TauPoly::one(), -1, 3).exp().is_err());
    }

    #[test]
    fn logarithm_examples() {
        assert!(LambdaSeries::one(3).log().unwrap().is_zero_through_order());
        let lam = LambdaSeries::monomial(TauPoly::one(), 1, 4);
        assert_eq!(lam.exp().unwrap().log().unwrap(), lam);
        let a = real(0, &[(1, 1), (1, 1), (1, 2)]);
        assert_eq!(a.log().unwrap(), LambdaSeries::monomial(TauPoly::one(), 1, 2));
        assert!(real(0, &[(2, 1), (1, 1)]).log().is_err());
    }

    #[test]
    fn half_angle_sines() {
        assert_eq!(sin_double_half(1, 5), real(1, &[(1, 1), (0, 1), (-1, 24), (0, 1), (1, 1920)]));
        assert_eq!(sin_double_half(2, 3), real(1, &[(2, 1), (0, 1), (-1, 3)]));
        for h in 1..6 {
            assert!(sin_double_half(h, 7).coeff(0).unwrap().is_zero());
        }
    }

    #[test]
    fn coefficient_beyond_order_is_an_error() {
        let a = real(0, &[(1, 1), (1, 1)]);
        assert!(a.coeff(1).is_ok());
        assert!(a.coeff(2).is_err());
        // below the minimum exponent is a known zero
        assert!(a.coeff(-5).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let a = real(-1, &[(1, 1), (0, 1), (1, 24)]).scale_tau(&TauPoly::tau());
        assert_eq!(LambdaSeries::from_json(&a.to_json()).unwrap(), a);
    }

    fn arb_series() -> impl Strategy<Value = LambdaSeries> {
        (1i64..3, prop::collection::vec((-9i64..9, 1i64..9, 0usize..3), 1..6)).prop_map(|(m, cs)| {
            let coeffs = cs
                .into_iter()
                .map(|(n, d, deg)| {
                    let mut v = vec![Gaussian::zero(); deg + 1];
                    v[deg] = Gaussian::new(rat(n, d), rat(d, 7));
                    TauPoly::new(v)
                })
                .collect();
            LambdaSeries::new(m, m + 5, coeffs)
        })
    }

    proptest! {
        #[test]
        fn exp_and_log_are_inverse(a in arb_series()) {
            let e = a.exp().unwrap();
            prop_assert_eq!(e.log().unwrap(), a.clone());
        }

        #[test]
        fn inverse_times_self_is_one(a in arb_series()) {
            let u = LambdaSeries::one(a.order()).add(&a);
            let prod = u.mul(&u.invert().unwrap());
            prop_assert!(prod.mismatches(&LambdaSeries::one(prod.order()), prod.order()).unwrap().is_empty());
        }
    }
}
