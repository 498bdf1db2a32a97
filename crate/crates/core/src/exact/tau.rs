//! Polynomials in the framing parameter `τ` over the Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gaussian::Gaussian;
use super::rational::Rational;

/// Coefficients in ascending `τ`-degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TauPoly {
    coeffs: Vec<Gaussian>,
}

impl TauPoly {
    pub fn new(mut coeffs: Vec<Gaussian>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: Gaussian) -> Self {
        Self::new(vec![c])
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::constant(Gaussian::real(q))
    }

    /// The polynomial `τ`.
    pub fn tau() -> Self {
        Self::new(vec![Gaussian::zero(), Gaussian::one()])
    }

    pub fn coeffs(&self) -> &[Gaussian] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Gaussian> {
        self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Gaussian {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Constant in `τ` (degree ≤ 0).
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Gaussian::is_real)
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a.scale(q)).collect() }
    }

    /// Formal derivative `d/dτ`.
    pub fn deriv(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from_integer((k as i64).into())))
                .collect(),
        )
    }

    pub fn eval(&self, at: &Gaussian) -> Gaussian {
        self.coeffs.iter().rev().fold(Gaussian::zero(), |acc, c| &(&acc * at) + c)
    }

    /// Quotient by `τ^k` when it divides exactly.
    pub fn div_tau_pow(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Keep only terms of degree ≤ `deg`.
    pub fn truncate(&self, deg: usize) -> Self {
        Self::new(self.coeffs.iter().take(deg + 1).cloned().collect())
    }

    /// `self += a * b` without materializing the product.
    pub fn add_product(&mut self, a: &TauPoly, b: &TauPoly) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, Gaussian::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let p = x * y;
                self.coeffs[i + j] += &p;
            }
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Zero for TauPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for TauPoly {
    fn one() -> Self {
        Self::constant(Gaussian::one())
    }
}

impl<'a> Add<&'a TauPoly> for &'a TauPoly {
    type Output = TauPoly;
    fn add(self, o: &TauPoly) -> TauPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        TauPoly::new((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a TauPoly> for &'a TauPoly {
    type Output = TauPoly;
    fn sub(self, o: &TauPoly) -> TauPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        TauPoly::new((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a TauPoly> for &'a TauPoly {
    type Output = TauPoly;
    fn mul(self, o: &TauPoly) -> TauPoly {
        let mut out = TauPoly::zero();
        out.add_product(self, o);
        out
    }
}

impl Add for TauPoly {
    type Output = TauPoly;
    fn add(self, o: TauPoly) -> TauPoly {
        &self + &o
    }
}

impl Sub for TauPoly {
    type Output = TauPoly;
    fn sub(self, o: TauPoly) -> TauPoly {
        &self - &o
    }
}

impl Mul for TauPoly {
    type Output = TauPoly;
    fn mul(self, o: TauPoly) -> TauPoly {
        &self * &o
    }
}

impl Neg for &TauPoly {
    type Output = TauPoly;
    fn neg(self) -> TauPoly {
        TauPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for TauPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})τ"),
                _ => format!("({c})τ^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn p(cs: &[i64]) -> TauPoly {
        TauPoly::new(cs.iter().map(|&c| Gaussian::real(int(c))).collect())
    }

    #[test]
    fn derivative() {
        // d/dτ (τ² + 3τ) = 2τ + 3
        assert_eq!(p(&[0, 3, 1]).deriv(), p(&[3, 2]));
    }

    #[test]
    fn evaluation() {
        let half = TauPoly::new(vec![Gaussian::real(rat(1, 2)), Gaussian::one()]);
        assert_eq!(half.eval(&Gaussian::zero()), Gaussian::real(rat(1, 2)));
        let c = TauPoly::constant(Gaussian::new(rat(2, 3), rat(-1, 5)));
        assert_eq!(c.eval(&Gaussian::real(rat(17, 3))), Gaussian::new(rat(2, 3), rat(-1, 5)));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!((&p(&[1, 1]) - &p(&[1, 1])).degree(), None);
    }

    #[test]
    fn tau_divisibility() {
        assert_eq!(p(&[0, 0, 2, 1]).div_tau_pow(2), Some(p(&[2, 1])));
        assert_eq!(p(&[0, 1, 2]).div_tau_pow(2), None);
        assert_eq!(p(&[5]).div_tau_pow(0), Some(p(&[5])));
    }

    #[test]
    fn product() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
    }
}
