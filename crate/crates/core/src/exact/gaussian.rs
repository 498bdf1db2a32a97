//! Gaussian rationals `re + i·im` with `i² = -1`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        Self { re: Rational::zero(), im: Rational::one() }
    }

    /// `sqrt(-1)^n` for any integer `n`.
    pub fn i_pow(n: i64) -> Self {
        match n.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self { re: &self.re * q, im: &self.im * q }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn to_json(&self) -> GaussianJson {
        GaussianJson { re: format_rational(&self.re), im: format_rational(&self.im) }
    }

    pub fn from_json(j: &GaussianJson) -> Result<Self> {
        Ok(Self { re: parse_rational(&j.re)?, im: parse_rational(&j.im)? })
    }
}

/// Wire form: `{"re": "num/den", "im": "num/den"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussianJson {
    pub re: String,
    pub im: String,
}

impl From<Rational> for Gaussian {
    fn from(re: Rational) -> Self {
        Self::real(re)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", format_rational(&self.re))
        } else {
            write!(f, "{} + {}i", format_rational(&self.re), format_rational(&self.im))
        }
    }
}

impl Zero for Gaussian {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gaussian {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl<'a> Add<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn add(self, o: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn sub(self, o: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn mul(self, o: &Gaussian) -> Gaussian {
        // skip the cross terms when either side is real
        if self.im.is_zero() {
            return o.scale(&self.re);
        }
        if o.im.is_zero() {
            return self.scale(&o.re);
        }
        Gaussian { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl<'a> Div<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &Gaussian) -> Gaussian {
        self * &o.inv().expect("division by zero Gaussian rational")
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, o: Gaussian) -> Gaussian {
        Gaussian { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, o: Gaussian) -> Gaussian {
        Gaussian { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, o: Gaussian) -> Gaussian {
        &self * &o
    }
}

impl Div for Gaussian {
    type Output = Gaussian;
    fn div(self, o: Gaussian) -> Gaussian {
        &self / &o
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian { re: -self.re, im: -self.im }
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl AddAssign<&Gaussian> for Gaussian {
    fn add_assign(&mut self, o: &Gaussian) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&Gaussian> for Gaussian {
    fn sub_assign(&mut self, o: &Gaussian) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}
