//! Arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`, which keeps numerator and
//! denominator coprime with a positive denominator. The helpers here cover
//! the small constructors used everywhere plus the `"num/den"` text form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `H_m = 1 + 1/2 + ... + 1/m`.
pub fn harmonic(m: usize) -> Rational {
    (1..=m).fold(Rational::zero(), |acc, i| acc + rat(1, i as i64))
}

/// Always `"num/den"`, including integers (`"3/1"`).
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let d: BigInt = d.parse().map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if d.is_zero() || d.is_negative() {
        return Err(Error::Parse(format!("denominator must be positive in {s:?}")));
    }
    Ok(Rational::new(n, d))
}
