//! Bernoulli numbers `t/(e^t - 1) = Σ B_m t^m/m!`.
//!
//! Two independent routes: the linear recursion `Σ_{k≤m} C(m+1,k) B_k = 0`
//! and direct inversion of the series `(e^t - 1)/t`. Both are memoized.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{binomial, factorial, Rational};
use super::series::LambdaSeries;

static RECURSION: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
static DIVISION: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// `B_m` by the recursion, with `B_1 = -1/2`.
pub fn bernoulli(m: usize) -> Rational {
    let mut cache = RECURSION.get_or_init(|| Mutex::new(vec![Rational::one()])).lock().unwrap();
    while cache.len() <= m {
        let n = cache.len();
        let s = cache
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, b)| acc + Rational::from_integer(binomial(n + 1, k)) * b);
        cache.push(-s / Rational::from_integer(BigInt::from(n + 1)));
    }
    cache[m].clone()
}

/// `B_m` read off the inverse of `(e^t - 1)/t = Σ t^k/(k+1)!`.
pub fn bernoulli_by_series(m: usize) -> Rational {
    let mut cache = DIVISION.get_or_init(|| Mutex::new(Vec::new())).lock().unwrap();
    if cache.len() <= m {
        // recompute with headroom so repeated small requests stay cheap
        let n = (m + 1).max(2 * cache.len()).max(8);
        let denom: Vec<Rational> = (0..n).map(|k| Rational::new(BigInt::one(), factorial(k + 1))).collect();
        let inv = LambdaSeries::from_rationals(0, denom).invert().expect("constant term is 1");
        *cache = (0..n)
            .map(|k| inv.scalar_coeff(k as i64).expect("within order").re * Rational::from_integer(factorial(k)))
            .collect();
    }
    cache[m].clone()
}

/// `|B_{2n}| = (-1)^{n-1} B_{2n}` for `n ≥ 1`.
pub fn abs_bernoulli_even(n: usize) -> Rational {
    let b = bernoulli(2 * n);
    if n % 2 == 1 {
        b
    } else {
        -b
    }
}
