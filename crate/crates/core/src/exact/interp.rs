//! Exact polynomial interpolation.

use num_traits::Zero;

use super::rational::Rational;

/// Coefficients (ascending) of the unique polynomial of degree `< xs.len()`
/// through the points, by Newton divided differences.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    assert_eq!(xs.len(), ys.len(), "one value per node");
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // expand Σ dd[k] Π_{j<k} (x - xs[j]) by Horner from the top
    let mut coeffs: Vec<Rational> = vec![Rational::zero(); n.max(1)];
    for k in (0..n).rev() {
        // coeffs ← coeffs·(x - xs[k]) + dd[k]
        let mut next = vec![Rational::zero(); n.max(1)];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i + 1 < next.len() {
                next[i + 1] += c;
            }
            next[i] -= c * &xs[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}

pub fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}
