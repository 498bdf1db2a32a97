//! The character-sum side of the Mariño–Vafa formula,
//!
//! `R(λ;τ;p) = log Σ_μ Σ_{|ν|=|μ|} χ_ν(C(μ))/z_μ · e^{√-1(τ+1/2)κ_ν λ/2} V_ν(λ) p_μ`,
//!
//! with `V_ν(λ) = 1/Π_{x∈ν} 2 sin(h(x)λ/2)`, together with the identities it
//! satisfies: the cut-and-join equation in `τ`, its initial value at `τ = 0`,
//! the two `τ → 0` limits (λ_g integrals and Hurwitz numbers) and the
//! `τ`-derivative at `τ = 0` that controls the cubic and λ_{g-1} integrals.
//!
//! `τ` is carried as an exact polynomial and every limit is taken by exact
//! divisibility and evaluation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{
    abs_bernoulli_even, eval_poly, harmonic, int, interpolate, sin_double_half, Gaussian, LambdaSeries, Rational,
    TauPoly,
};
use crate::partitions::{character_table, partitions_up_to, Partition};
use crate::pseries::{CutJoinReport, Mismatch, PartitionSeries};

/// `1/Π_{x∈ν} 2 sin(h(x)λ/2)`, a Laurent series with leading term
/// `λ^{-|ν|}/Π h(x)`, known through `order`.
pub fn quantum_dim(nu: &Partition, order: i64) -> LambdaSeries {
    let n = nu.weight() as i64;
    // each inverted sine has a simple pole; the product loses n - 1 orders
    let sine_order = order + n + 1;
    let mut acc = LambdaSeries::one(order + n);
    for h in nu.hooks() {
        let inv = sin_double_half(h as u64, sine_order).invert().expect("sine has a unit leading term");
        acc = acc.mul(&inv);
    }
    acc.truncate(order)
}

/// The row/column double-product form of `V_ν`:
/// `Π_{a<b} sin[(ν_a-ν_b+b-a)λ/2]/sin[(b-a)λ/2] · 1/Π_i Π_{v≤ν_i} 2 sin[(v-i+l)λ/2]`.
pub fn quantum_dim_double_product(nu: &Partition, order: i64) -> LambdaSeries {
    let parts = nu.parts();
    let l = parts.len();
    let slack = (nu.weight() + l * l + 4) as i64;
    let big = order + slack;
    let inv_sine = |h: usize| sin_double_half(h as u64, big).invert().expect("unit leading term");
    let mut acc = LambdaSeries::one(big);
    for a in 0..l {
        for b in a + 1..l {
            let num = parts[a] - parts[b] + b - a;
            acc = acc.mul(&sin_double_half(num as u64, big)).mul(&inv_sine(b - a));
        }
    }
    for (i, &row) in parts.iter().enumerate() {
        for v in 1..=row {
            // v - (i+1) + l ≥ 1
            acc = acc.mul(&inv_sine(v + l - i - 1));
        }
    }
    assert!(acc.order() >= order, "double product lost too much precision");
    acc.truncate(order)
}

/// `exp(√-1 (τ + 1/2) κ λ/2)` known through `order`.
pub fn framing_exp(kappa: i64, order: i64) -> LambdaSeries {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let k_half = Rational::new(BigInt::from(kappa), BigInt::from(2));
    // √-1 κ/2 · (1/2 + τ)
    let lin =
        TauPoly::new(vec![Gaussian::new(Rational::zero(), &k_half * &half), Gaussian::new(Rational::zero(), k_half)]);
    LambdaSeries::monomial(lin, 1, order).exp().expect("argument has no constant term")
}

/// The normalization that turns `R_μ` into the triple-Hodge generating
/// function: `-|Aut(μ)| / √-1^{|μ|+l(μ)}`.
///
/// All `√-1` bookkeeping of the engine goes through this function.
pub fn hodge_normalization(mu: &Partition) -> Gaussian {
    let aut = Rational::from_integer(BigInt::from(mu.aut_order()));
    Gaussian::i_pow(-((mu.weight() + mu.len()) as i64)).scale(&-aut)
}

/// `R(λ;τ;p)` together with the disconnected sum `Z = exp R`.
#[derive(Clone, Debug)]
pub struct MvSeries {
    pub weight_bound: usize,
    pub lambda_order: i64,
    /// Every `λ^k` coefficient of `R_μ` has `τ`-degree at most `k + |μ|`, so
    /// `lambda_order + weight_bound` bounds all stored degrees.
    pub tau_degree_bound: usize,
    pub z: PartitionSeries,
    pub r: PartitionSeries,
}

/// Build `Z` and `R = log Z` for p-weight `≤ weight_bound`, `λ`-order `≤ lambda_order`.
pub fn build_r(weight_bound: usize, lambda_order: i64) -> Result<MvSeries> {
    if weight_bound == 0 {
        return Err(Error::Precondition("weight bound must be positive".into()));
    }
    let d = weight_bound as i64;
    let n = lambda_order;
    // Z_μ is needed through n + D - |μ| so that log Z is exact through n.
    let mut z = PartitionSeries::one(weight_bound, n + d);
    for w in 1..=weight_bound {
        let table = character_table(w);
        let zorder = n + d - w as i64;
        let weighted: Vec<LambdaSeries> = table
            .partitions
            .par_iter()
            .map(|nu| framing_exp(nu.kappa(), n + d).mul(&quantum_dim(nu, zorder)))
            .collect();
        let level: Vec<(Partition, LambdaSeries)> = table
            .partitions
            .par_iter()
            .map(|mu| {
                let zmu = Rational::new(BigInt::one(), BigInt::from(mu.z()));
                let mut acc = LambdaSeries::zero(zorder);
                for (nu, wnu) in table.partitions.iter().zip(&weighted) {
                    let chi = table.value(nu, mu);
                    if chi != 0 {
                        acc = acc.add(&wnu.scale_rational(&(&zmu * Rational::from_integer(BigInt::from(chi)))));
                    }
                }
                (mu.clone(), acc)
            })
            .collect();
        for (mu, s) in level {
            z.insert(mu, s);
        }
    }
    let r = z.log()?.map(|_, s| s.truncate(n));
    Ok(MvSeries { weight_bound, lambda_order: n, tau_degree_bound: (n + d).max(0) as usize, z, r })
}

impl MvSeries {
    /// `R_μ`, or an exact zero if absent.
    pub fn r_coeff(&self, mu: &Partition) -> Result<LambdaSeries> {
        if mu.weight() > self.weight_bound {
            return Err(Error::Precondition(format!("{mu} exceeds weight bound {}", self.weight_bound)));
        }
        Ok(self.r.get(mu).cloned().unwrap_or_else(|| LambdaSeries::zero(self.lambda_order)))
    }

    /// `∂R/∂τ = (√-1 λ/2) CJ(R)` coefficientwise through `lambda_order`.
    pub fn cut_join_report(&self) -> Result<CutJoinReport> {
        let lhs = self.r.map(|_, s| s.deriv_tau());
        let half_i = Gaussian::new(Rational::zero(), Rational::new(BigInt::one(), BigInt::from(2)));
        crate::pseries::verify_cut_join(&self.r, &lhs, &half_i, 1, self.lambda_order)
    }

    /// `R(λ;0;p)` against `-Σ_d √-1^{d+1} p_d / (2d sin(dλ/2))`: the
    /// single-part coefficients must match and every other one must vanish.
    pub fn initial_value_mismatches(&self) -> Result<Vec<Mismatch>> {
        let at_zero = self.r.map(|_, s| s.eval_tau(&Gaussian::zero()));
        let mut expected = PartitionSeries::new(self.weight_bound);
        for d in 1..=self.weight_bound {
            expected.insert(Partition::single(d), initial_value(d, self.lambda_order));
        }
        at_zero.mismatches(&expected, self.lambda_order)
    }
}

/// `-√-1^{d+1} / (2d sin(dλ/2))` through `order`.
pub fn initial_value(d: usize, order: i64) -> LambdaSeries {
    let inv = sin_double_half(d as u64, order + 2).invert().expect("unit");
    let c = Gaussian::i_pow(d as i64 + 1).scale(&-Rational::new(BigInt::one(), BigInt::from(d)));
    inv.scale(&c).truncate(order)
}

/// `Σ_{i+j=d} -√-1^{d+1} λ / (8 sin(iλ/2) sin(jλ/2))` over ordered pairs.
pub fn tau_derivative_target(d: usize, order: i64) -> LambdaSeries {
    let big = order + 3;
    let mut acc = LambdaSeries::zero(order);
    for i in 1..d {
        let j = d - i;
        let prod =
            sin_double_half(i as u64, big).invert().unwrap().mul(&sin_double_half(j as u64, big).invert().unwrap());
        acc = acc.add(&prod.shift(1));
    }
    // 1/(8 sin sin) = (1/2)·1/((2 sin)(2 sin))
    let c = Gaussian::i_pow(d as i64 + 1).scale(&-Rational::new(BigInt::one(), BigInt::from(2)));
    acc.scale(&c).truncate(order)
}

/// Compare `∂R_{(d)}/∂τ` at `τ = 0` with [`tau_derivative_target`] through `upto`.
pub fn tau_derivative_check(mv: &MvSeries, d: usize, upto: i64) -> Result<Vec<(i64, usize)>> {
    let left = mv.r_coeff(&Partition::single(d))?.deriv_tau().eval_tau(&Gaussian::zero());
    left.mismatches(&tau_derivative_target(d, upto), upto)
}

/// Left side of the `λ_g` limit: `lim_{τ→0}` of the normalized `R_μ`,
/// `-λ^{2-l} |Aut μ| / √-1^{|μ|+l} · [τ(τ+1)]^{1-l} Π (μ_i-1)!/Π_j (j+μ_iτ) · R_μ`.
///
/// Each `λ`-coefficient must be divisible by `τ^{l-1}`; the remaining factors
/// are 1 at `τ = 0`.
pub fn limit_lambda_g(mv: &MvSeries, mu: &Partition) -> Result<LambdaSeries> {
    let l = mu.len();
    let r = mv.r_coeff(mu)?;
    let norm = hodge_normalization(mu);
    let mut coeffs = Vec::new();
    for k in r.min_exp().min(r.order() + 1)..=r.order() {
        let q = r.coeff(k)?;
        let quotient = q.div_tau_pow(l - 1).ok_or_else(|| {
            Error::LimitViolation(format!("coefficient of λ^{k} in R_{mu} is not divisible by τ^{}", l - 1))
        })?;
        coeffs.push(TauPoly::constant(&quotient.coeff(0) * &norm));
    }
    let start = r.min_exp().min(r.order() + 1) + 2 - l as i64;
    Ok(LambdaSeries::new(start, r.order() + 2 - l as i64, coeffs))
}

/// `d^{l-3} (dλ/2)/sin(dλ/2)` with `d = |μ|`, `l = l(μ)`, through `order`.
pub fn lambda_g_target(mu: &Partition, order: i64) -> LambdaSeries {
    let d = mu.weight() as i64;
    let inv = sin_double_half(d as u64, order + 1).invert().expect("unit");
    let pow = mu.len() as i64 - 2;
    let c = if pow >= 0 {
        Rational::from_integer(BigInt::from(d).pow(pow as u32))
    } else {
        Rational::new(BigInt::one(), BigInt::from(d).pow((-pow) as u32))
    };
    inv.shift(1).scale_rational(&c).truncate(order)
}

/// The scaled limit `λ → λτ, τ → 1/τ, p_k → (λτ)^k p_k`, `τ → 0`, applied to
/// `R`. A term `c λ^k τ^j p_μ` becomes `c λ^{k+|μ|} τ^{k+|μ|-j} p_μ`, so the
/// limit exists iff `j ≤ k + |μ|` throughout, and keeps `j = k + |μ|`.
pub fn limit_elsv(mv: &MvSeries, upto: i64) -> Result<PartitionSeries> {
    let mut out = PartitionSeries::new(mv.weight_bound);
    for mu in partitions_up_to(mv.weight_bound) {
        let r = mv.r_coeff(&mu)?;
        let w = mu.weight() as i64;
        let mut coeffs = Vec::new();
        let lo = r.min_exp().min(r.order() + 1);
        for k in lo..=r.order() {
            let q = r.coeff(k)?;
            if let Some(deg) = q.degree() {
                if deg as i64 > k + w {
                    return Err(Error::LimitViolation(format!(
                        "R_{mu} has τ^{deg} at λ^{k}: negative τ-power survives"
                    )));
                }
            }
            coeffs.push(TauPoly::constant(q.coeff((k + w).max(0) as usize)));
        }
        let s = LambdaSeries::new(lo + w, r.order() + w, coeffs);
        if upto > s.order() {
            return Err(Error::BeyondValidity { exponent: upto, order: s.order() });
        }
        out.insert(mu, s.truncate(upto));
    }
    Ok(out)
}

/// `Φ(√-1 λ; p)`: multiply the `λ^r` coefficient by `√-1^r`.
pub fn twist_by_i(phi: &PartitionSeries) -> PartitionSeries {
    phi.map(|_, s| {
        let lo = s.min_exp().min(s.order() + 1);
        let coeffs = (lo..=s.order()).map(|k| s.coeff(k).unwrap().scale(&Gaussian::i_pow(k))).collect();
        LambdaSeries::new(lo, s.order(), coeffs)
    })
}

/// The one-part specialization of the MV formula differentiated at `τ = 0`:
/// `d/dτ|_0 [ -λ/√-1^{d+1} · (d-1)!/Π_{a<d}(dτ+a) · R_{(d)}(λ;τ) ]`.
pub fn ddd_from_r(mv: &MvSeries, d: usize) -> Result<LambdaSeries> {
    let r = mv.r_coeff(&Partition::single(d))?;
    let at0 = r.eval_tau(&Gaussian::zero());
    let slope = r.deriv_tau().eval_tau(&Gaussian::zero());
    // (d-1)!/Π(dτ+a) = 1 - d·H_{d-1} τ + O(τ²)
    let dh = int(d as i64) * harmonic(d - 1);
    let inner = slope.sub(&at0.scale_rational(&dh));
    Ok(inner.shift(1).scale(&hodge_normalization(&Partition::single(d))))
}

/// Closed-form right side of the derivative identity for one-part partitions:
/// `-H_{d-1} (dλ/2)/(d sin(dλ/2)) + Σ_{i+j=d} λ²/(8 sin(iλ/2) sin(jλ/2))`.
pub fn ddd_rhs(d: usize, order: i64) -> LambdaSeries {
    let big = order + 1;
    let inv = |h: usize| sin_double_half(h as u64, big).invert().expect("unit");
    let first = inv(d).shift(1).scale_rational(&-harmonic(d - 1));
    let mut conv = LambdaSeries::zero(order);
    for i in 1..d {
        conv = conv.add(&inv(i).mul(&inv(d - i)));
    }
    let second = conv.shift(2).scale_rational(&Rational::new(BigInt::one(), BigInt::from(2)));
    first.add(&second).truncate(order)
}

/// Polynomial-in-`d` coefficients extracted from the derivative identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DddExtraction {
    /// Coefficient of `d λ^{2g}`: `(-1)^{g-1}(2g-2) ∫_{M_g} λ_g λ_{g-1} λ_{g-2}`.
    pub cubic: BTreeMap<usize, Gaussian>,
    /// Coefficient of `d^{2g-1} λ^{2g}`: `-∫_{M_{g,1}} λ_{g-1}/(1-ψ_1)`.
    pub g_minus_1: BTreeMap<usize, Gaussian>,
    /// Interpolating polynomial per genus, ascending in `d`.
    pub polynomials: BTreeMap<usize, Vec<Rational>>,
}

impl DddExtraction {
    /// `∫_{M_g} λ_g λ_{g-1} λ_{g-2}` for `g ≥ 2`.
    pub fn cubic_integral(&self, g: usize) -> Option<Rational> {
        let c = self.cubic.get(&g)?;
        let sign = if g % 2 == 1 { 1 } else { -1 };
        Some(&c.re / int(sign * (2 * g as i64 - 2)))
    }

    /// `∫_{M_{g,1}} λ_{g-1}/(1-ψ_1)`.
    pub fn lambda_g_minus_1_integral(&self, g: usize) -> Option<Rational> {
        self.g_minus_1.get(&g).map(|c| -c.re.clone())
    }
}

/// Sample [`ddd_rhs`] at `d = 1..=d_max`, interpolate each `λ^{2g}`
/// coefficient as a polynomial of degree `≤ 2g-1` in `d` from the first `2g`
/// samples, and require the remaining samples to lie on it.
pub fn ddd_extraction(g_max: usize, d_max: usize) -> Result<DddExtraction> {
    if d_max < 2 * g_max + 2 {
        return Err(Error::Precondition(format!("need d_max ≥ 2·g_max + 2 for two residual samples, got {d_max}")));
    }
    let order = 2 * g_max as i64;
    let samples: Vec<LambdaSeries> = (1..=d_max).into_par_iter().map(|d| ddd_rhs(d, order)).collect();
    let mut out = DddExtraction { cubic: BTreeMap::new(), g_minus_1: BTreeMap::new(), polynomials: BTreeMap::new() };
    for g in 1..=g_max {
        let ys: Vec<Gaussian> = samples.iter().map(|s| s.scalar_coeff(2 * g as i64)).collect::<Result<Vec<_>>>()?;
        if ys.iter().any(|y| !y.is_real()) {
            return Err(Error::NotPolynomial(format!("λ^{} samples are not real", 2 * g)));
        }
        let xs: Vec<Rational> = (1..=d_max as i64).map(int).collect();
        let ys: Vec<Rational> = ys.into_iter().map(|y| y.re).collect();
        let fit = 2 * g;
        let poly = interpolate(&xs[..fit], &ys[..fit]);
        for (x, y) in xs.iter().zip(&ys).skip(fit) {
            if eval_poly(&poly, x) != *y {
                return Err(Error::NotPolynomial(format!("λ^{} coefficient off the fit at d = {x}", 2 * g)));
            }
        }
        if g >= 2 {
            out.cubic.insert(g, Gaussian::real(poly[1].clone()));
        }
        out.g_minus_1.insert(g, Gaussian::real(poly[2 * g - 1].clone()));
        out.polynomials.insert(g, poly);
    }
    Ok(out)
}

/// `b_g` read off `(t/2)/sin(t/2)`.
pub fn b_g_series(g_max: usize) -> Vec<Rational> {
    let s = sin_double_half(1, 2 * g_max as i64 + 2).invert().unwrap().shift(1);
    (0..=g_max).map(|g| s.scalar_coeff(2 * g as i64).unwrap().re).collect()
}

/// `((2^{2g-1}-1)/2^{2g-1}) |B_{2g}|/(2g)!`, with `b_0 = 1`.
pub fn b_g_closed(g: usize) -> Rational {
    if g == 0 {
        return Rational::one();
    }
    let p = BigInt::from(2).pow(2 * g as u32 - 1);
    Rational::new(&p - 1, p) * abs_bernoulli_even(g) / Rational::from_integer(crate::exact::factorial(2 * g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn real(min_exp: i64, cs: &[(i64, i64)]) -> LambdaSeries {
        LambdaSeries::from_rationals(min_exp, cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn quantum_dimension_examples() {
        assert_eq!(quantum_dim(&p(&[1]), 3), real(-1, &[(1, 1), (0, 1), (1, 24), (0, 1), (7, 5760)]));
        let v2 = quantum_dim(&p(&[2]), 0);
        assert_eq!(v2.min_exp(), -2);
        assert_eq!(v2.scalar_coeff(-2).unwrap(), Gaussian::real(rat(1, 2)));
        for nu in partitions_up_to(5) {
            let v = quantum_dim(&nu, 2);
            let hooks: i64 = nu.hooks().iter().map(|&h| h as i64).product();
            assert_eq!(v.scalar_coeff(-(nu.weight() as i64)).unwrap(), Gaussian::real(rat(1, hooks)));
        }
    }

    #[test]
    fn double_product_agrees_with_hooks() {
        for nu in partitions_up_to(6) {
            let a = quantum_dim(&nu, 6);
            let b = quantum_dim_double_product(&nu, 6);
            assert!(a.mismatches(&b, 6).unwrap().is_empty(), "nu = {nu}");
        }
    }

    #[test]
    fn initial_values_small() {
        let mv = build_r(3, 4).unwrap();
        assert!(mv.initial_value_mismatches().unwrap().is_empty());
        // R_(1)(λ;0) = 1/(2 sin(λ/2))
        let r1 = mv.r_coeff(&p(&[1])).unwrap().eval_tau(&Gaussian::zero());
        let expect = sin_double_half(1, 6).invert().unwrap().truncate(4);
        assert!(r1.mismatches(&expect, 4).unwrap().is_empty());
    }

    #[test]
    fn disconnected_coefficient_by_hand() {
        // Z_{(1,1)} = (1/2)[e^{√-1(τ+1/2)λ} V_(2) + e^{-√-1(τ+1/2)λ} V_(1,1)];
        // both V's start λ^{-2}/2, so the λ^{-2}τ^0 coefficient is 1/2.
        let mv = build_r(2, 2).unwrap();
        let z11 = mv.z.get(&p(&[1, 1])).unwrap();
        assert_eq!(z11.coeff(-2).unwrap(), TauPoly::from_rational(rat(1, 2)));
        // λ^{-1}: the framing terms cancel between κ = ±2
        assert!(z11.coeff(-1).unwrap().is_zero());
    }

    #[test]
    fn cut_join_small() {
        let mv = build_r(3, 3).unwrap();
        let rep = mv.cut_join_report().unwrap();
        assert!(rep.passed(), "{:?}", rep.mismatches);
    }

    #[test]
    fn tau_derivative_negative_control() {
        let mv = build_r(2, 4).unwrap();
        assert!(tau_derivative_check(&mv, 2, 4).unwrap().is_empty());
        let without = mv.r_coeff(&p(&[2])).unwrap().eval_tau(&Gaussian::zero());
        assert!(!without.mismatches(&tau_derivative_target(2, 4), 4).unwrap().is_empty());
    }

    #[test]
    fn lambda_g_limit_examples() {
        let mv = build_r(2, 6).unwrap();
        let l1 = limit_lambda_g(&mv, &p(&[1])).unwrap();
        assert!(l1.mismatches(&real(0, &[(1, 1), (0, 1), (1, 24), (0, 1), (7, 5760)]), 4).unwrap().is_empty());
        let l2 = limit_lambda_g(&mv, &p(&[2])).unwrap();
        let want = real(0, &[(1, 1), (0, 1), (1, 6), (0, 1), (7, 360)]).scale_rational(&rat(1, 4));
        assert!(l2.mismatches(&want, 4).unwrap().is_empty());
        let l11 = limit_lambda_g(&mv, &p(&[1, 1])).unwrap();
        assert!(l11.mismatches(&lambda_g_target(&p(&[1, 1]), 4), 4).unwrap().is_empty());
        assert_eq!(l11.scalar_coeff(0).unwrap(), Gaussian::real(rat(1, 2)));
    }

    #[test]
    fn normalized_r_is_real() {
        let mv = build_r(4, 4).unwrap();
        for (mu, s) in mv.r.terms() {
            assert!(s.scale(&hodge_normalization(mu)).is_real(), "mu = {mu}");
        }
    }

    #[test]
    fn b_g_two_ways() {
        let series = b_g_series(10);
        for (g, b) in series.iter().enumerate() {
            assert_eq!(*b, b_g_closed(g));
        }
        assert_eq!(series[1], rat(1, 24));
        assert_eq!(series[2], rat(7, 5760));
    }

    #[test]
    fn ddd_sides_agree_and_extract() {
        let mv = build_r(4, 5).unwrap();
        for d in 1..=4 {
            let from_r = ddd_from_r(&mv, d).unwrap();
            assert!(from_r.mismatches(&ddd_rhs(d, 6), 6).unwrap().is_empty(), "d = {d}");
        }
        let ex = ddd_extraction(2, 6).unwrap();
        assert_eq!(ex.cubic_integral(2).unwrap(), rat(1, 5760));
        assert_eq!(ex.g_minus_1[&1], Gaussian::real(rat(-1, 24)));
        assert_eq!(ex.polynomials[&1].len(), 2);
        assert!(ddd_extraction(2, 5).is_err());
    }
}
