//! Formal series `Σ_μ F_μ(λ;τ) p_μ` in the power sums `p_1, p_2, ...`.
//!
//! `p_μ` is the plain monomial `Π p_{μ_k}`, so `∂p_μ/∂p_i = m_i(μ) p_{μ∖i}`.
//! Keys are partitions of weight at most the bound; a missing key is an exact
//! zero while heavier weights are simply unknown.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Gaussian, LambdaSeries, Rational, SeriesJson, TauPoly};
use crate::partitions::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSeries {
    weight_bound: usize,
    terms: BTreeMap<Partition, LambdaSeries>,
}

fn q(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl PartitionSeries {
    pub fn new(weight_bound: usize) -> Self {
        Self { weight_bound, terms: BTreeMap::new() }
    }

    /// The constant series `1`, known in `λ` through `order`.
    pub fn one(weight_bound: usize, order: i64) -> Self {
        let mut s = Self::new(weight_bound);
        s.insert(Partition::empty(), LambdaSeries::one(order));
        s
    }

    pub fn monomial(weight_bound: usize, mu: Partition, coeff: LambdaSeries) -> Self {
        let mut s = Self::new(weight_bound);
        s.insert(mu, coeff);
        s
    }

    pub fn weight_bound(&self) -> usize {
        self.weight_bound
    }

    /// Insert a coefficient; terms above the weight bound are dropped.
    pub fn insert(&mut self, mu: Partition, coeff: LambdaSeries) {
        if mu.weight() <= self.weight_bound {
            self.terms.insert(mu, coeff);
        }
    }

    /// Add to an existing coefficient.
    pub fn accumulate(&mut self, mu: Partition, coeff: LambdaSeries) {
        if mu.weight() > self.weight_bound {
            return;
        }
        match self.terms.get_mut(&mu) {
            Some(old) => *old = old.add(&coeff),
            None => {
                self.terms.insert(mu, coeff);
            }
        }
    }

    pub fn get(&self, mu: &Partition) -> Option<&LambdaSeries> {
        self.terms.get(mu)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LambdaSeries)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Apply `f` to every coefficient.
    pub fn map(&self, f: impl Fn(&Partition, &LambdaSeries) -> LambdaSeries) -> Self {
        Self { weight_bound: self.weight_bound, terms: self.terms.iter().map(|(k, v)| (k.clone(), f(k, v))).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.accumulate(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        self.map(|_, s| s.scale(c))
    }

    /// Product of two series; `p_μ p_ν = p_{μ∪ν}`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        check_bounds(self, o)?;
        let mut out = Self::new(self.weight_bound);
        for (a, fa) in &self.terms {
            for (b, fb) in &o.terms {
                if a.weight() + b.weight() <= self.weight_bound {
                    out.accumulate(a.union(b), fa.mul(fb));
                }
            }
        }
        Ok(out)
    }

    /// `∂/∂p_i`.
    pub fn deriv_p(&self, i: usize) -> Self {
        let mut out = Self::new(self.weight_bound);
        for (mu, f) in &self.terms {
            let m = mu.multiplicity(i);
            if m > 0 {
                let rest = mu.without_part(i).expect("part present");
                out.accumulate(rest, f.scale_rational(&q(m)));
            }
        }
        out
    }

    /// Formal logarithm of a series with constant term exactly 1.
    ///
    /// Uses the Euler operator `E p_μ = |μ| p_μ`: from `E Z = Z · E log Z`,
    /// `|μ| F_μ = |μ| Z_μ - Σ_{∅≠a⊊μ} |a| F_a Z_{μ∖a}`.
    pub fn log(&self) -> Result<Self> {
        let constant = self
            .terms
            .get(&Partition::empty())
            .ok_or_else(|| Error::Precondition("log needs constant term 1".into()))?;
        let unit = LambdaSeries::one(constant.order());
        if !constant.mismatches(&unit, constant.order())?.is_empty() || constant.order() < 0 {
            return Err(Error::Precondition("log needs constant term 1".into()));
        }
        let mut out = Self::new(self.weight_bound);
        for w in 1..=self.weight_bound {
            let level: Vec<(Partition, LambdaSeries)> = crate::partitions::partitions_of(w)
                .into_par_iter()
                .filter_map(|mu| {
                    let mut acc: Option<LambdaSeries> = None;
                    for a in mu.sub_multisets() {
                        if a.is_empty() || a == mu {
                            continue;
                        }
                        let (Some(fa), Some(zb)) = (out.terms.get(&a), self.terms.get(&mu.difference(&a).unwrap()))
                        else {
                            continue;
                        };
                        let term = fa.mul(zb).scale_rational(&q(a.weight()));
                        acc = Some(match acc {
                            Some(s) => s.add(&term),
                            None => term,
                        });
                    }
                    let inv_w = Rational::new(BigInt::one(), BigInt::from(w));
                    let f = match (self.terms.get(&mu), acc) {
                        (Some(z), Some(s)) => z.sub(&s.scale_rational(&inv_w)),
                        (Some(z), None) => z.clone(),
                        (None, Some(s)) => s.scale_rational(&-inv_w),
                        (None, None) => return None,
                    };
                    Some((mu, f))
                })
                .collect();
            out.terms.extend(level);
        }
        Ok(out)
    }

    /// Formal exponential of a series without constant term.
    pub fn exp(&self) -> Result<Self> {
        if self.terms.contains_key(&Partition::empty()) {
            return Err(Error::Precondition("exp needs vanishing constant term".into()));
        }
        let order = self.terms.values().map(LambdaSeries::order).max().unwrap_or(0);
        let mut out = Self::one(self.weight_bound, order);
        let keys: Vec<Partition> = crate::partitions::partitions_up_to(self.weight_bound);
        for w in 1..=self.weight_bound {
            let level: Vec<(Partition, LambdaSeries)> = keys
                .par_iter()
                .filter(|mu| mu.weight() == w)
                .filter_map(|mu| {
                    let mut acc: Option<LambdaSeries> = None;
                    for a in mu.sub_multisets() {
                        if a.is_empty() {
                            continue;
                        }
                        let (Some(fa), Some(zb)) = (self.terms.get(&a), out.terms.get(&mu.difference(&a).unwrap()))
                        else {
                            continue;
                        };
                        let term = fa.mul(zb).scale_rational(&q(a.weight()));
                        acc = Some(match acc {
                            Some(s) => s.add(&term),
                            None => term,
                        });
                    }
                    acc.map(|s| (mu.clone(), s.scale_rational(&Rational::new(BigInt::one(), BigInt::from(w)))))
                })
                .collect();
            out.terms.extend(level);
        }
        Ok(out)
    }

    /// Coefficientwise differences against `o` through `λ^upto`.
    pub fn mismatches(&self, o: &Self, upto: i64) -> Result<Vec<Mismatch>> {
        check_bounds(self, o)?;
        let mut keys: Vec<&Partition> = self.terms.keys().chain(o.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        let mut out = Vec::new();
        for mu in keys {
            let zero = LambdaSeries::zero(upto);
            let a = self.terms.get(mu).unwrap_or(&zero);
            let b = o.terms.get(mu).unwrap_or(&zero);
            for (lambda_exp, tau_degree) in a.mismatches(b, upto)? {
                out.push(Mismatch { partition: mu.clone(), lambda_exp, tau_degree });
            }
        }
        Ok(out)
    }

    /// JSON object keyed by dotted partition strings, canonical order.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(k, v)| (k.canonical_string(), serde_json::to_value(v.to_json()).expect("serializable")))
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(weight_bound: usize, v: &serde_json::Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        let mut out = Self::new(weight_bound);
        for (k, s) in obj {
            let sj: SeriesJson = serde_json::from_value(s.clone()).map_err(|e| Error::Parse(e.to_string()))?;
            out.insert(Partition::parse(k)?, LambdaSeries::from_json(&sj)?);
        }
        Ok(out)
    }
}

fn check_bounds(a: &PartitionSeries, b: &PartitionSeries) -> Result<()> {
    if a.weight_bound != b.weight_bound {
        return Err(Error::TruncationMismatch(format!("weight bounds {} and {}", a.weight_bound, b.weight_bound)));
    }
    Ok(())
}

/// A coefficient where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub partition: Partition,
    pub lambda_exp: i64,
    pub tau_degree: usize,
}

/// The join and cut terms of the operator:
/// `Σ_{i,j} ( ij p_{i+j} ∂²F/∂p_i∂p_j + (i+j) p_i p_j ∂F/∂p_{i+j} )`.
pub fn cut_join_linear(f: &PartitionSeries) -> PartitionSeries {
    let mut out = PartitionSeries::new(f.weight_bound);
    for (mu, coeff) in &f.terms {
        for (mu2, mult) in linear_image(mu) {
            out.accumulate(mu2, coeff.scale_rational(&q(mult)));
        }
    }
    out
}

/// Image of one monomial `p_μ` under the linear part, as `(partition, multiplicity)`.
pub fn linear_image(mu: &Partition) -> Vec<(Partition, usize)> {
    let mults = mu.multiplicities();
    let mut acc: BTreeMap<Partition, usize> = BTreeMap::new();
    // join: ordered pairs of parts (i, j) merge into i + j
    for (&i, &mi) in &mults {
        for (&j, &mj) in &mults {
            let pairs = if i == j { mi * (mi - 1) } else { mi * mj };
            if pairs == 0 {
                continue;
            }
            let merged = mu.without_part(i).unwrap().without_part(j).unwrap().with_part(i + j);
            *acc.entry(merged).or_insert(0) += i * j * pairs;
        }
    }
    // cut: a part k splits into ordered (i, k - i)
    for (&k, &mk) in &mults {
        for i in 1..k {
            let split = mu.without_part(k).unwrap().with_part(i).with_part(k - i);
            *acc.entry(split).or_insert(0) += k * mk;
        }
    }
    acc.into_iter().collect()
}

/// The quadratic term `Σ_{i,j} ij p_{i+j} (∂F/∂p_i)(∂F/∂p_j)`.
pub fn cut_join_quadratic(f: &PartitionSeries) -> PartitionSeries {
    let d = f.weight_bound;
    let derivs: Vec<PartitionSeries> = (0..=d).map(|i| f.deriv_p(i)).collect();
    let pairs: Vec<(usize, usize)> =
        (1..=d).flat_map(|i| (i..=d).map(move |j| (i, j))).filter(|(i, j)| i + j <= d).collect();
    let parts: Vec<Vec<(Partition, LambdaSeries)>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let factor = q(i * j * if i == j { 1 } else { 2 });
            let mut local = Vec::new();
            for (a, fa) in &derivs[i].terms {
                for (b, fb) in &derivs[j].terms {
                    if a.weight() + b.weight() + i + j > d {
                        continue;
                    }
                    local.push((a.union(b).with_part(i + j), fa.mul(fb).scale_rational(&factor)));
                }
            }
            local
        })
        .collect();
    let mut out = PartitionSeries::new(d);
    for (mu, s) in parts.into_iter().flatten() {
        out.accumulate(mu, s);
    }
    out
}

/// The full cut-and-join right-hand side without its scalar prefactor.
pub fn cut_join_apply(f: &PartitionSeries) -> PartitionSeries {
    cut_join_linear(f).add(&cut_join_quadratic(f))
}

/// Outcome of checking `lhs = scalar · λ^lambda_power · CJ(F)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutJoinReport {
    pub checked_order: i64,
    pub coefficients_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CutJoinReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare `lhs` against `scalar · λ^lambda_power · CJ(F)` through `λ^upto`.
pub fn verify_cut_join(
    f: &PartitionSeries,
    lhs: &PartitionSeries,
    scalar: &Gaussian,
    lambda_power: i64,
    upto: i64,
) -> Result<CutJoinReport> {
    check_bounds(f, lhs)?;
    let rhs = cut_join_apply(f).map(|_, s| s.scale(scalar).shift(lambda_power));
    let mismatches = lhs.mismatches(&rhs, upto)?;
    let coefficients_checked = lhs
        .terms
        .keys()
        .chain(rhs.terms.keys())
        .collect::<std::collections::BTreeSet<_>>()
        .iter()
        .map(|mu| {
            let lo = [lhs.get(mu), rhs.get(mu)].iter().flatten().map(|s| s.min_exp()).min().unwrap_or(upto + 1);
            (upto - lo + 1).max(0) as usize
        })
        .sum();
    Ok(CutJoinReport { checked_order: upto, coefficients_checked, mismatches })
}

/// `c · p_μ` with a `λ`-constant coefficient, handy for tests and seeds.
pub fn constant_term(weight_bound: usize, mu: Partition, c: Rational, order: i64) -> PartitionSeries {
    PartitionSeries::monomial(weight_bound, mu, LambdaSeries::constant(TauPoly::from_rational(c), order))
}
