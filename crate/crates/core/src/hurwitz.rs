//! Hurwitz numbers of almost simple covers, computed three ways, and the
//! linear Hodge integrals obtained by inverting ELSV.
//!
//! `H_{g,μ}` counts connected genus-`g` covers of the sphere with profile `μ`
//! over `∞` and `r = 2g - 2 + |μ| + l(μ)` further simple branch points,
//! weighted by `1/|μ|!`. The Burnside display fixes that normalization.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{factorial, format_rational, Gaussian, LambdaSeries, Rational, TauPoly};
use crate::partitions::{character_table, partitions_up_to, Partition};
use crate::pseries::{cut_join_apply, verify_cut_join, CutJoinReport, PartitionSeries};

/// Largest `|μ|` the enumeration oracle accepts.
pub const ORACLE_MAX_WEIGHT: usize = 6;
/// Largest number of simple branch points the enumeration oracle accepts.
pub const ORACLE_MAX_BRANCH: usize = 7;

/// Number of simple branch points, `2g - 2 + |μ| + l(μ)`.
pub fn branch_count(g: usize, mu: &Partition) -> usize {
    2 * g + mu.weight() + mu.len() - 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Burnside,
    Oracle,
    Cutjoin,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Burnside, Method::Oracle, Method::Cutjoin];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Burnside => "burnside",
            Method::Oracle => "oracle",
            Method::Cutjoin => "cutjoin",
        })
    }
}

/// `Φ(λ;p) = log Σ_μ Σ_ν χ_ν(μ)/z_μ · e^{κ_ν λ/2} · dim R_ν/|ν|! · p_μ`
/// through `λ^order`.
pub fn burnside_phi(weight_bound: usize, order: i64) -> Result<PartitionSeries> {
    if order < 0 {
        return Err(Error::Precondition("λ-order must be nonnegative".into()));
    }
    let mut z = PartitionSeries::one(weight_bound, order);
    for w in 1..=weight_bound {
        let table = character_table(w);
        let weighted: Vec<LambdaSeries> = table
            .partitions
            .par_iter()
            .map(|nu| {
                let hooks: u64 = nu.hooks().iter().map(|&h| h as u64).product();
                let half_kappa = Rational::new(BigInt::from(nu.kappa()), BigInt::from(2));
                let arg = LambdaSeries::monomial(TauPoly::from_rational(half_kappa), 1, order);
                arg.exp().expect("no constant term").scale_rational(&Rational::new(BigInt::one(), BigInt::from(hooks)))
            })
            .collect();
        let level: Vec<(Partition, LambdaSeries)> = table
            .partitions
            .par_iter()
            .map(|mu| {
                let mut acc = LambdaSeries::zero(order);
                for (nu, s) in table.partitions.iter().zip(&weighted) {
                    let chi = table.value(nu, mu);
                    if chi != 0 {
                        acc = acc.add(&s.scale_rational(&Rational::new(BigInt::from(chi), BigInt::from(mu.z()))));
                    }
                }
                (mu.clone(), acc)
            })
            .collect();
        for (mu, s) in level {
            z.insert(mu, s);
        }
    }
    z.log()
}

/// `∂Φ/∂λ = CJ(Φ)/2` through `λ^{order-1}`.
pub fn phi_cut_join_report(phi: &PartitionSeries, order: i64) -> Result<CutJoinReport> {
    let lhs = phi.map(|_, s| s.deriv_lambda());
    let half = Gaussian::real(Rational::new(BigInt::one(), BigInt::from(2)));
    verify_cut_join(phi, &lhs, &half, 0, order - 1)
}

/// `H_{g,μ} = r! · [λ^r p_μ] Φ`.
pub fn hurwitz_from_phi(phi: &PartitionSeries, g: usize, mu: &Partition) -> Result<Rational> {
    let r = branch_count(g, mu) as i64;
    let c = match phi.get(mu) {
        Some(s) => s.scalar_coeff(r)?,
        None => Gaussian::zero(),
    };
    if !c.is_real() {
        return Err(Error::Precondition(format!("Φ_{mu} has a non-real coefficient")));
    }
    Ok(c.re * Rational::from_integer(factorial(r as usize)))
}

/// `(1/|μ|!) · #{(σ, t_1..t_r)}` with `σ` of cycle type `μ`, each `t_k` a
/// transposition, `t_r⋯t_1 σ = 1` and `⟨σ, t_k⟩` transitive.
///
/// Counted by dynamic programming over (current product, orbit partition)
/// starting from one representative `σ`, then scaled by the class size.
pub fn oracle_hurwitz(g: usize, mu: &Partition) -> Result<Rational> {
    let d = mu.weight();
    let r = branch_count(g, mu);
    if d == 0 || d > ORACLE_MAX_WEIGHT || r > ORACLE_MAX_BRANCH {
        return Err(Error::OracleBound(format!(
            "oracle limited to 1 ≤ |μ| ≤ {ORACLE_MAX_WEIGHT}, r ≤ {ORACLE_MAX_BRANCH}; got |μ| = {d}, r = {r}"
        )));
    }
    let mut perm = [0u8; 8];
    let mut comp = [0u8; 8];
    let mut start = 0;
    for (c, &len) in mu.parts().iter().enumerate() {
        for k in 0..len {
            perm[start + k] = (start + (k + 1) % len) as u8;
            comp[start + k] = c as u8;
        }
        start += len;
    }
    let transpositions: Vec<(usize, usize)> = (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).collect();
    let mut states: HashMap<([u8; 8], [u8; 8]), u128> = HashMap::new();
    states.insert((perm, comp), 1);
    for _ in 0..r {
        let mut next: HashMap<([u8; 8], [u8; 8]), u128> = HashMap::with_capacity(states.len() * 2);
        for ((p, c), n) in &states {
            for &(a, b) in &transpositions {
                let mut q = *p;
                for x in q.iter_mut().take(d) {
                    if *x as usize == a {
                        *x = b as u8;
                    } else if *x as usize == b {
                        *x = a as u8;
                    }
                }
                let merged = merge_orbits(c, d, a, b);
                *next.entry((q, merged)).or_insert(0) += n;
            }
        }
        states = next;
    }
    let identity: [u8; 8] = std::array::from_fn(|i| if i < d { i as u8 } else { 0 });
    let connected = [0u8; 8];
    let paths = states.get(&(identity, connected)).copied().unwrap_or(0);
    let count = BigInt::from(paths) * BigInt::from(mu.conjugacy_class_size());
    Ok(Rational::new(count, factorial(d)))
}

/// Merge the orbits of `a` and `b`, relabelled by first occurrence.
fn merge_orbits(c: &[u8; 8], d: usize, a: usize, b: usize) -> [u8; 8] {
    let (from, to) = (c[b], c[a]);
    let mut out = [0u8; 8];
    let mut seen = [u8::MAX; 8];
    let mut next = 0u8;
    for i in 0..d {
        let l = if c[i] == from { to } else { c[i] } as usize;
        if seen[l] == u8::MAX {
            seen[l] = next;
            next += 1;
        }
        out[i] = seen[l];
    }
    out
}

/// Recursively solve `∂Φ/∂λ = CJ(Φ)/2` from `Φ = p_1 + O(λ)`, one
/// `λ`-order at a time, through `λ^order`.
pub fn cutjoin_phi(weight_bound: usize, order: i64) -> Result<PartitionSeries> {
    if weight_bound == 0 || order < 0 {
        return Err(Error::Precondition("weight bound must be positive and order nonnegative".into()));
    }
    let mut coeffs: BTreeMap<Partition, Vec<Gaussian>> = BTreeMap::new();
    coeffs.insert(Partition::single(1), vec![Gaussian::one()]);
    for k in 0..order {
        let current = to_series(&coeffs, weight_bound, k);
        let image = cut_join_apply(&current);
        let denom = Rational::from_integer(BigInt::from(2 * (k + 1)));
        for mu in partitions_up_to(weight_bound) {
            let c = match image.get(&mu) {
                Some(s) => s.scalar_coeff(k)?,
                None => Gaussian::zero(),
            };
            let entry = coeffs.entry(mu).or_insert_with(|| vec![Gaussian::zero(); k as usize + 1]);
            entry.resize(k as usize + 1, Gaussian::zero());
            entry.push(Gaussian::real(&c.re / &denom) + Gaussian::new(Rational::zero(), &c.im / &denom));
        }
    }
    Ok(to_series(&coeffs, weight_bound, order))
}

fn to_series(coeffs: &BTreeMap<Partition, Vec<Gaussian>>, weight_bound: usize, order: i64) -> PartitionSeries {
    let mut out = PartitionSeries::new(weight_bound);
    for (mu, cs) in coeffs {
        let mut cs = cs.clone();
        cs.resize(order as usize + 1, Gaussian::zero());
        out.insert(mu.clone(), LambdaSeries::from_gaussians(0, cs));
    }
    out
}

/// One row of a [`HurwitzTable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HurwitzEntry {
    pub g: usize,
    pub mu: Partition,
    pub r: usize,
    #[serde(rename = "H", serialize_with = "ser_rational")]
    pub h: Rational,
    pub method: Method,
}

/// A `(g, μ)` the oracle declined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub g: usize,
    pub mu: Partition,
    pub r: usize,
    pub method: Method,
    pub reason: String,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HurwitzTable {
    pub entries: Vec<HurwitzEntry>,
    pub skipped: Vec<Skipped>,
}

/// All `(g, μ)` with `g ≤ max_genus`, `1 ≤ |μ| ≤ weight_bound`, genus-major.
pub fn table_keys(weight_bound: usize, max_genus: usize) -> Vec<(usize, Partition)> {
    (0..=max_genus).flat_map(|g| partitions_up_to(weight_bound).into_iter().map(move |mu| (g, mu))).collect()
}

/// Tabulate `H_{g,μ}` with the given methods over [`table_keys`].
pub fn hurwitz_table(weight_bound: usize, max_genus: usize, methods: &[Method]) -> Result<HurwitzTable> {
    let keys = table_keys(weight_bound, max_genus);
    let max_r = keys.iter().map(|(g, mu)| branch_count(*g, mu)).max().unwrap_or(0) as i64;
    let mut table = HurwitzTable::default();
    for &method in methods {
        let phi = match method {
            Method::Burnside => Some(burnside_phi(weight_bound, max_r)?),
            Method::Cutjoin => Some(cutjoin_phi(weight_bound, max_r)?),
            Method::Oracle => None,
        };
        let rows: Vec<std::result::Result<HurwitzEntry, Skipped>> = keys
            .par_iter()
            .map(|(g, mu)| {
                let r = branch_count(*g, mu);
                let value = match &phi {
                    Some(phi) => hurwitz_from_phi(phi, *g, mu),
                    None => oracle_hurwitz(*g, mu),
                };
                match value {
                    Ok(h) => Ok(HurwitzEntry { g: *g, mu: mu.clone(), r, h, method }),
                    Err(e) => Err(Skipped { g: *g, mu: mu.clone(), r, method, reason: e.to_string() }),
                }
            })
            .collect();
        for row in rows {
            match row {
                Ok(e) => table.entries.push(e),
                Err(s) => table.skipped.push(s),
            }
        }
    }
    table.entries.sort_by(|a, b| (a.g, &a.mu, a.method).cmp(&(b.g, &b.mu, b.method)));
    table.skipped.sort_by(|a, b| (a.g, &a.mu, a.method).cmp(&(b.g, &b.mu, b.method)));
    Ok(table)
}

/// A `(g, μ)` where the methods present disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub g: usize,
    pub mu: Partition,
    pub values: BTreeMap<Method, String>,
}

impl HurwitzTable {
    pub fn get(&self, g: usize, mu: &Partition, method: Method) -> Option<&Rational> {
        self.entries.iter().find(|e| e.g == g && &e.mu == mu && e.method == method).map(|e| &e.h)
    }

    /// Every `(g, μ)` whose available values are not all equal.
    pub fn disagreements(&self) -> Vec<Disagreement> {
        let mut by_key: BTreeMap<(usize, Partition), BTreeMap<Method, Rational>> = BTreeMap::new();
        for e in &self.entries {
            by_key.entry((e.g, e.mu.clone())).or_default().insert(e.method, e.h.clone());
        }
        by_key
            .into_iter()
            .filter(|(_, vals)| vals.values().any(|v| Some(v) != vals.values().next()))
            .map(|((g, mu), vals)| Disagreement {
                g,
                mu,
                values: vals.iter().map(|(m, v)| (*m, format_rational(v))).collect(),
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("g,mu,r,H,method\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                e.g,
                e.mu.canonical_string(),
                e.r,
                format_rational(&e.h),
                e.method
            ));
        }
        out
    }
}

/// `I_{g,μ} = H_{g,μ}/r!` together with
/// `∫_{M_{g,l}} Λ∨_g(1)/Π(1-μ_iψ_i) = I_{g,μ} · |Aut μ| · Π μ_i^{μ_i}/μ_i!`
/// inverted, i.e. `I · |Aut μ| · Π μ_i!/μ_i^{μ_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearHodgeEntry {
    pub g: usize,
    pub mu: Partition,
    #[serde(rename = "I", serialize_with = "ser_rational")]
    pub i: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub integral: Rational,
}

pub fn elsv_invert(table: &HurwitzTable, method: Method) -> Vec<LinearHodgeEntry> {
    table
        .entries
        .iter()
        .filter(|e| e.method == method)
        .map(|e| {
            let i = &e.h / Rational::from_integer(factorial(e.r));
            let mut factor = Rational::from_integer(BigInt::from(e.mu.aut_order()));
            for &m in e.mu.parts() {
                factor *= Rational::new(factorial(m), BigInt::from(m).pow(m as u32));
            }
            LinearHodgeEntry { g: e.g, mu: e.mu.clone(), integral: &i * factor, i }
        })
        .collect()
}

/// True when every coefficient of `r! · Φ_μ` is a nonnegative rational.
pub fn phi_nonnegative(phi: &PartitionSeries) -> bool {
    phi.terms().all(|(_, s)| s.terms().all(|(_, c)| c.is_constant() && c.is_real() && !c.coeff(0).re.is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Plain enumeration over every `σ` in the class and every transposition
    /// tuple; transitivity via an explicit orbit closure.
    fn brute_force(g: usize, mu: &Partition) -> Rational {
        let d = mu.weight();
        let r = branch_count(g, mu);
        let perms = all_perms(d);
        let ts: Vec<Vec<usize>> = (0..d)
            .flat_map(|a| (a + 1..d).map(move |b| (a, b)))
            .map(|(a, b)| {
                let mut t: Vec<usize> = (0..d).collect();
                t.swap(a, b);
                t
            })
            .collect();
        let mut count = 0u64;
        let tuples = ts.len().pow(r as u32);
        for sigma in perms.iter().filter(|s| cycle_type(s) == *mu) {
            for code in 0..tuples {
                let idx: Vec<usize> = (0..r).map(|k| code / ts.len().pow(k as u32) % ts.len()).collect();
                let mut prod = sigma.clone();
                for &k in &idx {
                    prod = prod.iter().map(|&x| ts[k][x]).collect();
                }
                if prod.iter().enumerate().all(|(i, &x)| i == x) {
                    let gens: Vec<&Vec<usize>> = std::iter::once(sigma).chain(idx.iter().map(|&k| &ts[k])).collect();
                    if transitive(d, &gens) {
                        count += 1;
                    }
                }
            }
        }
        Rational::new(BigInt::from(count), factorial(d))
    }

    fn all_perms(d: usize) -> Vec<Vec<usize>> {
        if d == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(d - 1) {
            for pos in 0..d {
                let mut q = p.clone();
                q.insert(pos, d - 1);
                out.push(q);
            }
        }
        out
    }

    fn cycle_type(s: &[usize]) -> Partition {
        let mut seen = vec![false; s.len()];
        let mut parts = Vec::new();
        for i in 0..s.len() {
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = s[j];
                len += 1;
            }
            if len > 0 {
                parts.push(len);
            }
        }
        Partition::from_parts(parts)
    }

    fn transitive(d: usize, gens: &[&Vec<usize>]) -> bool {
        let mut reached = vec![false; d];
        reached[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = g[x];
                if !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
        reached.into_iter().all(|b| b)
    }

    #[test]
    fn oracle_matches_brute_force_on_tiny_cases() {
        for (g, mu) in [
            (0, p(&[1])),
            (1, p(&[2])),
            (0, p(&[1, 1])),
            (0, p(&[3])),
            (0, p(&[2, 1])),
            (1, p(&[1, 1])),
            (0, p(&[1, 1, 1])),
        ] {
            assert_eq!(oracle_hurwitz(g, &mu).unwrap(), brute_force(g, &mu), "g = {g}, mu = {mu}");
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(oracle_hurwitz(0, &p(&[1])).unwrap(), rat(1, 1));
        assert_eq!(oracle_hurwitz(1, &p(&[2])).unwrap(), rat(1, 2));
        assert_eq!(oracle_hurwitz(0, &p(&[1, 1])).unwrap(), rat(1, 2));
        assert_eq!(oracle_hurwitz(0, &p(&[2])).unwrap(), rat(1, 2));
        assert_eq!(oracle_hurwitz(0, &p(&[3])).unwrap(), rat(1, 1));
        assert!(oracle_hurwitz(0, &p(&[7])).is_err());
        assert!(oracle_hurwitz(4, &p(&[2])).is_err());
    }

    #[test]
    fn burnside_phi_two() {
        let phi = burnside_phi(2, 5).unwrap();
        assert_eq!(
            phi.get(&p(&[1])).unwrap(),
            &LambdaSeries::from_rationals(0, vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)])
        );
        let want: Vec<Rational> =
            [(0, 1), (1, 2), (0, 1), (1, 12), (0, 1), (1, 240)].iter().map(|&(a, b)| rat(a, b)).collect();
        assert_eq!(phi.get(&p(&[2])).unwrap(), &LambdaSeries::from_rationals(0, want));
        for g in 0..=2 {
            assert_eq!(hurwitz_from_phi(&phi, g, &p(&[2])).unwrap(), rat(1, 2));
        }
    }

    #[test]
    fn burnside_parity_and_positivity() {
        let phi = burnside_phi(5, 8).unwrap();
        assert!(phi_nonnegative(&phi));
        for (mu, s) in phi.terms() {
            for (k, c) in s.terms() {
                if !c.is_zero() {
                    assert_eq!((k as usize) % 2, (mu.weight() + mu.len()) % 2, "mu = {mu}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn cutjoin_agrees_with_burnside() {
        let a = burnside_phi(4, 7).unwrap();
        let b = cutjoin_phi(4, 7).unwrap();
        assert!(a.mismatches(&b, 7).unwrap().is_empty());
        assert!(phi_cut_join_report(&a, 7).unwrap().passed());
    }

    #[test]
    fn triple_agreement_small() {
        let t = hurwitz_table(3, 1, &Method::ALL).unwrap();
        assert!(t.disagreements().is_empty());
        assert_eq!(t.get(0, &p(&[3]), Method::Cutjoin), Some(&rat(1, 1)));
        assert!(t.to_csv().starts_with("g,mu,r,H,method\n0,1,0,1/1,burnside\n"));
    }

    #[test]
    fn elsv_inversion_examples() {
        let t = hurwitz_table(2, 1, &[Method::Oracle]).unwrap();
        let inv = elsv_invert(&t, Method::Oracle);
        let find = |g: usize, mu: &Partition| inv.iter().find(|e| e.g == g && &e.mu == mu).unwrap().clone();
        let e = find(1, &p(&[2]));
        assert_eq!((e.i, e.integral), (rat(1, 12), rat(1, 24)));
        let e = find(0, &p(&[1]));
        assert_eq!((e.i, e.integral), (rat(1, 1), rat(1, 1)));
        let e = find(0, &p(&[1, 1]));
        assert_eq!((e.i, e.integral), (rat(1, 4), rat(1, 2)));
    }
}
