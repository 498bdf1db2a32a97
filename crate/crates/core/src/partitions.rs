//! Partitions and symmetric-group representation data.
//!
//! Canonical order everywhere: by weight, then decreasing lexicographic
//! within a weight, so `(3) < (2,1) < (1,1,1)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single(k: usize) -> Self {
        Self::from_parts(vec![k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `l(μ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m_j(μ)`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Multiset union, `p_μ · p_ν = p_{μ∪ν}`.
    pub fn union(&self, o: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&o.parts);
        Self::from_parts(parts)
    }

    pub fn with_part(&self, k: usize) -> Self {
        let mut parts = self.parts.clone();
        parts.push(k);
        Self::from_parts(parts)
    }

    /// Remove one part equal to `k`, if present.
    pub fn without_part(&self, k: usize) -> Option<Self> {
        let pos = self.parts.iter().position(|&p| p == k)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Self { parts })
    }

    /// Multiset difference; `None` unless `o ⊆ self`.
    pub fn difference(&self, o: &Self) -> Option<Self> {
        let mut rest = self.clone();
        for &p in &o.parts {
            rest = rest.without_part(p)?;
        }
        Some(rest)
    }

    /// Every sub-multiset of the parts, each exactly once.
    pub fn sub_multisets(&self) -> Vec<Partition> {
        let mut out = vec![Vec::new()];
        for (&part, &mult) in self.multiplicities().iter().rev() {
            let mut next = Vec::with_capacity(out.len() * (mult + 1));
            for base in &out {
                for c in 0..=mult {
                    let mut v: Vec<usize> = base.clone();
                    v.extend(std::iter::repeat_n(part, c));
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(Self::from_parts).collect()
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.parts.first().copied().unwrap_or(0);
        Self::from_parts((1..=cols).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// Dotted string form, e.g. `"3.1.1"`; the empty partition is `""`.
    pub fn canonical_string(&self) -> String {
        self.parts.iter().map(usize::to_string).collect::<Vec<_>>().join(".")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(['.', ','])
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// Centralizer order `z_μ = Π_j j^{m_j} m_j!`.
    pub fn z(&self) -> u64 {
        self.multiplicities().iter().map(|(&j, &m)| (j as u64).pow(m as u32) * factorial_u64(m)).product()
    }

    /// `|Aut(μ)| = Π_j m_j!`.
    pub fn aut_order(&self) -> u64 {
        self.multiplicities().values().map(|&m| factorial_u64(m)).product()
    }

    /// `κ_μ = Σ_i μ_i(μ_i - 2i + 1)`, twice the content sum.
    pub fn kappa(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let p = p as i64;
                p * (p - 2 * (i as i64 + 1) + 1)
            })
            .sum()
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push((row - j - 1) + (conj.parts[j] - i - 1) + 1);
            }
        }
        out
    }

    /// Dimension of the irreducible representation, by the hook-length formula.
    pub fn dim(&self) -> u64 {
        let hooks: u64 = self.hooks().iter().map(|&h| h as u64).product();
        factorial_u64(self.weight()) / hooks
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats {
            z: self.z(),
            aut_order: self.aut_order(),
            kappa: self.kappa(),
            hooks: self.hooks(),
            dim: self.dim(),
        }
    }

    /// Number of permutations of cycle type `μ`.
    pub fn conjugacy_class_size(&self) -> u64 {
        factorial_u64(self.weight()) / self.z()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Ord for Partition {
    fn cmp(&self, o: &Self) -> Ordering {
        self.weight().cmp(&o.weight()).then_with(|| o.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub z: u64,
    pub aut_order: u64,
    pub kappa: i64,
    pub hooks: Vec<usize>,
    pub dim: u64,
}

fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All nonempty partitions of weight at most `max_weight`, canonical order.
pub fn partitions_up_to(max_weight: usize) -> Vec<Partition> {
    (1..=max_weight).flat_map(partitions_of).collect()
}

/// Character table of `S_n`: rows `ν`, columns `μ`, both canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
    index: HashMap<Partition, usize>,
}

impl CharacterTable {
    fn build(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|nu| partitions.iter().map(|mu| murnaghan_nakayama(nu.parts(), mu.parts(), &mut memo)).collect())
            .collect();
        Self { n, partitions, values, index }
    }

    /// `χ_ν(C(μ))`.
    pub fn value(&self, nu: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[nu]][self.index[mu]]
    }

    pub fn row(&self, nu: &Partition) -> &[i64] {
        &self.values[self.index[nu]]
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("nu");
        for mu in &self.partitions {
            out.push(',');
            out.push_str(&mu.canonical_string());
        }
        out.push('\n');
        for (nu, row) in self.partitions.iter().zip(&self.values) {
            out.push_str(&nu.canonical_string());
            for v in row {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }
}

static TABLES: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();

/// Cached character table of `S_n`.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    let lock = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = lock.read().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let table = Arc::new(CharacterTable::build(n));
    Arc::clone(lock.write().unwrap().entry(n).or_insert(table))
}

/// `χ_ν(C(μ))`.
pub fn character(nu: &Partition, mu: &Partition) -> Result<i64> {
    if nu.weight() != mu.weight() {
        return Err(Error::WeightMismatch { left: nu.weight(), right: mu.weight() });
    }
    Ok(character_table(nu.weight()).value(nu, mu))
}

type MnKey = (Vec<usize>, Vec<usize>);

/// Murnaghan–Nakayama: strip rim hooks of length `μ_1, μ_2, ...` from `ν`,
/// each weighted by `(-1)^{height}`. Rim hooks are moves on the beta-set
/// `{ν_i + l - i}`: a bead slides from `b` to `b - k` when that slot is free,
/// and the height is the number of beads jumped over.
fn murnaghan_nakayama(nu: &[usize], mu: &[usize], memo: &mut HashMap<MnKey, i64>) -> i64 {
    if mu.is_empty() {
        return if nu.is_empty() { 1 } else { 0 };
    }
    let key = (nu.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = mu[0];
    let l = nu.len();
    let beta: Vec<usize> = nu.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next: Vec<usize> = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = next.iter().enumerate().map(|(i, &c)| c - (l - 1 - i)).filter(|&p| p > 0).collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&shape, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(1), vec![p(&[1])]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(5).len(), 7);
        let counts: Vec<usize> = (1..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let mut sorted = partitions_of(6);
        sorted.sort();
        assert_eq!(sorted, partitions_of(6));
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::parse("3.1.1").unwrap(), p(&[3, 1, 1]));
        assert_eq!(p(&[3, 1, 1]).canonical_string(), "3.1.1");
        assert_eq!(serde_json::to_string(&p(&[3, 1, 1])).unwrap(), "[3,1,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn statistics() {
        let one = p(&[1]).stats();
        assert_eq!((one.z, one.aut_order, one.kappa, one.dim), (1, 1, 0, 1));
        assert_eq!(one.hooks, vec![1]);

        let s = p(&[2, 1]).stats();
        assert_eq!((s.z, s.aut_order, s.dim), (2, 1, 2));
        let mut h = s.hooks;
        h.sort();
        assert_eq!(h, vec![1, 1, 3]);

        assert_eq!(p(&[2]).kappa(), 2);
        assert_eq!(p(&[1, 1]).kappa(), -2);
        assert_eq!(p(&[2, 2, 1]).aut_order(), 2);
        assert_eq!(p(&[2, 2, 1]).z(), 8);
    }

    #[test]
    fn class_sizes() {
        assert_eq!(p(&[1, 1, 1]).conjugacy_class_size(), 1);
        assert_eq!(p(&[2, 1]).conjugacy_class_size(), 3);
        assert_eq!(p(&[3]).conjugacy_class_size(), 2);
        for n in 1..=8 {
            let total: u64 = partitions_of(n).iter().map(Partition::conjugacy_class_size).sum();
            assert_eq!(total, factorial_u64(n));
        }
    }

    #[test]
    fn character_examples() {
        for mu in partitions_of(4) {
            assert_eq!(character(&p(&[4]), &mu).unwrap(), 1);
        }
        assert_eq!(character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert!(character(&p(&[2]), &p(&[1])).is_err());
    }

    /// S_3 characters from class sums: the class-sum products of S_3 give the
    /// standard table independently of rim hooks.
    #[test]
    fn s3_table() {
        let t = character_table(3);
        assert_eq!(t.row(&p(&[3])), &[1, 1, 1]);
        assert_eq!(t.row(&p(&[2, 1])), &[-1, 0, 2]);
        assert_eq!(t.row(&p(&[1, 1, 1])), &[1, -1, 1]);
        assert_eq!(t.to_csv().lines().next().unwrap(), "nu,3,2.1,1.1.1");
    }

    #[test]
    fn orthogonality_and_dimensions() {
        use num_rational::Ratio;
        for n in 1..=8 {
            let t = character_table(n);
            let parts = &t.partitions;
            for a in parts {
                for b in parts {
                    let s: Ratio<i64> =
                        parts.iter().map(|mu| Ratio::new(t.value(a, mu) * t.value(b, mu), mu.z() as i64)).sum();
                    assert_eq!(s, Ratio::from_integer((a == b) as i64), "rows {a} {b}");
                    // columns: Σ_ν χ_ν(μ)χ_ν(μ') = δ z_μ
                    let c: i64 = parts.iter().map(|nu| t.value(nu, a) * t.value(nu, b)).sum();
                    assert_eq!(c, if a == b { a.z() as i64 } else { 0 });
                }
            }
            let ident = Partition::from_parts(vec![1; n]);
            let dims: u64 = parts.iter().map(|nu| nu.dim().pow(2)).sum();
            assert_eq!(dims, factorial_u64(n));
            for nu in parts {
                assert_eq!(nu.dim() as i64, t.value(nu, &ident));
                assert_eq!(nu.kappa(), -nu.conjugate().kappa());
            }
        }
    }

    #[test]
    fn sub_multisets_are_distinct() {
        let subs = p(&[2, 1, 1]).sub_multisets();
        assert_eq!(subs.len(), 6);
        let mut s = subs.clone();
        s.sort();
        s.dedup();
        assert_eq!(s.len(), 6);
        assert_eq!(p(&[3, 1]).union(&p(&[2])), p(&[3, 2, 1]));
        assert_eq!(p(&[3, 2, 1]).difference(&p(&[2])), Some(p(&[3, 1])));
        assert_eq!(p(&[3, 1]).difference(&p(&[2])), None);
    }
}
