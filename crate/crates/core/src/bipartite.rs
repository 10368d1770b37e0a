//! Large bipartite pairs inside k-majority tournaments.
//!
//! [`find_consistent_pair`] halves once per order and keeps the half-pair that
//! stays consistent, giving sides of at least `floor(n / 2^(2k-1))`.
//! [`coarse_partition`] labels vertices with binary types (one halving bit per
//! order, balanced between antipodal prefixes) and groups them by a prefix code
//! `Q` of size `binom(2k, k)`; each group with at least `k` zeros in its label
//! majority-dominates its antipodal group.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::profile::Profile;
use crate::vertex_set::VertexSet;

/// A binary vector of halving decisions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeVector(Vec<bool>);

impl TypeVector {
    pub fn new(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => invalid(format!("type vector must be 0/1, got {c:?}")),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|b| !**b).count()
    }

    pub fn ones(&self) -> usize {
        self.0.len() - self.zeros()
    }

    pub fn antipode(&self) -> TypeVector {
        Self(self.0.iter().map(|b| !b).collect())
    }

    pub fn prefix(&self, len: usize) -> TypeVector {
        Self(self.0[..len].to_vec())
    }

    pub fn has_prefix(&self, p: &TypeVector) -> bool {
        self.0.starts_with(&p.0)
    }

    fn pushed(&self, bit: bool) -> TypeVector {
        let mut v = self.0.clone();
        v.push(bit);
        Self(v)
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for TypeVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One labelled pair `(A_s, B_s)`; `B_s` collects the types extending the antipode of `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypePair {
    pub s: TypeVector,
    #[serde(rename = "A")]
    pub a: VertexSet,
    #[serde(rename = "B")]
    pub b: VertexSet,
}

impl TypePair {
    pub fn min_side(&self) -> usize {
        self.a.len().min(self.b.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypePartition {
    /// Full-length type of every vertex, indexed by vertex id.
    pub assignment: Vec<TypeVector>,
    pub pairs: Vec<TypePair>,
}

impl TypePartition {
    /// Number of groups, counting both sides of every pair (empty groups included).
    pub fn num_parts(&self) -> usize {
        2 * self.pairs.len()
    }

    /// Vertices whose type starts with `prefix`.
    pub fn class(&self, prefix: &TypeVector) -> VertexSet {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, t)| t.has_prefix(prefix))
            .map(|(v, _)| v)
            .collect()
    }
}

/// Keeps the `len` members of `side` that come first in `order_pos`.
fn trim(side: &mut Vec<usize>, len: usize, order_pos: impl Fn(usize) -> usize) {
    side.sort_unstable_by_key(|&v| order_pos(v));
    side.truncate(len);
}

/// Equal-size disjoint sets that are consistent in every order of `p`.
pub fn find_consistent_pair(p: &Profile) -> Result<(VertexSet, VertexSet)> {
    let n = p.n();
    if n < 2 {
        return Err(Error::NoPair(format!("need at least 2 vertices, got {n}")));
    }
    let orders = p.orders();
    let first = orders[0].seq();
    let half = n / 2;
    let mut a: Vec<usize> = first[..half].to_vec();
    let mut b: Vec<usize> = first[half..].to_vec();
    trim(&mut b, half, |v| orders[0].pos(v));

    for o in &orders[1..] {
        let s = a.len();
        let mut merged: Vec<usize> = a.iter().chain(&b).copied().collect();
        merged.sort_unstable_by_key(|&v| o.pos(v));
        let in_c = |v: usize| merged[..s].binary_search_by_key(&o.pos(v), |&w| o.pos(w)).is_ok();
        let (a_c, a_d): (Vec<usize>, Vec<usize>) = a.iter().partition(|&&v| in_c(v));
        let (b_c, b_d): (Vec<usize>, Vec<usize>) = b.iter().partition(|&&v| in_c(v));
        // |A∩C| = |B∩D| and |A∩D| = |B∩C| because C holds exactly s of the 2s vertices
        let (mut na, mut nb) = if a_c.len().min(b_d.len()) >= a_d.len().min(b_c.len()) {
            (a_c, b_d)
        } else {
            (a_d, b_c)
        };
        let len = na.len().min(nb.len());
        trim(&mut na, len, |v| o.pos(v));
        trim(&mut nb, len, |v| o.pos(v));
        a = na;
        b = nb;
    }
    Ok((a.into_iter().collect(), b.into_iter().collect()))
}

/// Assigns every vertex a type of length `2k - 1`.
///
/// Coordinate 1 puts the first `floor(n/2)` vertices of the first order at 0.
/// Coordinate `i + 1` takes each antipodal prefix pair `(s, s̄)`, restricts
/// order `i + 1` to their union, and gives 0 to the first `|A_s|` of them.
/// The pairs of the result are the full-length antipodal pairs.
pub fn type_partition(p: &Profile) -> TypePartition {
    let n = p.n();
    let orders = p.orders();
    let mut types: Vec<TypeVector> = vec![TypeVector::default(); n];
    for (i, &v) in orders[0].seq().iter().enumerate() {
        types[v] = TypeVector::new(vec![i >= n / 2]);
    }

    for o in &orders[1..] {
        let mut groups: BTreeMap<TypeVector, Vec<usize>> = BTreeMap::new();
        for (v, t) in types.iter().enumerate() {
            groups.entry(t.clone()).or_default().push(v);
        }
        let mut next = types.clone();
        for (s, a) in &groups {
            if s.bits()[0] {
                // handled as the antipode of a prefix starting with 0
                if groups.contains_key(&s.antipode()) {
                    continue;
                }
            }
            let b = groups.get(&s.antipode()).map(Vec::as_slice).unwrap_or(&[]);
            let split = if s.bits()[0] { b.len() } else { a.len() };
            let mut merged: Vec<usize> = a.iter().chain(b).copied().collect();
            merged.sort_unstable_by_key(|&v| o.pos(v));
            for (i, &v) in merged.iter().enumerate() {
                next[v] = types[v].pushed(i >= split);
            }
        }
        types = next;
    }

    let full = 2 * p.k() - 1;
    let pairs = all_vectors(full)
        .into_iter()
        .filter(|s| !s.bits()[0])
        .map(|s| pair_for(&types, s))
        .collect();
    TypePartition {
        assignment: types,
        pairs,
    }
}

fn all_vectors(len: usize) -> Vec<TypeVector> {
    (0..1u64 << len)
        .map(|m| TypeVector::new((0..len).map(|i| m >> (len - 1 - i) & 1 == 1).collect()))
        .collect()
}

fn pair_for(types: &[TypeVector], s: TypeVector) -> TypePair {
    let anti = s.antipode();
    let mut a = VertexSet::new();
    let mut b = VertexSet::new();
    for (v, t) in types.iter().enumerate() {
        if t.has_prefix(&s) {
            a.insert(v);
        } else if t.has_prefix(&anti) {
            b.insert(v);
        }
    }
    TypePair { s, a, b }
}

/// The prefix code `Q`: grow binary vectors from the empty word and stop a
/// branch as soon as it holds `k` zeros or `k` ones.
///
/// Lengths run from `k` to `2k - 1`; `|Q| = binom(2k, k)`.
pub fn build_q(k: usize) -> Result<Vec<TypeVector>> {
    if k < 1 {
        return invalid("k must be at least 1");
    }
    let mut q = Vec::new();
    let mut frontier = vec![TypeVector::default()];
    while !frontier.is_empty() {
        let mut grown = Vec::with_capacity(frontier.len() * 2);
        for v in frontier {
            for bit in [false, true] {
                let w = v.pushed(bit);
                if w.zeros() >= k || w.ones() >= k {
                    q.push(w);
                } else {
                    grown.push(w);
                }
            }
        }
        frontier = grown;
    }
    q.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(q)
}

/// Groups the types by their `Q`-prefix into `binom(2k, k) / 2` majority-dominating pairs.
pub fn coarse_partition(p: &Profile) -> TypePartition {
    let fine = type_partition(p);
    let q = build_q(p.k()).expect("profile k >= 1");
    let pairs = q
        .into_iter()
        .filter(|s| s.zeros() >= p.k())
        .map(|s| pair_for(&fine.assignment, s))
        .collect();
    TypePartition {
        assignment: fine.assignment,
        pairs,
    }
}

/// The coarse pair with the largest smaller side, trimmed to equal sizes.
/// The first set majority-dominates the second.
pub fn find_majority_dominating_pair(p: &Profile) -> Result<(VertexSet, VertexSet)> {
    if p.n() == 0 {
        return invalid("empty profile");
    }
    let part = coarse_partition(p);
    let best = part
        .pairs
        .iter()
        .fold(None::<&TypePair>, |best, pair| match best {
            Some(b) if b.min_side() >= pair.min_side() => Some(b),
            _ => Some(pair),
        })
        .expect("at least one pair");
    let len = best.min_side();
    if len == 0 {
        return Err(Error::Degenerate(format!(
            "every pair has an empty side (n = {}, k = {})",
            p.n(),
            p.k()
        )));
    }
    let first = &p.orders()[0];
    let mut a: Vec<usize> = best.a.iter().collect();
    let mut b: Vec<usize> = best.b.iter().collect();
    trim(&mut a, len, |v| first.pos(v));
    trim(&mut b, len, |v| first.pos(v));
    Ok((a.into_iter().collect(), b.into_iter().collect()))
}

/// `binom(n, r)` in `u128`.
pub fn binomial(n: u64, r: u64) -> u128 {
    let r = r.min(n.saturating_sub(r));
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
