//! Transitive subtournaments: the recursive extraction for k-majority
//! tournaments and exact search oracles for small tournaments.

use std::collections::HashMap;

use serde::{Serialize, Serializer};

use crate::bipartite::{find_consistent_pair, find_majority_dominating_pair};
use crate::error::{invalid, Error, Result};
use crate::profile::Profile;
use crate::tournament::{Direction, Tournament};
use crate::vertex_set::VertexSet;

/// Largest `n` accepted by [`max_transitive_bruteforce`].
pub const TRANSITIVE_ORACLE_LIMIT: usize = 30;
/// Largest `n` accepted by [`max_bipartite_transitive_bruteforce`].
pub const BIPARTITE_ORACLE_LIMIT: usize = 16;
/// Sub-problems up to this size are solved exactly inside the recursion.
pub const RECURSION_BASE: usize = 24;
/// Memo entries kept by the chain search before it stops caching.
pub const DEFAULT_MEMO_CAP: usize = 1 << 22;

/// A beat-chain: every listed vertex beats every later one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitiveWitness {
    pub vertices: Vec<usize>,
}

impl TransitiveWitness {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn verify(&self, t: &Tournament) -> bool {
        self.vertices.iter().all(|&v| v < t.n()) && t.is_chain(&self.vertices)
    }
}

impl Serialize for TransitiveWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            size: usize,
            vertices: &'a [usize],
        }
        Repr {
            size: self.size(),
            vertices: &self.vertices,
        }
        .serialize(s)
    }
}

/// A `T_{t,t}`: all edges between `a` and `b` follow `direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteWitness {
    pub a: VertexSet,
    pub b: VertexSet,
    pub direction: Direction,
}

impl BipartiteWitness {
    pub fn t(&self) -> usize {
        self.a.len().min(self.b.len())
    }

    pub fn verify(&self, t: &Tournament) -> bool {
        self.a.len() == self.b.len()
            && !self.a.is_empty()
            && self.a.iter().chain(self.b.iter()).all(|v| v < t.n())
            && matches!(t.bipartite_direction(&self.a, &self.b), Ok(Some(d)) if d == self.direction)
    }
}

impl Serialize for BipartiteWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            t: usize,
            #[serde(rename = "A")]
            a: &'a VertexSet,
            #[serde(rename = "B")]
            b: &'a VertexSet,
            direction: Direction,
        }
        Repr {
            t: self.t(),
            a: &self.a,
            b: &self.b,
            direction: self.direction,
        }
        .serialize(s)
    }
}

/// `n^(1 / (2k - log2(k) / 2))`, the guaranteed size of a transitive set.
pub fn transitive_lower_bound(n: usize, k: usize) -> f64 {
    let exponent = 1.0 / (2.0 * k as f64 - 0.5 * (k as f64).log2());
    (n as f64).powf(exponent)
}

/// `floor(log2 n) + 1`, the size every tournament on `n >= 1` vertices reaches.
pub fn log_floor_bound(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        n.ilog2() as usize + 1
    }
}

struct ChainSearch {
    out: Vec<u64>,
    memo: HashMap<u64, u8>,
    memo_cap: usize,
}

impl ChainSearch {
    fn new(t: &Tournament, memo_cap: usize) -> Self {
        Self {
            out: (0..t.n()).map(|u| t.out_mask(u)).collect(),
            memo: HashMap::new(),
            memo_cap,
        }
    }

    /// Upper bound from scores: a chain of length `L` inside `c` needs, for each
    /// `j <= L`, a `j`-th largest in-`c` out-degree of at least `L - j`.
    fn score_bound(&self, c: u64) -> u32 {
        let mut degs: Vec<u32> = bits(c).map(|v| (self.out[v] & c).count_ones()).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        let mut bound = degs.len() as u32;
        for (j, &d) in degs.iter().enumerate() {
            bound = bound.min(d + j as u32 + 1);
        }
        bound
    }

    /// Exact length of the longest chain inside `c`.
    fn longest(&mut self, c: u64) -> u8 {
        let size = c.count_ones();
        if size <= 2 {
            return size as u8;
        }
        if let Some(&v) = self.memo.get(&c) {
            return v;
        }
        let cap = self.score_bound(c) as u8;
        let mut cands: Vec<(u32, usize)> = bits(c).map(|v| ((self.out[v] & c).count_ones(), v)).collect();
        cands.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut best = 0u8;
        for (deg, v) in cands {
            if (deg as u8) < best {
                break;
            }
            best = best.max(1 + self.longest(c & self.out[v]));
            if best == cap {
                break;
            }
        }
        if self.memo.len() < self.memo_cap {
            self.memo.insert(c, best);
        }
        best
    }

    fn witness(&mut self, mut c: u64) -> Vec<usize> {
        let mut chain = Vec::new();
        let mut remaining = self.longest(c);
        while remaining > 0 {
            let v = bits(c)
                .find(|&v| 1 + self.longest(c & self.out[v]) == remaining)
                .expect("some vertex starts a longest chain");
            chain.push(v);
            c &= self.out[v];
            remaining -= 1;
        }
        chain
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Exact maximum transitive subtournament for `n <= 30`.
pub fn max_transitive_bruteforce(t: &Tournament) -> Result<TransitiveWitness> {
    max_transitive_with_limit(t, TRANSITIVE_ORACLE_LIMIT, DEFAULT_MEMO_CAP)
}

/// As [`max_transitive_bruteforce`] with an explicit size limit (at most 64) and memo cap.
///
/// Branches on the top vertex of the chain, recursing into its out-neighbourhood,
/// with exact results cached per candidate set.
pub fn max_transitive_with_limit(t: &Tournament, limit: usize, memo_cap: usize) -> Result<TransitiveWitness> {
    let limit = limit.min(64);
    if t.n() > limit {
        return Err(Error::ResourceLimit {
            what: "tournament size for exact transitive search",
            actual: t.n() as u128,
            limit: limit as u128,
        });
    }
    let mut search = ChainSearch::new(t, memo_cap);
    Ok(TransitiveWitness {
        vertices: search.witness(full_mask(t.n())),
    })
}

/// Exact maximum `T_{t,t}` for `n <= 16`.
pub fn max_bipartite_transitive_bruteforce(t: &Tournament) -> Result<BipartiteWitness> {
    max_bipartite_with_limit(t, BIPARTITE_ORACLE_LIMIT)
}

/// As [`max_bipartite_transitive_bruteforce`] with an explicit size limit (at most 64).
///
/// Grows the dominating side `A` one vertex at a time (increasing ids) and
/// tracks the common out-neighbourhood of `A`, which is the largest possible `B`.
pub fn max_bipartite_with_limit(t: &Tournament, limit: usize) -> Result<BipartiteWitness> {
    let n = t.n();
    if n > limit.min(64) {
        return Err(Error::ResourceLimit {
            what: "tournament size for exact bipartite search",
            actual: n as u128,
            limit: limit.min(64) as u128,
        });
    }
    if n < 2 {
        return Err(Error::NoPair(format!("need at least 2 vertices, got {n}")));
    }
    let out: Vec<u64> = (0..n).map(|u| t.out_mask(u)).collect();
    let mut best = (0usize, 0u64, 0u64);

    fn grow(out: &[u64], n: usize, next: usize, a: u64, common: u64, best: &mut (usize, u64, u64)) {
        let size_a = a.count_ones() as usize;
        let value = size_a.min(common.count_ones() as usize);
        if value > best.0 {
            *best = (value, a, common);
        }
        if common.count_ones() as usize <= best.0 || size_a + (n - next) <= best.0 {
            return;
        }
        for v in next..n {
            let c = common & out[v];
            if (c.count_ones() as usize) > best.0 {
                grow(out, n, v + 1, a | 1 << v, c, best);
            }
        }
    }
    grow(&out, n, 0, 0, full_mask(n), &mut best);

    let (size, a, b) = best;
    Ok(BipartiteWitness {
        a: bits(a).take(size).collect(),
        b: bits(b).take(size).collect(),
        direction: Direction::AToB,
    })
}

/// Best `T_{t,t}` formed from whole parts plus one split part.
///
/// `parts` must partition the vertex set. Part `i` is said to beat part `j`
/// when every edge between them goes from `V_i` to `V_j`. A candidate picks a
/// set `X` of parts for the dominating side, the parts `Y` beaten by all of
/// `X`, and optionally one part `k` (beaten by all of `X`, beating all of `Y`)
/// that contributes a bipartite witness found inside it. Inner witnesses use
/// the exact oracle when the part is small enough and a single edge otherwise.
/// The result is a verified lower bound, not a certified maximum.
pub fn guided_bipartite_search(t: &Tournament, parts: &[VertexSet]) -> Result<BipartiteWitness> {
    let n = t.n();
    let mut seen = vec![false; n];
    for part in parts {
        for v in part.iter() {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return invalid("parts must be disjoint subsets of the vertex set");
            }
        }
    }
    if seen.iter().any(|s| !s) || parts.iter().any(VertexSet::is_empty) {
        return invalid("parts must be nonempty and cover every vertex");
    }
    let q = parts.len();
    if q > 64 {
        return invalid("at most 64 parts are supported");
    }
    if n < 2 {
        return Err(Error::NoPair(format!("need at least 2 vertices, got {n}")));
    }

    // qout[i]: parts completely beaten by part i
    let mut qout = vec![0u64; q];
    for i in 0..q {
        for j in 0..q {
            if i != j && parts[i].iter().all(|u| parts[j].iter().all(|v| t.has_edge(u, v))) {
                qout[i] |= 1 << j;
            }
        }
    }
    let inner: Vec<Option<BipartiteWitness>> = parts.iter().map(|p| inner_witness(t, p)).collect();
    let weight = |mask: u64| bits(mask).map(|i| parts[i].len()).sum::<usize>();

    struct Choice {
        value: usize,
        x: u64,
        y: u64,
        split: Option<usize>,
    }
    let mut best: Option<Choice> = None;
    let mut consider = |x: u64| {
        let beaten = (0..q)
            .filter(|&i| x >> i & 1 == 1)
            .fold(full_mask(q), |acc, i| acc & qout[i]);
        let wx = weight(x);
        let mut options = vec![(None, beaten, 0usize)];
        for k in bits(beaten) {
            if let Some(w) = &inner[k] {
                options.push((Some(k), beaten & qout[k], w.t()));
            }
        }
        for (split, y, extra) in options {
            let value = (wx + extra).min(weight(y) + extra);
            if best.as_ref().is_none_or(|b| value > b.value) {
                best = Some(Choice { value, x, y, split });
            }
        }
    };
    if q <= 16 {
        for x in 0..1u64 << q {
            consider(x);
        }
    } else {
        consider(0);
        for i in 0..q {
            consider(1 << i);
            for j in i + 1..q {
                consider(1 << i | 1 << j);
            }
        }
    }

    let best = best.filter(|b| b.value > 0).ok_or_else(|| Error::Degenerate("no usable pair".into()))?;
    let mut a: Vec<usize> = bits(best.x).flat_map(|i| parts[i].iter()).collect();
    let mut b: Vec<usize> = bits(best.y).flat_map(|i| parts[i].iter()).collect();
    if let Some(k) = best.split {
        let w = inner[k].as_ref().expect("split part has a witness");
        let (wa, wb) = match w.direction {
            Direction::AToB => (&w.a, &w.b),
            Direction::BToA => (&w.b, &w.a),
        };
        a.extend(wa.iter());
        b.extend(wb.iter());
    }
    a.truncate(best.value);
    b.truncate(best.value);
    Ok(BipartiteWitness {
        a: a.into_iter().collect(),
        b: b.into_iter().collect(),
        direction: Direction::AToB,
    })
}

fn inner_witness(t: &Tournament, part: &VertexSet) -> Option<BipartiteWitness> {
    if part.len() < 2 {
        return None;
    }
    let local = t.induced(part);
    let ids = part.as_slice();
    let w = match max_bipartite_transitive_bruteforce(&local) {
        Ok(w) => w,
        Err(_) => {
            let (u, v) = (ids[0], ids[1]);
            let (from, to) = if t.has_edge(u, v) { (u, v) } else { (v, u) };
            return Some(BipartiteWitness {
                a: VertexSet::from([from]),
                b: VertexSet::from([to]),
                direction: Direction::AToB,
            });
        }
    };
    Some(BipartiteWitness {
        a: w.a.map(ids),
        b: w.b.map(ids),
        direction: w.direction,
    })
}

/// Transitive set of size at least `n^(1 / (2k - log2(k) / 2))` in the majority tournament of `p`.
///
/// Splits off a majority-dominating pair `(A, B)`, recurses into both sides and
/// concatenates the chains, `A`'s first. Small sub-problems go to the exact
/// oracle; an already transitive sub-profile is returned whole.
pub fn find_transitive_recursive(p: &Profile) -> Result<TransitiveWitness> {
    if p.n() == 0 {
        return invalid("empty profile");
    }
    Ok(TransitiveWitness {
        vertices: recurse(p)?,
    })
}

fn recurse(p: &Profile) -> Result<Vec<usize>> {
    let t = p.majority_tournament();
    if p.n() <= RECURSION_BASE {
        return Ok(max_transitive_bruteforce(&t)?.vertices);
    }
    let all = VertexSet::range(p.n());
    if let Some(order) = t.transitive_order(&all) {
        return Ok(order);
    }
    let (a, b) = match find_majority_dominating_pair(p) {
        Ok(pair) => pair,
        Err(Error::Degenerate(_)) => {
            let (a, b) = find_consistent_pair(p)?;
            match t.bipartite_direction(&a, &b)? {
                Some(Direction::BToA) => (b, a),
                _ => (a, b),
            }
        }
        Err(e) => return Err(e),
    };
    let mut chain = Vec::new();
    for side in [&a, &b] {
        let (sub, back) = p.restrict(side)?;
        chain.extend(recurse(&sub)?.into_iter().map(|v| back[v]));
    }
    Ok(chain)
}
