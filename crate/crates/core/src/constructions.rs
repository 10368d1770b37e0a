//! Tournament constructions: lexicographic products and powers, lifted
//! realizers, the Paley tournament on seven vertices, realizer search and
//! seeded random tournaments.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::order::LinearOrder;
use crate::profile::Profile;
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// Default node budget for [`find_realizer`].
pub const DEFAULT_REALIZER_BUDGET: u64 = 50_000_000;

/// Lexicographic product `g1 ∘ g2` on `n1 * n2` vertices.
///
/// Vertex `(u, v)` with `u` in `g1` and `v` in `g2` is encoded as `v * n1 + u`.
/// Vertices in different blocks are ordered by `g2`; inside a block by `g1`.
pub fn lex_product(g1: &Tournament, g2: &Tournament) -> Tournament {
    let n1 = g1.n();
    Tournament::from_fn(n1 * g2.n(), |x, y| {
        let (u1, v1) = (x % n1, x / n1);
        let (u2, v2) = (y % n1, y / n1);
        if v1 != v2 {
            g2.has_edge(v1, v2)
        } else {
            g1.has_edge(u1, u2)
        }
    })
}

/// `G^1 = G`, `G^r = G^(r-1) ∘ G`: `n` blocks, each a copy of `G^(r-1)`, arranged like `G`.
pub fn power(g: &Tournament, r: u32) -> Result<Tournament> {
    if r < 1 {
        return invalid("power needs r >= 1");
    }
    let mut acc = g.clone();
    for _ in 1..r {
        acc = lex_product(&acc, g);
    }
    Ok(acc)
}

/// Block structure of a lexicographic product.
#[derive(Clone, Debug)]
pub struct ProductStructure {
    pub outer: Tournament,
    pub inner: Tournament,
    pub product: Tournament,
    /// `parts[v]` holds the product vertices whose outer coordinate is `v`.
    pub parts: Vec<VertexSet>,
}

impl ProductStructure {
    pub fn new(inner: &Tournament, outer: &Tournament) -> Self {
        let n1 = inner.n();
        Self {
            outer: outer.clone(),
            inner: inner.clone(),
            product: lex_product(inner, outer),
            parts: block_parts(n1, outer.n()),
        }
    }

    /// Top-level blocks of `g^r`: `n` blocks of `n^(r-1)` vertices each.
    pub fn of_power(g: &Tournament, r: u32) -> Result<Self> {
        let inner = match r {
            0 => return invalid("power needs r >= 1"),
            1 => Tournament::transitive(1),
            _ => power(g, r - 1)?,
        };
        Ok(Self::new(&inner, g))
    }
}

fn block_parts(block: usize, blocks: usize) -> Vec<VertexSet> {
    (0..blocks)
        .map(|v| (v * block..(v + 1) * block).collect())
        .collect()
}

/// A profile for `power(majority_tournament(base), r)`.
///
/// Each lifted order sorts product vertices by the position, in the matching
/// base order, of their outermost coordinate, then the next, and so on.
pub fn lift_profile(base: &Profile, r: u32) -> Result<Profile> {
    if r < 1 {
        return invalid("lift needs r >= 1");
    }
    let n = base.n();
    let orders = base
        .orders()
        .iter()
        .map(|o| {
            let mut seq: Vec<usize> = o.seq().to_vec();
            let mut block = n;
            for _ in 1..r {
                seq = o
                    .seq()
                    .iter()
                    .flat_map(|&outer| seq.iter().map(move |&u| outer * block + u))
                    .collect();
                block *= n;
            }
            LinearOrder::new(seq)
        })
        .collect::<Result<Vec<_>>>()?;
    Profile::new(base.k(), orders)
}

/// The Paley tournament on `Z_7`: `i -> j` iff `j - i` is a nonzero square mod 7.
pub fn paley7() -> Tournament {
    Tournament::from_fn(7, |i, j| matches!((j + 7 - i) % 7, 1 | 2 | 4))
}

/// A three-order realizer of [`paley7`], found by [`find_realizer`] with `k = 2`.
pub fn paley7_profile() -> Result<Profile> {
    match find_realizer(&paley7(), 2, DEFAULT_REALIZER_BUDGET)? {
        RealizerSearch::Found(p) => Ok(p),
        other => Err(Error::Internal(format!("no 2-majority realizer for Paley-7: {other:?}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizerSearch {
    Found(Profile),
    /// The whole search space was explored: no realizer with `2k - 1` orders exists.
    Exhausted,
    /// The node budget ran out first; nothing is proven.
    OutOfBudget,
}

/// Backtracking search for `2k - 1` orders whose majority tournament is `t`.
///
/// The first `2k - 2` orders are enumerated in lexicographic order, pruning as
/// soon as some edge is contradicted by `k` orders. The last order is then
/// forced on every edge contradicted exactly `k - 1` times, and is any
/// topological order of those constraints.
pub fn find_realizer(t: &Tournament, k: usize, budget: u64) -> Result<RealizerSearch> {
    if k < 1 {
        return invalid("k must be at least 1");
    }
    let mut search = RealizerDfs {
        t,
        n: t.n(),
        k,
        contradicted: vec![0; t.n() * t.n()],
        orders: Vec::new(),
        current: Vec::new(),
        placed: vec![false; t.n()],
        nodes: 0,
        budget,
        out_of_budget: false,
    };
    match search.run() {
        Some(orders) => {
            let p = Profile::new(k, orders)?;
            if p.majority_tournament() != *t {
                return Err(Error::Internal("realizer failed verification".into()));
            }
            Ok(RealizerSearch::Found(p))
        }
        None if search.out_of_budget => Ok(RealizerSearch::OutOfBudget),
        None => Ok(RealizerSearch::Exhausted),
    }
}

struct RealizerDfs<'a> {
    t: &'a Tournament,
    n: usize,
    k: usize,
    /// `contradicted[w * n + l]`: orders so far placing loser `l` before winner `w`.
    contradicted: Vec<usize>,
    orders: Vec<LinearOrder>,
    current: Vec<usize>,
    placed: Vec<bool>,
    nodes: u64,
    budget: u64,
    out_of_budget: bool,
}

impl RealizerDfs<'_> {
    fn run(&mut self) -> Option<Vec<LinearOrder>> {
        if self.orders.len() == 2 * self.k - 2 {
            let last = self.forced_last_order()?;
            let mut all = self.orders.clone();
            all.push(last);
            return Some(all);
        }
        if self.current.len() == self.n {
            let done = LinearOrder::new(std::mem::take(&mut self.current)).expect("permutation");
            self.orders.push(done);
            self.placed.fill(false);
            let found = self.run();
            let done = self.orders.pop().expect("pushed above");
            self.current = done.seq().to_vec();
            self.placed.fill(true);
            return found;
        }
        for x in 0..self.n {
            if self.placed[x] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.out_of_budget = true;
                return None;
            }
            // placing x now puts it before every unplaced y
            let losers_first: Vec<usize> = (0..self.n)
                .filter(|&y| !self.placed[y] && y != x && self.t.has_edge(y, x))
                .collect();
            if losers_first.iter().any(|&w| self.contradicted[w * self.n + x] + 1 >= self.k) {
                continue;
            }
            for &w in &losers_first {
                self.contradicted[w * self.n + x] += 1;
            }
            self.placed[x] = true;
            self.current.push(x);
            if let Some(found) = self.run() {
                return Some(found);
            }
            self.current.pop();
            self.placed[x] = false;
            for &w in &losers_first {
                self.contradicted[w * self.n + x] -= 1;
            }
            if self.out_of_budget {
                return None;
            }
        }
        None
    }

    fn forced_last_order(&self) -> Option<LinearOrder> {
        let n = self.n;
        let mut indeg = vec![0usize; n];
        let mut succ = vec![Vec::new(); n];
        for w in 0..n {
            for l in 0..n {
                if w != l && self.t.has_edge(w, l) && self.contradicted[w * n + l] + 1 == self.k {
                    succ[w].push(l);
                    indeg[l] += 1;
                }
            }
        }
        let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seq = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            seq.push(v);
            for &l in &succ[v] {
                indeg[l] -= 1;
                if indeg[l] == 0 {
                    ready.insert(l);
                }
            }
        }
        (seq.len() == n).then(|| LinearOrder::new(seq).expect("permutation"))
    }
}

/// Each pair oriented by an independent fair coin from ChaCha8 seeded with `seed`.
pub fn random_tournament(n: usize, seed: u64) -> Tournament {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Tournament::from_fn(n, |_, _| rng.gen::<bool>())
}
