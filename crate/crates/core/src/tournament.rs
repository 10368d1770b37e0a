use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::order::check_disjoint;
use crate::vertex_set::VertexSet;

/// Orientation of a complete bipartite pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    AToB,
    BToA,
}

/// A tournament on `0..n` stored as an `n x n` bit matrix; bit `(u, v)` set means `u -> v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Tournament({})", self.n)?;
        for u in 0..self.n {
            let row: String = (0..self.n)
                .map(|v| if self.has_edge(u, v) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

impl Tournament {
    /// Builds a tournament by asking `beats(u, v)` once for every pair `u < v`.
    pub fn from_fn(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut t = Self {
            n,
            words,
            bits: vec![0; n * words],
        };
        for u in 0..n {
            for v in u + 1..n {
                if beats(u, v) {
                    t.set(u, v);
                } else {
                    t.set(v, u);
                }
            }
        }
        t
    }

    /// Builds from a full adjacency predicate and checks the tournament invariants.
    pub fn from_adjacency(n: usize, adj: impl Fn(usize, usize) -> bool) -> Result<Self> {
        for u in 0..n {
            if adj(u, u) {
                return invalid(format!("self-loop at {u}"));
            }
            for v in u + 1..n {
                if adj(u, v) == adj(v, u) {
                    return invalid(format!("pair ({u}, {v}) must have exactly one edge"));
                }
            }
        }
        Ok(Self::from_fn(n, adj))
    }

    /// The transitive tournament `0 -> 1 -> ... -> n-1`.
    pub fn transitive(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    /// The directed triangle `0 -> 1 -> 2 -> 0`.
    pub fn cycle3() -> Self {
        Self::from_fn(3, |u, v| (u, v) != (0, 2))
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn out_row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    /// Out-neighbourhood of `u` as a single word. Only meaningful for `n <= 64`.
    #[inline]
    pub fn out_mask(&self, u: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[u * self.words]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    /// Induced subtournament on `s`, relabelled so that the i-th smallest member becomes `i`.
    pub fn induced(&self, s: &VertexSet) -> Tournament {
        let ids = s.as_slice();
        Tournament::from_fn(ids.len(), |i, j| self.has_edge(ids[i], ids[j]))
    }

    /// Whether the subtournament induced on `s` is acyclic.
    pub fn is_transitive(&self, s: &VertexSet) -> bool {
        self.transitive_order(s).is_some()
    }

    /// Members of `s` sorted into a beat-chain, if the induced subtournament is transitive.
    ///
    /// A tournament is transitive iff its score sequence is `0, 1, ..., m-1`.
    pub fn transitive_order(&self, s: &VertexSet) -> Option<Vec<usize>> {
        let m = s.len();
        let mut by_score = vec![usize::MAX; m];
        for u in s.iter() {
            let score = s.iter().filter(|&v| self.has_edge(u, v)).count();
            if by_score[m - 1 - score] != usize::MAX {
                return None;
            }
            by_score[m - 1 - score] = u;
        }
        Some(by_score)
    }

    /// Every earlier vertex of `seq` beats every later one.
    pub fn is_chain(&self, seq: &[usize]) -> bool {
        seq.iter()
            .enumerate()
            .all(|(i, &u)| seq[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Orientation of the bipartite pair `(a, b)` if it is a complete one-directional pair.
    pub fn bipartite_direction(&self, a: &VertexSet, b: &VertexSet) -> Result<Option<Direction>> {
        check_disjoint(a, b)?;
        if a.is_empty() || b.is_empty() {
            return invalid("bipartite sides must be nonempty");
        }
        let a_to_b = a.iter().all(|u| b.iter().all(|v| self.has_edge(u, v)));
        if a_to_b {
            return Ok(Some(Direction::AToB));
        }
        let b_to_a = a.iter().all(|u| b.iter().all(|v| self.has_edge(v, u)));
        Ok(b_to_a.then_some(Direction::BToA))
    }

    pub fn is_transitive_bipartite(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        Ok(self.bipartite_direction(a, b)?.is_some())
    }

    pub fn reversed(&self) -> Tournament {
        Tournament::from_fn(self.n, |u, v| self.has_edge(v, u))
    }
}

/// Free-function form of [`Tournament::is_transitive`].
pub fn is_transitive(t: &Tournament, s: &VertexSet) -> bool {
    t.is_transitive(s)
}

/// Free-function form of [`Tournament::is_transitive_bipartite`].
pub fn is_transitive_bipartite(t: &Tournament, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    t.is_transitive_bipartite(a, b)
}
