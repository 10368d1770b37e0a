use crate::error::{invalid, Result};
use crate::vertex_set::VertexSet;

/// A permutation of `0..n` together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl LinearOrder {
    /// Builds an order from its sequence; fails unless `seq` is a permutation of `0..seq.len()`.
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n {
                return invalid(format!("vertex {v} out of range for order of length {n}"));
            }
            if pos[v] != usize::MAX {
                return invalid(format!("vertex {v} repeated in order"));
            }
            pos[v] = i;
        }
        Ok(Self { seq, pos })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            seq: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    #[inline]
    pub fn pos(&self, v: usize) -> usize {
        self.pos[v]
    }

    #[inline]
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.pos[u] < self.pos[v]
    }

    /// Members of `s` in the order they appear here.
    pub fn restrict(&self, s: &VertexSet) -> Vec<usize> {
        let mut out: Vec<usize> = s.iter().collect();
        out.sort_unstable_by_key(|&v| self.pos[v]);
        out
    }

    /// `a` entirely precedes `b`. Empty sides are vacuously dominated.
    pub fn dominates(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        check_disjoint(a, b)?;
        let last_a = a.iter().map(|v| self.pos[v]).max();
        let first_b = b.iter().map(|v| self.pos[v]).min();
        Ok(match (last_a, first_b) {
            (Some(x), Some(y)) => x < y,
            _ => true,
        })
    }
}

pub(crate) fn check_disjoint(a: &VertexSet, b: &VertexSet) -> Result<()> {
    if a.is_disjoint(b) {
        Ok(())
    } else {
        invalid("vertex sets overlap")
    }
}

/// Free-function form of [`LinearOrder::dominates`].
pub fn dominates_in_order(o: &LinearOrder, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    o.dominates(a, b)
}
