use crate::error::{invalid, Result};
use crate::order::{check_disjoint, LinearOrder};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// `2k - 1` linear orders on a common vertex set `0..n`. Duplicate orders are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Profile {
    n: usize,
    k: usize,
    orders: Vec<LinearOrder>,
}

impl Profile {
    pub fn new(k: usize, orders: Vec<LinearOrder>) -> Result<Self> {
        if k == 0 {
            return invalid("k must be at least 1");
        }
        if orders.len() != 2 * k - 1 {
            return invalid(format!("k = {k} needs {} orders, got {}", 2 * k - 1, orders.len()));
        }
        let n = orders[0].len();
        if orders.iter().any(|o| o.len() != n) {
            return invalid("orders have different lengths");
        }
        Ok(Self { n, k, orders })
    }

    /// Convenience constructor from raw sequences.
    pub fn from_seqs(k: usize, seqs: &[&[usize]]) -> Result<Self> {
        let orders = seqs
            .iter()
            .map(|s| LinearOrder::new(s.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(k, orders)
    }

    /// `2k - 1` copies of the identity order.
    pub fn unanimous(n: usize, k: usize) -> Self {
        Self::new(k.max(1), vec![LinearOrder::identity(n); 2 * k.max(1) - 1]).expect("valid")
    }

    /// The three cyclic rotations of `(0, 1, 2)`; generates the directed triangle.
    pub fn condorcet() -> Self {
        Self::from_seqs(2, &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return invalid(format!("vertex {v} out of range (n = {})", self.n));
        }
        Ok(())
    }

    /// Number of orders in which `u` precedes `v`.
    pub fn precedence_count(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return invalid("precedence of a vertex with itself");
        }
        Ok(self.precedence_unchecked(u, v))
    }

    #[inline]
    fn precedence_unchecked(&self, u: usize, v: usize) -> usize {
        self.orders.iter().filter(|o| o.precedes(u, v)).count()
    }

    /// The k-majority tournament: `u -> v` iff `u` precedes `v` in at least `k` orders.
    pub fn majority_tournament(&self) -> Tournament {
        Tournament::from_fn(self.n, |u, v| self.precedence_unchecked(u, v) >= self.k)
    }

    /// In every order one of `a`, `b` entirely precedes the other.
    pub fn consistent(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        check_disjoint(a, b)?;
        for o in &self.orders {
            if !(o.dominates(a, b)? || o.dominates(b, a)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of orders in which `a` entirely precedes `b`.
    pub fn domination_count(&self, a: &VertexSet, b: &VertexSet) -> Result<usize> {
        check_disjoint(a, b)?;
        let mut count = 0;
        for o in &self.orders {
            if o.dominates(a, b)? {
                count += 1;
            }
        }
        Ok(count)
    }

    pub fn majority_dominates(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        Ok(self.domination_count(a, b)? >= self.k)
    }

    /// Restricts every order to `s`, relabelling members to `0..|s|` by increasing id.
    ///
    /// Returns the new profile and the map from new ids back to old ids.
    pub fn restrict(&self, s: &VertexSet) -> Result<(Profile, Vec<usize>)> {
        if s.is_empty() {
            return invalid("cannot restrict to an empty set");
        }
        if let Some(m) = s.max() {
            self.check_vertex(m)?;
        }
        let back: Vec<usize> = s.iter().collect();
        let mut fwd = vec![usize::MAX; self.n];
        for (new, &old) in back.iter().enumerate() {
            fwd[old] = new;
        }
        let orders = self
            .orders
            .iter()
            .map(|o| LinearOrder::new(o.restrict(s).into_iter().map(|v| fwd[v]).collect()))
            .collect::<Result<Vec<_>>>()?;
        Ok((Profile::new(self.k, orders)?, back))
    }

    /// Applies the bijection `old -> map[old]` to every order.
    pub fn relabel(&self, map: &[usize]) -> Result<Profile> {
        if map.len() != self.n {
            return invalid("relabeling map has wrong length");
        }
        let orders = self
            .orders
            .iter()
            .map(|o| LinearOrder::new(o.seq().iter().map(|&v| map[v]).collect()))
            .collect::<Result<Vec<_>>>()?;
        Profile::new(self.k, orders)
    }
}

pub fn precedence_count(p: &Profile, u: usize, v: usize) -> Result<usize> {
    p.precedence_count(u, v)
}

pub fn majority_tournament(p: &Profile) -> Tournament {
    p.majority_tournament()
}

pub fn consistent(p: &Profile, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    p.consistent(a, b)
}

pub fn majority_dominates(p: &Profile, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    p.majority_dominates(a, b)
}

pub fn restrict_profile(p: &Profile, s: &VertexSet) -> Result<(Profile, Vec<usize>)> {
    p.restrict(s)
}
