//! Pairs of permutations whose `(id, π1, π2)` majority tournament is
//! transitive, and the three-dimensional permutation patterns that bound them.

use serde::Serialize;

use super::permutations;
use crate::error::{invalid, Error, Result};
use crate::order::LinearOrder;
use crate::profile::Profile;
use crate::vertex_set::VertexSet;

/// Largest `n` for the `(n!)^2` pair enumerations.
pub const PAIR_ENUMERATION_LIMIT: usize = 6;
/// Largest side length accepted by the containment searches.
pub const PATTERN_SIDE_LIMIT: usize = 12;

/// How "π contains `x, y, z`" is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TripleMode {
    /// `x, y, z` appear in this relative order, not necessarily adjacent.
    #[default]
    Subsequence,
    /// `x, y, z` occupy three consecutive positions.
    Contiguous,
}

fn check_lengths(pi1: &LinearOrder, pi2: &LinearOrder) -> Result<()> {
    if pi1.len() != pi2.len() {
        return invalid(format!("orders have lengths {} and {}", pi1.len(), pi2.len()));
    }
    Ok(())
}

/// Some `a < b < c` with `π1` showing `b, c, a` and `π2` showing `c, a, b`.
pub fn find_cyclic_triple(
    pi1: &LinearOrder,
    pi2: &LinearOrder,
    mode: TripleMode,
) -> Result<Option<(usize, usize, usize)>> {
    check_lengths(pi1, pi2)?;
    let n = pi1.len();
    let shows = |o: &LinearOrder, x: usize, y: usize, z: usize| match mode {
        TripleMode::Subsequence => o.pos(x) < o.pos(y) && o.pos(y) < o.pos(z),
        TripleMode::Contiguous => o.pos(y) == o.pos(x) + 1 && o.pos(z) == o.pos(y) + 1,
    };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if shows(pi1, b, c, a) && shows(pi2, c, a, b) {
                    return Ok(Some((a, b, c)));
                }
            }
        }
    }
    Ok(None)
}

pub fn contains_cyclic_triple(pi1: &LinearOrder, pi2: &LinearOrder) -> Result<bool> {
    Ok(find_cyclic_triple(pi1, pi2, TripleMode::Subsequence)?.is_some())
}

/// Membership in `F*(n)`: no cyclic triple.
pub fn in_f_star(pi1: &LinearOrder, pi2: &LinearOrder) -> Result<bool> {
    Ok(!contains_cyclic_triple(pi1, pi2)?)
}

/// The 2-majority profile `(id, π1, π2)`.
pub fn pair_profile(pi1: &LinearOrder, pi2: &LinearOrder) -> Result<Profile> {
    check_lengths(pi1, pi2)?;
    Profile::new(2, vec![LinearOrder::identity(pi1.len()), pi1.clone(), pi2.clone()])
}

/// Membership in `F(n)`: the tournament of `(id, π1, π2)` is transitive.
pub fn in_f(pi1: &LinearOrder, pi2: &LinearOrder) -> Result<bool> {
    let p = pair_profile(pi1, pi2)?;
    Ok(p.majority_tournament().is_transitive(&VertexSet::range(p.n())))
}

fn all_orders(n: usize) -> Result<Vec<LinearOrder>> {
    if n > PAIR_ENUMERATION_LIMIT {
        return Err(Error::ResourceLimit {
            what: "n for pair enumeration",
            actual: n as u128,
            limit: PAIR_ENUMERATION_LIMIT as u128,
        });
    }
    Ok(permutations(n)
        .into_iter()
        .map(|s| LinearOrder::new(s).expect("permutation"))
        .collect())
}

fn count_pairs(n: usize, keep: impl Fn(&LinearOrder, &LinearOrder) -> Result<bool>) -> Result<u64> {
    let orders = all_orders(n)?;
    let mut count = 0;
    for a in &orders {
        for b in &orders {
            if keep(a, b)? {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `|F(n)|`; `p_n = |F(n)| / (n!)^2`.
pub fn count_f(n: usize) -> Result<u64> {
    count_pairs(n, in_f)
}

/// `|F*(n)|`.
pub fn count_f_star(n: usize) -> Result<u64> {
    count_pairs(n, in_f_star)
}

/// A three-dimensional permutation matrix of side `side`, stored by its ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternMatrix3 {
    side: usize,
    ones: Vec<[usize; 3]>,
}

impl PatternMatrix3 {
    /// Checks that every axis-aligned slice holds exactly one 1.
    pub fn new(side: usize, mut ones: Vec<[usize; 3]>) -> Result<Self> {
        if ones.len() != side {
            return invalid(format!("{} ones in a matrix of side {side}", ones.len()));
        }
        for axis in 0..3 {
            let mut seen = vec![false; side];
            for one in &ones {
                let i = one[axis];
                if i >= side || std::mem::replace(&mut seen[i], true) {
                    return invalid(format!("axis {axis} slice {i} does not hold exactly one 1"));
                }
            }
        }
        ones.sort_unstable();
        Ok(Self { side, ones })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn ones(&self) -> &[[usize; 3]] {
        &self.ones
    }

    pub fn get(&self, at: [usize; 3]) -> bool {
        self.ones.binary_search(&at).is_ok()
    }
}

/// The 3x3x3 pattern with ones at `(0,1,2)`, `(1,2,0)`, `(2,0,1)`.
pub fn cyclic_pattern() -> PatternMatrix3 {
    PatternMatrix3::new(3, vec![[0, 1, 2], [1, 2, 0], [2, 0, 1]]).expect("permutation matrix")
}

/// Encodes `(π1, π2)` with a 1 at `(i, j, k)` when `i` sits at position `j` of `π1` and `k` of `π2`.
///
/// Under this encoding the cyclic pattern matches the triple shape with the two
/// orders exchanged: `in_f_star(π1, π2)` holds iff
/// `profile_to_matrix3(π2, π1)` avoids [`cyclic_pattern`]. The counts agree
/// either way because exchanging the orders is a bijection on pairs.
pub fn profile_to_matrix3(pi1: &LinearOrder, pi2: &LinearOrder) -> Result<PatternMatrix3> {
    check_lengths(pi1, pi2)?;
    let ones = (0..pi1.len()).map(|i| [i, pi1.pos(i), pi2.pos(i)]).collect();
    PatternMatrix3::new(pi1.len(), ones)
}

fn check_side(a: &PatternMatrix3) -> Result<()> {
    if a.side > PATTERN_SIDE_LIMIT {
        return Err(Error::ResourceLimit {
            what: "matrix side for containment search",
            actual: a.side as u128,
            limit: PATTERN_SIDE_LIMIT as u128,
        });
    }
    Ok(())
}

/// `a` contains `p`: some `m` ones of `a` sit in the same relative position,
/// axis by axis, as the `m` ones of `p`.
///
/// Equivalently there are increasing index sequences `s1, s2, s3` of length `m`
/// with `a(s1[j1], s2[j2], s3[j3]) = 1` wherever `p(j1, j2, j3) = 1`.
pub fn pattern_contains_3d(a: &PatternMatrix3, p: &PatternMatrix3) -> Result<bool> {
    check_side(a)?;
    let mut chosen: Vec<[usize; 3]> = Vec::with_capacity(p.side);
    Ok(embed(a, p, &mut chosen))
}

fn embed(a: &PatternMatrix3, p: &PatternMatrix3, chosen: &mut Vec<[usize; 3]>) -> bool {
    let idx = chosen.len();
    if idx == p.ones.len() {
        return true;
    }
    let target = p.ones[idx];
    for &cand in &a.ones {
        let fits = chosen.iter().zip(&p.ones).all(|(prev, pat)| {
            (0..3).all(|d| (pat[d] < target[d]) == (prev[d] < cand[d]) && prev[d] != cand[d])
        });
        if fits {
            chosen.push(cand);
            if embed(a, p, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Containment read with the implication reversed: some choice of sequences
/// puts every 1 of `a` inside the selected grid onto a 1 of `p`.
///
/// Kept for comparison only. Grids that miss every 1 of `a` satisfy it
/// vacuously, so for side `>= 5` every matrix "contains" every 3x3x3 pattern.
pub fn pattern_contains_3d_literal(a: &PatternMatrix3, p: &PatternMatrix3) -> Result<bool> {
    check_side(a)?;
    let seqs = increasing_sequences(a.side, p.side);
    for s1 in &seqs {
        for s2 in &seqs {
            for s3 in &seqs {
                let ok = a.ones.iter().all(|one| {
                    match (rank_in(s1, one[0]), rank_in(s2, one[1]), rank_in(s3, one[2])) {
                        (Some(j1), Some(j2), Some(j3)) => p.get([j1, j2, j3]),
                        _ => true,
                    }
                });
                if ok {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

fn rank_in(seq: &[usize], x: usize) -> Option<usize> {
    seq.binary_search(&x).ok()
}

/// All strictly increasing sequences of length `m` from `0..n`.
pub fn increasing_sequences(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(n, m, x + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, m, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of encodings `profile_to_matrix3(π1, π2)` over all pairs that avoid `p`.
pub fn count_avoiders(n: usize, p: &PatternMatrix3) -> Result<u64> {
    count_pairs(n, |a, b| Ok(!pattern_contains_3d(&profile_to_matrix3(a, b)?, p)?))
}
