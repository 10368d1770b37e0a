//! Naive reference implementations. Deliberately slow and independent of the
//! library's search code: they only use raw order positions and edge queries.
#![allow(dead_code)]

use kmajority::{LinearOrder, Profile, Tournament, VertexSet};
use proptest::prelude::*;

/// `u -> v` iff `u` is earlier in at least `k` orders, counted from positions.
pub fn naive_tournament(orders: &[Vec<usize>], k: usize) -> Vec<Vec<bool>> {
    let n = orders[0].len();
    let pos: Vec<Vec<usize>> = orders
        .iter()
        .map(|o| {
            let mut p = vec![0; n];
            for (i, &v) in o.iter().enumerate() {
                p[v] = i;
            }
            p
        })
        .collect();
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| u != v && pos.iter().filter(|p| p[u] < p[v]).count() >= k)
                .collect()
        })
        .collect()
}

/// A subset is transitive iff it contains no directed triangle.
pub fn naive_is_transitive(t: &Tournament, s: &[usize]) -> bool {
    for (i, &a) in s.iter().enumerate() {
        for (j, &b) in s.iter().enumerate().skip(i + 1) {
            for &c in &s[j + 1..] {
                let cyc1 = t.has_edge(a, b) && t.has_edge(b, c) && t.has_edge(c, a);
                let cyc2 = t.has_edge(a, c) && t.has_edge(c, b) && t.has_edge(b, a);
                if cyc1 || cyc2 {
                    return false;
                }
            }
        }
    }
    true
}

/// Largest transitive subset size over all `2^n` subsets.
pub fn naive_max_transitive(t: &Tournament) -> usize {
    let n = t.n();
    assert!(n <= 16);
    (0u32..1 << n)
        .filter_map(|m| {
            let s: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
            naive_is_transitive(t, &s).then_some(s.len())
        })
        .max()
        .unwrap_or(0)
}

/// Largest `t` with disjoint `|A| = |B| = t` and every `A -> B` edge (or every
/// `B -> A`), over all `3^n` assignments.
pub fn naive_max_bipartite(t: &Tournament) -> usize {
    let n = t.n();
    assert!(n <= 10);
    let mut best = 0;
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        let mut c = code;
        for v in 0..n {
            match c % 3 {
                1 => a.push(v),
                2 => b.push(v),
                _ => {}
            }
            c /= 3;
        }
        let m = a.len().min(b.len());
        if m <= best {
            continue;
        }
        if a.iter().all(|&x| b.iter().all(|&y| t.has_edge(x, y))) {
            best = m;
        }
    }
    best
}

pub fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

pub fn profile_of(k: usize, seqs: &[Vec<usize>]) -> Profile {
    Profile::new(k, seqs.iter().map(|s| LinearOrder::new(s.clone()).unwrap()).collect()).unwrap()
}

/// Strategy: a profile with `n` in `ns` and `k` in `ks`.
pub fn arb_profile(ns: std::ops::RangeInclusive<usize>, ks: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Profile> {
    (ns, ks).prop_flat_map(|(n, k)| {
        let order = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        proptest::collection::vec(order, 2 * k - 1).prop_map(move |seqs| profile_of(k, &seqs))
    })
}

/// Strategy: a permutation of `0..n`.
pub fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// Strategy: an arbitrary tournament on `n` vertices.
pub fn arb_tournament(ns: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Tournament> {
    ns.prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Tournament::from_fn(n, |_, _| it.next().unwrap())
        })
    })
}
