mod common;

use common::*;
use kmajority::bipartite::binomial;
use kmajority::format::{read_profile, read_tournament, write_profile, write_tournament};
use kmajority::random_sim::x_statistic;
use kmajority::transitive::transitive_lower_bound;
use kmajority::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn majority_matches_position_counting(p in arb_profile(1..=12, 1..=4)) {
        let seqs: Vec<Vec<usize>> = p.orders().iter().map(|o| o.seq().to_vec()).collect();
        let naive = naive_tournament(&seqs, p.k());
        let t = p.majority_tournament();
        for u in 0..p.n() {
            for v in 0..p.n() {
                prop_assert_eq!(t.has_edge(u, v), naive[u][v]);
            }
        }
    }

    #[test]
    fn restriction_commutes_with_induction(p in arb_profile(1..=14, 1..=3), mask in any::<u16>()) {
        let s: VertexSet = (0..p.n()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!s.is_empty());
        let (sub, back) = p.restrict(&s).unwrap();
        prop_assert_eq!(back, s.as_slice().to_vec());
        prop_assert_eq!(sub.majority_tournament(), p.majority_tournament().induced(&s));
    }

    #[test]
    fn relabeling_is_equivariant(p in arb_profile(1..=10, 1..=3), seed in any::<u64>()) {
        let mut map: Vec<usize> = (0..p.n()).collect();
        use rand::seq::SliceRandom;
        map.shuffle(&mut <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed));
        let q = p.relabel(&map).unwrap();
        let (t, u) = (p.majority_tournament(), q.majority_tournament());
        for a in 0..p.n() {
            for b in 0..p.n() {
                prop_assert_eq!(t.has_edge(a, b), u.has_edge(map[a], map[b]));
            }
        }
    }

    #[test]
    fn consistent_pair_meets_bound(p in arb_profile(2..=64, 1..=3)) {
        let (a, b) = find_consistent_pair(&p).unwrap();
        prop_assert_eq!(a.len(), b.len());
        prop_assert!(a.is_disjoint(&b));
        prop_assert!(a.len() >= p.n() >> (2 * p.k() - 1));
        prop_assert!(p.consistent(&a, &b).unwrap());
        if !a.is_empty() {
            prop_assert!(p.majority_tournament().is_transitive_bipartite(&a, &b).unwrap());
        }
    }

    #[test]
    fn consistent_implies_transitive_bipartite(p in arb_profile(2..=12, 1..=3), mask in any::<u32>()) {
        let a: VertexSet = (0..p.n()).filter(|&v| mask >> (2 * v) & 3 == 1).collect();
        let b: VertexSet = (0..p.n()).filter(|&v| mask >> (2 * v) & 3 == 2).collect();
        prop_assume!(!a.is_empty() && !b.is_empty());
        if p.consistent(&a, &b).unwrap() {
            prop_assert!(p.majority_dominates(&a, &b).unwrap() || p.majority_dominates(&b, &a).unwrap());
            prop_assert!(p.majority_tournament().is_transitive_bipartite(&a, &b).unwrap());
        }
        if p.majority_dominates(&a, &b).unwrap() {
            let t = p.majority_tournament();
            prop_assert!(a.iter().all(|x| b.iter().all(|y| t.has_edge(x, y))));
        }
    }

    #[test]
    fn type_partition_pairs_are_consistent(p in arb_profile(1..=80, 1..=3)) {
        let part = type_partition(&p);
        prop_assert_eq!(part.assignment.len(), p.n());
        prop_assert!(part.assignment.iter().all(|s| s.len() == 2 * p.k() - 1));
        prop_assert_eq!(part.pairs.len(), 1 << (2 * p.k() - 2));
        let mut seen = vec![0; p.n()];
        for pair in &part.pairs {
            prop_assert_eq!(pair.b.clone(), part.class(&pair.s.antipode()));
            prop_assert_eq!(pair.a.clone(), part.class(&pair.s));
            prop_assert!(p.consistent(&pair.a, &pair.b).unwrap());
            for v in pair.a.iter().chain(pair.b.iter()) {
                seen[v] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        let best = part.pairs.iter().map(|x| x.min_side()).max().unwrap();
        prop_assert!(best >= p.n() >> (2 * p.k() - 1));
    }

    #[test]
    fn coarse_partition_dominates(p in arb_profile(1..=120, 1..=3)) {
        let part = coarse_partition(&p);
        let q = build_q(p.k()).unwrap();
        prop_assert_eq!(part.num_parts(), q.len());
        prop_assert_eq!(q.len() as u128, binomial(2 * p.k() as u64, p.k() as u64));
        let mut seen = vec![0; p.n()];
        for pair in &part.pairs {
            prop_assert!(p.majority_dominates(&pair.a, &pair.b).unwrap());
            for v in pair.a.iter().chain(pair.b.iter()) {
                seen[v] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        let bound = (p.n() as u128 / binomial(2 * p.k() as u64, p.k() as u64)) as usize;
        if bound >= 1 {
            let (a, b) = find_majority_dominating_pair(&p).unwrap();
            prop_assert_eq!(a.len(), b.len());
            prop_assert!(a.len() >= bound);
            prop_assert!(p.majority_dominates(&a, &b).unwrap());
        }
    }

    #[test]
    fn recursive_extraction_meets_bound(p in arb_profile(1..=200, 1..=3)) {
        let t = p.majority_tournament();
        let w = find_transitive_recursive(&p).unwrap();
        prop_assert!(w.verify(&t));
        prop_assert!(w.size() as f64 >= transitive_lower_bound(p.n(), p.k()) - 1e-9);
        if p.n() <= 18 {
            prop_assert!(w.size() <= max_transitive_bruteforce(&t).unwrap().size());
        }
    }

    #[test]
    fn exact_transitive_matches_subset_oracle(t in arb_tournament(0..=11)) {
        let w = max_transitive_bruteforce(&t).unwrap();
        prop_assert!(w.verify(&t));
        prop_assert_eq!(w.size(), naive_max_transitive(&t));
    }

    #[test]
    fn exact_bipartite_matches_assignment_oracle(t in arb_tournament(2..=8)) {
        let w = max_bipartite_transitive_bruteforce(&t).unwrap();
        prop_assert!(w.verify(&t));
        prop_assert_eq!(w.t(), naive_max_bipartite(&t));
    }

    #[test]
    fn x_statistic_matches_subset_oracle(p in arb_profile(1..=10, 1..=3)) {
        let t = p.majority_tournament();
        prop_assert_eq!(x_statistic(&p).unwrap().value, naive_max_transitive(&t));
    }

    #[test]
    fn lift_commutes_with_power(p in arb_profile(1..=7, 1..=2), r in 1u32..=2) {
        let lifted = lift_profile(&p, r).unwrap();
        prop_assert_eq!(lifted.majority_tournament(), power(&p.majority_tournament(), r).unwrap());
    }

    #[test]
    fn product_has_block_structure(g1 in arb_tournament(1..=5), g2 in arb_tournament(1..=5)) {
        let s = ProductStructure::new(&g1, &g2);
        let (n1, n2) = (g1.n(), g2.n());
        prop_assert_eq!(s.product.n(), n1 * n2);
        prop_assert_eq!(s.parts.len(), n2);
        for (i, part) in s.parts.iter().enumerate() {
            prop_assert_eq!(s.product.induced(part), g1.clone());
            for (j, other) in s.parts.iter().enumerate() {
                if i != j {
                    let dir = s.product.bipartite_direction(part, other).unwrap();
                    let expect = if g2.has_edge(i, j) { Direction::AToB } else { Direction::BToA };
                    prop_assert_eq!(dir, Some(expect));
                }
            }
        }
    }

    #[test]
    fn guided_search_is_sound(g in arb_tournament(2..=5)) {
        let s = ProductStructure::of_power(&g, 2).unwrap();
        let w = guided_bipartite_search(&s.product, &s.parts).unwrap();
        prop_assert!(w.verify(&s.product));
        if s.product.n() <= 16 {
            prop_assert!(w.t() <= max_bipartite_transitive_bruteforce(&s.product).unwrap().t());
        }
    }

    #[test]
    fn text_formats_round_trip(p in arb_profile(1..=20, 1..=3)) {
        prop_assert_eq!(read_profile(&write_profile(&p)).unwrap(), p.clone());
        let t = p.majority_tournament();
        prop_assert_eq!(read_tournament(&write_tournament(&t)).unwrap(), t);
    }
}

/// Every 2-majority tournament on up to five vertices: the score-sequence test
/// agrees with the triangle test on every subset.
#[test]
fn triangle_property_over_all_small_profiles() {
    for n in 1..=4 {
        let perms = kmajority::random_sim::permutations(n);
        for a in &perms {
            for b in &perms {
                for c in &perms {
                    let p = profile_of(2, &[a.clone(), b.clone(), c.clone()]);
                    let t = p.majority_tournament();
                    for m in 0u64..1 << n {
                        let s = VertexSet::from_mask(m);
                        assert_eq!(t.is_transitive(&s), naive_is_transitive(&t, s.as_slice()));
                    }
                }
            }
        }
    }
    let perms = kmajority::random_sim::permutations(5);
    for b in &perms {
        for c in perms.iter().step_by(7) {
            let p = profile_of(2, &[perms[0].clone(), b.clone(), c.clone()]);
            let t = p.majority_tournament();
            for m in 0u64..32 {
                let s = VertexSet::from_mask(m);
                assert_eq!(t.is_transitive(&s), naive_is_transitive(&t, s.as_slice()));
            }
        }
    }
}

/// At every prefix length each type class and its antipode differ in size by at
/// most one. Individual class sizes are not forced to be equal: a profile on 40
/// vertices does not in general give eight classes of five.
#[test]
fn type_classes_are_antipodally_balanced() {
    let mut unequal_classes = 0;
    for seed in 0..200 {
        let p = kmajority::random_sim::sample_profile(40, 2, seed).unwrap();
        let part = type_partition(&p);
        for len in 1..=3 {
            for bits in 0u32..1 << len {
                let s = TypeVector::new((0..len).map(|i| bits >> i & 1 == 1).collect());
                let (x, y) = (part.class(&s).len(), part.class(&s.antipode()).len());
                assert!(x.abs_diff(y) <= 1, "seed {seed}, type {s}: {x} vs {y}");
                if len == 3 && x != 5 {
                    unequal_classes += 1;
                }
            }
        }
    }
    assert!(unequal_classes > 0);
}

#[test]
fn coarse_parts_on_sixty_vertices() {
    for seed in 0..200 {
        let p = kmajority::random_sim::sample_profile(60, 2, seed).unwrap();
        let part = coarse_partition(&p);
        assert_eq!(part.pairs.len(), 3);
        assert_eq!(part.num_parts(), 6);
        let total: usize = part.pairs.iter().map(|x| x.a.len() + x.b.len()).sum();
        assert_eq!(total, 60);
        for pair in &part.pairs {
            assert!(pair.a.len().abs_diff(pair.b.len()) <= 1);
            assert!(p.majority_dominates(&pair.a, &pair.b).unwrap());
        }
    }
}
