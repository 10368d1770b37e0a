//! Acceptance suite: one line per criterion, then a non-zero exit if any failed.

mod common;

use std::time::{Duration, Instant};

use kmajority::bipartite::binomial;
use kmajority::random_sim::{
    count_avoiders, count_f, count_f_star, cyclic_pattern, exact_distribution, find_cyclic_triple, growth_exponent_experiment,
    guilbaud_experiment, pair_profile, permutations, sample_profile, TripleMode,
};
use kmajority::transitive::{log_floor_bound, transitive_lower_bound};
use kmajority::*;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion<'a> = (&'static str, u64, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

/// The shared corpus for criteria 5 and 6: 1000 seeded profiles, n in [2, 64], k in {1, 2, 3}.
fn corpus() -> Vec<Profile> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE);
    (0..1000)
        .map(|i| {
            let n = rng.gen_range(2..=64);
            let k = 1 + i % 3;
            sample_profile(n, k, rng.gen()).unwrap()
        })
        .collect()
}

fn c1() -> Check {
    let h = exact_distribution(3, 2).map_err(e)?;
    let (p2, p3) = (h.probability(2), h.probability(3));
    ensure(p2 == Ratio::new(1, 18) && p3 == Ratio::new(17, 18), || format!("Pr[X=2] = {p2}, Pr[X=3] = {p3}"))?;
    Ok(format!("Pr[X=2] = {p2}, Pr[X=3] = {p3}"))
}

fn c2() -> Check {
    let t = paley7();
    ensure((0..7).all(|v| t.out_degree(v) == 3), || "not regular".into())?;
    let quads: Vec<u64> = (0u64..128).filter(|m| m.count_ones() == 4).collect();
    ensure(quads.len() == 35, || "wrong subset count".into())?;
    let t4 = quads.iter().filter(|&&m| t.is_transitive(&VertexSet::from_mask(m))).count();
    ensure(t4 == 0, || format!("{t4} transitive 4-sets"))?;
    let bip = max_bipartite_transitive_bruteforce(&t).map_err(e)?;
    ensure(bip.t() == 1, || format!("max T(t,t) = {}", bip.t()))?;
    let p = paley7_profile().map_err(e)?;
    ensure(p.k() == 2 && p.majority_tournament() == t, || "realizer mismatch".into())?;
    Ok("regular, 0/35 transitive 4-sets, max T(t,t) = 1, realizer exact".into())
}

fn c3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut cases = 0;
    for n in 1..=7 {
        for k in 1..=2 {
            for _ in 0..8 {
                let p = sample_profile(n, k, rng.gen()).map_err(e)?;
                for r in 1..=2 {
                    let lifted = lift_profile(&p, r).map_err(e)?.majority_tournament();
                    let powered = power(&p.majority_tournament(), r).map_err(e)?;
                    ensure(lifted == powered, || format!("n={n} k={k} r={r}: lift differs from power"))?;
                    cases += 1;
                }
            }
        }
    }
    let p = paley7_profile().map_err(e)?;
    ensure(lift_profile(&p, 2).map_err(e)?.majority_tournament() == power(&paley7(), 2).map_err(e)?, || {
        "Paley square".into()
    })?;
    Ok(format!("{} lifts equal powers edge-for-edge", cases + 1))
}

fn c4() -> Check {
    let s = ProductStructure::of_power(&paley7(), 2).map_err(e)?;
    ensure(s.product.n() == 49, || "P^2 size".into())?;
    let w = guided_bipartite_search(&s.product, &s.parts).map_err(e)?;
    ensure(w.verify(&s.product), || "witness fails verification".into())?;
    ensure(w.t() >= 8, || format!("t = {}", w.t()))?;
    let base = max_bipartite_transitive_bruteforce(&paley7()).map_err(e)?;
    ensure(base.t() == 1, || "P has a T(2,2)".into())?;
    Ok(format!("verified T({0},{0}) in P^2; P has no T(2,2)", w.t()))
}

fn c5(corpus: &[Profile]) -> Check {
    for (i, p) in corpus.iter().enumerate() {
        let (a, b) = find_consistent_pair(p).map_err(e)?;
        let bound = p.n() >> (2 * p.k() - 1);
        ensure(p.consistent(&a, &b).map_err(e)? && a.len() == b.len() && a.len() >= bound, || {
            format!("profile {i} (n={}, k={}): size {} < {bound} or inconsistent", p.n(), p.k(), a.len())
        })?;
    }
    Ok(format!("{} profiles, 0 failures", corpus.len()))
}

fn c6(corpus: &[Profile]) -> Check {
    for (i, p) in corpus.iter().enumerate() {
        let part = coarse_partition(p);
        let parts = binomial(2 * p.k() as u64, p.k() as u64);
        let fail = |why: &str| format!("profile {i} (n={}, k={}): {why}", p.n(), p.k());
        ensure(part.num_parts() as u128 == parts, || fail("part count"))?;
        let mut seen = vec![0; p.n()];
        for pair in &part.pairs {
            ensure(pair.a.len().abs_diff(pair.b.len()) <= 1, || fail("unbalanced pair"))?;
            ensure(p.majority_dominates(&pair.a, &pair.b).map_err(e)?, || fail("pair not dominating"))?;
            for v in pair.a.iter().chain(pair.b.iter()) {
                seen[v] += 1;
            }
        }
        ensure(seen.iter().all(|&c| c == 1), || fail("not a partition"))?;
        let best = part.pairs.iter().map(|x| x.min_side()).max().unwrap_or(0);
        ensure(best as u128 >= p.n() as u128 / parts, || fail("best pair below bound"))?;
    }
    Ok(format!("{} profiles, 0 failures", corpus.len()))
}

fn c7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked_exact = 0;
    for i in 0..500 {
        let k = 2 + i % 2;
        let n = if i % 5 == 0 { rng.gen_range(1..=18) } else { rng.gen_range(1..=256) };
        let p = sample_profile(n, k, rng.gen()).map_err(e)?;
        let t = p.majority_tournament();
        let w = find_transitive_recursive(&p).map_err(e)?;
        let bound = transitive_lower_bound(n, k);
        ensure(w.verify(&t) && w.size() as f64 >= bound - 1e-9, || {
            format!("profile {i} (n={n}, k={k}): size {} vs bound {bound:.3}", w.size())
        })?;
        if n <= 18 {
            let best = max_transitive_bruteforce(&t).map_err(e)?.size();
            ensure(w.size() <= best, || format!("profile {i}: {} exceeds exact {best}", w.size()))?;
            checked_exact += 1;
        }
    }
    Ok(format!("500 profiles, 0 failures ({checked_exact} also checked against the exact maximum)"))
}

fn c8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut fixtures: Vec<Tournament> = (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=7);
            let k = rng.gen_range(1..=3);
            sample_profile(n, k, rng.gen()).unwrap().majority_tournament()
        })
        .collect();
    fixtures.push(paley7());
    fixtures.extend((1..=7).map(Tournament::transitive));
    fixtures.push(Tournament::cycle3());
    for (i, t) in fixtures.iter().enumerate() {
        let fast = max_transitive_bruteforce(t).map_err(e)?;
        let naive = common::naive_max_transitive(t);
        ensure(fast.verify(t) && fast.size() == naive, || format!("fixture {i}: {} vs naive {naive}", fast.size()))?;
        ensure(fast.size() >= log_floor_bound(t.n()), || format!("fixture {i}: below log floor"))?;
    }
    Ok(format!("{} tournaments agree with all-subsets search", fixtures.len()))
}

fn c9() -> Check {
    let mut summary = Vec::new();
    for n in 3..=4 {
        let (f, fs) = (count_f(n).map_err(e)?, count_f_star(n).map_err(e)?);
        let avoid = count_avoiders(n, &cyclic_pattern()).map_err(e)?;
        ensure(f <= fs && fs == avoid, || format!("n={n}: F={f} F*={fs} avoiders={avoid}"))?;
        let perms = permutations(n);
        for a in &perms {
            for b in &perms {
                let (p1, p2) = (LinearOrder::new(a.clone()).map_err(e)?, LinearOrder::new(b.clone()).map_err(e)?);
                if let Some((x, y, z)) = find_cyclic_triple(&p1, &p2, TripleMode::Subsequence).map_err(e)? {
                    let t = pair_profile(&p1, &p2).map_err(e)?.majority_tournament();
                    ensure(!t.is_transitive(&[x, y, z].into()), || format!("{a:?} {b:?}: triple is not a triangle"))?;
                }
            }
        }
        summary.push(format!("n={n}: F={f} <= F*={fs} = avoiders"));
    }
    Ok(summary.join("; "))
}

fn c10() -> Check {
    const LIMIT: f64 = 0.9123;
    let exact = exact_distribution(3, 2).map_err(e)?.probability(3);
    ensure(exact == Ratio::new(17, 18), || format!("exact k=2 value {exact}"))?;
    let g = guilbaud_experiment(200, 100_000, 2024).map_err(e)?;
    ensure((g.estimate - LIMIT).abs() <= 0.02, || format!("k=200 estimate {:.4}", g.estimate))?;
    Ok(format!("k=200: {:.4} ± {:.4}; k=2 exact {exact}", g.estimate, g.standard_error))
}

fn c11() -> Check {
    let ns = [8, 16, 32, 64];
    let a = growth_exponent_experiment(2, &ns, 20, 11, 64).map_err(e)?;
    let b = growth_exponent_experiment(2, &ns, 20, 11, 64).map_err(e)?;
    ensure(a == b && a.to_csv() == b.to_csv(), || "not deterministic".into())?;
    ensure(a.exploratory, || "table not labelled exploratory".into())?;
    ensure(a.rows.len() == 4 && a.rows.iter().all(|r| r.standard_error.is_finite() && r.standard_error > 0.0), || {
        "missing standard errors".into()
    })?;
    ensure(a.rows.iter().all(|r| r.mode == kmajority::random_sim::Mode::MonteCarlo), || {
        "some rows fell back to lower bounds".into()
    })?;
    let means: Vec<String> = a.rows.iter().map(|r| format!("{}:{:.2}±{:.2}", r.n, r.mean, r.standard_error)).collect();
    Ok(format!("exploratory, exact X per trial, deterministic: {}", means.join(" ")))
}

/// Not one of the numbered criteria: the Guilbaud sequence should approach the
/// limit from above. Reported, with a tolerance of three combined standard errors.
fn guilbaud_trend() -> Check {
    let ks = [10, 50, 200];
    let est: Vec<_> = ks.iter().map(|&k| guilbaud_experiment(k, 100_000, 99 + k as u64)).collect::<Result<_>>().map_err(e)?;
    for w in est.windows(2) {
        let tol = 3.0 * (w[0].standard_error.powi(2) + w[1].standard_error.powi(2)).sqrt();
        ensure(w[1].estimate <= w[0].estimate + tol, || format!("k={} rises above k={}", w[1].k, w[0].k))?;
    }
    ensure(est[0].estimate >= 0.9123 - 0.02 && est[0].estimate <= 17.0 / 18.0 + 0.01, || "k=10 outside band".into())?;
    let s: Vec<String> = est.iter().map(|g| format!("k={}: {:.4}", g.k, g.estimate)).collect();
    Ok(s.join(", "))
}

fn main() {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("1 exact three-candidate distribution", 1, Box::new(c1)),
        ("2 Paley tournament suite", 5, Box::new(c2)),
        ("3 product fidelity", 10, Box::new(c3)),
        ("4 bipartite witness in the Paley square", 30, Box::new(c4)),
        ("5 consistent pairs", 30, Box::new(|| c5(&corpus))),
        ("6 coarse partition", 60, Box::new(|| c6(&corpus))),
        ("7 recursive transitive bound", 300, Box::new(c7)),
        ("8 exact search vs all subsets", 60, Box::new(c8)),
        ("9 cyclic triples and pattern avoidance", 120, Box::new(c9)),
        ("10 three-candidate limit", 120, Box::new(c10)),
        ("11 growth table", 120, Box::new(c11)),
        ("   trend toward the limit (k = 10, 50, 200)", 120, Box::new(guilbaud_trend)),
    ];
    let mut failed = 0;
    for (name, limit, check) in &criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let verdict = match result {
            Ok(detail) if took <= Duration::from_secs(*limit) => format!("PASS  {name} [{took:.2?}] {detail}"),
            Ok(detail) => format!("FAIL  {name} [{took:.2?} > {limit}s] {detail}"),
            Err(why) => format!("FAIL  {name} [{took:.2?}] {why}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("{verdict}");
    }
    println!("{} of {} checks passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
