//! Split vertices by their type vectors and pick the best majority-dominating pair.

use kmajority::bipartite::binomial;
use kmajority::random_sim::sample_profile;
use kmajority::{build_q, coarse_partition, find_majority_dominating_pair, majority_dominates};

fn main() -> kmajority::Result<()> {
    let (n, k) = (120, 2);
    let p = sample_profile(n, k, 11)?;

    let q = build_q(k)?;
    let codes: Vec<String> = q.iter().map(|s| s.to_string()).collect();
    println!("prefix code ({} words): {}", q.len(), codes.join(" "));

    let part = coarse_partition(&p);
    for pair in &part.pairs {
        println!(
            "type {:<6} |A| = {:>3}  |B| = {:>3}  dominates: {}",
            pair.s.to_string(),
            pair.a.len(),
            pair.b.len(),
            majority_dominates(&p, &pair.a, &pair.b)?
        );
    }

    let (a, b) = find_majority_dominating_pair(&p)?;
    println!(
        "chosen pair of size {} (guaranteed {})",
        a.len(),
        n as u128 / binomial(2 * k as u64, k as u64)
    );
    assert_eq!(b.len(), a.len());
    Ok(())
}
