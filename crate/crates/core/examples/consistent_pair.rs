//! Halving: two equal sets where one side precedes the other in every order.

use kmajority::random_sim::sample_profile;
use kmajority::{consistent, find_consistent_pair};

fn main() -> kmajority::Result<()> {
    let (n, k) = (64, 2);
    let p = sample_profile(n, k, 7)?;
    let (a, b) = find_consistent_pair(&p)?;
    println!("n = {n}, k = {k}, guaranteed size {}", n >> (2 * k - 1));
    println!("A = {:?}", a.as_slice());
    println!("B = {:?}", b.as_slice());
    println!("consistent: {}", consistent(&p, &a, &b)?);
    println!("transitive bipartite: {}", p.majority_tournament().is_transitive_bipartite(&a, &b)?);
    Ok(())
}
