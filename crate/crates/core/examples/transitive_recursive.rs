//! Recursive extraction of a transitive subtournament, compared with the exact optimum.

use kmajority::random_sim::sample_profile;
use kmajority::transitive::transitive_lower_bound;
use kmajority::{find_transitive_recursive, max_transitive_bruteforce};

fn main() -> kmajority::Result<()> {
    println!("{:>4} {:>2} {:>9} {:>6} {:>6}", "n", "k", "bound", "found", "exact");
    for (n, k, seed) in [(16, 2, 1), (30, 2, 2), (30, 3, 3), (128, 2, 4), (256, 3, 5)] {
        let p = sample_profile(n, k, seed)?;
        let t = p.majority_tournament();
        let w = find_transitive_recursive(&p)?;
        assert!(w.verify(&t));
        let exact = if n <= 30 {
            max_transitive_bruteforce(&t)?.size().to_string()
        } else {
            "-".into()
        };
        println!("{n:>4} {k:>2} {:>9.3} {:>6} {exact:>6}", transitive_lower_bound(n, k), w.size());
    }
    Ok(())
}
