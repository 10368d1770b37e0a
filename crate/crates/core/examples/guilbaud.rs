//! Probability that three candidates are ordered transitively by majority vote.

use kmajority::random_sim::{exact_distribution, guilbaud_experiment};

fn main() -> kmajority::Result<()> {
    let exact = exact_distribution(3, 2)?;
    println!("k = 2 exact: Pr[X = 3] = {}", exact.probability(3));

    let limit = 0.75 + 3.0 / (2.0 * std::f64::consts::PI) * (1.0f64 / 3.0).asin();
    for k in [2, 5, 25, 200] {
        let g = guilbaud_experiment(k, 20_000, 42)?;
        println!("k = {k:>3}: {:.4} ± {:.4}", g.estimate, g.standard_error);
    }
    println!("large-k limit: {limit:.4}");
    Ok(())
}
