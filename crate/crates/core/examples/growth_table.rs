//! Mean size of the largest transitive subtournament of a random 2-majority tournament.

use kmajority::random_sim::growth_exponent_experiment;

fn main() -> kmajority::Result<()> {
    let table = growth_exponent_experiment(2, &[8, 16, 32, 64], 40, 2024, 64)?;
    print!("{}", table.to_csv());
    if let Some(slope) = table.slope {
        println!("# log-log slope (exploratory): {slope:.3}");
    }
    Ok(())
}
