//! Two-order profiles without a cyclic triple, counted directly and as pattern avoiders.

use kmajority::random_sim::{count_avoiders, count_f, count_f_star, cyclic_pattern};

fn main() -> kmajority::Result<()> {
    println!("{:>2} {:>8} {:>8} {:>9}", "n", "F(n)", "F*(n)", "avoiders");
    for n in 1..=5 {
        let avoiders = count_avoiders(n, &cyclic_pattern())?;
        println!("{n:>2} {:>8} {:>8} {avoiders:>9}", count_f(n)?, count_f_star(n)?);
    }
    Ok(())
}
