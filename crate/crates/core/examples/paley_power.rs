//! The Paley tournament on 7 vertices, its 3-order realizer, and its square.

use kmajority::format::write_profile;
use kmajority::transitive::max_bipartite_transitive_bruteforce;
use kmajority::{guided_bipartite_search, lift_profile, paley7, paley7_profile, ProductStructure};

fn main() -> kmajority::Result<()> {
    let g = paley7();
    let p = paley7_profile()?;
    print!("realizer:\n{}", write_profile(&p));
    assert_eq!(p.majority_tournament(), g);
    println!("largest T(t,t) in P: t = {}", max_bipartite_transitive_bruteforce(&g)?.t());

    let sq = ProductStructure::of_power(&g, 2)?;
    let lifted = lift_profile(&p, 2)?;
    println!(
        "P^2 has {} vertices; lifted profile reproduces it: {}",
        sq.product.n(),
        lifted.majority_tournament() == sq.product
    );

    let w = guided_bipartite_search(&sq.product, &sq.parts)?;
    assert!(w.verify(&sq.product));
    println!("guided search in P^2: t = {}", w.t());
    println!("A = {:?}\nB = {:?}", w.a.as_slice(), w.b.as_slice());
    Ok(())
}
