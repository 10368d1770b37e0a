//! Three voters, three candidates: the majority relation is a 3-cycle.

use kmajority::{Profile, VertexSet};

fn main() -> kmajority::Result<()> {
    let p = Profile::condorcet();
    let t = p.majority_tournament();
    for u in 0..3 {
        println!("{u} beats {:?}", t.out_neighbors(u).collect::<Vec<_>>());
    }
    println!("transitive: {}", t.is_transitive(&VertexSet::range(3)));

    let w = kmajority::max_transitive_bruteforce(&t)?;
    println!("largest transitive subset: {:?}", w.vertices);
    Ok(())
}
