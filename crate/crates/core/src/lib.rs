//! Transitive subtournaments of k-majority tournaments.
//!
//! A profile of `2k - 1` linear orders on `0..n` generates a tournament with
//! `u -> v` whenever `u` precedes `v` in at least `k` of the orders. This crate
//! builds those tournaments, extracts large transitive and bipartite-transitive
//! substructures from them, constructs the product tournaments that limit how
//! large such substructures can be, and runs exact and Monte Carlo experiments
//! on random profiles.
//!
//! ```
//! use kmajority::{Profile, VertexSet};
//!
//! let p = Profile::condorcet();
//! let t = p.majority_tournament();
//! assert!(!t.is_transitive(&VertexSet::range(3)));
//! ```

pub mod bipartite;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod format;
pub mod order;
pub mod profile;
pub mod random_sim;
pub mod tournament;
pub mod transitive;
pub mod vertex_set;

pub use bipartite::{
    build_q, coarse_partition, find_consistent_pair, find_majority_dominating_pair, type_partition, TypePair,
    TypePartition, TypeVector,
};
pub use constructions::{
    find_realizer, lex_product, lift_profile, paley7, paley7_profile, power, random_tournament, ProductStructure,
    RealizerSearch,
};
pub use error::{Error, Result};
pub use order::{dominates_in_order, LinearOrder};
pub use profile::{consistent, majority_dominates, majority_tournament, precedence_count, restrict_profile, Profile};
pub use tournament::{is_transitive, is_transitive_bipartite, Direction, Tournament};
pub use transitive::{
    find_transitive_recursive, guided_bipartite_search, max_bipartite_transitive_bruteforce,
    max_transitive_bruteforce, BipartiteWitness, TransitiveWitness,
};
pub use vertex_set::VertexSet;
