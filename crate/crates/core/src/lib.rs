//! Exact resolving parameters of small connected graphs.

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod resolving;

pub use error::{Error, Result};
pub use graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6, DistanceMatrix, Graph};
pub use resolving::{
    is_minimal_resolving_set, is_randomly_k_dimensional, is_resolving_set, metric_dimension,
    resolver_set, resolves, resolving_number_bruteforce, resolving_number_closed, s_unique_pairs,
    shell_identity_check, unresolved_pairs, upper_dimension, Params, ResolvingReport, Solver,
    VertexPair,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/resolving-sets.md")]
    mod resolving_sets {}
    #[doc = include_str!("../../../book/src/dimensions.md")]
    mod dimensions {}
    #[doc = include_str!("../../../book/src/resolving-number.md")]
    mod resolving_number {}
    #[doc = include_str!("../../../book/src/grid-families.md")]
    mod grid_families {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
