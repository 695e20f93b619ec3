//! Exact decision procedures for every problem in the reduction chain.
//!
//! All searches run in a fixed vertex-id order, so a solver always returns
//! the same witness for the same input. Unless a function says otherwise the
//! witness is the lexicographically first one in that order.

mod coloring;
mod contraction;
mod embedding;
mod matching;
mod minor;
mod types;

pub use coloring::solve_3coloring;
pub use contraction::{
    compute_noise_set, for_each_f_contraction_solution, for_each_structured_solution, is_structured_solution, solve_clique_contraction, solve_f_contraction,
    solve_f_contraction_restricted, solve_structured, StructuredStrategy,
};
pub use embedding::{check_assignment, solve_list_embedding};
pub use matching::{cross_perfect_matchings, quotient_is_clique, solve_cross_matching};
pub use minor::{contract_to_clique, hadwiger_at_least, hadwiger_model, solve_hadwiger};
pub use types::{
    Assignment, CrossMatchingInstance, EmbeddingMode, FContractionInstance, InstanceError, ListInstance,
    StructuredInstance,
};

use thiserror::Error;

/// Size ceilings for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest connected component handed to partition enumeration.
    pub partition_vertices: usize,
    /// Largest graph for definition-level perfect-graph checks.
    pub definitional_vertices: usize,
    /// Largest number of candidate edge sets an exhaustive forest search may visit.
    pub forest_candidates: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { partition_vertices: 14, definitional_vertices: 10, forest_candidates: 50_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("{what}: size {got} exceeds the guard of {limit}")]
    GuardExceeded { what: &'static str, limit: u128, got: u128 },
    #[error("unsupported input: {0}")]
    Unsupported(String),
}
