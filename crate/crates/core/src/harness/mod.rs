//! Random instance generators, end-to-end chain runs and per-hop checks.
//!
//! Every run is driven by an explicit `u64` seed through ChaCha8, and
//! parallel trials are collected in seed order, so reports are reproducible
//! bit for bit.

mod chain;
mod generate;
mod hop;

pub use chain::{run_chain, verify_chain, ChainConfig, ChainOptions, ChainReport, ChainSummary, HopRecord, Terminal, Verdict};
pub use generate::{
    random_cross_instance, random_free_structured_instance, random_graph, random_list_instance, random_structured_instance,
    rng,
};
pub use hop::{
    random_hop_source, run_hop_trials, verify_hop, Construction, GadgetSolver, HopOutcome, HopSolvers, HopSource,
    HopSummary, HopTrialConfig,
};

use crate::graph::GraphError;
use crate::reductions::ReductionError;
use crate::solvers::{InstanceError, SolverError};
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("hop {hop} expects a {expected} source")]
    SourceMismatch { hop: String, expected: &'static str },
    #[error("mutation {mutation} does not apply to hop {hop}")]
    MutationNotApplicable { mutation: &'static str, hop: String },
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Hex SHA-256 of a canonical witness text.
pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}
