//! Constructions for every hop of the chain. Each returns a fully built target
//! instance whose invariants were checked on construction.
//!
//! 3-Coloring goes to properly colored list homomorphism through a grouping
//! of the input graph ([`grouping`], [`lsh`]). The homomorphism instance is
//! split into a stream of list isomorphism instances, one per occupancy
//! vector ([`stream`]). Each of those becomes a Cross Matching instance
//! ([`cross`]), then a Structured Clique Contraction instance, and from there
//! Hadwiger Number or one of three class gadgets ([`structured`]).

mod cross;
mod grouping;
mod lsh;
mod stream;
mod structured;

pub use cross::{check_cross_claim, lsi_to_cross_matching, ClaimViolation};
pub use grouping::{build_grouping, build_grouping_with_degree, Grouping, DEFAULT_MAX_DEGREE};
pub use lsh::{recolor_witness, reduce_3col_to_lsh, reduce_3col_to_lsh_with_degree, LabeledVertex, LshReduction, RecolorWitness};
pub use stream::{instance_for, lsh_to_lsi_stream, stream_count, LsiStream, OccupancyVector, StreamPruning, StreamedInstance};
pub use structured::{
    cc_to_hadwiger, check_solution_shape, cross_matching_to_structured, cross_matching_to_structured_with, structured_to_class,
    structured_to_class_with, GadgetFamily, GadgetInstance, HadwigerTarget, Mutation,
};

use crate::graph::GraphError;
use crate::solvers::InstanceError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("vertex {0} is isolated; the coloring reduction needs every vertex to have a neighbor")]
    IsolatedVertex(usize),
    #[error("vertex {vertex} has degree {degree}, above the bound {limit}")]
    DegreeTooHigh { vertex: usize, degree: usize, limit: usize },
    #[error("only r = 1 groupings are supported, got r = {0}")]
    UnsupportedR(usize),
    #[error("grouping property violated: {0}")]
    Grouping(String),
    #[error("expected a {expected} instance")]
    WrongMode { expected: &'static str },
    #[error("no gadget reaches class {0}")]
    NoGadget(crate::classes::ClassId),
    #[error("gadgets need an empty noise part, got {0} noise vertices")]
    NoiseNotEmpty(usize),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
