//! Contraction workbench: the chain of reductions from 3-Coloring through
//! properly colored list homomorphism/isomorphism, Cross Matching and
//! Structured Clique Contraction down to Hadwiger Number and F-Contraction
//! for ten graph classes, together with exact exponential solvers for every
//! problem in the chain and recognizers for the target classes.
//!
//! Every reduction returns a fully materialized target instance, so each hop
//! can be checked by solving both sides with independent algorithms; see
//! [`harness`].

pub mod classes;
pub mod graph;
pub mod harness;
pub mod io;
pub mod reductions;
pub mod solvers;

pub use graph::{EdgeSet, Graph, GraphError, Partition, ProperColoring};
