//! Workbench for deciding LS+-perfectness of small graphs.
//!
//! The pieces: an exact graph core ([`graph`]), constructors for the graph
//! families used as evidence ([`generators`]), an exact rational polyhedral
//! kernel for stable set polytopes ([`polytope`]), recognition of rank,
//! clique family and joined antiweb inequalities ([`inequalities`]),
//! semidefinite optimization over the Lovasz-Schrijver lift of the edge
//! relaxation ([`lsplus`]), and a batch verification pipeline that
//! cross-checks the LS+-Perfect Graph Conjecture on claw-free graph corpora
//! ([`pipeline`]).

pub mod generators;
pub mod graph;
pub mod inequalities;
pub mod lsplus;
pub mod pipeline;
pub mod polytope;

pub use graph::{Graph, NodeSet};
