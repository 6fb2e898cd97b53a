//! Exact `(a:b)`-list-colouring and `(4m:2m)`-choosability for small graphs.
//!
//! Graphs have at most 32 vertices and colours come from a palette of at most
//! 64, so vertex and colour sets are single machine words. Every fast
//! procedure here (path criterion, cut extension, theta and two-cycle
//! procedures) can be cross-checked against the backtracking oracle in
//! [`solver::l_colourable`].
#![no_std]

extern crate alloc;

pub mod colour;
pub mod error;
pub mod generate;
pub mod graph;
pub mod lists;
pub mod path;
pub mod reductions;
pub mod solver;
pub mod structure;

pub use colour::{Colour, ColourSet, MAX_UNIVERSE};
pub use error::{GraphError, ListError, PathError, ReductionError, SolverError};
pub use generate::{generate, Exceptional, FamilySpec};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use lists::{is_proper_colouring, ListAssignment, TupleColouring};
pub use path::{PathList, PathProfile, XSequence};
pub use solver::{Outcome, SearchConfig, SearchStats, Verdict};
