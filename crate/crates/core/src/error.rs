use alloc::string::String;

use thiserror::Error;

use crate::solver::SearchStats;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices; at most 32 are supported")]
    TooManyVertices { n: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("edge {u}-{v} given twice")]
    DuplicateEdge { u: usize, v: usize },
    #[error("not a permutation of the vertex set")]
    BadPermutation,
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("palette universe of {universe} colours exceeds 64")]
    UniverseTooLarge { universe: usize },
    #[error("list of vertex {vertex} uses colours outside the universe")]
    OutsideUniverse { vertex: usize },
    #[error("list of vertex {vertex} has {found} colours, expected {expected}")]
    WrongListSize {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("parameters a={a}, b={b}, m={m} are not valid")]
    BadParameters { a: usize, b: usize, m: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path has no vertices")]
    Empty,
    #[error("operation needs an odd number of vertices, path has {n}")]
    EvenPath { n: usize },
    #[error("vertex {index} has {found} colours, expected {expected}")]
    WrongListSize {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    List(#[from] ListError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("search budget exhausted after {} nodes and {} assignments", .0.nodes, .0.assignments)]
    Inconclusive(SearchStats),
    #[error("graph does not have the required shape: {0}")]
    Shape(String),
    #[error("invalid cut: {0}")]
    Cut(String),
    #[error("component with {n} vertices is a path with an even number of vertices")]
    EvenPathComponent { n: usize },
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("procedure failed to colour a well-shaped instance: {0}")]
    ProcedureFailed(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    List(#[from] ListError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("neighbours {u} and {v} of the deleted vertex are adjacent; merging would create a loop")]
    AdjacentNeighbours { u: usize, v: usize },
    #[error("vertex {0} has no neighbours to merge")]
    NoNeighbours(usize),
    #[error("vertex {vertex} out of range")]
    VertexOutOfRange { vertex: usize },
    #[error("the list assignment to lift is colourable on the contracted graph")]
    LiftSourceColourable,
    #[error("lifted assignment turned out colourable; the contraction record is inconsistent")]
    LiftColourable,
    #[error("profile sizes sum to {sum}, expected {expected}")]
    ProfileSize { sum: usize, expected: usize },
    #[error("profile sets overlap where they must be disjoint")]
    ProfileOverlap,
    #[error("not enough fresh colours below 64")]
    PaletteExhausted,
    #[error("not a 5-vertex path of degree-2 vertices: {0}")]
    BadP5(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    List(#[from] ListError),
    #[error(transparent)]
    Path(#[from] PathError),
}
