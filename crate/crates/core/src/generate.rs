//! Generators for the graph families used throughout the crate.
//!
//! Numbering is canonical: branch vertices first, then the vertices of each
//! path in the order the parameters list them, each path walked away from the
//! vertex it starts at.

use alloc::format;
use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::{Graph, MAX_VERTICES};

/// Parameters of a generated graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Generalised theta: two branch vertices joined by paths with the given
    /// edge counts.
    Theta { lengths: Vec<usize> },
    /// Cycles of lengths `first` and `second` joined by a path with
    /// `path_vertices` vertices; one vertex means the cycles share it.
    TwoCycles {
        first: usize,
        path_vertices: usize,
        second: usize,
    },
    Cycle { len: usize },
    /// One of the four exceptional families of conjectured `(4:2)`-choosable graphs.
    Exceptional(Exceptional),
}

/// The four parameterised exceptional families.
///
/// A *tail* is a path with any number of vertices counted with both ends;
/// a tail of one vertex identifies its two ends. A *loop path* has an odd
/// number (at least 3) of vertices and closes an even cycle through the tail's
/// far end.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Exceptional {
    /// `K_{2,3}` with a tail from a degree-3 vertex to an even cycle.
    BranchTail { tail: usize, loop_path: usize },
    /// `K_{2,3}` with a tail from a degree-2 vertex to an even cycle.
    MiddleTail { tail: usize, loop_path: usize },
    /// A 4-cycle with tails from two opposite vertices, each ending in an even cycle.
    SquareTwoTails {
        first_tail: usize,
        first_loop: usize,
        second_tail: usize,
        second_loop: usize,
    },
    /// `K_{2,3}` on `c2, c4` (middles `c1, c3, d`) plus a path with an odd
    /// number of vertices from `c1` to `c3`.
    ChordedSquare { chord: usize },
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            n,
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Path from `from` to `to` with `length` edges.
    fn path(&mut self, from: usize, to: usize, length: usize) {
        let mut prev = from;
        for _ in 1..length {
            let x = self.vertex();
            self.edge(prev, x);
            prev = x;
        }
        self.edge(prev, to);
    }

    /// Tail of `vertices` vertices from `from`; returns its far end.
    fn tail(&mut self, from: usize, vertices: usize) -> usize {
        let mut prev = from;
        for _ in 1..vertices {
            let x = self.vertex();
            self.edge(prev, x);
            prev = x;
        }
        prev
    }

    /// Even cycle through `at` whose remaining vertices form a path of
    /// `loop_path` vertices.
    fn hang_cycle(&mut self, at: usize, loop_path: usize) {
        let first = self.vertex();
        self.edge(at, first);
        let mut prev = first;
        for _ in 1..loop_path {
            let x = self.vertex();
            self.edge(prev, x);
            prev = x;
        }
        self.edge(prev, at);
    }

    fn finish(self) -> Result<Graph, GraphError> {
        if self.n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n: self.n });
        }
        Graph::new(self.n, self.edges)
    }
}

fn invalid(msg: alloc::string::String) -> GraphError {
    GraphError::InvalidFamily(msg)
}

fn check_tail(name: &str, vertices: usize) -> Result<(), GraphError> {
    if vertices == 0 {
        return Err(invalid(format!("{name} must have at least one vertex")));
    }
    Ok(())
}

fn check_loop(name: &str, vertices: usize) -> Result<(), GraphError> {
    if vertices < 3 || vertices % 2 == 0 {
        return Err(invalid(format!(
            "{name} must have an odd number of vertices, at least 3 (got {vertices})"
        )));
    }
    Ok(())
}

/// Vertex count of the generated graph, computed without building it.
pub fn vertex_count(spec: &FamilySpec) -> usize {
    match spec {
        FamilySpec::Theta { lengths } => 2 + lengths.iter().map(|l| l.saturating_sub(1)).sum::<usize>(),
        FamilySpec::TwoCycles {
            first,
            path_vertices,
            second,
        } => first + second + path_vertices - 2,
        FamilySpec::Cycle { len } => *len,
        FamilySpec::Exceptional(e) => match *e {
            Exceptional::BranchTail { tail, loop_path }
            | Exceptional::MiddleTail { tail, loop_path } => 5 + tail - 1 + loop_path,
            Exceptional::SquareTwoTails {
                first_tail,
                first_loop,
                second_tail,
                second_loop,
            } => 4 + first_tail - 1 + first_loop + second_tail - 1 + second_loop,
            Exceptional::ChordedSquare { chord } => 5 + chord - 2,
        },
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    match spec {
        FamilySpec::Theta { lengths } => {
            if lengths.len() < 2 {
                return Err(invalid(format!("theta needs at least 2 paths, got {}", lengths.len())));
            }
            if lengths.contains(&0) {
                return Err(invalid("theta path lengths must be at least 1".into()));
            }
            if lengths.iter().filter(|&&l| l == 1).count() > 1 {
                return Err(invalid("at most one theta path may have length 1".into()));
            }
            if vertex_count(spec) > MAX_VERTICES {
                return Err(GraphError::TooManyVertices {
                    n: vertex_count(spec),
                });
            }
            let mut b = Builder::new(2);
            for &l in lengths {
                b.path(0, 1, l);
            }
            b.finish()
        }
        FamilySpec::Cycle { len } => {
            if *len < 3 {
                return Err(invalid(format!("cycle length must be at least 3, got {len}")));
            }
            Graph::new(*len, (0..*len).map(|i| (i, (i + 1) % len)))
        }
        FamilySpec::TwoCycles {
            first,
            path_vertices,
            second,
        } => {
            if *first < 3 || *second < 3 {
                return Err(invalid("cycle lengths must be at least 3".into()));
            }
            check_tail("joining path", *path_vertices)?;
            if vertex_count(spec) > MAX_VERTICES {
                return Err(GraphError::TooManyVertices {
                    n: vertex_count(spec),
                });
            }
            let shared = *path_vertices == 1;
            let mut b = Builder::new(if shared { 1 } else { 2 });
            let (u, v) = if shared { (0, 0) } else { (0, 1) };
            b.hang_cycle(u, first - 1);
            if !shared {
                b.path(u, v, path_vertices - 1);
            }
            b.hang_cycle(v, second - 1);
            b.finish()
        }
        FamilySpec::Exceptional(e) => exceptional(e),
    }
}

fn exceptional(e: &Exceptional) -> Result<Graph, GraphError> {
    let spec = FamilySpec::Exceptional(e.clone());
    match *e {
        Exceptional::BranchTail { tail, loop_path } | Exceptional::MiddleTail { tail, loop_path } => {
            check_tail("tail", tail)?;
            check_loop("loop path", loop_path)?;
            if vertex_count(&spec) > MAX_VERTICES {
                return Err(GraphError::TooManyVertices {
                    n: vertex_count(&spec),
                });
            }
            // u = 0, v = 1, middles 2, 3, 4
            let mut b = Builder::new(5);
            for x in 2..5 {
                b.edge(0, x);
                b.edge(x, 1);
            }
            let anchor = if matches!(e, Exceptional::BranchTail { .. }) { 0 } else { 2 };
            let end = b.tail(anchor, tail);
            b.hang_cycle(end, loop_path);
            b.finish()
        }
        Exceptional::SquareTwoTails {
            first_tail,
            first_loop,
            second_tail,
            second_loop,
        } => {
            check_tail("first tail", first_tail)?;
            check_tail("second tail", second_tail)?;
            check_loop("first loop path", first_loop)?;
            check_loop("second loop path", second_loop)?;
            if vertex_count(&spec) > MAX_VERTICES {
                return Err(GraphError::TooManyVertices {
                    n: vertex_count(&spec),
                });
            }
            // v = 0, w = 1, square v-2-w-3-v
            let mut b = Builder::new(4);
            for x in 2..4 {
                b.edge(0, x);
                b.edge(x, 1);
            }
            let end = b.tail(0, first_tail);
            b.hang_cycle(end, first_loop);
            let end = b.tail(1, second_tail);
            b.hang_cycle(end, second_loop);
            b.finish()
        }
        Exceptional::ChordedSquare { chord } => {
            check_loop("chord path", chord)?;
            if vertex_count(&spec) > MAX_VERTICES {
                return Err(GraphError::TooManyVertices {
                    n: vertex_count(&spec),
                });
            }
            // c1 = 0, c2 = 1, c3 = 2, c4 = 3, d = 4
            let mut b = Builder::new(5);
            b.edge(0, 1);
            b.edge(1, 2);
            b.edge(2, 3);
            b.edge(3, 0);
            b.edge(1, 4);
            b.edge(4, 3);
            b.path(0, 2, chord - 1);
            b.finish()
        }
    }
}
