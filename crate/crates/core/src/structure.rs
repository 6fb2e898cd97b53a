//! Structural recognition: cores, cycles, theta graphs, two-cycle graphs, and
//! the classifiers for 2-choosability and 3-choosable-criticality.

use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};

/// Vertices that survive iterated deletion of vertices of degree at most 1.
pub fn core_vertices(g: &Graph) -> VertexSet {
    let mut alive = g.vertices();
    loop {
        let shed: Vec<usize> = alive
            .iter()
            .filter(|&v| g.neighbours(v).intersection(alive).len() <= 1)
            .collect();
        if shed.is_empty() {
            return alive;
        }
        for v in shed {
            alive.remove(v);
        }
    }
}

/// The core of `g`: the largest subgraph of minimum degree at least 2,
/// renumbered in increasing id order. Forests have an empty core.
pub fn core_of(g: &Graph) -> Graph {
    g.induced(core_vertices(g)).0
}

/// A maximal run of degree-2 vertices between two branch vertices
/// (vertices of degree at least 3). `start == end` for a cycle hanging off a
/// single branch vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thread {
    pub start: usize,
    pub end: usize,
    /// Internal vertices ordered from `start` to `end`.
    pub internal: Vec<usize>,
}

impl Thread {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.internal.len() + 1
    }

    pub fn is_loop(&self) -> bool {
        self.start == self.end
    }
}

/// Decomposition of a connected graph with minimum degree 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Skeleton {
    /// No branch vertices: the graph is a cycle, listed in cyclic order.
    Cycle(Vec<usize>),
    Branched {
        branches: Vec<usize>,
        threads: Vec<Thread>,
    },
}

/// `None` unless `g` is connected with minimum degree at least 2.
pub fn skeleton(g: &Graph) -> Option<Skeleton> {
    if g.n() == 0 || !g.is_connected() || g.min_degree()? < 2 {
        return None;
    }
    let branches: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    if branches.is_empty() {
        let mut order = alloc::vec![0];
        let (mut prev, mut cur) = (0, g.neighbours(0).first()?);
        while cur != 0 {
            order.push(cur);
            let next = g.neighbours(cur).iter().find(|&w| w != prev)?;
            prev = cur;
            cur = next;
        }
        return Some(Skeleton::Cycle(order));
    }
    let mut threads = Vec::new();
    for &b in &branches {
        for x in g.neighbours(b).iter() {
            let mut internal = Vec::new();
            let (mut prev, mut cur) = (b, x);
            while g.degree(cur) == 2 {
                internal.push(cur);
                let next = g.neighbours(cur).iter().find(|&w| w != prev)?;
                prev = cur;
                cur = next;
            }
            let keep = match b.cmp(&cur) {
                core::cmp::Ordering::Less => true,
                core::cmp::Ordering::Greater => false,
                core::cmp::Ordering::Equal => internal.first() < internal.last(),
            };
            if keep {
                threads.push(Thread {
                    start: b,
                    end: cur,
                    internal,
                });
            }
        }
    }
    Some(Skeleton::Branched { branches, threads })
}

/// The vertices of `g` in cyclic order if `g` is a cycle.
pub fn as_cycle(g: &Graph) -> Option<Vec<usize>> {
    match skeleton(g)? {
        Skeleton::Cycle(order) => Some(order),
        Skeleton::Branched { .. } => None,
    }
}

/// A generalised theta graph: two branch vertices joined by at least three
/// internally disjoint paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaShape {
    pub u: usize,
    pub v: usize,
    /// Internal vertices of each path ordered from `u` to `v`; paths sorted
    /// by length, then by vertex ids.
    pub paths: Vec<Vec<usize>>,
}

impl ThetaShape {
    /// Edge counts of the paths, ascending.
    pub fn lengths(&self) -> Vec<usize> {
        self.paths.iter().map(|p| p.len() + 1).collect()
    }

    /// Vertex relabelling onto the canonical numbering used by
    /// [`crate::generate`]: `u`, `v`, then path internals in order.
    pub fn canonical_order(&self) -> Vec<usize> {
        let mut order = alloc::vec![self.u, self.v];
        for p in &self.paths {
            order.extend_from_slice(p);
        }
        order
    }
}

pub fn as_theta(g: &Graph) -> Option<ThetaShape> {
    let Skeleton::Branched { branches, threads } = skeleton(g)? else {
        return None;
    };
    if branches.len() != 2 {
        return None;
    }
    let (u, v) = (branches[0], branches[1]);
    if threads.iter().any(|t| t.is_loop()) {
        return None;
    }
    let mut paths: Vec<Vec<usize>> = threads.into_iter().map(|t| t.internal).collect();
    paths.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Some(ThetaShape { u, v, paths })
}

/// Two cycles joined by a path `q` from `u` to `v` (`u == v` when the cycles
/// share a vertex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCyclesShape {
    pub u: usize,
    pub v: usize,
    /// The first cycle minus `u`, in path order.
    pub first: Vec<usize>,
    /// The second cycle minus `v`, in path order.
    pub second: Vec<usize>,
    /// The joining path including both ends; `[u]` when `u == v`.
    pub joint: Vec<usize>,
}

impl TwoCyclesShape {
    pub fn cycle_lengths(&self) -> (usize, usize) {
        (self.first.len() + 1, self.second.len() + 1)
    }
}

pub fn as_two_cycles(g: &Graph) -> Option<TwoCyclesShape> {
    let Skeleton::Branched { branches, threads } = skeleton(g)? else {
        return None;
    };
    match branches.as_slice() {
        &[b] if g.degree(b) == 4 && threads.len() == 2 => Some(TwoCyclesShape {
            u: b,
            v: b,
            first: threads[0].internal.clone(),
            second: threads[1].internal.clone(),
            joint: alloc::vec![b],
        }),
        &[b1, b2] if g.degree(b1) == 3 && g.degree(b2) == 3 && threads.len() == 3 => {
            let loop1 = threads.iter().find(|t| t.is_loop() && t.start == b1)?;
            let loop2 = threads.iter().find(|t| t.is_loop() && t.start == b2)?;
            let link = threads.iter().find(|t| !t.is_loop())?;
            let mut joint = alloc::vec![b1];
            joint.extend_from_slice(&link.internal);
            joint.push(b2);
            Some(TwoCyclesShape {
                u: b1,
                v: b2,
                first: loop1.internal.clone(),
                second: loop2.internal.clone(),
                joint,
            })
        }
        _ => None,
    }
}

/// 2-choosability via the characterisation of graphs whose core is `K1`, an
/// even cycle or `Θ_{2,2,2p}`. No search is performed.
pub fn is_2_choosable(g: &Graph) -> bool {
    let core = core_of(g);
    core.components().into_iter().all(|comp| {
        let (h, _) = core.induced(comp);
        if let Some(cycle) = as_cycle(&h) {
            return cycle.len() % 2 == 0;
        }
        match as_theta(&h) {
            Some(t) => {
                let l = t.lengths();
                l.len() == 3 && l[0] == 2 && l[1] == 2 && l[2] % 2 == 0
            }
            None => false,
        }
    })
}

/// Which of the five families of 3-choosable-critical graphs a graph belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CriticalCase {
    /// Two vertex-disjoint even cycles joined by a path.
    A,
    /// Two even cycles sharing exactly one vertex.
    B,
    /// `Θ_{2r,2s,2t}` or `Θ_{2r-1,2s-1,2t-1}` with `r >= 1`, `s, t > 1`.
    C,
    /// `Θ_{2,2,2,2t}` with `t >= 1`.
    D,
    /// An odd cycle.
    E,
}

impl CriticalCase {
    pub fn letter(self) -> char {
        match self {
            CriticalCase::A => 'a',
            CriticalCase::B => 'b',
            CriticalCase::C => 'c',
            CriticalCase::D => 'd',
            CriticalCase::E => 'e',
        }
    }
}

/// Structural recognition of 3-choosable-critical graphs.
pub fn classify_3cc(g: &Graph) -> Option<CriticalCase> {
    if let Some(cycle) = as_cycle(g) {
        return (cycle.len() % 2 == 1).then_some(CriticalCase::E);
    }
    if let Some(t) = as_theta(g) {
        let l = t.lengths();
        return match l.len() {
            3 => {
                let all_even = l.iter().all(|x| x % 2 == 0);
                let all_odd = l.iter().all(|x| x % 2 == 1);
                // the shortest path may be short; the other two must be long
                if (all_even && l[1] >= 4) || (all_odd && l[1] >= 3) {
                    Some(CriticalCase::C)
                } else {
                    None
                }
            }
            4 if l[0] == 2 && l[1] == 2 && l[2] == 2 && l[3] % 2 == 0 => Some(CriticalCase::D),
            _ => None,
        };
    }
    let s = as_two_cycles(g)?;
    let (c1, c2) = s.cycle_lengths();
    if c1 % 2 != 0 || c2 % 2 != 0 {
        return None;
    }
    Some(if s.u == s.v {
        CriticalCase::B
    } else {
        CriticalCase::A
    })
}

/// For a 3-choosable-critical graph, whether it is `(4:2)`-choosable.
/// `None` when `g` is not 3-choosable-critical.
pub fn critical_four_two_choosable(g: &Graph) -> Option<bool> {
    let case = classify_3cc(g)?;
    Some(match case {
        CriticalCase::A | CriticalCase::B => true,
        CriticalCase::E => false,
        CriticalCase::C => {
            let l = as_theta(g)?.lengths();
            if l[0] % 2 == 0 {
                l[0] == 2
            } else {
                l[0] == 1
            }
        }
        CriticalCase::D => as_theta(g)?.lengths()[3] == 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};

    fn theta(l: &[usize]) -> Graph {
        generate(&FamilySpec::Theta {
            lengths: l.to_vec(),
        })
        .unwrap()
    }

    fn cycle(k: usize) -> Graph {
        generate(&FamilySpec::Cycle { len: k }).unwrap()
    }

    #[test]
    fn core_of_path_is_empty() {
        let p5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(core_of(&p5).n(), 0);
    }

    #[test]
    fn core_of_c6_with_pendant_is_c6() {
        let mut g = Graph::empty(7).unwrap();
        for i in 0..6 {
            g.add_edge(i, (i + 1) % 6).unwrap();
        }
        g.add_edge(2, 6).unwrap();
        let core = core_of(&g);
        assert_eq!(core.n(), 6);
        assert_eq!(core.edge_count(), 6);
        assert_eq!(as_cycle(&core).map(|c| c.len()), Some(6));
    }

    #[test]
    fn core_of_theta_is_itself() {
        let g = theta(&[2, 2, 4]);
        assert_eq!(core_of(&g), g);
    }

    #[test]
    fn theta_recognition_orders_paths() {
        let g = theta(&[4, 2, 4]);
        let t = as_theta(&g).unwrap();
        assert_eq!(t.lengths(), [2, 4, 4]);
        assert_eq!((t.u, t.v), (0, 1));
        assert!(as_theta(&cycle(6)).is_none());
    }

    #[test]
    fn two_choosability_examples() {
        assert!(is_2_choosable(&cycle(4)));
        assert!(is_2_choosable(&theta(&[2, 2, 4])));
        assert!(!is_2_choosable(&theta(&[3, 3, 3])));
        assert!(!is_2_choosable(&cycle(5)));
        assert!(is_2_choosable(&Graph::new(3, [(0, 1), (1, 2)]).unwrap()));
    }

    #[test]
    fn critical_case_examples() {
        assert_eq!(classify_3cc(&cycle(5)), Some(CriticalCase::E));
        assert_eq!(classify_3cc(&theta(&[2, 2, 2, 4])), Some(CriticalCase::D));
        assert_eq!(classify_3cc(&cycle(4)), None);
        assert_eq!(classify_3cc(&theta(&[3, 3, 3])), Some(CriticalCase::C));
        assert_eq!(classify_3cc(&theta(&[1, 3, 3])), Some(CriticalCase::C));
        assert_eq!(classify_3cc(&theta(&[2, 2, 4])), None);
        assert_eq!(classify_3cc(&theta(&[2, 3, 4])), None);
        let shared = generate(&FamilySpec::TwoCycles {
            first: 4,
            path_vertices: 1,
            second: 6,
        })
        .unwrap();
        assert_eq!(classify_3cc(&shared), Some(CriticalCase::B));
        let joined = generate(&FamilySpec::TwoCycles {
            first: 4,
            path_vertices: 3,
            second: 4,
        })
        .unwrap();
        assert_eq!(classify_3cc(&joined), Some(CriticalCase::A));
    }

    #[test]
    fn four_two_predicate_examples() {
        assert_eq!(critical_four_two_choosable(&theta(&[2, 2, 2, 2])), Some(true));
        assert_eq!(critical_four_two_choosable(&theta(&[4, 4, 4])), Some(false));
        assert_eq!(critical_four_two_choosable(&theta(&[1, 3, 3])), Some(true));
        assert_eq!(critical_four_two_choosable(&theta(&[2, 4, 6])), Some(true));
        assert_eq!(critical_four_two_choosable(&theta(&[3, 3, 5])), Some(false));
        assert_eq!(critical_four_two_choosable(&theta(&[2, 2, 2, 4])), Some(false));
        assert_eq!(critical_four_two_choosable(&cycle(7)), Some(false));
        assert_eq!(critical_four_two_choosable(&cycle(6)), None);
    }
}
