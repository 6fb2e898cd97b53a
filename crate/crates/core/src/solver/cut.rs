//! Extending a precoloured vertex set `X` across the paths of `G - X`.
//!
//! When every component of `G - X` is an odd path whose internal vertices
//! have no neighbours in `X`, a colouring `φ` of `G[X]` extends to a path
//! `v1 .. vn` exactly when, with `p = φ(N_X(v1))` and `q = φ(N_X(vn))`,
//!
//! 1. `|L(v1) ∩ p| <= 2m`,
//! 2. `|L(vn) ∩ q| <= 2m`, and
//! 3. `damage(p, q) <= S - 2mn`.
//!
//! For a single-vertex path all neighbour colours go into `p` and `q` is
//! empty; the three conditions then collapse to `|L(v) ∩ p| <= 2m`.

use alloc::format;
use alloc::vec::Vec;

use crate::colour::ColourSet;
use crate::error::SolverError;
use crate::graph::{Graph, VertexSet};
use crate::lists::{ListAssignment, TupleColouring};
use crate::path::{colour_path, damage, profile, restrict, PathList};

/// A component of `G - X`, ordered from one end to the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutPath {
    pub vertices: Vec<usize>,
    /// Neighbours in `X` of the first vertex.
    pub first_cut: VertexSet,
    /// Neighbours in `X` of the last vertex.
    pub last_cut: VertexSet,
}

impl CutPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }
}

/// Splits `G - X` into ordered odd paths.
///
/// With `single_attachments`, path ends of paths with at least three
/// vertices must also have at most one neighbour in `X` (the profile search
/// relies on it).
pub fn check_cut(
    g: &Graph,
    x: VertexSet,
    single_attachments: bool,
) -> Result<Vec<CutPath>, SolverError> {
    if !x.difference(g.vertices()).is_empty() {
        return Err(SolverError::Cut(format!("{x:?} is not a vertex subset")));
    }
    let rest = g.vertices().difference(x);
    let mut out = Vec::new();
    for comp in g.components_within(rest) {
        let n = comp.len();
        let inner_edges: usize = comp
            .iter()
            .map(|v| g.neighbours(v).intersection(comp).len())
            .sum::<usize>()
            / 2;
        let ends: Vec<usize> = comp
            .iter()
            .filter(|&v| g.neighbours(v).intersection(comp).len() <= 1)
            .collect();
        if inner_edges != n - 1 || comp.iter().any(|v| g.neighbours(v).intersection(comp).len() > 2)
        {
            return Err(SolverError::Cut(format!(
                "component {comp:?} of G - X is not a path"
            )));
        }
        if n % 2 == 0 {
            return Err(SolverError::EvenPathComponent { n });
        }
        let mut vertices = Vec::with_capacity(n);
        let (mut prev, mut cur) = (usize::MAX, ends[0]);
        loop {
            vertices.push(cur);
            let next = g
                .neighbours(cur)
                .intersection(comp)
                .iter()
                .find(|&w| w != prev);
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        for &v in vertices.iter().skip(1).take(n.saturating_sub(2)) {
            if !g.neighbours(v).intersection(x).is_empty() {
                return Err(SolverError::Cut(format!(
                    "internal path vertex {v} has a neighbour in X"
                )));
            }
        }
        let first_cut = g.neighbours(vertices[0]).intersection(x);
        let last_cut = g.neighbours(vertices[n - 1]).intersection(x);
        if single_attachments && n >= 3 && (first_cut.len() > 1 || last_cut.len() > 1) {
            return Err(SolverError::Cut(format!(
                "an end of path {vertices:?} has several neighbours in X"
            )));
        }
        out.push(CutPath {
            vertices,
            first_cut,
            last_cut,
        });
    }
    Ok(out)
}

/// The smallest vertex set (then lexicographically first) accepted by
/// [`check_cut`] with single attachments.
pub fn auto_cut(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    for size in 0..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let x = VertexSet::from_vertices(idx.iter().copied());
            if check_cut(g, x, true).is_ok() {
                return Some(x);
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    None
}

/// Advances `idx` to the next `idx.len()`-subset of `0..n` in lexicographic
/// order; `false` once exhausted.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Union of `φ` over a vertex set.
pub(crate) fn colours_on(phi: &[ColourSet], vs: VertexSet) -> ColourSet {
    vs.iter().fold(ColourSet::EMPTY, |acc, v| acc | phi[v])
}

/// The sets deleted from the two ends of `path`.
pub(crate) fn end_restrictions(path: &CutPath, phi: &[ColourSet]) -> (ColourSet, ColourSet) {
    if path.len() == 1 {
        (colours_on(phi, path.first_cut), ColourSet::EMPTY)
    } else {
        (colours_on(phi, path.first_cut), colours_on(phi, path.last_cut))
    }
}

/// Whether `φ` on `X` extends across one path, by the three conditions.
pub(crate) fn path_accepts(
    path: &CutPath,
    lists: &[ColourSet],
    m: usize,
    phi: &[ColourSet],
) -> Result<bool, SolverError> {
    let pl = PathList::new(m, path.vertices.iter().map(|&v| lists[v]).collect())?;
    let (p, q) = end_restrictions(path, phi);
    if (pl.first() & p).len() > 2 * m || (pl.last() & q).len() > 2 * m {
        return Ok(false);
    }
    let prof = profile(&pl)?;
    Ok(damage(&prof, p, q) as isize <= prof.slack(m))
}

/// Extends `phi_x` (read only on `X`) to all of `G`, or `None` when some path
/// rejects it or `phi_x` is not a proper colouring of `G[X]`.
pub fn extend_from_cut(
    g: &Graph,
    x: VertexSet,
    phi_x: &TupleColouring,
    lists: &ListAssignment,
) -> Result<Option<TupleColouring>, SolverError> {
    let m = lists.m();
    if lists.len() != g.n() || phi_x.len() != g.n() {
        return Err(SolverError::List(crate::error::ListError::LengthMismatch {
            expected: g.n(),
            found: lists.len().min(phi_x.len()),
        }));
    }
    if lists.a() != 4 || lists.b() != 2 {
        return Err(SolverError::Unsupported(format!(
            "cut extension needs (4m:2m) lists, got ({}:{})",
            lists.a(),
            lists.b()
        )));
    }
    let paths = check_cut(g, x, false)?;
    let t = 2 * m;
    let phi = phi_x.sets();
    for v in x.iter() {
        if phi[v].len() != t || !phi[v].is_subset(lists.list(v)) {
            return Ok(None);
        }
        if g.neighbours(v).intersection(x).iter().any(|w| !phi[v].is_disjoint(phi[w])) {
            return Ok(None);
        }
    }
    let mut out: Vec<ColourSet> = (0..g.n())
        .map(|v| if x.contains(v) { phi[v] } else { ColourSet::EMPTY })
        .collect();
    for path in &paths {
        if !path_accepts(path, lists.lists(), m, phi)? {
            return Ok(None);
        }
        let pl = PathList::new(m, path.vertices.iter().map(|&v| lists.list(v)).collect())?;
        let (p, q) = end_restrictions(path, phi);
        let coloured = colour_path(&restrict(&pl, p, q)).ok_or_else(|| {
            SolverError::Inconsistent(format!(
                "path {:?} passed the extension test but has no colouring",
                path.vertices
            ))
        })?;
        for (i, &v) in path.vertices.iter().enumerate() {
            out[v] = coloured.get(i);
        }
    }
    Ok(Some(TupleColouring(out)))
}
