//! Choosability through a cut: enumerate lists on `X` only, and replace
//! each path of `G - X` by the profiles `(A, X̂1, X̂n)` it could have.
//!
//! With slack `S - 2n` at least 2 and `|A| + |X̂1| + |X̂n| <= S - 2n + 2`,
//! dropping colours from the profile costs at most as much damage as it
//! removes slack, so the worst paths have `S = 2n + 2` and profile sizes
//! summing to 4. Only colours used on `X` can be damaged; everything else
//! is fresh. For every list assignment on `X` the search asks whether some
//! choice of worst-case profile per path rejects every colouring of `G[X]`.
//! Such a choice is turned into an explicit bad assignment and confirmed by
//! the oracle; if no choice exists the graph is choosable.

use alloc::format;
use alloc::vec::Vec;

use super::choosability::{canonical_options, confirm_witness};
use super::cut::{auto_cut, check_cut, colours_on, CutPath};
use super::{Budget, SearchConfig, Verdict};
use crate::colour::{ColourSet, MAX_UNIVERSE};
use crate::error::SolverError;
use crate::graph::{Graph, VertexSet};
use crate::lists::ListAssignment;
use crate::path::PathList;
use crate::reductions::{extend_realisation, realize_profile_avoiding, ProfileSpec};

/// Sizes of a path profile together with `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProfileShape {
    pub common: usize,
    pub hat_first: usize,
    pub hat_last: usize,
    pub s_value: usize,
}

/// The worst-case profile shapes of odd `n`-vertex paths with `4m`-lists,
/// each with a path realising it. Worst case means `S = 2nm + 2m` and
/// `|A| + |X̂1| + |X̂n| = 4m`; a single vertex only has `(4m, 0, 0)`.
pub fn enumerate_profiles(n: usize, m: usize) -> Result<Vec<(ProfileShape, PathList)>, SolverError> {
    if n % 2 == 0 || m == 0 {
        return Err(SolverError::Unsupported(format!(
            "profiles need odd n and m >= 1, got n={n}, m={m}"
        )));
    }
    let t = 4 * m;
    if n == 1 {
        let shape = ProfileShape {
            common: t,
            hat_first: 0,
            hat_last: 0,
            s_value: t,
        };
        return Ok(alloc::vec![(shape, PathList::new(m, alloc::vec![ColourSet::range(0, t)])?)]);
    }
    let mut out = Vec::new();
    for b in 0..=t {
        for y in 0..=t - b {
            let z = t - b - y;
            let spec = ProfileSpec {
                common: ColourSet::range(0, b),
                hat_first: ColourSet::range(b, b + y),
                hat_last: ColourSet::range(b + y, t),
                m,
            };
            let p3 = realize_profile_avoiding(&spec, ColourSet::EMPTY)
                .map_err(|e| SolverError::Inconsistent(format!("{e}")))?;
            let lists = extend_realisation(p3.lists(), n);
            out.push((
                ProfileShape {
                    common: b,
                    hat_first: y,
                    hat_last: z,
                    s_value: 2 * n * m + 2 * m,
                },
                PathList::new(m, lists)?,
            ));
        }
    }
    Ok(out)
}

/// Bitset over the colourings of `G[X]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn full(len: usize) -> Self {
        let mut w = alloc::vec![u64::MAX; len.div_ceil(64)];
        if len % 64 != 0 {
            *w.last_mut().expect("non-empty") = (1u64 << (len % 64)) - 1;
        }
        Bits(w)
    }

    fn empty(len: usize) -> Self {
        Bits(alloc::vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn is_subset(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

/// A worst-case profile restricted to the colours of `X`: `(A, Y, Z)` for
/// a path of three or more vertices, `(W ∩ K, ∅, ∅)` for a single vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Shape {
    a: ColourSet,
    y: ColourSet,
    z: ColourSet,
}

/// Keeps the inclusion-minimal sets, paired with one shape producing each.
fn minimal(mut sets: Vec<(Bits, Shape)>) -> Vec<(Bits, Shape)> {
    sets.sort_by_key(|(b, _)| b.0.iter().map(|w| w.count_ones()).sum::<u32>());
    let mut out: Vec<(Bits, Shape)> = Vec::new();
    for (b, s) in sets {
        if !out.iter().any(|(o, _)| o.is_subset(&b)) {
            out.push((b, s));
        }
    }
    out
}

/// All `(A, Y, Z)` over `k` with `A` disjoint from `Y` and `Z` and
/// `|A| + |Y| + |Z| <= 4`.
fn profile_shapes(k: ColourSet) -> Vec<Shape> {
    let colours: Vec<u8> = k.iter().collect();
    let mut out = Vec::new();
    fn rec(colours: &[u8], i: usize, left: usize, cur: Shape, out: &mut Vec<Shape>) {
        if i == colours.len() {
            out.push(cur);
            return;
        }
        let c = ColourSet::singleton(colours[i]);
        rec(colours, i + 1, left, cur, out);
        if left >= 1 {
            rec(colours, i + 1, left - 1, Shape { a: cur.a | c, ..cur }, out);
            rec(colours, i + 1, left - 1, Shape { y: cur.y | c, ..cur }, out);
            rec(colours, i + 1, left - 1, Shape { z: cur.z | c, ..cur }, out);
        }
        if left >= 2 {
            rec(colours, i + 1, left - 2, Shape { y: cur.y | c, z: cur.z | c, ..cur }, out);
        }
    }
    let empty = Shape {
        a: ColourSet::EMPTY,
        y: ColourSet::EMPTY,
        z: ColourSet::EMPTY,
    };
    rec(&colours, 0, 4, empty, &mut out);
    out
}

/// Proper `(L:2)`-colourings of `G[X]`, indexed by vertex of `G`.
fn colourings_of_cut(g: &Graph, xs: &[usize], lists: &[ColourSet]) -> Vec<Vec<ColourSet>> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![ColourSet::EMPTY; g.n()];
    fn rec(
        g: &Graph,
        xs: &[usize],
        k: usize,
        lists: &[ColourSet],
        cur: &mut Vec<ColourSet>,
        out: &mut Vec<Vec<ColourSet>>,
    ) {
        if k == xs.len() {
            out.push(cur.clone());
            return;
        }
        let v = xs[k];
        for s in lists[v].subsets(2) {
            if xs[..k].iter().any(|&w| g.has_edge(v, w) && !s.is_disjoint(cur[w])) {
                continue;
            }
            cur[v] = s;
            rec(g, xs, k + 1, lists, cur, out);
        }
        cur[v] = ColourSet::EMPTY;
    }
    rec(g, xs, 0, lists, &mut cur, &mut out);
    out
}

/// Minimal acceptance sets of one path over all worst-case shapes.
fn path_families(path: &CutPath, k: ColourSet, phis: &[Vec<ColourSet>]) -> Vec<(Bits, Shape)> {
    let mut sets = Vec::new();
    if path.len() == 1 {
        for w in k.subsets(k.len().min(4)) {
            let mut b = Bits::empty(phis.len());
            for (i, phi) in phis.iter().enumerate() {
                if (w & colours_on(phi, path.first_cut)).len() <= 2 {
                    b.set(i);
                }
            }
            let shape = Shape {
                a: w,
                y: ColourSet::EMPTY,
                z: ColourSet::EMPTY,
            };
            sets.push((b, shape));
        }
    } else {
        for s in profile_shapes(k) {
            let mut b = Bits::empty(phis.len());
            for (i, phi) in phis.iter().enumerate() {
                let p = colours_on(phi, path.first_cut);
                let q = colours_on(phi, path.last_cut);
                let dmg = ((s.a | s.y) & p).len() + ((s.a | s.z) & q).len() - (s.a & p & q).len();
                if dmg <= 2 {
                    b.set(i);
                }
            }
            sets.push((b, s));
        }
    }
    minimal(sets)
}

/// Choosability of `g` for `(4:2)` via the cut `x` (or the automatic cut).
pub fn cut_search(
    g: &Graph,
    x: Option<VertexSet>,
    cfg: &SearchConfig,
) -> Result<Verdict, SolverError> {
    let x = match x {
        Some(x) => x,
        None => auto_cut(g).ok_or_else(|| SolverError::Cut("no vertex set leaves odd paths".into()))?,
    };
    let paths = check_cut(g, x, true)?;
    let xs: Vec<usize> = x.iter().collect();
    let cap = cfg
        .universe_cap
        .unwrap_or(4 * xs.len().max(1))
        .min(MAX_UNIVERSE);
    let budget = Budget::new(cfg);
    let mut lists = alloc::vec![ColourSet::EMPTY; g.n()];
    let found = enumerate_cut_lists(g, &xs, &paths, 0, 0, cap, &mut lists, &budget)?;
    match found {
        None => Ok(Verdict::choosable(budget.stats())),
        Some(shapes) => {
            let witness = realise(g, &xs, &lists, &paths, &shapes)?;
            confirm_witness(g, witness, &budget)
        }
    }
}

/// Depth-first over canonical lists on `X`; on success `lists` holds the
/// bad lists on `X` and the returned shapes one per path.
#[allow(clippy::too_many_arguments)]
fn enumerate_cut_lists(
    g: &Graph,
    xs: &[usize],
    paths: &[CutPath],
    k: usize,
    used: usize,
    cap: usize,
    lists: &mut Vec<ColourSet>,
    budget: &Budget,
) -> Result<Option<Vec<Option<Shape>>>, SolverError> {
    let inconclusive = |b: &Budget| SolverError::Inconclusive(b.stats());
    if k == xs.len() {
        budget.assignment().map_err(|_| inconclusive(budget))?;
        return bad_combination(g, xs, paths, lists, budget);
    }
    for o in canonical_options(used, 4, cap) {
        lists[xs[k]] = o;
        if let Some(found) =
            enumerate_cut_lists(g, xs, paths, k + 1, used.max(o.span()), cap, lists, budget)?
        {
            return Ok(Some(found));
        }
    }
    lists[xs[k]] = ColourSet::EMPTY;
    Ok(None)
}

/// A choice of shapes (`None` = unconstrained) rejecting every colouring of
/// `G[X]`, if one exists.
fn bad_combination(
    g: &Graph,
    xs: &[usize],
    paths: &[CutPath],
    lists: &[ColourSet],
    budget: &Budget,
) -> Result<Option<Vec<Option<Shape>>>, SolverError> {
    let phis = colourings_of_cut(g, xs, lists);
    if phis.is_empty() {
        return Ok(Some(alloc::vec![None; paths.len()]));
    }
    let k = xs.iter().fold(ColourSet::EMPTY, |acc, &v| acc | lists[v]);
    let families: Vec<Vec<(Bits, Shape)>> =
        paths.iter().map(|p| path_families(p, k, &phis)).collect();
    // frontier of (remaining colourings, shapes chosen so far)
    let mut frontier: Vec<(Bits, Vec<Option<Shape>>)> = alloc::vec![(Bits::full(phis.len()), Vec::new())];
    for fam in &families {
        let mut next: Vec<(Bits, Vec<Option<Shape>>)> = Vec::new();
        for (cur, chosen) in &frontier {
            for (b, s) in fam {
                budget
                    .node()
                    .map_err(|_| SolverError::Inconclusive(budget.stats()))?;
                let inter = cur.and(b);
                let mut picked = chosen.clone();
                picked.push(Some(*s));
                if inter.is_empty() {
                    picked.resize(paths.len(), None);
                    return Ok(Some(picked));
                }
                next.push((inter, picked));
            }
        }
        // a smaller remaining set is always at least as useful
        next.sort_by_key(|(b, _)| b.0.iter().map(|w| w.count_ones()).sum::<u32>());
        let mut kept: Vec<(Bits, Vec<Option<Shape>>)> = Vec::new();
        for (b, c) in next {
            if !kept.iter().any(|(o, _)| o.is_subset(&b)) {
                kept.push((b, c));
            }
        }
        frontier = kept;
    }
    Ok(None)
}

/// Builds a full list assignment from lists on `X` and one shape per path.
fn realise(
    g: &Graph,
    xs: &[usize],
    x_lists: &[ColourSet],
    paths: &[CutPath],
    shapes: &[Option<Shape>],
) -> Result<ListAssignment, SolverError> {
    let k = xs.iter().fold(ColourSet::EMPTY, |acc, &v| acc | x_lists[v]);
    let fresh_start = k.span();
    let fresh = |count: usize, avoid: ColourSet| -> Result<ColourSet, SolverError> {
        let free = ColourSet::range(fresh_start, MAX_UNIVERSE) - avoid;
        if free.len() < count {
            return Err(SolverError::Unsupported("palette exhausted while realising".into()));
        }
        Ok(free.smallest(count))
    };
    let mut lists = x_lists.to_vec();
    for (path, shape) in paths.iter().zip(shapes) {
        let s = shape.unwrap_or(Shape {
            a: ColourSet::EMPTY,
            y: ColourSet::EMPTY,
            z: ColourSet::EMPTY,
        });
        if path.len() == 1 {
            let w = s.a | fresh(4 - s.a.len(), ColourSet::EMPTY)?;
            lists[path.first()] = w;
            continue;
        }
        let missing = 4 - (s.a.len() + s.y.len() + s.z.len());
        let b = s.a | fresh(missing, ColourSet::EMPTY)?;
        let spec = ProfileSpec {
            common: b,
            hat_first: s.y,
            hat_last: s.z,
            m: 1,
        };
        let avoid = k | ColourSet::range(0, fresh_start) | b;
        let p3 = realize_profile_avoiding(&spec, avoid)
            .map_err(|e| SolverError::Inconsistent(format!("{e}")))?;
        let full = extend_realisation(p3.lists(), path.len());
        for (i, &v) in path.vertices.iter().enumerate() {
            lists[v] = full[i];
        }
    }
    let universe = lists.iter().map(|l| l.span()).max().unwrap_or(0);
    let _ = g;
    Ok(ListAssignment::new(universe, 4, 2, 1, lists)?)
}
