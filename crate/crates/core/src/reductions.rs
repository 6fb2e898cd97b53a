//! Graph and list transformations: delete-and-merge contraction, lifting
//! bad assignments back through it, realising path profiles on three
//! vertices, and shortening long runs of degree-2 vertices.

use alloc::format;
use alloc::vec::Vec;

use crate::colour::{ColourSet, MAX_UNIVERSE};
use crate::error::ReductionError;
use crate::graph::{Graph, VertexSet};
use crate::lists::ListAssignment;
use crate::path::{profile, PathList};
use crate::solver::l_colourable;

/// `G'` obtained from `G` by deleting `deleted` and identifying its
/// neighbours into one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionRecord {
    pub original: Graph,
    pub contracted: Graph,
    pub deleted: usize,
    /// Neighbours of `deleted` in `original`, ascending.
    pub merged: Vec<usize>,
    /// Id of the merged vertex in `contracted`.
    pub merged_id: usize,
    /// `map[x]` is the vertex of `contracted` for `x`; `None` for `deleted`.
    pub map: Vec<Option<usize>>,
}

/// Deletes `v` and merges its neighbours. Vertices keep their relative
/// order; the merged vertex sits where the smallest neighbour was.
pub fn contract_vertex(g: &Graph, v: usize) -> Result<ContractionRecord, ReductionError> {
    if v >= g.n() {
        return Err(ReductionError::VertexOutOfRange { vertex: v });
    }
    let nbrs: Vec<usize> = g.neighbours(v).iter().collect();
    let Some(&keep) = nbrs.first() else {
        return Err(ReductionError::NoNeighbours(v));
    };
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if g.has_edge(a, b) {
                return Err(ReductionError::AdjacentNeighbours { u: a, v: b });
            }
        }
    }
    let mut map = alloc::vec![None; g.n()];
    let mut next = 0;
    for x in 0..g.n() {
        if x == v || (nbrs.contains(&x) && x != keep) {
            continue;
        }
        map[x] = Some(next);
        next += 1;
    }
    let merged_id = map[keep].expect("kept neighbour is mapped");
    for &x in &nbrs {
        map[x] = Some(merged_id);
    }
    let mut contracted = Graph::empty(next)?;
    for (a, b) in g.edges() {
        if a == v || b == v {
            continue;
        }
        let (ma, mb) = (map[a].expect("mapped"), map[b].expect("mapped"));
        if !contracted.has_edge(ma, mb) {
            contracted.add_edge(ma, mb)?;
        }
    }
    Ok(ContractionRecord {
        original: g.clone(),
        contracted,
        deleted: v,
        merged: nbrs,
        merged_id,
        map,
    })
}

/// Pulls a bad `(4:2)` assignment on the contracted graph back to the
/// original: the deleted vertex and its neighbours all get the merged
/// vertex's list. Both sides are checked with the oracle.
pub fn lift_bad_assignment(
    rec: &ContractionRecord,
    bad: &ListAssignment,
) -> Result<ListAssignment, ReductionError> {
    if bad.len() != rec.contracted.n() {
        return Err(ReductionError::List(crate::error::ListError::LengthMismatch {
            expected: rec.contracted.n(),
            found: bad.len(),
        }));
    }
    if l_colourable(&rec.contracted, bad).is_some() {
        return Err(ReductionError::LiftSourceColourable);
    }
    let lists: Vec<ColourSet> = rec
        .map
        .iter()
        .map(|m| bad.list(m.unwrap_or(rec.merged_id)))
        .collect();
    let lifted = ListAssignment::new(bad.universe(), bad.a(), bad.b(), bad.m(), lists)?;
    if l_colourable(&rec.original, &lifted).is_some() {
        return Err(ReductionError::LiftColourable);
    }
    Ok(lifted)
}

/// Target profile `(B, Y, Z)` for a three-vertex path with `4m`-lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProfileSpec {
    pub common: ColourSet,
    pub hat_first: ColourSet,
    pub hat_last: ColourSet,
    pub m: usize,
}

/// Lists on `v1 v2 v3` with `A = B`, `X̂1 = Y`, `X̂3 = Z` and `S = 8m`:
/// `B ∪ Y ∪ J1`, `B ∪ J1 ∪ J2`, `B ∪ Z ∪ J2` with `J1`, `J2` fresh.
pub fn realize_profile(spec: &ProfileSpec) -> Result<PathList, ReductionError> {
    realize_profile_avoiding(spec, ColourSet::EMPTY)
}

/// [`realize_profile`] with the fresh colours also avoiding `avoid`.
pub fn realize_profile_avoiding(
    spec: &ProfileSpec,
    avoid: ColourSet,
) -> Result<PathList, ReductionError> {
    let (b, y, z, m) = (spec.common, spec.hat_first, spec.hat_last, spec.m);
    let sum = b.len() + y.len() + z.len();
    if m == 0 || sum != 4 * m {
        return Err(ReductionError::ProfileSize {
            sum,
            expected: 4 * m,
        });
    }
    if !b.is_disjoint(y) || !b.is_disjoint(z) {
        return Err(ReductionError::ProfileOverlap);
    }
    let free = ColourSet::universe(MAX_UNIVERSE) - (b | y | z | avoid);
    let (n1, n2) = (4 * m - b.len() - y.len(), 4 * m - b.len() - z.len());
    if free.len() < n1 + n2 {
        return Err(ReductionError::PaletteExhausted);
    }
    let j1 = free.smallest(n1);
    let j2 = (free - j1).smallest(n2);
    Ok(PathList::new(
        m,
        alloc::vec![b | y | j1, b | j1 | j2, b | z | j2],
    )?)
}

/// Stretches a three-vertex realisation to `n` (odd) vertices by repeating
/// the last list; the profile is unchanged and `S` grows by `4m` per two
/// vertices.
pub fn extend_realisation(p3: &[ColourSet], n: usize) -> Vec<ColourSet> {
    let mut out = p3.to_vec();
    while out.len() < n {
        out.push(p3[2]);
    }
    out.truncate(n);
    out
}

/// Result of [`p5_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P5Reduction {
    pub record: ContractionRecord,
    pub lists: ListAssignment,
    /// Profile of the original five-vertex path.
    pub original_profile: (ColourSet, ColourSet, ColourSet),
    /// `(B, Y, Z)` realised on the new three-vertex path.
    pub target: ProfileSpec,
    /// Whether the profile had to grow (`true`) or shrink to reach `4m`.
    pub padded: bool,
}

/// Shortens the five-vertex path `path` (all degree 2) to three vertices by
/// contracting its middle, and puts lists on the new path that realise the
/// old path's profile, grown with fresh colours or trimmed to size `4m`.
///
/// If the reduced instance is colourable, so is the original. The converse
/// can fail for a single assignment (trimming can over-constrain the new
/// path); only choosability of the two graphs is equivalent.
pub fn p5_reduce(
    g: &Graph,
    path: [usize; 5],
    lists: &ListAssignment,
) -> Result<P5Reduction, ReductionError> {
    let m = lists.m();
    if lists.len() != g.n() || lists.a() != 4 || lists.b() != 2 {
        return Err(ReductionError::BadP5("needs (4m:2m) lists on every vertex".into()));
    }
    let on_path = VertexSet::from_vertices(path);
    if on_path.len() != 5 {
        return Err(ReductionError::BadP5(format!("{path:?} repeats a vertex")));
    }
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(ReductionError::BadP5(format!("{} and {} are not adjacent", w[0], w[1])));
        }
    }
    for &x in &path {
        if g.degree(x) != 2 {
            return Err(ReductionError::BadP5(format!("vertex {x} has degree {}", g.degree(x))));
        }
    }
    for end in [path[0], path[4]] {
        if g.neighbours(end).difference(on_path).is_empty()
        {
            return Err(ReductionError::BadP5(format!(
                "end {end} has no neighbour outside the path"
            )));
        }
    }
    let pl = PathList::new(m, path.iter().map(|&x| lists.list(x)).collect())?;
    let prof = profile(&pl)?;
    let (a, x1, x5) = (prof.common, prof.hat_first, prof.hat_last);
    let sum = a.len() + x1.len() + x5.len();
    let palette = lists.palette();
    let (mut b, mut y, mut z) = (a, x1, x5);
    let padded = sum <= 4 * m;
    if padded {
        let free = ColourSet::universe(MAX_UNIVERSE) - palette;
        if free.len() < 4 * m - sum {
            return Err(ReductionError::PaletteExhausted);
        }
        y |= free.smallest(4 * m - sum);
    } else {
        let mut excess = sum - 4 * m;
        for set in [&mut z, &mut y, &mut b] {
            let cut = excess.min(set.len());
            *set = *set - set.largest(cut);
            excess -= cut;
        }
    }
    let target = ProfileSpec {
        common: b,
        hat_first: y,
        hat_last: z,
        m,
    };
    let avoid = palette | y;
    let p3 = realize_profile_avoiding(&target, avoid)?;
    let record = contract_vertex(g, path[2])?;
    let mut new_lists: Vec<ColourSet> = alloc::vec![ColourSet::EMPTY; record.contracted.n()];
    for x in 0..g.n() {
        if let Some(nx) = record.map[x] {
            new_lists[nx] = lists.list(x);
        }
    }
    let new_path = [
        record.map[path[0]].expect("mapped"),
        record.merged_id,
        record.map[path[4]].expect("mapped"),
    ];
    for (k, &x) in new_path.iter().enumerate() {
        new_lists[x] = p3.list(k);
    }
    let universe = new_lists.iter().map(|l| l.span()).max().unwrap_or(0);
    let new_lists = ListAssignment::new(universe.max(lists.universe()), 4, 2, m, new_lists)?;
    Ok(P5Reduction {
        record,
        lists: new_lists,
        original_profile: (a, x1, x5),
        target,
        padded,
    })
}

/// Some five-vertex path of degree-2 vertices, if any (lexicographically
/// first by its starting vertex and direction).
pub fn find_p5(g: &Graph) -> Option<[usize; 5]> {
    let deg2 = VertexSet::from_vertices((0..g.n()).filter(|&v| g.degree(v) == 2));
    for start in deg2.iter() {
        for second in g.neighbours(start).intersection(deg2).iter() {
            let mut path = [start, second, 0, 0, 0];
            let mut ok = true;
            for k in 2..5 {
                let next = g
                    .neighbours(path[k - 1])
                    .intersection(deg2)
                    .iter()
                    .find(|&w| w != path[k - 2]);
                match next {
                    Some(w) if !path[..k].contains(&w) => path[k] = w,
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return Some(path);
            }
        }
    }
    None
}

/// `true` when no five consecutive degree-2 vertices exist, so no path can
/// be shortened.
pub fn p5_minimal(g: &Graph) -> bool {
    find_p5(g).is_none()
}

/// Repeatedly contracts the middle of a five-vertex degree-2 path until
/// none is left (or shortening would merge adjacent vertices).
pub fn p5_shrink(g: &Graph) -> Graph {
    let mut cur = g.clone();
    while let Some(p) = find_p5(&cur) {
        match contract_vertex(&cur, p[2]) {
            Ok(rec) => cur = rec.contracted,
            Err(_) => break,
        }
    }
    cur
}
