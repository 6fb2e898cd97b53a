//! The `(4:2)` colouring procedure for `Θ_{2,2r,2s}`.
//!
//! Pair the colours of the two branch lists into couples `c_j c'_j` (shared
//! colours paired with themselves). A simple pair takes two whole couples;
//! its damage on each internal path is the sum of the two couples' damages
//! (0 safe, 1 light, 2 heavy). A path blocks a pair when that damage exceeds
//! its slack `S - 2|V(P)|`. If some simple pair is blocked by no path it
//! extends directly. Otherwise every path has a single heavy couple; after
//! reindexing so that couple `j` is heavy for `P^j` (with `P^0` the
//! one-vertex path) the pair `({c0,c3}, {c'2,c'3})` or `({c2,c3}, {c'0,c'3})`
//! finishes the job.

use alloc::format;
use alloc::vec::Vec;

use super::cut::extend_from_cut;
use super::oracle::l_colourable;
use crate::colour::{Colour, ColourSet};
use crate::error::SolverError;
use crate::graph::{Graph, VertexSet};
use crate::lists::{ListAssignment, TupleColouring};
use crate::path::{damage, profile, PathList, PathProfile};
use crate::structure::as_theta;

/// The six simple pairs as couple indices, in the order they are tried.
pub const SIMPLE_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Couples between the branch lists and their damage on every internal path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoupleTable {
    pub u: usize,
    pub v: usize,
    /// `c_0 .. c_3`, from `L(u)`.
    pub first: [Colour; 4],
    /// `c'_0 .. c'_3`, from `L(v)`; `c'_j = c_j` for shared colours.
    pub second: [Colour; 4],
    /// Internal vertices of each path, ordered from `u` to `v`.
    pub paths: Vec<Vec<usize>>,
    pub profiles: Vec<PathProfile>,
    /// `damage[path][j]` is the damage of couple `j` on that path.
    pub damage: Vec<[u8; 4]>,
    /// `S - 2|V(P)|` per path.
    pub slack: Vec<isize>,
}

impl CoupleTable {
    pub fn pair(&self, i: usize, j: usize) -> (ColourSet, ColourSet) {
        let p = ColourSet::from_colours([self.first[i] as usize, self.first[j] as usize]);
        let q = ColourSet::from_colours([self.second[i] as usize, self.second[j] as usize]);
        (p, q)
    }

    pub fn blocks(&self, path: usize, i: usize, j: usize) -> bool {
        (self.damage[path][i] + self.damage[path][j]) as isize > self.slack[path]
    }

    /// Simple pairs blocked by `path`.
    pub fn blocked_by(&self, path: usize) -> Vec<(usize, usize)> {
        SIMPLE_PAIRS
            .iter()
            .copied()
            .filter(|&(i, j)| self.blocks(path, i, j))
            .collect()
    }

    pub fn heavy(&self, path: usize) -> Vec<usize> {
        (0..4).filter(|&j| self.damage[path][j] == 2).collect()
    }

    pub fn light(&self, path: usize, j: usize) -> bool {
        self.damage[path][j] == 1
    }
}

/// Builds the couple table of a generalised theta graph with `(4:2)` lists.
pub fn couple_table(g: &Graph, lists: &ListAssignment) -> Result<CoupleTable, SolverError> {
    if lists.m() != 1 || lists.a() != 4 || lists.b() != 2 || lists.len() != g.n() {
        return Err(SolverError::Unsupported(
            "couple tables need (4:2) lists on every vertex".into(),
        ));
    }
    let shape = as_theta(g).ok_or_else(|| SolverError::Shape("not a theta graph".into()))?;
    let (lu, lv) = (lists.list(shape.u), lists.list(shape.v));
    let shared = lu & lv;
    let mut first = [0 as Colour; 4];
    let mut second = [0 as Colour; 4];
    for (slot, c) in shared.iter().chain((lu - shared).iter()).enumerate() {
        first[slot] = c;
    }
    for (slot, c) in shared.iter().chain((lv - shared).iter()).enumerate() {
        second[slot] = c;
    }
    let mut profiles = Vec::new();
    let mut dmg = Vec::new();
    let mut slack = Vec::new();
    for p in &shape.paths {
        let pl = PathList::new(1, p.iter().map(|&x| lists.list(x)).collect())?;
        let prof = profile(&pl)?;
        let mut row = [0u8; 4];
        for j in 0..4 {
            let d = damage(
                &prof,
                ColourSet::singleton(first[j]),
                ColourSet::singleton(second[j]),
            );
            row[j] = d as u8;
        }
        slack.push(prof.slack(1));
        dmg.push(row);
        profiles.push(prof);
    }
    Ok(CoupleTable {
        u: shape.u,
        v: shape.v,
        first,
        second,
        paths: shape.paths,
        profiles,
        damage: dmg,
        slack,
    })
}

/// The first simple pair (as couple indices) that no path blocks.
pub fn find_simple_solution(table: &CoupleTable, slack: &[isize]) -> Option<(usize, usize)> {
    SIMPLE_PAIRS.iter().copied().find(|&(i, j)| {
        (0..table.damage.len())
            .all(|k| (table.damage[k][i] + table.damage[k][j]) as isize <= slack[k])
    })
}

/// How [`solve_theta_22r2s`] found its colouring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThetaRoute {
    Simple,
    Endgame,
    /// The endgame's first pair failed and the other one worked.
    EndgameAlternate,
    /// The blocking pattern matched neither expected situation, or neither
    /// endgame pair extended; the oracle coloured the graph.
    OracleFallback,
}

/// Colours `Θ_{2,2r,2s}` from any `(4:2)` lists.
pub fn solve_theta_22r2s(
    g: &Graph,
    lists: &ListAssignment,
) -> Result<(TupleColouring, ThetaRoute), SolverError> {
    let shape = as_theta(g).ok_or_else(|| SolverError::Shape("not a theta graph".into()))?;
    let l = shape.lengths();
    if l.len() != 3 || l[0] != 2 || l.iter().any(|x| x % 2 != 0) {
        return Err(SolverError::Shape(format!(
            "expected Θ_{{2,2r,2s}}, got path lengths {l:?}"
        )));
    }
    let table = couple_table(g, lists)?;
    let x = VertexSet::from_vertices([table.u, table.v]);
    let attempt = |p: ColourSet, q: ColourSet| -> Result<Option<TupleColouring>, SolverError> {
        let mut phi = alloc::vec![ColourSet::EMPTY; g.n()];
        phi[table.u] = p;
        phi[table.v] = q;
        extend_from_cut(g, x, &TupleColouring(phi), lists)
    };

    if let Some((i, j)) = find_simple_solution(&table, &table.slack) {
        let (p, q) = table.pair(i, j);
        return match attempt(p, q)? {
            Some(phi) => Ok((phi, ThetaRoute::Simple)),
            None => Err(SolverError::Inconsistent(format!(
                "unblocked simple pair {p}/{q} does not extend"
            ))),
        };
    }

    if let Some([c, alt]) = endgame_pairs(&table) {
        if let Some(phi) = attempt(c.0, c.1)? {
            return Ok((phi, ThetaRoute::Endgame));
        }
        if let Some(phi) = attempt(alt.0, alt.1)? {
            log::warn!(
                "theta endgame: first pair {}/{} failed, alternative {}/{} worked; lists {:?}",
                c.0,
                c.1,
                alt.0,
                alt.1,
                lists.lists()
            );
            return Ok((phi, ThetaRoute::EndgameAlternate));
        }
    }
    log::warn!(
        "theta procedure fell back to the oracle; couple damages {:?}, slack {:?}, lists {:?}",
        table.damage,
        table.slack,
        lists.lists()
    );
    match l_colourable(g, lists) {
        Some(phi) => Ok((phi, ThetaRoute::OracleFallback)),
        None => Err(SolverError::ProcedureFailed(format!(
            "no colouring exists for lists {:?}",
            lists.lists()
        ))),
    }
}

type Pair = (ColourSet, ColourSet);

/// The endgame pair and its alternative, or `None` when the blocking
/// pattern is not the expected one.
fn endgame_pairs(t: &CoupleTable) -> Option<[Pair; 2]> {
    // every path has exactly one heavy couple, all different
    let mut sigma = [0usize; 4];
    for (k, slot) in sigma.iter_mut().enumerate().take(3) {
        let h = t.heavy(k);
        if h.len() != 1 {
            return None;
        }
        *slot = h[0];
    }
    if sigma[0] == sigma[1] || sigma[0] == sigma[2] || sigma[1] == sigma[2] {
        return None;
    }
    sigma[3] = (0..4).find(|j| !sigma[..3].contains(j))?;
    let mut paths = [0usize, 1, 2];
    if !(0..3).all(|k| t.light(k, sigma[3])) {
        return None;
    }
    let situation_a = |s: &[usize; 4], p: &[usize; 3]| {
        t.light(p[0], s[1]) && t.light(p[1], s[2]) && t.light(p[2], s[0])
    };
    if !situation_a(&sigma, &paths) {
        // the mirrored situation: swap the roles of P^1 and P^2
        sigma.swap(1, 2);
        paths.swap(1, 2);
        if !situation_a(&sigma, &paths) {
            return None;
        }
    }
    let c = |j: usize| ColourSet::singleton(t.first[sigma[j]]);
    let cp = |j: usize| ColourSet::singleton(t.second[sigma[j]]);
    let first_pair = (c(0) | c(3), cp(2) | cp(3));
    let second_pair = (c(2) | c(3), cp(0) | cp(3));
    let c0_hat = t.profiles[paths[2]]
        .hat_first
        .contains(t.first[sigma[0]]);
    Some(if !c0_hat {
        [first_pair, second_pair]
    } else {
        [second_pair, first_pair]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};
    use crate::lists::is_proper_colouring;
    use alloc::vec;

    fn theta(l: &[usize]) -> Graph {
        generate(&FamilySpec::Theta {
            lengths: l.to_vec(),
        })
        .unwrap()
    }

    fn cs<const N: usize>(c: [usize; N]) -> ColourSet {
        ColourSet::from_colours(c)
    }

    #[test]
    fn equal_lists_make_every_couple_light() {
        let g = theta(&[2, 4, 4]);
        let l = ListAssignment::four_two(1, vec![cs([0, 1, 2, 3]); 9]).unwrap();
        let t = couple_table(&g, &l).unwrap();
        assert_eq!(t.first, t.second);
        assert!(t.damage.iter().all(|row| row == &[1, 1, 1, 1]));
    }

    #[test]
    fn disjoint_branch_lists_with_foreign_internals_are_safe() {
        let g = theta(&[2, 4, 4]);
        let mut lists = vec![cs([8, 9, 10, 11]); 9];
        lists[0] = cs([0, 1, 2, 3]);
        lists[1] = cs([4, 5, 6, 7]);
        let l = ListAssignment::four_two(1, lists).unwrap();
        let t = couple_table(&g, &l).unwrap();
        assert!(t.damage.iter().all(|row| row == &[0; 4]));
        assert_eq!(find_simple_solution(&t, &t.slack), Some((0, 1)));
    }

    #[test]
    fn one_vertex_path_damage_is_list_overlap() {
        let g = theta(&[2, 2, 2, 4]);
        let l = ListAssignment::four_two(
            1,
            [
                "abcf", "abde", "abce", "adef", "abcd", "abef", "acde", "abcd",
            ]
            .iter()
            .map(|s| s.bytes().map(|b| b - b'a').collect())
            .collect(),
        )
        .unwrap();
        let t = couple_table(&g, &l).unwrap();
        for (k, path) in t.paths.iter().enumerate().take(3) {
            let w = l.list(path[0]);
            for j in 0..4 {
                let (c, d) = (t.first[j], t.second[j]);
                let want = w.contains(c) as u8 + w.contains(d) as u8
                    - (c == d && w.contains(c)) as u8;
                assert_eq!(t.damage[k][j], want);
            }
        }
    }

    #[test]
    fn one_heavy_couple_leaves_simple_pairs_avoiding_it() {
        // a hand-built table: couple 0 heavy on path 0, slack 2 everywhere
        let t = CoupleTable {
            u: 0,
            v: 1,
            first: [0, 1, 2, 3],
            second: [4, 5, 6, 7],
            paths: vec![vec![2], vec![3], vec![4]],
            profiles: vec![],
            damage: vec![[2, 0, 0, 0], [0; 4], [0; 4]],
            slack: vec![2, 2, 2],
        };
        assert_eq!(find_simple_solution(&t, &t.slack), Some((0, 1)));
        let tight = [1, 2, 2];
        assert_eq!(find_simple_solution(&t, &tight), Some((1, 2)));
    }

    #[test]
    fn fully_blocked_table_has_no_simple_solution() {
        // situation (a): couple j heavy on path j, the rest arranged so each
        // path blocks its two pairs
        let t = CoupleTable {
            u: 0,
            v: 1,
            first: [0, 1, 2, 3],
            second: [4, 5, 6, 7],
            paths: vec![vec![2], vec![3], vec![4]],
            profiles: vec![],
            damage: vec![[2, 1, 0, 1], [0, 2, 1, 1], [1, 0, 2, 1]],
            slack: vec![2, 2, 2],
        };
        assert_eq!(find_simple_solution(&t, &t.slack), None);
        let blocked: Vec<_> = (0..3).flat_map(|k| t.blocked_by(k)).collect();
        assert_eq!(blocked.len(), 6);
    }

    #[test]
    fn small_thetas_are_coloured() {
        for lens in [[2, 2, 2], [2, 4, 4], [2, 2, 4]] {
            let g = theta(&lens);
            let l = ListAssignment::four_two(1, vec![cs([0, 1, 2, 3]); g.n()]).unwrap();
            let (phi, _) = solve_theta_22r2s(&g, &l).unwrap();
            assert_eq!(is_proper_colouring(&g, &l, &phi), Ok(true));
        }
    }

    #[test]
    fn wrong_shape_is_rejected() {
        let g = theta(&[3, 3, 3]);
        let l = ListAssignment::four_two(1, vec![cs([0, 1, 2, 3]); g.n()]).unwrap();
        assert!(matches!(solve_theta_22r2s(&g, &l), Err(SolverError::Shape(_))));
    }
}
