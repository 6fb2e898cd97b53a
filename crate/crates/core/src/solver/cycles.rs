//! The `(4:2)` colouring procedure for two even cycles joined by a path (or
//! sharing a vertex).
//!
//! Write the graph as `P = C - u`, the joining path `Q` from `u` to `v`, and
//! `R = D - v`. Each odd path `P`, `R` rejects at most two 2-subsets of the
//! list at its attachment vertex (its bad sets), while `Q` carries an
//! injection `h` from 2-subsets of `L(u)` to 2-subsets of `L(v)` along which
//! precolourings extend. Six choices against at most four rejections leave
//! some `p` with `p` good for `P` and `h(p)` good for `R`.

use alloc::format;
use alloc::vec::Vec;

use crate::colour::ColourSet;
use crate::error::SolverError;
use crate::graph::Graph;
use crate::lists::{ListAssignment, TupleColouring};
use crate::path::{colour_path, damage, profile, restrict, PathList};
use crate::structure::as_two_cycles;

/// The 2-subsets `p ⊆ W` for which deleting `p` from both ends of `path`
/// costs more than its slack.
pub fn bad_w_sets(path: &PathList, w: ColourSet) -> Result<Vec<ColourSet>, SolverError> {
    if path.m() != 1 || w.len() != 4 {
        return Err(SolverError::Unsupported(
            "bad sets are defined for m = 1 and |W| = 4".into(),
        ));
    }
    let prof = profile(path)?;
    Ok(w.subsets(2)
        .filter(|&p| damage(&prof, p, p) as isize > prof.slack(1))
        .collect())
}

/// An injection from the 2-subsets of `L(u)` to the 2-subsets of `L(v)`,
/// together with the colouring of the whole path that realises each entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectionTable {
    /// The six 2-subsets of `L(u)`, lexicographic.
    pub domain: Vec<ColourSet>,
    /// `h(domain[i])`.
    pub image: Vec<ColourSet>,
    /// `chains[i][k]` is the colour set of the `k`-th path vertex when
    /// `u` receives `domain[i]`.
    pub chains: Vec<Vec<ColourSet>>,
}

impl InjectionTable {
    pub fn apply(&self, p: ColourSet) -> Option<ColourSet> {
        self.domain.iter().position(|&d| d == p).map(|i| self.image[i])
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.image.clone();
        seen.sort_by(|a, b| a.lex_cmp(*b));
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

/// Builds `h` for the path whose lists are `lists` (ordered `u .. v`, all of
/// size 4) as a composition of one disjointness matching per edge. A single
/// vertex gives the identity.
pub fn path_injection(lists: &[ColourSet]) -> Result<InjectionTable, SolverError> {
    if lists.is_empty() || lists.iter().any(|l| l.len() != 4) {
        return Err(SolverError::Unsupported(
            "path injections need non-empty paths with 4-lists".into(),
        ));
    }
    let domain: Vec<ColourSet> = lists[0].subsets(2).collect();
    let mut chains: Vec<Vec<ColourSet>> = domain.iter().map(|&p| alloc::vec![p]).collect();
    for w in lists.windows(2) {
        let step = edge_matching(w[0], w[1]).ok_or_else(|| {
            SolverError::ProcedureFailed(format!("no disjointness matching {} -> {}", w[0], w[1]))
        })?;
        for chain in &mut chains {
            let last = *chain.last().expect("chains are non-empty");
            let (_, to) = step.iter().find(|(from, _)| *from == last).expect("total");
            chain.push(*to);
        }
    }
    let image = chains.iter().map(|c| *c.last().expect("non-empty")).collect();
    Ok(InjectionTable {
        domain,
        image,
        chains,
    })
}

/// A bijection between the 2-subsets of `a` and of `b` with `p ∩ h(p) = ∅`,
/// found by augmenting paths in lexicographic order.
fn edge_matching(a: ColourSet, b: ColourSet) -> Option<Vec<(ColourSet, ColourSet)>> {
    let left: Vec<ColourSet> = a.subsets(2).collect();
    let right: Vec<ColourSet> = b.subsets(2).collect();
    let mut owner: Vec<Option<usize>> = alloc::vec![None; right.len()];
    fn augment(
        i: usize,
        left: &[ColourSet],
        right: &[ColourSet],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for j in 0..right.len() {
            if seen[j] || !left[i].is_disjoint(right[j]) {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none_or(|k| augment(k, left, right, owner, seen)) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }
    for i in 0..left.len() {
        let mut seen = alloc::vec![false; right.len()];
        if !augment(i, &left, &right, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut out = Vec::with_capacity(left.len());
    for (j, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            out.push((left[*i], right[j]));
        }
    }
    out.sort_by(|x, y| x.0.lex_cmp(y.0));
    Some(out)
}

/// Colours two even cycles joined by a path (possibly a single shared
/// vertex) from any `(4:2)` lists.
pub fn solve_two_cycles(g: &Graph, lists: &ListAssignment) -> Result<TupleColouring, SolverError> {
    if lists.m() != 1 || lists.a() != 4 || lists.b() != 2 || lists.len() != g.n() {
        return Err(SolverError::Unsupported("two-cycle procedure needs (4:2) lists".into()));
    }
    let shape = as_two_cycles(g)
        .ok_or_else(|| SolverError::Shape("not two cycles joined by a path".into()))?;
    let (c1, c2) = shape.cycle_lengths();
    if c1 % 2 != 0 || c2 % 2 != 0 {
        return Err(SolverError::Shape(format!(
            "cycles of lengths {c1} and {c2} are not both even"
        )));
    }
    let path_of = |vs: &[usize]| PathList::new(1, vs.iter().map(|&x| lists.list(x)).collect());
    let p_path = path_of(&shape.first)?;
    let r_path = path_of(&shape.second)?;
    let bad_p = bad_w_sets(&p_path, lists.list(shape.u))?;
    let bad_r = bad_w_sets(&r_path, lists.list(shape.v))?;
    let q_lists: Vec<ColourSet> = shape.joint.iter().map(|&x| lists.list(x)).collect();
    let h = path_injection(&q_lists)?;

    let i = (0..h.domain.len())
        .find(|&i| !bad_p.contains(&h.domain[i]) && !bad_r.contains(&h.image[i]))
        .ok_or_else(|| {
            SolverError::ProcedureFailed(format!(
                "every 2-subset is bad: P rejects {bad_p:?}, R rejects {bad_r:?}"
            ))
        })?;
    let (p, hp) = (h.domain[i], h.image[i]);
    let mut phi = alloc::vec![ColourSet::EMPTY; g.n()];
    for (k, &x) in shape.joint.iter().enumerate() {
        phi[x] = h.chains[i][k];
    }
    for (vs, path, end) in [(&shape.first, &p_path, p), (&shape.second, &r_path, hp)] {
        let coloured = colour_path(&restrict(path, end, end)).ok_or_else(|| {
            SolverError::Inconsistent(format!("good set {end} does not extend along {vs:?}"))
        })?;
        for (k, &x) in vs.iter().enumerate() {
            phi[x] = coloured.get(k);
        }
    }
    Ok(TupleColouring(phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};
    use crate::lists::is_proper_colouring;
    use alloc::vec;

    fn cs<const N: usize>(c: [usize; N]) -> ColourSet {
        ColourSet::from_colours(c)
    }

    #[test]
    fn single_vertex_with_its_own_list_has_no_bad_sets() {
        let w = cs([0, 1, 2, 3]);
        let p = PathList::new(1, vec![w]).unwrap();
        assert!(bad_w_sets(&p, w).unwrap().is_empty());
    }

    #[test]
    fn foreign_w_has_no_bad_sets() {
        let p = PathList::new(1, vec![cs([0, 1, 2, 3]); 3]).unwrap();
        assert!(bad_w_sets(&p, cs([4, 5, 6, 7])).unwrap().is_empty());
    }

    #[test]
    fn engineered_path_has_exactly_the_predicted_bad_sets() {
        // S = 8 = 2n + 2, X̂1 = {1,2}, X̂3 = {7,8}: with W = {1,2,7,8}... use
        // W sharing one hatted colour on each side
        let p = PathList::new(1, vec![cs([1, 2, 3, 4]), cs([3, 4, 5, 6]), cs([5, 6, 1, 8])])
            .unwrap();
        let w = cs([1, 3, 8, 9]);
        let bad = bad_w_sets(&p, w).unwrap();
        let prof = profile(&p).unwrap();
        let brute: Vec<ColourSet> = w
            .subsets(2)
            .filter(|&s| {
                !crate::path::path_colourable(&restrict(&p, s, s))
            })
            .collect();
        assert_eq!(bad, brute);
        assert!(bad.len() <= 2);
        assert!(prof.s_value >= 8);
    }

    #[test]
    fn identity_on_a_single_vertex() {
        let w = cs([0, 1, 2, 3]);
        let h = path_injection(&[w]).unwrap();
        assert_eq!(h.domain, h.image);
    }

    #[test]
    fn complement_on_an_edge_with_equal_lists() {
        let w = cs([0, 1, 2, 3]);
        let h = path_injection(&[w, w]).unwrap();
        assert_eq!(h.apply(cs([0, 1])), Some(cs([2, 3])));
        assert!(h.domain.iter().zip(&h.image).all(|(p, q)| p.is_disjoint(*q)));
        assert!(h.is_injective());
    }

    #[test]
    fn three_vertex_injection_realises_every_pair() {
        let lists = [cs([0, 1, 2, 3]), cs([1, 2, 4, 5]), cs([0, 4, 5, 6])];
        let h = path_injection(&lists).unwrap();
        assert!(h.is_injective());
        for chain in &h.chains {
            for k in 0..3 {
                assert!(chain[k].is_subset(lists[k]));
                if k > 0 {
                    assert!(chain[k].is_disjoint(chain[k - 1]));
                }
            }
        }
    }

    #[test]
    fn two_c4_sharing_a_vertex_with_equal_lists() {
        let g = generate(&FamilySpec::TwoCycles {
            first: 4,
            path_vertices: 1,
            second: 4,
        })
        .unwrap();
        let l = ListAssignment::four_two(1, vec![cs([0, 1, 2, 3]); g.n()]).unwrap();
        let phi = solve_two_cycles(&g, &l).unwrap();
        assert_eq!(is_proper_colouring(&g, &l, &phi), Ok(true));
    }

    #[test]
    fn odd_cycles_are_rejected() {
        let g = generate(&FamilySpec::TwoCycles {
            first: 3,
            path_vertices: 2,
            second: 4,
        })
        .unwrap();
        let l = ListAssignment::four_two(1, vec![cs([0, 1, 2, 3]); g.n()]).unwrap();
        assert!(matches!(solve_two_cycles(&g, &l), Err(SolverError::Shape(_))));
    }
}
