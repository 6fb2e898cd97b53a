//! Backtracking oracle for `(L:t)`-colourability.
//!
//! Vertices are visited in a fixed order: highest degree first, then always
//! a vertex with the most already-placed neighbours (ties by degree, then id).
//! Tuples are tried in lexicographic order, and after each choice every
//! later neighbour must keep at least `t` available colours.

use alloc::vec::Vec;

use super::{Budget, Exhausted};
use crate::colour::ColourSet;
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::lists::{ListAssignment, TupleColouring};

/// The vertex order used by the oracle.
pub fn oracle_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    g.neighbours(v).intersection(placed).len(),
                    g.degree(v),
                    core::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex remains");
        placed.insert(next);
        order.push(next);
    }
    order
}

/// A `b·m`-tuple colouring from `lists`, or `None` if none exists.
///
/// Panics if `lists` does not cover exactly the vertices of `g`.
pub fn l_colourable(g: &Graph, lists: &ListAssignment) -> Option<TupleColouring> {
    assert_eq!(lists.len(), g.n(), "one list per vertex");
    l_colourable_with(g, lists.lists(), lists.tuple_size(), &Budget::unlimited())
        .expect("unlimited budget")
        .map(TupleColouring)
}

/// Raw form of [`l_colourable`] with tuple size `t` and a shared budget.
pub fn l_colourable_with(
    g: &Graph,
    lists: &[ColourSet],
    t: usize,
    budget: &Budget,
) -> Result<Option<Vec<ColourSet>>, Exhausted> {
    debug_assert_eq!(lists.len(), g.n());
    let n = g.n();
    if lists.iter().any(|l| l.len() < t) {
        return Ok(None);
    }
    let order = oracle_order(g);
    let mut later = Vec::with_capacity(n);
    let mut remaining = g.vertices();
    for &v in &order {
        remaining.remove(v);
        later.push(g.neighbours(v).intersection(remaining));
    }
    let mut avail = [ColourSet::EMPTY; MAX_VERTICES];
    avail[..n].copy_from_slice(lists);
    let mut s = Search {
        order: &order,
        later: &later,
        t,
        budget,
        avail,
        chosen: [ColourSet::EMPTY; MAX_VERTICES],
    };
    Ok(if s.dfs(0)? {
        Some(s.chosen[..n].to_vec())
    } else {
        None
    })
}

struct Search<'a> {
    order: &'a [usize],
    later: &'a [VertexSet],
    t: usize,
    budget: &'a Budget,
    avail: [ColourSet; MAX_VERTICES],
    chosen: [ColourSet; MAX_VERTICES],
}

impl Search<'_> {
    fn dfs(&mut self, k: usize) -> Result<bool, Exhausted> {
        if k == self.order.len() {
            return Ok(true);
        }
        self.budget.node()?;
        let v = self.order[k];
        let later = self.later[k];
        for s in self.avail[v].subsets(self.t) {
            if later.iter().any(|w| (self.avail[w] - s).len() < self.t) {
                continue;
            }
            let saved = self.avail;
            for w in later.iter() {
                self.avail[w] -= s;
            }
            self.chosen[v] = s;
            if self.dfs(k + 1)? {
                return Ok(true);
            }
            self.avail = saved;
        }
        Ok(false)
    }
}
