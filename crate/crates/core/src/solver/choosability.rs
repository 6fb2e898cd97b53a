//! `(a:b)`-choosability by canonical enumeration of list assignments.
//!
//! Vertices whose degree `d` satisfies `d·b <= a - b` can always be coloured
//! last, so they are peeled off first; the search runs on each connected
//! component of what remains. Lists are enumerated vertex by vertex in the
//! oracle's order, and every newly introduced colour gets the smallest
//! unused id, which removes colour-renaming symmetry. Options are visited in
//! lexicographic order, so the first bad assignment found is the
//! lexicographically smallest one. As soon as the lists chosen so far are
//! already uncolourable on the vertices they cover, the remaining vertices
//! get their first option and the search stops.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::oracle::{l_colourable_with, oracle_order};
use super::{Budget, Exhausted, SearchConfig, Verdict};
use crate::colour::{ColourSet, MAX_UNIVERSE};
use crate::error::SolverError;
use crate::graph::{Graph, VertexSet};
use crate::lists::ListAssignment;

/// The vertices left after repeatedly deleting vertices `v` with
/// `deg(v)·b <= a - b`.
pub fn peel_order(g: &Graph, a: usize, b: usize) -> VertexSet {
    let mut alive = g.vertices();
    loop {
        let removable = alive
            .iter()
            .find(|&v| g.neighbours(v).intersection(alive).len() * b <= a - b);
        match removable {
            Some(v) => alive.remove(v),
            None => return alive,
        }
    }
}

/// The canonical `s`-subsets for a vertex when colours `0..used` are taken:
/// any old colours plus a prefix of the unused ones, never reaching `cap`.
pub fn canonical_options(used: usize, s: usize, cap: usize) -> Vec<ColourSet> {
    let top = (used + s).min(cap);
    ColourSet::range(0, top)
        .subsets(s)
        .filter(|o| {
            let new = *o - ColourSet::range(0, used);
            new == ColourSet::range(used, used + new.len())
        })
        .collect()
}

/// Enumeration state for one connected piece of the peeled graph.
#[derive(Clone, Debug)]
pub struct ChoosabilitySearch {
    graph: Graph,
    piece: Graph,
    /// Vertex of `graph` for each vertex of `piece`.
    ids: Vec<usize>,
    /// Vertices of `piece` in enumeration order.
    order: Vec<usize>,
    a: usize,
    b: usize,
    cap: usize,
}

impl ChoosabilitySearch {
    /// One search per connected component left after peeling.
    pub fn pieces(
        g: &Graph,
        a: usize,
        b: usize,
        cfg: &SearchConfig,
    ) -> Result<Vec<ChoosabilitySearch>, SolverError> {
        if b == 0 || b > a || a > MAX_UNIVERSE {
            return Err(SolverError::Unsupported(alloc::format!(
                "need 0 < b <= a <= 64, got a={a}, b={b}"
            )));
        }
        let cap = cfg
            .universe_cap
            .unwrap_or(a * g.n().max(1))
            .min(MAX_UNIVERSE);
        if cap < a {
            return Err(SolverError::Unsupported(
                "universe cap smaller than the list size".to_string(),
            ));
        }
        let kept = peel_order(g, a, b);
        let mut out = Vec::new();
        for comp in g.components_within(kept) {
            let (piece, ids) = g.induced(comp);
            let order = oracle_order(&piece);
            out.push(ChoosabilitySearch {
                graph: g.clone(),
                piece,
                ids,
                order,
                a,
                b,
                cap,
            });
        }
        Ok(out)
    }

    pub fn piece(&self) -> &Graph {
        &self.piece
    }

    pub fn depth(&self) -> usize {
        self.order.len()
    }

    /// All canonical list sequences for the first `depth` vertices of the
    /// enumeration order, in search order.
    pub fn prefixes(&self, depth: usize) -> Vec<Vec<ColourSet>> {
        let depth = depth.min(self.order.len());
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(depth);
        self.collect_prefixes(depth, 0, &mut cur, &mut out);
        out
    }

    fn collect_prefixes(
        &self,
        depth: usize,
        used: usize,
        cur: &mut Vec<ColourSet>,
        out: &mut Vec<Vec<ColourSet>>,
    ) {
        if cur.len() == depth {
            out.push(cur.clone());
            return;
        }
        for o in canonical_options(used, self.a, self.cap) {
            cur.push(o);
            self.collect_prefixes(depth, used.max(o.span()), cur, out);
            cur.pop();
        }
    }

    /// Searches every canonical completion of `prefix` (lists for the first
    /// vertices of the enumeration order). Returns the first bad assignment
    /// as lists indexed by vertices of the piece.
    pub fn search_from(
        &self,
        prefix: &[ColourSet],
        budget: &Budget,
    ) -> Result<Option<Vec<ColourSet>>, Exhausted> {
        let mut lists = [ColourSet::EMPTY; crate::graph::MAX_VERTICES];
        let mut used = 0;
        for (k, &l) in prefix.iter().enumerate() {
            lists[self.order[k]] = l;
            used = used.max(l.span());
        }
        let mut placed = VertexSet::EMPTY;
        for &v in &self.order[..prefix.len()] {
            placed.insert(v);
        }
        if self.dfs(prefix.len(), used, placed, &mut lists, budget)? {
            Ok(Some(lists[..self.piece.n()].to_vec()))
        } else {
            Ok(None)
        }
    }

    /// `true` when `lists` has been completed to a bad assignment.
    fn dfs(
        &self,
        k: usize,
        used: usize,
        placed: VertexSet,
        lists: &mut [ColourSet; crate::graph::MAX_VERTICES],
        budget: &Budget,
    ) -> Result<bool, Exhausted> {
        if k >= 2 || k == self.order.len() {
            budget.assignment()?;
            if !self.colourable_on(placed, lists, budget)? {
                self.complete_with_first_options(k, used, lists);
                return Ok(true);
            }
        }
        if k == self.order.len() {
            return Ok(false);
        }
        let v = self.order[k];
        let mut next = placed;
        next.insert(v);
        for o in canonical_options(used, self.a, self.cap) {
            lists[v] = o;
            if self.dfs(k + 1, used.max(o.span()), next, lists, budget)? {
                return Ok(true);
            }
        }
        lists[v] = ColourSet::EMPTY;
        Ok(false)
    }

    fn colourable_on(
        &self,
        placed: VertexSet,
        lists: &[ColourSet; crate::graph::MAX_VERTICES],
        budget: &Budget,
    ) -> Result<bool, Exhausted> {
        let (sub, ids) = self.piece.induced(placed);
        let sub_lists: Vec<ColourSet> = ids.iter().map(|&v| lists[v]).collect();
        Ok(l_colourable_with(&sub, &sub_lists, self.b, budget)?.is_some())
    }

    fn complete_with_first_options(
        &self,
        k: usize,
        mut used: usize,
        lists: &mut [ColourSet; crate::graph::MAX_VERTICES],
    ) {
        for &v in &self.order[k..] {
            let first = canonical_options(used, self.a, self.cap)[0];
            lists[v] = first;
            used = used.max(first.span());
        }
    }

    /// Extends a bad assignment on the piece to the whole graph; the other
    /// vertices get `{0, .., a-1}`.
    pub fn witness(&self, piece_lists: &[ColourSet]) -> Result<ListAssignment, SolverError> {
        let mut lists = alloc::vec![ColourSet::range(0, self.a); self.graph.n()];
        for (i, &v) in self.ids.iter().enumerate() {
            lists[v] = piece_lists[i];
        }
        let universe = lists.iter().map(|l| l.span()).max().unwrap_or(0);
        Ok(ListAssignment::new(universe, self.a, self.b, 1, lists)?)
    }
}

/// Decides `(a:b)`-choosability of `g` within the canonical universe bound.
pub fn is_ab_choosable(
    g: &Graph,
    a: usize,
    b: usize,
    cfg: &SearchConfig,
) -> Result<Verdict, SolverError> {
    let budget = Budget::new(cfg);
    for piece in ChoosabilitySearch::pieces(g, a, b, cfg)? {
        let found = piece
            .search_from(&[], &budget)
            .map_err(|_| SolverError::Inconclusive(budget.stats()))?;
        if let Some(bad) = found {
            let witness = piece.witness(&bad)?;
            return confirm_witness(g, witness, &budget);
        }
    }
    Ok(Verdict::choosable(budget.stats()))
}

/// Re-checks a bad assignment with an unlimited oracle before reporting it.
pub(crate) fn confirm_witness(
    g: &Graph,
    witness: ListAssignment,
    budget: &Budget,
) -> Result<Verdict, SolverError> {
    if super::oracle::l_colourable(g, &witness).is_some() {
        return Err(SolverError::Inconsistent(
            "reported bad assignment is colourable".to_string(),
        ));
    }
    Ok(Verdict::not_choosable(witness, budget.stats()))
}

/// Convenience wrapper kept for symmetry with the parallel driver.
pub fn search_from(
    piece: &ChoosabilitySearch,
    prefix: &[ColourSet],
    budget: &Budget,
) -> Result<Option<Vec<ColourSet>>, Exhausted> {
    piece.search_from(prefix, budget)
}
