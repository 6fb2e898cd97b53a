//! List assignments and tuple colourings.

use alloc::vec::Vec;

use crate::colour::{ColourSet, MAX_UNIVERSE};
use crate::error::ListError;
use crate::graph::Graph;

/// Per-vertex colour lists for an `(a·m : b·m)` colouring problem.
///
/// Lists normally all have size `a·m`; [`ListAssignment::relaxed`] drops that
/// check for operations that restrict lists.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ListAssignment {
    universe: usize,
    a: usize,
    b: usize,
    m: usize,
    lists: Vec<ColourSet>,
}

impl ListAssignment {
    pub fn new(
        universe: usize,
        a: usize,
        b: usize,
        m: usize,
        lists: Vec<ColourSet>,
    ) -> Result<Self, ListError> {
        let la = Self::relaxed(universe, a, b, m, lists)?;
        let expected = la.list_size();
        for (vertex, l) in la.lists.iter().enumerate() {
            if l.len() != expected {
                return Err(ListError::WrongListSize {
                    vertex,
                    expected,
                    found: l.len(),
                });
            }
        }
        Ok(la)
    }

    /// Like [`ListAssignment::new`] but list sizes are unconstrained.
    pub fn relaxed(
        universe: usize,
        a: usize,
        b: usize,
        m: usize,
        lists: Vec<ColourSet>,
    ) -> Result<Self, ListError> {
        if universe > MAX_UNIVERSE {
            return Err(ListError::UniverseTooLarge { universe });
        }
        if a == 0 || b == 0 || m == 0 || b > a {
            return Err(ListError::BadParameters { a, b, m });
        }
        let all = ColourSet::universe(universe);
        for (vertex, l) in lists.iter().enumerate() {
            if !l.is_subset(all) {
                return Err(ListError::OutsideUniverse { vertex });
            }
        }
        Ok(ListAssignment {
            universe,
            a,
            b,
            m,
            lists,
        })
    }

    /// `(4m : 2m)` lists with the universe taken as the smallest that fits.
    pub fn four_two(m: usize, lists: Vec<ColourSet>) -> Result<Self, ListError> {
        let universe = lists.iter().map(|l| l.span()).max().unwrap_or(0);
        Self::new(universe, 4, 2, m, lists)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `a·m`
    pub fn list_size(&self) -> usize {
        self.a * self.m
    }

    /// `b·m`
    pub fn tuple_size(&self) -> usize {
        self.b * self.m
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> ColourSet {
        self.lists[v]
    }

    pub fn lists(&self) -> &[ColourSet] {
        &self.lists
    }

    pub fn into_lists(self) -> Vec<ColourSet> {
        self.lists
    }

    /// Union of every list.
    pub fn palette(&self) -> ColourSet {
        self.lists.iter().fold(ColourSet::EMPTY, |acc, &l| acc | l)
    }

    /// Same parameters, different lists; list sizes are not re-checked.
    pub fn with_lists(&self, lists: Vec<ColourSet>) -> Result<Self, ListError> {
        let universe = self
            .universe
            .max(lists.iter().map(|l| l.span()).max().unwrap_or(0));
        Self::relaxed(universe, self.a, self.b, self.m, lists)
    }
}

/// One colour set per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TupleColouring(pub Vec<ColourSet>);

impl TupleColouring {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> ColourSet {
        self.0[v]
    }

    pub fn sets(&self) -> &[ColourSet] {
        &self.0
    }
}

/// Checks `φ(v) ⊆ L(v)`, `|φ(v)| = b·m` and disjointness across every edge.
pub fn is_proper_colouring(
    g: &Graph,
    lists: &ListAssignment,
    phi: &TupleColouring,
) -> Result<bool, ListError> {
    if lists.len() != g.n() {
        return Err(ListError::LengthMismatch {
            expected: g.n(),
            found: lists.len(),
        });
    }
    if phi.len() != g.n() {
        return Err(ListError::LengthMismatch {
            expected: g.n(),
            found: phi.len(),
        });
    }
    Ok(satisfies(g, lists.lists(), lists.tuple_size(), phi.sets()))
}

/// The same check on raw slices.
pub(crate) fn satisfies(g: &Graph, lists: &[ColourSet], tuple: usize, sets: &[ColourSet]) -> bool {
    for v in 0..g.n() {
        if sets[v].len() != tuple || !sets[v].is_subset(lists[v]) {
            return false;
        }
    }
    g.edges()
        .into_iter()
        .all(|(u, v)| sets[u].is_disjoint(sets[v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cs<const N: usize>(c: [usize; N]) -> ColourSet {
        ColourSet::from_colours(c)
    }

    #[test]
    fn c4_alternating_halves_is_proper() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let l = ListAssignment::new(4, 4, 2, 1, vec![cs([0, 1, 2, 3]); 4]).unwrap();
        let phi = TupleColouring(vec![cs([0, 1]), cs([2, 3]), cs([0, 1]), cs([2, 3])]);
        assert_eq!(is_proper_colouring(&g, &l, &phi), Ok(true));
    }

    #[test]
    fn shared_colour_on_an_edge_is_rejected() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let l = ListAssignment::new(4, 4, 2, 1, vec![cs([0, 1, 2, 3]); 2]).unwrap();
        let phi = TupleColouring(vec![cs([0, 1]), cs([0, 1])]);
        assert_eq!(is_proper_colouring(&g, &l, &phi), Ok(false));
    }

    #[test]
    fn wrong_size_or_foreign_colour_is_rejected() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let l = ListAssignment::new(6, 4, 2, 1, vec![cs([0, 1, 2, 3]); 2]).unwrap();
        let short = TupleColouring(vec![cs([0]), cs([2, 3])]);
        assert_eq!(is_proper_colouring(&g, &l, &short), Ok(false));
        let foreign = TupleColouring(vec![cs([0, 5]), cs([2, 3])]);
        assert_eq!(is_proper_colouring(&g, &l, &foreign), Ok(false));
    }

    #[test]
    fn missing_vertex_is_a_domain_error() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let l = ListAssignment::new(4, 4, 2, 1, vec![cs([0, 1, 2, 3]); 2]).unwrap();
        let phi = TupleColouring(vec![cs([0, 1])]);
        assert_eq!(
            is_proper_colouring(&g, &l, &phi),
            Err(ListError::LengthMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn list_size_is_enforced() {
        let err = ListAssignment::new(4, 4, 2, 1, vec![cs([0, 1, 2])]).unwrap_err();
        assert!(matches!(err, ListError::WrongListSize { vertex: 0, .. }));
        assert!(ListAssignment::new(4, 4, 2, 1, vec![cs([0, 1, 2, 5])]).is_err());
        assert!(ListAssignment::new(70, 4, 2, 1, vec![]).is_err());
        assert!(ListAssignment::relaxed(4, 4, 2, 1, vec![cs([0, 1, 2])]).is_ok());
    }
}
