//! Difference sequences on list-assigned paths.
//!
//! For lists `L(v1), ..., L(vn)` set `X1 = L(v1)` and `Xi = L(vi) - X(i-1)`.
//! The sum `S = Σ|Xi|` decides `(L:2m)`-colourability of the path
//! (`S >= 2mn`), and for odd `n` the drop in `S` caused by deleting colours
//! from the end lists depends only on the [`PathProfile`].

use alloc::vec::Vec;

use crate::colour::{ColourSet, MAX_UNIVERSE};
use crate::error::PathError;
use crate::lists::TupleColouring;

/// Lists along a path `v1 .. vn` with multiplicity parameter `m`.
///
/// Internal lists have exactly `4m` colours. End lists are unconstrained so
/// that restricted paths can be represented; the colouring criterion needs
/// them to keep at least `2m` colours.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathList {
    m: usize,
    lists: Vec<ColourSet>,
}

impl PathList {
    pub fn new(m: usize, lists: Vec<ColourSet>) -> Result<Self, PathError> {
        if lists.is_empty() {
            return Err(PathError::Empty);
        }
        let n = lists.len();
        for (index, l) in lists.iter().enumerate() {
            if index > 0 && index + 1 < n && l.len() != 4 * m {
                return Err(PathError::WrongListSize {
                    index,
                    expected: 4 * m,
                    found: l.len(),
                });
            }
        }
        Ok(PathList { m, lists })
    }

    /// Convenience constructor from colour ids.
    pub fn from_colours<I, J>(m: usize, lists: I) -> Result<Self, PathError>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        let mut out = Vec::new();
        for l in lists {
            out.push(ColourSet::try_from_colours(l).ok_or(PathError::List(
                crate::error::ListError::UniverseTooLarge {
                    universe: MAX_UNIVERSE + 1,
                },
            ))?);
        }
        Self::new(m, out)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn lists(&self) -> &[ColourSet] {
        &self.lists
    }

    pub fn list(&self, i: usize) -> ColourSet {
        self.lists[i]
    }

    pub fn first(&self) -> ColourSet {
        self.lists[0]
    }

    pub fn last(&self) -> ColourSet {
        self.lists[self.lists.len() - 1]
    }

    /// The same lists walked from the other end.
    pub fn reversed(&self) -> PathList {
        let mut lists = self.lists.clone();
        lists.reverse();
        PathList { m: self.m, lists }
    }

    fn require_profile_shape(&self) -> Result<(), PathError> {
        let n = self.len();
        if n % 2 == 0 {
            return Err(PathError::EvenPath { n });
        }
        for (index, l) in self.lists.iter().enumerate() {
            if l.len() != 4 * self.m {
                return Err(PathError::WrongListSize {
                    index,
                    expected: 4 * self.m,
                    found: l.len(),
                });
            }
        }
        Ok(())
    }
}

/// The sets `X1 .. Xn` and their total size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSequence {
    pub sets: Vec<ColourSet>,
    pub s_value: usize,
}

pub fn x_sequence(path: &PathList) -> XSequence {
    let mut sets = Vec::with_capacity(path.len());
    let mut prev = ColourSet::EMPTY;
    for &l in path.lists() {
        let x = l - prev;
        sets.push(x);
        prev = x;
    }
    let s_value = sets.iter().map(|x| x.len()).sum();
    XSequence { sets, s_value }
}

/// Whether the path admits a `2m`-tuple colouring from its lists.
pub fn path_colourable(path: &PathList) -> bool {
    let t = 2 * path.m();
    if path.first().len() < t || path.last().len() < t {
        return false;
    }
    x_sequence(path).s_value >= t * path.len()
}

/// Builds a colouring backwards from `vn`, choosing inside `Xn` when it is
/// large enough and otherwise a superset of it, smallest colours first.
pub fn colour_path(path: &PathList) -> Option<TupleColouring> {
    if !path_colourable(path) {
        return None;
    }
    let t = 2 * path.m();
    let n = path.len();
    let xs = x_sequence(path).sets;
    let mut out = alloc::vec![ColourSet::EMPTY; n];
    let mut taken_next = ColourSet::EMPTY;
    for k in (0..n).rev() {
        let current = path.list(k) - taken_next;
        let before = if k == 0 { ColourSet::EMPTY } else { xs[k - 1] };
        let x = current - before;
        let chosen = if x.len() >= t {
            x.smallest(t)
        } else {
            x | (current - x).smallest(t - x.len())
        };
        if chosen.len() != t {
            return None;
        }
        out[k] = chosen;
        taken_next = chosen;
    }
    Some(TupleColouring(out))
}

/// The common core `A` and the end classes `X̂1`, `X̂n` of an odd path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PathProfile {
    pub common: ColourSet,
    pub hat_first: ColourSet,
    pub hat_last: ColourSet,
    pub s_value: usize,
    pub n: usize,
}

impl PathProfile {
    /// `S - 2mn` for the given `m`: how much damage the path tolerates.
    pub fn slack(&self, m: usize) -> isize {
        self.s_value as isize - (2 * m * self.n) as isize
    }
}

/// Requires odd `n` and all lists of size `4m`.
pub fn profile(path: &PathList) -> Result<PathProfile, PathError> {
    path.require_profile_shape()?;
    let lists = path.lists();
    let n = lists.len();
    let common = lists.iter().fold(lists[0], |acc, &l| acc & l);
    let mut hat_first = ColourSet::EMPTY;
    for c in (lists[0] - common).iter() {
        // first 1-based position whose list misses c
        let f = lists.iter().position(|l| !l.contains(c)).map(|i| i + 1);
        if let Some(f) = f {
            if f % 2 == 0 {
                hat_first.insert(c);
            }
        }
    }
    let xs = x_sequence(path);
    Ok(PathProfile {
        common,
        hat_first,
        hat_last: xs.sets[n - 1] - common,
        s_value: xs.s_value,
        n,
    })
}

/// Deletes `p` from the first list and `q` from the last.
pub fn restrict(path: &PathList, p: ColourSet, q: ColourSet) -> PathList {
    let mut lists = path.lists.clone();
    let n = lists.len();
    lists[0] -= p;
    lists[n - 1] -= q;
    PathList { m: path.m, lists }
}

/// Drop in `S` caused by deleting `p` from the first list and `q` from the last.
pub fn damage(prof: &PathProfile, p: ColourSet, q: ColourSet) -> usize {
    let a = prof.common;
    ((a | prof.hat_first) & p).len() + ((a | prof.hat_last) & q).len() - (a & p & q).len()
}

/// The three parts of `S = (2nm - 2m) + Σ_{k even, k<n} |X(k-1) - L(vk)| + |Xn|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SDecomposition {
    pub base: usize,
    pub gains: Vec<usize>,
    pub tail: usize,
}

impl SDecomposition {
    pub fn total(&self) -> usize {
        self.base + self.gains.iter().sum::<usize>() + self.tail
    }
}

pub fn s_decomposition(path: &PathList) -> Result<SDecomposition, PathError> {
    path.require_profile_shape()?;
    let n = path.len();
    let m = path.m();
    let xs = x_sequence(path).sets;
    // 1-based even k below n: X(k-1) sits at index k-2, L(vk) at index k-1
    let gains = (2..n)
        .step_by(2)
        .map(|k| (xs[k - 2] - path.list(k - 1)).len())
        .collect();
    Ok(SDecomposition {
        base: 2 * n * m - 2 * m,
        gains,
        tail: xs[n - 1].len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs<const N: usize>(c: [usize; N]) -> ColourSet {
        ColourSet::from_colours(c)
    }

    fn staircase() -> PathList {
        PathList::new(1, alloc::vec![cs([1, 2, 3, 4]), cs([3, 4, 5, 6]), cs([5, 6, 7, 8])]).unwrap()
    }

    fn constant() -> PathList {
        PathList::new(1, alloc::vec![cs([1, 2, 3, 4]); 3]).unwrap()
    }

    #[test]
    fn x_sequence_examples() {
        let xs = x_sequence(&staircase());
        assert_eq!(xs.sets, [cs([1, 2, 3, 4]), cs([5, 6]), cs([7, 8])]);
        assert_eq!(xs.s_value, 8);

        let xs = x_sequence(&constant());
        assert_eq!(xs.sets, [cs([1, 2, 3, 4]), ColourSet::EMPTY, cs([1, 2, 3, 4])]);
        assert_eq!(xs.s_value, 8);

        let single = PathList::new(1, alloc::vec![cs([1, 2, 3, 4])]).unwrap();
        assert_eq!(x_sequence(&single).s_value, 4);
    }

    #[test]
    fn criterion_examples() {
        assert!(path_colourable(&staircase()));
        let starved =
            PathList::new(1, alloc::vec![cs([1, 2]), cs([1, 2, 3, 4]), cs([3, 4])]).unwrap();
        assert_eq!(x_sequence(&starved).s_value, 4);
        assert!(!path_colourable(&starved));
        assert!(colour_path(&starved).is_none());
        let single = PathList::new(1, alloc::vec![cs([7, 9])]).unwrap();
        assert!(path_colourable(&single));
    }

    #[test]
    fn colour_path_follows_backward_recursion() {
        // X3 = {7,8} is forced for v3, then X*2 = {5,6} for v2, then {1,2} for v1
        let phi = colour_path(&staircase()).unwrap();
        assert_eq!(phi.0, [cs([1, 2]), cs([5, 6]), cs([7, 8])]);

        let phi = colour_path(&constant()).unwrap();
        assert_eq!(phi.0[0], phi.0[2]);
        assert!(phi.0[0].is_disjoint(phi.0[1]));
    }

    #[test]
    fn profile_examples() {
        let p = profile(&staircase()).unwrap();
        assert_eq!(p.common, ColourSet::EMPTY);
        assert_eq!(p.hat_first, cs([1, 2]));
        assert_eq!(p.hat_last, cs([7, 8]));
        assert_eq!(p.s_value, 8);

        let p = profile(&constant()).unwrap();
        assert_eq!(p.common, cs([1, 2, 3, 4]));
        assert!(p.hat_first.is_empty() && p.hat_last.is_empty());

        let w = cs([0, 3, 5, 6]);
        let p = profile(&PathList::new(1, alloc::vec![w]).unwrap()).unwrap();
        assert_eq!((p.common, p.hat_first, p.hat_last, p.s_value), (w, ColourSet::EMPTY, ColourSet::EMPTY, 4));
    }

    #[test]
    fn profile_refuses_even_paths() {
        let even = PathList::new(1, alloc::vec![cs([1, 2, 3, 4]); 2]).unwrap();
        assert_eq!(profile(&even), Err(PathError::EvenPath { n: 2 }));
        assert!(s_decomposition(&even).is_err());
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(restrict(&staircase(), ColourSet::EMPTY, ColourSet::EMPTY), staircase());
        let r = restrict(&staircase(), cs([1, 2]), cs([7, 8]));
        assert_eq!(r.lists(), [cs([3, 4]), cs([3, 4, 5, 6]), cs([5, 6])]);
        let single = PathList::new(1, alloc::vec![cs([1, 2, 3, 4])]).unwrap();
        assert_eq!(restrict(&single, cs([1]), cs([4])).lists(), [cs([2, 3])]);
    }

    #[test]
    fn damage_examples() {
        let p = profile(&staircase()).unwrap();
        assert_eq!(damage(&p, cs([1, 2]), cs([7, 8])), 4);
        let restricted = restrict(&staircase(), cs([1, 2]), cs([7, 8]));
        assert_eq!(x_sequence(&restricted).s_value, 4);

        let p = profile(&constant()).unwrap();
        assert_eq!(damage(&p, cs([1, 2]), cs([1, 2])), 2);
        assert_eq!(x_sequence(&restrict(&constant(), cs([1, 2]), cs([1, 2]))).s_value, 6);
        assert_eq!(damage(&p, ColourSet::EMPTY, ColourSet::EMPTY), 0);
    }

    #[test]
    fn s_decomposition_examples() {
        let d = s_decomposition(&constant()).unwrap();
        assert_eq!((d.base, d.gains.as_slice(), d.tail, d.total()), (4, &[0][..], 4, 8));
        let d = s_decomposition(&staircase()).unwrap();
        assert_eq!((d.base, d.gains.as_slice(), d.tail, d.total()), (4, &[2][..], 2, 8));
        let single = PathList::new(1, alloc::vec![cs([1, 2, 3, 4])]).unwrap();
        let d = s_decomposition(&single).unwrap();
        assert_eq!((d.base, d.gains.len(), d.tail), (0, 0, 4));
    }

    #[test]
    fn internal_lists_must_have_size_4m() {
        let bad = PathList::new(1, alloc::vec![cs([1, 2]), cs([1, 2, 3]), cs([3, 4])]);
        assert!(matches!(bad, Err(PathError::WrongListSize { index: 1, .. })));
    }
}
