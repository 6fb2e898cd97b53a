//! Hand-transcribed graphs and bad list assignments.
//!
//! Lists are written with letters `a..g`, read as colours `0..6`. Vertex
//! numbers follow the order the drawings declare their vertices; the two
//! theta certificates use the generator numbering instead (branch vertices
//! first, then each path walked from the first branch vertex).

use abchoose_core::{generate, ColourSet, FamilySpec, Graph, ListAssignment};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    /// The lists admit no `(4:2)`-colouring.
    Uncolourable,
    /// Graph only; nothing to check beyond its shape.
    GraphOnly,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub graph: Graph,
    pub lists: Option<ListAssignment>,
    pub expected: Expected,
}

pub fn letters(word: &str) -> ColourSet {
    ColourSet::from_colours(word.bytes().map(|b| {
        assert!(b.is_ascii_lowercase() && b <= b'g', "colour letter {:?}", b as char);
        usize::from(b - b'a')
    }))
}

fn lists(words: &[&str]) -> ListAssignment {
    let sets: Vec<ColourSet> = words.iter().map(|w| letters(w)).collect();
    ListAssignment::four_two(1, sets).expect("fixture lists are 4-sets")
}

fn bad(
    name: &'static str,
    description: &'static str,
    n: usize,
    edges: &[(usize, usize)],
    words: &[&str],
) -> Fixture {
    assert_eq!(words.len(), n, "{name}");
    Fixture {
        name,
        description,
        graph: Graph::new(n, edges.iter().copied()).expect("fixture graphs are simple"),
        lists: Some(lists(words)),
        expected: Expected::Uncolourable,
    }
}

fn theta(lengths: &[usize]) -> Graph {
    generate(&FamilySpec::Theta {
        lengths: lengths.to_vec(),
    })
    .expect("valid theta")
}

/// Edges of a labelled drawing: vertices are named by their position in `names`.
fn named(names: &[&str], edges: &[(&str, &str)]) -> Vec<(usize, usize)> {
    let id = |x: &str| names.iter().position(|&n| n == x).expect("declared vertex");
    edges.iter().map(|&(a, b)| (id(a), id(b))).collect()
}

pub fn fixtures() -> Vec<Fixture> {
    let mut out = vec![
        Fixture {
            name: "theta2224-bad",
            description: "Θ_{2,2,2,4}: u, z, w1..w3, then v1 v2 v3 from u",
            graph: theta(&[2, 2, 2, 4]),
            lists: Some(lists(&[
                "abcf", "abde", "abce", "adef", "abcd", "abef", "acde", "abcd",
            ])),
            expected: Expected::Uncolourable,
        },
        Fixture {
            name: "theta333-bad",
            description: "Θ_{3,3,3}: u, v, then x1 x2, y1 y2, z1 z2 from u",
            graph: theta(&[3, 3, 3]),
            lists: Some(lists(&[
                "acde", "acde", "abce", "abde", "abde", "abcd", "abcd", "abce",
            ])),
            expected: Expected::Uncolourable,
        },
        Fixture {
            name: "theta244",
            description: "Θ_{2,4,4}, the smallest (4:2)-choosable theta with a long path pair",
            graph: theta(&[2, 4, 4]),
            lists: None,
            expected: Expected::GraphOnly,
        },
    ];
    out.extend(small_bad_graphs());
    out
}

/// The fifteen small minimal non-`(4:2)`-choosable graphs with their lists.
pub fn small_bad_graphs() -> Vec<Fixture> {
    let k33 = &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)];
    let mut out = vec![
        bad(
            "small-bad-01",
            "K_{3,3}",
            6,
            k33,
            &["adef", "abcf", "abde", "acde", "abcd", "abce"],
        ),
        bad(
            "small-bad-02",
            "hub v8 joined to six vertices, paired through v6 and v7",
            9,
            &[
                (0, 8), (0, 6), (1, 8), (1, 7), (2, 8), (2, 7),
                (3, 8), (3, 7), (4, 8), (4, 6), (5, 8), (5, 6),
            ],
            &["abcd", "abce", "abcf", "abcd", "abde", "bcde", "abce", "adef", "abcd"],
        ),
        bad(
            "small-bad-03",
            "hub v8 and v7 share four neighbours; v6 shares two with the hub",
            9,
            &[
                (0, 8), (0, 6), (1, 8), (1, 6), (2, 8), (2, 7),
                (3, 8), (3, 7), (4, 8), (4, 7), (5, 8), (5, 7),
            ],
            &["abcd", "abde", "abcf", "cdef", "abce", "abcd", "abce", "adef", "abcd"],
        ),
        bad(
            "small-bad-04",
            "two K_{2,3}s sharing v8: {v7,v8}-{v0,v1,v2} and {v5,v6}-{v3,v4,v8}",
            9,
            &[
                (0, 8), (0, 7), (1, 8), (1, 7), (2, 8), (2, 7),
                (3, 5), (3, 6), (4, 5), (4, 6), (5, 8), (6, 8),
            ],
            &["abcd", "abde", "abce", "abce", "abde", "acde", "abcd", "acde", "abcd"],
        ),
        bad(
            "small-bad-05",
            "4-cycle v8 v0 v6 v1 sharing v8 with Θ_{1,3,3} between v8 and v7",
            9,
            &[
                (0, 8), (0, 6), (1, 8), (1, 6), (2, 8), (2, 4),
                (3, 8), (3, 5), (4, 7), (5, 7), (7, 8),
            ],
            &["abcd", "acde", "abce", "abde", "abde", "acde", "abce", "abcd", "abcd"],
        ),
        bad(
            "small-bad-06",
            "4-cycle v8 v1 v5 v2 at v8, plus paths v8 v0 v7, v8 v6, v6 v7 and v6 v4 v3 v7",
            9,
            &[
                (0, 8), (0, 7), (1, 8), (1, 5), (2, 8), (2, 5),
                (3, 4), (3, 7), (4, 6), (6, 8), (6, 7),
            ],
            &["acdf", "abde", "abcd", "abdf", "acde", "abce", "abce", "abef", "abcd"],
        ),
        bad(
            "small-bad-07",
            "K_{2,4} on {v6,v7}-{v3,v4,v5,v8} sharing v8 with the 4-cycle v8 v1 v0 v2",
            9,
            &[
                (0, 1), (0, 2), (1, 8), (2, 8), (3, 6), (3, 7),
                (4, 6), (4, 7), (5, 6), (5, 7), (6, 8), (7, 8),
            ],
            &["abde", "abce", "abcd", "abce", "abcf", "cdef", "adef", "abcd", "abcd"],
        ),
        bad(
            "small-bad-08",
            "two K_{2,3}s sharing the vertex v8",
            9,
            &[
                (0, 4), (0, 5), (1, 4), (1, 5), (2, 6), (2, 7),
                (3, 6), (3, 7), (4, 8), (5, 8), (6, 8), (7, 8),
            ],
            &["abce", "abcf", "bcde", "abde", "adef", "abcd", "abce", "abcd", "abcd"],
        ),
    ];

    let k25_names = ["x1", "x2", "y1", "y2", "y3", "y4", "y5"];
    let k25_edges: Vec<(&str, &str)> = ["x1", "x2"]
        .iter()
        .flat_map(|&x| ["y1", "y2", "y3", "y4", "y5"].into_iter().map(move |y| (x, y)))
        .collect();
    out.push(bad(
        "small-bad-09",
        "K_{2,5}",
        7,
        &named(&k25_names, &k25_edges),
        &["acfg", "abde", "abce", "abfg", "abcd", "adeg", "adef"],
    ));

    let abc = ["a", "b", "c", "d", "e", "f", "g"];
    out.push(bad(
        "small-bad-10",
        "6-cycle a b c f e d with chord b e and a path b g f",
        7,
        &named(
            &abc,
            &[
                ("a", "b"), ("b", "c"), ("c", "f"), ("f", "e"), ("e", "d"), ("d", "a"),
                ("b", "e"), ("b", "g"), ("g", "f"),
            ],
        ),
        &["abce", "abef", "acde", "acdf", "abdf", "abcd", "abcf"],
    ));

    let wheel = ["x1", "x2", "x3", "x4", "x5", "x6", "y"];
    out.push(bad(
        "small-bad-11",
        "6-cycle with a centre joined to alternate vertices",
        7,
        &named(
            &wheel,
            &[
                ("y", "x1"), ("y", "x3"), ("y", "x5"),
                ("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x6"), ("x6", "x1"),
            ],
        ),
        &["abcd", "abce", "adef", "adeg", "abfg", "acfg", "abdf"],
    ));

    let hex2 = ["x1", "x2", "x3", "x4", "x5", "x6", "y2", "y6"];
    out.push(bad(
        "small-bad-12",
        "6-cycle with two external paths x1 y2 x3 and x5 y6 x1",
        8,
        &named(
            &hex2,
            &[
                ("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x6"), ("x6", "x1"),
                ("x1", "y2"), ("y2", "x3"), ("x5", "y6"), ("y6", "x1"),
            ],
        ),
        &["acde", "abef", "abdf", "cdef", "bcef", "abde", "abcd", "abcf"],
    ));

    let grid = ["a", "b", "c", "d", "e", "f", "g", "h"];
    out.push(bad(
        "small-bad-13",
        "8-cycle a b d e h g f c with chords c d and d g",
        8,
        &named(
            &grid,
            &[
                ("a", "b"), ("b", "d"), ("d", "e"), ("e", "h"), ("h", "g"), ("g", "f"),
                ("f", "c"), ("c", "a"), ("c", "d"), ("d", "g"),
            ],
        ),
        &["abce", "abcd", "abde", "abcd", "acde", "adef", "abcf", "abef"],
    ));
    out.push(bad(
        "small-bad-14",
        "ladder: 8-cycle a b c d h g f e with rungs b f and c g",
        8,
        &named(
            &grid,
            &[
                ("a", "b"), ("b", "c"), ("c", "d"), ("d", "h"), ("h", "g"), ("g", "f"),
                ("f", "e"), ("e", "a"), ("b", "f"), ("c", "g"),
            ],
        ),
        &["abde", "acef", "abcf", "abcd", "abcd", "abce", "abef", "adef"],
    ));

    let hex3 = ["x1", "x2", "x3", "x4", "x5", "x6", "y2", "y5"];
    out.push(bad(
        "small-bad-15",
        "6-cycle with two external paths x1 y2 x3 and x4 y5 x6",
        8,
        &named(
            &hex3,
            &[
                ("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x6"), ("x6", "x1"),
                ("x1", "y2"), ("y2", "x3"), ("x4", "y5"), ("y5", "x6"),
            ],
        ),
        &["acde", "abce", "abcd", "acde", "abce", "abcd", "abde", "abde"],
    ));
    out
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}

/// Stable text form of every fixture, used to pin the transcription.
pub fn transcript() -> String {
    let mut s = String::new();
    for f in fixtures() {
        s.push_str(f.name);
        s.push('|');
        for (u, v) in f.graph.edges() {
            s.push_str(&format!("{u}-{v},"));
        }
        s.push('|');
        if let Some(l) = &f.lists {
            for &set in l.lists() {
                for c in set.iter() {
                    s.push((b'a' + c) as char);
                }
                s.push(',');
            }
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use abchoose_core::solver::l_colourable;

    #[test]
    fn letters_map_to_small_colours() {
        assert_eq!(letters("abcf"), ColourSet::from_colours([0, 1, 2, 5]));
        assert_eq!(letters("g"), ColourSet::singleton(6));
    }

    #[test]
    fn names_are_unique() {
        let all = fixtures();
        let mut names: Vec<&str> = all.iter().map(|f| f.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), all.len());
        assert_eq!(small_bad_graphs().len(), 15);
    }

    #[test]
    fn theta_certificates_are_uncolourable() {
        for name in ["theta2224-bad", "theta333-bad"] {
            let f = fixture(name).unwrap();
            assert!(l_colourable(&f.graph, f.lists.as_ref().unwrap()).is_none(), "{name}");
        }
    }

    #[test]
    fn small_graphs_have_at_most_nine_vertices_and_min_degree_two() {
        for f in small_bad_graphs() {
            assert!(f.graph.n() <= 9, "{}", f.name);
            assert!(f.graph.min_degree().unwrap() >= 2, "{}", f.name);
            assert!(f.graph.is_connected(), "{}", f.name);
        }
    }
}
