//! JSON file formats. Colours are small integers; field order is fixed so
//! serialised files are byte-stable.

use std::path::{Path, PathBuf};

use abchoose_core::reductions::ContractionRecord;
use abchoose_core::{
    ColourSet, Exceptional, FamilySpec, Graph, GraphError, ListAssignment, ListError, PathError,
    PathList, TupleColouring,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}:{column}: {message}")]
    Json {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("bad graph spec {0:?} (expected theta:2,4,4 / cycle:5 / two-cycles:4,1,4 / k:2,4)")]
    Spec(String),
    #[error("colour {colour} is outside universe {universe}")]
    Colour { colour: usize, universe: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    List(#[from] ListError),
    #[error(transparent)]
    Path(#[from] PathError),
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_json(&text, path)
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, origin: &Path) -> Result<T, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Json {
        path: origin.to_owned(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("formats serialise infallibly")
}

pub fn colours_of(set: ColourSet) -> Vec<usize> {
    set.iter().map(usize::from).collect()
}

fn set_of(colours: &[usize], universe: usize) -> Result<ColourSet, FormatError> {
    for &colour in colours {
        if colour >= universe.min(abchoose_core::MAX_UNIVERSE) {
            return Err(FormatError::Colour { colour, universe });
        }
    }
    Ok(ColourSet::from_colours(colours.iter().copied()))
}

/// `{"n": 4, "edges": [[0,1], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        Ok(Graph::new(self.n, self.edges.iter().map(|e| (e[0], e[1])))?)
    }
}

/// Family parameters, tagged by `family`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyFile {
    Theta {
        lengths: Vec<usize>,
    },
    TwoCycles {
        first: usize,
        path_vertices: usize,
        second: usize,
    },
    Cycle {
        len: usize,
    },
    BranchTail {
        tail: usize,
        loop_path: usize,
    },
    MiddleTail {
        tail: usize,
        loop_path: usize,
    },
    SquareTwoTails {
        first_tail: usize,
        first_loop: usize,
        second_tail: usize,
        second_loop: usize,
    },
    ChordedSquare {
        chord: usize,
    },
}

impl FamilyFile {
    pub fn to_spec(&self) -> FamilySpec {
        match self.clone() {
            FamilyFile::Theta { lengths } => FamilySpec::Theta { lengths },
            FamilyFile::TwoCycles {
                first,
                path_vertices,
                second,
            } => FamilySpec::TwoCycles {
                first,
                path_vertices,
                second,
            },
            FamilyFile::Cycle { len } => FamilySpec::Cycle { len },
            FamilyFile::BranchTail { tail, loop_path } => {
                FamilySpec::Exceptional(Exceptional::BranchTail { tail, loop_path })
            }
            FamilyFile::MiddleTail { tail, loop_path } => {
                FamilySpec::Exceptional(Exceptional::MiddleTail { tail, loop_path })
            }
            FamilyFile::SquareTwoTails {
                first_tail,
                first_loop,
                second_tail,
                second_loop,
            } => FamilySpec::Exceptional(Exceptional::SquareTwoTails {
                first_tail,
                first_loop,
                second_tail,
                second_loop,
            }),
            FamilyFile::ChordedSquare { chord } => {
                FamilySpec::Exceptional(Exceptional::ChordedSquare { chord })
            }
        }
    }
}

/// A graph given either explicitly or by family parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSource {
    Explicit(GraphFile),
    Family(FamilyFile),
}

impl GraphSource {
    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        match self {
            GraphSource::Explicit(g) => g.to_graph(),
            GraphSource::Family(f) => Ok(abchoose_core::generate(&f.to_spec())?),
        }
    }
}

/// Parses the command-line shorthand `theta:2,4,4`, `cycle:5`,
/// `two-cycles:4,1,4` or `k:2,4` (complete bipartite).
pub fn parse_shorthand(s: &str) -> Result<Graph, FormatError> {
    let bad = || FormatError::Spec(s.to_owned());
    let (kind, args) = s.split_once(':').ok_or_else(bad)?;
    let nums: Vec<usize> = args
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let spec = match (kind, nums.as_slice()) {
        ("theta", l) if l.len() >= 2 => FamilySpec::Theta { lengths: l.to_vec() },
        ("cycle", &[len]) => FamilySpec::Cycle { len },
        ("two-cycles", &[first, path_vertices, second]) => FamilySpec::TwoCycles {
            first,
            path_vertices,
            second,
        },
        ("k", &[p, q]) => {
            let n = p + q;
            let edges = (0..p).flat_map(|i| (p..n).map(move |j| (i, j)));
            return Ok(Graph::new(n, edges)?);
        }
        _ => return Err(bad()),
    };
    Ok(abchoose_core::generate(&spec)?)
}

/// `{"universe": 6, "a": 4, "b": 2, "m": 1, "lists": [[0,1,2,5], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListsFile {
    pub universe: usize,
    pub a: usize,
    pub b: usize,
    pub m: usize,
    pub lists: Vec<Vec<usize>>,
}

impl ListsFile {
    pub fn from_lists(l: &ListAssignment) -> Self {
        ListsFile {
            universe: l.universe(),
            a: l.a(),
            b: l.b(),
            m: l.m(),
            lists: l.lists().iter().map(|&s| colours_of(s)).collect(),
        }
    }

    pub fn to_lists(&self) -> Result<ListAssignment, FormatError> {
        let sets = self
            .lists
            .iter()
            .map(|c| set_of(c, self.universe))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ListAssignment::new(self.universe, self.a, self.b, self.m, sets)?)
    }
}

/// A graph together with lists on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub graph: GraphSource,
    pub lists: ListsFile,
}

/// `{"m": 1, "lists": [[1,2,3,4], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathListFile {
    pub m: usize,
    pub lists: Vec<Vec<usize>>,
}

impl PathListFile {
    pub fn to_path_list(&self) -> Result<PathList, FormatError> {
        let sets = self
            .lists
            .iter()
            .map(|c| set_of(c, abchoose_core::MAX_UNIVERSE))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PathList::new(self.m, sets)?)
    }
}

pub fn colouring_json(phi: &TupleColouring) -> Vec<Vec<usize>> {
    phi.sets().iter().map(|&s| colours_of(s)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionFile {
    pub original: GraphFile,
    pub deleted: usize,
    pub merged: Vec<usize>,
    pub merged_id: usize,
    pub map: Vec<Option<usize>>,
    pub contracted: GraphFile,
}

impl ContractionFile {
    pub fn from_record(r: &ContractionRecord) -> Self {
        ContractionFile {
            original: GraphFile::from_graph(&r.original),
            deleted: r.deleted,
            merged: r.merged.clone(),
            merged_id: r.merged_id,
            map: r.map.clone(),
            contracted: GraphFile::from_graph(&r.contracted),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip_is_byte_stable() {
        let g = parse_shorthand("theta:2,4,4").unwrap();
        let text = to_pretty(&GraphFile::from_graph(&g));
        let back: GraphFile = parse_json(&text, Path::new("mem")).unwrap();
        assert_eq!(back.to_graph().unwrap(), g);
        assert_eq!(to_pretty(&back), text);
    }

    #[test]
    fn family_and_explicit_sources() {
        let fam: GraphSource =
            parse_json(r#"{"family": "theta", "lengths": [2, 2, 2, 4]}"#, Path::new("mem")).unwrap();
        assert_eq!(fam.to_graph().unwrap().n(), 8);
        let exp: GraphSource = parse_json(r#"{"n": 2, "edges": [[0, 1]]}"#, Path::new("mem")).unwrap();
        assert_eq!(exp.to_graph().unwrap().edge_count(), 1);
    }

    #[test]
    fn json_errors_carry_a_location() {
        let err = parse_json::<GraphFile>("{\n  \"n\": 3,\n  \"edges\": [[0,1],\n}", Path::new("g.json"))
            .unwrap_err();
        let msg = err.to_string();
        assert!(msg.starts_with("g.json:4:"), "{msg}");
    }

    #[test]
    fn shorthand_forms() {
        assert_eq!(parse_shorthand("k:2,4").unwrap().edge_count(), 8);
        assert_eq!(parse_shorthand("cycle:5").unwrap().n(), 5);
        assert_eq!(parse_shorthand("two-cycles:4,1,4").unwrap().n(), 7);
        assert!(parse_shorthand("petersen").is_err());
    }

    #[test]
    fn lists_outside_the_universe_are_rejected() {
        let f = ListsFile {
            universe: 4,
            a: 2,
            b: 1,
            m: 1,
            lists: vec![vec![0, 4]],
        };
        assert!(matches!(f.to_lists(), Err(FormatError::Colour { colour: 4, .. })));
    }
}
