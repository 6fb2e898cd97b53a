//! Machine-checkable evidence for (non-)choosability.
//!
//! * `bad_assignment` — lists with no colouring; re-checked with the oracle.
//! * `choosable_exhaustive` — a digest of a complete canonical search;
//!   re-checked by repeating the search.
//! * `reduction_chain` — a bad assignment on a small graph plus a sequence of
//!   larger graphs, each of which contracts (at the named vertex) to the
//!   previous one; the assignment is lifted step by step and the final lists
//!   re-checked with the oracle.

use abchoose_core::reductions::{contract_vertex, lift_bad_assignment};
use abchoose_core::solver::{is_ab_choosable, l_colourable};
use abchoose_core::structure::as_theta;
use abchoose_core::{Graph, ListAssignment, SearchConfig, SearchStats};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::formats::{FormatError, GraphFile, ListsFile};

pub const FORMAT_VERSION: u32 = 1;

pub const CANONICALIZATION: &str = "colours are integers 0..universe-1 (drawing letters a..g read as 0..6); \
vertices numbered as in the graph file; exhaustive searches introduce new colours smallest-unused first \
and cap the universe at a*|V| unless universe_cap says otherwise";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format_version: u32,
    pub canonicalization: String,
    pub note: String,
    pub graph: GraphFile,
    #[serde(flatten)]
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    BadAssignment {
        lists: ListsFile,
    },
    ChoosableExhaustive {
        a: usize,
        b: usize,
        universe_cap: usize,
        assignments: u64,
        digest: String,
    },
    ReductionChain {
        start: GraphFile,
        lists: ListsFile,
        steps: Vec<ChainStep>,
    },
}

/// `graph` contracts at `deleted` to the graph of the previous step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub graph: GraphFile,
    pub deleted: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub valid: bool,
    pub kind: &'static str,
    pub detail: String,
    pub stats: Option<SearchStatsJson>,
    /// Final lists of a replayed chain.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lifted: Option<ListsFile>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStatsJson {
    pub nodes: u64,
    pub assignments: u64,
}

impl From<SearchStats> for SearchStatsJson {
    fn from(s: SearchStats) -> Self {
        SearchStatsJson {
            nodes: s.nodes,
            assignments: s.assignments,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CertificateError {
    #[error("unsupported certificate format version {0}")]
    Version(u32),
    #[error(transparent)]
    Format(#[from] FormatError),
}

impl Certificate {
    pub fn bad_assignment(g: &Graph, lists: &ListAssignment, note: &str) -> Self {
        Certificate {
            format_version: FORMAT_VERSION,
            canonicalization: CANONICALIZATION.into(),
            note: note.into(),
            graph: GraphFile::from_graph(g),
            payload: Payload::BadAssignment {
                lists: ListsFile::from_lists(lists),
            },
        }
    }

    /// Runs the complete single-threaded search and records its digest.
    /// `None` if the graph is not choosable (or the search is cut short).
    pub fn exhaustive(g: &Graph, a: usize, b: usize, universe_cap: usize, note: &str) -> Option<Self> {
        let cfg = SearchConfig {
            universe_cap: Some(universe_cap),
            ..SearchConfig::default()
        };
        let v = is_ab_choosable(g, a, b, &cfg).ok()?;
        if !v.is_choosable() {
            return None;
        }
        let file = GraphFile::from_graph(g);
        Some(Certificate {
            format_version: FORMAT_VERSION,
            canonicalization: CANONICALIZATION.into(),
            note: note.into(),
            payload: Payload::ChoosableExhaustive {
                a,
                b,
                universe_cap,
                assignments: v.stats.assignments,
                digest: search_digest(&file, a, b, universe_cap, v.stats.assignments),
            },
            graph: file,
        })
    }

    /// Chain from `start` with bad `lists` through graphs that contract onto
    /// their predecessor at the given vertex.
    pub fn reduction_chain(
        start: &Graph,
        lists: &ListAssignment,
        steps: &[(Graph, usize)],
        note: &str,
    ) -> Self {
        let last = steps.last().map_or(start, |(g, _)| g);
        Certificate {
            format_version: FORMAT_VERSION,
            canonicalization: CANONICALIZATION.into(),
            note: note.into(),
            graph: GraphFile::from_graph(last),
            payload: Payload::ReductionChain {
                start: GraphFile::from_graph(start),
                lists: ListsFile::from_lists(lists),
                steps: steps
                    .iter()
                    .map(|(g, v)| ChainStep {
                        graph: GraphFile::from_graph(g),
                        deleted: *v,
                    })
                    .collect(),
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.payload {
            Payload::BadAssignment { .. } => "bad_assignment",
            Payload::ChoosableExhaustive { .. } => "choosable_exhaustive",
            Payload::ReductionChain { .. } => "reduction_chain",
        }
    }

    /// Replays the certificate. Structural problems (bad version, malformed
    /// graph or lists) are errors; failed checks give an invalid report.
    pub fn verify(&self) -> Result<Report, CertificateError> {
        if self.format_version != FORMAT_VERSION {
            return Err(CertificateError::Version(self.format_version));
        }
        let g = self.graph.to_graph()?;
        let kind = self.kind();
        let report = |valid: bool, detail: String| Report {
            valid,
            kind,
            detail,
            stats: None,
            lifted: None,
        };
        match &self.payload {
            Payload::BadAssignment { lists } => {
                let l = lists.to_lists()?;
                if l.len() != g.n() {
                    return Ok(report(false, format!("{} lists for {} vertices", l.len(), g.n())));
                }
                Ok(match l_colourable(&g, &l) {
                    None => report(true, "no colouring exists".into()),
                    Some(phi) => report(
                        false,
                        format!("lists are colourable, e.g. {:?}", crate::formats::colouring_json(&phi)),
                    ),
                })
            }
            Payload::ChoosableExhaustive {
                a,
                b,
                universe_cap,
                assignments,
                digest,
            } => {
                let cfg = SearchConfig {
                    universe_cap: Some(*universe_cap),
                    ..SearchConfig::default()
                };
                let v = match is_ab_choosable(&g, *a, *b, &cfg) {
                    Ok(v) => v,
                    Err(e) => return Ok(report(false, format!("search failed: {e}"))),
                };
                let mut r = if !v.is_choosable() {
                    report(false, "search found a bad assignment".into())
                } else if v.stats.assignments != *assignments
                    || search_digest(&self.graph, *a, *b, *universe_cap, v.stats.assignments) != *digest
                {
                    report(
                        false,
                        format!(
                            "transcript differs: {} assignments examined, certificate says {assignments}",
                            v.stats.assignments
                        ),
                    )
                } else {
                    report(true, format!("({a}:{b})-choosable within universe {universe_cap}"))
                };
                r.stats = Some(v.stats.into());
                Ok(r)
            }
            Payload::ReductionChain {
                start,
                lists,
                steps,
            } => {
                let mut cur_graph = start.to_graph()?;
                let mut cur = lists.to_lists()?;
                if cur.len() != cur_graph.n() {
                    return Ok(report(false, "start lists do not cover the start graph".into()));
                }
                for (k, step) in steps.iter().enumerate() {
                    let big = step.graph.to_graph()?;
                    let rec = match contract_vertex(&big, step.deleted) {
                        Ok(r) => r,
                        Err(e) => return Ok(report(false, format!("step {k}: {e}"))),
                    };
                    if rec.contracted != cur_graph {
                        return Ok(report(
                            false,
                            format!("step {k}: contraction does not give the previous graph"),
                        ));
                    }
                    cur = match lift_bad_assignment(&rec, &cur) {
                        Ok(l) => l,
                        Err(e) => return Ok(report(false, format!("step {k}: {e}"))),
                    };
                    cur_graph = big;
                }
                if cur_graph != g {
                    return Ok(report(false, "chain does not end at the certified graph".into()));
                }
                // lifting checks every intermediate step; a chain with no
                // steps still needs its start checked
                if l_colourable(&g, &cur).is_some() {
                    return Ok(report(false, "final lists are colourable".into()));
                }
                let mut r = report(
                    true,
                    format!("{} contraction step(s) replayed; final lists uncolourable", steps.len()),
                );
                r.lifted = Some(ListsFile::from_lists(&cur));
                Ok(r)
            }
        }
    }
}

fn search_digest(g: &GraphFile, a: usize, b: usize, cap: usize, assignments: u64) -> String {
    let mut h = Sha256::new();
    h.update(serde_json::to_vec(g).expect("graph serialises"));
    h.update(format!("|a={a}|b={b}|cap={cap}|assignments={assignments}").as_bytes());
    hex::encode(h.finalize())
}

/// Moves lists between two theta graphs with the same path lengths, matching
/// branch vertices and paths in order (any such matching is an isomorphism).
pub fn transfer_theta_lists(from: &Graph, lists: &ListAssignment, to: &Graph) -> Option<ListAssignment> {
    let (a, b) = (as_theta(from)?, as_theta(to)?);
    if a.lengths() != b.lengths() {
        return None;
    }
    let mut out = lists.lists().to_vec();
    for (x, y) in a.canonical_order().into_iter().zip(b.canonical_order()) {
        out[y] = lists.list(x);
    }
    lists.with_lists(out).ok()
}
