//! The subcommands, independent of argument parsing. Each returns an exit
//! code, a text report and the same content as JSON.

use std::path::{Path, PathBuf};

use abchoose_core::path::{colour_path, path_colourable, profile, x_sequence};
use abchoose_core::reductions::{contract_vertex, find_p5, lift_bad_assignment, p5_reduce, p5_shrink};
use abchoose_core::solver::{auto_cut, cut_search, l_colourable, solve_theta_22r2s, solve_two_cycles};
use abchoose_core::structure::{classify_3cc, critical_four_two_choosable, is_2_choosable};
use abchoose_core::{Graph, SearchConfig, SolverError, Verdict, VertexSet};
use serde_json::{json, Value};

use crate::certificate::{Certificate, CertificateError};
use crate::fixtures::{fixture, fixtures, Expected};
use crate::formats::{
    colouring_json, colours_of, parse_shorthand, read_json, to_pretty, ContractionFile,
    FormatError, GraphFile, GraphSource, InstanceFile, ListsFile, PathListFile,
};
use crate::parallel::is_ab_choosable_parallel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug)]
pub struct CommandOutput {
    pub code: i32,
    pub text: String,
    pub json: Value,
}

impl CommandOutput {
    fn new(code: i32, text: String, json: Value) -> Self {
        CommandOutput { code, text, json }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        let msg = msg.into();
        CommandOutput::new(EXIT_USAGE, format!("error: {msg}"), json!({ "error": msg }))
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            to_pretty(&self.json)
        } else {
            self.text.clone()
        }
    }
}

impl From<FormatError> for CommandOutput {
    fn from(e: FormatError) -> Self {
        CommandOutput::usage(e.to_string())
    }
}

/// Search parameters shared by several commands.
#[derive(Clone, Debug)]
pub struct Knobs {
    pub a: usize,
    pub b: usize,
    pub m: usize,
    pub config: SearchConfig,
}

impl Default for Knobs {
    fn default() -> Self {
        Knobs {
            a: 4,
            b: 2,
            m: 1,
            config: SearchConfig::default(),
        }
    }
}

/// `@name` is a fixture, `theta:2,4,4`-style text is a family shorthand,
/// anything else a JSON graph file (explicit or family form).
pub fn load_graph(arg: &str) -> Result<Graph, FormatError> {
    if let Some(name) = arg.strip_prefix('@') {
        return fixture(name)
            .map(|f| f.graph)
            .ok_or_else(|| FormatError::Spec(arg.to_owned()));
    }
    let path = Path::new(arg);
    if !path.exists() && arg.contains(':') {
        return parse_shorthand(arg);
    }
    read_json::<GraphSource>(path)?.to_graph()
}

fn stats_json(v: &abchoose_core::SearchStats) -> Value {
    json!({ "nodes": v.nodes, "assignments": v.assignments })
}

pub fn verify(cert: &Path) -> CommandOutput {
    let c: Certificate = match read_json(cert) {
        Ok(c) => c,
        Err(e) => return e.into(),
    };
    match c.verify() {
        Ok(r) => {
            let code = if r.valid { EXIT_OK } else { EXIT_NEGATIVE };
            let text = format!(
                "{}: {} ({})",
                r.kind,
                if r.valid { "valid" } else { "INVALID" },
                r.detail
            );
            CommandOutput::new(code, text, serde_json::to_value(&r).expect("report serialises"))
        }
        Err(CertificateError::Format(e)) => e.into(),
        Err(e) => CommandOutput::usage(e.to_string()),
    }
}

pub fn classify(graph: &str, search: bool, knobs: &Knobs) -> CommandOutput {
    let g = match load_graph(graph) {
        Ok(g) => g,
        Err(e) => return e.into(),
    };
    let two = is_2_choosable(&g);
    let case = classify_3cc(&g);
    let predicted = critical_four_two_choosable(&g);
    let mut lines = vec![format!("2-choosable: {}", yes_no(two))];
    lines.push(match case {
        Some(c) => format!("3-choosable-critical: case {}", c.letter()),
        None => "3-choosable-critical: no".into(),
    });
    if let Some(p) = predicted {
        lines.push(format!("(4:2)-choosable: {} (critical-graph characterisation)", yes_no(p)));
    }
    let mut out = json!({
        "two_choosable": two,
        "critical_case": case.map(|c| c.letter().to_string()),
        "four_two_choosable": predicted,
    });
    let mut code = EXIT_OK;
    if search {
        let (a, b) = (knobs.a * knobs.m, knobs.b * knobs.m);
        // full (4:2) enumeration is hopeless beyond tiny cores; cut search is not
        let by_cut = (a, b) == (4, 2) && auto_cut(&g).is_some();
        let (result, method) = if by_cut {
            (cut_search(&g, None, &knobs.config), "cut search")
        } else {
            (is_ab_choosable_parallel(&g, a, b, &knobs.config), "canonical enumeration")
        };
        match result {
            Ok(v) => {
                lines.push(format!("search ({a}:{b}): {} [{method}]", verdict_word(&v)));
                out["search"] = verdict_json(&v, a, b);
                out["search"]["method"] = json!(method);
            }
            Err(SolverError::Inconclusive(s)) => {
                lines.push(format!("search ({a}:{b}): inconclusive (budget exhausted)"));
                out["search"] = json!({ "outcome": "inconclusive", "stats": stats_json(&s) });
                code = EXIT_INCONCLUSIVE;
            }
            Err(e) => return CommandOutput::usage(e.to_string()),
        }
    }
    CommandOutput::new(code, lines.join("\n"), out)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict_word(v: &Verdict) -> &'static str {
    if v.is_choosable() {
        "choosable"
    } else {
        "not choosable"
    }
}

fn verdict_json(v: &Verdict, a: usize, b: usize) -> Value {
    json!({
        "a": a,
        "b": b,
        "outcome": if v.is_choosable() { "choosable" } else { "not_choosable" },
        "witness": v.witness.as_ref().map(ListsFile::from_lists),
        "stats": stats_json(&v.stats),
    })
}

/// Colours an instance: the theta and two-cycle procedures when they apply,
/// the oracle otherwise.
pub fn solve(instance: &Path) -> CommandOutput {
    let inst: InstanceFile = match read_json(instance) {
        Ok(i) => i,
        Err(e) => return e.into(),
    };
    let (g, l) = match (inst.graph.to_graph(), inst.lists.to_lists()) {
        (Ok(g), Ok(l)) => (g, l),
        (Err(e), _) | (_, Err(e)) => return e.into(),
    };
    if l.len() != g.n() {
        return CommandOutput::usage(format!("{} lists for {} vertices", l.len(), g.n()));
    }
    let mut method = "oracle";
    let mut phi = None;
    if (l.a(), l.b(), l.m()) == (4, 2, 1) {
        if let Ok((c, route)) = solve_theta_22r2s(&g, &l) {
            method = match route {
                abchoose_core::solver::ThetaRoute::OracleFallback => "theta procedure (oracle fallback)",
                _ => "theta procedure",
            };
            phi = Some(c);
        } else if let Ok(c) = solve_two_cycles(&g, &l) {
            method = "two-cycle procedure";
            phi = Some(c);
        }
    }
    let phi = phi.or_else(|| l_colourable(&g, &l));
    match phi {
        Some(p) => {
            debug_assert_eq!(abchoose_core::is_proper_colouring(&g, &l, &p), Ok(true));
            let sets = colouring_json(&p);
            let text = format!(
                "colourable ({method})\n{}",
                sets.iter()
                    .enumerate()
                    .map(|(v, s)| format!("  {v}: {s:?}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            );
            CommandOutput::new(EXIT_OK, text, json!({ "colourable": true, "method": method, "colouring": sets }))
        }
        None => CommandOutput::new(
            EXIT_NEGATIVE,
            "not colourable".into(),
            json!({ "colourable": false, "method": "oracle" }),
        ),
    }
}

/// `--cut` value: `auto` or comma-separated vertices.
pub fn parse_cut(s: &str, n: usize) -> Result<Option<VertexSet>, String> {
    if s == "auto" {
        return Ok(None);
    }
    let mut x = VertexSet::EMPTY;
    for part in s.split(',').filter(|p| !p.is_empty()) {
        let v: usize = part.trim().parse().map_err(|_| format!("bad cut vertex {part:?}"))?;
        if v >= n {
            return Err(format!("cut vertex {v} out of range"));
        }
        x.insert(v);
    }
    Ok(Some(x))
}

pub fn search(graph: &str, cut: Option<&str>, witness_out: Option<&Path>, knobs: &Knobs) -> CommandOutput {
    let g = match load_graph(graph) {
        Ok(g) => g,
        Err(e) => return e.into(),
    };
    let (a, b) = (knobs.a * knobs.m, knobs.b * knobs.m);
    let result = match cut {
        Some(c) => {
            if (a, b) != (4, 2) {
                return CommandOutput::usage("cut search decides (4:2) only");
            }
            match parse_cut(c, g.n()) {
                Ok(x) => cut_search(&g, x, &knobs.config),
                Err(e) => return CommandOutput::usage(e),
            }
        }
        None => is_ab_choosable_parallel(&g, a, b, &knobs.config),
    };
    let method = if cut.is_some() { "cut search" } else { "canonical enumeration" };
    match result {
        Ok(v) => {
            let mut text = format!("({a}:{b}) {} [{method}; {} assignments, {} nodes]",
                verdict_word(&v), v.stats.assignments, v.stats.nodes);
            if let Some(w) = &v.witness {
                let words: Vec<String> = w.lists().iter().map(|l| format!("{l}")).collect();
                text.push_str(&format!("\nwitness: {}", words.join(" ")));
                if let Some(path) = witness_out {
                    let cert = Certificate::bad_assignment(&g, w, &format!("{method} witness"));
                    if let Err(e) = std::fs::write(path, to_pretty(&cert)) {
                        return CommandOutput::usage(format!("cannot write {}: {e}", path.display()));
                    }
                    text.push_str(&format!("\nwitness certificate written to {}", path.display()));
                }
            }
            let code = if v.is_choosable() { EXIT_OK } else { EXIT_NEGATIVE };
            let mut j = verdict_json(&v, a, b);
            j["method"] = json!(method);
            CommandOutput::new(code, text, j)
        }
        Err(SolverError::Inconclusive(s)) => CommandOutput::new(
            EXIT_INCONCLUSIVE,
            format!("inconclusive: budget exhausted after {} assignments, {} nodes", s.assignments, s.nodes),
            json!({ "outcome": "inconclusive", "stats": stats_json(&s) }),
        ),
        Err(e) => CommandOutput::usage(e.to_string()),
    }
}

pub fn path_check(file: &Path, m_override: Option<usize>) -> CommandOutput {
    let mut f: PathListFile = match read_json(file) {
        Ok(f) => f,
        Err(e) => return e.into(),
    };
    if let Some(m) = m_override {
        f.m = m;
    }
    let p = match f.to_path_list() {
        Ok(p) => p,
        Err(e) => return e.into(),
    };
    let xs = x_sequence(&p);
    let ok = path_colourable(&p);
    let threshold = 2 * p.m() * p.len();
    let mut lines = vec![
        format!(
            "X: {}",
            xs.sets.iter().map(|s| format!("{s}")).collect::<Vec<_>>().join(" ")
        ),
        format!("S = {} (threshold 2mn = {threshold})", xs.s_value),
        format!("colourable: {}", yes_no(ok)),
    ];
    let mut j = json!({
        "x_sequence": xs.sets.iter().map(|&s| colours_of(s)).collect::<Vec<_>>(),
        "s_value": xs.s_value,
        "threshold": threshold,
        "colourable": ok,
    });
    if let Ok(prof) = profile(&p) {
        lines.push(format!(
            "profile: A = {}, X̂1 = {}, X̂n = {}, slack = {}",
            prof.common,
            prof.hat_first,
            prof.hat_last,
            prof.slack(p.m())
        ));
        j["profile"] = json!({
            "common": colours_of(prof.common),
            "hat_first": colours_of(prof.hat_first),
            "hat_last": colours_of(prof.hat_last),
            "slack": prof.slack(p.m()),
        });
    }
    if let Some(phi) = colour_path(&p) {
        j["colouring"] = json!(colouring_json(&phi));
        lines.push(format!(
            "colouring: {}",
            phi.sets().iter().map(|s| format!("{s}")).collect::<Vec<_>>().join(" ")
        ));
    }
    CommandOutput::new(if ok { EXIT_OK } else { EXIT_NEGATIVE }, lines.join("\n"), j)
}

/// Lists the fixtures, checks each, and optionally writes certificates for
/// the ones with lists.
pub fn fixtures_cmd(name: Option<&str>, export: Option<&Path>) -> CommandOutput {
    let all: Vec<_> = fixtures()
        .into_iter()
        .filter(|f| name.is_none_or(|n| f.name == n))
        .collect();
    if all.is_empty() {
        return CommandOutput::usage(format!("no fixture named {:?}", name.unwrap_or("")));
    }
    if let Some(dir) = export {
        if let Err(e) = std::fs::create_dir_all(dir) {
            return CommandOutput::usage(format!("cannot create {}: {e}", dir.display()));
        }
    }
    let mut code = EXIT_OK;
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    for f in &all {
        let status = match (&f.lists, f.expected) {
            (Some(l), Expected::Uncolourable) => {
                if l_colourable(&f.graph, l).is_none() {
                    "uncolourable (as expected)"
                } else {
                    code = EXIT_NEGATIVE;
                    "COLOURABLE (unexpected)"
                }
            }
            _ => "graph only",
        };
        if let (Some(dir), Some(l)) = (export, &f.lists) {
            let cert = Certificate::bad_assignment(&f.graph, l, f.description);
            let path: PathBuf = dir.join(format!("{}.json", f.name));
            if let Err(e) = std::fs::write(&path, to_pretty(&cert)) {
                return CommandOutput::usage(format!("cannot write {}: {e}", path.display()));
            }
        }
        lines.push(format!(
            "{:<14} n={:<2} e={:<2} {status:<28} {}",
            f.name,
            f.graph.n(),
            f.graph.edge_count(),
            f.description
        ));
        entries.push(json!({
            "name": f.name,
            "description": f.description,
            "graph": GraphFile::from_graph(&f.graph),
            "lists": f.lists.as_ref().map(ListsFile::from_lists),
            "status": status,
        }));
    }
    CommandOutput::new(code, lines.join("\n"), json!(entries))
}

pub enum ReduceOp<'a> {
    Contract {
        graph: &'a str,
        vertex: usize,
        lift: Option<&'a Path>,
        certificate: Option<&'a Path>,
    },
    P5 {
        instance: &'a Path,
        path: Option<[usize; 5]>,
    },
    Shrink {
        graph: &'a str,
    },
}

pub fn reduce(op: ReduceOp<'_>) -> CommandOutput {
    match op {
        ReduceOp::Contract {
            graph,
            vertex,
            lift,
            certificate,
        } => {
            let g = match load_graph(graph) {
                Ok(g) => g,
                Err(e) => return e.into(),
            };
            let rec = match contract_vertex(&g, vertex) {
                Ok(r) => r,
                Err(e) => return CommandOutput::usage(e.to_string()),
            };
            let mut j = json!({ "record": ContractionFile::from_record(&rec) });
            let mut text = format!(
                "deleted {vertex}, merged {:?} into vertex {} of a {}-vertex graph",
                rec.merged,
                rec.merged_id,
                rec.contracted.n()
            );
            if let Some(lp) = lift {
                let small = match read_json::<ListsFile>(lp).and_then(|f| f.to_lists()) {
                    Ok(l) => l,
                    Err(e) => return e.into(),
                };
                let lifted = match lift_bad_assignment(&rec, &small) {
                    Ok(l) => l,
                    Err(e) => {
                        return CommandOutput::new(
                            EXIT_NEGATIVE,
                            format!("{text}\nlift failed: {e}"),
                            json!({ "error": e.to_string() }),
                        )
                    }
                };
                text.push_str("\nlifted assignment is uncolourable");
                j["lifted"] = json!(ListsFile::from_lists(&lifted));
                if let Some(cp) = certificate {
                    let cert = Certificate::reduction_chain(
                        &rec.contracted,
                        &small,
                        &[(g.clone(), vertex)],
                        "lifted through one contraction",
                    );
                    if let Err(e) = std::fs::write(cp, to_pretty(&cert)) {
                        return CommandOutput::usage(format!("cannot write {}: {e}", cp.display()));
                    }
                    text.push_str(&format!("\nchain certificate written to {}", cp.display()));
                }
            }
            CommandOutput::new(EXIT_OK, text, j)
        }
        ReduceOp::P5 { instance, path } => {
            let inst: InstanceFile = match read_json(instance) {
                Ok(i) => i,
                Err(e) => return e.into(),
            };
            let (g, l) = match (inst.graph.to_graph(), inst.lists.to_lists()) {
                (Ok(g), Ok(l)) => (g, l),
                (Err(e), _) | (_, Err(e)) => return e.into(),
            };
            let Some(path) = path.or_else(|| find_p5(&g)) else {
                return CommandOutput::usage("no path of five degree-2 vertices");
            };
            match p5_reduce(&g, path, &l) {
                Ok(r) => {
                    let text = format!(
                        "path {path:?} shortened ({}); new graph has {} vertices",
                        if r.padded { "profile padded" } else { "profile trimmed" },
                        r.record.contracted.n()
                    );
                    CommandOutput::new(
                        EXIT_OK,
                        text,
                        json!({
                            "graph": GraphFile::from_graph(&r.record.contracted),
                            "lists": ListsFile::from_lists(&r.lists),
                            "padded": r.padded,
                            "record": ContractionFile::from_record(&r.record),
                        }),
                    )
                }
                Err(e) => CommandOutput::usage(e.to_string()),
            }
        }
        ReduceOp::Shrink { graph } => {
            let g = match load_graph(graph) {
                Ok(g) => g,
                Err(e) => return e.into(),
            };
            let s = p5_shrink(&g);
            CommandOutput::new(
                EXIT_OK,
                format!("{} -> {} vertices", g.n(), s.n()),
                json!({ "graph": GraphFile::from_graph(&s) }),
            )
        }
    }
}
