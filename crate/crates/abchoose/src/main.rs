use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use abchoose::commands::{self, CommandOutput, Knobs, ReduceOp, EXIT_USAGE};
use abchoose_core::SearchConfig;
use clap::{Parser, Subcommand};

/// Decide and certify (a:b)-choosability of small graphs.
///
/// Graph arguments accept a JSON file, a fixture (`@theta333-bad`) or a
/// family shorthand (`theta:2,4,4`, `cycle:5`, `two-cycles:4,1,4`, `k:2,4`).
/// Exit codes: 0 verified/choosable/colourable, 1 not choosable/invalid,
/// 2 inconclusive, 3 usage or parse error.
#[derive(Parser, Debug)]
#[command(name = "abchoose", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print JSON instead of text.
    #[arg(long, global = true, env = "ABCHOOSE_JSON")]
    json: bool,
    #[arg(long, global = true, default_value_t = 4, env = "ABCHOOSE_A")]
    a: usize,
    #[arg(long, global = true, default_value_t = 2, env = "ABCHOOSE_B")]
    b: usize,
    /// Multiplier: lists of size a·m, tuples of size b·m.
    #[arg(long, global = true, env = "ABCHOOSE_M")]
    m: Option<usize>,
    #[arg(long, global = true, env = "ABCHOOSE_BUDGET_NODES")]
    budget_nodes: Option<u64>,
    #[arg(long, global = true, env = "ABCHOOSE_BUDGET_ASSIGNMENTS")]
    budget_assignments: Option<u64>,
    #[arg(long, global = true, default_value_t = 1, env = "ABCHOOSE_WORKERS")]
    workers: usize,
    #[arg(long, global = true, env = "ABCHOOSE_UNIVERSE_CAP")]
    universe_cap: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Replay a certificate file.
    Verify { certificate: PathBuf },
    /// Structural classification, optionally backed by a search.
    Classify {
        graph: String,
        #[arg(long)]
        search: bool,
    },
    /// Colour a graph-plus-lists instance file.
    Solve { instance: PathBuf },
    /// Decide choosability by enumeration, or by cut search with --cut.
    Search {
        graph: String,
        /// `auto` or comma-separated vertices; G - X must be odd paths.
        #[arg(long, env = "ABCHOOSE_CUT")]
        cut: Option<String>,
        /// Write a bad-assignment certificate here when one is found.
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// X-sequence, S value, profile and colourability of a path list file.
    PathCheck { path_list: PathBuf },
    /// List and check the built-in fixtures.
    Fixtures {
        name: Option<String>,
        /// Write a certificate per fixture with lists into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Graph reductions.
    Reduce {
        #[command(subcommand)]
        op: Reduce,
    },
}

#[derive(Subcommand, Debug)]
enum Reduce {
    /// Delete a vertex and merge its neighbours; optionally lift bad lists back.
    Contract {
        graph: String,
        #[arg(long)]
        vertex: usize,
        /// Lists file for the contracted graph to lift.
        #[arg(long)]
        lift: Option<PathBuf>,
        /// Write a reduction-chain certificate for the lift.
        #[arg(long, requires = "lift")]
        certificate: Option<PathBuf>,
    },
    /// Shorten a path of five degree-2 vertices, carrying the lists along.
    P5 {
        instance: PathBuf,
        /// The five path vertices; found automatically when omitted.
        #[arg(long, value_delimiter = ',', num_args = 5)]
        path: Option<Vec<usize>>,
    },
    /// Contract degree-2 runs until none has five vertices.
    Shrink { graph: String },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let out = run(&cli);
    let rendered = out.render(cli.json);
    // a closed pipe (`| head`) is not an error worth reporting
    let _ = if out.code == EXIT_USAGE {
        writeln!(std::io::stderr(), "{rendered}")
    } else {
        writeln!(std::io::stdout(), "{rendered}")
    };
    ExitCode::from(out.code as u8)
}

fn run(cli: &Cli) -> CommandOutput {
    let knobs = Knobs {
        a: cli.a,
        b: cli.b,
        m: cli.m.unwrap_or(1),
        config: SearchConfig {
            node_budget: cli.budget_nodes,
            assignment_budget: cli.budget_assignments,
            universe_cap: cli.universe_cap,
            workers: cli.workers.max(1),
        },
    };
    if knobs.m == 0 || knobs.b == 0 || knobs.b > knobs.a {
        return CommandOutput::usage("need m >= 1 and 0 < b <= a");
    }
    match &cli.command {
        Command::Verify { certificate } => commands::verify(certificate),
        Command::Classify { graph, search } => commands::classify(graph, *search, &knobs),
        Command::Solve { instance } => commands::solve(instance),
        Command::Search {
            graph,
            cut,
            witness_out,
        } => commands::search(graph, cut.as_deref(), witness_out.as_deref(), &knobs),
        Command::PathCheck { path_list } => commands::path_check(path_list, cli.m),
        Command::Fixtures { name, export } => {
            commands::fixtures_cmd(name.as_deref(), export.as_deref())
        }
        Command::Reduce { op } => commands::reduce(match op {
            Reduce::Contract {
                graph,
                vertex,
                lift,
                certificate,
            } => ReduceOp::Contract {
                graph,
                vertex: *vertex,
                lift: lift.as_deref(),
                certificate: certificate.as_deref(),
            },
            Reduce::P5 { instance, path } => ReduceOp::P5 {
                instance,
                path: path.as_ref().map(|p| [p[0], p[1], p[2], p[3], p[4]]),
            },
            Reduce::Shrink { graph } => ReduceOp::Shrink { graph },
        }),
    }
}
