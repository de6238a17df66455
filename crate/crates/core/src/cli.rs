//! Command-line front end. Every subcommand reads one graph (or none), calls
//! one library routine and prints its result as a single JSON document.
//!
//! Exit codes: 0 success or property holds, 1 property fails or a witness was
//! found where freeness was asked, 2 usage, parse or domain error, 3 search
//! budget or size limit exceeded.

use std::ffi::OsString;
use std::io::Read;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{is_chordal, parse_graph, structural_profile, Graph};
use crate::harness::{generate, run_suite, GeneratorKind, GeneratorSpec, SuiteConfig};
use crate::one_chord::{find_induced_one_chord, max_induced_cycle, max_one_chord_subgraph};
use crate::reduction::{build_reduction, verify_reduction};
use crate::separators::{
    all_minimal_separators, contractible_edges, enumerate_minimal_ab_edge_separators,
    enumerate_minimal_ab_separators, matching_edge_separator_property,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable holding the default search budget in milliseconds.
pub const BUDGET_ENV: &str = "SEPKIT_BUDGET_MS";

#[derive(Parser, Debug)]
#[command(
    name = "sepkit",
    version,
    about = "Exact analysis of minimal separators and 1-chord subgraphs"
)]
struct Cli {
    /// Wall-clock budget for exact searches, in milliseconds.
    #[arg(long, global = true)]
    budget_ms: Option<u64>,
    /// Node budget for exact searches.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural profile of a graph.
    Profile { input: String },
    /// Minimal vertex (or edge) separators of one pair.
    Separators {
        #[arg(long, num_args = 2, value_names = ["A", "B"], required = true)]
        pair: Vec<usize>,
        /// Edge separators instead of vertex separators.
        #[arg(long)]
        edges: bool,
        /// Stop after this many separators.
        #[arg(long)]
        cap: Option<usize>,
        input: String,
    },
    /// Verdict and witness for a graph property.
    Check {
        #[arg(long, value_enum)]
        property: Property,
        input: String,
    },
    /// Contractible and non-contractible edges.
    Contractible { input: String },
    /// Exact maximum, or any witness of at least the given size.
    Max {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        at_least: Option<usize>,
        input: String,
    },
    /// Gadget reduction instance.
    Reduce {
        #[arg(long)]
        k: usize,
        input: String,
    },
    /// Decide both sides of the reduction and compare.
    VerifyReduction {
        #[arg(long)]
        k: usize,
        input: String,
    },
    /// Run a named verification sweep.
    Suite {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        fail_fast: bool,
        /// One graph per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Gadget length for the reduction sweep; repeatable.
        #[arg(long = "k")]
        ks: Vec<usize>,
        /// Number of seeded random instances.
        #[arg(long)]
        random_count: Option<usize>,
    },
    /// Generate a graph as an edge list.
    Gen {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    OneChordFree,
    SeparatorsStable,
    MatchingEdgeSeps,
    Tree,
    Chordal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    OneChord,
    InducedCycle,
}

/// A property verdict with an optional witness against it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyVerdict {
    pub holds: bool,
    pub witness: Option<serde_json::Value>,
}

fn to_value<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("serializable")
}

/// Evaluates one property. Witnesses: a 1-chord subgraph, a non-stable
/// minimal separator, a non-matching minimal edge cut, an induced cycle (for
/// trees and chordality).
pub fn check_property(g: &Graph, property: Property, budget: &Budget) -> Result<PropertyVerdict> {
    let verdict = match property {
        Property::OneChordFree => {
            let w = find_induced_one_chord(g, budget)?;
            PropertyVerdict {
                holds: w.is_none(),
                witness: w.as_ref().map(to_value),
            }
        }
        Property::SeparatorsStable => {
            let all = all_minimal_separators(g);
            PropertyVerdict {
                holds: all.all_stable,
                witness: all.witness.as_ref().map(to_value),
            }
        }
        Property::MatchingEdgeSeps => {
            let m = matching_edge_separator_property(g)?;
            PropertyVerdict {
                holds: m.holds,
                witness: m.witness.as_ref().map(to_value),
            }
        }
        Property::Tree => {
            let holds = structural_profile(g).is_tree;
            // a disconnected forest has no cycle to show
            let cycle = if holds {
                None
            } else {
                max_induced_cycle(g, Some(3), budget)?
            };
            PropertyVerdict {
                holds,
                witness: cycle.as_ref().map(to_value),
            }
        }
        Property::Chordal => {
            let holds = is_chordal(g);
            let cycle = if holds {
                None
            } else {
                max_induced_cycle(g, Some(4), budget)?
            };
            PropertyVerdict {
                holds,
                witness: cycle.as_ref().map(to_value),
            }
        }
    };
    Ok(verdict)
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<Graph> {
    let text = if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Error::domain(format!("cannot read stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::domain(format!("cannot read {path}: {e}")))?
    };
    parse_graph(&text)
}

fn budget_from(cli: &Cli, env_ms: Option<u64>) -> Budget {
    Budget::new(
        cli.budget_ms.or(env_ms).map(Duration::from_millis),
        cli.budget_nodes,
    )
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn exit_for(holds: bool) -> i32 {
    if holds {
        EXIT_OK
    } else {
        EXIT_FAILS
    }
}

fn run(cli: &Cli, stdin: &mut dyn Read, env_ms: Option<u64>) -> Result<(String, i32)> {
    let budget = budget_from(cli, env_ms);
    let out = match &cli.command {
        Command::Profile { input } => {
            let g = read_input(input, stdin)?;
            (json_line(&structural_profile(&g)), EXIT_OK)
        }
        Command::Separators {
            pair,
            edges,
            cap,
            input,
        } => {
            let g = read_input(input, stdin)?;
            let (a, b) = (pair[0], pair[1]);
            if *edges {
                (
                    json_line(&enumerate_minimal_ab_edge_separators(&g, a, b, *cap)?),
                    EXIT_OK,
                )
            } else {
                (
                    json_line(&enumerate_minimal_ab_separators(&g, a, b, *cap)?),
                    EXIT_OK,
                )
            }
        }
        Command::Check { property, input } => {
            let g = read_input(input, stdin)?;
            let v = check_property(&g, *property, &budget)?;
            (json_line(&v), exit_for(v.holds))
        }
        Command::Contractible { input } => {
            let g = read_input(input, stdin)?;
            (json_line(&contractible_edges(&g)?), EXIT_OK)
        }
        Command::Max {
            target,
            at_least,
            input,
        } => {
            let g = read_input(input, stdin)?;
            let (size, witness) = match target {
                Target::OneChord => {
                    let w = max_one_chord_subgraph(&g, *at_least, &budget)?;
                    (w.as_ref().map(|w| w.size()), w.as_ref().map(to_value))
                }
                Target::InducedCycle => {
                    let w = max_induced_cycle(&g, *at_least, &budget)?;
                    (w.as_ref().map(|w| w.size()), w.as_ref().map(to_value))
                }
            };
            let name = match target {
                Target::OneChord => "one-chord",
                Target::InducedCycle => "induced-cycle",
            };
            let doc = json!({
                "target": name,
                "at_least": at_least,
                "exact": at_least.is_none(),
                "size": size,
                "witness": witness,
            });
            // a threshold nobody meets counts as a failed property
            let code = if at_least.is_some() && size.is_none() {
                EXIT_FAILS
            } else {
                EXIT_OK
            };
            (json_line(&doc), code)
        }
        Command::Reduce { k, input } => {
            let g = read_input(input, stdin)?;
            (json_line(&build_reduction(&g, *k)?), EXIT_OK)
        }
        Command::VerifyReduction { k, input } => {
            let g = read_input(input, stdin)?;
            let check = verify_reduction(&g, *k, &budget)?;
            (json_line(&check), exit_for(check.consistent))
        }
        Command::Suite {
            name,
            n_max,
            seed,
            jobs,
            fail_fast,
            dedup,
            ks,
            random_count,
        } => {
            let cfg = SuiteConfig {
                n_max: *n_max,
                seed: *seed,
                jobs: *jobs,
                fail_fast: *fail_fast,
                dedup: *dedup,
                ks: (!ks.is_empty()).then(|| ks.clone()),
                random_count: *random_count,
            };
            let report = run_suite(name, &cfg)?;
            (json_line(&report), exit_for(report.passed()))
        }
        Command::Gen { kind, n, p, seed } => {
            let kind: GeneratorKind = kind.parse()?;
            let g = generate(&GeneratorSpec {
                kind,
                n: *n,
                p: *p,
                seed: *seed,
            })?;
            (g.to_string(), EXIT_OK)
        }
    };
    Ok(out)
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::SelfLoop { .. } => "self_loop",
        Error::VertexOutOfRange { .. } => "range",
        Error::Domain(_) => "domain",
        Error::Resource(_) => "resource",
        Error::BudgetExceeded { .. } => "budget_exceeded",
        Error::Invariant(_) => "invariant",
    }
}

fn error_exit(e: &Error) -> i32 {
    match e {
        Error::Resource(_) | Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

/// Parses `argv` (program name first) and runs the chosen subcommand, reading
/// `-` inputs from `stdin`.
pub fn dispatch_with<I, T>(argv: I, stdin: &mut dyn Read, env_budget_ms: Option<u64>) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return Invocation {
                stdout,
                stderr,
                exit_code: code,
            };
        }
    };
    match run(&cli, stdin, env_budget_ms) {
        Ok((stdout, exit_code)) => Invocation {
            stdout,
            stderr: String::new(),
            exit_code,
        },
        Err(e) => {
            let mut error = json!({ "kind": error_kind(&e), "message": e.to_string() });
            if let Error::BudgetExceeded { nodes } = e {
                error["nodes"] = json!(nodes);
            }
            Invocation {
                stdout: json_line(&json!({ "error": error })),
                stderr: format!("sepkit: {e}\n"),
                exit_code: error_exit(&e),
            }
        }
    }
}

/// [`dispatch_with`] on the process's stdin and environment.
pub fn dispatch<I, T>(argv: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env_ms = std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok());
    dispatch_with(argv, &mut std::io::stdin().lock(), env_ms)
}
