//! Generators, exhaustive enumeration, brute-force oracles and the sweep
//! runner that produces pass/fail reports.

mod enumerate;
mod generate;
pub mod oracle;
mod report;
mod suite;

pub use enumerate::{
    canonical_code, enumerate_all_graphs, enumerate_connected_graphs, unlabeled_graphs,
    GraphStream, LabeledGraphs, MAX_ENUMERATION_ORDER,
};
pub use generate::{generate, petersen, GeneratorKind, GeneratorSpec};
pub use oracle::brute_force_minimal_separators;
pub use report::{Failure, Report, Verdict, FAILURE_CAP};
pub use suite::{run_suite, SuiteConfig, SUITES};
