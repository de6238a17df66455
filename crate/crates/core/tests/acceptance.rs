//! Acceptance sweeps. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.
//!
//! Set `SEPKIT_EXTENDED=1` to widen the equivalence and oracle sweeps to every
//! labeled graph on 7 vertices (roughly half an hour on one core).

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use sepkit::harness::{generate, oracle, run_suite, GeneratorSpec, Report, SuiteConfig};
use sepkit::one_chord::{is_one_chord_graph, OneChordWitness};
use sepkit::{Graph, Result};

/// Counterexamples tolerated by every sweep.
const MAX_COUNTEREXAMPLES: usize = 0;
/// Wall-clock ceilings per criterion.
const EQUIVALENCE_TIME_LIMIT: Duration = Duration::from_secs(5 * 60);
const REDUCTION_TIME_LIMIT: Duration = Duration::from_secs(15 * 60);
/// Recognition on 10^5-vertex paths and cycles.
const RECOGNITION_ORDER: usize = 100_000;
const RECOGNITION_TIME_LIMIT: Duration = Duration::from_secs(1);
/// Exact 1-chord search on G(18, 0.3).
const PERF_ORDER: usize = 18;
const PERF_P: f64 = 0.3;
const PERF_SEEDS: std::ops::RangeInclusive<u64> = 1..=10;
const PERF_BUDGET_MS: u64 = 60_000;
/// Node budget small enough to force an overrun on the same instances.
const STARVED_BUDGET_NODES: u64 = 50;
/// Random instance counts.
const REDUCTION_RANDOM: usize = 200;
const ORACLE_RANDOM: usize = 500;
const SEED: u64 = 20_240_601;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    // the tolerance is pinned at zero but kept as a named bound
    #[allow(clippy::absurd_extreme_comparisons)]
    fn from_reports(reports: &[Report], elapsed: Duration, limit: Option<Duration>) -> Outcome {
        let checked: u64 = reports.iter().map(|r| r.instances_checked).sum();
        let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let mut detail = format!(
            "{checked} instances, {failures} counterexamples, {:.1}s",
            elapsed.as_secs_f64()
        );
        if let Some(f) = reports.iter().flat_map(|r| &r.failures).next() {
            detail.push_str(&format!("; first: {} on {:?}", f.detail, f.graph));
        }
        if !in_time {
            detail.push_str(&format!("; over the {}s limit", limit.unwrap().as_secs()));
        }
        Outcome {
            passed: failures <= MAX_COUNTEREXAMPLES && in_time && checked > 0,
            detail,
        }
    }
}

fn extended() -> bool {
    std::env::var("SEPKIT_EXTENDED").is_ok_and(|v| v == "1")
}

fn config(n_max: usize, dedup: bool) -> SuiteConfig {
    SuiteConfig {
        n_max: Some(n_max),
        seed: SEED,
        jobs: 1,
        dedup,
        ..SuiteConfig::default()
    }
}

/// Labeled graphs up to order 6 plus every isomorphism class on 7 vertices,
/// or all labeled graphs up to order 7 in extended mode.
fn small_corpus_sweep(suite: &str, extra: SuiteConfig) -> Result<Vec<Report>> {
    if extended() {
        return Ok(vec![run_suite(
            suite,
            &SuiteConfig {
                n_max: Some(7),
                ..extra
            },
        )?]);
    }
    let labeled = run_suite(
        suite,
        &SuiteConfig {
            n_max: Some(6),
            ..extra.clone()
        },
    )?;
    let classes = run_suite(
        suite,
        &SuiteConfig {
            n_max: Some(7),
            dedup: true,
            random_count: Some(0),
            ..extra
        },
    )?;
    Ok(vec![labeled, classes])
}

fn timed<F: FnOnce() -> Result<Vec<Report>>>(limit: Option<Duration>, f: F) -> Outcome {
    let start = Instant::now();
    match f() {
        Ok(reports) => Outcome::from_reports(&reports, start.elapsed(), limit),
        Err(e) => Outcome {
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

fn stability_equivalence() -> Outcome {
    timed(Some(EQUIVALENCE_TIME_LIMIT), || {
        small_corpus_sweep("theorem2", config(6, false))
    })
}

fn tree_matching_equivalence() -> Outcome {
    timed(Some(EQUIVALENCE_TIME_LIMIT), || {
        small_corpus_sweep("theorem4", config(6, false))
    })
}

fn minimality_tests_agree() -> Outcome {
    timed(None, || Ok(vec![run_suite("lemma2", &config(6, false))?]))
}

fn triangle_rule() -> Outcome {
    timed(None, || Ok(vec![run_suite("lemma3", &config(7, false))?]))
}

fn cut_piece_rule() -> Outcome {
    timed(None, || Ok(vec![run_suite("lemma4", &config(7, false))?]))
}

fn reduction_equivalence() -> Outcome {
    timed(Some(REDUCTION_TIME_LIMIT), || {
        let exhaustive = SuiteConfig {
            ks: Some(vec![3, 4]),
            random_count: Some(0),
            ..config(5, false)
        };
        let random = SuiteConfig {
            ks: Some(vec![3, 4, 5]),
            n_max: Some(0),
            random_count: Some(REDUCTION_RANDOM),
            ..config(5, false)
        };
        Ok(vec![
            run_suite("reduction", &exhaustive)?,
            run_suite("reduction", &random)?,
        ])
    })
}

fn recognition() -> Outcome {
    let start = Instant::now();
    let sweep = match run_suite("recognition", &config(7, false)) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                passed: false,
                detail: format!("error: {e}"),
            }
        }
    };
    let mut out = Outcome::from_reports(&[sweep], start.elapsed(), None);

    let n = RECOGNITION_ORDER;
    let mut with_chord: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    with_chord.push((0, n / 2));
    let cases = [
        ("path", Graph::path(n), false),
        ("cycle", Graph::cycle(n).expect("n >= 3"), false),
        (
            "cycle+chord",
            Graph::from_edges(n, with_chord).expect("valid edges"),
            true,
        ),
    ];
    for (name, g, expected) in cases {
        let t = Instant::now();
        let got = is_one_chord_graph(&g);
        let took = t.elapsed();
        out.detail
            .push_str(&format!("; {name}({n}) {:.3}s", took.as_secs_f64()));
        if got != expected || took > RECOGNITION_TIME_LIMIT {
            out.passed = false;
            out.detail.push_str(" FAILED");
        }
    }
    out
}

fn clique_separators() -> Outcome {
    timed(None, || Ok(vec![run_suite("dirac", &config(6, false))?]))
}

fn contractibility() -> Outcome {
    timed(None, || {
        Ok(vec![run_suite("contractibility", &config(7, false))?])
    })
}

fn oracle_agreement_and_determinism() -> Outcome {
    let mut out = timed(None, || {
        let mut reports = small_corpus_sweep(
            "oracle_agreement",
            SuiteConfig {
                random_count: Some(0),
                ..config(6, false)
            },
        )?;
        reports.push(run_suite(
            "oracle_agreement",
            &SuiteConfig {
                n_max: Some(0),
                random_count: Some(ORACLE_RANDOM),
                ..config(6, false)
            },
        )?);
        Ok(reports)
    });

    // same seed, same bytes, regardless of worker count
    let probes = [
        (
            "oracle_agreement",
            SuiteConfig {
                random_count: Some(60),
                ..config(5, false)
            },
        ),
        (
            "reduction",
            SuiteConfig {
                random_count: Some(40),
                ..config(4, false)
            },
        ),
        (
            "dirac",
            SuiteConfig {
                random_count: Some(40),
                ..config(5, false)
            },
        ),
    ];
    for (suite, cfg) in probes {
        let runs: Result<Vec<String>> = [1, 1, 2]
            .into_iter()
            .map(|jobs| {
                run_suite(
                    suite,
                    &SuiteConfig {
                        jobs,
                        ..cfg.clone()
                    },
                )
                .map(|r| r.deterministic_json())
            })
            .collect();
        match runs {
            Ok(runs) if runs.windows(2).all(|w| w[0] == w[1]) => {}
            Ok(_) => {
                out.passed = false;
                out.detail
                    .push_str(&format!("; {suite} reports differ between runs"));
            }
            Err(e) => {
                out.passed = false;
                out.detail.push_str(&format!("; {suite}: {e}"));
            }
        }
    }
    out.detail.push_str("; reports reproducible");
    out
}

fn performance_floor() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_sepkit");
    let dir = std::env::temp_dir().join(format!("sepkit-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let mut passed = true;
    let mut notes = Vec::new();
    let mut slowest = Duration::ZERO;
    for seed in PERF_SEEDS {
        let g = generate(&GeneratorSpec::gnp(PERF_ORDER, PERF_P, seed)).expect("valid spec");
        let path = dir.join(format!("gnp-{seed}.txt"));
        std::fs::write(&path, g.to_string()).expect("write instance");

        let start = Instant::now();
        let run = Command::new(bin)
            .args([
                "--budget-ms",
                &PERF_BUDGET_MS.to_string(),
                "max",
                "--target",
                "one-chord",
            ])
            .arg(&path)
            .output()
            .expect("run sepkit");
        slowest = slowest.max(start.elapsed());
        let doc: serde_json::Value = serde_json::from_slice(&run.stdout).unwrap_or_default();
        let expected =
            oracle::max_one_chord_size(&g).expect("18 vertices is within the oracle limit");
        let size = doc["size"].as_u64().map(|s| s as usize);
        let witness_ok = match &doc["witness"] {
            serde_json::Value::Null => true,
            w => {
                let cycle: Vec<usize> =
                    serde_json::from_value(w["cycle"].clone()).unwrap_or_default();
                let chord: [usize; 2] =
                    serde_json::from_value(w["chord"].clone()).unwrap_or([0, 0]);
                OneChordWitness::new(cycle, (chord[0], chord[1]))
                    .validate(&g)
                    .is_ok()
            }
        };
        if run.status.code() != Some(0) || size != expected || !witness_ok {
            passed = false;
            notes.push(format!(
                "seed {seed}: exit {:?}, size {size:?}, oracle {expected:?}",
                run.status.code()
            ));
        }

        let starved = Command::new(bin)
            .args([
                "--budget-nodes",
                &STARVED_BUDGET_NODES.to_string(),
                "max",
                "--target",
                "one-chord",
            ])
            .arg(&path)
            .output()
            .expect("run sepkit");
        let doc: serde_json::Value = serde_json::from_slice(&starved.stdout).unwrap_or_default();
        if starved.status.code() != Some(3)
            || doc["error"]["kind"] != "budget_exceeded"
            || !doc["size"].is_null()
        {
            passed = false;
            notes.push(format!(
                "seed {seed}: starved run exit {:?}",
                starved.status.code()
            ));
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    if slowest > Duration::from_millis(PERF_BUDGET_MS) {
        passed = false;
    }
    let mut detail = format!(
        "{} instances exact and oracle-confirmed, slowest {:.2}s; starved budgets exit 3",
        PERF_SEEDS.count(),
        slowest.as_secs_f64()
    );
    for n in notes {
        detail.push_str("; ");
        detail.push_str(&n);
    }
    Outcome { passed, detail }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "1-chord freeness <=> stable minimal separators",
            stability_equivalence,
        ),
        (
            "matching minimal edge cuts <=> tree",
            tree_matching_equivalence,
        ),
        (
            "neighbor minimality test <=> subset definition",
            minimality_tests_agree,
        ),
        (
            "2-connected non-complete 1-chord-free => triangle-free",
            triangle_rule,
        ),
        (
            "cut-vertex pieces are complete or 1-chord free",
            cut_piece_rule,
        ),
        (
            "gadget reduction equivalence and size formulas",
            reduction_equivalence,
        ),
        ("1-chord graph recognition", recognition),
        (
            "clique minimal separators <=> no long induced cycle",
            clique_separators,
        ),
        (
            "contractible edges <=> contraction keeps connectivity",
            contractibility,
        ),
        (
            "fast routines match brute force; reports reproducible",
            oracle_agreement_and_determinism,
        ),
        (
            "exact 1-chord search on G(18,0.3) within budget",
            performance_floor,
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status}: {name} ({})",
            i + 1,
            outcome.detail
        );
        if !outcome.passed {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
