//! Exhaustive and seeded sweeps that cross-check the library against the
//! brute-force oracles and against the structural claims it implements.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::enumerate::{enumerate_all_graphs, enumerate_connected_graphs, MAX_ENUMERATION_ORDER};
use super::generate::{generate, GeneratorKind, GeneratorSpec};
use super::oracle;
use super::report::{Failure, Report, Tally};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{
    cut_vertices, is_chordal, is_connected, is_matching, structural_profile, vertex_connectivity,
    Graph, VertexSet,
};
use crate::one_chord::{
    cut_pieces, find_induced_one_chord, induces_one_chord, is_one_chord_graph, max_induced_cycle,
    max_one_chord_subgraph, verify_characterizations, PieceKind,
};
use crate::reduction::{
    build_reduction, extract_cycle_from_one_chord, forward_witness, verify_reduction,
};
use crate::separators::{
    all_minimal_separators, contractible_edges, enumerate_minimal_ab_edge_separators,
    enumerate_minimal_ab_separators, is_minimal_vertex_separator, is_vertex_separator,
    matching_edge_separator_property,
};

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 10] = [
    "theorem2",
    "theorem4",
    "lemma2",
    "lemma3",
    "lemma4",
    "dirac",
    "reduction",
    "recognition",
    "contractibility",
    "oracle_agreement",
];

const CHUNK: usize = 2048;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest exhaustive order; each suite has its own default.
    pub n_max: Option<usize>,
    pub seed: u64,
    /// Worker threads; 0 or 1 runs on one thread.
    pub jobs: usize,
    pub fail_fast: bool,
    /// Enumerate one graph per isomorphism class instead of every labeling.
    pub dedup: bool,
    /// Gadget lengths for the reduction suite.
    pub ks: Option<Vec<usize>>,
    /// Number of seeded random instances, for suites that use them.
    pub random_count: Option<usize>,
}

/// A graph to check plus a per-instance parameter (the gadget length for the
/// reduction suite, unused elsewhere).
struct Item {
    graph: Graph,
    k: usize,
}

impl Item {
    fn plain(graph: Graph) -> Self {
        Item { graph, k: 0 }
    }
}

/// Checked instance count plus failure details for one item.
#[derive(Default)]
struct Checked {
    count: u64,
    details: Vec<String>,
}

impl Checked {
    fn one() -> Self {
        Checked {
            count: 1,
            details: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.details.push(detail());
        }
    }
}

struct Runner<'a> {
    cfg: &'a SuiteConfig,
    pool: rayon::ThreadPool,
    tally: Tally,
    timings: BTreeMap<String, u64>,
}

impl<'a> Runner<'a> {
    fn new(cfg: &'a SuiteConfig) -> Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs.max(1))
            .build()
            .map_err(|e| Error::Resource(format!("cannot start worker pool: {e}")))?;
        Ok(Runner {
            cfg,
            pool,
            tally: Tally::default(),
            timings: BTreeMap::new(),
        })
    }

    fn stopped(&self) -> bool {
        self.cfg.fail_fast && !self.tally.failures.is_empty()
    }

    fn sweep<I, F>(&mut self, phase: &str, items: I, check: F)
    where
        I: IntoIterator<Item = Item>,
        F: Fn(&Item) -> Result<Checked> + Sync,
    {
        let start = Instant::now();
        let mut items = items.into_iter();
        while !self.stopped() {
            let chunk: Vec<Item> = items.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let part = self.pool.install(|| {
                chunk
                    .par_iter()
                    .map(|item| {
                        let checked = check(item).unwrap_or_else(|e| Checked {
                            count: 1,
                            details: vec![format!("error: {e}")],
                        });
                        let mut t = Tally {
                            checked: checked.count,
                            failures: checked
                                .details
                                .into_iter()
                                .map(|detail| Failure {
                                    graph: item.graph.to_string(),
                                    detail,
                                })
                                .collect(),
                        };
                        t.trim();
                        t
                    })
                    .reduce(Tally::default, Tally::merge)
            });
            self.tally = std::mem::take(&mut self.tally).merge(part);
        }
        *self.timings.entry(phase.to_string()).or_default() += start.elapsed().as_millis() as u64;
    }

    fn finish(self, suite: &str) -> Report {
        self.tally.into_report(suite, self.cfg.seed, self.timings)
    }
}

fn n_max(cfg: &SuiteConfig, default: usize) -> Result<usize> {
    let n = cfg.n_max.unwrap_or(default);
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::domain(format!(
            "n_max {n} exceeds the enumeration limit {MAX_ENUMERATION_ORDER}"
        )));
    }
    Ok(n)
}

fn connected_corpus(cfg: &SuiteConfig, n_max: usize) -> Result<impl Iterator<Item = Item>> {
    let streams = (1..=n_max)
        .map(|n| enumerate_connected_graphs(n, cfg.dedup))
        .collect::<Result<Vec<_>>>()?;
    Ok(streams.into_iter().flatten().map(Item::plain))
}

fn full_corpus(cfg: &SuiteConfig, n_max: usize) -> Result<impl Iterator<Item = Item>> {
    let streams = (1..=n_max)
        .map(|n| enumerate_all_graphs(n, cfg.dedup))
        .collect::<Result<Vec<_>>>()?;
    Ok(streams.into_iter().flatten().map(Item::plain))
}

/// Seeded G(n,p) instances with `2 <= n <= n_hi` and at least one edge.
fn random_graphs(seed: u64, count: usize, n_hi: usize) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=n_hi);
        let p = rng.gen_range(0.15..0.7);
        let g = generate(&GeneratorSpec::gnp(n, p, rng.gen()))?;
        if g.edge_count() > 0 {
            out.push(g);
        }
    }
    Ok(out)
}

/// Runs the named sweep and reports every counterexample found.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Report> {
    let mut runner = Runner::new(cfg)?;
    match name {
        "theorem2" => {
            let corpus = connected_corpus(cfg, n_max(cfg, 6)?)?;
            runner.sweep("exhaustive", corpus, check_stability_equivalence);
        }
        "theorem4" => {
            let corpus = connected_corpus(cfg, n_max(cfg, 6)?)?;
            runner.sweep("exhaustive", corpus, check_tree_matching);
        }
        "lemma2" => {
            let corpus = full_corpus(cfg, n_max(cfg, 6)?)?;
            runner.sweep("exhaustive", corpus, check_minimality_tests);
        }
        "lemma3" => {
            let corpus = connected_corpus(cfg, n_max(cfg, 7)?)?;
            runner.sweep("exhaustive", corpus, check_triangle_rule);
        }
        "lemma4" => {
            let corpus = connected_corpus(cfg, n_max(cfg, 7)?)?;
            runner.sweep("exhaustive", corpus, check_cut_pieces);
        }
        "dirac" => {
            let corpus = connected_corpus(cfg, n_max(cfg, 6)?)?;
            runner.sweep("exhaustive", corpus, check_clique_separators);
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let chordal = (0..cfg.random_count.unwrap_or(200))
                .map(|_| {
                    let spec =
                        GeneratorSpec::new(GeneratorKind::ChordalRandom, rng.gen_range(1..=12))
                            .with_p(rng.gen_range(0.2..0.9))
                            .with_seed(rng.gen());
                    generate(&spec).map(Item::plain)
                })
                .collect::<Result<Vec<_>>>()?;
            runner.sweep("generated", chordal, check_chordal_generator);
        }
        "reduction" => {
            let ks = cfg.ks.clone().unwrap_or_else(|| vec![3, 4]);
            let random_ks = cfg.ks.clone().unwrap_or_else(|| vec![3, 4, 5]);
            if ks.iter().chain(&random_ks).any(|&k| k < 3) {
                return Err(Error::domain("gadget lengths must be at least 3"));
            }
            // one-vertex sources have no edges to build gadgets from
            let corpus = connected_corpus(cfg, n_max(cfg, 5)?)?
                .filter(|item| item.graph.edge_count() > 0)
                .flat_map(|item| {
                    ks.iter()
                        .map(|&k| Item {
                            graph: item.graph.clone(),
                            k,
                        })
                        .collect::<Vec<_>>()
                });
            runner.sweep("exhaustive", corpus, check_reduction);
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let random = random_graphs(rng.gen(), cfg.random_count.unwrap_or(200), 7)?
                .into_iter()
                .map(|graph| Item {
                    graph,
                    k: random_ks[rng.gen_range(0..random_ks.len())],
                })
                .collect::<Vec<_>>();
            runner.sweep("random", random, check_reduction);
        }
        "recognition" => {
            let corpus = full_corpus(cfg, n_max(cfg, 7)?)?;
            runner.sweep("exhaustive", corpus, check_recognition);
        }
        "contractibility" => {
            let corpus = connected_corpus(cfg, n_max(cfg, 7)?)?;
            runner.sweep("exhaustive", corpus, check_contractibility);
        }
        "oracle_agreement" => {
            let corpus = connected_corpus(cfg, n_max(cfg, 7)?)?;
            runner.sweep("exhaustive", corpus, check_oracles);
            let random = random_graphs(cfg.seed, cfg.random_count.unwrap_or(500), 12)?;
            runner.sweep("random", random.into_iter().map(Item::plain), check_oracles);
        }
        other => {
            return Err(Error::domain(format!(
                "unknown suite `{other}`; expected one of {}",
                SUITES.join(", ")
            )))
        }
    }
    Ok(runner.finish(name))
}

fn unlimited() -> Budget {
    Budget::unlimited()
}

/// 1-chord freeness (witness search) against stability of every minimal
/// separator (separator enumeration).
fn check_stability_equivalence(item: &Item) -> Result<Checked> {
    let g = &item.graph;
    let r = verify_characterizations(g, &unlimited())?;
    let mut c = Checked::one();
    c.require(r.characterization_consistent, || {
        format!(
            "one_chord_free={} but all_separators_stable={}",
            r.one_chord_free, r.all_separators_stable
        )
    });
    if let Some(w) = &r.one_chord_witness {
        c.require(w.validate(g).is_ok(), || {
            format!("invalid 1-chord witness {w:?}")
        });
    }
    if let Some(s) = &r.separator_witness {
        c.require(!s.is_stable && s.is_minimal, || {
            format!("invalid separator witness {s:?}")
        });
    }
    Ok(c)
}

fn check_tree_matching(item: &Item) -> Result<Checked> {
    let g = &item.graph;
    let m = matching_edge_separator_property(g)?;
    let tree = structural_profile(g).is_tree;
    let mut c = Checked::one();
    c.require(m.holds == tree, || {
        format!("matching property {} but tree {}", m.holds, tree)
    });
    if let Some(w) = &m.witness {
        c.require(!is_matching(g, &w.cut)? && w.is_minimal, || {
            format!("invalid cut witness {w:?}")
        });
    }
    Ok(c)
}

/// Every separating set of every non-adjacent pair: the neighbor-based
/// minimality test against the subset definition.
fn check_minimality_tests(item: &Item) -> Result<Checked> {
    let g = &item.graph;
    let n = g.n();
    let mut c = Checked::default();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
            for bits in 0..(1u32 << rest.len()) {
                let s = VertexSet::from_unsorted(
                    rest.iter()
                        .enumerate()
                        .filter(|(i, _)| bits >> i & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect(),
                );
                if !is_vertex_separator(g, a, b, &s)? {
                    continue;
                }
                c.count += 1;
                let fast = is_minimal_vertex_separator(g, a, b, &s)?;
                let slow = oracle::is_minimal_by_subsets(g, a, b, &s)?;
                c.require(fast == slow, || {
                    format!(
                        "pair ({a},{b}) S={:?}: neighbor test {fast}, subset test {slow}",
                        s.as_slice()
                    )
                });
            }
        }
    }
    Ok(c)
}

/// 2-connected, non-complete and 1-chord free implies triangle free.
fn check_triangle_rule(item: &Item) -> Result<Checked> {
    let g = &item.graph;
    let mut c = Checked::one();
    let profile = structural_profile(g);
    if profile.vertex_connectivity >= 2 && !profile.is_complete && profile.has_triangle {
        let free = find_induced_one_chord(g, &unlimited())?.is_none();
        c.require(!free, || {
            "2-connected, non-complete, 1-chord free, but has a triangle".into()
        });
    }
    Ok(c)
}

/// In a 1-chord-free graph with a cut vertex, each component plus the cut
/// vertex is complete or 1-chord free.
fn check_cut_pieces(item: &Item) -> Result<Checked> {
    let g = &item.graph;
    let mut c = Checked::one();
    if cut_vertices(g).is_empty() || find_induced_one_chord(g, &unlimited())?.is_some() {
        return Ok(c);
    }
    for piece in cut_pieces(g, &unlimited())? {
        c.require(piece.kind != PieceKind::Neither, || {
            format!(
                "piece {:?} at cut vertex {} is neither complete nor 1-chord free",
                piece.vertices.as_slice(),
                piece.cut_vertex
            )
        });
    }
    Ok(c)
}

/// All minimal separators are cliques iff there is no induced cycle of
/// length at least 4.
fn check_clique_separators(item: &Item) -> Result<Checked> {
    let g = &item.graph;
    let mut c = Checked::one();
    let all_cliques = all_minimal_separators(g)
        .records
        .iter()
        .all(|r| r.is_clique);
    let no_long_cycle = oracle::max_induced_cycle_size(g)?.is_none_or(|s| s <= 3);
    c.require(all_cliques == no_long_cycle, || {
        format!("separators all cliques {all_cliques}, no induced cycle >= 4 {no_long_cycle}")
    });
    c.require(is_chordal(g) == no_long_cycle, || {
        format!(
            "chordality test {} disagrees with the cycle scan",
            is_chordal(g)
        )
    });
    Ok(c)
}

fn check_chordal_generator(item: &Item) -> Result<Checked> {
    let g = &item.graph;
    let mut c = Checked::one();
    let longest = max_induced_cycle(g, None, &unlimited())?.map_or(0, |w| w.size());
    c.require(longest <= 3, || {
        format!("generated graph has an induced {longest}-cycle")
    });
    c.require(is_connected(g), || "generated graph is disconnected".into());
    c.require(
        all_minimal_separators(g)
            .records
            .iter()
            .all(|r| r.is_clique),
        || "generated graph has a non-clique minimal separator".into(),
    );
    Ok(c)
}

/// Size formulas, both sides of the equivalence, and witness round trips.
fn check_reduction(item: &Item) -> Result<Checked> {
    let (g, k) = (&item.graph, item.k);
    let mut c = Checked::one();
    let r = build_reduction(g, k)?;
    let (n, m) = (g.n(), g.edge_count());
    c.require(r.target.n() == n + k * m, || {
        format!("k={k}: |V'| = {}", r.target.n())
    });
    c.require(r.target.edge_count() == (k + 2) * m, || {
        format!("k={k}: |E'| = {}", r.target.edge_count())
    });

    let check = verify_reduction(g, k, &unlimited())?;
    c.require(check.consistent, || {
        format!("k={k}: inconsistent {check:?}")
    });

    let budget = unlimited();
    if let Some(cycle) = max_induced_cycle(g, Some(k), &budget)? {
        let lifted = forward_witness(&r, &cycle)?;
        c.require(lifted.size() >= 2 * k, || {
            format!("k={k}: lifted witness has {} vertices", lifted.size())
        });
    }
    if let Some(w) = max_one_chord_subgraph(&r.target, Some(2 * k), &budget)? {
        let back = extract_cycle_from_one_chord(&r, &w)?;
        c.require(back.size() >= k && back.validate(g).is_ok(), || {
            format!(
                "k={k}: extracted cycle {:?} is not a valid answer",
                back.cycle
            )
        });
    }
    Ok(c)
}

fn check_recognition(item: &Item) -> Result<Checked> {
    let g = &item.graph;
    let mut c = Checked::one();
    let fast = is_one_chord_graph(g);
    let slow = oracle::is_one_chord_by_cyclic_order(g)?;
    c.require(fast == slow, || {
        format!("degree-based test {fast}, cyclic-order test {slow}")
    });
    let everything = VertexSet::from_unsorted(g.vertices().collect());
    let via_set = induces_one_chord(g, &everything)?.is_some();
    c.require(via_set == fast, || {
        format!("whole-vertex-set test {via_set}, graph test {fast}")
    });
    Ok(c)
}

/// Separator-based classification against κ of every contracted graph.
fn check_contractibility(item: &Item) -> Result<Checked> {
    let g = &item.graph;
    if g.is_complete() {
        return Ok(Checked::default());
    }
    let mut c = Checked::one();
    let report = contractible_edges(g)?;
    let k = oracle::brute_force_vertex_connectivity(g)?;
    c.require(report.k == k, || {
        format!("reported k={} but subset scan gives {k}", report.k)
    });
    for (u, v) in g.edges() {
        let contracted = g.contract_edge(u, v)?;
        let keeps = oracle::brute_force_vertex_connectivity(&contracted)? >= k;
        let listed = report.contractible.contains((u, v));
        c.require(keeps == listed, || {
            format!("edge ({u},{v}): classified contractible={listed}, contraction keeps k={keeps}")
        });
    }
    Ok(c)
}

/// Every fast routine against its brute-force counterpart.
fn check_oracles(item: &Item) -> Result<Checked> {
    let g = &item.graph;
    let n = g.n();
    let connected = is_connected(g);
    let mut c = Checked::one();
    let mut cuts_are_matchings = true;
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                let fast: Vec<VertexSet> = enumerate_minimal_ab_separators(g, a, b, None)?
                    .records
                    .into_iter()
                    .map(|r| r.separator)
                    .collect();
                let slow = oracle::brute_force_minimal_separators(g, a, b)?;
                c.require(fast == slow, || {
                    format!("vertex separators of ({a},{b}): {fast:?} vs {slow:?}")
                });
            }
            if connected {
                let fast: Vec<_> = enumerate_minimal_ab_edge_separators(g, a, b, None)?
                    .records
                    .into_iter()
                    .map(|r| r.cut)
                    .collect();
                let slow = oracle::brute_force_minimal_edge_separators(g, a, b)?;
                cuts_are_matchings &= slow.iter().all(oracle::cut_is_matching);
                c.require(fast == slow, || {
                    format!("edge separators of ({a},{b}): {fast:?} vs {slow:?}")
                });
            }
        }
    }
    if connected {
        let fast = matching_edge_separator_property(g)?.holds;
        c.require(fast == cuts_are_matchings, || {
            format!("matching property {fast} vs {cuts_are_matchings}")
        });
    }
    let (stable, clique) = oracle::brute_force_separator_shapes(g)?;
    let all = all_minimal_separators(g);
    c.require(all.all_stable == stable, || {
        format!("all separators stable {} vs {stable}", all.all_stable)
    });
    let fast_clique = all.records.iter().all(|r| r.is_clique);
    c.require(fast_clique == clique, || {
        format!("all separators cliques {fast_clique} vs {clique}")
    });

    let budget = unlimited();
    let cycle = max_induced_cycle(g, None, &budget)?;
    if let Some(w) = &cycle {
        c.require(w.validate(g).is_ok(), || {
            format!("invalid induced cycle {:?}", w.cycle)
        });
    }
    let slow = oracle::max_induced_cycle_size(g)?;
    let fast = cycle.map(|w| w.size());
    c.require(fast == slow, || {
        format!("max induced cycle {fast:?} vs {slow:?}")
    });

    let chord = max_one_chord_subgraph(g, None, &budget)?;
    if let Some(w) = &chord {
        c.require(w.validate(g).is_ok(), || {
            format!("invalid 1-chord witness {w:?}")
        });
    }
    let slow = oracle::max_one_chord_size(g)?;
    let fast = chord.map(|w| w.size());
    c.require(fast == slow, || {
        format!("max 1-chord subgraph {fast:?} vs {slow:?}")
    });

    let fast = vertex_connectivity(g);
    let slow = oracle::brute_force_vertex_connectivity(g)?;
    c.require(fast == slow, || {
        format!("vertex connectivity {fast} vs {slow}")
    });
    Ok(c)
}
