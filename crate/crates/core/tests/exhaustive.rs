//! Exhaustive checks over every small labeled graph.

use sepkit::graph::{classify_set, connected_components, induced_subgraph};
use sepkit::harness::{enumerate_all_graphs, run_suite, SuiteConfig, SUITES};
use sepkit::VertexSet;

#[test]
fn induced_subgraphs_of_every_graph_up_to_six_vertices() {
    for n in 1..=6 {
        for g in enumerate_all_graphs(n, false).unwrap() {
            let parts = connected_components(&g);
            assert_eq!(parts.iter().map(VertexSet::len).sum::<usize>(), n);
            for mask in 0u64..1 << n {
                let s = VertexSet::from_mask(mask);
                let sub = induced_subgraph(&g, &s).unwrap();
                assert_eq!(sub.graph.n(), s.len());
                let inner = g
                    .edges()
                    .filter(|&(u, v)| s.contains(u) && s.contains(v))
                    .count();
                assert_eq!(sub.graph.edge_count(), inner);
                for (u, v) in sub.graph.edges() {
                    assert!(g.has_edge(sub.original(u), sub.original(v)));
                }
                let c = classify_set(&g, &s).unwrap();
                assert_eq!(c.is_stable && c.is_clique, s.len() <= 1);
            }
        }
    }
}

#[test]
fn dedup_never_changes_a_verdict() {
    for suite in SUITES {
        let verdicts: Vec<bool> = [false, true]
            .into_iter()
            .map(|dedup| {
                let cfg = SuiteConfig {
                    n_max: Some(5),
                    dedup,
                    random_count: Some(20),
                    ..SuiteConfig::default()
                };
                run_suite(suite, &cfg).unwrap().passed()
            })
            .collect();
        assert_eq!(verdicts, [true, true], "{suite}");
    }
}
