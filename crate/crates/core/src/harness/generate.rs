use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    RandomGnp,
    TreeRandom,
    Cycle,
    Complete,
    Path,
    ChordalRandom,
    Star,
    Petersen,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 8] = [
        GeneratorKind::RandomGnp,
        GeneratorKind::TreeRandom,
        GeneratorKind::Cycle,
        GeneratorKind::Complete,
        GeneratorKind::Path,
        GeneratorKind::ChordalRandom,
        GeneratorKind::Star,
        GeneratorKind::Petersen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::RandomGnp => "random_gnp",
            GeneratorKind::TreeRandom => "tree_random",
            GeneratorKind::Cycle => "cycle",
            GeneratorKind::Complete => "complete",
            GeneratorKind::Path => "path",
            GeneratorKind::ChordalRandom => "chordal_random",
            GeneratorKind::Star => "star",
            GeneratorKind::Petersen => "petersen",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown generator kind `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    /// Edge probability for `random_gnp`; clique growth probability for
    /// `chordal_random`. Ignored by the other kinds.
    pub p: f64,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, n: usize) -> Self {
        GeneratorSpec {
            kind,
            n,
            p: 0.5,
            seed: 0,
        }
    }

    pub fn gnp(n: usize, p: f64, seed: u64) -> Self {
        GeneratorSpec {
            kind: GeneratorKind::RandomGnp,
            n,
            p,
            seed,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_p(mut self, p: f64) -> Self {
        self.p = p;
        self
    }
}

/// Builds the graph a spec describes. The same spec always yields the same
/// graph.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    let n = spec.n;
    if n < 1 {
        return Err(Error::domain("generators need n >= 1"));
    }
    if !(0.0..=1.0).contains(&spec.p) {
        return Err(Error::domain(format!(
            "p must lie in [0,1], got {}",
            spec.p
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.kind {
        GeneratorKind::RandomGnp => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(spec.p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
        GeneratorKind::TreeRandom => {
            // random recursive tree under a random labeling
            let mut labels: Vec<usize> = (0..n).collect();
            labels.shuffle(&mut rng);
            let edges: Vec<Edge> = (1..n)
                .map(|v| (labels[rng.gen_range(0..v)], labels[v]))
                .collect();
            Graph::from_edges(n, edges)
        }
        GeneratorKind::Cycle => Graph::cycle(n),
        GeneratorKind::Complete => Ok(Graph::complete(n)),
        GeneratorKind::Path => Ok(Graph::path(n)),
        GeneratorKind::Star => Graph::from_edges(n, (1..n).map(|v| (0, v))),
        GeneratorKind::Petersen => {
            if n != 10 {
                return Err(Error::domain(format!(
                    "the Petersen graph has 10 vertices, got n = {n}"
                )));
            }
            Ok(petersen())
        }
        GeneratorKind::ChordalRandom => Ok(chordal_random(n, spec.p, &mut rng)),
    }
}

/// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    Graph::from_edges(10, edges).expect("valid Petersen edges")
}

/// Each new vertex is joined to a clique of the current graph, so every
/// vertex is simplicial when added and the result is chordal and connected.
fn chordal_random(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let anchor = rng.gen_range(0..v);
        let mut clique = vec![anchor];
        let mut others: Vec<usize> = (0..v).filter(|&u| adj[anchor][u]).collect();
        others.shuffle(rng);
        for u in others {
            if clique.iter().all(|&c| adj[c][u]) && rng.gen_bool(p) {
                clique.push(u);
            }
        }
        for &c in &clique {
            adj[c][v] = true;
            adj[v][c] = true;
            edges.push((c, v));
        }
    }
    Graph::from_edges(n, edges).expect("valid chordal edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_chordal, is_connected, structural_profile};

    #[test]
    fn fixed_shapes() {
        assert_eq!(
            generate(&GeneratorSpec::new(GeneratorKind::Cycle, 5)).unwrap(),
            Graph::cycle(5).unwrap()
        );
        assert_eq!(
            generate(&GeneratorSpec::new(GeneratorKind::Complete, 4)).unwrap(),
            Graph::complete(4)
        );
        let star = generate(&GeneratorSpec::new(GeneratorKind::Star, 5)).unwrap();
        assert_eq!(star.degree_sequence(), vec![4, 1, 1, 1, 1]);
        let pet = generate(&GeneratorSpec::new(GeneratorKind::Petersen, 10)).unwrap();
        assert_eq!(pet.edge_count(), 15);
        assert_eq!(structural_profile(&pet).vertex_connectivity, 3);
    }

    #[test]
    fn gnp_is_deterministic() {
        let spec = GeneratorSpec::gnp(8, 0.4, 7);
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        assert_eq!(a.to_string(), b.to_string());
        assert_ne!(a, generate(&spec.clone().with_seed(8)).unwrap());
    }

    #[test]
    fn trees_and_chordal_graphs() {
        for seed in 0..20 {
            let t = generate(&GeneratorSpec::new(GeneratorKind::TreeRandom, 9).with_seed(seed))
                .unwrap();
            assert!(structural_profile(&t).is_tree);
            let c = generate(&GeneratorSpec::new(GeneratorKind::ChordalRandom, 10).with_seed(seed))
                .unwrap();
            assert!(is_chordal(&c) && is_connected(&c));
        }
    }

    #[test]
    fn invalid_specs() {
        assert!(generate(&GeneratorSpec::new(GeneratorKind::Path, 0)).is_err());
        assert!(generate(&GeneratorSpec::gnp(5, 1.5, 0)).is_err());
        assert!(generate(&GeneratorSpec::gnp(5, f64::NAN, 0)).is_err());
        assert!(generate(&GeneratorSpec::new(GeneratorKind::Cycle, 2)).is_err());
        assert!(generate(&GeneratorSpec::new(GeneratorKind::Petersen, 9)).is_err());
        assert!("wheel".parse::<GeneratorKind>().is_err());
        assert_eq!(
            "chordal_random".parse::<GeneratorKind>().unwrap(),
            GeneratorKind::ChordalRandom
        );
    }
}
