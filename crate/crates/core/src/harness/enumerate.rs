//! Exhaustive small-graph enumeration, labeled or up to isomorphism.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 8;

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ENUMERATION_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )))
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn masks_from_code(n: usize, pairs: &[(usize, usize)], code: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for (bit, &(u, v)) in pairs.iter().enumerate() {
        if code >> bit & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

fn masks_connected(adj: &[u64]) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

/// Streams labeled graphs on `n` vertices in order of their edge bit code.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    connected_only: bool,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let code = self.next;
            self.next += 1;
            let adj = masks_from_code(self.n, &self.pairs, code);
            if !self.connected_only || masks_connected(&adj) {
                return Some(Graph::from_masks(&adj));
            }
        }
        None
    }
}

/// Either a labeled stream or a materialized list of isomorphism classes.
#[derive(Clone, Debug)]
pub enum GraphStream {
    Labeled(LabeledGraphs),
    Classes(std::vec::IntoIter<Graph>),
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self {
            GraphStream::Labeled(it) => it.next(),
            GraphStream::Classes(it) => it.next(),
        }
    }
}

fn stream(n: usize, connected_only: bool, dedup: bool) -> Result<GraphStream> {
    check_order(n)?;
    if dedup {
        let classes = unlabeled_graphs(n)
            .into_iter()
            .filter(|adj| !connected_only || masks_connected(adj))
            .map(|adj| Graph::from_masks(&adj))
            .collect::<Vec<_>>();
        return Ok(GraphStream::Classes(classes.into_iter()));
    }
    let pairs = pairs(n);
    Ok(GraphStream::Labeled(LabeledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
        connected_only,
    }))
}

/// Every connected graph on vertex set `0..n`, each exactly once. With
/// `dedup`, one canonical representative per isomorphism class instead.
pub fn enumerate_connected_graphs(n: usize, dedup: bool) -> Result<GraphStream> {
    stream(n, true, dedup)
}

/// Every graph on vertex set `0..n`, connected or not.
pub fn enumerate_all_graphs(n: usize, dedup: bool) -> Result<GraphStream> {
    stream(n, false, dedup)
}

/// Bit of pair `(i, j)`, `i < j`, in a canonical code on `n` vertices. Pairs
/// are ordered by larger endpoint, then smaller; earlier pairs are more
/// significant, so placing vertices in position order fixes the top bits first.
fn canonical_bit(n: usize, i: usize, j: usize) -> u32 {
    let total = n * (n - 1) / 2;
    (total - 1 - (j * (j - 1) / 2 + i)) as u32
}

fn masks_from_canonical_code(n: usize, code: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for j in 1..n {
        for i in 0..j {
            if code >> canonical_bit(n, i, j) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Smallest code over all vertex orderings that list vertices by
/// non-decreasing value of an isomorphism-invariant key. Isomorphic graphs
/// admit the same set of such codes, so the minimum is a canonical form.
pub fn canonical_code(adj: &[u64]) -> u64 {
    let n = adj.len();
    if n < 2 {
        return 0;
    }
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let keys: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n)
                .filter(|&w| adj[v] >> w & 1 == 1)
                .map(|w| deg[w])
                .collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    // vertices allowed at each position
    let mut class_at: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut start = 0;
    for p in 0..n {
        if p > 0 && keys[order[p]] != keys[order[p - 1]] {
            start = p;
        }
        let end = (p..n)
            .find(|&q| keys[order[q]] != keys[order[p]])
            .unwrap_or(n);
        class_at.push(order[start..end].to_vec());
    }
    let mut search = CodeSearch {
        adj,
        class_at,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.run(0);
    search.best.expect("at least one ordering")
}

struct CodeSearch<'a> {
    adj: &'a [u64],
    class_at: Vec<Vec<usize>>,
    placed: Vec<usize>,
    used: Vec<bool>,
    best: Option<u64>,
}

impl CodeSearch<'_> {
    fn run(&mut self, code: u64) {
        let n = self.adj.len();
        let pos = self.placed.len();
        if pos == n {
            self.best = Some(self.best.map_or(code, |b| b.min(code)));
            return;
        }
        for idx in 0..self.class_at[pos].len() {
            let v = self.class_at[pos][idx];
            if self.used[v] {
                continue;
            }
            let mut next = code;
            for (i, &u) in self.placed.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    next |= 1 << canonical_bit(n, i, pos);
                }
            }
            if let Some(best) = self.best {
                // bits of pairs among the first pos+1 positions are final
                let free = if pos == 0 {
                    n * (n - 1) / 2
                } else {
                    canonical_bit(n, pos - 1, pos) as usize
                };
                if next >> free > best >> free {
                    continue;
                }
            }
            self.placed.push(v);
            self.used[v] = true;
            self.run(next);
            self.used[v] = false;
            self.placed.pop();
        }
    }
}

/// All graphs on `n` vertices up to isomorphism, as canonical adjacency masks
/// sorted by canonical code. Built by adding one vertex to each class on
/// `n - 1` vertices in every possible way.
pub fn unlabeled_graphs(n: usize) -> Vec<Vec<u64>> {
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = masks_from_canonical_code(m - 1, code);
            for nbrs in 0..(1u64 << (m - 1)) {
                let mut adj = base.clone();
                adj.push(nbrs);
                for (u, row) in adj.iter_mut().enumerate().take(m - 1) {
                    if nbrs >> u & 1 == 1 {
                        *row |= 1 << (m - 1);
                    }
                }
                next.insert(canonical_code(&adj));
            }
        }
        level = next;
        if m == n {
            return level
                .iter()
                .map(|&c| masks_from_canonical_code(m, c))
                .collect();
        }
    }
    // n == 1 (or 0): the single graph with no edges
    vec![vec![0u64; n]]
}
