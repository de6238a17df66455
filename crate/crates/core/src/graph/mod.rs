//! Immutable undirected simple graphs over dense vertex ids `0..n`.

mod chordal;
mod connectivity;
mod io;
mod sets;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub use chordal::{is_chordal, maximum_cardinality_search};
pub use connectivity::{
    cut_vertices, local_vertex_connectivity, structural_profile, vertex_connectivity,
    StructuralProfile,
};
pub use io::parse_graph;
pub use sets::{EdgeSet, SetClass, VertexSet};

pub type Vertex = usize;

/// An unordered vertex pair stored with the smaller id first.
pub type Edge = (Vertex, Vertex);

/// Normalizes a pair so the smaller id comes first.
#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge iterator. Repeated edges collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::domain(format!("self-loop on vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and deduplicates each list. Callers guarantee symmetry and no loops.
    fn from_raw_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut degree_sum = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Graph {
            adj,
            edge_count: degree_sum / 2,
        }
    }

    /// Builds a graph on at most 64 vertices from per-vertex neighbor masks.
    pub fn from_masks(masks: &[u64]) -> Self {
        let adj = masks
            .iter()
            .map(|&m| BitIter(m).collect::<Vec<_>>())
            .collect();
        Self::from_raw_adjacency(adj)
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Self::from_raw_adjacency(adj)
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_edge(&self, (u, v): Edge) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u != v && self.has_edge(u, v) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{{{u},{v}}} is not an edge of the graph"
            )))
        }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count * 2 == n * n.saturating_sub(1)
    }

    /// Per-vertex neighbor bitmasks, available for graphs on at most 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect(),
        )
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    /// Contracts edge `{u,v}`: `v` is merged into `u`, and the vertices above `v`
    /// shift down by one.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_edge(edge(u, v))?;
        let relabel = |x: Vertex| -> Vertex {
            let x = if x == v { u } else { x };
            if x > v {
                x - 1
            } else {
                x
            }
        };
        let edges: Vec<Edge> = self
            .edges()
            .filter(|&e| e != edge(u, v))
            .map(|(a, b)| edge(relabel(a), relabel(b)))
            .collect();
        Graph::from_edges(self.n() - 1, edges)
    }

    /// Membership flags for `set`, indexed by vertex id.
    pub(crate) fn membership(&self, set: &[Vertex]) -> Vec<bool> {
        let mut member = vec![false; self.n()];
        for &v in set {
            member[v] = true;
        }
        member
    }
}

/// The subgraph induced on a vertex set, relabeled densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `mapping[i]` is the original id of vertex `i` in `graph`.
    pub mapping: Vec<Vertex>,
}

impl InducedSubgraph {
    pub fn original(&self, v: Vertex) -> Vertex {
        self.mapping[v]
    }
}

/// `G[S]`, relabeled so that new ids follow the ascending order of `S`.
pub fn induced_subgraph(g: &Graph, set: &VertexSet) -> Result<InducedSubgraph> {
    for &v in set.iter() {
        g.check_vertex(v)?;
    }
    let mapping: Vec<Vertex> = set.iter().copied().collect();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in mapping.iter().enumerate() {
        index[v] = i;
    }
    let adj = mapping
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                .collect()
        })
        .collect();
    Ok(InducedSubgraph {
        graph: Graph::from_raw_adjacency(adj),
        mapping,
    })
}

/// Vertices reachable from `start` without entering a `blocked` vertex.
/// `start` itself must not be blocked.
pub(crate) fn reach(g: &Graph, start: Vertex, blocked: &[bool]) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] && !blocked[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Components of `G` minus the blocked vertices, ordered by least member.
pub(crate) fn components_avoiding(g: &Graph, blocked: &[bool]) -> Vec<VertexSet> {
    let mut label = vec![usize::MAX; g.n()];
    let mut parts = Vec::new();
    for s in g.vertices() {
        if blocked[s] || label[s] != usize::MAX {
            continue;
        }
        let id = parts.len();
        let mut members = vec![s];
        label[s] = id;
        let mut head = 0;
        while head < members.len() {
            let v = members[head];
            head += 1;
            for &w in g.neighbors(v) {
                if !blocked[w] && label[w] == usize::MAX {
                    label[w] = id;
                    members.push(w);
                }
            }
        }
        parts.push(VertexSet::from_unsorted(members));
    }
    parts
}

pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    components_avoiding(g, &vec![false; g.n()])
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || reach(g, 0, &vec![false; g.n()]).iter().all(|&x| x)
}

pub fn classify_set(g: &Graph, set: &VertexSet) -> Result<SetClass> {
    for &v in set.iter() {
        g.check_vertex(v)?;
    }
    let mut inside = 0usize;
    for (i, &u) in set.iter().enumerate() {
        for &v in &set.as_slice()[i + 1..] {
            if g.has_edge(u, v) {
                inside += 1;
            }
        }
    }
    let k = set.len();
    Ok(SetClass {
        is_stable: inside == 0,
        is_clique: inside == k * k.saturating_sub(1) / 2,
    })
}

/// True iff no two edges of `cut` share an endpoint.
pub fn is_matching(g: &Graph, cut: &EdgeSet) -> Result<bool> {
    let mut used = vec![false; g.n()];
    let mut ok = true;
    for &e in cut.iter() {
        g.check_edge(e)?;
        for x in [e.0, e.1] {
            ok &= !std::mem::replace(&mut used[x], true);
        }
    }
    Ok(ok)
}

/// Iterates the set bits of a `u64`, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}
