use std::collections::VecDeque;

use serde::Serialize;

use super::{is_connected, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralProfile {
    pub is_connected: bool,
    pub is_tree: bool,
    pub is_complete: bool,
    pub has_triangle: bool,
    pub vertex_connectivity: usize,
    /// Non-increasing.
    pub degree_sequence: Vec<usize>,
}

pub fn structural_profile(g: &Graph) -> StructuralProfile {
    let connected = is_connected(g);
    StructuralProfile {
        is_connected: connected,
        is_tree: connected && g.n() >= 1 && g.edge_count() + 1 == g.n(),
        is_complete: g.is_complete(),
        has_triangle: has_triangle(g),
        vertex_connectivity: vertex_connectivity(g),
        degree_sequence: g.degree_sequence(),
    }
}

fn has_triangle(g: &Graph) -> bool {
    g.edges().any(|(u, v)| {
        // sorted-list intersection
        let (mut a, mut b) = (
            g.neighbors(u).iter().peekable(),
            g.neighbors(v).iter().peekable(),
        );
        while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
            match x.cmp(&y) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    })
}

/// κ(G): `n-1` for complete graphs, 0 for disconnected ones, otherwise the
/// minimum over non-adjacent pairs of the number of internally vertex-disjoint
/// paths between them.
///
/// Only pairs whose first vertex is among the first κ+1 ids are examined: some
/// vertex among them lies outside a minimum separator, and every vertex of
/// another side of that separator has a larger id.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !is_connected(g) {
        return 0;
    }
    let mut best = n - 1;
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_vertex_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths, capped at `limit`.
/// `s` and `t` must be distinct and non-adjacent.
pub fn local_vertex_connectivity(g: &Graph, s: Vertex, t: Vertex, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g, s, t);
    let mut flow = 0;
    while flow < limit && net.augment() {
        flow += 1;
    }
    flow
}

/// Unit-capacity flow network with every vertex split into an in-node `2v`
/// and an out-node `2v+1`.
struct SplitNetwork {
    head: Vec<usize>,
    // arcs: (to, next, capacity)
    arcs: Vec<(usize, usize, u32)>,
    source: usize,
    sink: usize,
}

impl SplitNetwork {
    const NONE: usize = usize::MAX;

    fn new(g: &Graph, s: Vertex, t: Vertex) -> Self {
        let mut net = SplitNetwork {
            head: vec![Self::NONE; 2 * g.n()],
            arcs: Vec::with_capacity(4 * (g.n() + 2 * g.edge_count())),
            source: 2 * s + 1,
            sink: 2 * t,
        };
        for v in g.vertices() {
            net.add_arc(2 * v, 2 * v + 1, 1);
            for &w in g.neighbors(v) {
                net.add_arc(2 * v + 1, 2 * w, 1);
            }
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.arcs.push((to, self.head[from], cap));
        self.head[from] = self.arcs.len() - 1;
        self.arcs.push((from, self.head[to], 0));
        self.head[to] = self.arcs.len() - 1;
    }

    /// One BFS augmenting path; returns false when none exists.
    fn augment(&mut self) -> bool {
        let mut via = vec![Self::NONE; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(x) = queue.pop_front() {
            let mut a = self.head[x];
            while a != Self::NONE {
                let (to, next, cap) = self.arcs[a];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    via[to] = a;
                    if to == self.sink {
                        let mut y = to;
                        while y != self.source {
                            let arc = via[y];
                            self.arcs[arc].2 -= 1;
                            self.arcs[arc ^ 1].2 += 1;
                            y = self.arcs[arc ^ 1].0;
                        }
                        return true;
                    }
                    queue.push_back(to);
                }
                a = next;
            }
        }
        false
    }
}

/// Articulation points in ascending order.
pub fn cut_vertices(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent, idx) = *frame;
            if idx < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[idx];
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    g.vertices().filter(|&v| is_cut[v]).collect()
}
