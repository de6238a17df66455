use super::witness::OneChordWitness;
use crate::error::Result;
use crate::graph::{induced_subgraph, Edge, Graph, Vertex, VertexSet};

/// Walks the cycle left after deleting `skip`. Returns the vertex order if the
/// remaining graph is a single cycle through every vertex; every vertex other
/// than the ends of `skip` must have degree 2.
fn hamiltonian_cycle_without(h: &Graph, skip: Edge) -> Option<Vec<Vertex>> {
    let n = h.n();
    let nbrs = |v: Vertex| {
        h.neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| (v.min(w), v.max(w)) != skip)
    };
    let mut order = Vec::with_capacity(n);
    let (mut prev, mut cur) = (usize::MAX, skip.0);
    loop {
        order.push(cur);
        if order.len() > n {
            return None;
        }
        let next = nbrs(cur).find(|&w| w != prev)?;
        prev = cur;
        cur = next;
        if cur == skip.0 {
            break;
        }
    }
    (order.len() == n).then_some(order)
}

/// Recognizes a 1-chord graph in linear time: degree sequence (3,3,2,...,2),
/// the two degree-3 vertices adjacent, and deleting the edge between them
/// leaves a Hamiltonian cycle.
pub fn is_one_chord_graph(h: &Graph) -> bool {
    one_chord_structure(h).is_some()
}

/// The cycle order and chord of a 1-chord graph, or `None`.
pub(crate) fn one_chord_structure(h: &Graph) -> Option<(Vec<Vertex>, Edge)> {
    let n = h.n();
    if n < 4 || h.edge_count() != n + 1 {
        return None;
    }
    let mut hubs = Vec::with_capacity(2);
    for v in h.vertices() {
        match h.degree(v) {
            2 => {}
            3 if hubs.len() < 2 => hubs.push(v),
            _ => return None,
        }
    }
    let [x, y] = hubs[..] else { return None };
    if !h.has_edge(x, y) {
        return None;
    }
    let order = hamiltonian_cycle_without(h, (x, y))?;
    Some((order, (x, y)))
}

/// The witness for `G[S]`, when `G[S]` is a 1-chord graph.
pub fn induces_one_chord(g: &Graph, set: &VertexSet) -> Result<Option<OneChordWitness>> {
    let sub = induced_subgraph(g, set)?;
    Ok(one_chord_structure(&sub.graph).map(|(order, (x, y))| {
        OneChordWitness::new(
            order.into_iter().map(|v| sub.original(v)).collect(),
            (sub.original(x), sub.original(y)),
        )
    }))
}
