use super::{Graph, Vertex};

/// Maximum cardinality search. Returns the visit order; its reverse is a
/// perfect elimination ordering exactly when the graph is chordal.
/// Ties go to the smallest id.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// True iff the graph has no induced cycle of length at least 4.
pub fn is_chordal(g: &Graph) -> bool {
    let order = maximum_cardinality_search(g);
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // Every vertex's earlier neighbors must form a clique; it suffices that they
    // are all adjacent to the latest of them.
    order.iter().all(|&v| {
        let earlier: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] < position[v])
            .collect();
        match earlier.iter().copied().max_by_key(|&w| position[w]) {
            None => true,
            Some(parent) => earlier
                .iter()
                .all(|&w| w == parent || g.has_edge(w, parent)),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_small_cases() {
        assert!(is_chordal(&Graph::complete(5)));
        assert!(is_chordal(&Graph::path(6)));
        assert!(is_chordal(&Graph::cycle(3).unwrap()));
        assert!(!is_chordal(&Graph::cycle(4).unwrap()));
        assert!(!is_chordal(&Graph::cycle(7).unwrap()));
        let diamond = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap();
        assert!(is_chordal(&diamond));
        // C5 with one chord still contains an induced C4
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert!(!is_chordal(&g));
    }
}
