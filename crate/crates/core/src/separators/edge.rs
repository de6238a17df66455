use std::collections::VecDeque;
use std::ops::ControlFlow;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::{for_each_connected_set, Enumeration};
use crate::error::{Error, Result};
use crate::graph::{edge, is_connected, is_matching, EdgeSet, Graph, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSeparatorRecord {
    pub a: Vertex,
    pub b: Vertex,
    pub cut: EdgeSet,
    pub is_minimal: bool,
    pub is_matching: bool,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl Serialize for EdgeSeparatorRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("EdgeSeparatorRecord", 4)?;
        s.serialize_field("pair", &[self.a, self.b])?;
        s.serialize_field("cut", &self.cut)?;
        s.serialize_field("minimal", &self.is_minimal)?;
        s.serialize_field("matching", &self.is_matching)?;
        s.end()
    }
}

/// Vertices reachable from `start` in `G - cut`.
fn reach_without_edges(g: &Graph, start: Vertex, cut: &EdgeSet) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] && !cut.contains(edge(v, w)) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

fn check_cut_input(g: &Graph, a: Vertex, b: Vertex, cut: &EdgeSet) -> Result<()> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(Error::domain(format!(
            "pair ({a},{b}) must consist of distinct vertices"
        )));
    }
    cut.iter().try_for_each(|&e| g.check_edge(e))
}

/// True iff removing the edges of `cut` leaves `a` and `b` in different components.
pub fn is_edge_separator(g: &Graph, a: Vertex, b: Vertex, cut: &EdgeSet) -> Result<bool> {
    check_cut_input(g, a, b, cut)?;
    Ok(!reach_without_edges(g, a, cut)[b])
}

/// A separating cut is minimal iff each of its edges joins the component of
/// `a` to the component of `b` in `G - cut`: putting any such edge back
/// reconnects them, while an edge elsewhere can be dropped from the cut.
pub fn is_minimal_edge_separator(g: &Graph, a: Vertex, b: Vertex, cut: &EdgeSet) -> Result<bool> {
    check_cut_input(g, a, b, cut)?;
    let side_a = reach_without_edges(g, a, cut);
    if side_a[b] {
        return Err(Error::domain(format!("cut does not separate {a} from {b}")));
    }
    let side_b = reach_without_edges(g, b, cut);
    Ok(cut
        .iter()
        .all(|&(u, v)| (side_a[u] && side_b[v]) || (side_a[v] && side_b[u])))
}

/// All minimal `(a,b)` edge separators of a connected graph: the cuts `δ(A)`
/// over bipartitions with `a ∈ A`, `b ∉ A`, and both sides connected. Ordered
/// by size, then lexicographically.
pub fn enumerate_minimal_ab_edge_separators(
    g: &Graph,
    a: Vertex,
    b: Vertex,
    cap: Option<usize>,
) -> Result<Enumeration<EdgeSeparatorRecord>> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(Error::domain(format!(
            "pair ({a},{b}) must consist of distinct vertices"
        )));
    }
    if !is_connected(g) {
        return Err(Error::domain(
            "edge separator enumeration needs a connected graph",
        ));
    }
    let mut allowed = vec![true; g.n()];
    allowed[b] = false;
    let mut records = Vec::new();
    let mut truncated = false;
    for_each_connected_set(g, a, &allowed, |in_set, members| {
        if !complement_connected(g, in_set, b, members.len()) {
            return ControlFlow::Continue(());
        }
        if cap.is_some_and(|c| records.len() >= c) {
            truncated = true;
            return ControlFlow::Break(());
        }
        let mut cut = Vec::new();
        for &v in members {
            for &w in g.neighbors(v) {
                if !in_set[w] {
                    cut.push(edge(v, w));
                }
            }
        }
        let cut = EdgeSet::from_unsorted(cut);
        records.push(EdgeSeparatorRecord {
            a,
            b,
            is_matching: is_matching(g, &cut).expect("cut edges belong to the graph"),
            is_minimal: true,
            side_a: VertexSet::from_flags(in_set),
            side_b: VertexSet::from_flags(&in_set.iter().map(|&x| !x).collect::<Vec<_>>()),
            cut,
        });
        ControlFlow::Continue(())
    });
    records.sort_by(|x, y| x.cut.size_lex_cmp(&y.cut));
    Ok(Enumeration { records, truncated })
}

fn complement_connected(g: &Graph, in_set: &[bool], b: Vertex, set_size: usize) -> bool {
    let mut seen = vec![false; g.n()];
    seen[b] = true;
    let mut count = 1;
    let mut stack = vec![b];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !in_set[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count + set_size == g.n()
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MatchingProperty {
    pub holds: bool,
    pub witness: Option<EdgeSeparatorRecord>,
}

/// Whether every minimal `(a,b)` edge separator, over all pairs, is a matching.
/// The witness is the first non-matching cut in pair order, then cut order.
pub fn matching_edge_separator_property(g: &Graph) -> Result<MatchingProperty> {
    if g.n() == 0 {
        return Err(Error::domain("the empty graph has no vertex pairs"));
    }
    if !is_connected(g) {
        return Err(Error::domain(
            "matching edge separator property needs a connected graph",
        ));
    }
    for a in g.vertices() {
        for b in a + 1..g.n() {
            let cuts = enumerate_minimal_ab_edge_separators(g, a, b, None)?;
            if let Some(w) = cuts.records.into_iter().find(|r| !r.is_matching) {
                return Ok(MatchingProperty {
                    holds: false,
                    witness: Some(w),
                });
            }
        }
    }
    Ok(MatchingProperty {
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
fn boundary(g: &Graph, side: &[bool]) -> Vec<crate::graph::Edge> {
    g.edges().filter(|&(u, v)| side[u] != side[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn es(e: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_unsorted(e.to_vec())
    }

    fn cuts(g: &Graph, a: usize, b: usize) -> Vec<Vec<(usize, usize)>> {
        enumerate_minimal_ab_edge_separators(g, a, b, None)
            .unwrap()
            .records
            .iter()
            .map(|r| r.cut.as_slice().to_vec())
            .collect()
    }

    #[test]
    fn minimality_examples() {
        // P3 with a=0, c=2, b=1
        let p3 = Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
        assert!(is_minimal_edge_separator(&p3, 0, 1, &es(&[(0, 2)])).unwrap());

        let tri = Graph::complete(3);
        let cut = es(&[(0, 1), (0, 2)]);
        assert!(is_minimal_edge_separator(&tri, 0, 1, &cut).unwrap());
        assert!(!is_matching(&tri, &cut).unwrap());
        assert!(!is_minimal_edge_separator(&tri, 0, 1, &es(&[(0, 1), (0, 2), (1, 2)])).unwrap());

        assert!(is_minimal_edge_separator(&tri, 0, 1, &es(&[(0, 1)])).is_err());
        assert!(is_minimal_edge_separator(&p3, 0, 1, &es(&[(0, 1)])).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let p3 = Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
        assert_eq!(cuts(&p3, 0, 1), vec![vec![(0, 2)], vec![(1, 2)]]);

        let tri = Graph::complete(3);
        assert_eq!(
            cuts(&tri, 0, 1),
            vec![vec![(0, 1), (0, 2)], vec![(0, 1), (1, 2)]]
        );

        // C4 as a=0, u=1, b=2, v=3
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            cuts(&c4, 0, 2),
            vec![
                vec![(0, 1), (0, 3)],
                vec![(0, 1), (2, 3)],
                vec![(0, 3), (1, 2)],
                vec![(1, 2), (2, 3)],
            ]
        );

        let disconnected = Graph::empty(2);
        assert!(enumerate_minimal_ab_edge_separators(&disconnected, 0, 1, None).is_err());
    }

    #[test]
    fn every_cut_is_the_full_boundary() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4)]).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                if a == b {
                    continue;
                }
                for r in enumerate_minimal_ab_edge_separators(&g, a, b, None)
                    .unwrap()
                    .records
                {
                    let side: Vec<bool> = (0..5).map(|v| r.side_a.contains(v)).collect();
                    assert_eq!(r.cut.as_slice(), boundary(&g, &side).as_slice());
                    assert!(!r.cut.is_empty());
                    assert!(is_minimal_edge_separator(&g, a, b, &r.cut).unwrap());
                }
            }
        }
    }

    #[test]
    fn matching_property_examples() {
        let tree = Graph::from_edges(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        let p = matching_edge_separator_property(&tree).unwrap();
        assert!(p.holds && p.witness.is_none());
        for a in 0..6 {
            for b in a + 1..6 {
                for r in enumerate_minimal_ab_edge_separators(&tree, a, b, None)
                    .unwrap()
                    .records
                {
                    assert_eq!(r.cut.len(), 1);
                }
            }
        }

        let tri = matching_edge_separator_property(&Graph::complete(3)).unwrap();
        assert!(!tri.holds);
        assert_eq!(tri.witness.unwrap().cut, es(&[(0, 1), (0, 2)]));

        let c4 = matching_edge_separator_property(&Graph::cycle(4).unwrap()).unwrap();
        assert!(!c4.holds);
        // pair (0,1) comes first; A = {0} gives the non-matching cut around vertex 0
        assert_eq!(c4.witness.unwrap().cut, es(&[(0, 1), (0, 3)]));
    }
}
