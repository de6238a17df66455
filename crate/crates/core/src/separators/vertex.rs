use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::{for_each_connected_set, Enumeration};
use crate::error::{Error, Result};
use crate::graph::{classify_set, reach, Graph, Vertex, VertexSet};

/// A vertex set separating `a` from `b`, with its classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSeparatorRecord {
    pub a: Vertex,
    pub b: Vertex,
    pub separator: VertexSet,
    pub is_minimal: bool,
    pub is_stable: bool,
    pub is_clique: bool,
    /// Component of `a` in `G - S`.
    pub side_a: VertexSet,
    /// Component of `b` in `G - S`.
    pub side_b: VertexSet,
}

impl Serialize for VertexSeparatorRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("VertexSeparatorRecord", 5)?;
        s.serialize_field("pair", &[self.a, self.b])?;
        s.serialize_field("S", &self.separator)?;
        s.serialize_field("minimal", &self.is_minimal)?;
        s.serialize_field("stable", &self.is_stable)?;
        s.serialize_field("clique", &self.is_clique)?;
        s.end()
    }
}

fn check_pair(g: &Graph, a: Vertex, b: Vertex) -> Result<()> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(Error::domain(format!(
            "pair ({a},{b}) must consist of distinct vertices"
        )));
    }
    Ok(())
}

fn check_separator_input(g: &Graph, a: Vertex, b: Vertex, set: &VertexSet) -> Result<Vec<bool>> {
    check_pair(g, a, b)?;
    for &v in set.iter() {
        g.check_vertex(v)?;
    }
    if set.contains(a) || set.contains(b) {
        return Err(Error::domain(format!(
            "separator may not contain {a} or {b}"
        )));
    }
    Ok(g.membership(set.as_slice()))
}

/// True iff `a` and `b` lie in different components of `G - S`.
pub fn is_vertex_separator(g: &Graph, a: Vertex, b: Vertex, set: &VertexSet) -> Result<bool> {
    let removed = check_separator_input(g, a, b, set)?;
    Ok(!reach(g, a, &removed)[b])
}

/// Minimality of an `(a,b)` separator: every separator vertex must have a
/// neighbor in the component of `a` and one in the component of `b`.
pub fn is_minimal_vertex_separator(
    g: &Graph,
    a: Vertex,
    b: Vertex,
    set: &VertexSet,
) -> Result<bool> {
    let removed = check_separator_input(g, a, b, set)?;
    let side_a = reach(g, a, &removed);
    if side_a[b] {
        return Err(Error::domain(format!("S does not separate {a} from {b}")));
    }
    let side_b = reach(g, b, &removed);
    Ok(full_to_both(g, set, &side_a, &side_b))
}

fn full_to_both(g: &Graph, set: &VertexSet, side_a: &[bool], side_b: &[bool]) -> bool {
    set.iter().all(|&v| {
        let nbrs = g.neighbors(v);
        nbrs.iter().any(|&w| side_a[w]) && nbrs.iter().any(|&w| side_b[w])
    })
}

/// Full record for a separating set; fails if `S` does not separate.
pub fn separator_record(
    g: &Graph,
    a: Vertex,
    b: Vertex,
    set: &VertexSet,
) -> Result<VertexSeparatorRecord> {
    let removed = check_separator_input(g, a, b, set)?;
    let side_a = reach(g, a, &removed);
    if side_a[b] {
        return Err(Error::domain(format!("S does not separate {a} from {b}")));
    }
    let side_b = reach(g, b, &removed);
    Ok(make_record(g, a, b, set.clone(), &side_a, &side_b))
}

fn make_record(
    g: &Graph,
    a: Vertex,
    b: Vertex,
    separator: VertexSet,
    side_a: &[bool],
    side_b: &[bool],
) -> VertexSeparatorRecord {
    let class = classify_set(g, &separator).expect("separator ids are in range");
    VertexSeparatorRecord {
        a,
        b,
        is_minimal: full_to_both(g, &separator, side_a, side_b),
        is_stable: class.is_stable,
        is_clique: class.is_clique,
        side_a: VertexSet::from_flags(side_a),
        side_b: VertexSet::from_flags(side_b),
        separator,
    }
}

/// All minimal `(a,b)` separators, ordered by size and then lexicographically.
///
/// Each candidate is `N(C)` for a connected set `C` containing `a` and avoiding
/// `N[b]`; `C` is then the component of `a`, so the candidate is minimal iff
/// every vertex of it also touches the component of `b`. With a `cap`, at most
/// that many records are collected.
pub fn enumerate_minimal_ab_separators(
    g: &Graph,
    a: Vertex,
    b: Vertex,
    cap: Option<usize>,
) -> Result<Enumeration<VertexSeparatorRecord>> {
    check_pair(g, a, b)?;
    if g.has_edge(a, b) {
        return Err(Error::domain(format!(
            "no ({a},{b}) separator exists: {a} and {b} are adjacent"
        )));
    }
    let mut allowed = vec![true; g.n()];
    allowed[b] = false;
    for &w in g.neighbors(b) {
        allowed[w] = false;
    }

    let mut records = Vec::new();
    let mut truncated = false;
    let mut boundary = vec![false; g.n()];
    for_each_connected_set(g, a, &allowed, |in_set, members| {
        let mut sep = Vec::new();
        for &v in members {
            for &w in g.neighbors(v) {
                if !in_set[w] && !boundary[w] {
                    boundary[w] = true;
                    sep.push(w);
                }
            }
        }
        let side_b = reach(g, b, &boundary);
        let minimal = sep
            .iter()
            .all(|&s| g.neighbors(s).iter().any(|&w| side_b[w]));
        if minimal {
            if cap.is_some_and(|c| records.len() >= c) {
                truncated = true;
            } else {
                let separator = VertexSet::from_unsorted(sep.clone());
                records.push(make_record(g, a, b, separator, in_set, &side_b));
            }
        }
        for &s in &sep {
            boundary[s] = false;
        }
        if truncated {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    records.sort_by(|x, y| x.separator.size_lex_cmp(&y.separator));
    Ok(Enumeration { records, truncated })
}

/// Every minimal separator of the graph, over all non-adjacent pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllSeparators {
    /// One record per distinct separator, carrying the lexicographically least
    /// pair that it minimally separates; sorted by size, then lexicographically.
    pub records: Vec<VertexSeparatorRecord>,
    pub all_stable: bool,
    /// The first non-stable record, if any.
    pub witness: Option<VertexSeparatorRecord>,
}

pub fn all_minimal_separators(g: &Graph) -> AllSeparators {
    let mut by_set: BTreeMap<VertexSet, VertexSeparatorRecord> = BTreeMap::new();
    for a in g.vertices() {
        for b in a + 1..g.n() {
            if g.has_edge(a, b) {
                continue;
            }
            let found = enumerate_minimal_ab_separators(g, a, b, None)
                .expect("pair is valid and non-adjacent");
            for rec in found.records {
                by_set.entry(rec.separator.clone()).or_insert(rec);
            }
        }
    }
    let mut records: Vec<_> = by_set.into_values().collect();
    records.sort_by(|x, y| x.separator.size_lex_cmp(&y.separator));
    let witness = records.iter().find(|r| !r.is_stable).cloned();
    AllSeparators {
        all_stable: witness.is_none(),
        witness,
        records,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_unsorted(v.to_vec())
    }

    /// a=0, u=1, b=2, v=3
    fn c4() -> Graph {
        Graph::cycle(4).unwrap()
    }

    /// degree-3 vertices u=1, v=3; degree-2 vertices a=0, b=2
    fn diamond() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap()
    }

    fn seps(g: &Graph, a: usize, b: usize) -> Vec<Vec<usize>> {
        enumerate_minimal_ab_separators(g, a, b, None)
            .unwrap()
            .records
            .iter()
            .map(|r| r.separator.to_vec())
            .collect()
    }

    #[test]
    fn separator_membership_examples() {
        let p3 = Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
        assert!(is_vertex_separator(&p3, 0, 1, &vs(&[2])).unwrap());
        assert!(!is_vertex_separator(&c4(), 0, 2, &vs(&[1])).unwrap());
        assert!(is_vertex_separator(&c4(), 0, 2, &vs(&[1, 3])).unwrap());
        assert!(matches!(
            is_vertex_separator(&c4(), 0, 2, &vs(&[0, 1])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal_vertex_separator(&c4(), 0, 2, &vs(&[1, 3])).unwrap());
        // pendant y = 4 attached to u = 1
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)]).unwrap();
        // {u, y} does not separate a from b: v still joins them
        assert!(is_minimal_vertex_separator(&g, 0, 2, &vs(&[1, 4])).is_err());
        assert!(!is_minimal_vertex_separator(&g, 0, 2, &vs(&[1, 3, 4])).unwrap());
        assert!(is_minimal_vertex_separator(&diamond(), 0, 2, &vs(&[1, 3])).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(seps(&c4(), 0, 2), vec![vec![1, 3]]);
        assert_eq!(
            seps(&Graph::cycle(5).unwrap(), 0, 2),
            vec![vec![1, 3], vec![1, 4]]
        );
        let d = enumerate_minimal_ab_separators(&diamond(), 0, 2, None).unwrap();
        assert_eq!(d.records.len(), 1);
        assert_eq!(d.records[0].separator, vs(&[1, 3]));
        assert!(!d.records[0].is_stable && d.records[0].is_clique);
        assert_eq!(d.records[0].side_a, vs(&[0]));
        assert_eq!(d.records[0].side_b, vs(&[2]));
        assert!(matches!(
            enumerate_minimal_ab_separators(&diamond(), 0, 1, None),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cap_truncates() {
        let c6 = Graph::cycle(6).unwrap();
        let full = enumerate_minimal_ab_separators(&c6, 0, 3, None).unwrap();
        assert_eq!(full.records.len(), 4);
        assert!(!full.truncated);
        let capped = enumerate_minimal_ab_separators(&c6, 0, 3, Some(2)).unwrap();
        assert_eq!(capped.records.len(), 2);
        assert!(capped.truncated);
        let exact = enumerate_minimal_ab_separators(&c6, 0, 3, Some(4)).unwrap();
        assert!(!exact.truncated);
    }

    #[test]
    fn all_separators_examples() {
        let p4 = all_minimal_separators(&Graph::path(4));
        let sets: Vec<_> = p4.records.iter().map(|r| r.separator.to_vec()).collect();
        assert_eq!(sets, vec![vec![1], vec![2]]);
        assert!(p4.all_stable);

        let k4 = all_minimal_separators(&Graph::complete(4));
        assert!(k4.records.is_empty() && k4.all_stable);

        let d = all_minimal_separators(&diamond());
        assert!(!d.all_stable);
        assert_eq!(d.witness.unwrap().separator, vs(&[1, 3]));
    }

    #[test]
    fn record_serializes_in_wire_shape() {
        let rec = separator_record(&c4(), 0, 2, &vs(&[3, 1])).unwrap();
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"pair":[0,2],"S":[1,3],"minimal":true,"stable":true,"clique":false}"#
        );
    }
}
