//! Vertex and edge separators: membership tests, minimality, exact
//! enumeration, and contractible-edge analysis.

mod contract;
mod edge;
mod vertex;

use std::ops::ControlFlow;

use crate::graph::{Graph, Vertex};

pub use contract::{contractible_edges, ContractibilityReport};
pub use edge::{
    enumerate_minimal_ab_edge_separators, is_edge_separator, is_minimal_edge_separator,
    matching_edge_separator_property, EdgeSeparatorRecord, MatchingProperty,
};
pub use vertex::{
    all_minimal_separators, enumerate_minimal_ab_separators, is_minimal_vertex_separator,
    is_vertex_separator, separator_record, AllSeparators, VertexSeparatorRecord,
};

/// Output of a possibly capped enumeration.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Enumeration<T> {
    pub records: Vec<T>,
    /// True when the cap stopped the enumeration before it finished.
    pub truncated: bool,
}

/// Visits every connected vertex set that contains `root` and otherwise uses
/// only `allowed` vertices, each exactly once. The callback receives the
/// membership flags and the member list.
///
/// Branches on the smallest frontier vertex: include it, or exclude it for the
/// rest of the subtree.
pub(crate) fn for_each_connected_set<F>(g: &Graph, root: Vertex, allowed: &[bool], mut visit: F)
where
    F: FnMut(&[bool], &[Vertex]) -> ControlFlow<()>,
{
    struct State<'a, F> {
        g: &'a Graph,
        allowed: &'a [bool],
        in_set: Vec<bool>,
        excluded: Vec<bool>,
        members: Vec<Vertex>,
        visit: F,
    }

    fn recurse<F>(st: &mut State<'_, F>) -> ControlFlow<()>
    where
        F: FnMut(&[bool], &[Vertex]) -> ControlFlow<()>,
    {
        let mut pick: Option<Vertex> = None;
        for &v in &st.members {
            for &w in st.g.neighbors(v) {
                if st.allowed[w] && !st.in_set[w] && !st.excluded[w] && pick.is_none_or(|p| w < p) {
                    pick = Some(w);
                }
            }
        }
        let Some(w) = pick else {
            return (st.visit)(&st.in_set, &st.members);
        };
        st.in_set[w] = true;
        st.members.push(w);
        let flow = recurse(st);
        st.members.pop();
        st.in_set[w] = false;
        flow?;
        st.excluded[w] = true;
        let flow = recurse(st);
        st.excluded[w] = false;
        flow
    }

    let mut st = State {
        g,
        allowed,
        in_set: vec![false; g.n()],
        excluded: vec![false; g.n()],
        members: vec![root],
        visit: &mut visit,
    };
    st.in_set[root] = true;
    let _ = recurse(&mut st);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_sets_of_a_path_rooted_at_an_end() {
        let g = Graph::path(4);
        let mut seen = Vec::new();
        for_each_connected_set(&g, 0, &[true; 4], |_, m| {
            let mut m = m.to_vec();
            m.sort();
            seen.push(m);
            ControlFlow::Continue(())
        });
        seen.sort();
        assert_eq!(
            seen,
            vec![vec![0], vec![0, 1], vec![0, 1, 2], vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn connected_sets_of_k4_rooted_anywhere() {
        let g = Graph::complete(4);
        let mut count = 0;
        for_each_connected_set(&g, 2, &[true, false, true, true], |_, _| {
            count += 1;
            ControlFlow::Continue(())
        });
        // {2} plus any subset of the two other allowed vertices
        assert_eq!(count, 4);
    }

    #[test]
    fn early_break_stops_visiting() {
        let g = Graph::complete(5);
        let mut count = 0;
        for_each_connected_set(&g, 0, &[true; 5], |_, _| {
            count += 1;
            if count == 3 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(count, 3);
    }
}
