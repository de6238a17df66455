use std::collections::{BTreeMap, BTreeSet};

use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};

use super::enumerate_minimal_ab_separators;
use crate::error::{Error, Result};
use crate::graph::{is_connected, vertex_connectivity, Edge, EdgeSet, Graph, VertexSet};

/// Which edges can be contracted without lowering the vertex connectivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractibilityReport {
    /// κ(G).
    pub k: usize,
    pub contractible: EdgeSet,
    pub non_contractible: EdgeSet,
    /// For each non-contractible edge, the least minimum separator containing
    /// both endpoints.
    pub blocking_separators: BTreeMap<Edge, VertexSet>,
}

struct Blocking<'a>(&'a BTreeMap<Edge, VertexSet>);

impl Serialize for Blocking<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Entry<'a> {
            edge: [usize; 2],
            #[serde(rename = "S")]
            separator: &'a VertexSet,
        }
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (&(u, v), separator) in self.0 {
            seq.serialize_element(&Entry {
                edge: [u, v],
                separator,
            })?;
        }
        seq.end()
    }
}

impl Serialize for ContractibilityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ContractibilityReport", 4)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("contractible", &self.contractible)?;
        s.serialize_field("non_contractible", &self.non_contractible)?;
        s.serialize_field("blocking", &Blocking(&self.blocking_separators))?;
        s.end()
    }
}

/// Classifies every edge: `{u,v}` is contractible iff no minimum vertex
/// separator contains both `u` and `v`.
///
/// Minimum separators are the minimal separators of size κ(G), taken from the
/// exact pair enumeration. Complete and disconnected graphs are rejected.
pub fn contractible_edges(g: &Graph) -> Result<ContractibilityReport> {
    if g.is_complete() {
        return Err(Error::domain(
            "complete graphs have no minimum vertex separator; contractibility is undefined",
        ));
    }
    if !is_connected(g) {
        return Err(Error::domain("contractibility needs a connected graph"));
    }
    let k = vertex_connectivity(g);
    // Any minimum separator misses one of the first k+1 vertices, and that
    // vertex is separated by it from some other vertex.
    let mut minimum: BTreeSet<VertexSet> = BTreeSet::new();
    for a in 0..=k.min(g.n() - 1) {
        for b in g.vertices() {
            if b == a || g.has_edge(a, b) {
                continue;
            }
            let found = enumerate_minimal_ab_separators(g, a, b, None)?;
            minimum.extend(
                found
                    .records
                    .into_iter()
                    .filter(|r| r.separator.len() == k)
                    .map(|r| r.separator),
            );
        }
    }

    let mut contractible = Vec::new();
    let mut non_contractible = Vec::new();
    let mut blocking_separators = BTreeMap::new();
    for e @ (u, v) in g.edges() {
        // equal sizes, so set order is lexicographic and the first hit is least
        match minimum.iter().find(|s| s.contains(u) && s.contains(v)) {
            Some(s) => {
                non_contractible.push(e);
                blocking_separators.insert(e, s.clone());
            }
            None => contractible.push(e),
        }
    }
    Ok(ContractibilityReport {
        k,
        contractible: EdgeSet::from_unsorted(contractible),
        non_contractible: EdgeSet::from_unsorted(non_contractible),
        blocking_separators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_are_fully_contractible() {
        for n in [4, 5] {
            let g = Graph::cycle(n).unwrap();
            let r = contractible_edges(&g).unwrap();
            assert_eq!(r.k, 2);
            assert_eq!(r.contractible.len(), n);
            assert!(r.non_contractible.is_empty());
        }
    }

    #[test]
    fn diamond_chord_is_blocked() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap();
        let r = contractible_edges(&g).unwrap();
        assert_eq!(r.k, 2);
        assert_eq!(r.non_contractible.as_slice(), &[(1, 3)]);
        assert_eq!(r.contractible.len(), 4);
        assert_eq!(r.blocking_separators[&(1, 3)].as_slice(), &[1, 3]);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"k":2,"contractible":[[0,1],[0,3],[1,2],[2,3]],"non_contractible":[[1,3]],"blocking":[{"edge":[1,3],"S":[1,3]}]}"#
        );
    }

    #[test]
    fn rejects_complete_and_disconnected() {
        assert!(matches!(
            contractible_edges(&Graph::complete(4)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            contractible_edges(&Graph::empty(3)),
            Err(Error::Domain(_))
        ));
    }
}
