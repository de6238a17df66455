use serde::Serialize;

use super::{edge, Edge, Vertex};

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn from_unsorted(mut members: Vec<Vertex>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(super::BitIter(mask).collect())
    }

    pub fn from_flags(flags: &[bool]) -> Self {
        VertexSet(
            flags
                .iter()
                .enumerate()
                .filter_map(|(v, &f)| f.then_some(v))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.0.clone()
    }

    /// Bitmask form; every member must be below 64.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | (1 << v))
    }

    /// Orders by size first, then lexicographically.
    pub fn size_lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A sorted, duplicate-free set of edges, each stored smaller id first.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn from_unsorted(members: Vec<Edge>) -> Self {
        let mut members: Vec<Edge> = members.into_iter().map(|(u, v)| edge(u, v)).collect();
        members.sort_unstable();
        members.dedup();
        EdgeSet(members)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0.binary_search(&edge(e.0, e.1)).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Edge> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    pub fn size_lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet::from_unsorted(iter.into_iter().collect())
    }
}

/// Result of [`classify_set`](super::classify_set).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SetClass {
    pub is_stable: bool,
    pub is_clique: bool,
}
