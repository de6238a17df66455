//! Gadget reduction from maximum induced cycle to maximum 1-chord subgraph.
//!
//! Every source edge `{i,j}` gets a parallel path of `k` fresh vertices
//! `i - g1 - ... - gk - j`. The source has an induced cycle on at least `k`
//! vertices iff the target has a 1-chord subgraph on at least `2k` vertices.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex};
use crate::harness::oracle;
use crate::one_chord::{
    max_induced_cycle, max_one_chord_subgraph, InducedCycleWitness, OneChordWitness,
};

/// Target instances at or below this order are also checked by subset brute force.
pub const ORACLE_TARGET_LIMIT: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Gadget {
    pub edge: Edge,
    /// `v_ij^1 ... v_ij^k`, with the first adjacent to `i` and the last to `j`.
    pub path: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub source: Graph,
    pub k: usize,
    pub target: Graph,
    /// One gadget per source edge, in lexicographic edge order.
    pub gadgets: Vec<Gadget>,
}

impl ReductionOutput {
    /// Source vertices keep their ids in the target.
    pub fn original_ids(&self) -> std::ops::Range<Vertex> {
        0..self.source.n()
    }

    pub fn is_gadget_vertex(&self, v: Vertex) -> bool {
        v >= self.source.n() && v < self.target.n()
    }

    pub fn gadget(&self, e: Edge) -> Option<&Gadget> {
        let e = edge(e.0, e.1);
        self.gadgets
            .binary_search_by(|g| g.edge.cmp(&e))
            .ok()
            .map(|i| &self.gadgets[i])
    }

    fn gadget_index_of(&self, v: Vertex) -> usize {
        (v - self.source.n()) / self.k
    }
}

impl Serialize for ReductionOutput {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ReductionOutput", 4)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("source", &self.source.to_string())?;
        s.serialize_field("target", &self.target.to_string())?;
        s.serialize_field("gadgets", &self.gadgets)?;
        s.end()
    }
}

/// Builds `G'` from `G` in `O(k·|E(G)|)` time. Requires `k >= 3` and at least
/// one source edge.
pub fn build_reduction(g: &Graph, k: usize) -> Result<ReductionOutput> {
    if k < 3 {
        return Err(Error::domain(format!(
            "gadget length k must be at least 3, got {k}"
        )));
    }
    if g.edge_count() == 0 {
        return Err(Error::domain("the source graph has no edges"));
    }
    let n = g.n();
    let m = g.edge_count();
    let mut edges: Vec<Edge> = Vec::with_capacity((k + 2) * m);
    let mut gadgets = Vec::with_capacity(m);
    for (idx, (i, j)) in g.edges().enumerate() {
        let path: Vec<Vertex> = (0..k).map(|p| n + idx * k + p).collect();
        edges.push((i, j));
        edges.push((i, path[0]));
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        edges.push((path[k - 1], j));
        gadgets.push(Gadget { edge: (i, j), path });
    }
    let target = Graph::from_edges(n + k * m, edges)?;
    assert_eq!(target.n(), n + k * m, "vertex count formula");
    assert_eq!(target.edge_count(), (k + 2) * m, "edge count formula");
    Ok(ReductionOutput {
        source: g.clone(),
        k,
        target,
        gadgets,
    })
}

/// Lifts a source induced cycle to a target 1-chord subgraph: the cycle plus
/// the gadget of its least edge, which becomes the chord.
pub fn forward_witness(
    r: &ReductionOutput,
    cycle: &InducedCycleWitness,
) -> Result<OneChordWitness> {
    cycle.validate(&r.source)?;
    let c = &cycle.cycle;
    let len = c.len();
    let pos = (0..len)
        .min_by_key(|&p| edge(c[p], c[(p + 1) % len]))
        .expect("cycle is non-empty");
    let (x, y) = (c[pos], c[(pos + 1) % len]);
    let gadget = r
        .gadget((x, y))
        .ok_or_else(|| Error::Invariant(format!("source edge {{{x},{y}}} has no gadget")))?;
    // Walk the cycle from y around to x, then back to y through the gadget.
    let mut lifted: Vec<Vertex> = (0..len).map(|i| c[(pos + 1 + i) % len]).collect();
    if x < y {
        lifted.extend(gadget.path.iter().copied());
    } else {
        lifted.extend(gadget.path.iter().rev().copied());
    }
    let witness = OneChordWitness::new(lifted, (x, y));
    witness
        .validate(&r.target)
        .map_err(|e| Error::Invariant(format!("lifted witness is invalid: {e}")))?;
    Ok(witness)
}

/// Recovers a source induced cycle of size at least `k` from a target 1-chord
/// subgraph of size at least `2k`.
///
/// The witness splits along its chord into two induced cycles. Each gadget
/// lies entirely inside or entirely outside the witness, and a cycle through
/// a gadget is exactly that gadget closed by its source edge. Such cycles are
/// discarded and the larger remaining one is returned.
pub fn extract_cycle_from_one_chord(
    r: &ReductionOutput,
    w: &OneChordWitness,
) -> Result<InducedCycleWitness> {
    if w.size() < 2 * r.k {
        return Err(Error::domain(format!(
            "witness has {} vertices, at least 2k = {} required",
            w.size(),
            2 * r.k
        )));
    }
    w.validate(&r.target)?;
    let members = w.vertex_set();
    for gadget in &r.gadgets {
        let inside = gadget.path.iter().filter(|&&v| members.contains(v)).count();
        if inside != 0 && inside != gadget.path.len() {
            return Err(Error::Invariant(format!(
                "witness meets the gadget of {:?} in {inside} of {} vertices",
                gadget.edge,
                gadget.path.len()
            )));
        }
    }

    let mut best: Option<InducedCycleWitness> = None;
    for half in w.split() {
        let originals: Vec<Vertex> = half
            .iter()
            .copied()
            .filter(|&v| !r.is_gadget_vertex(v))
            .collect();
        if let Some(&g) = half.iter().find(|&&v| r.is_gadget_vertex(v)) {
            // a gadget closed by its own source edge
            let gadget = &r.gadgets[r.gadget_index_of(g)];
            if originals != [gadget.edge.0, gadget.edge.1]
                && originals != [gadget.edge.1, gadget.edge.0]
            {
                return Err(Error::Invariant(format!(
                    "a cycle through the gadget of {:?} leaves its endpoints",
                    gadget.edge
                )));
            }
            continue;
        }
        let candidate = InducedCycleWitness::new(originals);
        candidate.validate(&r.source).map_err(|e| {
            Error::Invariant(format!("recovered cycle is not induced in the source: {e}"))
        })?;
        let replace = match &best {
            None => true,
            Some(b) => {
                candidate.size() > b.size()
                    || (candidate.size() == b.size() && candidate.vertex_set() < b.vertex_set())
            }
        };
        if replace {
            best = Some(candidate);
        }
    }
    match best {
        Some(c) if c.size() >= r.k => Ok(c),
        Some(c) => Err(Error::Invariant(format!(
            "recovered cycle has {} vertices, fewer than k = {}",
            c.size(),
            r.k
        ))),
        None => Err(Error::Invariant(
            "no source cycle survives contraction".into(),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ReductionCheck {
    pub k: usize,
    /// The source has an induced cycle on at least `k` vertices.
    pub lhs: bool,
    /// The target has a 1-chord subgraph on at least `2k` vertices.
    pub rhs: bool,
    pub consistent: bool,
    /// Whether subset brute force also ran on both sides.
    pub oracle_checked: bool,
}

/// Decides both sides of the equivalence with the exact solvers; small targets
/// are additionally decided by brute force.
pub fn verify_reduction(g: &Graph, k: usize, budget: &Budget) -> Result<ReductionCheck> {
    let r = build_reduction(g, k)?;
    let lhs = max_induced_cycle(g, Some(k), budget)?.is_some();
    let rhs = max_one_chord_subgraph(&r.target, Some(2 * k), budget)?.is_some();
    let mut consistent = lhs == rhs;
    let oracle_checked = r.target.n() <= ORACLE_TARGET_LIMIT;
    if oracle_checked {
        let lhs_bf = oracle::max_induced_cycle_size(g)?.is_some_and(|s| s >= k);
        let rhs_bf = oracle::max_one_chord_size(&r.target)?.is_some_and(|s| s >= 2 * k);
        consistent &= lhs_bf == lhs && rhs_bf == rhs;
    }
    Ok(ReductionCheck {
        k,
        lhs,
        rhs,
        consistent,
        oracle_checked,
    })
}
