use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex, VertexSet};

/// Rotates and orients a cycle so it starts at its least vertex and continues
/// toward the smaller of that vertex's two cycle neighbors.
pub(crate) fn canonical_cycle(mut cycle: Vec<Vertex>) -> Vec<Vertex> {
    if cycle.len() < 3 {
        return cycle;
    }
    let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
    cycle.rotate_left(start);
    if cycle[cycle.len() - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

fn check_cycle_shape(g: &Graph, cycle: &[Vertex], min_len: usize) -> Result<VertexSet> {
    if cycle.len() < min_len {
        return Err(Error::domain(format!(
            "cycle has {} vertices, at least {min_len} required",
            cycle.len()
        )));
    }
    for &v in cycle {
        g.check_vertex(v)?;
    }
    let set = VertexSet::from_unsorted(cycle.to_vec());
    if set.len() != cycle.len() {
        return Err(Error::domain("cycle repeats a vertex"));
    }
    for i in 0..cycle.len() {
        let (x, y) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        if !g.has_edge(x, y) {
            return Err(Error::domain(format!(
                "consecutive cycle vertices {x},{y} are not adjacent"
            )));
        }
    }
    Ok(set)
}

fn induced_edge_count(g: &Graph, set: &VertexSet) -> usize {
    set.iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| w > v && set.contains(w))
                .count()
        })
        .sum()
}

/// An induced cycle of length at least 4 with exactly one chord.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneChordWitness {
    /// Cyclic order, canonically rotated and oriented.
    pub cycle: Vec<Vertex>,
    pub chord: Edge,
}

impl OneChordWitness {
    pub fn new(cycle: Vec<Vertex>, chord: Edge) -> Self {
        OneChordWitness {
            cycle: canonical_cycle(cycle),
            chord: edge(chord.0, chord.1),
        }
    }

    pub fn size(&self) -> usize {
        self.cycle.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_unsorted(self.cycle.clone())
    }

    /// Re-checks every defining property against `g` from scratch.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let set = check_cycle_shape(g, &self.cycle, 4)?;
        let (u, v) = self.chord;
        let pos = |x: Vertex| self.cycle.iter().position(|&c| c == x);
        let (Some(pu), Some(pv)) = (pos(u), pos(v)) else {
            return Err(Error::domain("chord endpoints must lie on the cycle"));
        };
        let gap = pu.abs_diff(pv);
        if gap == 1 || gap == self.cycle.len() - 1 || u == v {
            return Err(Error::domain(
                "chord endpoints are consecutive on the cycle",
            ));
        }
        if !g.has_edge(u, v) {
            return Err(Error::domain(format!("chord {{{u},{v}}} is not an edge")));
        }
        let m = induced_edge_count(g, &set);
        if m != self.cycle.len() + 1 {
            return Err(Error::domain(format!(
                "induced subgraph has {m} edges, expected {}",
                self.cycle.len() + 1
            )));
        }
        let mut degrees: Vec<usize> = set
            .iter()
            .map(|&x| g.neighbors(x).iter().filter(|&&w| set.contains(w)).count())
            .collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let expected: Vec<usize> = [3, 3]
            .into_iter()
            .chain(std::iter::repeat_n(2, self.cycle.len() - 2))
            .collect();
        if degrees != expected {
            return Err(Error::domain(
                "induced degree sequence is not (3,3,2,...,2)",
            ));
        }
        Ok(())
    }

    /// The two induced cycles formed by the chord and each arc of the cycle.
    pub fn split(&self) -> [Vec<Vertex>; 2] {
        let len = self.cycle.len();
        let pu = self
            .cycle
            .iter()
            .position(|&c| c == self.chord.0)
            .expect("chord on cycle");
        let pv = self
            .cycle
            .iter()
            .position(|&c| c == self.chord.1)
            .expect("chord on cycle");
        let arc = |from: usize, to: usize| -> Vec<Vertex> {
            let mut out = vec![self.cycle[from]];
            let mut i = from;
            while i != to {
                i = (i + 1) % len;
                out.push(self.cycle[i]);
            }
            out
        };
        [canonical_cycle(arc(pu, pv)), canonical_cycle(arc(pv, pu))]
    }
}

impl Serialize for OneChordWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("OneChordWitness", 3)?;
        s.serialize_field("kind", "one_chord")?;
        s.serialize_field("cycle", &self.cycle)?;
        s.serialize_field("chord", &[self.chord.0, self.chord.1])?;
        s.end()
    }
}

/// A vertex sequence inducing exactly a cycle (length at least 3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedCycleWitness {
    pub cycle: Vec<Vertex>,
}

impl InducedCycleWitness {
    pub fn new(cycle: Vec<Vertex>) -> Self {
        InducedCycleWitness {
            cycle: canonical_cycle(cycle),
        }
    }

    pub fn size(&self) -> usize {
        self.cycle.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_unsorted(self.cycle.clone())
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let set = check_cycle_shape(g, &self.cycle, 3)?;
        let m = induced_edge_count(g, &set);
        if m != self.cycle.len() {
            return Err(Error::domain(format!(
                "induced subgraph has {m} edges, expected {}",
                self.cycle.len()
            )));
        }
        Ok(())
    }
}

impl Serialize for InducedCycleWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("InducedCycleWitness", 2)?;
        s.serialize_field("kind", "induced_cycle")?;
        s.serialize_field("cycle", &self.cycle)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap()
    }

    #[test]
    fn canonical_orientation() {
        assert_eq!(canonical_cycle(vec![3, 1, 4, 2]), vec![1, 3, 2, 4]);
        assert_eq!(canonical_cycle(vec![2, 0, 1]), vec![0, 1, 2]);
        assert_eq!(canonical_cycle(vec![0, 3, 2, 1]), vec![0, 1, 2, 3]);
    }

    #[test]
    fn diamond_witness_validates() {
        let w = OneChordWitness::new(vec![2, 3, 0, 1], (3, 1));
        assert_eq!(w.cycle, vec![0, 1, 2, 3]);
        assert_eq!(w.chord, (1, 3));
        w.validate(&diamond()).unwrap();
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"kind":"one_chord","cycle":[0,1,2,3],"chord":[1,3]}"#
        );
        assert_eq!(w.split(), [vec![1, 2, 3], vec![0, 1, 3]]);
    }

    #[test]
    fn invalid_witnesses_are_rejected() {
        let k4 = Graph::complete(4);
        assert!(OneChordWitness::new(vec![0, 1, 2, 3], (0, 2))
            .validate(&k4)
            .is_err());
        // chord between consecutive vertices
        assert!(OneChordWitness::new(vec![0, 1, 2, 3], (0, 1))
            .validate(&diamond())
            .is_err());
        // not a cycle
        assert!(OneChordWitness::new(vec![0, 2, 1, 3], (1, 3))
            .validate(&diamond())
            .is_err());
        let c4 = Graph::cycle(4).unwrap();
        assert!(OneChordWitness::new(vec![0, 1, 2, 3], (0, 2))
            .validate(&c4)
            .is_err());
    }

    #[test]
    fn induced_cycle_validation() {
        let c5 = Graph::cycle(5).unwrap();
        InducedCycleWitness::new(vec![4, 3, 2, 1, 0])
            .validate(&c5)
            .unwrap();
        assert_eq!(
            InducedCycleWitness::new(vec![4, 3, 2, 1, 0]).cycle,
            vec![0, 1, 2, 3, 4]
        );
        assert!(InducedCycleWitness::new(vec![0, 1, 2, 3])
            .validate(&Graph::complete(4))
            .is_err());
        InducedCycleWitness::new(vec![0, 1, 2])
            .validate(&Graph::complete(4))
            .unwrap();
        assert_eq!(
            serde_json::to_string(&InducedCycleWitness::new(vec![0, 1, 2])).unwrap(),
            r#"{"kind":"induced_cycle","cycle":[0,1,2]}"#
        );
    }
}
