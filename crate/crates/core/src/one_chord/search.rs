//! Exact search for induced cycles and 1-chord subgraphs.
//!
//! Both problems reduce to one engine: grow a chordless path from a root and
//! close it on a neighbor of the root. A 1-chord subgraph with chord `{u,v}`
//! is exactly an induced cycle through `u` and `v` in `G - uv`, i.e. two
//! chordless `u`–`v` paths whose interiors are disjoint and mutually
//! non-adjacent.

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{edge, Edge, Graph, Vertex, VertexSet};

use super::witness::{InducedCycleWitness, OneChordWitness};

/// What the search is asked for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Goal {
    /// Any cycle with at least this many vertices; stops at the first.
    AtLeast(usize),
    /// A maximum cycle, lexicographically least vertex set among ties.
    Maximum,
}

#[derive(Clone, Debug)]
struct Best {
    size: usize,
    set: VertexSet,
    cycle: Vec<Vertex>,
    chord: Option<Edge>,
}

struct Incumbent {
    goal: Goal,
    best: Option<Best>,
}

impl Incumbent {
    fn new(goal: Goal) -> Self {
        Incumbent { goal, best: None }
    }

    fn done(&self) -> bool {
        matches!((self.goal, &self.best), (Goal::AtLeast(l), Some(b)) if b.size >= l)
    }

    /// Size a branch must be able to reach to stay alive.
    fn floor(&self) -> usize {
        match (self.goal, &self.best) {
            (Goal::AtLeast(l), _) => l,
            (Goal::Maximum, Some(b)) => b.size,
            (Goal::Maximum, None) => 0,
        }
    }

    fn offer(&mut self, cycle: &[Vertex], chord: Option<Edge>) {
        let size = cycle.len();
        match self.goal {
            Goal::AtLeast(l) if size < l => return,
            _ => {}
        }
        let set = VertexSet::from_unsorted(cycle.to_vec());
        let better = match &self.best {
            None => true,
            Some(b) => size > b.size || (size == b.size && set < b.set),
        };
        if better {
            self.best = Some(Best {
                size,
                set,
                cycle: cycle.to_vec(),
                chord,
            });
        }
    }
}

/// Chordless-path growth from a fixed root.
struct RootedSearch<'a> {
    g: &'a Graph,
    skip: Option<Edge>,
    allowed: &'a [bool],
    must_visit: Option<Vertex>,
    /// Neighbors of the root may only close the cycle, and only when larger
    /// than the first path vertex, so each cycle is found in one orientation.
    root_adj: Vec<bool>,
    on_path: Vec<bool>,
    /// Number of interior path vertices adjacent to each vertex.
    blocked: Vec<u32>,
    path: Vec<Vertex>,
    /// Allowed vertices that are off the path and unblocked.
    eligible: usize,
    budget: &'a Budget,
}

impl<'a> RootedSearch<'a> {
    fn new(
        g: &'a Graph,
        skip: Option<Edge>,
        allowed: &'a [bool],
        root: Vertex,
        must_visit: Option<Vertex>,
        budget: &'a Budget,
    ) -> Self {
        let mut s = RootedSearch {
            g,
            skip,
            allowed,
            must_visit,
            root_adj: vec![false; g.n()],
            on_path: vec![false; g.n()],
            blocked: vec![0; g.n()],
            path: vec![root],
            eligible: 0,
            budget,
        };
        s.on_path[root] = true;
        let nbrs: Vec<Vertex> = s.nbrs(root).collect();
        for w in nbrs {
            s.root_adj[w] = true;
        }
        s.eligible = g.vertices().filter(|&v| allowed[v] && v != root).count();
        s
    }

    fn nbrs(&self, v: Vertex) -> impl Iterator<Item = Vertex> + 'a {
        let skip = self.skip;
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| Some(edge(v, w)) != skip)
    }

    fn is_eligible(&self, v: Vertex) -> bool {
        self.allowed[v] && !self.on_path[v] && self.blocked[v] == 0
    }

    fn push(&mut self, w: Vertex) {
        if self.is_eligible(w) {
            self.eligible -= 1;
        }
        self.on_path[w] = true;
        self.path.push(w);
    }

    fn pop(&mut self) {
        let w = self.path.pop().expect("non-root path vertex");
        self.on_path[w] = false;
        if self.is_eligible(w) {
            self.eligible += 1;
        }
    }

    fn block_neighbors(&mut self, t: Vertex) {
        let nbrs: Vec<Vertex> = self.nbrs(t).collect();
        for x in nbrs {
            if self.is_eligible(x) {
                self.eligible -= 1;
            }
            self.blocked[x] += 1;
        }
    }

    fn unblock_neighbors(&mut self, t: Vertex) {
        let nbrs: Vec<Vertex> = self.nbrs(t).collect();
        for x in nbrs {
            self.blocked[x] -= 1;
            if self.is_eligible(x) {
                self.eligible += 1;
            }
        }
    }

    fn run(&mut self, inc: &mut Incumbent, chord: Option<Edge>) -> Result<()> {
        self.budget.tick()?;
        if inc.done() {
            return Ok(());
        }
        // The final cycle uses path vertices plus eligible ones only.
        let bound = self.path.len() + self.eligible;
        let floor = inc.floor();
        if bound < floor {
            return Ok(());
        }
        if let Some(m) = self.must_visit {
            if !self.on_path[m] && self.blocked[m] > 0 {
                return Ok(());
            }
        }
        let tail = *self.path.last().expect("path holds the root");
        let candidates: Vec<Vertex> = self
            .nbrs(tail)
            .filter(|&w| self.allowed[w] && !self.on_path[w] && self.blocked[w] == 0)
            .collect();
        for w in candidates {
            if self.path.len() >= 2 && self.root_adj[w] {
                if w > self.path[1] && self.must_visit.is_none_or(|m| self.on_path[m] || m == w) {
                    self.path.push(w);
                    inc.offer(&self.path, chord);
                    self.path.pop();
                    if inc.done() {
                        return Ok(());
                    }
                }
                continue;
            }
            let interior = self.path.len() >= 2;
            if interior {
                self.block_neighbors(tail);
            }
            self.push(w);
            let r = self.run(inc, chord);
            self.pop();
            if interior {
                self.unblock_neighbors(tail);
            }
            r?;
            if inc.done() {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Maximum induced cycle (length at least 3). With a threshold, returns the
/// first cycle of at least that size instead.
pub fn max_induced_cycle(
    g: &Graph,
    threshold: Option<usize>,
    budget: &Budget,
) -> Result<Option<InducedCycleWitness>> {
    let goal = match threshold {
        Some(l) => Goal::AtLeast(l.max(3)),
        None => Goal::Maximum,
    };
    let mut inc = Incumbent::new(goal);
    let mut allowed = vec![true; g.n()];
    // Root each cycle at its least vertex.
    for root in g.vertices() {
        allowed[root] = false;
        if g.n() - root < inc.floor().max(3) {
            break;
        }
        let mut s = RootedSearch::new(g, None, &allowed, root, None, budget);
        s.run(&mut inc, None)?;
        if inc.done() {
            break;
        }
    }
    Ok(inc.best.map(|b| InducedCycleWitness::new(b.cycle)))
}

fn search_one_chord(g: &Graph, goal: Goal, budget: &Budget) -> Result<Option<OneChordWitness>> {
    let mut inc = Incumbent::new(goal);
    let allowed = vec![true; g.n()];
    let edges: Vec<Edge> = g.edges().collect();
    for (u, v) in edges {
        // both chord ends need a third neighbor
        if g.degree(u) < 3 || g.degree(v) < 3 {
            continue;
        }
        let mut s = RootedSearch::new(g, Some((u, v)), &allowed, u, Some(v), budget);
        s.run(&mut inc, Some((u, v)))?;
        if inc.done() {
            break;
        }
    }
    Ok(inc
        .best
        .map(|b| OneChordWitness::new(b.cycle, b.chord.expect("chord recorded"))))
}

/// Some induced 1-chord subgraph, or `None` if the graph is 1-chord free.
pub fn find_induced_one_chord(g: &Graph, budget: &Budget) -> Result<Option<OneChordWitness>> {
    search_one_chord(g, Goal::AtLeast(4), budget)
}

/// Maximum 1-chord subgraph. With a threshold, returns the first one of at
/// least that size instead.
pub fn max_one_chord_subgraph(
    g: &Graph,
    threshold: Option<usize>,
    budget: &Budget,
) -> Result<Option<OneChordWitness>> {
    let goal = match threshold {
        Some(l) => Goal::AtLeast(l.max(4)),
        None => Goal::Maximum,
    };
    search_one_chord(g, goal, budget)
}
