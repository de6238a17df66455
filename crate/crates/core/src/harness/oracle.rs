//! Brute-force reference implementations. They work from the definitions over
//! explicit vertex subsets and share no code with the fast algorithms beyond
//! the graph type itself.

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, EdgeSet, Graph, Vertex, VertexSet};

/// Largest order accepted by the separator oracles.
pub const SEPARATOR_ORACLE_LIMIT: usize = 15;
/// Largest order accepted by the subset-scan optimization oracles.
pub const SUBSET_ORACLE_LIMIT: usize = 22;
/// Largest order accepted by the cyclic-order recognition oracle.
pub const ORDER_ORACLE_LIMIT: usize = 11;

fn masks(g: &Graph, limit: usize) -> Result<Vec<u64>> {
    if g.n() > limit {
        return Err(Error::Resource(format!(
            "brute force is limited to {limit} vertices, got {}",
            g.n()
        )));
    }
    Ok(g.adjacency_masks().expect("order within mask width"))
}

fn check_pair(g: &Graph, a: Vertex, b: Vertex) -> Result<()> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(Error::domain("the pair needs two distinct vertices"));
    }
    Ok(())
}

/// Vertices reachable from `start` inside `allowed`.
fn reach(adj: &[u64], start: usize, allowed: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & allowed & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn separates(adj: &[u64], a: usize, b: usize, removed: u64) -> bool {
    reach(adj, a, full(adj.len()) & !removed) >> b & 1 == 0
}

/// Scatters the bits of `packed` onto the set bits of `layout`.
fn deposit(packed: u64, layout: u64) -> u64 {
    let mut out = 0u64;
    let mut rest = layout;
    let mut i = 0;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        if packed >> i & 1 == 1 {
            out |= bit;
        }
        rest &= rest - 1;
        i += 1;
    }
    out
}

/// All inclusion-minimal `(a,b)` vertex separators: every subset of
/// `V - {a,b}` that separates, keeping those with no separating proper subset.
/// Sorted by size, then lexicographically.
pub fn brute_force_minimal_separators(g: &Graph, a: Vertex, b: Vertex) -> Result<Vec<VertexSet>> {
    check_pair(g, a, b)?;
    let adj = masks(g, SEPARATOR_ORACLE_LIMIT)?;
    let n = g.n();
    let layout = full(n) & !(1u64 << a) & !(1u64 << b);
    let k = layout.count_ones() as usize;
    let size = 1usize << k;
    let sep: Vec<bool> = (0..size)
        .map(|x| separates(&adj, a, b, deposit(x as u64, layout)))
        .collect();
    // below[x]: some proper subset of x separates
    let mut below = vec![false; size];
    for x in 1..size {
        let mut bits = x;
        while bits != 0 {
            let y = x & !(bits & bits.wrapping_neg());
            bits &= bits - 1;
            if sep[y] || below[y] {
                below[x] = true;
                break;
            }
        }
    }
    let mut out: Vec<VertexSet> = (0..size)
        .filter(|&x| sep[x] && !below[x])
        .map(|x| VertexSet::from_mask(deposit(x as u64, layout)))
        .collect();
    out.sort_by(|x, y| x.size_lex_cmp(y));
    Ok(out)
}

/// Definitional minimality: `set` separates `a` from `b` and none of its
/// proper subsets does.
pub fn is_minimal_by_subsets(g: &Graph, a: Vertex, b: Vertex, set: &VertexSet) -> Result<bool> {
    check_pair(g, a, b)?;
    let adj = masks(g, 63)?;
    let s = set.to_mask();
    if s >> a & 1 == 1 || s >> b & 1 == 1 || !separates(&adj, a, b, s) {
        return Ok(false);
    }
    let k = s.count_ones();
    Ok((0..(1u64 << k) - 1).all(|x| !separates(&adj, a, b, deposit(x, s))))
}

fn boundary(adj: &[u64], side: u64) -> Vec<Edge> {
    let mut cut = Vec::new();
    let mut rest = side;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut out = adj[u] & !side;
        while out != 0 {
            let v = out.trailing_zeros() as usize;
            out &= out - 1;
            cut.push(edge(u, v));
        }
    }
    cut.sort_unstable();
    cut
}

fn drop_edges(adj: &mut [u64], edges: &[Edge]) {
    for &(u, v) in edges {
        adj[u] &= !(1u64 << v);
        adj[v] &= !(1u64 << u);
    }
}

fn restore_edge(adj: &mut [u64], (u, v): Edge) {
    adj[u] |= 1u64 << v;
    adj[v] |= 1u64 << u;
}

/// All inclusion-minimal `(a,b)` edge separators. Every minimal cut is the
/// boundary of the side containing `a` after its removal, so the scan runs
/// over all sides `A` with `a ∈ A`, `b ∉ A`, and keeps boundaries from which
/// no single edge can be dropped (separation is monotone under adding edges
/// to the cut, so this is subset-minimality). Sorted by size, then
/// lexicographically.
pub fn brute_force_minimal_edge_separators(
    g: &Graph,
    a: Vertex,
    b: Vertex,
) -> Result<Vec<EdgeSet>> {
    check_pair(g, a, b)?;
    let adj = masks(g, SEPARATOR_ORACLE_LIMIT)?;
    let n = g.n();
    let layout = full(n) & !(1u64 << a) & !(1u64 << b);
    let k = layout.count_ones();
    let mut found: Vec<EdgeSet> = Vec::new();
    for x in 0..(1u64 << k) {
        let side = deposit(x, layout) | 1u64 << a;
        let cut = boundary(&adj, side);
        let mut pruned = adj.clone();
        drop_edges(&mut pruned, &cut);
        if reach(&pruned, a, full(n)) >> b & 1 == 1 {
            continue;
        }
        // putting back any single edge must reconnect the pair
        let minimal = cut.iter().all(|&e| {
            restore_edge(&mut pruned, e);
            let joined = reach(&pruned, a, full(n)) >> b & 1 == 1;
            drop_edges(&mut pruned, &[e]);
            joined
        });
        if minimal {
            found.push(EdgeSet::from_unsorted(cut));
        }
    }
    found.sort_by(|x, y| x.size_lex_cmp(y));
    found.dedup();
    Ok(found)
}

/// No two edges of the cut share an endpoint.
pub fn cut_is_matching(cut: &EdgeSet) -> bool {
    let mut ends: Vec<Vertex> = cut.iter().flat_map(|&(u, v)| [u, v]).collect();
    let len = ends.len();
    ends.sort_unstable();
    ends.dedup();
    ends.len() == len
}

/// Whether every minimal edge separator, over all pairs, is a matching.
pub fn brute_force_matching_property(g: &Graph) -> Result<bool> {
    for a in g.vertices() {
        for b in a + 1..g.n() {
            if !brute_force_minimal_edge_separators(g, a, b)?
                .iter()
                .all(cut_is_matching)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether every minimal vertex separator, over all pairs, induces no edge
/// (`stable`) or all edges (`clique`). Returns `(all_stable, all_cliques)`.
pub fn brute_force_separator_shapes(g: &Graph) -> Result<(bool, bool)> {
    let adj = masks(g, SEPARATOR_ORACLE_LIMIT)?;
    let (mut stable, mut clique) = (true, true);
    for a in g.vertices() {
        for b in a + 1..g.n() {
            if adj[a] >> b & 1 == 1 {
                continue;
            }
            for s in brute_force_minimal_separators(g, a, b)? {
                let m = s.to_mask();
                for &v in s.iter() {
                    let inside = (adj[v] & m).count_ones() as usize;
                    stable &= inside == 0;
                    clique &= inside + 1 == s.len();
                }
            }
        }
    }
    Ok((stable, clique))
}

fn induced_degrees_all(adj: &[u64], set: u64, wanted: u32) -> bool {
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (adj[v] & set).count_ones() != wanted {
            return false;
        }
    }
    true
}

fn is_induced_cycle(adj: &[u64], set: u64) -> bool {
    set.count_ones() >= 3
        && induced_degrees_all(adj, set, 2)
        && reach(adj, set.trailing_zeros() as usize, set) == set
}

fn induces_one_chord(adj: &[u64], set: u64) -> bool {
    if set.count_ones() < 4 {
        return false;
    }
    // a cycle plus one edge has one more edge than vertices
    let mut degree_sum = 0;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        degree_sum += (adj[v] & set).count_ones();
    }
    if degree_sum != 2 * (set.count_ones() + 1) {
        return false;
    }
    // some induced edge whose deletion leaves a cycle through all of `set`
    let mut rest = set;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut nb = adj[u] & set & !((1u64 << (u + 1)) - 1);
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let mut pruned = [0u64; 64];
            pruned[..adj.len()].copy_from_slice(adj);
            drop_edges(&mut pruned, &[(u, v)]);
            let pruned = &pruned[..adj.len()];
            if is_induced_cycle(pruned, set) {
                return true;
            }
        }
    }
    false
}

fn max_subset_size(g: &Graph, accept: fn(&[u64], u64) -> bool) -> Result<Option<usize>> {
    let adj = masks(g, SUBSET_ORACLE_LIMIT)?;
    let mut best: Option<usize> = None;
    for set in 0..(1u64 << g.n()) {
        let size = set.count_ones() as usize;
        if best.is_some_and(|b| b >= size) {
            continue;
        }
        if accept(&adj, set) {
            best = Some(size);
        }
    }
    Ok(best)
}

/// Largest vertex set inducing a cycle, by scanning every subset.
pub fn max_induced_cycle_size(g: &Graph) -> Result<Option<usize>> {
    max_subset_size(g, is_induced_cycle)
}

/// Largest vertex set inducing a cycle plus one chord, by scanning every subset.
pub fn max_one_chord_size(g: &Graph) -> Result<Option<usize>> {
    max_subset_size(g, induces_one_chord)
}

/// Definition check for a 1-chord graph: some cyclic order of all vertices
/// has every consecutive pair adjacent, and exactly one further pair adjacent.
pub fn is_one_chord_by_cyclic_order(h: &Graph) -> Result<bool> {
    let adj = masks(h, ORDER_ORACLE_LIMIT)?;
    let n = h.n();
    // the extra adjacency count is order independent
    if n < 4 || h.edge_count() != n + 1 {
        return Ok(false);
    }
    fn extend(adj: &[u64], order: &mut Vec<usize>, used: u64) -> bool {
        let n = adj.len();
        let last = *order.last().expect("non-empty order");
        if order.len() == n {
            return adj[last] >> order[0] & 1 == 1;
        }
        let mut next = adj[last] & !used;
        while next != 0 {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            order.push(v);
            let hit = extend(adj, order, used | 1u64 << v);
            order.pop();
            if hit {
                return true;
            }
        }
        false
    }
    Ok(extend(&adj, &mut vec![0], 1))
}

/// κ(G) by increasing subset size: the fewest vertices whose removal
/// disconnects the graph or leaves a single vertex.
pub fn brute_force_vertex_connectivity(g: &Graph) -> Result<usize> {
    let adj = masks(g, SUBSET_ORACLE_LIMIT)?;
    let n = g.n();
    let all = full(n);
    for size in 0..n {
        // all subsets of the given size, in increasing order (Gosper's hack)
        let mut removed: u64 = (1u64 << size) - 1;
        while removed <= all {
            let left = all & !removed;
            if left.count_ones() <= 1 || reach(&adj, left.trailing_zeros() as usize, left) != left {
                return Ok(size);
            }
            if removed == 0 {
                break;
            }
            let low = removed & removed.wrapping_neg();
            let ripple = removed + low;
            removed = (((ripple ^ removed) >> 2) / low) | ripple;
        }
    }
    Ok(n.saturating_sub(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_unsorted(v.to_vec())
    }

    fn diamond() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap()
    }

    #[test]
    fn separator_examples() {
        assert_eq!(
            brute_force_minimal_separators(&Graph::cycle(4).unwrap(), 0, 2).unwrap(),
            vec![vs(&[1, 3])]
        );
        assert_eq!(
            brute_force_minimal_separators(&Graph::path(3), 0, 2).unwrap(),
            vec![vs(&[1])]
        );
        assert_eq!(
            brute_force_minimal_separators(&diamond(), 0, 2).unwrap(),
            vec![vs(&[1, 3])]
        );
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(brute_force_minimal_separators(&c6, 0, 3).unwrap().len(), 4);
    }

    #[test]
    fn separator_oracle_limits() {
        assert!(matches!(
            brute_force_minimal_separators(&Graph::path(16), 0, 1),
            Err(Error::Resource(_))
        ));
        assert!(brute_force_minimal_separators(&Graph::path(3), 1, 1).is_err());
    }

    #[test]
    fn subset_minimality() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_minimal_by_subsets(&c4, 0, 2, &vs(&[1, 3])).unwrap());
        let p5 = Graph::path(5);
        assert!(!is_minimal_by_subsets(&p5, 0, 4, &vs(&[1, 2])).unwrap());
        assert!(is_minimal_by_subsets(&p5, 0, 4, &vs(&[2])).unwrap());
        assert!(!is_minimal_by_subsets(&p5, 0, 4, &vs(&[0])).unwrap());
    }

    #[test]
    fn edge_separator_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let cuts = brute_force_minimal_edge_separators(&c4, 0, 2).unwrap();
        assert_eq!(cuts.len(), 4);
        assert!(brute_force_matching_property(&Graph::path(5)).unwrap());
        assert!(!brute_force_matching_property(&c4).unwrap());
        assert!(!brute_force_matching_property(&Graph::complete(3)).unwrap());
    }

    #[test]
    fn subset_scans() {
        assert_eq!(
            max_induced_cycle_size(&Graph::cycle(7).unwrap()).unwrap(),
            Some(7)
        );
        assert_eq!(
            max_induced_cycle_size(&Graph::complete(5)).unwrap(),
            Some(3)
        );
        assert_eq!(max_induced_cycle_size(&Graph::path(5)).unwrap(), None);
        assert_eq!(max_one_chord_size(&diamond()).unwrap(), Some(4));
        assert_eq!(max_one_chord_size(&Graph::complete(5)).unwrap(), None);
        assert_eq!(max_one_chord_size(&Graph::cycle(6).unwrap()).unwrap(), None);
    }

    #[test]
    fn cyclic_order_recognition() {
        assert!(is_one_chord_by_cyclic_order(&diamond()).unwrap());
        assert!(!is_one_chord_by_cyclic_order(&Graph::complete(4)).unwrap());
        let bowtie_ish =
            Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(!is_one_chord_by_cyclic_order(&bowtie_ish).unwrap());
    }

    #[test]
    fn connectivity_by_subsets() {
        assert_eq!(
            brute_force_vertex_connectivity(&Graph::complete(5)).unwrap(),
            4
        );
        assert_eq!(
            brute_force_vertex_connectivity(&Graph::cycle(6).unwrap()).unwrap(),
            2
        );
        assert_eq!(
            brute_force_vertex_connectivity(&Graph::empty(3)).unwrap(),
            0
        );
        assert_eq!(
            brute_force_vertex_connectivity(&Graph::empty(1)).unwrap(),
            0
        );
    }
}
