use serde::Serialize;

use super::search::find_induced_one_chord;
use super::witness::OneChordWitness;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{
    components_avoiding, cut_vertices, induced_subgraph, is_connected, structural_profile, Graph,
    Vertex, VertexSet,
};
use crate::separators::{all_minimal_separators, VertexSeparatorRecord};

/// Which side of the "complete or 1-chord free" disjunction a block-like
/// piece satisfied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceKind {
    Complete,
    OneChordFree,
    Both,
    Neither,
}

/// One piece `G[C ∪ {v}]` for a cut vertex `v` and a component `C` of `G - v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutPiece {
    pub cut_vertex: Vertex,
    pub vertices: VertexSet,
    pub kind: PieceKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    pub one_chord_free: bool,
    pub all_separators_stable: bool,
    pub characterization_consistent: bool,
    pub triangle_rule_applicable: bool,
    pub triangle_rule_holds: bool,
    pub cut_piece_rule_applicable: bool,
    pub cut_piece_rule_holds: bool,
    pub cut_pieces: Vec<CutPiece>,
    pub one_chord_witness: Option<OneChordWitness>,
    pub separator_witness: Option<VertexSeparatorRecord>,
}

/// Triangle-freeness is forced for 1-chord-free graphs that are at least
/// 2-connected and not complete. Returns `(applicable, holds)`.
pub fn triangle_rule_status(g: &Graph, one_chord_free: bool) -> (bool, bool) {
    let profile = structural_profile(g);
    let applicable = profile.vertex_connectivity >= 2 && !profile.is_complete;
    let holds = !applicable || !one_chord_free || !profile.has_triangle;
    (applicable, holds)
}

/// Classifies every piece `G[C ∪ {v}]` over cut vertices `v` and components
/// `C` of `G - v`, in cut-vertex then component order.
pub fn cut_pieces(g: &Graph, budget: &Budget) -> Result<Vec<CutPiece>> {
    let mut pieces = Vec::new();
    for v in cut_vertices(g) {
        let mut removed = vec![false; g.n()];
        removed[v] = true;
        for comp in components_avoiding(g, &removed) {
            let mut members = comp.to_vec();
            members.push(v);
            let vertices = VertexSet::from_unsorted(members);
            let sub = induced_subgraph(g, &vertices)?.graph;
            let complete = sub.is_complete();
            let free = find_induced_one_chord(&sub, budget)?.is_none();
            let kind = match (complete, free) {
                (true, true) => PieceKind::Both,
                (true, false) => PieceKind::Complete,
                (false, true) => PieceKind::OneChordFree,
                (false, false) => PieceKind::Neither,
            };
            pieces.push(CutPiece {
                cut_vertex: v,
                vertices,
                kind,
            });
        }
    }
    Ok(pieces)
}

/// Computes 1-chord freeness (by the witness search) and stability of all
/// minimal separators (by separator enumeration) independently, and checks
/// that they agree; also evaluates the triangle and cut-piece rules.
pub fn verify_characterizations(g: &Graph, budget: &Budget) -> Result<CharacterizationReport> {
    if !is_connected(g) {
        return Err(Error::domain(
            "characterization checks need a connected graph",
        ));
    }
    let one_chord_witness = find_induced_one_chord(g, budget)?;
    let one_chord_free = one_chord_witness.is_none();
    let seps = all_minimal_separators(g);

    let (triangle_rule_applicable, triangle_rule_holds) = triangle_rule_status(g, one_chord_free);
    let cut_pieces = cut_pieces(g, budget)?;
    let cut_piece_rule_applicable = one_chord_free && !cut_pieces.is_empty();
    let cut_piece_rule_holds =
        !cut_piece_rule_applicable || cut_pieces.iter().all(|p| p.kind != PieceKind::Neither);

    Ok(CharacterizationReport {
        one_chord_free,
        all_separators_stable: seps.all_stable,
        characterization_consistent: one_chord_free == seps.all_stable,
        triangle_rule_applicable,
        triangle_rule_holds,
        cut_piece_rule_applicable,
        cut_piece_rule_holds,
        cut_pieces,
        one_chord_witness,
        separator_witness: seps.witness,
    })
}
