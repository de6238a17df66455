//! 1-chord graphs: recognition, witness search, exact maximum search, and
//! checks of the structural characterization on concrete graphs.

mod characterize;
mod recognize;
mod search;
mod witness;

pub use characterize::{
    cut_pieces, triangle_rule_status, verify_characterizations, CharacterizationReport, CutPiece,
    PieceKind,
};
pub use recognize::{induces_one_chord, is_one_chord_graph};
pub use search::{find_induced_one_chord, max_induced_cycle, max_one_chord_subgraph};
pub use witness::{InducedCycleWitness, OneChordWitness};
