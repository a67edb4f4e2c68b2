//! Coding gadgets: ladder posets whose maximal chains record a parameter
//! set, their decoders, disjoint-union side detection and the cut-point
//! decomposition of posets with height metadata.

mod decode;
mod decompose;
mod family;
mod ladder;
mod params;

use thiserror::Error;

use crate::analysis::AnalysisError;

pub use decode::{psi, psi_witnesses, side_of_chain, smax_decode};
pub use decompose::{ak_linear, decompose, ideal_restrict, Segment};
pub use family::{Family, FamilyError};
pub use ladder::{
    maxnot_ladder, maxnot_member, maxnot_poset, smax_ladder, smax_poset, Branch, InfiniteLadder, Ladder, LadderKind,
    MaxnotSpec, SmaxSpec, Trunc, INFINITE_ANCHOR_PREFIX,
};
pub use params::{ParamSet, ParamSetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodingError {
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("chain is not strongly maximal")]
    NotStronglyMaximal,
    #[error("decoder applied to the wrong kind of ladder")]
    WrongLadder,
    #[error("chain is empty")]
    EmptyChain,
    #[error("chain mixes both sides of a disjoint union")]
    MixedSides,
    #[error("poset lacks {0}")]
    MissingMetadata(&'static str),
    #[error("claimed height has {needed} terms but only {found} anchors are given")]
    TooFewAnchors { needed: usize, found: usize },
}
