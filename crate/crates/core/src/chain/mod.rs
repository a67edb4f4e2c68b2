//! Chain extraction operators.
//!
//! [`phi1`] is the greedy chain of a host enumeration. [`phi_alpha`] recurses
//! through cut points read from a bit source, descending along fundamental
//! sequences until it reaches level 1.

mod anchors;
mod greedy;
mod phi;

use std::fmt;

use thiserror::Error;

use crate::order::{Element, LazyPoset};
use crate::ordinal::Ordinal;
use crate::source::BitSource;

pub use anchors::{block, build_anchors, Anchor, AnchorStop, AnchorStream};
pub use phi::PhiChain;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Membership {
    Yes,
    No,
    /// A search hit its fuel before deciding.
    Undetermined,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Yes => "yes",
            Membership::No => "no",
            Membership::Undetermined => "undetermined",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("chain level must be at least 1")]
    ZeroLevel,
    #[error("anchor {0} has not been found")]
    MissingAnchor(usize),
}

/// A chain element with the block indices that produced it, outermost
/// first. At level 1 the path is the element's index in the greedy chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainItem {
    pub element: Element,
    pub path: Vec<usize>,
}

impl ChainItem {
    /// Index of the outermost block.
    pub fn block(&self) -> usize {
        self.path[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainWindow {
    /// In increasing host order.
    pub items: Vec<ChainItem>,
    /// Fewer items than requested were found and the shortfall is due to
    /// fuel rather than the chain ending.
    pub fuel_limited: bool,
}

impl ChainWindow {
    pub fn elements(&self) -> Vec<Element> {
        self.items.iter().map(|item| item.element).collect()
    }
}

/// Greedy chain: `x_n` joins iff it lies above every earlier member.
pub fn phi1(host: &LazyPoset, fuel: usize) -> PhiChain {
    PhiChain::new(host.clone(), Ordinal::one(), BitSource::seeded(0), fuel).expect("level one is positive")
}

pub fn phi_alpha(host: &LazyPoset, alpha: &Ordinal, source: &BitSource, fuel: usize) -> Result<PhiChain, ChainError> {
    PhiChain::new(host.clone(), alpha.clone(), source.clone(), fuel)
}
