//! Ordinals below ε₀, finite and lazily presented posets, exact chain
//! analysis, and maximal-chain operators driven by pseudo-generic bit
//! sources.

pub mod analysis;
pub mod chain;
pub mod codings;
pub mod order;
pub mod ordinal;
pub mod source;

pub use chain::{phi1, phi_alpha, ChainItem, ChainWindow, Membership, PhiChain};
pub use order::{Element, FinitePoset, LazyPoset, Lookup, Metadata, Probe};
pub use ordinal::Ordinal;
pub use source::BitSource;
