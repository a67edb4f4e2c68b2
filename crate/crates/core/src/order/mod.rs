//! Poset presentations.
//!
//! Every poset is exposed through [`Presentation`]: a probe over enumeration
//! positions plus a decidable order on opaque [`Element`] codes. Restrictions
//! ([`interval`], [`avoid`], [`restrict_below`]) share the element codes and
//! enumeration positions of the poset they restrict; a filtered-out position
//! probes as [`Probe::Skip`]. That keeps positions meaningful across every
//! layer, which the chain operators rely on when replaying enumerations.

mod finite;
mod linear;
mod restrict;
mod union;

pub use finite::{FinitePoset, PosetLoadError};
pub use linear::LinearOrder;
pub use restrict::{avoid, interval, restrict_below, Bound};
pub use union::DisjointUnion;

use std::fmt;
use std::sync::Arc;

use crate::ordinal::Ordinal;

/// Opaque element code, private to the poset family it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub u64);

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Result of probing one enumeration position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Probe {
    Element(Element),
    /// The position exists in the underlying enumeration but is not part of
    /// this poset.
    Skip,
    /// No element occurs at this or any later position.
    End,
}

/// Outcome of a bounded search over an enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lookup<T> {
    Found(T),
    /// The enumeration ended first.
    Absent,
    /// The position budget ran out before an answer was reached.
    Unknown,
}

/// Structural claims a lazily-presented poset can carry. They are not
/// checked: heights of infinite posets are not computable from the
/// presentation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Metadata {
    pub claimed_height: Option<Ordinal>,
    pub claimed_cofinal_type: Option<Ordinal>,
    /// Strictly increasing cut points (a finite prefix for infinite posets).
    pub anchors: Option<Vec<Element>>,
}

pub trait Presentation: Send + Sync {
    fn probe(&self, position: usize) -> Probe;

    /// Enumeration position of `e` in the underlying element space, whether
    /// or not `e` belongs to this particular restriction.
    fn position(&self, e: Element) -> Option<usize>;

    fn contains(&self, e: Element) -> bool;

    fn leq(&self, a: Element, b: Element) -> bool;

    fn label(&self, e: Element) -> String;

    fn metadata(&self) -> Option<&Metadata> {
        None
    }
}

/// Shared handle to a poset presentation.
#[derive(Clone)]
pub struct LazyPoset {
    inner: Arc<dyn Presentation>,
}

impl fmt::Debug for LazyPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LazyPoset").finish_non_exhaustive()
    }
}

/// Positions scanned by [`truncate`] before giving up on a sparse
/// restriction of an infinite poset.
pub const DEFAULT_SCAN_LIMIT: usize = 1 << 22;

impl LazyPoset {
    pub fn new<P: Presentation + 'static>(presentation: P) -> Self {
        LazyPoset {
            inner: Arc::new(presentation),
        }
    }

    pub fn from_arc(inner: Arc<dyn Presentation>) -> Self {
        LazyPoset { inner }
    }

    pub fn probe(&self, position: usize) -> Probe {
        self.inner.probe(position)
    }

    pub fn position(&self, e: Element) -> Option<usize> {
        self.inner.position(e)
    }

    pub fn contains(&self, e: Element) -> bool {
        self.inner.contains(e)
    }

    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.inner.leq(a, b)
    }

    pub fn lt(&self, a: Element, b: Element) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: Element, b: Element) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn label(&self, e: Element) -> String {
        self.inner.label(e)
    }

    pub fn metadata(&self) -> Option<&Metadata> {
        self.inner.metadata()
    }

    /// Iterates `(position, element)` pairs, stopping at the end of the
    /// enumeration or once `position_limit` positions have been probed.
    pub fn scan(&self, position_limit: usize) -> Scan<'_> {
        Scan {
            poset: self,
            next: 0,
            limit: position_limit,
            ended: false,
        }
    }

    /// The `n`-th enumerated element (0-based) among positions below
    /// `position_limit`.
    pub fn nth_within(&self, n: usize, position_limit: usize) -> Lookup<Element> {
        let mut seen = 0;
        for pos in 0..position_limit {
            match self.probe(pos) {
                Probe::End => return Lookup::Absent,
                Probe::Skip => {}
                Probe::Element(e) => {
                    if seen == n {
                        return Lookup::Found(e);
                    }
                    seen += 1;
                }
            }
        }
        Lookup::Unknown
    }

    /// Elements of the first `n` enumerated of this poset, or fewer if the
    /// enumeration ends or `position_limit` is reached.
    pub fn prefix(&self, n: usize, position_limit: usize) -> Vec<Element> {
        self.scan(position_limit).map(|(_, e)| e).take(n).collect()
    }

    /// Returns a copy of this poset carrying `meta`.
    pub fn with_metadata(&self, meta: Metadata) -> LazyPoset {
        LazyPoset::new(WithMetadata {
            inner: self.clone(),
            meta,
        })
    }
}

pub struct Scan<'a> {
    poset: &'a LazyPoset,
    next: usize,
    limit: usize,
    ended: bool,
}

impl Scan<'_> {
    /// True once the underlying enumeration reported its end, as opposed to
    /// the scan hitting its position limit.
    pub fn reached_end(&self) -> bool {
        self.ended
    }
}

impl Iterator for Scan<'_> {
    type Item = (usize, Element);

    fn next(&mut self) -> Option<Self::Item> {
        while !self.ended && self.next < self.limit {
            let pos = self.next;
            self.next += 1;
            match self.poset.probe(pos) {
                Probe::End => self.ended = true,
                Probe::Skip => {}
                Probe::Element(e) => return Some((pos, e)),
            }
        }
        None
    }
}

struct WithMetadata {
    inner: LazyPoset,
    meta: Metadata,
}

impl Presentation for WithMetadata {
    fn probe(&self, position: usize) -> Probe {
        self.inner.probe(position)
    }
    fn position(&self, e: Element) -> Option<usize> {
        self.inner.position(e)
    }
    fn contains(&self, e: Element) -> bool {
        self.inner.contains(e)
    }
    fn leq(&self, a: Element, b: Element) -> bool {
        self.inner.leq(a, b)
    }
    fn label(&self, e: Element) -> String {
        self.inner.label(e)
    }
    fn metadata(&self) -> Option<&Metadata> {
        Some(&self.meta)
    }
}

/// A finite window onto a poset: the first enumerated elements with the
/// inherited order.
#[derive(Debug, Clone)]
pub struct Truncation {
    pub poset: FinitePoset,
    /// `elements[i]` is the host element behind index `i` of `poset`.
    pub elements: Vec<Element>,
}

impl Truncation {
    pub fn index_of(&self, e: Element) -> Option<usize> {
        self.elements.iter().position(|&x| x == e)
    }

    pub fn element(&self, index: usize) -> Element {
        self.elements[index]
    }
}

/// Restricts `poset` to its first `n` enumerated elements, keeping
/// enumeration order. Scans at most [`DEFAULT_SCAN_LIMIT`] positions.
pub fn truncate(poset: &LazyPoset, n: usize) -> Truncation {
    truncate_within(poset, n, DEFAULT_SCAN_LIMIT)
}

pub fn truncate_within(poset: &LazyPoset, n: usize, position_limit: usize) -> Truncation {
    let elements = poset.prefix(n, position_limit);
    let size = elements.len();
    let mut le = vec![false; size * size];
    for (i, &a) in elements.iter().enumerate() {
        for (j, &b) in elements.iter().enumerate() {
            le[i * size + j] = i == j || poset.leq(a, b);
        }
    }
    let labels = elements.iter().map(|&e| poset.label(e)).collect();
    let poset = FinitePoset::from_matrix_unchecked(size, le, Some(labels));
    Truncation { poset, elements }
}

/// `true` iff every pair of `set` is comparable.
pub fn is_chain(poset: &LazyPoset, set: &[Element]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| poset.comparable(a, b)))
}

/// `true` iff every pair of distinct members of `set` is incomparable.
pub fn is_antichain(poset: &LazyPoset, set: &[Element]) -> bool {
    set.iter().enumerate().all(|(i, &a)| {
        set[i + 1..]
            .iter()
            .all(|&b| a == b || !poset.comparable(a, b))
    })
}

/// Lazy linear order of type `order_type`.
pub fn linear(order_type: Ordinal) -> LazyPoset {
    LazyPoset::new(LinearOrder::new(order_type))
}

/// `left ⊕ right`: cross-side pairs are incomparable.
pub fn disjoint_union(left: &LazyPoset, right: &LazyPoset) -> LazyPoset {
    LazyPoset::new(DisjointUnion::new(left.clone(), right.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> LazyPoset {
        LazyPoset::new(FinitePoset::chain(3))
    }

    #[test]
    fn nth_within_distinguishes_end_from_budget() {
        let p = chain3();
        assert_eq!(p.nth_within(2, 10), Lookup::Found(Element(2)));
        assert_eq!(p.nth_within(3, 10), Lookup::Absent);
        let w = linear(Ordinal::omega());
        assert_eq!(w.nth_within(3, 3), Lookup::Unknown);
    }

    #[test]
    fn truncate_examples() {
        let t = truncate(&linear(Ordinal::omega()), 4);
        assert_eq!(t.poset.len(), 4);
        assert!(t.poset.is_chain_set(&[0, 1, 2, 3]));
        assert_eq!(truncate(&chain3(), 0).poset.len(), 0);

        let u = disjoint_union(&linear(Ordinal::omega()), &linear(Ordinal::omega()));
        let t = truncate(&u, 4);
        // positions alternate sides: 0.0, 1.0, 0.1, 1.1
        assert!(t.poset.lt(0, 2));
        assert!(t.poset.lt(1, 3));
        for (a, b) in [(0, 1), (0, 3), (2, 1), (2, 3)] {
            assert!(!t.poset.comparable(a, b));
        }
    }

    #[test]
    fn chain_and_antichain_predicates() {
        let p = chain3();
        assert!(is_chain(&p, &[Element(1)]));
        assert!(is_antichain(&p, &[Element(1)]));
        assert!(is_chain(&p, &[Element(0), Element(2)]));
        assert!(!is_antichain(&p, &[Element(0), Element(2)]));
        let a = LazyPoset::new(FinitePoset::antichain(3));
        assert!(is_antichain(&a, &[Element(0), Element(1), Element(2)]));
        assert!(!is_chain(&a, &[Element(0), Element(1)]));
    }

    #[test]
    fn metadata_wrapper_preserves_order() {
        let meta = Metadata {
            claimed_height: Some(Ordinal::from(3)),
            ..Metadata::default()
        };
        let p = chain3().with_metadata(meta.clone());
        assert_eq!(p.metadata(), Some(&meta));
        assert!(p.lt(Element(0), Element(2)));
        assert_eq!(p.prefix(5, 10).len(), 3);
    }
}
