use super::{Element, LazyPoset, Presentation, Probe};

/// One end of an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Unbounded,
    Closed(Element),
    Open(Element),
}

enum Filter {
    Interval { lo: Bound, hi: Bound },
    /// Elements not above any listed element.
    Avoid(Vec<Element>),
    /// Elements below some listed element.
    Below(Vec<Element>),
}

struct Restricted {
    parent: LazyPoset,
    filter: Filter,
}

impl Restricted {
    fn admits(&self, x: Element) -> bool {
        let p = &self.parent;
        match &self.filter {
            Filter::Interval { lo, hi } => {
                let lo_ok = match *lo {
                    Bound::Unbounded => true,
                    Bound::Closed(a) => p.leq(a, x),
                    Bound::Open(a) => p.lt(a, x),
                };
                lo_ok
                    && match *hi {
                        Bound::Unbounded => true,
                        Bound::Closed(b) => p.leq(x, b),
                        Bound::Open(b) => p.lt(x, b),
                    }
            }
            Filter::Avoid(xs) => xs.iter().all(|&a| !p.leq(a, x)),
            Filter::Below(gens) => gens.iter().any(|&g| p.leq(x, g)),
        }
    }
}

impl Presentation for Restricted {
    fn probe(&self, position: usize) -> Probe {
        match self.parent.probe(position) {
            Probe::Element(e) if self.admits(e) => Probe::Element(e),
            Probe::Element(_) => Probe::Skip,
            other => other,
        }
    }

    fn position(&self, e: Element) -> Option<usize> {
        self.parent.position(e)
    }

    fn contains(&self, e: Element) -> bool {
        self.parent.contains(e) && self.admits(e)
    }

    fn leq(&self, a: Element, b: Element) -> bool {
        self.parent.leq(a, b)
    }

    fn label(&self, e: Element) -> String {
        self.parent.label(e)
    }
}

/// Restriction of `poset` to `{z | lo ⊑ z ⊑ hi}` with the given bound kinds.
pub fn interval(poset: &LazyPoset, lo: Bound, hi: Bound) -> LazyPoset {
    LazyPoset::new(Restricted {
        parent: poset.clone(),
        filter: Filter::Interval { lo, hi },
    })
}

/// `{x | x₀ ≰ x ∧ … ∧ x_k ≰ x}`: the elements not above any of `xs`. The
/// result is downward closed in `poset`.
pub fn avoid(poset: &LazyPoset, xs: &[Element]) -> LazyPoset {
    if xs.is_empty() {
        return poset.clone();
    }
    LazyPoset::new(Restricted {
        parent: poset.clone(),
        filter: Filter::Avoid(xs.to_vec()),
    })
}

/// `{x | ∃g ∈ generators, x ≤ g}`: the downward closure of `generators`.
pub fn restrict_below(poset: &LazyPoset, generators: &[Element]) -> LazyPoset {
    LazyPoset::new(Restricted {
        parent: poset.clone(),
        filter: Filter::Below(generators.to_vec()),
    })
}
