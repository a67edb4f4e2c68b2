use super::{Element, LazyPoset, Presentation, Probe};

/// `L₀ ⊕ L₁`. Side `s` element `c` is coded `2c + s`; even positions
/// enumerate side 0 and odd positions side 1.
pub struct DisjointUnion {
    sides: [LazyPoset; 2],
}

impl DisjointUnion {
    pub fn new(left: LazyPoset, right: LazyPoset) -> Self {
        DisjointUnion {
            sides: [left, right],
        }
    }

    pub fn side(e: Element) -> usize {
        (e.0 % 2) as usize
    }

    pub fn inner(e: Element) -> Element {
        Element(e.0 / 2)
    }

    pub fn tag(side: usize, inner: Element) -> Element {
        debug_assert!(side < 2);
        Element(inner.0 * 2 + side as u64)
    }

    pub fn side_poset(&self, side: usize) -> &LazyPoset {
        &self.sides[side]
    }
}

impl Presentation for DisjointUnion {
    fn probe(&self, position: usize) -> Probe {
        let side = position % 2;
        let inner = position / 2;
        match self.sides[side].probe(inner) {
            Probe::Element(e) => Probe::Element(DisjointUnion::tag(side, e)),
            Probe::Skip => Probe::Skip,
            Probe::End => {
                // Later positions of the other side start at inner (side 0)
                // or inner + 1 (side 1).
                let other_start = inner + side;
                if self.sides[1 - side].probe(other_start) == Probe::End {
                    Probe::End
                } else {
                    Probe::Skip
                }
            }
        }
    }

    fn position(&self, e: Element) -> Option<usize> {
        let side = DisjointUnion::side(e);
        self.sides[side]
            .position(DisjointUnion::inner(e))
            .map(|p| 2 * p + side)
    }

    fn contains(&self, e: Element) -> bool {
        self.sides[DisjointUnion::side(e)].contains(DisjointUnion::inner(e))
    }

    fn leq(&self, a: Element, b: Element) -> bool {
        let side = DisjointUnion::side(a);
        side == DisjointUnion::side(b)
            && self.sides[side].leq(DisjointUnion::inner(a), DisjointUnion::inner(b))
    }

    fn label(&self, e: Element) -> String {
        let side = DisjointUnion::side(e);
        format!("{side}.{}", self.sides[side].label(DisjointUnion::inner(e)))
    }
}
