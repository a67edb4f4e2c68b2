use crate::order::{interval, linear, restrict_below, Bound, Element, LazyPoset, Metadata};
use crate::ordinal::Ordinal;

use super::params::ParamSet;
use super::CodingError;

/// `L_n^A`: a linear order of type `ω^α` if `n ∈ A`, else `ω^{α+1}`.
pub fn ak_linear(n: u64, a: &ParamSet, alpha: &Ordinal) -> LazyPoset {
    let exponent = if a.contains(n) { alpha.clone() } else { alpha.succ() };
    linear(Ordinal::omega_pow(exponent))
}

/// One piece of a decomposition, tagged with its claimed height.
#[derive(Debug, Clone)]
pub struct Segment {
    pub poset: LazyPoset,
    pub claimed_height: Ordinal,
    pub start: Element,
    /// `None` for the last, right-open segment.
    pub end: Option<Element>,
}

/// Cuts `P` at its metadata anchors into segments `P_[a_i, a_{i+1})`, one per
/// term `ω^{α_i}` of the claimed height, the last one open to the right.
/// Extra anchors beyond the number of terms are ignored.
pub fn decompose(poset: &LazyPoset) -> Result<Vec<Segment>, CodingError> {
    let meta = poset.metadata().ok_or(CodingError::MissingMetadata("metadata"))?;
    let height = meta
        .claimed_height
        .as_ref()
        .ok_or(CodingError::MissingMetadata("claimed_height"))?;
    let anchors = meta
        .anchors
        .as_ref()
        .ok_or(CodingError::MissingMetadata("anchors"))?;
    let terms = height.cnf_terms();
    if anchors.len() < terms.len() {
        return Err(CodingError::TooFewAnchors {
            needed: terms.len(),
            found: anchors.len(),
        });
    }
    let count = terms.len();
    Ok(terms
        .into_iter()
        .enumerate()
        .map(|(i, term)| {
            let start = anchors[i];
            let end = (i + 1 < count).then(|| anchors[i + 1]);
            let hi = end.map_or(Bound::Unbounded, Bound::Open);
            let piece = interval(poset, Bound::Closed(start), hi).with_metadata(Metadata {
                claimed_height: Some(term.clone()),
                claimed_cofinal_type: None,
                anchors: Some(vec![start]),
            });
            Segment {
                poset: piece,
                claimed_height: term,
                start,
                end,
            }
        })
        .collect())
}

/// `{x ∈ P | ∃y ∈ C  x ≤ y}` for a finite generating prefix `C`.
pub fn ideal_restrict(poset: &LazyPoset, generators: &[Element]) -> LazyPoset {
    restrict_below(poset, generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{height, longest_chain};
    use crate::order::{truncate, LinearOrder};

    #[test]
    fn ak_branches() {
        let w: Ordinal = "w".parse().unwrap();
        let w2: Ordinal = "w^2".parse().unwrap();
        let order = |n| ak_linear(n, &ParamSet::Evens, &Ordinal::one()).metadata().unwrap().claimed_height.clone();
        assert_eq!(order(2), Some(w));
        assert_eq!(order(3), Some(w2));
        let t = truncate(&ak_linear(3, &ParamSet::Evens, &Ordinal::one()), 10);
        assert!(t.poset.is_chain_set(&(0..10).collect::<Vec<_>>()));
    }

    #[test]
    fn single_term_heights_give_one_segment() {
        let p = linear("w^2".parse().unwrap());
        let meta = Metadata {
            anchors: Some(vec![Element(0)]),
            ..p.metadata().unwrap().clone()
        };
        let segs = decompose(&p.with_metadata(meta)).unwrap();
        assert_eq!(segs.len(), 1);
        assert_eq!(segs[0].poset.prefix(20, 1000), p.prefix(20, 1000));
    }

    #[test]
    fn linear_sum_splits_at_its_cut_point() {
        let o: Ordinal = "w^2+w".parse().unwrap();
        let lin = LinearOrder::new(o.clone());
        let cut = lin.element_for(&"w^2".parse().unwrap()).unwrap();
        let p = linear(o.clone()).with_metadata(Metadata {
            claimed_height: Some(o),
            claimed_cofinal_type: None,
            anchors: Some(vec![Element(0), cut]),
        });
        let segs = decompose(&p).unwrap();
        let heights: Vec<String> = segs.iter().map(|s| s.claimed_height.to_string()).collect();
        assert_eq!(heights, ["w^2", "w"]);
        assert!(segs[1].poset.prefix(30, 100_000).iter().all(|&e| lin.value(e).unwrap() >= "w^2".parse().unwrap()));

        // finite shadow: longest chains of the segment truncations add up
        let t = truncate(&p, 40);
        let total: usize = segs
            .iter()
            .map(|s| {
                let members: Vec<usize> = (0..t.elements.len()).filter(|&i| s.poset.contains(t.elements[i])).collect();
                let sub = truncate(&s.poset, members.len());
                longest_chain(&sub.poset).len()
            })
            .sum();
        assert_eq!(total, height(&t.poset));
    }

    #[test]
    fn missing_metadata_is_reported() {
        let bare = LazyPoset::new(crate::order::FinitePoset::chain(3));
        assert_eq!(decompose(&bare).unwrap_err(), CodingError::MissingMetadata("metadata"));
        let p = linear("w+1".parse().unwrap());
        assert_eq!(decompose(&p).unwrap_err(), CodingError::MissingMetadata("anchors"));
    }

    #[test]
    fn ideals_are_principal_on_single_generators() {
        let p = linear("w".parse().unwrap());
        let i = ideal_restrict(&p, &[Element(4)]);
        assert_eq!(i.prefix(10, 100), (0..5).map(Element).collect::<Vec<_>>());
    }
}
