//! Exact height and chain analysis of finite posets.
//!
//! These routines are the brute-force ground truth the lazy machinery is
//! checked against. Chains are index lists in increasing order; ties between
//! equally long chains go to the lexicographically least index sequence.

use thiserror::Error;

use crate::order::FinitePoset;

/// Result cap for [`inclusion_maximal_chains`].
pub const INCLUSION_MAXIMAL_CAP: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("the given set is not a chain")]
    NotAChain,
    #[error("more than {cap} inclusion-maximal chains")]
    TooMany { cap: usize },
}

/// A chain of a finite poset, stored bottom-up.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Chain {
    elements: Vec<usize>,
}

impl Chain {
    /// Sorts `set` into increasing order, failing if it is not a chain.
    pub fn from_set(poset: &FinitePoset, set: &[usize]) -> Result<Self, AnalysisError> {
        if !poset.is_chain_set(set) {
            return Err(AnalysisError::NotAChain);
        }
        let mut elements = set.to_vec();
        elements.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if poset.le(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        elements.dedup();
        Ok(Chain { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(&x)
    }

    /// The `i`-th member in increasing order.
    pub fn nth(&self, i: usize) -> Option<usize> {
        self.elements.get(i).copied()
    }
}

/// Elements in an order compatible with the poset: strictly smaller elements
/// have strictly smaller down-sets.
fn linear_extension(poset: &FinitePoset) -> Vec<usize> {
    let n = poset.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| ((0..n).filter(|&y| poset.le(y, x)).count(), x));
    order
}

/// `ht_P(x)` for every element, by longest-path dynamic programming.
pub fn heights(poset: &FinitePoset) -> Vec<usize> {
    let mut ht = vec![0; poset.len()];
    for x in linear_extension(poset) {
        ht[x] = (0..poset.len())
            .filter(|&y| poset.lt(y, x))
            .map(|y| ht[y] + 1)
            .max()
            .unwrap_or(0);
    }
    ht
}

pub fn height_of(poset: &FinitePoset, x: usize) -> usize {
    heights(poset)[x]
}

/// `sup { ht_P(x) + 1 }`, which for finite posets is the cardinality of a
/// longest chain.
pub fn height(poset: &FinitePoset) -> usize {
    heights(poset).into_iter().map(|h| h + 1).max().unwrap_or(0)
}

/// Length of the longest chain having `x` as its least element.
fn up_lengths(poset: &FinitePoset) -> Vec<usize> {
    let mut up = vec![1; poset.len()];
    for x in linear_extension(poset).into_iter().rev() {
        up[x] = 1 + (0..poset.len())
            .filter(|&y| poset.lt(x, y))
            .map(|y| up[y])
            .max()
            .unwrap_or(0);
    }
    up
}

pub fn longest_chain(poset: &FinitePoset) -> Chain {
    let up = up_lengths(poset);
    let Some(&best) = up.iter().max() else {
        return Chain::default();
    };
    let mut elements = Vec::with_capacity(best);
    let mut current = (0..poset.len()).find(|&x| up[x] == best);
    while let Some(x) = current {
        elements.push(x);
        current = (0..poset.len()).find(|&y| poset.lt(x, y) && up[y] + 1 == up[x]);
    }
    Chain { elements }
}

/// A chain meeting every height level exactly once, built level by level
/// from the height function rather than from chain lengths.
pub fn strongly_maximal_chain(poset: &FinitePoset) -> Chain {
    let ht = heights(poset);
    let h = height(poset);
    if h == 0 {
        return Chain::default();
    }
    let n = poset.len();
    // extends[x]: some chain through levels ht[x]..h-1 starts at x
    let mut extends = vec![false; n];
    for level in (0..h).rev() {
        for x in (0..n).filter(|&x| ht[x] == level) {
            extends[x] = level == h - 1
                || (0..n).any(|y| ht[y] == level + 1 && extends[y] && poset.lt(x, y));
        }
    }
    let mut elements = Vec::with_capacity(h);
    for level in 0..h {
        let next = (0..n)
            .find(|&y| {
                ht[y] == level
                    && extends[y]
                    && elements.last().is_none_or(|&prev| poset.lt(prev, y))
            })
            .expect("a level-by-level chain exists in every finite poset");
        elements.push(next);
    }
    Chain { elements }
}

/// Order type (here: cardinality) equals the height of the poset.
pub fn is_maximal_chain(poset: &FinitePoset, set: &[usize]) -> Result<bool, AnalysisError> {
    let chain = Chain::from_set(poset, set)?;
    Ok(chain.len() == height(poset))
}

/// For every `k < ht(P)` some member has height exactly `k`.
pub fn is_strongly_maximal_chain(
    poset: &FinitePoset,
    set: &[usize],
) -> Result<bool, AnalysisError> {
    let chain = Chain::from_set(poset, set)?;
    let ht = heights(poset);
    let mut seen = vec![false; height(poset)];
    for &x in chain.elements() {
        seen[ht[x]] = true;
    }
    Ok(seen.into_iter().all(|s| s))
}

/// Every chain that is maximal under inclusion, either in the whole poset or
/// in the open interval `(lo, hi)`. Sorted and deduplicated.
pub fn inclusion_maximal_chains(
    poset: &FinitePoset,
    between: Option<(usize, usize)>,
) -> Result<Vec<Chain>, AnalysisError> {
    let members: Vec<usize> = match between {
        None => (0..poset.len()).collect(),
        Some((lo, hi)) => (0..poset.len())
            .filter(|&x| poset.lt(lo, x) && poset.lt(x, hi))
            .collect(),
    };
    let covers = |x: usize| -> Vec<usize> {
        members
            .iter()
            .copied()
            .filter(|&y| {
                poset.lt(x, y) && !members.iter().any(|&z| poset.lt(x, z) && poset.lt(z, y))
            })
            .collect()
    };
    let minimal: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&x| !members.iter().any(|&y| poset.lt(y, x)))
        .collect();

    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = minimal.into_iter().map(|x| vec![x]).collect();
    while let Some(path) = stack.pop() {
        let top = *path.last().expect("paths are nonempty");
        let next = covers(top);
        if next.is_empty() {
            if out.len() == INCLUSION_MAXIMAL_CAP {
                return Err(AnalysisError::TooMany {
                    cap: INCLUSION_MAXIMAL_CAP,
                });
            }
            out.push(Chain { elements: path });
            continue;
        }
        for y in next {
            let mut longer = path.clone();
            longer.push(y);
            stack.push(longer);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Length of the longest chain of the poset containing every element of
/// `set`.
pub fn max_chain_through(poset: &FinitePoset, set: &[usize]) -> Result<usize, AnalysisError> {
    let chain = Chain::from_set(poset, set)?;
    let n = poset.len();
    let els = chain.elements();
    let (Some(&first), Some(&last)) = (els.first(), els.last()) else {
        return Ok(height(poset));
    };
    let longest_between = |lo: Option<usize>, hi: Option<usize>| -> usize {
        let inside = |z: usize| {
            lo.is_none_or(|a| poset.lt(a, z)) && hi.is_none_or(|b| poset.lt(z, b))
        };
        let mut best = vec![0usize; n];
        let mut overall = 0;
        for z in linear_extension(poset).into_iter().filter(|&z| inside(z)) {
            best[z] = 1 + (0..n)
                .filter(|&y| inside(y) && poset.lt(y, z))
                .map(|y| best[y])
                .max()
                .unwrap_or(0);
            overall = overall.max(best[z]);
        }
        overall
    };
    let mut total = els.len() + longest_between(None, Some(first)) + longest_between(Some(last), None);
    for pair in els.windows(2) {
        total += longest_between(Some(pair[0]), Some(pair[1]));
    }
    Ok(total)
}
