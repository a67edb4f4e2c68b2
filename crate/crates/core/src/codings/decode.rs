use std::collections::BTreeSet;

use crate::analysis::{self, Chain};
use crate::order::{DisjointUnion, Element};

use super::ladder::{Ladder, LadderKind};
use super::CodingError;

/// `{n < rungs | b_n^1 ∈ C}` for a strongly maximal chain `C` of an smax
/// ladder.
pub fn smax_decode(ladder: &Ladder, chain: &[usize]) -> Result<BTreeSet<u64>, CodingError> {
    if ladder.kind() != LadderKind::Smax {
        return Err(CodingError::WrongLadder);
    }
    if !analysis::is_strongly_maximal_chain(ladder.poset(), chain)? {
        return Err(CodingError::NotStronglyMaximal);
    }
    Ok((0..ladder.rung_count())
        .filter(|&n| chain.contains(&ladder.b(n, 1)))
        .map(|n| n as u64)
        .collect())
}

/// Every branch `i` with some `x ∈ C` such that `b_n^i ≤ x < a_{n+1}`, in
/// increasing order. A chain yields at most one.
pub fn psi_witnesses(ladder: &Ladder, chain: &[usize], n: usize) -> Vec<usize> {
    let p = ladder.poset();
    let top = ladder.a(n + 1);
    let mut found: Vec<usize> = ladder
        .branches(n)
        .iter()
        .enumerate()
        .filter(|(_, br)| chain.iter().any(|&x| p.le(br.b, x) && p.lt(x, top)))
        .map(|(i, _)| i)
        .collect();
    found.dedup();
    found
}

/// The branch `C` commits to at rung `n`, if any.
pub fn psi(ladder: &Ladder, chain: &Chain, n: usize) -> Option<usize> {
    psi_witnesses(ladder, chain.elements(), n).first().copied()
}

/// The side of a disjoint union holding every element of a nonempty chain.
pub fn side_of_chain(chain: &[Element]) -> Result<usize, CodingError> {
    let (&first, rest) = chain.split_first().ok_or(CodingError::EmptyChain)?;
    let side = DisjointUnion::side(first);
    if rest.iter().any(|&e| DisjointUnion::side(e) != side) {
        return Err(CodingError::MixedSides);
    }
    Ok(side)
}
