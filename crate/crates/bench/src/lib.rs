//! Shared fixtures for the benchmarks.

use maxchain_core::codings::{smax_ladder, Ladder, ParamSet, Trunc};
use maxchain_core::{FinitePoset, LazyPoset, Ordinal};

/// A layered poset: `layers` antichains of `width`, each element below
/// every element of the next layer except its own column.
pub fn layered(layers: usize, width: usize) -> FinitePoset {
    let mut pairs = Vec::new();
    for l in 0..layers.saturating_sub(1) {
        for i in 0..width {
            for j in 0..width {
                if i != j || width == 1 {
                    pairs.push((l * width + i, (l + 1) * width + j));
                }
            }
        }
    }
    FinitePoset::from_pairs(layers * width, &pairs).expect("layer edges form a DAG")
}

pub fn ordinal(text: &str) -> Ordinal {
    text.parse().expect("fixture ordinal")
}

pub fn linear(text: &str) -> LazyPoset {
    maxchain_core::order::linear(ordinal(text))
}

pub fn ladder(rungs: usize) -> Ladder {
    smax_ladder(&ParamSet::Odds, Trunc::new(rungs))
}
