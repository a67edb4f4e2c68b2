#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use maxchain_core::{FinitePoset, Ordinal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every partial order on `0..n`, found by filtering all relations that are
/// antisymmetric by construction for transitivity.
pub fn all_posets(n: usize) -> Vec<FinitePoset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for &(i, j) in &pairs {
            match code % 3 {
                1 => le[i * n + j] = true,
                2 => le[j * n + i] = true,
                _ => {}
            }
            code /= 3;
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| !le[a * n + b] || (0..n).all(|c| !le[b * n + c] || le[a * n + c]))
        });
        if transitive {
            out.push(FinitePoset::from_matrix(n, le).expect("filtered relations are partial orders"));
        }
    }
    out
}

/// A random poset on `n` elements: a random DAG over a shuffled labelling,
/// closed transitively.
pub fn random_poset(rng: &mut impl Rng, n: usize) -> FinitePoset {
    let density: f64 = rng.gen_range(0.1..0.7);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((labels[i], labels[j]));
            }
        }
    }
    FinitePoset::from_pairs(n, &pairs).expect("a DAG closes to a partial order")
}

/// A random downward-closed subset of `p`.
pub fn random_down_set(rng: &mut impl Rng, p: &FinitePoset) -> Vec<usize> {
    let gens: Vec<usize> = (0..p.len()).filter(|_| rng.gen_bool(0.3)).collect();
    (0..p.len()).filter(|&x| gens.iter().any(|&g| p.le(x, g))).collect()
}

pub fn ord(s: &str) -> Ordinal {
    s.parse().expect("fixture ordinals parse")
}

/// A random ordinal of nesting depth at most `depth`.
pub fn random_ordinal(rng: &mut impl Rng, depth: usize) -> Ordinal {
    let count = rng.gen_range(0..4);
    let mut exponents: Vec<Ordinal> = (0..count)
        .map(|_| {
            if depth == 0 || rng.gen_bool(0.5) {
                Ordinal::from(rng.gen_range(0..4u64))
            } else {
                random_ordinal(rng, depth - 1)
            }
        })
        .collect();
    exponents.sort();
    exponents.dedup();
    exponents.reverse();
    Ordinal::from_terms(exponents.into_iter().map(|e| (e, rng.gen_range(1..5u64)))).expect("sorted distinct exponents")
}
