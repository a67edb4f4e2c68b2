//! Bit streams that stand in for generic sets, and the codings read off them.
//!
//! A seeded source emits the low bit of `mix(seed + i·0x9E3779B97F4A7C15)`
//! at position `i`, where `mix` is the splitmix64 finalizer
//! (`z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
//! z *= 0x94D049BB133111EB; z ^= z >> 31`). The increment is odd, so over
//! one period of 2⁶⁴ positions every 64-bit word is mixed exactly once and
//! exactly half of the bits are ones: a seeded stream has infinitely many
//! ones. Positions are `u128` and wrap modulo 2⁶⁴ for seeded streams.
//!
//! All codings use the Cantor pairing `⟨x, y⟩ = (x+y)(x+y+1)/2 + y`.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use thiserror::Error;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SourceError {
    #[error("bit source exhausted at position {0}")]
    Exhausted(u128),
    #[error("split position overflowed 128 bits")]
    PositionOverflow,
}

#[derive(Debug, Error)]
pub enum SourceLoadError {
    #[error("reading {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("unexpected character {found:?} in bit file")]
    BadCharacter { found: char },
    #[error("repeating pattern must contain a 1")]
    NoOnes,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Seeded(u64),
    File(PathBuf),
    Explicit,
    /// A finite pattern repeated forever.
    Repeating,
    Split { parent: Box<Provenance>, index: u128 },
}

#[derive(Debug)]
enum Repr {
    Seeded(u64),
    Finite(Vec<bool>),
    Cycle(Vec<bool>),
    Split { parent: BitSource, index: u128 },
}

#[derive(Debug, Clone)]
pub struct BitSource {
    repr: Arc<Repr>,
    provenance: Provenance,
}

pub fn splitmix64_mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl BitSource {
    pub fn seeded(seed: u64) -> Self {
        BitSource {
            repr: Arc::new(Repr::Seeded(seed)),
            provenance: Provenance::Seeded(seed),
        }
    }

    /// A finite stream; reading past the end is an exhaustion error.
    pub fn explicit(bits: Vec<bool>) -> Self {
        BitSource {
            repr: Arc::new(Repr::Finite(bits)),
            provenance: Provenance::Explicit,
        }
    }

    /// Parses `'0'`/`'1'` characters, ignoring whitespace.
    pub fn parse_bits(text: &str) -> Result<Vec<bool>, SourceLoadError> {
        text.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                found => Err(SourceLoadError::BadCharacter { found }),
            })
            .collect()
    }

    pub fn from_file(path: &Path) -> Result<Self, SourceLoadError> {
        let text = std::fs::read_to_string(path).map_err(|source| SourceLoadError::Io {
            path: path.to_owned(),
            source,
        })?;
        let bits = Self::parse_bits(&text)?;
        Ok(BitSource {
            repr: Arc::new(Repr::Finite(bits)),
            provenance: Provenance::File(path.to_owned()),
        })
    }

    /// `pattern` repeated forever.
    pub fn repeating(pattern: Vec<bool>) -> Result<Self, SourceLoadError> {
        if !pattern.contains(&true) {
            return Err(SourceLoadError::NoOnes);
        }
        Ok(BitSource {
            repr: Arc::new(Repr::Cycle(pattern)),
            provenance: Provenance::Repeating,
        })
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn bit(&self, position: u128) -> Result<bool, SourceError> {
        match &*self.repr {
            Repr::Seeded(seed) => {
                let step = position as u64;
                let z = seed.wrapping_add(step.wrapping_mul(GOLDEN_GAMMA));
                Ok(splitmix64_mix(z) & 1 == 1)
            }
            Repr::Finite(bits) => usize::try_from(position)
                .ok()
                .and_then(|p| bits.get(p).copied())
                .ok_or(SourceError::Exhausted(position)),
            Repr::Cycle(bits) => Ok(bits[(position % bits.len() as u128) as usize]),
            Repr::Split { parent, index } => {
                let pos = pair_u128(*index, position).ok_or(SourceError::PositionOverflow)?;
                parent.bit(pos)
            }
        }
    }

    /// The sub-stream `m ↦ bit(⟨index, m⟩)`. Distinct indices read disjoint
    /// positions of `self`.
    pub fn split(&self, index: u128) -> BitSource {
        BitSource {
            repr: Arc::new(Repr::Split {
                parent: self.clone(),
                index,
            }),
            provenance: Provenance::Split {
                parent: Box::new(self.provenance.clone()),
                index,
            },
        }
    }

    pub fn gaps(&self) -> GapReader {
        GapReader {
            source: self.clone(),
            position: 0,
            started: false,
        }
    }
}

/// Successive values `f_G(0), f_G(1), …`: the number of zeros between the
/// `n`-th and `(n+1)`-th one, ones counted from 0. Leading zeros are skipped.
#[derive(Debug, Clone)]
pub struct GapReader {
    source: BitSource,
    position: u128,
    started: bool,
}

impl GapReader {
    fn next_one(&mut self) -> Result<u64, SourceError> {
        let mut zeros = 0u64;
        loop {
            let bit = self.source.bit(self.position)?;
            self.position += 1;
            if bit {
                return Ok(zeros);
            }
            zeros += 1;
        }
    }

    pub fn next_gap(&mut self) -> Result<u64, SourceError> {
        if !self.started {
            self.next_one()?;
            self.started = true;
        }
        self.next_one()
    }

    /// Bits consumed so far.
    pub fn consumed(&self) -> u128 {
        self.position
    }
}

/// `f_G(n)`.
pub fn gap(source: &BitSource, n: usize) -> Result<u64, SourceError> {
    let mut reader = source.gaps();
    for _ in 0..n {
        reader.next_gap()?;
    }
    reader.next_gap()
}

pub fn pair(x: u64, y: u64) -> u64 {
    let s = x + y;
    s * (s + 1) / 2 + y
}

fn pair_u128(x: u128, y: u128) -> Option<u128> {
    let s = x.checked_add(y)?;
    let t = if s % 2 == 0 {
        (s / 2).checked_mul(s + 1)?
    } else {
        s.checked_mul(s.div_ceil(2))?
    };
    t.checked_add(y)
}

pub fn unpair(z: u64) -> (u64, u64) {
    // largest w with w(w+1)/2 <= z
    let mut w = ((8.0 * z as f64 + 1.0).sqrt() as u64).saturating_sub(1) / 2;
    while (w + 1) * (w + 2) / 2 <= z {
        w += 1;
    }
    while w * (w + 1) / 2 > z {
        w -= 1;
    }
    let y = z - w * (w + 1) / 2;
    (w - y, y)
}

/// `⟨a, b̄⟩` decoded from a natural number.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnchorTuple {
    pub a_index: u64,
    pub b_indices: Vec<u64>,
}

/// `v = ⟨a, s⟩` with `s` a list code: `0` is empty and `c > 0` is
/// `h :: decode(t)` where `⟨h, t⟩ = c − 1`. Every natural decodes.
pub fn decode_tuple(v: u64) -> AnchorTuple {
    let (a_index, mut code) = unpair(v);
    let mut b_indices = Vec::new();
    while code > 0 {
        let (head, tail) = unpair(code - 1);
        b_indices.push(head);
        code = tail;
    }
    AnchorTuple { a_index, b_indices }
}

pub fn encode_tuple(tuple: &AnchorTuple) -> u64 {
    let code = tuple
        .b_indices
        .iter()
        .rev()
        .fold(0, |tail, &head| pair(head, tail) + 1);
    pair(tuple.a_index, code)
}
