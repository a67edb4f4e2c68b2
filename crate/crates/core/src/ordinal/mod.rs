//! Ordinals below ε₀ in Cantor normal form.
//!
//! An [`Ordinal`] is a strictly decreasing sequence of terms `ω^e · c` with
//! `c ≥ 1`, where each exponent is itself an [`Ordinal`]. The empty sequence
//! is zero. Because the representation is canonical, structural equality is
//! ordinal equality and the derived [`Hash`] is sound.

mod text;

pub use text::ParseOrdinalError;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("fundamental sequences are undefined for zero")]
    ZeroHasNoFundamentalSequence,
}

/// A single Cantor normal form term `ω^exponent · coefficient`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exponent: Ordinal,
    coefficient: u64,
}

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> u64 {
        self.coefficient
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::from(1u64)
    }

    /// ω itself.
    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// `ω^exponent`. `omega_pow(0)` is `1`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal {
            terms: vec![Term {
                exponent,
                coefficient: 1,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, returning
    /// `None` unless the exponents strictly decrease and every coefficient is
    /// positive.
    pub fn from_terms<I>(terms: I) -> Option<Self>
    where
        I: IntoIterator<Item = (Ordinal, u64)>,
    {
        let mut out: Vec<Term> = Vec::new();
        for (exponent, coefficient) in terms {
            if coefficient == 0 {
                return None;
            }
            if let Some(prev) = out.last() {
                if prev.exponent <= exponent {
                    return None;
                }
            }
            out.push(Term {
                exponent,
                coefficient,
            });
        }
        Some(Ordinal { terms: out })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(n)` when the ordinal is the natural number `n`.
    pub fn as_natural(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_natural().is_some()
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    /// Exponent of the leading term; zero for zero.
    pub fn leading_exponent(&self) -> Ordinal {
        self.terms
            .first()
            .map(|t| t.exponent.clone())
            .unwrap_or_default()
    }

    /// Immediate predecessor of a successor ordinal.
    pub fn predecessor(&self) -> Option<Ordinal> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor has a last term");
        if last.coefficient == 1 {
            terms.pop();
        } else {
            last.coefficient -= 1;
        }
        Some(Ordinal { terms })
    }

    pub fn succ(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// Ordinal addition. Terms of `self` below the leading exponent of
    /// `other` are absorbed.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        let Some(head) = other.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exponent >= head.exponent)
            .cloned()
            .collect();
        let mut rest = other.terms.iter();
        if let Some(last) = terms.last_mut() {
            if last.exponent == head.exponent {
                last.coefficient = last
                    .coefficient
                    .checked_add(head.coefficient)
                    .expect("ordinal coefficient overflow");
                rest.next();
            }
        }
        terms.extend(rest.cloned());
        Ordinal { terms }
    }

    /// `self · n` for a natural `n`: the leading coefficient is multiplied
    /// and the tail is kept.
    pub fn scale(&self, n: u64) -> Ordinal {
        if n == 0 || self.is_zero() {
            return Ordinal::zero();
        }
        let mut terms = self.terms.clone();
        terms[0].coefficient = terms[0]
            .coefficient
            .checked_mul(n)
            .expect("ordinal coefficient overflow");
        Ordinal { terms }
    }

    /// Expands the normal form into its non-increasing list of `ω^e` summands.
    pub fn cnf_terms(&self) -> Vec<Ordinal> {
        self.terms
            .iter()
            .flat_map(|t| {
                std::iter::repeat_with(|| Ordinal::omega_pow(t.exponent.clone()))
                    .take(t.coefficient as usize)
            })
            .collect()
    }

    /// The `i`-th entry of the canonical sequence `α_i` with
    /// `ω^α = Σ_i ω^{α_i}`.
    ///
    /// Successors map to their predecessor for every `i`. For a limit
    /// `α = γ + ω^δ·c` the sequence is `γ + ω^δ·(c−1) + ω^{δ'}·(i+1)` when
    /// `δ = δ'+1`, and `γ + ω^δ·(c−1) + ω^{δ_i}` when `δ` is itself a limit.
    /// For `α ≥ 2` every entry is at least `1`.
    pub fn fundamental(&self, i: u64) -> Result<Ordinal, OrdinalError> {
        if self.is_zero() {
            return Err(OrdinalError::ZeroHasNoFundamentalSequence);
        }
        if let Some(pred) = self.predecessor() {
            return Ok(pred);
        }
        let (last, init) = self.terms.split_last().expect("nonzero");
        let mut terms = init.to_vec();
        if last.coefficient > 1 {
            terms.push(Term {
                exponent: last.exponent.clone(),
                coefficient: last.coefficient - 1,
            });
        }
        let tail = match last.exponent.predecessor() {
            Some(prev) => Term {
                exponent: prev,
                coefficient: i.checked_add(1).expect("index overflow"),
            },
            None => Term {
                exponent: last.exponent.fundamental(i)?,
                coefficient: 1,
            },
        };
        terms.push(tail);
        Ok(Ordinal { terms })
    }

    /// Weight used by the canonical enumeration of linear orders: the sum
    /// over terms of the coefficient plus the weight of the exponent.
    pub fn size(&self) -> usize {
        self.terms
            .iter()
            .map(|t| t.coefficient as usize + t.exponent.size())
            .sum()
    }

    /// Depth of exponent nesting; zero and naturals have depth 0.
    pub fn depth(&self) -> usize {
        self.terms
            .iter()
            .filter(|t| !t.exponent.is_zero())
            .map(|t| 1 + t.exponent.depth())
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn push_term_unchecked(&mut self, exponent: Ordinal, coefficient: u64) {
        debug_assert!(coefficient > 0);
        debug_assert!(self.terms.last().is_none_or(|t| t.exponent > exponent));
        self.terms.push(Term {
            exponent,
            coefficient,
        });
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        if n == 0 {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![Term {
                    exponent: Ordinal::zero(),
                    coefficient: n,
                }],
            }
        }
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a
                .exponent
                .cmp(&b.exponent)
                .then(a.coefficient.cmp(&b.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, t) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str("+")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            f.write_str("w")?;
            match t.exponent.as_natural() {
                Some(1) => {}
                Some(n) => write!(f, "^{n}")?,
                None if t.exponent == Ordinal::omega() => f.write_str("^w")?,
                None => write!(f, "^({})", t.exponent)?,
            }
            if t.coefficient > 1 {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}
