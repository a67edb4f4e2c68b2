//! Text form of ordinals.
//!
//! ```text
//! ordinal := "0" | part ("+" part)*
//! part    := nat | "w" ["^" exp] ["*" nat]
//! exp     := nat | "w" | "(" ordinal ")"
//! ```
//!
//! Only the canonical printed form is accepted, so `parse` and `Display` are
//! mutually inverse.

use std::str::FromStr;

use thiserror::Error;

use super::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseOrdinalError {
    #[error("unexpected end of input at byte {0}")]
    UnexpectedEnd(usize),
    #[error("unexpected character {found:?} at byte {at}")]
    Unexpected { at: usize, found: char },
    #[error("exponents must strictly decrease (term at byte {0})")]
    NotDecreasing(usize),
    #[error("number at byte {0} is not a positive decimal without leading zeros")]
    BadNumber(usize),
    #[error("{0:?} is not in canonical form (expected {1:?})")]
    NonCanonical(String, String),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseOrdinalError> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(ParseOrdinalError::Unexpected {
                at: self.pos,
                found: b as char,
            }),
            None => Err(ParseOrdinalError::UnexpectedEnd(self.pos)),
        }
    }

    fn nat(&mut self) -> Result<u64, ParseOrdinalError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.peek() {
                Some(b) => Err(ParseOrdinalError::Unexpected {
                    at: start,
                    found: b as char,
                }),
                None => Err(ParseOrdinalError::UnexpectedEnd(start)),
            };
        }
        let digits = &self.src[start..self.pos];
        if digits[0] == b'0' {
            return Err(ParseOrdinalError::BadNumber(start));
        }
        std::str::from_utf8(digits)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(ParseOrdinalError::BadNumber(start))
    }

    fn ordinal(&mut self) -> Result<Ordinal, ParseOrdinalError> {
        if self.peek() == Some(b'0') {
            self.pos += 1;
            return Ok(Ordinal::zero());
        }
        let mut out = Ordinal::zero();
        loop {
            let at = self.pos;
            let (exponent, coefficient) = self.part()?;
            if out.terms.last().is_some_and(|t| t.exponent <= exponent) {
                return Err(ParseOrdinalError::NotDecreasing(at));
            }
            out.push_term_unchecked(exponent, coefficient);
            if self.peek() == Some(b'+') {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }

    fn part(&mut self) -> Result<(Ordinal, u64), ParseOrdinalError> {
        if self.peek() != Some(b'w') {
            return Ok((Ordinal::zero(), self.nat()?));
        }
        self.pos += 1;
        let exponent = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.exponent()?
        } else {
            Ordinal::one()
        };
        let coefficient = if self.peek() == Some(b'*') {
            self.pos += 1;
            self.nat()?
        } else {
            1
        };
        Ok((exponent, coefficient))
    }

    fn exponent(&mut self) -> Result<Ordinal, ParseOrdinalError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                Ok(Ordinal::omega())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.ordinal()?;
                self.expect(b')')?;
                Ok(inner)
            }
            _ => Ok(Ordinal::from(self.nat()?)),
        }
    }
}

impl FromStr for Ordinal {
    type Err = ParseOrdinalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let value = parser.ordinal()?;
        if let Some(b) = parser.peek() {
            return Err(ParseOrdinalError::Unexpected {
                at: parser.pos,
                found: b as char,
            });
        }
        let printed = value.to_string();
        if printed != s {
            return Err(ParseOrdinalError::NonCanonical(s.to_owned(), printed));
        }
        Ok(value)
    }
}
