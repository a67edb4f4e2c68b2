//! Family descriptor files.
//!
//! ```text
//! # comments and blank lines are ignored
//! family: smax            # smax | maxnot | linear | disjoint_union | ak
//! alpha: w+1              # smax, maxnot, ak
//! A: finite{1,3}          # smax, maxnot, ak: evens | odds | finite{..} | mod{m,r}
//! trunc: 3,3,7            # smax, maxnot (optional): rungs,short,long
//! ```
//!
//! `linear` takes `type: <ordinal>`, `disjoint_union` takes `left:` and
//! `right:` ordinals, and `ak` takes `n: <natural>`. Keys may appear once
//! and in any order; values run to the end of the line or to a `#`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::order::{disjoint_union, linear, LazyPoset};
use crate::ordinal::Ordinal;

use super::decompose::ak_linear;
use super::ladder::{maxnot_ladder, maxnot_poset, smax_ladder, smax_poset, Ladder, MaxnotSpec, SmaxSpec, Trunc};
use super::params::ParamSet;

#[derive(Debug, Clone)]
pub enum Family {
    Linear { order_type: Ordinal },
    DisjointUnion { left: Ordinal, right: Ordinal },
    Ak { n: u64, alpha: Ordinal, a: ParamSet },
    Smax(SmaxSpec),
    Maxnot(MaxnotSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FamilyError {
    pub line: usize,
    pub message: String,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Linear { .. } => "linear",
            Family::DisjointUnion { .. } => "disjoint_union",
            Family::Ak { .. } => "ak",
            Family::Smax(_) => "smax",
            Family::Maxnot(_) => "maxnot",
        }
    }

    pub fn build(&self) -> LazyPoset {
        match self {
            Family::Linear { order_type } => linear(order_type.clone()),
            Family::DisjointUnion { left, right } => disjoint_union(&linear(left.clone()), &linear(right.clone())),
            Family::Ak { n, alpha, a } => ak_linear(*n, a, alpha),
            Family::Smax(spec) => smax_poset(spec),
            Family::Maxnot(spec) => maxnot_poset(spec),
        }
    }

    fn trunc(&self) -> Option<Trunc> {
        match self {
            Family::Smax(spec) => spec.trunc,
            Family::Maxnot(spec) => spec.trunc,
            _ => None,
        }
    }

    /// The truncated ladder of an smax or maxnot family, if it has one.
    pub fn ladder(&self) -> Option<Ladder> {
        let trunc = self.trunc()?;
        match self {
            Family::Smax(spec) => Some(smax_ladder(&spec.a, trunc)),
            Family::Maxnot(spec) => Some(maxnot_ladder(&spec.a, trunc)),
            _ => None,
        }
    }

    /// The same family truncated to `rungs` rungs, keeping any branch
    /// lengths it already had. `None` for families without rungs.
    pub fn with_rungs(&self, rungs: usize) -> Option<Family> {
        let trunc = match self.trunc() {
            Some(t) => Trunc { rungs, ..t },
            None => Trunc::new(rungs),
        };
        match self {
            Family::Smax(spec) => Some(Family::Smax(SmaxSpec {
                trunc: Some(trunc),
                ..spec.clone()
            })),
            Family::Maxnot(spec) => Some(Family::Maxnot(MaxnotSpec {
                trunc: Some(trunc),
                ..spec.clone()
            })),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Family::Linear { order_type } => order_type.is_finite(),
            Family::DisjointUnion { left, right } => left.is_finite() && right.is_finite(),
            Family::Ak { .. } => false,
            Family::Smax(_) | Family::Maxnot(_) => self.trunc().is_some(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.name())?;
        match self {
            Family::Linear { order_type } => writeln!(f, "type: {order_type}"),
            Family::DisjointUnion { left, right } => writeln!(f, "left: {left}\nright: {right}"),
            Family::Ak { n, alpha, a } => writeln!(f, "n: {n}\nalpha: {alpha}\nA: {a}"),
            Family::Smax(SmaxSpec { alpha, a, trunc }) | Family::Maxnot(MaxnotSpec { alpha, a, trunc }) => {
                writeln!(f, "alpha: {alpha}\nA: {a}")?;
                match trunc {
                    Some(t) => writeln!(f, "trunc: {},{},{}", t.rungs, t.short_len, t.long_len),
                    None => Ok(()),
                }
            }
        }
    }
}

struct Fields {
    entries: Vec<(usize, String, String)>,
    family_line: usize,
}

impl Fields {
    fn take(&mut self, key: &str) -> Option<(usize, String)> {
        let at = self.entries.iter().position(|(_, k, _)| k == key)?;
        let (line, _, value) = self.entries.remove(at);
        Some((line, value))
    }

    fn require(&mut self, key: &str) -> Result<(usize, String), FamilyError> {
        self.take(key).ok_or_else(|| FamilyError {
            line: self.family_line,
            message: format!("missing field `{key}`"),
        })
    }

    fn ordinal(&mut self, key: &str) -> Result<Ordinal, FamilyError> {
        let (line, value) = self.require(key)?;
        value.parse().map_err(|e| FamilyError {
            line,
            message: format!("bad ordinal `{value}`: {e}"),
        })
    }

    fn params(&mut self) -> Result<ParamSet, FamilyError> {
        let (line, value) = self.require("A")?;
        value.parse().map_err(|e| FamilyError {
            line,
            message: format!("{e}"),
        })
    }

    fn trunc(&mut self) -> Result<Option<Trunc>, FamilyError> {
        let Some((line, value)) = self.take("trunc") else {
            return Ok(None);
        };
        let err = |message: String| FamilyError { line, message };
        let parts: Vec<usize> = value
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| err(format!("bad trunc `{value}`, expected rungs,short,long")))?;
        match parts[..] {
            [rungs, short_len, long_len] if short_len < long_len => Ok(Some(Trunc {
                rungs,
                short_len,
                long_len,
            })),
            [_, _, _] => Err(err("trunc needs short < long".to_string())),
            _ => Err(err(format!("bad trunc `{value}`, expected rungs,short,long"))),
        }
    }

    fn finish(self) -> Result<(), FamilyError> {
        match self.entries.first() {
            Some((line, key, _)) => Err(FamilyError {
                line: *line,
                message: format!("unexpected field `{key}`"),
            }),
            None => Ok(()),
        }
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut entries: Vec<(usize, String, String)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once(':').ok_or_else(|| FamilyError {
                line,
                message: format!("expected `key: value`, found `{content}`"),
            })?;
            let key = key.trim();
            if entries.iter().any(|(_, k, _)| k == key) {
                return Err(FamilyError {
                    line,
                    message: format!("duplicate field `{key}`"),
                });
            }
            entries.push((line, key.to_string(), value.trim().to_string()));
        }
        let mut fields = Fields {
            entries,
            family_line: 0,
        };
        let (line, kind) = fields.require("family")?;
        fields.family_line = line;
        let family = match kind.as_str() {
            "linear" => Family::Linear {
                order_type: fields.ordinal("type")?,
            },
            "disjoint_union" => Family::DisjointUnion {
                left: fields.ordinal("left")?,
                right: fields.ordinal("right")?,
            },
            "ak" => {
                let (n_line, n) = fields.require("n")?;
                let n = n.parse().map_err(|_| FamilyError {
                    line: n_line,
                    message: format!("bad natural `{n}`"),
                })?;
                Family::Ak {
                    n,
                    alpha: fields.ordinal("alpha")?,
                    a: fields.params()?,
                }
            }
            "smax" => Family::Smax(SmaxSpec {
                alpha: fields.ordinal("alpha")?,
                a: fields.params()?,
                trunc: fields.trunc()?,
            }),
            "maxnot" => Family::Maxnot(MaxnotSpec {
                alpha: fields.ordinal("alpha")?,
                a: fields.params()?,
                trunc: fields.trunc()?,
            }),
            other => {
                return Err(FamilyError {
                    line,
                    message: format!("unknown family `{other}`"),
                })
            }
        };
        fields.finish()?;
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for text in [
            "family: linear\ntype: w^2\n",
            "family: disjoint_union\nleft: 3\nright: 7\n",
            "family: ak\nn: 4\nalpha: 1\nA: evens\n",
            "family: smax\nalpha: w\nA: finite{1}\ntrunc: 3,3,7\n",
            "family: maxnot\nalpha: 1\nA: mod{3,0}\n",
        ] {
            let f: Family = text.parse().unwrap();
            assert_eq!(f.to_string(), text);
        }
    }

    #[test]
    fn comments_order_and_spacing() {
        let f: Family = "# gadget\n\n  A : odds # params\nfamily:smax\nalpha: 2\n".parse().unwrap();
        assert_eq!(f.name(), "smax");
        assert!(f.ladder().is_none());
        assert_eq!(f.with_rungs(2).unwrap().ladder().unwrap().rung_count(), 2);
    }

    #[test]
    fn errors_carry_lines() {
        let err = |text: &str| text.parse::<Family>().unwrap_err();
        assert_eq!(err("family: linear\ntype: w^1\n").line, 2);
        assert_eq!(err("family: smax\nalpha: 1\nA: evens\ntrunc: 3,7,3\n").line, 4);
        assert_eq!(err("family: smax\n\nalpha: 1\n").line, 1);
        assert_eq!(err("family: linear\ntype: 3\ntype: 4\n").line, 3);
        assert_eq!(err("family: linear\ntype: 3\nleft: 4\n").line, 3);
        assert_eq!(err("\nfamily: tree\n").line, 2);
        assert_eq!(err("type 4\n").line, 1);
        assert_eq!(err("type: 4\n").line, 0);
        assert_eq!(err("family: ak\nn: x\nalpha: 1\nA: evens\n").line, 2);
    }
}
