use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

/// A decidable set of naturals.
#[derive(Clone)]
pub enum ParamSet {
    Evens,
    Odds,
    Finite(BTreeSet<u64>),
    /// `{n | n mod m = r}`.
    Mod { m: u64, r: u64 },
    Custom(Arc<dyn Fn(u64) -> bool + Send + Sync>),
}

impl ParamSet {
    pub fn finite<I: IntoIterator<Item = u64>>(items: I) -> Self {
        ParamSet::Finite(items.into_iter().collect())
    }

    pub fn empty() -> Self {
        ParamSet::Finite(BTreeSet::new())
    }

    pub fn custom<F: Fn(u64) -> bool + Send + Sync + 'static>(f: F) -> Self {
        ParamSet::Custom(Arc::new(f))
    }

    pub fn contains(&self, n: u64) -> bool {
        match self {
            ParamSet::Evens => n.is_multiple_of(2),
            ParamSet::Odds => n % 2 == 1,
            ParamSet::Finite(set) => set.contains(&n),
            ParamSet::Mod { m, r } => n % m == *r,
            ParamSet::Custom(f) => f(n),
        }
    }

    /// `{n < bound | n ∈ self}`.
    pub fn below(&self, bound: u64) -> BTreeSet<u64> {
        (0..bound).filter(|&n| self.contains(n)).collect()
    }
}

impl fmt::Debug for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamSet::Evens => f.write_str("evens"),
            ParamSet::Odds => f.write_str("odds"),
            ParamSet::Finite(set) => {
                f.write_str("finite{")?;
                for (i, n) in set.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{n}")?;
                }
                f.write_str("}")
            }
            ParamSet::Mod { m, r } => write!(f, "mod{{{m},{r}}}"),
            ParamSet::Custom(_) => f.write_str("custom"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamSetError {
    #[error("unknown parameter set `{0}`")]
    Unknown(String),
    #[error("bad number `{0}`")]
    BadNumber(String),
    #[error("mod{{m,r}} needs m >= 1 and r < m")]
    BadModulus,
}

impl FromStr for ParamSet {
    type Err = ParamSetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "evens" => return Ok(ParamSet::Evens),
            "odds" => return Ok(ParamSet::Odds),
            _ => {}
        }
        let braced = |prefix: &str| {
            s.strip_prefix(prefix)
                .and_then(|rest| rest.trim_start().strip_prefix('{'))
                .and_then(|rest| rest.strip_suffix('}'))
        };
        let numbers = |body: &str| -> Result<Vec<u64>, ParamSetError> {
            body.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| ParamSetError::BadNumber(t.to_string())))
                .collect()
        };
        if let Some(body) = braced("finite") {
            return Ok(ParamSet::Finite(numbers(body)?.into_iter().collect()));
        }
        if let Some(body) = braced("mod") {
            let ns = numbers(body)?;
            return match ns[..] {
                [m, r] if m >= 1 && r < m => Ok(ParamSet::Mod { m, r }),
                [_, _] => Err(ParamSetError::BadModulus),
                _ => Err(ParamSetError::Unknown(s.to_string())),
            };
        }
        Err(ParamSetError::Unknown(s.to_string()))
    }
}
