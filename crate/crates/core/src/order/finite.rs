use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use super::{Element, Presentation, Probe};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetLoadError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing \"elements: n\" header")]
    MissingHeader,
    #[error("element {index} out of range for a poset of size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("relation is not antisymmetric: {0} and {1} are mutually below each other")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive: {0} <= {1} <= {2}")]
    NotTransitive(usize, usize, usize),
}

/// Explicit poset on `0..len` stored as a dense relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    len: usize,
    le: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl FinitePoset {
    /// Builds the reflexive-transitive closure of `pairs` (each `(i, j)`
    /// meaning `i ≤ j`) and rejects cycles.
    pub fn from_pairs(len: usize, pairs: &[(usize, usize)]) -> Result<Self, PosetLoadError> {
        let mut le = vec![false; len * len];
        for i in 0..len {
            le[i * len + i] = true;
        }
        for &(i, j) in pairs {
            for index in [i, j] {
                if index >= len {
                    return Err(PosetLoadError::OutOfRange { index, size: len });
                }
            }
            le[i * len + j] = true;
        }
        for k in 0..len {
            for i in 0..len {
                if le[i * len + k] {
                    for j in 0..len {
                        if le[k * len + j] {
                            le[i * len + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..len {
            for j in i + 1..len {
                if le[i * len + j] && le[j * len + i] {
                    return Err(PosetLoadError::NotAntisymmetric(i, j));
                }
            }
        }
        Ok(FinitePoset {
            len,
            le,
            labels: None,
        })
    }

    /// Validates a full relation matrix (`le[i * len + j]` iff `i ≤ j`).
    pub fn from_matrix(len: usize, le: Vec<bool>) -> Result<Self, PosetLoadError> {
        assert_eq!(le.len(), len * len, "matrix must be len x len");
        for i in 0..len {
            if !le[i * len + i] {
                return Err(PosetLoadError::NotReflexive(i));
            }
            for j in 0..len {
                if i != j && le[i * len + j] && le[j * len + i] {
                    return Err(PosetLoadError::NotAntisymmetric(i.min(j), i.max(j)));
                }
                if !le[i * len + j] {
                    continue;
                }
                for k in 0..len {
                    if le[j * len + k] && !le[i * len + k] {
                        return Err(PosetLoadError::NotTransitive(i, j, k));
                    }
                }
            }
        }
        Ok(FinitePoset {
            len,
            le,
            labels: None,
        })
    }

    pub(crate) fn from_matrix_unchecked(
        len: usize,
        le: Vec<bool>,
        labels: Option<Vec<String>>,
    ) -> Self {
        debug_assert_eq!(le.len(), len * len);
        FinitePoset { len, le, labels }
    }

    pub fn chain(len: usize) -> Self {
        let pairs: Vec<_> = (1..len).map(|i| (i - 1, i)).collect();
        Self::from_pairs(len, &pairs).expect("a chain is a poset")
    }

    pub fn antichain(len: usize) -> Self {
        Self::from_pairs(len, &[]).expect("an antichain is a poset")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len);
        self.labels = Some(labels);
        self
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i * self.len + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.le(i, j) || self.le(j, i)
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(labels) => labels[i].clone(),
            None => i.to_string(),
        }
    }

    /// Covering pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_chain_set(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| self.comparable(a, b)))
    }

    pub fn is_antichain_set(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| a == b || !self.comparable(a, b)))
    }

    fn mask(&self, set: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.len];
        for &x in set {
            mask[x] = true;
        }
        mask
    }

    pub fn is_downward_closed(&self, set: &[usize]) -> bool {
        let mask = self.mask(set);
        set.iter()
            .all(|&x| (0..self.len).all(|y| !self.le(y, x) || mask[y]))
    }

    /// Downward closed and upward directed within itself.
    pub fn is_ideal(&self, set: &[usize]) -> bool {
        self.is_downward_closed(set)
            && set.iter().all(|&x| {
                set.iter()
                    .all(|&y| set.iter().any(|&z| self.le(x, z) && self.le(y, z)))
            })
    }

    /// Every element of the poset lies below some member of `set`.
    pub fn is_cofinal(&self, set: &[usize]) -> bool {
        (0..self.len).all(|x| set.iter().any(|&y| self.le(x, y)))
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len)
            .filter(|&x| !(0..self.len).any(|y| self.lt(y, x)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len)
            .filter(|&x| !(0..self.len).any(|y| self.lt(x, y)))
            .collect()
    }

    /// Minimal elements of the complement of a downward-closed `set`. Avoiding
    /// exactly these elements recovers `set`. Returns `None` if `set` is not
    /// downward closed.
    pub fn downward_closure_basis(&self, set: &[usize]) -> Option<Vec<usize>> {
        if !self.is_downward_closed(set) {
            return None;
        }
        let mask = self.mask(set);
        Some(
            (0..self.len)
                .filter(|&x| !mask[x])
                .filter(|&x| !(0..self.len).any(|y| !mask[y] && self.lt(y, x)))
                .collect(),
        )
    }

    /// Text form: `elements: n` followed by one `le: i j` line per covering
    /// pair.
    pub fn to_text(&self) -> String {
        let mut out = format!("elements: {}\n", self.len);
        for (i, j) in self.covers() {
            let _ = writeln!(out, "le: {i} {j}");
        }
        out
    }

    /// Hasse diagram in Graphviz DOT, one node per element and one edge per
    /// covering pair, drawn bottom to top.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
        for i in 0..self.len {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", escape(&self.label(i)));
        }
        for (i, j) in self.covers() {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl FromStr for FinitePoset {
    type Err = PosetLoadError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut size = None;
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() {
                continue;
            }
            let syntax = |message: &str| PosetLoadError::Syntax {
                line,
                message: message.to_owned(),
            };
            let (key, value) = content
                .split_once(':')
                .ok_or_else(|| syntax("expected \"key: value\""))?;
            let numbers: Result<Vec<usize>, _> =
                value.split_whitespace().map(str::parse::<usize>).collect();
            let numbers = numbers.map_err(|_| syntax("expected non-negative integers"))?;
            match (key.trim(), numbers.as_slice(), size) {
                ("elements", [n], None) => size = Some(*n),
                ("elements", _, Some(_)) => return Err(syntax("duplicate elements header")),
                ("elements", _, None) => return Err(syntax("expected \"elements: n\"")),
                ("le", _, None) => return Err(syntax("\"le\" before \"elements\" header")),
                ("le", [i, j], Some(_)) => pairs.push((*i, *j)),
                ("le", _, Some(_)) => return Err(syntax("expected \"le: i j\"")),
                _ => return Err(syntax("unknown key")),
            }
        }
        let size = size.ok_or(PosetLoadError::MissingHeader)?;
        FinitePoset::from_pairs(size, &pairs)
    }
}

impl Presentation for FinitePoset {
    fn probe(&self, position: usize) -> Probe {
        if position < self.len {
            Probe::Element(Element(position as u64))
        } else {
            Probe::End
        }
    }

    fn position(&self, e: Element) -> Option<usize> {
        let i = usize::try_from(e.0).ok()?;
        (i < self.len).then_some(i)
    }

    fn contains(&self, e: Element) -> bool {
        self.position(e).is_some()
    }

    fn leq(&self, a: Element, b: Element) -> bool {
        match (self.position(a), self.position(b)) {
            (Some(i), Some(j)) => self.le(i, j),
            _ => false,
        }
    }

    fn label(&self, e: Element) -> String {
        match self.position(e) {
            Some(i) => FinitePoset::label(self, i),
            None => format!("?{}", e.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 0=a, 1=b, 2=c, 3=d with a<b, a<c, b<d, c<d
    fn diamond() -> FinitePoset {
        FinitePoset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn closure_and_cycles() {
        let p = diamond();
        assert!(p.le(0, 3));
        assert!(!p.comparable(1, 2));
        assert_eq!(
            FinitePoset::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(PosetLoadError::NotAntisymmetric(0, 1))
        );
        assert!(matches!(
            FinitePoset::from_pairs(2, &[(0, 5)]),
            Err(PosetLoadError::OutOfRange { index: 5, size: 2 })
        ));
    }

    #[test]
    fn matrix_validation() {
        assert_eq!(
            FinitePoset::from_matrix(2, vec![true, false, false, false]),
            Err(PosetLoadError::NotReflexive(1))
        );
        // 0<=1, 1<=2 but not 0<=2
        let m = vec![true, true, false, false, true, true, false, false, true];
        assert_eq!(
            FinitePoset::from_matrix(3, m),
            Err(PosetLoadError::NotTransitive(0, 1, 2))
        );
    }

    #[test]
    fn text_round_trip() {
        let p = diamond();
        let text = p.to_text();
        assert_eq!(text, "elements: 4\nle: 0 1\nle: 0 2\nle: 1 3\nle: 2 3\n");
        assert_eq!(text.parse::<FinitePoset>().unwrap(), p);
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        let err = "elements: 2\n\nle: 0\n".parse::<FinitePoset>().unwrap_err();
        assert!(matches!(err, PosetLoadError::Syntax { line: 3, .. }));
        let err = "le: 0 1\n".parse::<FinitePoset>().unwrap_err();
        assert!(matches!(err, PosetLoadError::Syntax { line: 1, .. }));
        assert_eq!("".parse::<FinitePoset>(), Err(PosetLoadError::MissingHeader));
        assert!(matches!(
            "elements: 2\nle: 0 1\nle: 1 0\n".parse::<FinitePoset>(),
            Err(PosetLoadError::NotAntisymmetric(0, 1))
        ));
    }

    #[test]
    fn ideal_and_cofinal() {
        let c = FinitePoset::chain(3);
        assert!(c.is_ideal(&[]));
        assert!(c.is_ideal(&[0, 1]));
        assert!(!c.is_ideal(&[1]));
        assert!(!diamond().is_ideal(&[0, 1, 2]));
        assert!(diamond().is_ideal(&[0, 1]));

        assert!(diamond().is_cofinal(&diamond().maximal_elements()));
        assert!(!c.is_cofinal(&[0]));
        assert!(c.is_cofinal(&[2]));
    }

    #[test]
    fn closure_basis_examples() {
        let c = FinitePoset::chain(3);
        assert_eq!(c.downward_closure_basis(&[0]), Some(vec![1]));
        assert_eq!(c.downward_closure_basis(&[0, 1, 2]), Some(vec![]));
        assert_eq!(diamond().downward_closure_basis(&[0, 1]), Some(vec![2]));
        assert_eq!(c.downward_closure_basis(&[1]), None);
    }

    #[test]
    fn dot_has_one_edge_per_cover() {
        let dot = diamond().to_dot();
        assert_eq!(dot.matches("->").count(), 4);
        assert!(dot.contains("n0 [label=\"0\"]"));
        let labelled = FinitePoset::chain(2).with_labels(vec!["x\"y".into(), "z".into()]);
        assert!(labelled.to_dot().contains("label=\"x\\\"y\""));
    }
}
