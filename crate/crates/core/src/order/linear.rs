//! Lazy well-orders of a given Cantor-normal-form type.
//!
//! Elements are the ordinals below the order type, enumerated by
//! [`Ordinal::size`] and, within one size, by descending byte order of their
//! printed form. Each size holds finitely many ordinals, so the enumeration
//! is a bijection onto the order type. Element codes are enumeration
//! positions.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{Element, Metadata, Presentation, Probe};
use crate::ordinal::Ordinal;

pub struct LinearOrder {
    order_type: Ordinal,
    finite_len: Option<usize>,
    meta: Metadata,
    cache: Mutex<Cache>,
}

#[derive(Default)]
struct Cache {
    elements: Vec<Ordinal>,
    next_size: usize,
    generator: Generator,
}

impl LinearOrder {
    pub fn new(order_type: Ordinal) -> Self {
        let finite_len = order_type
            .as_natural()
            .map(|n| usize::try_from(n).expect("finite order type fits in memory"));
        let meta = Metadata {
            claimed_height: Some(order_type.clone()),
            claimed_cofinal_type: Some(order_type.clone()),
            anchors: None,
        };
        LinearOrder {
            order_type,
            finite_len,
            meta,
            cache: Mutex::new(Cache::default()),
        }
    }

    pub fn order_type(&self) -> &Ordinal {
        &self.order_type
    }

    /// The ordinal sitting at element `e`.
    pub fn value(&self, e: Element) -> Option<Ordinal> {
        let pos = self.position(e)?;
        self.with_cache(pos, |c| c.elements.get(pos).cloned())
    }

    /// The element whose value is `value`, if `value` is below the order
    /// type.
    pub fn element_for(&self, value: &Ordinal) -> Option<Element> {
        if *value >= self.order_type {
            return None;
        }
        let mut cache = self.cache.lock().expect("linear cache poisoned");
        while cache.next_size <= value.size() {
            cache.grow(&self.order_type);
        }
        cache
            .elements
            .iter()
            .position(|x| x == value)
            .map(|p| Element(p as u64))
    }

    fn with_cache<T>(&self, upto: usize, f: impl FnOnce(&Cache) -> T) -> T {
        let mut cache = self.cache.lock().expect("linear cache poisoned");
        while cache.elements.len() <= upto && !self.is_complete(&cache) {
            cache.grow(&self.order_type);
        }
        f(&cache)
    }

    fn is_complete(&self, cache: &Cache) -> bool {
        self.finite_len.is_some_and(|n| cache.elements.len() >= n)
    }
}

impl Cache {
    fn grow(&mut self, bound: &Ordinal) {
        let size = self.next_size;
        self.next_size += 1;
        let mut batch: Vec<(String, Ordinal)> = self
            .generator
            .below(size, bound)
            .iter()
            .map(|o| (o.to_string(), o.clone()))
            .collect();
        batch.sort_by(|a, b| b.0.cmp(&a.0));
        self.elements.extend(batch.into_iter().map(|(_, o)| o));
    }
}

impl Presentation for LinearOrder {
    fn probe(&self, position: usize) -> Probe {
        if self.finite_len.is_some_and(|n| position >= n) {
            return Probe::End;
        }
        self.with_cache(position, |_| Probe::Element(Element(position as u64)))
    }

    fn position(&self, e: Element) -> Option<usize> {
        let pos = usize::try_from(e.0).ok()?;
        match self.finite_len {
            Some(n) if pos >= n => None,
            _ => Some(pos),
        }
    }

    fn contains(&self, e: Element) -> bool {
        self.position(e).is_some()
    }

    fn leq(&self, a: Element, b: Element) -> bool {
        let (Some(i), Some(j)) = (self.position(a), self.position(b)) else {
            return false;
        };
        self.with_cache(i.max(j), |c| c.elements[i] <= c.elements[j])
    }

    fn label(&self, e: Element) -> String {
        self.value(e)
            .map(|o| o.to_string())
            .unwrap_or_else(|| format!("?{}", e.0))
    }

    fn metadata(&self) -> Option<&Metadata> {
        Some(&self.meta)
    }
}

/// Memoized generator of ordinals by size.
#[derive(Default)]
struct Generator {
    /// `(s, e)` ↦ ordinals of size `s` below `ω^e`.
    below_power: HashMap<(usize, Ordinal), Arc<Vec<Ordinal>>>,
    /// `(s, o)` ↦ ordinals of size `s` below `o`.
    below: HashMap<(usize, Ordinal), Arc<Vec<Ordinal>>>,
}

impl Generator {
    fn below(&mut self, size: usize, bound: &Ordinal) -> Arc<Vec<Ordinal>> {
        let key = (size, bound.clone());
        if let Some(hit) = self.below.get(&key) {
            return hit.clone();
        }
        let mut out = Vec::new();
        if let Some((head, rest)) = bound.terms().split_first() {
            let e0 = head.exponent().clone();
            let e0_size = e0.size();
            out.extend(self.below_power(size, &e0).iter().cloned());
            let rest = Ordinal::from_terms(
                rest.iter()
                    .map(|t| (t.exponent().clone(), t.coefficient())),
            )
            .expect("tail of a normal form is a normal form");
            for c in 1..=head.coefficient() {
                let Some(remaining) = size.checked_sub(e0_size + c as usize) else {
                    break;
                };
                let tails = if c < head.coefficient() {
                    self.below_power(remaining, &e0)
                } else {
                    self.below(remaining, &rest)
                };
                for tail in tails.iter() {
                    out.push(prepend(&e0, c, tail));
                }
            }
        }
        let out = Arc::new(out);
        self.below.insert(key, out.clone());
        out
    }

    fn below_power(&mut self, size: usize, cap: &Ordinal) -> Arc<Vec<Ordinal>> {
        let key = (size, cap.clone());
        if let Some(hit) = self.below_power.get(&key) {
            return hit.clone();
        }
        let mut out = Vec::new();
        if size == 0 {
            out.push(Ordinal::zero());
        } else {
            for exp_size in 0..size {
                let exponents = self.below(exp_size, cap);
                for e in exponents.iter() {
                    for c in 1..=(size - exp_size) {
                        let remaining = size - exp_size - c;
                        let tails = self.below_power(remaining, e);
                        for tail in tails.iter() {
                            out.push(prepend(e, c as u64, tail));
                        }
                    }
                }
            }
        }
        let out = Arc::new(out);
        self.below_power.insert(key, out.clone());
        out
    }
}

fn prepend(exponent: &Ordinal, coefficient: u64, tail: &Ordinal) -> Ordinal {
    let terms = std::iter::once((exponent.clone(), coefficient)).chain(
        tail.terms()
            .iter()
            .map(|t| (t.exponent().clone(), t.coefficient())),
    );
    Ordinal::from_terms(terms).expect("tail exponents lie below the head")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::LazyPoset;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn values(order: &LinearOrder, n: usize) -> Vec<String> {
        (0..n)
            .map(|i| order.value(Element(i as u64)).unwrap().to_string())
            .collect()
    }

    #[test]
    fn omega_squared_prefix() {
        let l = LinearOrder::new(o("w^2"));
        assert_eq!(values(&l, 6), ["0", "1", "w", "2", "w+1", "w*2"]);
    }

    #[test]
    fn finite_types_are_finite_chains() {
        let l = LazyPoset::new(LinearOrder::new(o("3")));
        assert_eq!(l.prefix(10, 100), vec![Element(0), Element(1), Element(2)]);
        assert_eq!(l.probe(3), Probe::End);
        assert!(l.lt(Element(0), Element(2)));
        let empty = LazyPoset::new(LinearOrder::new(Ordinal::zero()));
        assert_eq!(empty.probe(0), Probe::End);
    }

    #[test]
    fn omega_enumerates_naturals() {
        let l = LinearOrder::new(Ordinal::omega());
        let expected: Vec<String> = (0..20).map(|i| i.to_string()).collect();
        assert_eq!(values(&l, 20), expected);
    }

    #[test]
    fn enumeration_is_injective_and_bounded() {
        for ty in ["w^2+w", "w^w", "w^(w+1)*2", "w^3*2+5"] {
            let bound = o(ty);
            let l = LinearOrder::new(bound.clone());
            let vals: Vec<Ordinal> = (0..400)
                .map(|i| l.value(Element(i)).unwrap())
                .collect();
            let mut sorted = vals.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), vals.len(), "{ty}: duplicate values");
            assert!(vals.iter().all(|v| *v < bound), "{ty}: value out of range");
            assert!(vals.windows(2).all(|w| w[0].size() <= w[1].size()));
        }
    }

    #[test]
    fn enumeration_matches_brute_force_by_size() {
        // Independent oracle: every ordinal below w^3 of size s has the form
        // w^2*a + w*b + c with (a>0)(a+2) + (b>0)(b+1) + c = s.
        let l = LinearOrder::new(o("w^3"));
        let mut expected = Vec::new();
        for s in 0..12usize {
            let mut batch = Vec::new();
            for a in 0..=s {
                for b in 0..=s {
                    for c in 0..=s {
                        let weight = if a > 0 { a + 2 } else { 0 } + if b > 0 { b + 1 } else { 0 } + c;
                        if weight == s {
                            let terms = [(2u64, a), (1, b), (0, c)]
                                .into_iter()
                                .filter(|&(_, k)| k > 0)
                                .map(|(e, k)| (Ordinal::from(e), k as u64));
                            batch.push(Ordinal::from_terms(terms).unwrap().to_string());
                        }
                    }
                }
            }
            batch.sort_by(|x, y| y.cmp(x));
            expected.extend(batch);
        }
        assert_eq!(values(&l, expected.len()), expected);
    }

    #[test]
    fn element_for_inverts_value() {
        let l = LinearOrder::new(o("w^2+w"));
        let e = l.element_for(&o("w^2+3")).unwrap();
        assert_eq!(l.value(e), Some(o("w^2+3")));
        assert_eq!(l.element_for(&o("w^2+w")), None);
        assert_eq!(l.metadata().unwrap().claimed_height, Some(o("w^2+w")));
    }
}
