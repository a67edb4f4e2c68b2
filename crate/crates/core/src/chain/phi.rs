use std::sync::{Arc, Mutex};

use crate::order::{Element, LazyPoset, Lookup, Probe};
use crate::ordinal::Ordinal;
use crate::source::BitSource;

use super::anchors::{block_from, AnchorBuilder, AnchorStream};
use super::greedy::Greedy;
use super::{ChainError, ChainItem, ChainWindow, Membership};

/// Chain produced by the level-`alpha` operator on a host poset.
///
/// Level 1 is the greedy chain. Higher levels cut the host into blocks
/// `P_{b̄_i} ∩ P_[a_i, a_{i+1})` using anchors read from `split(S, 0)` and
/// run level `alpha.fundamental(i)` on block `i` with source
/// `split(S, i + 1)`. All evaluation is lazy and memoized; `fuel` bounds
/// every individual search.
pub struct PhiChain {
    host: LazyPoset,
    alpha: Ordinal,
    fuel: usize,
    node: Mutex<Node>,
}

enum Node {
    Greedy(Greedy),
    Blocks(Box<Blocks>),
}

struct Blocks {
    source: BitSource,
    anchors: AnchorBuilder,
    children: Vec<Arc<PhiChain>>,
    tour: Tour,
}

/// Diagonal walk over `(block, index within block)`.
#[derive(Default)]
struct Tour {
    diagonal: usize,
    offset: usize,
    found: Vec<ChainItem>,
    /// Per block: `Some(true)` once it ran out, `Some(false)` once it hit
    /// its fuel.
    done: Vec<Option<bool>>,
    finished: Option<bool>,
}

impl PhiChain {
    pub(crate) fn new(host: LazyPoset, alpha: Ordinal, source: BitSource, fuel: usize) -> Result<Self, ChainError> {
        if alpha.is_zero() {
            return Err(ChainError::ZeroLevel);
        }
        let node = if alpha == Ordinal::one() {
            Node::Greedy(Greedy::new(host.clone(), fuel))
        } else {
            Node::Blocks(Box::new(Blocks {
                anchors: AnchorBuilder::new(host.clone(), &source.split(0), fuel),
                source,
                children: Vec::new(),
                tour: Tour::default(),
            }))
        };
        Ok(PhiChain {
            host,
            alpha,
            fuel,
            node: Mutex::new(node),
        })
    }

    pub fn host(&self) -> &LazyPoset {
        &self.host
    }

    pub fn alpha(&self) -> &Ordinal {
        &self.alpha
    }

    pub fn fuel(&self) -> usize {
        self.fuel
    }

    /// Membership of `x`, answering `Undetermined` exactly when a search ran
    /// out of fuel before reaching a decision.
    pub fn member(&self, x: Element) -> Membership {
        let mut node = self.node.lock().expect("chain state poisoned");
        match &mut *node {
            Node::Greedy(g) => g.member(x),
            Node::Blocks(b) => b.member(&self.host, &self.alpha, self.fuel, x),
        }
    }

    /// The `w`-th element in discovery order.
    pub(crate) fn nth(&self, w: usize) -> Lookup<ChainItem> {
        let mut node = self.node.lock().expect("chain state poisoned");
        match &mut *node {
            Node::Greedy(g) => match g.nth(w) {
                Lookup::Found(element) => Lookup::Found(ChainItem {
                    element,
                    path: vec![w],
                }),
                Lookup::Absent => Lookup::Absent,
                Lookup::Unknown => Lookup::Unknown,
            },
            Node::Blocks(b) => b.nth(&self.host, &self.alpha, self.fuel, w),
        }
    }

    /// Up to `n` elements, collected by walking the blocks diagonally and
    /// returned in increasing host order with their block attribution.
    pub fn enumerate(&self, n: usize) -> ChainWindow {
        let mut items = Vec::with_capacity(n);
        let mut ended = false;
        for w in 0..n {
            match self.nth(w) {
                Lookup::Found(item) => items.push(item),
                Lookup::Absent => {
                    ended = true;
                    break;
                }
                Lookup::Unknown => break,
            }
        }
        let fuel_limited = items.len() < n && !ended;
        items.sort_by(|a, b| a.path.cmp(&b.path));
        ChainWindow {
            items,
            fuel_limited,
        }
    }

    /// Anchors found so far at this level; `None` at level 1.
    pub fn anchors(&self) -> Option<AnchorStream> {
        let node = self.node.lock().expect("chain state poisoned");
        match &*node {
            Node::Greedy(_) => None,
            Node::Blocks(b) => Some(b.anchors.stream().clone()),
        }
    }

    /// Runs the anchor search of this level to completion.
    pub fn settle_anchors(&self) -> Option<AnchorStream> {
        let mut node = self.node.lock().expect("chain state poisoned");
        match &mut *node {
            Node::Greedy(_) => None,
            Node::Blocks(b) => {
                b.anchors.run();
                Some(b.anchors.stream().clone())
            }
        }
    }
}

impl Blocks {
    fn child(&mut self, host: &LazyPoset, alpha: &Ordinal, fuel: usize, i: usize) -> Option<Arc<PhiChain>> {
        while self.children.len() <= i {
            let next = self.children.len();
            if !self.anchors.ensure(next + 2) {
                return None;
            }
            let poset = block_from(host, self.anchors.entries(), next, false)
                .expect("anchors i and i+1 exist");
            let level = alpha
                .fundamental(next as u64)
                .expect("levels above one have fundamental sequences");
            let chain = PhiChain::new(poset, level, self.source.split(next as u128 + 1), fuel)
                .expect("fundamental sequence entries of levels above one are positive");
            self.children.push(Arc::new(chain));
        }
        Some(self.children[i].clone())
    }

    fn member(&mut self, host: &LazyPoset, alpha: &Ordinal, fuel: usize, x: Element) -> Membership {
        if !host.contains(x) {
            return Membership::No;
        }
        let mut i = 0;
        loop {
            if !self.anchors.ensure(i + 1) {
                return Membership::Undetermined;
            }
            let a = self.anchors.entries()[i].a;
            if i == 0 && host.lt(x, a) {
                return Membership::No;
            }
            if !host.comparable(x, a) {
                return Membership::No;
            }
            if !self.anchors.ensure(i + 2) {
                return Membership::Undetermined;
            }
            let next = self.anchors.entries()[i + 1].a;
            if host.lt(x, next) {
                if self.anchors.entries()[i].bs.iter().any(|&b| host.leq(b, x)) {
                    return Membership::No;
                }
                let child = self
                    .child(host, alpha, fuel, i)
                    .expect("anchors i and i+1 exist");
                return child.member(x);
            }
            i += 1;
        }
    }

    fn nth(&mut self, host: &LazyPoset, alpha: &Ordinal, fuel: usize, w: usize) -> Lookup<ChainItem> {
        while self.tour.found.len() <= w {
            if let Some(ended) = self.tour.finished {
                return if ended { Lookup::Absent } else { Lookup::Unknown };
            }
            self.advance(host, alpha, fuel);
        }
        Lookup::Found(self.tour.found[w].clone())
    }

    /// True when the host is seen to end within `fuel` positions with
    /// nothing above the last anchor, so no later gap value can extend the
    /// anchor sequence.
    fn no_further_anchor(&self, host: &LazyPoset, fuel: usize) -> bool {
        let last = self.anchors.entries().last().map(|anchor| anchor.a);
        for pos in 0..fuel {
            match host.probe(pos) {
                Probe::End => return true,
                Probe::Skip => {}
                Probe::Element(x) => match last {
                    Some(a) if !host.lt(a, x) => {}
                    _ => return false,
                },
            }
        }
        false
    }

    /// Visits one `(block, index)` cell of the diagonal walk.
    fn advance(&mut self, host: &LazyPoset, alpha: &Ordinal, fuel: usize) {
        let known_blocks = self.anchors.stopped().then(|| self.anchors.entries().len().saturating_sub(1));
        let d = self.tour.diagonal;
        let b = self.tour.offset;
        let row_end = known_blocks.map_or(d, |k| d.min(k.saturating_sub(1)));
        if b > row_end || known_blocks == Some(0) {
            if let Some(k) = known_blocks {
                let all_done = (0..k).all(|i| self.tour.done.get(i).copied().flatten().is_some());
                if all_done {
                    let exhausted = (0..k).all(|i| self.tour.done[i] == Some(true));
                    self.tour.finished = Some(exhausted && self.no_further_anchor(host, fuel));
                    return;
                }
            }
            self.tour.diagonal += 1;
            self.tour.offset = 0;
            return;
        }
        self.tour.offset += 1;
        if self.tour.done.get(b).copied().flatten().is_some() {
            return;
        }
        let Some(child) = self.child(host, alpha, fuel, b) else {
            return;
        };
        if self.tour.done.len() <= b {
            self.tour.done.resize(b + 1, None);
        }
        match child.nth(d - b) {
            Lookup::Found(item) => {
                let mut path = Vec::with_capacity(item.path.len() + 1);
                path.push(b);
                path.extend(item.path);
                self.tour.found.push(ChainItem {
                    element: item.element,
                    path,
                });
            }
            Lookup::Absent => self.tour.done[b] = Some(true),
            Lookup::Unknown => self.tour.done[b] = Some(false),
        }
    }
}
