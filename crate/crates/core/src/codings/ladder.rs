use crate::analysis;
use crate::order::{Element, FinitePoset, LazyPoset, LinearOrder, Metadata, Presentation, Probe};
use crate::ordinal::Ordinal;
use crate::source::{pair, unpair};

use super::params::ParamSet;

/// Finite stand-in sizes: each branch becomes a chain of `short_len` or
/// `long_len` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Trunc {
    pub rungs: usize,
    pub short_len: usize,
    pub long_len: usize,
}

impl Trunc {
    pub const DEFAULT_SHORT: usize = 3;
    pub const DEFAULT_LONG: usize = 7;

    pub fn new(rungs: usize) -> Self {
        Trunc {
            rungs,
            short_len: Self::DEFAULT_SHORT,
            long_len: Self::DEFAULT_LONG,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderKind {
    /// Two branches per rung; branch 1 is long iff `n ∈ A`.
    Smax,
    /// `n + 1` branches at rung `n`; branch `i` is short iff `A_i(n)`.
    Maxnot,
}

#[derive(Debug, Clone)]
pub struct SmaxSpec {
    pub alpha: Ordinal,
    pub a: ParamSet,
    pub trunc: Option<Trunc>,
}

/// `A_i(n)` holds iff `⟨i, n⟩ ∈ a`.
#[derive(Debug, Clone)]
pub struct MaxnotSpec {
    pub alpha: Ordinal,
    pub a: ParamSet,
    pub trunc: Option<Trunc>,
}

/// `A_i(n)` for the family coded by `a`.
pub fn maxnot_member(a: &ParamSet, i: usize, n: usize) -> bool {
    a.contains(pair(i as u64, n as u64))
}

impl LadderKind {
    pub fn branch_count(self, rung: usize) -> usize {
        match self {
            LadderKind::Smax => 2,
            LadderKind::Maxnot => rung + 1,
        }
    }

    fn is_long(self, a: &ParamSet, rung: usize, branch: usize) -> bool {
        match self {
            LadderKind::Smax => (branch == 1) == a.contains(rung as u64),
            LadderKind::Maxnot => !maxnot_member(a, branch, rung),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    /// Index of `b_n^i`.
    pub b: usize,
    /// The chain strictly between `b_n^i` and `a_{n+1}`, bottom-up.
    pub body: Vec<usize>,
    pub long: bool,
}

/// A finite ladder: `a_0 < … < a_R` with, at each rung `n`, branches
/// `a_n < b_n^i < body < a_{n+1}` that are pairwise incomparable.
///
/// Indices are assigned rung by rung: `a_n`, then every `b_n^i`, then the
/// branch bodies breadth-first, so any prefix ending at some `a_n` holds
/// whole rungs.
#[derive(Debug, Clone)]
pub struct Ladder {
    kind: LadderKind,
    trunc: Trunc,
    poset: FinitePoset,
    spine: Vec<usize>,
    rungs: Vec<Vec<Branch>>,
}

impl Ladder {
    pub fn build(kind: LadderKind, a: &ParamSet, trunc: Trunc) -> Self {
        let mut labels = Vec::new();
        let mut pairs = Vec::new();
        let mut spine = Vec::with_capacity(trunc.rungs + 1);
        let mut rungs = Vec::with_capacity(trunc.rungs);
        let fresh = |labels: &mut Vec<String>, label: String| {
            labels.push(label);
            labels.len() - 1
        };
        for n in 0..trunc.rungs {
            let a_n = fresh(&mut labels, format!("a{n}"));
            spine.push(a_n);
            let count = kind.branch_count(n);
            let mut branches: Vec<Branch> = (0..count)
                .map(|i| {
                    let b = fresh(&mut labels, format!("b{n}.{i}"));
                    pairs.push((a_n, b));
                    Branch {
                        b,
                        body: Vec::new(),
                        long: kind.is_long(a, n, i),
                    }
                })
                .collect();
            let len_of = |br: &Branch| if br.long { trunc.long_len } else { trunc.short_len };
            let deepest = branches.iter().map(len_of).max().unwrap_or(0);
            for depth in 0..deepest {
                for (i, br) in branches.iter_mut().enumerate() {
                    if depth < len_of(br) {
                        let x = fresh(&mut labels, format!("l{n}.{i}.{depth}"));
                        pairs.push((*br.body.last().unwrap_or(&br.b), x));
                        br.body.push(x);
                    }
                }
            }
            rungs.push(branches);
        }
        let top = fresh(&mut labels, format!("a{}", trunc.rungs));
        spine.push(top);
        for (n, branches) in rungs.iter().enumerate() {
            for br in branches {
                pairs.push((*br.body.last().unwrap_or(&br.b), spine[n + 1]));
            }
        }
        let poset = FinitePoset::from_pairs(labels.len(), &pairs)
            .expect("ladder relations are acyclic")
            .with_labels(labels);
        Ladder {
            kind,
            trunc,
            poset,
            spine,
            rungs,
        }
    }

    pub fn kind(&self) -> LadderKind {
        self.kind
    }

    pub fn trunc(&self) -> Trunc {
        self.trunc
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn rung_count(&self) -> usize {
        self.rungs.len()
    }

    /// `a_n` for `n ≤ rungs`.
    pub fn a(&self, n: usize) -> usize {
        self.spine[n]
    }

    pub fn spine(&self) -> &[usize] {
        &self.spine
    }

    pub fn branches(&self, n: usize) -> &[Branch] {
        &self.rungs[n]
    }

    pub fn b(&self, n: usize, i: usize) -> usize {
        self.rungs[n][i].b
    }

    /// `(rung, branch)` of `x`; branch is `None` for spine points. The top
    /// spine point reports rung `rungs`.
    pub fn locate(&self, x: usize) -> Option<(usize, Option<usize>)> {
        if let Some(n) = self.spine.iter().position(|&a| a == x) {
            return Some((n, None));
        }
        self.rungs.iter().enumerate().find_map(|(n, branches)| {
            branches
                .iter()
                .position(|br| br.b == x || br.body.contains(&x))
                .map(|i| (n, Some(i)))
        })
    }

    /// The chain through the long branch of every rung (the first long
    /// branch when there are several).
    pub fn long_route(&self) -> Vec<usize> {
        let mut route = Vec::new();
        for (n, branches) in self.rungs.iter().enumerate() {
            route.push(self.spine[n]);
            let br = branches.iter().find(|br| br.long).unwrap_or(&branches[0]);
            route.push(br.b);
            route.extend(&br.body);
        }
        route.push(self.spine[self.rungs.len()]);
        route
    }

    /// The ladder as a lazy poset with its spine as anchors and its finite
    /// height as claimed height.
    pub fn to_lazy(&self) -> LazyPoset {
        let meta = Metadata {
            claimed_height: Some(Ordinal::from(analysis::height(&self.poset) as u64)),
            claimed_cofinal_type: None,
            anchors: Some(self.spine.iter().map(|&i| Element(i as u64)).collect()),
        };
        LazyPoset::new(self.poset.clone()).with_metadata(meta)
    }
}

pub fn smax_ladder(a: &ParamSet, trunc: Trunc) -> Ladder {
    Ladder::build(LadderKind::Smax, a, trunc)
}

pub fn maxnot_ladder(a: &ParamSet, trunc: Trunc) -> Ladder {
    Ladder::build(LadderKind::Maxnot, a, trunc)
}

pub fn smax_poset(spec: &SmaxSpec) -> LazyPoset {
    match spec.trunc {
        Some(trunc) => smax_ladder(&spec.a, trunc).to_lazy(),
        None => LazyPoset::new(InfiniteLadder::new(LadderKind::Smax, spec.a.clone(), &spec.alpha)),
    }
}

pub fn maxnot_poset(spec: &MaxnotSpec) -> LazyPoset {
    match spec.trunc {
        Some(trunc) => maxnot_ladder(&spec.a, trunc).to_lazy(),
        None => LazyPoset::new(InfiniteLadder::new(LadderKind::Maxnot, spec.a.clone(), &spec.alpha)),
    }
}

/// Spine points listed in the metadata of an infinite ladder.
pub const INFINITE_ANCHOR_PREFIX: usize = 16;

/// Infinite ladder whose branches are linear orders of type `ω^α` (short)
/// and `ω^{α+1}` (long). Element codes and positions are `⟨n, m⟩` with `m = 0`
/// for `a_n`, `1 + i` for `b_n^i` and `1 + B + ⟨i, j⟩` for the `j`-th element of
/// branch `i`, where `B` is the branch count of rung `n`.
pub struct InfiniteLadder {
    kind: LadderKind,
    a: ParamSet,
    short: LinearOrder,
    long: LinearOrder,
    meta: Metadata,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Point {
    A,
    B(usize),
    L(usize, Element),
}

impl InfiniteLadder {
    pub fn new(kind: LadderKind, a: ParamSet, alpha: &Ordinal) -> Self {
        let alpha_plus = alpha.succ();
        let anchors = (0..INFINITE_ANCHOR_PREFIX as u64)
            .map(|n| Element(pair(n, 0)))
            .collect();
        let meta = Metadata {
            claimed_height: Some(Ordinal::omega_pow(alpha_plus.succ())),
            claimed_cofinal_type: None,
            anchors: Some(anchors),
        };
        InfiniteLadder {
            kind,
            a,
            short: LinearOrder::new(Ordinal::omega_pow(alpha.clone())),
            long: LinearOrder::new(Ordinal::omega_pow(alpha_plus)),
            meta,
        }
    }

    fn branch_order(&self, rung: usize, branch: usize) -> &LinearOrder {
        if self.kind.is_long(&self.a, rung, branch) {
            &self.long
        } else {
            &self.short
        }
    }

    fn decode(&self, e: Element) -> Option<(usize, Point)> {
        let (n, m) = unpair(e.0);
        let n = usize::try_from(n).ok()?;
        let count = self.kind.branch_count(n) as u64;
        let point = if m == 0 {
            Point::A
        } else if m <= count {
            Point::B((m - 1) as usize)
        } else {
            let (i, j) = unpair(m - 1 - count);
            if i >= count {
                return None;
            }
            let i = i as usize;
            let inner = Element(j);
            if !self.branch_order(n, i).contains(inner) {
                return None;
            }
            Point::L(i, inner)
        };
        Some((n, point))
    }
}

impl Presentation for InfiniteLadder {
    fn probe(&self, position: usize) -> Probe {
        let e = Element(position as u64);
        match self.decode(e) {
            Some(_) => Probe::Element(e),
            None => Probe::Skip,
        }
    }

    fn position(&self, e: Element) -> Option<usize> {
        usize::try_from(e.0).ok()
    }

    fn contains(&self, e: Element) -> bool {
        self.decode(e).is_some()
    }

    fn leq(&self, x: Element, y: Element) -> bool {
        let (Some((nx, px)), Some((ny, py))) = (self.decode(x), self.decode(y)) else {
            return false;
        };
        if nx != ny {
            return nx < ny;
        }
        match (px, py) {
            (Point::A, _) => true,
            (_, Point::A) => false,
            (Point::B(i), Point::B(j)) => i == j,
            (Point::B(i), Point::L(j, _)) => i == j,
            (Point::L(..), Point::B(_)) => false,
            (Point::L(i, u), Point::L(j, v)) => i == j && self.branch_order(nx, i).leq(u, v),
        }
    }

    fn label(&self, e: Element) -> String {
        match self.decode(e) {
            Some((n, Point::A)) => format!("a{n}"),
            Some((n, Point::B(i))) => format!("b{n}.{i}"),
            Some((n, Point::L(i, inner))) => format!("l{n}.{i}:{}", self.branch_order(n, i).label(inner)),
            None => format!("?{}", e.0),
        }
    }

    fn metadata(&self) -> Option<&Metadata> {
        Some(&self.meta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{heights, inclusion_maximal_chains, strongly_maximal_chain};

    #[test]
    fn smax_layout_and_heights() {
        let ladder = smax_ladder(&ParamSet::finite([1]), Trunc::new(3));
        let p = ladder.poset();
        assert_eq!(p.len(), 4 + 3 * (2 + 3 + 7));
        assert_eq!(ladder.a(0), 0);
        assert_eq!(p.label(ladder.b(0, 1)), "b0.1");
        assert!(ladder.branches(0)[0].long && !ladder.branches(0)[1].long);
        assert!(ladder.branches(1)[1].long && !ladder.branches(1)[0].long);
        let ht = heights(p);
        // each rung adds b plus the long body plus the next spine point
        for n in 0..=3 {
            assert_eq!(ht[ladder.a(n)], 9 * n);
        }
        let c = strongly_maximal_chain(p);
        assert!(c.contains(ladder.b(0, 0)));
        assert!(c.contains(ladder.b(1, 1)));
        assert!(c.contains(ladder.b(2, 0)));
    }

    #[test]
    fn rung_windows_have_the_expected_maximal_chains() {
        let smax = smax_ladder(&ParamSet::Evens, Trunc::new(4));
        for n in 0..4 {
            let chains = inclusion_maximal_chains(smax.poset(), Some((smax.a(n), smax.a(n + 1)))).unwrap();
            assert_eq!(chains.len(), 2);
            assert!(chains[0].elements().iter().all(|x| !chains[1].contains(*x)));
        }
        let maxnot = maxnot_ladder(&ParamSet::Odds, Trunc::new(5));
        for n in 0..5 {
            let chains = inclusion_maximal_chains(maxnot.poset(), Some((maxnot.a(n), maxnot.a(n + 1)))).unwrap();
            assert_eq!(chains.len(), n + 1);
        }
    }

    #[test]
    fn prefixes_hold_whole_rungs() {
        let ladder = maxnot_ladder(&ParamSet::Evens, Trunc::new(3));
        for n in 0..=3 {
            let a = ladder.a(n);
            assert!((0..a).all(|x| ladder.locate(x).unwrap().0 < n));
        }
        assert_eq!(ladder.locate(ladder.a(3)), Some((3, None)));
    }

    #[test]
    fn infinite_smax_order() {
        let p = smax_poset(&SmaxSpec {
            alpha: Ordinal::one(),
            a: ParamSet::finite([0]),
            trunc: None,
        });
        let code = |n: u64, m: u64| Element(pair(n, m));
        let a0 = code(0, 0);
        let b00 = code(0, 1);
        let b01 = code(0, 2);
        let l1 = |j: u64| code(0, 3 + pair(1, j));
        assert!(p.lt(a0, b00) && p.lt(a0, b01));
        assert!(!p.comparable(b00, b01));
        assert!(p.lt(b01, l1(0)) && p.lt(l1(0), l1(1)));
        assert!(!p.comparable(b00, l1(5)));
        assert!(p.lt(l1(40), code(1, 0)));
        // branch 1 has type w^2 when 0 ∈ A
        assert_eq!(p.label(l1(2)), "l0.1:w");
        // rung 0 has two branches, so <2, j> is not a code
        assert!(!p.contains(code(0, 3 + pair(2, 0))));
        let meta = p.metadata().unwrap();
        assert_eq!(meta.claimed_height, Some("w^3".parse().unwrap()));
        assert_eq!(meta.anchors.as_ref().unwrap()[2], code(2, 0));
    }

    #[test]
    fn finite_branch_types_skip_missing_points() {
        // alpha = 0: short branches have a single point
        let p = smax_poset(&SmaxSpec {
            alpha: Ordinal::zero(),
            a: ParamSet::empty(),
            trunc: None,
        });
        let code = |n: u64, m: u64| Element(pair(n, m));
        assert!(p.contains(code(0, 3 + pair(1, 0))));
        assert!(!p.contains(code(0, 3 + pair(1, 1))));
        assert!(p.contains(code(0, 3 + pair(0, 9))));
    }
}
