use maxchain_core::chain::{block, build_anchors, phi1, phi_alpha, Anchor, AnchorStop, AnchorStream, Membership};
use maxchain_core::codings::{smax_ladder, ParamSet, Trunc};
use maxchain_core::order::{disjoint_union, is_chain, linear, DisjointUnion, LinearOrder};
use maxchain_core::source::{decode_tuple, AnchorTuple};
use maxchain_core::{BitSource, Element, FinitePoset, LazyPoset, Ordinal};

fn ord(s: &str) -> Ordinal {
    s.parse().unwrap()
}

fn ones() -> BitSource {
    BitSource::repeating(vec![true]).unwrap()
}

fn finite(len: usize, pairs: &[(usize, usize)]) -> LazyPoset {
    LazyPoset::new(FinitePoset::from_pairs(len, pairs).unwrap())
}

fn ids(elements: &[Element]) -> Vec<u64> {
    elements.iter().map(|e| e.0).collect()
}

#[test]
fn greedy_examples() {
    let up = LazyPoset::new(FinitePoset::chain(6));
    assert_eq!(ids(&phi1(&up, 100).enumerate(10).elements()), vec![0, 1, 2, 3, 4, 5]);

    let two = LazyPoset::new(FinitePoset::antichain(2));
    assert_eq!(ids(&phi1(&two, 100).enumerate(10).elements()), vec![0]);

    // enumerated as (b, a, c) with a < b and a < c
    let vee = finite(3, &[(1, 0), (1, 2)]);
    let c = phi1(&vee, 100);
    assert_eq!(ids(&c.enumerate(10).elements()), vec![0]);
    assert_eq!(c.member(Element(1)), Membership::No);
    assert_eq!(c.member(Element(2)), Membership::No);

    let w = linear(Ordinal::omega());
    assert_eq!(phi1(&w, 1000).enumerate(0).items, vec![]);
    assert_eq!(ids(&phi1(&w, 1000).enumerate(7).elements()), (0..7).collect::<Vec<_>>());
}

#[test]
fn greedy_membership_respects_fuel() {
    let w = linear(Ordinal::omega());
    let c = phi1(&w, 10);
    assert_eq!(c.member(Element(9)), Membership::Yes);
    assert_eq!(c.member(Element(10)), Membership::Undetermined);
    let window = c.enumerate(20);
    assert_eq!(window.items.len(), 10);
    assert!(window.fuel_limited);
}

#[test]
fn anchors_on_all_ones() {
    let w = linear(Ordinal::omega());
    let stream = build_anchors(&w, &ones(), 50);
    assert_eq!(
        stream.entries,
        vec![Anchor {
            k: 0,
            tuple: AnchorTuple {
                a_index: 0,
                b_indices: vec![]
            },
            a: Element(0),
            bs: vec![],
        }]
    );
    assert_eq!(stream.stop, Some(AnchorStop::Fuel { at: 50 }));
    assert_eq!(stream.exhausted_at(), Some(50));
}

#[test]
fn anchors_from_explicit_pattern() {
    // ones at 0, 1, 3, 7 give gaps 0, 1, 3, which decode to a-indices 0, 1, 2
    let bits = BitSource::explicit(BitSource::parse_bits("11010001").unwrap());
    for (v, a) in [(0, 0), (1, 1), (3, 2)] {
        assert_eq!(decode_tuple(v), AnchorTuple { a_index: a, b_indices: vec![] });
    }
    let stream = build_anchors(&linear(Ordinal::omega()), &bits, 1000);
    let a: Vec<u64> = stream.entries.iter().map(|e| e.a.0).collect();
    assert_eq!(a, vec![0, 1, 2]);
    assert!(stream.entries.iter().all(|e| e.bs.is_empty()));
    let ks: Vec<usize> = stream.entries.iter().map(|e| e.k).collect();
    assert_eq!(ks, vec![0, 1, 2]);
    assert!(stream.stop.as_ref().unwrap().is_source());
    assert_eq!(stream.exhausted_at(), Some(3));
}

#[test]
fn zero_fuel_gives_an_empty_stream() {
    let stream = build_anchors(&linear(Ordinal::omega()), &BitSource::seeded(3), 0);
    assert!(stream.entries.is_empty());
    assert_eq!(stream.exhausted_at(), Some(0));
}

#[test]
fn anchors_increase_and_ks_increase() {
    let host = linear(ord("w^2"));
    for seed in 0..10 {
        let stream = build_anchors(&host, &BitSource::seeded(seed), 20_000);
        for pair in stream.entries.windows(2) {
            assert!(pair[0].k < pair[1].k);
            assert!(host.lt(pair[0].a, pair[1].a));
        }
    }
}

fn stream_of(points: &[(usize, Vec<usize>)]) -> AnchorStream {
    AnchorStream {
        entries: points
            .iter()
            .enumerate()
            .map(|(k, (a, bs))| Anchor {
                k,
                tuple: AnchorTuple {
                    a_index: *a as u64,
                    b_indices: bs.iter().map(|&b| b as u64).collect(),
                },
                a: Element(*a as u64),
                bs: bs.iter().map(|&b| Element(b as u64)).collect(),
            })
            .collect(),
        stop: None,
    }
}

#[test]
fn blocks_in_the_ladder_pick_a_branch() {
    let ladder = smax_ladder(&ParamSet::finite([1]), Trunc::new(3));
    let host = LazyPoset::new(ladder.poset().clone());
    let n = 1;
    let anchors = stream_of(&[(ladder.a(n), vec![ladder.b(n, 0)]), (ladder.a(n + 1), vec![])]);
    let b = block(&host, &anchors, 0, false).unwrap();
    let got: Vec<usize> = b.prefix(100, 1000).iter().map(|e| e.0 as usize).collect();
    let br = &ladder.branches(n)[1];
    let mut want = vec![ladder.a(n), br.b];
    want.extend(&br.body);
    want.sort();
    assert_eq!(got, want);

    assert!(block(&host, &anchors, 1, false).is_err());
    assert!(block(&host, &anchors, 1, true).is_ok());
    assert!(block(&host, &anchors, 2, true).is_err());

    // empty b̄: the block is the interval
    let plain = stream_of(&[(ladder.a(0), vec![]), (ladder.a(1), vec![])]);
    let whole = block(&host, &plain, 0, false).unwrap();
    assert_eq!(whole.prefix(100, 1000).len(), 1 + 2 + 3 + 7);
}

#[test]
fn blocks_are_layered() {
    let host = linear(ord("w^2"));
    for seed in 0..5 {
        let stream = build_anchors(&host, &BitSource::seeded(seed).split(0), 20_000);
        let blocks: Vec<Vec<Element>> = (0..stream.entries.len().saturating_sub(1))
            .map(|i| block(&host, &stream, i, false).unwrap().prefix(20, 50_000))
            .collect();
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                for &x in &blocks[i] {
                    for &y in &blocks[j] {
                        assert!(host.lt(x, y));
                    }
                }
            }
        }
    }
}

#[test]
fn level_one_ignores_the_source() {
    let host = linear(ord("w^2"));
    let greedy = phi1(&host, 5000).enumerate(30);
    for seed in 0..3 {
        let c = phi_alpha(&host, &Ordinal::one(), &BitSource::seeded(seed), 5000).unwrap();
        assert_eq!(c.enumerate(30), greedy);
    }
    assert!(phi_alpha(&host, &Ordinal::zero(), &ones(), 10).is_err());
}

#[test]
fn level_two_on_w_squared() {
    let host = linear(ord("w^2"));
    let lin = LinearOrder::new(ord("w^2"));
    for seed in 0..10 {
        let c = phi_alpha(&host, &ord("2"), &BitSource::seeded(seed), 100_000).unwrap();
        let window = c.enumerate(50);
        let values: Vec<Ordinal> = window.items.iter().map(|i| lin.value(i.element).unwrap()).collect();
        assert!(values.windows(2).all(|p| p[0] < p[1]));
        assert!(values.iter().all(|v| *v < ord("w^2")));
        let blocks: Vec<usize> = window.items.iter().map(|i| i.block()).collect();
        assert!(blocks.windows(2).all(|p| p[0] <= p[1]));
        let anchors = c.anchors().unwrap();
        assert!(blocks.iter().all(|&b| b + 1 < anchors.entries.len()));
        for item in &window.items {
            assert_eq!(c.member(item.element), Membership::Yes);
        }
    }
}

#[test]
fn top_first_posets_give_finite_chains() {
    // element 0 lies above everything else
    let p = finite(5, &[(1, 0), (2, 0), (3, 0), (4, 0)]);
    let c = phi_alpha(&p, &ord("2"), &ones(), 1000).unwrap();
    let window = c.enumerate(10);
    assert!(window.items.is_empty());
    assert!(!window.fuel_limited);
    assert_eq!(c.anchors().unwrap().entries.len(), 1);
    assert_eq!(c.member(Element(3)), Membership::No);
}

#[test]
fn membership_procedure() {
    let host = linear(ord("w^2"));
    // a_0 = 1 for seed 5 of the anchor sub-source search
    let c = phi_alpha(&host, &ord("2"), &BitSource::seeded(5), 100_000).unwrap();
    let a0 = c.settle_anchors().unwrap().entries[0].a;
    assert_eq!(a0, Element(1));
    assert_eq!(c.member(Element(0)), Membership::No);

    // incomparable with a_0 in a disjoint union: never a member
    let u = disjoint_union(&linear(Ordinal::omega()), &linear(Ordinal::omega()));
    let c = phi_alpha(&u, &ord("2"), &ones(), 200).unwrap();
    assert_eq!(c.settle_anchors().unwrap().entries[0].a, DisjointUnion::tag(0, Element(0)));
    assert_eq!(c.member(DisjointUnion::tag(1, Element(4))), Membership::No);
    // no a_1 ever appears, so block 0 is never closed
    assert_eq!(c.member(DisjointUnion::tag(0, Element(4))), Membership::Undetermined);
}

#[test]
fn more_fuel_only_resolves_undetermined() {
    let host = linear(ord("w^2"));
    for seed in 0..4 {
        let runs: Vec<_> = [300, 3000, 30_000]
            .iter()
            .map(|&fuel| phi_alpha(&host, &ord("2"), &BitSource::seeded(seed), fuel).unwrap())
            .collect();
        for e in 0..200 {
            let answers: Vec<Membership> = runs.iter().map(|c| c.member(Element(e))).collect();
            for i in 0..answers.len() {
                for j in i + 1..answers.len() {
                    if answers[i] != Membership::Undetermined {
                        assert_eq!(answers[i], answers[j], "seed {seed} element {e}");
                    }
                }
            }
        }
    }
}

#[test]
fn runs_are_deterministic() {
    let host = linear(ord("w^3"));
    let run = |seed| {
        let c = phi_alpha(&host, &ord("3"), &BitSource::seeded(seed), 20_000).unwrap();
        format!("{:?} {:?}", c.enumerate(40), c.anchors())
    };
    for seed in 0..3 {
        assert_eq!(run(seed), run(seed));
    }
}

#[test]
fn chains_at_higher_levels() {
    for (order, alpha) in [("w^3", "2"), ("w^3", "3"), ("w^w", "w"), ("w^2*2", "w+1")] {
        let host = linear(ord(order));
        for seed in 0..4 {
            let c = phi_alpha(&host, &ord(alpha), &BitSource::seeded(seed), 10_000).unwrap();
            let window = c.enumerate(30);
            let elements = window.elements();
            assert!(is_chain(&host, &elements));
            assert!(elements.windows(2).all(|p| host.lt(p[0], p[1])), "{order} {alpha} {seed}");
            for item in &window.items {
                assert_eq!(c.member(item.element), Membership::Yes);
            }
            let blocks = window.items.iter().map(|i| i.block());
            let anchors = c.anchors().unwrap().entries.len();
            assert!(blocks.into_iter().all(|b| b + 1 < anchors));
        }
    }
}

#[test]
fn agreement_with_longer_windows() {
    let host = linear(ord("w^2"));
    for seed in 0..3 {
        let c = phi_alpha(&host, &ord("2"), &BitSource::seeded(seed), 20_000).unwrap();
        let long = c.enumerate(400).elements();
        for e in 0..60 {
            let x = Element(e);
            match c.member(x) {
                Membership::Yes => assert!(long.contains(&x), "seed {seed} element {e}"),
                Membership::No => assert!(!long.contains(&x)),
                Membership::Undetermined => {}
            }
        }
    }
}
