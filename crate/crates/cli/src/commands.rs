use std::collections::BTreeSet;
use std::env;
use std::path::Path;

use maxchain_core::analysis::{
    height, heights, is_maximal_chain, is_strongly_maximal_chain, longest_chain, max_chain_through,
    strongly_maximal_chain,
};
use maxchain_core::chain::AnchorStop;
use maxchain_core::codings::{psi_witnesses, side_of_chain, smax_decode, CodingError, Family, LadderKind};
use maxchain_core::order::{is_chain, truncate, truncate_within, Truncation};
use maxchain_core::{phi_alpha, BitSource, Element, FinitePoset, LazyPoset, Membership, Ordinal, PhiChain};

use crate::report::{list, read_input, write_output, Failure, Report};

pub const DEFAULT_FUEL: usize = 100_000;
pub const FUEL_ENV: &str = "MAXCHAIN_DEFAULT_FUEL";

fn default_fuel() -> Result<usize, Failure> {
    match env::var(FUEL_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage("bad_env", format!("{FUEL_ENV} must be a natural number, got {v:?}"))),
        Err(_) => Ok(DEFAULT_FUEL),
    }
}

fn resolve_fuel(report: &mut Report, fuel: Option<usize>) -> Result<usize, Failure> {
    let fuel = match fuel {
        Some(f) => f,
        None => default_fuel()?,
    };
    report.push("fuel", fuel);
    Ok(fuel)
}

fn load_family(report: &mut Report, path: &Path) -> Result<Family, Failure> {
    let text = read_input(report, "family", path)?;
    let family: Family = text
        .parse()
        .map_err(|e| Failure::usage("parse_error", format!("{}: {e}", path.display())))?;
    report.push("family", family.name());
    Ok(family)
}

fn parse_alpha(report: &mut Report, text: &str) -> Result<Ordinal, Failure> {
    let alpha: Ordinal = text
        .parse()
        .map_err(|e| Failure::usage("parse_error", format!("alpha {text:?}: {e}")))?;
    if alpha.is_zero() {
        return Err(Failure::usage("bad_alpha", "alpha must be at least 1"));
    }
    report.push("alpha", &alpha);
    Ok(alpha)
}

fn labels(poset: &FinitePoset, xs: &[usize]) -> String {
    list(xs.iter().map(|&x| poset.label(x)))
}

fn element_labels(host: &LazyPoset, xs: &[Element]) -> String {
    list(xs.iter().map(|&x| host.label(x)))
}

fn stop_token(stop: &Option<AnchorStop>) -> String {
    match stop {
        None => "none".into(),
        Some(AnchorStop::Fuel { at }) => format!("fuel at {at}"),
        Some(AnchorStop::Lookup { at }) => format!("lookup at {at}"),
        Some(AnchorStop::Source { at, error }) => format!("source at {at} ({error})"),
    }
}

fn report_anchors(report: &mut Report, chain: &PhiChain) {
    if let Some(anchors) = chain.anchors() {
        report.push("anchors.count", anchors.entries.len());
        report.push("anchors.values", element_labels(chain.host(), &anchors.entries.iter().map(|a| a.a).collect::<Vec<_>>()));
        report.push("anchors.stop", stop_token(&anchors.stop));
    }
}

pub fn analyze(report: &mut Report, path: &Path, dot: Option<&Path>) -> Result<(), Failure> {
    let text = read_input(report, "poset", path)?;
    let poset: FinitePoset = text
        .parse()
        .map_err(|e| Failure::usage("parse_error", format!("{}: {e}", path.display())))?;
    let ht = heights(&poset);
    let longest = longest_chain(&poset);
    let smax = strongly_maximal_chain(&poset);
    report.push("elements", poset.len());
    report.push("height", height(&poset));
    report.push("heights", list(ht));
    report.push("longest_chain", labels(&poset, longest.elements()));
    report.push("strongly_maximal_chain", labels(&poset, smax.elements()));
    let oracle = |r: Result<bool, _>| r.unwrap_or(false);
    let mut ok = report.verdict("longest_is_maximal", oracle(is_maximal_chain(&poset, longest.elements())));
    ok &= report.verdict(
        "strongly_maximal_holds",
        oracle(is_strongly_maximal_chain(&poset, smax.elements())),
    );
    ok &= report.verdict("strongly_maximal_is_maximal", oracle(is_maximal_chain(&poset, smax.elements())));
    if let Some(out) = dot {
        write_output(report, "dot", out, &poset.to_dot())?;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::verify("verdict_failed", "an analysis verdict failed"))
    }
}

#[allow(clippy::too_many_arguments)]
pub fn chain(
    report: &mut Report,
    family_path: &Path,
    alpha: &str,
    seed: Option<u64>,
    bits: Option<&Path>,
    fuel: Option<usize>,
    emit: usize,
) -> Result<(), Failure> {
    let family = load_family(report, family_path)?;
    let alpha = parse_alpha(report, alpha)?;
    let source = match (seed, bits) {
        (Some(seed), _) => {
            report.push("source", format!("seed {seed}"));
            BitSource::seeded(seed)
        }
        (None, Some(path)) => {
            read_input(report, "bits", path)?;
            report.push("source", "bits");
            BitSource::from_file(path).map_err(|e| Failure::usage("parse_error", e.to_string()))?
        }
        (None, None) if alpha == Ordinal::one() => {
            report.push("source", "none");
            BitSource::seeded(0)
        }
        (None, None) => return Err(Failure::usage("missing_source", "alpha above 1 needs --seed or --bits")),
    };
    let fuel = resolve_fuel(report, fuel)?;
    report.push("emit", emit);
    let host = family.build();
    let chain = phi_alpha(&host, &alpha, &source, fuel).map_err(|e| Failure::usage("bad_alpha", e.to_string()))?;
    let window = chain.enumerate(emit);
    let elements = window.elements();
    report.push("emitted", elements.len());
    report.push("chain", element_labels(&host, &elements));
    report.push(
        "paths",
        list(window.items.iter().map(|i| i.path.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("."))),
    );
    report.push("fuel_limited", window.fuel_limited);
    report_anchors(report, &chain);
    if elements.len() < emit && window.fuel_limited {
        return Err(Failure::fuel(format!("emitted {} of {emit} elements before fuel ran out", elements.len())));
    }
    Ok(())
}

/// The host window the oracles run on: the whole poset for finite
/// families, otherwise every element up to the last emitted position.
fn oracle_window(family: &Family, host: &LazyPoset, emitted: &[Element]) -> Truncation {
    if family.is_finite() {
        return truncate(host, usize::MAX);
    }
    let last = emitted.iter().filter_map(|&e| host.position(e)).max().map_or(0, |p| p + 1);
    truncate_within(host, usize::MAX, last)
}

pub fn verify(
    report: &mut Report,
    family_path: &Path,
    alpha: &str,
    seed: u64,
    window: usize,
    fuel: Option<usize>,
) -> Result<(), Failure> {
    let family = load_family(report, family_path)?;
    let alpha = parse_alpha(report, alpha)?;
    report.push("source", format!("seed {seed}"));
    let fuel = resolve_fuel(report, fuel)?;
    report.push("window", window);
    let host = family.build();
    let chain = phi_alpha(&host, &alpha, &BitSource::seeded(seed), fuel)
        .map_err(|e| Failure::usage("bad_alpha", e.to_string()))?;
    let out = chain.enumerate(window);
    let emitted = out.elements();
    report.push("emitted", emitted.len());
    report.push("chain", element_labels(&host, &emitted));
    report.push("fuel_limited", out.fuel_limited);

    let trunc = oracle_window(&family, &host, &emitted);
    report.push("oracle.elements", trunc.elements.len());
    let indices: Option<Vec<usize>> = emitted.iter().map(|&e| trunc.index_of(e)).collect();
    let mut ok = report.verdict("within_window", indices.is_some());
    ok &= report.verdict("is_chain", is_chain(&host, &emitted));
    ok &= report.verdict(
        "increasing",
        emitted.windows(2).all(|p| host.lt(p[0], p[1])),
    );
    ok &= report.verdict(
        "members",
        emitted.iter().all(|&e| chain.member(e) == Membership::Yes),
    );
    if family.is_finite() {
        let h = height(&trunc.poset);
        report.push("oracle.height", h);
        let through = indices
            .as_deref()
            .and_then(|ix| max_chain_through(&trunc.poset, ix).ok());
        report.push("oracle.longest_through_prefix", through.map_or("none".into(), |t| t.to_string()));
        ok &= report.verdict("extends_to_longest", through == Some(h));
    } else {
        report.push("oracle.height", "not analyzable (infinite family)");
    }
    if !ok {
        return Err(Failure::verify("verify_failed", "the emitted prefix failed a check"));
    }
    if emitted.len() < window && out.fuel_limited {
        return Err(Failure::fuel(format!("emitted {} of {window} elements before fuel ran out", emitted.len())));
    }
    Ok(())
}

fn parse_chain(text: &str) -> Result<Vec<u64>, Failure> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Failure::usage("parse_error", format!("chain entry {t:?} is not a natural number")))
        })
        .collect()
}

fn set_text(set: &BTreeSet<u64>) -> String {
    let items: Vec<String> = set.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub fn decode(report: &mut Report, family_path: &Path, chain_path: &Path) -> Result<(), Failure> {
    let family = load_family(report, family_path)?;
    let codes = parse_chain(&read_input(report, "chain", chain_path)?)?;
    let host = family.build();
    let chain: Vec<Element> = codes.iter().map(|&c| Element(c)).collect();
    if let Some(&bad) = chain.iter().find(|&&e| !host.contains(e)) {
        return Err(Failure::usage("bad_chain", format!("element {bad} is not in the family")));
    }
    report.push("chain", element_labels(&host, &chain));
    if !is_chain(&host, &chain) {
        return Err(Failure::verify("not_a_chain", "the listed elements are not pairwise comparable"));
    }
    match &family {
        Family::DisjointUnion { .. } => {
            let side = side_of_chain(&chain).map_err(|e| match e {
                CodingError::EmptyChain => Failure::verify("empty_chain", e.to_string()),
                _ => Failure::verify("mixed_sides", e.to_string()),
            })?;
            report.push("side", side);
            Ok(())
        }
        Family::Smax(_) | Family::Maxnot(_) => {
            let ladder = family
                .ladder()
                .ok_or_else(|| Failure::usage("needs_truncation", "decoding needs a family with a trunc field"))?;
            let indices: Vec<usize> = codes.iter().map(|&c| c as usize).collect();
            report.push("rungs", ladder.rung_count());
            match ladder.kind() {
                LadderKind::Smax => {
                    let a = smax_decode(&ladder, &indices).map_err(|e| match e {
                        CodingError::NotStronglyMaximal => Failure::verify("not_strongly_maximal", e.to_string()),
                        _ => Failure::usage("decode_error", e.to_string()),
                    })?;
                    report.push("decoded", set_text(&a));
                    Ok(())
                }
                LadderKind::Maxnot => {
                    let mut ill_defined = false;
                    for n in 0..ladder.rung_count() {
                        let w = psi_witnesses(&ladder, &indices, n);
                        ill_defined |= w.len() > 1;
                        let value = match w.as_slice() {
                            [] => "none".to_string(),
                            [i] => i.to_string(),
                            many => format!("ambiguous {}", list(many)),
                        };
                        report.push(format!("psi.{n}"), value);
                    }
                    if ill_defined {
                        Err(Failure::verify("psi_ill_defined", "a rung has more than one branch witness"))
                    } else {
                        Ok(())
                    }
                }
            }
        }
        _ => Err(Failure::usage(
            "unsupported_family",
            format!("no decoder for {} families", family.name()),
        )),
    }
}

pub fn gadget(report: &mut Report, family_path: &Path, rungs: usize, dot: &Path) -> Result<(), Failure> {
    let family = load_family(report, family_path)?;
    report.push("rungs", rungs);
    let ladder = family
        .with_rungs(rungs)
        .and_then(|f| f.ladder())
        .ok_or_else(|| Failure::usage("unsupported_family", format!("{} families have no rungs", family.name())))?;
    let poset = ladder.poset();
    report.push("elements", poset.len());
    report.push("height", height(poset));
    report.push("spine", labels(poset, ladder.spine()));
    let ht = heights(poset);
    report.push("spine_heights", list(ladder.spine().iter().map(|&a| ht[a])));
    report.push("longest_chain", labels(poset, longest_chain(poset).elements()));
    write_output(report, "dot", dot, &poset.to_dot())
}
