use crate::order::{avoid, interval, Bound, Element, LazyPoset, Lookup, Probe};
use crate::source::{decode_tuple, AnchorTuple, BitSource, GapReader, SourceError};

use super::ChainError;

/// One cut point `⟨k_i, a_i, b̄_i⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anchor {
    /// Index of the gap value that produced this anchor.
    pub k: usize,
    pub tuple: AnchorTuple,
    pub a: Element,
    pub bs: Vec<Element>,
}

/// Why an anchor search stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnchorStop {
    /// Every `k < fuel` was examined.
    Fuel { at: usize },
    /// A decoded index could not be resolved within the position budget.
    Lookup { at: usize },
    /// The bit source ran out or overflowed.
    Source { at: usize, error: SourceError },
}

impl AnchorStop {
    pub fn at(&self) -> usize {
        match *self {
            AnchorStop::Fuel { at } | AnchorStop::Lookup { at } | AnchorStop::Source { at, .. } => at,
        }
    }

    pub fn is_source(&self) -> bool {
        matches!(self, AnchorStop::Source { .. })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnchorStream {
    pub entries: Vec<Anchor>,
    pub stop: Option<AnchorStop>,
}

impl AnchorStream {
    /// The `k` at which the search gave up, once it has.
    pub fn exhausted_at(&self) -> Option<usize> {
        self.stop.as_ref().map(AnchorStop::at)
    }
}

/// Memoized enumeration of a host, for index lookups.
#[derive(Debug, Default)]
pub(crate) struct ScanCache {
    members: Vec<Element>,
    next_position: usize,
    ended: bool,
}

impl ScanCache {
    pub(crate) fn nth(&mut self, host: &LazyPoset, n: usize, limit: usize) -> Lookup<Element> {
        while self.members.len() <= n {
            if self.ended {
                return Lookup::Absent;
            }
            if self.next_position >= limit {
                return Lookup::Unknown;
            }
            match host.probe(self.next_position) {
                Probe::End => self.ended = true,
                Probe::Skip => {}
                Probe::Element(e) => self.members.push(e),
            }
            self.next_position += 1;
        }
        Lookup::Found(self.members[n])
    }
}

/// Incremental form of [`build_anchors`].
pub(crate) struct AnchorBuilder {
    host: LazyPoset,
    reader: GapReader,
    next_k: usize,
    fuel: usize,
    scan: ScanCache,
    stream: AnchorStream,
}

impl AnchorBuilder {
    pub(crate) fn new(host: LazyPoset, source: &BitSource, fuel: usize) -> Self {
        AnchorBuilder {
            host,
            reader: source.gaps(),
            next_k: 0,
            fuel,
            scan: ScanCache::default(),
            stream: AnchorStream::default(),
        }
    }

    pub(crate) fn stream(&self) -> &AnchorStream {
        &self.stream
    }

    pub(crate) fn entries(&self) -> &[Anchor] {
        &self.stream.entries
    }

    pub(crate) fn stopped(&self) -> bool {
        self.stream.stop.is_some()
    }

    /// Searches until at least `count` anchors exist or the search stops.
    pub(crate) fn ensure(&mut self, count: usize) -> bool {
        while self.stream.entries.len() < count && self.stream.stop.is_none() {
            self.step();
        }
        self.stream.entries.len() >= count
    }

    pub(crate) fn run(&mut self) {
        while self.stream.stop.is_none() {
            self.step();
        }
    }

    fn resolve(&mut self, index: u64) -> Lookup<Element> {
        match usize::try_from(index) {
            Ok(n) => self.scan.nth(&self.host, n, self.fuel),
            Err(_) => Lookup::Unknown,
        }
    }

    fn step(&mut self) {
        let k = self.next_k;
        if k >= self.fuel {
            self.stream.stop = Some(AnchorStop::Fuel { at: k });
            return;
        }
        let value = match self.reader.next_gap() {
            Ok(v) => v,
            Err(error) => {
                self.stream.stop = Some(AnchorStop::Source { at: k, error });
                return;
            }
        };
        self.next_k += 1;
        let tuple = decode_tuple(value);
        let mut resolved = Vec::with_capacity(tuple.b_indices.len() + 1);
        for &index in std::iter::once(&tuple.a_index).chain(&tuple.b_indices) {
            match self.resolve(index) {
                Lookup::Found(e) => resolved.push(e),
                // Not a code for a tuple over this poset.
                Lookup::Absent => return,
                Lookup::Unknown => {
                    self.stream.stop = Some(AnchorStop::Lookup { at: k });
                    return;
                }
            }
        }
        let a = resolved[0];
        if let Some(last) = self.stream.entries.last() {
            if !self.host.lt(last.a, a) {
                return;
            }
        }
        self.stream.entries.push(Anchor {
            k,
            tuple,
            a,
            bs: resolved[1..].to_vec(),
        });
    }
}

/// Extracts cut points from the gap sequence of `source`: `a_0` comes from
/// the first decodable value and each later `a_{i+1}` from the first later
/// value whose element lies strictly above `a_i`. At most `fuel` gap values
/// are examined and index lookups scan at most `fuel` positions.
pub fn build_anchors(host: &LazyPoset, source: &BitSource, fuel: usize) -> AnchorStream {
    let mut builder = AnchorBuilder::new(host.clone(), source, fuel);
    builder.run();
    builder.stream
}

pub(crate) fn block_from(host: &LazyPoset, entries: &[Anchor], i: usize, open_ended: bool) -> Result<LazyPoset, ChainError> {
    let start = entries.get(i).ok_or(ChainError::MissingAnchor(i))?;
    let hi = match entries.get(i + 1) {
        Some(next) => Bound::Open(next.a),
        None if open_ended => Bound::Unbounded,
        None => return Err(ChainError::MissingAnchor(i + 1)),
    };
    Ok(avoid(&interval(host, Bound::Closed(start.a), hi), &start.bs))
}

/// `P_{b̄_i} ∩ P_[a_i, a_{i+1})`. If `i` is the last anchor the block is only
/// available with `open_ended`, as `P_{b̄_i} ∩ P_[a_i, ∞)`.
pub fn block(host: &LazyPoset, anchors: &AnchorStream, i: usize, open_ended: bool) -> Result<LazyPoset, ChainError> {
    block_from(host, &anchors.entries, i, open_ended)
}
