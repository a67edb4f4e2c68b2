use crate::order::{Element, LazyPoset, Lookup, Probe};

use super::Membership;

/// Replay state of the greedy chain: `x_n` joins iff every earlier member is
/// below it. Members arrive in increasing order, so comparing against the
/// last one suffices.
pub(crate) struct Greedy {
    host: LazyPoset,
    fuel: usize,
    cursor: usize,
    ended: bool,
    accepted: Vec<(usize, Element)>,
}

impl Greedy {
    pub(crate) fn new(host: LazyPoset, fuel: usize) -> Self {
        Greedy {
            host,
            fuel,
            cursor: 0,
            ended: false,
            accepted: Vec::new(),
        }
    }

    fn step(&mut self) {
        match self.host.probe(self.cursor) {
            Probe::End => self.ended = true,
            Probe::Skip => {}
            Probe::Element(x) => {
                if self.accepted.last().is_none_or(|&(_, top)| self.host.leq(top, x)) {
                    self.accepted.push((self.cursor, x));
                }
            }
        }
        self.cursor += 1;
    }

    pub(crate) fn nth(&mut self, w: usize) -> Lookup<Element> {
        while self.accepted.len() <= w {
            if self.ended {
                return Lookup::Absent;
            }
            if self.cursor >= self.fuel {
                return Lookup::Unknown;
            }
            self.step();
        }
        Lookup::Found(self.accepted[w].1)
    }

    pub(crate) fn member(&mut self, x: Element) -> Membership {
        if !self.host.contains(x) {
            return Membership::No;
        }
        let Some(pos) = self.host.position(x) else {
            return Membership::No;
        };
        if pos >= self.fuel {
            return Membership::Undetermined;
        }
        while self.cursor <= pos && !self.ended {
            self.step();
        }
        if self.accepted.binary_search_by_key(&pos, |&(p, _)| p).is_ok() {
            Membership::Yes
        } else {
            Membership::No
        }
    }
}
