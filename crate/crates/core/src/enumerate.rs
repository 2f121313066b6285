//! Enumeration of inverse-closed connection sets as bitmasks over inverse
//! pairs, with optional connectivity filtering and `Aut(G)`-orbit reduction.

use std::ops::Range;

use crate::cayley::ConnectionSet;
use crate::error::{Error, Result};
use crate::group::{ElementSet, GroupTable};

/// Largest number of inverse pairs the enumerator accepts.
pub const MAX_PAIRS: usize = 24;

/// The non-identity elements of a group grouped into inverse pairs
/// `{s, s⁻¹}`; a self-inverse element forms a pair on its own. Pairs are
/// numbered by their least element.
#[derive(Clone, Debug)]
pub struct InversePairs {
    pairs: Vec<(usize, usize)>,
    pair_of: Vec<Option<usize>>,
}

impl InversePairs {
    pub fn new(group: &GroupTable) -> Self {
        let mut pairs = Vec::new();
        let mut pair_of = vec![None; group.order()];
        for s in 0..group.order() {
            if s == group.identity() || pair_of[s].is_some() {
                continue;
            }
            let t = group.inv(s);
            pair_of[s] = Some(pairs.len());
            pair_of[t] = Some(pairs.len());
            pairs.push((s, t));
        }
        InversePairs { pairs, pair_of }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair_of(&self, s: usize) -> Option<usize> {
        self.pair_of[s]
    }

    /// The element set selected by `mask`.
    pub fn elements(&self, order: usize, mask: u32) -> ElementSet {
        let elems = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, &(s, t))| [s, t]);
        ElementSet::new(order, elems).expect("pair elements are in range")
    }

    /// Bitmask of an inverse-closed identity-free set.
    pub fn mask_of(&self, set: &ElementSet) -> u32 {
        set.iter().filter_map(|s| self.pair_of[s]).fold(0, |m, p| m | 1 << p)
    }

    /// Action of an element permutation (typically a group automorphism) on
    /// pair indices.
    pub fn pair_action(&self, images: &[usize]) -> Vec<usize> {
        self.pairs
            .iter()
            .map(|&(s, _)| self.pair_of[images[s]].expect("automorphisms fix the identity"))
            .collect()
    }
}

pub(crate) fn apply_pair_action(action: &[usize], mask: u32) -> u32 {
    action
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .fold(0, |m, (_, &j)| m | 1 << j)
}

/// Iterator over connection sets; see [`enumerate_connection_sets`].
pub struct ConnectionSets<'g> {
    group: &'g GroupTable,
    pairs: InversePairs,
    actions: Vec<Vec<usize>>,
    connected_only: bool,
    up_to_aut: bool,
    next: u32,
    end: u32,
}

/// Iterates nonempty inverse-closed connection sets of `group` as
/// `(mask, set)` in increasing mask order. With `up_to_aut`, only the least
/// mask of each `Aut(G)`-orbit is produced.
pub fn enumerate_connection_sets(
    group: &GroupTable,
    connected_only: bool,
    up_to_aut: bool,
) -> Result<ConnectionSets<'_>> {
    let pairs = InversePairs::new(group);
    if pairs.len() > MAX_PAIRS {
        return Err(Error::TooManyPairs {
            pairs: pairs.len(),
            limit: MAX_PAIRS,
        });
    }
    let actions = if up_to_aut {
        group
            .all_automorphisms()
            .iter()
            .map(|a| pairs.pair_action(a.images()))
            .collect()
    } else {
        Vec::new()
    };
    let end = 1u32 << pairs.len();
    Ok(ConnectionSets {
        group,
        pairs,
        actions,
        connected_only,
        up_to_aut,
        next: 1,
        end,
    })
}

impl<'g> ConnectionSets<'g> {
    /// Restricts the iteration to masks in `range` (intersected with the
    /// valid range), for sharding across workers.
    pub fn with_range(mut self, range: Range<u32>) -> Self {
        self.next = range.start.max(1);
        self.end = range.end.min(1u32 << self.pairs.len());
        self
    }

    pub fn total_masks(&self) -> u32 {
        1u32 << self.pairs.len()
    }

    pub fn pairs(&self) -> &InversePairs {
        &self.pairs
    }

    /// True iff `mask` is the least element of its `Aut(G)`-orbit.
    pub fn is_orbit_representative(&self, mask: u32) -> bool {
        self.actions.iter().all(|a| apply_pair_action(a, mask) >= mask)
    }

    /// The `Aut(G)`-orbit of `mask`, sorted.
    pub fn orbit(&self, mask: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self.actions.iter().map(|a| apply_pair_action(a, mask)).collect();
        out.push(mask);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn generates(&self, mask: u32) -> bool {
        let set = self.pairs.elements(self.group.order(), mask);
        self.group.subgroup_generated(set.as_slice()).len() == self.group.order()
    }
}

impl Iterator for ConnectionSets<'_> {
    type Item = (u32, ConnectionSet);

    fn next(&mut self) -> Option<Self::Item> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if self.up_to_aut && !self.is_orbit_representative(mask) {
                continue;
            }
            if self.connected_only && !self.generates(mask) {
                continue;
            }
            let set = self.pairs.elements(self.group.order(), mask);
            let conn = ConnectionSet::new(self.group, set).expect("pair unions are valid connection sets");
            return Some((mask, conn));
        }
        None
    }
}
