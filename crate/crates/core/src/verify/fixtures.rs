//! Seeded pseudorandom Cayley graphs and digraphs.

use std::sync::Arc;

use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::cayley::{ColoredCayleyGraph, ConnectionSet};
use crate::enumerate::InversePairs;
use crate::group::{ElementSet, GroupTable};

/// Groups of orders 6 to 21 used for seeded instances.
pub const MEDIUM_GROUPS: [&str; 24] = [
    "Z6", "S3", "Z7", "Z8", "D4", "Q8", "Z2^3", "Z9", "Z3^2", "Z10", "D5", "Z11", "Z12", "D6", "Z13", "Z14", "D7",
    "Z15", "Q8xZ2", "Z2xD4", "Z17", "D9", "Z19", "F21",
];

fn generates(group: &GroupTable, elements: &[usize]) -> bool {
    group.subgroup_generated(elements).len() == group.order()
}

/// A connected Cayley digraph: `1..=3` random non-identity elements that
/// generate the group, arcs colored by the element.
pub fn random_connected_digraph(rng: &mut ChaCha8Rng, group: Arc<GroupTable>) -> ColoredCayleyGraph {
    let n = group.order();
    let candidates: Vec<usize> = (0..n).filter(|&x| x != group.identity()).collect();
    loop {
        let k = rng.gen_range(1..=3.min(n - 1));
        let picked: Vec<usize> = sample(rng, n - 1, k).iter().map(|i| candidates[i]).collect();
        if !generates(&group, &picked) {
            continue;
        }
        let set = ElementSet::new(n, picked).expect("indices in range");
        let conn = ConnectionSet::arcs(&group, set).expect("identity excluded");
        return ColoredCayleyGraph::digraph(group, conn);
    }
}

/// A connected Cayley graph on `pairs_range` random inverse pairs,
/// additionally satisfying `accept`.
pub fn random_connected_graph(
    rng: &mut ChaCha8Rng,
    group: Arc<GroupTable>,
    pairs_range: std::ops::RangeInclusive<usize>,
    accept: impl Fn(&ElementSet) -> bool,
) -> ColoredCayleyGraph {
    let pairs = InversePairs::new(&group);
    let n = group.order();
    let hi = (*pairs_range.end()).min(pairs.len());
    let lo = (*pairs_range.start()).min(hi);
    loop {
        let k = rng.gen_range(lo..=hi);
        let chosen = sample(rng, pairs.len(), k);
        let set = ElementSet::new(
            n,
            chosen.iter().flat_map(|i| {
                let (s, t) = pairs.pairs()[i];
                [s, t]
            }),
        )
        .expect("indices in range");
        if !generates(&group, set.as_slice()) || !accept(&set) {
            continue;
        }
        let conn = ConnectionSet::new(&group, set).expect("pair unions are inverse-closed");
        return ColoredCayleyGraph::new(group, conn).expect("inverse-closed");
    }
}
