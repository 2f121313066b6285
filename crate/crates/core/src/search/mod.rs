//! Automorphism groups and isomorphisms of colored Cayley graphs.
//!
//! Three views of a Cayley graph are searched:
//! * color classes fixed: the group `A°` of color-preserving automorphisms;
//! * exact arc colors: arc `(g, gs)` colored by `s`;
//! * no colors: the full automorphism group of the underlying graph.

mod brute;
mod digraph;
mod engine;
mod refine;

use crate::cayley::ColoredCayleyGraph;
use crate::error::Result;
use crate::perm::Perm;
use crate::permgroup::PermGroup;

pub use brute::{brute_force_group, BRUTE_FORCE_LIMIT};
pub use digraph::ColoredDigraph;
pub use refine::RefinementState;

use engine::ColorMatch;

/// Arcs colored by the color class of their connection element.
pub fn class_digraph(graph: &ColoredCayleyGraph) -> ColoredDigraph {
    arcs_with(graph, |_, _, c| c as u32 + 1)
}

/// Arc `(g, gs)` colored by `s`.
pub fn exact_arc_digraph(graph: &ColoredCayleyGraph) -> ColoredDigraph {
    let group = graph.group();
    arcs_with(graph, |u, v, _| group.mul(group.inv(u), v) as u32 + 1)
}

/// The underlying digraph with a single arc color.
pub fn plain_digraph(graph: &ColoredCayleyGraph) -> ColoredDigraph {
    arcs_with(graph, |_, _, _| 1)
}

/// `color(u, v, c)` receives the arc and its natural color `c`.
fn arcs_with(graph: &ColoredCayleyGraph, color: impl Fn(usize, usize, usize) -> u32) -> ColoredDigraph {
    let n = graph.order();
    let arcs: Vec<(usize, usize, u32)> = (0..n)
        .flat_map(|u| graph.neighbors(u).iter().map(move |&(v, c)| (u, v, c)))
        .map(|(u, v, c)| (u, v, color(u, v, c)))
        .collect();
    ColoredDigraph::new(n, vec![0; n], arcs)
}

/// Automorphism group of a colored digraph (colors fixed).
pub fn automorphism_group(g: &ColoredDigraph) -> PermGroup {
    let outcome = engine::automorphisms(g);
    let mut point_order = outcome.base.clone();
    point_order.extend((0..g.order()).filter(|v| !outcome.base.contains(v)));
    let group = PermGroup::with_point_order(g.order(), outcome.generators, &point_order);
    debug_assert_eq!(
        group.order(),
        outcome.basic_orbits.iter().map(|&k| k as u128).product::<u128>(),
        "basic orbit lengths disagree with the stabilizer chain"
    );
    log::debug!(
        "automorphism search: n={} nodes={} order={}",
        g.order(),
        outcome.nodes,
        group.order()
    );
    group
}

/// `A°`: permutations mapping every color class onto itself.
pub fn color_preserving_group(graph: &ColoredCayleyGraph) -> PermGroup {
    automorphism_group(&class_digraph(graph))
}

/// Permutations preserving every arc color exactly, with arc `(g, gs)`
/// colored by `s` even when `S` is inverse-closed.
pub fn exact_color_digraph_group(graph: &ColoredCayleyGraph) -> PermGroup {
    automorphism_group(&exact_arc_digraph(graph))
}

/// Automorphisms of the underlying uncolored (di)graph.
pub fn uncolored_aut_group(graph: &ColoredCayleyGraph) -> PermGroup {
    automorphism_group(&plain_digraph(graph))
}

/// `A°` by filtering all `n!` permutations; `n ≤ 10`.
pub fn brute_force_color_group(graph: &ColoredCayleyGraph) -> Result<PermGroup> {
    Ok(brute_force_group(graph.order(), |p| graph.is_color_preserving(p))?.0)
}

/// An isomorphism `p` with `p(Γ) = Δ`. With `respect_colors`, color
/// classes must correspond under some bijection of colors; otherwise colors
/// are ignored.
pub fn are_isomorphic(a: &ColoredCayleyGraph, b: &ColoredCayleyGraph, respect_colors: bool) -> Option<Perm> {
    if respect_colors {
        engine::isomorphism(&class_digraph(a), &class_digraph(b), ColorMatch::Renamed)
    } else {
        engine::isomorphism(&plain_digraph(a), &plain_digraph(b), ColorMatch::Exact)
    }
}

/// Isomorphism between colored digraphs with identical colors.
pub fn digraph_isomorphism(a: &ColoredDigraph, b: &ColoredDigraph) -> Option<Perm> {
    engine::isomorphism(a, b, ColorMatch::Exact)
}

/// The 2-closure: the automorphism group of the complete digraph whose arc
/// colors are the orbitals of `group`.
pub fn two_closure(group: &PermGroup) -> PermGroup {
    let (labels, _) = group.orbital_matrix();
    automorphism_group(&ColoredDigraph::from_label_matrix(group.degree(), &labels))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cayley::ConnectionSet;
    use crate::group::{ElementSet, GroupTable};

    fn cayley(group: GroupTable, set: &str) -> ColoredCayleyGraph {
        let g = Arc::new(group);
        let s = g.parse_set(set).unwrap();
        ColoredCayleyGraph::new(g.clone(), ConnectionSet::new(&g, s).unwrap()).unwrap()
    }

    fn f21_gamma() -> ColoredCayleyGraph {
        cayley(GroupTable::f21(), "a,a^2,ax,(ax)^-1")
    }

    fn assert_sound(graph: &ColoredCayleyGraph, group: &PermGroup) {
        assert!(group.generators().iter().all(|p| graph.is_color_preserving(p)));
    }

    #[test]
    fn f21_graph_groups() {
        let gamma = f21_gamma();
        let ao = color_preserving_group(&gamma);
        assert_eq!(ao.order(), 168);
        assert_sound(&gamma, &ao);
        let aut = uncolored_aut_group(&gamma);
        assert_eq!(aut.order(), 336);
        assert!(ao.is_subgroup_of(&aut));
        assert_eq!(aut.suborbit_lengths(0), vec![1, 4, 8, 8]);
        assert_eq!(ao.point_stabilizer(0).order(), 8);
        for k in 0..21 {
            assert!(ao.contains(&gamma.group().left_translation(k)));
        }
    }

    #[test]
    fn inversion_in_abelian_and_complete_quaternion() {
        let z7 = cayley(GroupTable::cyclic(7), "1,6,2,5");
        let inv = Perm::from_images((0..7).map(|x| (7 - x) % 7).collect()).unwrap();
        assert!(color_preserving_group(&z7).contains(&inv));

        let q = Arc::new(GroupTable::q8());
        let k8 = ColoredCayleyGraph::new(q.clone(), ConnectionSet::complete(&q)).unwrap();
        let inv = Perm::from_images((0..8).map(|x| q.inv(x)).collect()).unwrap();
        let ao = color_preserving_group(&k8);
        assert!(ao.contains(&inv));
        assert_eq!(ao.order(), brute_force_color_group(&k8).unwrap().order());
    }

    #[test]
    fn exact_colors_give_left_translations() {
        let z5 = Arc::new(GroupTable::cyclic(5));
        let s = ConnectionSet::arcs(&z5, ElementSet::new(5, [1, 4]).unwrap()).unwrap();
        let d = ColoredCayleyGraph::digraph(z5, s);
        let exact = exact_color_digraph_group(&d);
        assert_eq!(exact.order(), 5);
        let (oracle, count) = brute_force_group(5, |p| exact_arc_digraph(&d).is_automorphism(p)).unwrap();
        assert_eq!(count, 5);
        assert!(oracle.same_group(&exact));

        let z1 = Arc::new(GroupTable::cyclic(1));
        let empty = ConnectionSet::arcs(&z1, ElementSet::empty()).unwrap();
        assert_eq!(
            exact_color_digraph_group(&ColoredCayleyGraph::digraph(z1, empty)).order(),
            1
        );

        let gamma = f21_gamma();
        assert!(exact_color_digraph_group(&gamma).same_group(&gamma.group().left_regular_group()));
    }

    #[test]
    fn search_agrees_with_brute_force() {
        for graph in [
            cayley(GroupTable::cyclic(3), "1,2"),
            cayley(GroupTable::cyclic(9), "1,8,2,7"),
            cayley(GroupTable::dihedral(4), "s,r,r^3"),
        ] {
            let search = color_preserving_group(&graph);
            let brute = brute_force_color_group(&graph).unwrap();
            assert!(search.same_group(&brute), "order {}", graph.order());
        }
        assert_eq!(color_preserving_group(&cayley(GroupTable::cyclic(3), "1,2")).order(), 6);
        let big = f21_gamma();
        assert!(brute_force_color_group(&big).is_err());
    }

    #[test]
    fn empty_connection_set_gives_symmetric_group() {
        let g = Arc::new(GroupTable::dihedral(3));
        let empty = ColoredCayleyGraph::new(g.clone(), ConnectionSet::new(&g, ElementSet::empty()).unwrap()).unwrap();
        assert_eq!(color_preserving_group(&empty).order(), 720);
    }

    #[test]
    fn isomorphism_tests() {
        let gamma = f21_gamma();
        let id = are_isomorphic(&gamma, &gamma, true).unwrap();
        assert!(gamma.is_color_preserving(&id));
        let by_a = cayley(GroupTable::f21(), "a,a^2");
        let by_x = cayley(GroupTable::f21(), "x,x^6");
        assert!(are_isomorphic(&by_a, &by_x, false).is_none());

        // relabel through a group automorphism
        let other = cayley(GroupTable::f21(), "a,a^2,xa,(xa)^-1");
        let p = are_isomorphic(&gamma, &other, true).unwrap();
        let (a, b) = (class_digraph(&gamma), class_digraph(&other));
        assert!(a.is_isomorphism_up_to_colors(&b, &p));
    }

    #[test]
    fn two_closure_examples() {
        assert_eq!(two_closure(&PermGroup::symmetric(6)).order(), 720);
        let c5 = PermGroup::new(5, vec![Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()]);
        let closure = two_closure(&c5);
        let (labels, _) = c5.orbital_matrix();
        let orbital = ColoredDigraph::from_label_matrix(5, &labels);
        let (oracle, count) = brute_force_group(5, |p| orbital.is_automorphism(p)).unwrap();
        assert_eq!(count, 5);
        assert!(closure.same_group(&oracle));

        let ao = color_preserving_group(&f21_gamma());
        let closed = two_closure(&ao);
        assert!(closed.same_group(&ao));
        assert!(two_closure(&closed).same_group(&closed));
    }
}
