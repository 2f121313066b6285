use std::sync::Arc;

use cca_core::blocks::fixer;
use cca_core::cartesian::{
    canonical_f21_graph, maintool_decompose, product_structure_verdict, stabilizer_classes, strip_block_edges,
};
use cca_core::cayley::{cartesian_product, quotient_graph};
use cca_core::search::{are_isomorphic, color_preserving_group};
use cca_core::verify::product::cycle_graph;
use cca_core::{BlockSystem, ColoredCayleyGraph, ConnectionSet, ElementSet, Error, GroupTable, PermGroup};

struct Instance {
    graph: ColoredCayleyGraph,
    ao: PermGroup,
}

/// `Cay(Z5, {±1}) □ Γ_F21`; vertex `i·21 + j` is `(i, j)`.
fn instance() -> Instance {
    let graph = cartesian_product(&cycle_graph(5), &canonical_f21_graph()).unwrap();
    let ao = color_preserving_group(&graph);
    Instance { graph, ao }
}

fn z5_fibers() -> BlockSystem {
    BlockSystem::from_labels(&(0..105).map(|v| v % 21).collect::<Vec<_>>()).unwrap()
}

fn f21_fibers() -> BlockSystem {
    BlockSystem::from_labels(&(0..105).map(|v| v / 21).collect::<Vec<_>>()).unwrap()
}

#[test]
fn product_has_expected_shape() {
    let inst = instance();
    assert_eq!(inst.graph.order(), 105);
    assert_eq!(inst.graph.valency(), 6);
    assert_eq!(inst.ao.order(), 1680);
    let center = inst.graph.group().center();
    assert_eq!(center.len(), 5);
}

#[test]
fn kernel_orders_on_the_fiber_systems() {
    let inst = instance();
    assert_eq!(fixer(&inst.ao, &f21_fibers()).unwrap().order(), 168);
    assert_eq!(fixer(&inst.ao, &z5_fibers()).unwrap().order(), 10);
}

#[test]
fn classes_over_z5_fibers_are_the_f21_fibers() {
    let inst = instance();
    let classes = stabilizer_classes(&inst.ao, &z5_fibers()).unwrap();
    assert_eq!(classes, f21_fibers());
    let kernel = fixer(&inst.ao, &z5_fibers()).unwrap();
    for class in classes.blocks() {
        assert!(class.windows(2).all(|w| kernel.stabilizers_equal(w[0], w[1])));
    }
    let stripped = strip_block_edges(&inst.graph, &z5_fibers());
    assert_eq!(stripped.components.len(), 5);
    assert!(stripped.components.iter().all(|c| c.len() == 21));
}

#[test]
fn fiber_decomposition_round_trips() {
    let inst = instance();
    let result = maintool_decompose(&inst.graph, &inst.ao, &f21_fibers()).unwrap();
    assert!(result.success);
    assert!(result.phrasings_agree());
    let f = result.factors.as_ref().unwrap();
    assert!(are_isomorphic(&f.factor1, &cycle_graph(5), true).is_some());
    assert!(are_isomorphic(&f.factor2, &canonical_f21_graph(), true).is_some());
    let group = inst.graph.group();
    assert!(f.s1.iter().all(|a| f.s2.iter().all(|b| group.commute(a, b))));
    assert_eq!(f.s1.len() + f.s2.len(), inst.graph.valency());
    let json = result.to_json(group);
    assert_eq!(json["factors"]["iso"].as_array().unwrap().len(), 105);
}

#[test]
fn verdict_prefers_the_f21_fibers() {
    let inst = instance();
    let ps = product_structure_verdict(&inst.graph).unwrap().unwrap();
    assert_eq!(ps.decomposition.blocks, f21_fibers());
    assert_eq!(ps.other_subgroup.len(), 5);
    assert_eq!(ps.f21_subgroup.len(), 21);
    assert_eq!(ps.other_factor_is_cca, Some(true));
    assert!(!ps.verdict.is_cca);
}

#[test]
fn quotient_by_z5_is_the_f21_graph() {
    let inst = instance();
    let z5 = ElementSet::new(105, (0..5).map(|i| i * 21)).unwrap();
    let (q, coset) = quotient_graph(&inst.graph, &z5).unwrap();
    assert_eq!(q.order(), 21);
    assert_eq!(coset.len(), 105);
    assert!(are_isomorphic(&q, &canonical_f21_graph(), false).is_some());
}

#[test]
fn f21_graph_splits_off_a_single_vertex() {
    let ps = product_structure_verdict(&canonical_f21_graph()).unwrap().unwrap();
    assert_eq!(ps.other_factor.order(), 1);
    assert_eq!(ps.other_factor_is_cca, None);
    assert_eq!(ps.f21_subgroup.len(), 21);
}

#[test]
fn cca_and_even_inputs_are_rejected() {
    let z15 = Arc::new(GroupTable::cyclic(15));
    let cca = ColoredCayleyGraph::new(z15.clone(), ConnectionSet::symmetric_closure(&z15, &[1]).unwrap()).unwrap();
    assert!(matches!(product_structure_verdict(&cca), Err(Error::GraphIsCca)));

    let z6 = Arc::new(GroupTable::cyclic(6));
    let even = ColoredCayleyGraph::new(z6.clone(), ConnectionSet::symmetric_closure(&z6, &[1]).unwrap()).unwrap();
    assert!(product_structure_verdict(&even).is_err());
    let ao = color_preserving_group(&even);
    assert!(matches!(
        maintool_decompose(&even, &ao, &BlockSystem::whole(6)),
        Err(Error::EvenOrder(6))
    ));
}

#[test]
fn f21_graph_blocks_have_size_three() {
    let gamma = canonical_f21_graph();
    let ao = color_preserving_group(&gamma);
    let sizes: Vec<usize> = cca_core::blocks::all_block_systems(&ao)
        .unwrap()
        .iter()
        .map(|b| b.block_size())
        .filter(|&k| k != 1 && k != 21)
        .collect();
    assert!(!sizes.is_empty());
    assert!(sizes.iter().all(|&k| k == 3));
    let x = gamma.group().parse_element("x").unwrap();
    let sylow7 = gamma.group().subgroup_generated(&[x]);
    let group = gamma.group();
    let labels: Vec<usize> = (0..21)
        .map(|g| sylow7.iter().map(|h| group.mul(g, h)).min().unwrap())
        .collect();
    assert!(!BlockSystem::from_labels(&labels)
        .unwrap()
        .is_invariant_under(ao.generators()));
}
