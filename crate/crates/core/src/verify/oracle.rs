//! Independent cross-checks of the search engine and the decomposition
//! lemmas on seeded and exhaustive fixtures.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::descriptor::parse_group;
use super::fixtures::{random_connected_digraph, random_connected_graph, MEDIUM_GROUPS};
use super::product::cycle_graph;
use super::report::Checklist;
use crate::blocks::{all_block_systems, fixer, BlockSystem};
use crate::cartesian::{bottom_semiregular_check, canonical_f21_graph, maintool_decompose};
use crate::cayley::{cartesian_product, ColoredCayleyGraph, ConnectionSet};
use crate::cca::{cca_verdict, check_inverters_lemma};
use crate::enumerate::enumerate_connection_sets;
use crate::error::Result;
use crate::group::{ElementSet, GroupTable};
use crate::search::{
    are_isomorphic, brute_force_color_group, color_preserving_group, exact_color_digraph_group, two_closure,
    uncolored_aut_group,
};

/// One representative of every group of order at most 8.
pub const SMALL_GROUPS: [&str; 14] = [
    "Z1", "Z2", "Z3", "Z4", "Z2^2", "Z5", "Z6", "S3", "Z7", "Z8", "Z2xZ4", "Z2^3", "D4", "Q8",
];

/// Upper bound on the number of stabilizer elements enumerated for the
/// inverter checks.
const INVERTER_ELEMENT_LIMIT: u128 = 4096;

fn medium_group(rng: &mut ChaCha8Rng) -> Arc<GroupTable> {
    let name = MEDIUM_GROUPS[rng.gen_range(0..MEDIUM_GROUPS.len())];
    Arc::new(parse_group(name).expect("fixture descriptors parse"))
}

/// The exact-arc-color group of `count` seeded connected Cayley digraphs
/// equals the left regular representation.
pub fn white_oracle(seed: u64, count: usize) -> Checklist {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Checklist::new();
    for i in 0..count {
        let group = medium_group(&mut rng);
        let graph = random_connected_digraph(&mut rng, group.clone());
        let exact = exact_color_digraph_group(&graph);
        let gl = group.left_regular_group();
        let labels = graph.connection_set().labels(&group).join(",");
        checks.check(
            format!("digraph {i} (order {}): exact-color group is G_L", group.order()),
            exact.order() == group.order() as u128 && exact.same_group(&gl),
            format!("S = {{{labels}}}, order {}", exact.order()),
        );
    }
    checks
}

/// Search and brute force give the same `A°` for every inverse-closed
/// connection set (the empty one included) of every group in
/// [`SMALL_GROUPS`].
pub fn brute_force_equivalence(jobs: usize) -> Result<Checklist> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let mut checks = Checklist::new();
    for name in SMALL_GROUPS {
        let group = Arc::new(parse_group(name)?);
        let mut sets = vec![ConnectionSet::new(&group, ElementSet::empty())?];
        sets.extend(enumerate_connection_sets(&group, false, false)?.map(|(_, s)| s));
        let mismatches: Vec<String> = pool.install(|| {
            sets.par_iter()
                .filter_map(|s| {
                    let graph = ColoredCayleyGraph::new(group.clone(), s.clone()).expect("inverse-closed");
                    let search = color_preserving_group(&graph);
                    let brute = brute_force_color_group(&graph).expect("order at most 8");
                    (!search.same_group(&brute)).then(|| {
                        format!(
                            "{{{}}}: search {} brute {}",
                            s.labels(&group).join(","),
                            search.order(),
                            brute.order()
                        )
                    })
                })
                .collect()
        });
        checks.check(
            format!("{name}: search agrees with brute force"),
            mismatches.is_empty(),
            if mismatches.is_empty() {
                format!("{} connection sets", sets.len())
            } else {
                mismatches.join("; ")
            },
        );
    }
    Ok(checks)
}

/// `count` seeded connected CCA graphs over [`MEDIUM_GROUPS`].
pub fn seeded_cca_graphs(seed: u64, count: usize) -> Result<Vec<ColoredCayleyGraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let group = medium_group(&mut rng);
        let graph = random_connected_graph(&mut rng, group, 1..=3, |_| true);
        if cca_verdict(&graph)?.is_cca {
            out.push(graph);
        }
    }
    Ok(out)
}

/// `A°` is 2-closed, and 2-closure is idempotent.
pub fn two_closure_suite(seed: u64) -> Result<Checklist> {
    let mut checks = Checklist::new();
    let mut graphs = vec![("Γ_F21".to_string(), canonical_f21_graph())];
    for (i, g) in seeded_cca_graphs(seed, 5)?.into_iter().enumerate() {
        graphs.push((format!("CCA graph {i} (order {})", g.order()), g));
    }
    for (name, graph) in graphs {
        let ao = color_preserving_group(&graph);
        let closed = two_closure(&ao);
        checks.check(
            format!("{name}: A° is 2-closed"),
            closed.same_group(&ao),
            format!("|A°| = {}, |A°^(2)| = {}", ao.order(), closed.order()),
        );
        checks.check(
            format!("{name}: 2-closure is idempotent"),
            two_closure(&closed).same_group(&closed),
            "",
        );
    }
    Ok(checks)
}

/// Containments, soundness and coset invariance on one graph.
pub fn graph_invariants(name: &str, graph: &ColoredCayleyGraph, checks: &mut Checklist) {
    let group = graph.group();
    let ao = color_preserving_group(graph);
    let aut = uncolored_aut_group(graph);
    let gl = group.left_regular_group();
    checks.check(
        format!("{name}: G_L ≤ A° ≤ Aut"),
        gl.is_subgroup_of(&ao) && ao.is_subgroup_of(&aut),
        "",
    );
    checks.check(
        format!("{name}: generators are sound"),
        ao.generators().iter().all(|p| graph.is_color_preserving(p))
            && aut.generators().iter().all(|p| graph.is_automorphism(p)),
        "",
    );
    let cosets_invariant = graph.connection_set().members().iter().all(|s| {
        let h = group.subgroup_generated(&[s]);
        let mut label = vec![usize::MAX; group.order()];
        for g in 0..group.order() {
            if label[g] == usize::MAX {
                for &t in h.as_slice() {
                    label[group.mul(g, t)] = g;
                }
            }
        }
        BlockSystem::from_labels(&label).is_ok_and(|b| b.is_invariant_under(ao.generators()))
    });
    checks.check(
        format!("{name}: left cosets of ⟨s⟩ are A°-blocks"),
        cosets_invariant,
        "",
    );
}

/// Every element of the identity stabilizer of `A°` on the complete graph
/// (or its generators, when there are too many) satisfies the inverter
/// statements.
pub fn inverters_suite(descriptor: &str, checks: &mut Checklist) -> Result<()> {
    let group = Arc::new(parse_group(descriptor)?);
    let complete = ColoredCayleyGraph::new(group.clone(), ConnectionSet::complete(&group))?;
    let stab = color_preserving_group(&complete).point_stabilizer(group.identity());
    let maps = if stab.order() <= INVERTER_ELEMENT_LIMIT {
        stab.elements()
    } else {
        stab.generators().to_vec()
    };
    let mut failures = Vec::new();
    let mut pairs = 0;
    for phi in &maps {
        let report = check_inverters_lemma(&group, phi)?;
        pairs += report.pairs_checked.len();
        failures.extend(report.violations);
        if !report.fixes_or_inverts_each {
            failures.push("a map neither fixes nor inverts some element".into());
        }
    }
    checks.check(
        format!("{descriptor}: inverter statements on the complete graph"),
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} maps, {pairs} pairs", maps.len())
        } else {
            failures.join("; ")
        },
    );
    Ok(())
}

/// On block systems formed by the orbits of their own kernel, a
/// semiregular kernel in `A°` equals the kernel in `G_L`.
pub fn bottom_semiregular_suite(name: &str, graph: &ColoredCayleyGraph, checks: &mut Checklist) -> Result<()> {
    let ao = color_preserving_group(graph);
    let mut tested = 0;
    let mut ok = true;
    for b in all_block_systems(&ao)? {
        let kernel = fixer(&ao, &b)?;
        if BlockSystem::from_blocks(graph.order(), &kernel.orbits()).ok() != Some(b.clone()) {
            continue;
        }
        if let Some(equal) = bottom_semiregular_check(graph, &ao, &b)? {
            tested += 1;
            ok &= equal;
        }
    }
    checks.check(
        format!("{name}: semiregular kernels come from G_L"),
        ok,
        format!("{tested} block systems with semiregular kernel"),
    );
    Ok(())
}

/// Products of CCA graphs of coprime orders are CCA, and decomposing a
/// product over its fibers gives back the factors.
pub fn product_suite(checks: &mut Checklist) -> Result<()> {
    let z7 = Arc::new(GroupTable::cyclic(7));
    let z7_graph = ColoredCayleyGraph::new(z7.clone(), ConnectionSet::new(&z7, z7.parse_set("1,6,2,5")?)?)?;
    let z3 = Arc::new(GroupTable::cyclic(3));
    let k3 = ColoredCayleyGraph::new(z3.clone(), ConnectionSet::complete(&z3))?;
    let pairs = [
        ("C5 □ K3", cycle_graph(5), k3.clone()),
        ("K3 □ C7", k3.clone(), cycle_graph(7)),
        ("C5 □ Cay(Z7, {±1, ±2})", cycle_graph(5), z7_graph),
    ];
    for (name, a, b) in pairs {
        let product = cartesian_product(&a, &b)?;
        let (va, vb, vp) = (cca_verdict(&a)?, cca_verdict(&b)?, cca_verdict(&product)?);
        if va.is_cca && vb.is_cca {
            checks.check(format!("{name}: CCA factors give a CCA product"), vp.is_cca, "");
        }
        let m = b.order();
        let fibers = BlockSystem::from_labels(&(0..product.order()).map(|v| v / m).collect::<Vec<_>>())?;
        let ao = color_preserving_group(&product);
        let result = maintool_decompose(&product, &ao, &fibers)?;
        let recovered = result.factors.as_ref().is_some_and(|f| {
            are_isomorphic(&f.factor1, &a, true).is_some() && are_isomorphic(&f.factor2, &b, true).is_some()
        });
        checks.check(
            format!("{name}: fiber decomposition recovers the factors"),
            recovered,
            "",
        );
    }
    Ok(())
}

/// All suites.
pub fn cmd_oracle_suite(seed: u64, jobs: usize) -> Result<Checklist> {
    let mut checks = white_oracle(seed, 20);
    checks.extend(brute_force_equivalence(jobs)?);
    checks.extend(two_closure_suite(seed)?);

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut fixtures = vec![("Γ_F21".to_string(), canonical_f21_graph())];
    for i in 0..6 {
        let group = medium_group(&mut rng);
        fixtures.push((
            format!("fixture {i} (order {})", group.order()),
            random_connected_graph(&mut rng, group, 1..=3, |_| true),
        ));
    }
    for (name, graph) in &fixtures {
        graph_invariants(name, graph, &mut checks);
    }
    for descriptor in ["Q8", "Q8xZ2", "F21", "D4"] {
        inverters_suite(descriptor, &mut checks)?;
    }
    bottom_semiregular_suite("Γ_F21", &canonical_f21_graph(), &mut checks)?;
    for (i, graph) in seeded_cca_graphs(seed, 3)?.iter().enumerate() {
        let n = graph.order();
        if n % 2 == 1 && (3..n).step_by(2).all(|p| n % (p * p) != 0) {
            bottom_semiregular_suite(&format!("CCA graph {i}"), graph, &mut checks)?;
        }
    }
    product_suite(&mut checks)?;
    Ok(checks)
}
