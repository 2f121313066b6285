//! `Cay(Z_m, {±1}) □ Γ_F21` and its recovered product structure.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::fixtures::random_connected_graph;
use super::report::Checklist;
use crate::blocks::BlockSystem;
use crate::cartesian::{
    aut_product_check, canonical_f21_graph, maintool_decompose, product_structure_verdict, quotient_lemma_check,
    strip_block_edges, DecompositionResult, Factors,
};
use crate::cayley::{cartesian_product, ColoredCayleyGraph, ConnectionSet};
use crate::cca::cca_verdict;
use crate::error::{Error, Result};
use crate::group::{ElementSet, GroupTable};
use crate::permgroup::PermGroup;
use crate::search::{color_preserving_group, uncolored_aut_group};

/// Largest product order accepted by [`cmd_product_demo`].
pub const PRODUCT_DEMO_LIMIT: usize = 105;

/// Verdict on one seeded random Cayley graph of `Z_m × F21`.
#[derive(Clone, Debug, Serialize)]
pub struct RandomProductRow {
    pub set: Vec<String>,
    pub is_cca: bool,
    pub ao_order: u64,
    /// Whether a product structure was found, for non-CCA graphs.
    pub decomposes: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductDemoReport {
    pub m: usize,
    pub seed: u64,
    pub order: usize,
    pub is_cca: bool,
    pub ao_order: u64,
    pub aut_order: u64,
    pub factor_ao_orders: (u64, u64),
    pub g1_order: usize,
    pub decomposition: serde_json::Value,
    pub random: Vec<RandomProductRow>,
    pub checks: Checklist,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn is_square_free(n: usize) -> bool {
    (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p * p))
}

/// Rejects `m` unless it is odd, square-free, coprime to 21 and
/// `21·m ≤ 105`.
pub fn validate_m(m: usize) -> Result<()> {
    let why = if m == 0 || m.is_multiple_of(2) {
        "m must be odd"
    } else if !is_square_free(m) {
        "m must be square-free"
    } else if gcd(m, 21) != 1 {
        "m must be coprime to 21"
    } else if 21 * m > PRODUCT_DEMO_LIMIT {
        "21·m must not exceed 105"
    } else {
        return Ok(());
    };
    Err(Error::Precondition(format!("{why} (got m = {m})")))
}

/// `Cay(Z_m, {±1})`; for `m ≤ 2` this has no colors of order above 2.
pub fn cycle_graph(m: usize) -> ColoredCayleyGraph {
    let z = Arc::new(GroupTable::cyclic(m));
    let conn = if m == 1 {
        ConnectionSet::new(&z, ElementSet::empty()).expect("empty set")
    } else {
        ConnectionSet::symmetric_closure(&z, &[1]).expect("1 is not the identity")
    };
    ColoredCayleyGraph::new(z, conn).expect("inverse-closed")
}

/// `G = G1 × G2` internally: orders multiply, the intersection is trivial
/// and the subgroups commute elementwise.
pub fn is_internal_direct_product(group: &GroupTable, g1: &ElementSet, g2: &ElementSet) -> bool {
    g1.len() * g2.len() == group.order()
        && g1.iter().filter(|&x| g2.contains(x)).count() == 1
        && g1.iter().all(|x| g2.iter().all(|y| group.commute(x, y)))
}

/// Checks the structural properties of a successful decomposition.
pub fn maintool_properties(
    graph: &ColoredCayleyGraph,
    a: &PermGroup,
    result: &DecompositionResult,
    checks: &mut Checklist,
    prefix: &str,
) {
    let group = graph.group();
    checks.check(
        format!("{prefix}ℰ is A-invariant"),
        result.classes.is_invariant_under(a.generators()),
        format!("{} classes", result.classes.num_blocks()),
    );
    let stripped = strip_block_edges(graph, &result.blocks);
    let inside = stripped.components.iter().all(|c| {
        let k = result.classes.block_of(c[0]);
        c.iter().all(|&v| result.classes.block_of(v) == k)
    });
    checks.check(
        format!("{prefix}stripped components lie in ℰ-classes"),
        inside,
        format!("{} components", stripped.components.len()),
    );
    let once = result.classes.blocks().iter().all(|e| {
        result
            .blocks
            .blocks()
            .iter()
            .all(|b| e.iter().filter(|v| b.contains(v)).count() == 1)
    });
    checks.check(format!("{prefix}|E ∩ B| = 1 for all classes and blocks"), once, "");
    checks.check(
        format!("{prefix}intersection and stabilizer phrasings agree"),
        result.phrasings_agree(),
        "",
    );
    if let Some(Factors { s1, s2, .. }) = &result.factors {
        let commute = s1.iter().all(|x| s2.iter().all(|y| group.commute(x, y)));
        checks.check(
            format!("{prefix}S1 and S2 commute"),
            commute,
            format!("|S1|={} |S2|={}", s1.len(), s2.len()),
        );
    }
}

/// Builds `Cay(Z_m, {±1}) □ Γ_F21`, recovers its factors and runs the
/// decomposition checks, then samples three seeded connected graphs of
/// `Z_m × F21`.
pub fn cmd_product_demo(m: usize, seed: u64) -> Result<ProductDemoReport> {
    validate_m(m)?;
    let mut checks = Checklist::new();
    let cycle = cycle_graph(m);
    let gamma = canonical_f21_graph();
    let graph = cartesian_product(&cycle, &gamma)?;
    let n = graph.order();
    let group = graph.group();

    let ao = color_preserving_group(&graph);
    let aut = uncolored_aut_group(&graph);
    let verdict = crate::cca::verdict_from_group(&graph, &ao)?;
    checks.check(
        "product graph is not CCA",
        !verdict.is_cca,
        format!("|A°| = {}", verdict.ao_order),
    );
    let factor_ao = (
        color_preserving_group(&cycle).order(),
        color_preserving_group(&gamma).order(),
    );
    checks.equal("|A°| = |A°(C_m)|·|A°(Γ_F21)|", ao.order(), factor_ao.0 * factor_ao.1);
    if m == 5 {
        checks.equal("|A°| at m = 5", ao.order(), 1680);
    }
    let product_check = aut_product_check(&cycle, &gamma)?;
    checks.check(
        "factor automorphisms embed in the product",
        product_check.embedded_generators_belong,
        "",
    );
    checks.check(
        "|Aut| = |Aut(C_m)|·|Aut(Γ_F21)|",
        product_check.aut_is_product() && product_check.product_aut == aut.order(),
        format!(
            "{} = {}·{}",
            product_check.product_aut, product_check.factor_aut.0, product_check.factor_aut.1
        ),
    );

    let structure = product_structure_verdict(&graph)?;
    checks.check("product structure found", structure.is_some(), "");
    let mut g1_order = 0;
    let mut decomposition = serde_json::Value::Null;
    if let Some(ps) = &structure {
        g1_order = ps.other_subgroup.len();
        decomposition = ps.decomposition.to_json(group);
        checks.equal("|G1|", g1_order, m);
        checks.check(
            "G = G1 × F21",
            is_internal_direct_product(group, &ps.other_subgroup, &ps.f21_subgroup),
            "",
        );
        checks.check(
            "recovered F21 factor is isomorphic to Γ_F21",
            crate::search::are_isomorphic(&ps.f21_factor, &gamma, false).is_some(),
            "",
        );
        maintool_properties(&graph, &ao, &ps.decomposition, &mut checks, "");

        // Blocks are the cosets of the Z_m factor.
        let labels: Vec<usize> = (0..n).map(|v| v % 21).collect();
        let zm_blocks = BlockSystem::from_labels(&labels)?;
        let zm = ElementSet::new(n, (0..m).map(|i| i * 21 + gamma.group().identity()))?;
        match quotient_lemma_check(&graph, &ao, &zm) {
            Ok(k) => checks.check(
                "A° induces color-preserving maps on G/Z_m",
                true,
                format!("{k} generators"),
            ),
            Err(e) => checks.check("A° induces color-preserving maps on G/Z_m", false, e.to_string()),
        };
        let direct = maintool_decompose(&graph, &ao, &zm_blocks)?;
        checks.check("Z_m-coset blocks also decompose", direct.success, "");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shared = graph.group_arc().clone();
    let f21_identity = gamma.group().identity();
    let mixed = |set: &ElementSet| m == 1 || set.iter().any(|x| x / 21 != 0 && x % 21 != f21_identity);
    let mut random = Vec::new();
    for i in 0..3 {
        let sample = random_connected_graph(&mut rng, shared.clone(), 2..=4, mixed);
        let v = cca_verdict(&sample)?;
        let decomposes = if v.is_cca {
            None
        } else {
            Some(product_structure_verdict(&sample)?.is_some())
        };
        if let Some(d) = decomposes {
            checks.check(format!("random graph {i}: non-CCA implies product structure"), d, "");
        }
        random.push(RandomProductRow {
            set: sample.connection_set().labels(group),
            is_cca: v.is_cca,
            ao_order: v.ao_order,
            decomposes,
        });
    }

    Ok(ProductDemoReport {
        m,
        seed,
        order: n,
        is_cca: verdict.is_cca,
        ao_order: verdict.ao_order,
        aut_order: aut.order() as u64,
        factor_ao_orders: (factor_ao.0 as u64, factor_ao.1 as u64),
        g1_order,
        decomposition,
        random,
        checks,
    })
}
