//! Cartesian decomposition of colored Cayley graphs through stabilizer
//! classes inside the kernel of a block action.
//!
//! Given a group `A` of color-preserving automorphisms containing `G_L` and
//! an `A`-invariant partition `ℬ`, two vertices are equivalent when their
//! stabilizers in `fix_A(ℬ)` coincide. If every class of this relation meets
//! every block in exactly one vertex, the graph splits as `Γ1 □ Γ2` with
//! `G = G1 × G2`.

use std::sync::Arc;

use serde::Serialize;
use serde_json::json;

use crate::blocks::{all_block_systems, fixer, BlockSystem};
use crate::cayley::{cartesian_product, quotient_graph, ColoredCayleyGraph, ConnectionSet};
use crate::cca::{verdict_from_group, CcaVerdict};
use crate::error::{Error, Result};
use crate::group::{ElementSet, GroupTable};
use crate::perm::Perm;
use crate::permgroup::PermGroup;
use crate::search::{are_isomorphic, class_digraph, color_preserving_group, uncolored_aut_group};

/// Largest product order accepted by [`aut_product_check`].
pub const PRODUCT_CHECK_LIMIT: usize = 120;

fn check_invariant(a: &PermGroup, b: &BlockSystem) -> Result<()> {
    if b.degree() != a.degree() {
        return Err(Error::DegreeMismatch {
            expected: a.degree(),
            found: b.degree(),
        });
    }
    match a.generators().iter().position(|g| b.induced(g).is_none()) {
        Some(i) => Err(Error::BlockNotInvariant { generator: i }),
        None => Ok(()),
    }
}

/// The partition `ℰ` of points by equality of their stabilizers in
/// `fix_A(ℬ)`.
pub fn stabilizer_classes(a: &PermGroup, b: &BlockSystem) -> Result<BlockSystem> {
    check_invariant(a, b)?;
    let kernel = fixer(a, b)?;
    classes_in(&kernel)
}

fn classes_in(kernel: &PermGroup) -> Result<BlockSystem> {
    let n = kernel.degree();
    // Stab(p) = Stab(q) iff |Stab(p)| = |Stab(q)| and Stab(p) fixes q.
    let stabs: Vec<PermGroup> = (0..n).map(|p| kernel.point_stabilizer(p)).collect();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for p in 0..n {
        if label[p] != usize::MAX {
            continue;
        }
        label[p] = next;
        for q in p + 1..n {
            if label[q] == usize::MAX
                && stabs[p].order() == stabs[q].order()
                && stabs[p].generators().iter().all(|g| g.fixes(q))
            {
                label[q] = next;
            }
        }
        next += 1;
    }
    BlockSystem::from_labels(&label)
}

/// `Γ` with every edge inside a block of `ℬ` removed.
#[derive(Clone, Debug, Serialize)]
pub struct StrippedGraph {
    pub edges: Vec<(usize, usize, usize)>,
    pub components: Vec<Vec<usize>>,
}

pub fn strip_block_edges(graph: &ColoredCayleyGraph, b: &BlockSystem) -> StrippedGraph {
    let n = graph.order();
    let edges: Vec<(usize, usize, usize)> = graph
        .edges()
        .into_iter()
        .filter(|&(u, v, _)| b.block_of(u) != b.block_of(v))
        .collect();
    let mut uf = crate::permgroup::UnionFind::new(n);
    for &(u, v, _) in &edges {
        uf.union(u, v);
    }
    StrippedGraph {
        edges,
        components: uf.classes(),
    }
}

/// A class of `ℰ` and a block of `ℬ` whose intersection is not a single
/// vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FailingPair {
    pub class: usize,
    pub block: usize,
    pub intersection: usize,
}

/// The two factors recovered by a successful decomposition.
#[derive(Clone, Debug)]
pub struct Factors {
    /// `Cay(G1, S1)` on the subgroup table of `G1`.
    pub factor1: ColoredCayleyGraph,
    /// `Cay(G2, S2)`; `G2` is the block of `ℬ` containing the identity.
    pub factor2: ColoredCayleyGraph,
    pub g1: ElementSet,
    pub g2: ElementSet,
    pub s1: ElementSet,
    pub s2: ElementSet,
    /// Embeddings of the factor groups into `G`.
    pub embed1: Vec<usize>,
    pub embed2: Vec<usize>,
    /// `g = g1·g2 ↦ index(g1)·|G2| + index(g2)`, an isomorphism onto
    /// `factor1 □ factor2`.
    pub iso: Perm,
}

#[derive(Clone, Debug)]
pub struct DecompositionResult {
    pub success: bool,
    pub blocks: BlockSystem,
    pub classes: BlockSystem,
    pub failing_pair: Option<FailingPair>,
    /// The stabilizer in `fix_A(ℬ)` of the identity fixes exactly one point
    /// of every block.
    pub stabilizer_meets_blocks_once: bool,
    pub factors: Option<Factors>,
}

impl DecompositionResult {
    /// Whether the partition-intersection condition and the
    /// fixed-point phrasing of the same hypothesis gave the same answer.
    pub fn phrasings_agree(&self) -> bool {
        self.failing_pair.is_none() == self.stabilizer_meets_blocks_once
    }

    pub fn to_json(&self, group: &GroupTable) -> serde_json::Value {
        let labels = |set: &ElementSet| -> Vec<String> { set.iter().map(|x| group.label(x).to_string()).collect() };
        let factors = self.factors.as_ref().map(|f| {
            json!({
                "factor1": { "order": f.g1.len(), "connection_set": f.s1.as_slice(), "labels": labels(&f.s1) },
                "factor2": { "order": f.g2.len(), "connection_set": f.s2.as_slice(), "labels": labels(&f.s2) },
                "g1": f.g1.as_slice(),
                "g2": f.g2.as_slice(),
                "iso": f.iso.images(),
            })
        });
        json!({
            "success": self.success,
            "blocks": self.blocks.block_index(),
            "classes": self.classes.block_index(),
            "failing_pair": self.failing_pair,
            "stabilizer_meets_blocks_once": self.stabilizer_meets_blocks_once,
            "phrasings_agree": self.phrasings_agree(),
            "factors": factors,
        })
    }
}

/// Checks the hypotheses of the decomposition and, when every class of `ℰ`
/// meets every block of `ℬ` once, extracts the factors and verifies them.
pub fn maintool_decompose(graph: &ColoredCayleyGraph, a: &PermGroup, b: &BlockSystem) -> Result<DecompositionResult> {
    let group = graph.group();
    let n = group.order();
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder(n));
    }
    if a.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: a.degree(),
        });
    }
    if !a.is_transitive() {
        return Err(Error::NotTransitive);
    }
    check_invariant(a, b)?;
    if let Some(i) = a.generators().iter().position(|g| !graph.is_color_preserving(g)) {
        return Err(Error::Precondition(format!(
            "generator {i} of A does not preserve colors"
        )));
    }
    if (0..n).any(|k| !a.contains(&group.left_translation(k))) {
        return Err(Error::Precondition("A does not contain every left translation".into()));
    }

    let kernel = fixer(a, b)?;
    let classes = classes_in(&kernel)?;
    let failing_pair = first_bad_intersection(&classes, b);
    let stab = kernel.point_stabilizer(group.identity());
    let fixed: Vec<usize> = (0..n)
        .filter(|&p| stab.generators().iter().all(|g| g.fixes(p)))
        .collect();
    let stabilizer_meets_blocks_once =
        (0..b.num_blocks()).all(|k| fixed.iter().filter(|&&p| b.block_of(p) == k).count() == 1);

    let mut result = DecompositionResult {
        success: false,
        blocks: b.clone(),
        classes,
        failing_pair,
        stabilizer_meets_blocks_once,
        factors: None,
    };
    if failing_pair.is_none() {
        result.factors = Some(extract_factors(graph, b, &result.classes)?);
        result.success = true;
    }
    Ok(result)
}

fn first_bad_intersection(classes: &BlockSystem, b: &BlockSystem) -> Option<FailingPair> {
    let mut counts = vec![0usize; classes.num_blocks() * b.num_blocks()];
    for p in 0..b.degree() {
        counts[classes.block_of(p) * b.num_blocks() + b.block_of(p)] += 1;
    }
    counts.iter().position(|&c| c != 1).map(|i| FailingPair {
        class: i / b.num_blocks(),
        block: i % b.num_blocks(),
        intersection: counts[i],
    })
}

fn extract_factors(graph: &ColoredCayleyGraph, b: &BlockSystem, classes: &BlockSystem) -> Result<Factors> {
    let group = graph.group();
    let n = group.order();
    let id = group.identity();
    let b0 = b.block_of(id);
    let s = graph.connection_set().members();
    let s1 = ElementSet::new(n, s.iter().filter(|&x| b.block_of(x) != b0))?;
    let s2 = ElementSet::new(n, s.iter().filter(|&x| b.block_of(x) == b0))?;
    let g1 = group.subgroup_generated(s1.as_slice());
    let g2 = group.subgroup_generated(s2.as_slice());

    for x in s1.iter() {
        for y in s2.iter() {
            if !group.commute(x, y) {
                return Err(Error::Inconsistent(format!(
                    "{} and {} do not commute",
                    group.label(x),
                    group.label(y)
                )));
            }
        }
    }
    if g1.iter().any(|x| x != id && g2.contains(x)) || g1.len() * g2.len() != n {
        return Err(Error::Inconsistent(format!(
            "<S1> (order {}) and <S2> (order {}) do not form a direct product",
            g1.len(),
            g2.len()
        )));
    }

    let (t1, embed1) = group.subgroup_table(&g1)?;
    let (t2, embed2) = group.subgroup_table(&g2)?;
    let pull = |set: &ElementSet, embed: &[usize], t: &GroupTable| -> Result<ConnectionSet> {
        let idx = set.iter().map(|x| {
            embed
                .binary_search(&x)
                .expect("connection element lies in its subgroup")
        });
        ConnectionSet::new(t, ElementSet::new(t.order(), idx)?)
    };
    let c1 = pull(&s1, &embed1, &t1)?;
    let c2 = pull(&s2, &embed2, &t2)?;
    let factor1 = ColoredCayleyGraph::new(Arc::new(t1), c1)?;
    let factor2 = ColoredCayleyGraph::new(Arc::new(t2), c2)?;
    let product = cartesian_product(&factor1, &factor2)?;

    let k2 = embed2.len();
    let mut images = vec![usize::MAX; n];
    for (i, &x) in embed1.iter().enumerate() {
        for (j, &y) in embed2.iter().enumerate() {
            let g = group.mul(x, y);
            if images[g] != usize::MAX {
                return Err(Error::Inconsistent("G1·G2 does not cover G".into()));
            }
            images[g] = i * k2 + j;
            // δ(g) = (E_g, B_g) is read off the coordinates: the block of g
            // is that of g1, the class of g is that of g2.
            if b.block_of(g) != b.block_of(x) || classes.block_of(g) != classes.block_of(y) {
                return Err(Error::Inconsistent(format!(
                    "coordinates of {} disagree with its class and block",
                    group.label(g)
                )));
            }
        }
    }
    let iso = Perm::from_images(images)?;
    if !class_digraph(graph).is_isomorphism_up_to_colors(&class_digraph(&product), &iso) {
        return Err(Error::Inconsistent(
            "decomposition map is not a color-preserving isomorphism".into(),
        ));
    }
    Ok(Factors {
        factor1,
        factor2,
        g1,
        g2,
        s1,
        s2,
        embed1,
        embed2,
        iso,
    })
}

fn is_odd_square_free(n: usize) -> bool {
    n % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|p| p * p <= n)
            .all(|p| !n.is_multiple_of(p * p))
}

/// `Cay(F21, {a^±1, (ax)^±1})`.
pub fn canonical_f21_graph() -> ColoredCayleyGraph {
    let g = Arc::new(GroupTable::f21());
    let s = g.parse_set("a,a^2,ax,(ax)^-1").expect("labels of F21");
    ColoredCayleyGraph::new(g.clone(), ConnectionSet::new(&g, s).expect("inverse-closed")).expect("valid graph")
}

/// Result of [`product_structure_verdict`].
#[derive(Clone, Debug)]
pub struct ProductStructure {
    pub verdict: CcaVerdict,
    pub decomposition: DecompositionResult,
    /// The factor of order `n/21`, and its CCA verdict when it has at least
    /// one vertex and is connected.
    pub other_factor: ColoredCayleyGraph,
    pub other_factor_is_cca: Option<bool>,
    /// The factor isomorphic to the canonical graph of `F21`.
    pub f21_factor: ColoredCayleyGraph,
    /// Subgroup of `G` carrying the other factor.
    pub other_subgroup: ElementSet,
    /// Subgroup of `G` carrying the `F21` factor.
    pub f21_subgroup: ElementSet,
}

/// For a connected non-CCA graph of odd square-free order, finds a block
/// system of `A°` that splits off a factor isomorphic to the canonical
/// `F21` graph. Candidates are tried in lexicographic order of their
/// `block_of` arrays.
pub fn product_structure_verdict(graph: &ColoredCayleyGraph) -> Result<Option<ProductStructure>> {
    let n = graph.order();
    if !is_odd_square_free(n) {
        return Err(Error::NotOddSquareFree(n));
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let ao = color_preserving_group(graph);
    let verdict = verdict_from_group(graph, &ao)?;
    if verdict.is_cca {
        return Err(Error::GraphIsCca);
    }
    if !n.is_multiple_of(21) {
        return Ok(None);
    }
    let canonical = canonical_f21_graph();
    for b in all_block_systems(&ao)? {
        let decomposition = maintool_decompose(graph, &ao, &b)?;
        let Some(f) = &decomposition.factors else { continue };
        let pick = if f.g2.len() == 21 && are_isomorphic(&f.factor2, &canonical, false).is_some() {
            Some((f.factor1.clone(), f.g1.clone(), f.factor2.clone(), f.g2.clone()))
        } else if f.g1.len() == 21 && are_isomorphic(&f.factor1, &canonical, false).is_some() {
            Some((f.factor2.clone(), f.g2.clone(), f.factor1.clone(), f.g1.clone()))
        } else {
            None
        };
        if let Some((other, other_g, f21, f21_g)) = pick {
            let other_factor_is_cca = if other.order() > 1 && other.is_connected() {
                Some(crate::cca::cca_verdict(&other)?.is_cca)
            } else {
                None
            };
            return Ok(Some(ProductStructure {
                verdict,
                decomposition,
                other_factor: other,
                other_factor_is_cca,
                f21_factor: f21,
                other_subgroup: other_g,
                f21_subgroup: f21_g,
            }));
        }
    }
    Ok(None)
}

/// Orders compared by [`aut_product_check`].
#[derive(Clone, Debug, Serialize)]
pub struct ProductCheck {
    pub product_aut: u128,
    pub factor_aut: (u128, u128),
    pub product_ao: u128,
    pub factor_ao: (u128, u128),
    /// Every factor generator, acting on its own coordinate, is an
    /// automorphism of the product (and color-preserving for `A°`).
    pub embedded_generators_belong: bool,
}

impl ProductCheck {
    pub fn aut_is_product(&self) -> bool {
        self.embedded_generators_belong && self.product_aut == self.factor_aut.0 * self.factor_aut.1
    }

    pub fn ao_is_product(&self) -> bool {
        self.embedded_generators_belong && self.product_ao == self.factor_ao.0 * self.factor_ao.1
    }
}

/// Compares `Aut(Γ1 □ Γ2)` with `Aut(Γ1) × Aut(Γ2)`, uncolored and
/// color-preserving.
pub fn aut_product_check(g1: &ColoredCayleyGraph, g2: &ColoredCayleyGraph) -> Result<ProductCheck> {
    let size = g1.order() * g2.order();
    if size > PRODUCT_CHECK_LIMIT {
        return Err(Error::TooLarge {
            what: "product order",
            size,
            limit: PRODUCT_CHECK_LIMIT,
        });
    }
    let product = cartesian_product(g1, g2)?;
    let (aut1, aut2, aut) = (
        uncolored_aut_group(g1),
        uncolored_aut_group(g2),
        uncolored_aut_group(&product),
    );
    let (ao1, ao2, ao) = (
        color_preserving_group(g1),
        color_preserving_group(g2),
        color_preserving_group(&product),
    );
    let m = g2.order();
    let lift1 = |p: &Perm| Perm::from_images((0..size).map(|v| p.apply(v / m) * m + v % m).collect());
    let lift2 = |p: &Perm| Perm::from_images((0..size).map(|v| (v / m) * m + p.apply(v % m)).collect());
    let mut ok = true;
    for p in aut1.generators() {
        ok &= aut.contains(&lift1(p)?);
    }
    for p in aut2.generators() {
        ok &= aut.contains(&lift2(p)?);
    }
    for p in ao1.generators() {
        ok &= ao.contains(&lift1(p)?);
    }
    for p in ao2.generators() {
        ok &= ao.contains(&lift2(p)?);
    }
    Ok(ProductCheck {
        product_aut: aut.order(),
        factor_aut: (aut1.order(), aut2.order()),
        product_ao: ao.order(),
        factor_ao: (ao1.order(), ao2.order()),
        embedded_generators_belong: ok,
    })
}

/// For each generator `α` of `a`, the permutation induced on the cosets of
/// the normal subgroup `normal` is a color-preserving automorphism of
/// `Cay(G/N, S/N)`. Returns the number of generators checked.
pub fn quotient_lemma_check(graph: &ColoredCayleyGraph, a: &PermGroup, normal: &ElementSet) -> Result<usize> {
    let (quotient, coset) = quotient_graph(graph, normal)?;
    let b = BlockSystem::from_labels(&coset)?;
    check_invariant(a, &b)?;
    for (i, alpha) in a.generators().iter().enumerate() {
        let mut images = vec![usize::MAX; quotient.order()];
        for g in 0..graph.order() {
            let (from, to) = (coset[g], coset[alpha.apply(g)]);
            if images[from] != usize::MAX && images[from] != to {
                return Err(Error::BlockNotInvariant { generator: i });
            }
            images[from] = to;
        }
        let induced = Perm::from_images(images)?;
        if !quotient.is_color_preserving(&induced) {
            return Err(Error::Inconsistent(format!(
                "generator {i} does not induce a color-preserving map of the quotient"
            )));
        }
    }
    Ok(a.generators().len())
}

/// When `fix_A(ℬ)` is semiregular, compares it with `fix_{G_L}(ℬ)`;
/// `None` when it is not semiregular.
pub fn bottom_semiregular_check(graph: &ColoredCayleyGraph, a: &PermGroup, b: &BlockSystem) -> Result<Option<bool>> {
    let kernel = fixer(a, b)?;
    if !kernel.is_semiregular() {
        return Ok(None);
    }
    let gl = graph.group().left_regular_group();
    let gl_kernel = fixer(&gl, b)?;
    Ok(Some(kernel.same_group(&gl_kernel)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle5() -> ColoredCayleyGraph {
        let z5 = Arc::new(GroupTable::cyclic(5));
        ColoredCayleyGraph::new(z5.clone(), ConnectionSet::symmetric_closure(&z5, &[1]).unwrap()).unwrap()
    }

    #[test]
    fn trivial_kernel_gives_one_class() {
        let gamma = canonical_f21_graph();
        let gl = gamma.group().left_regular_group();
        let classes = stabilizer_classes(&gl, &BlockSystem::singletons(21)).unwrap();
        assert_eq!(classes.num_blocks(), 1);
    }

    #[test]
    fn stripping_everything() {
        let gamma = canonical_f21_graph();
        let stripped = strip_block_edges(&gamma, &BlockSystem::whole(21));
        assert!(stripped.edges.is_empty());
        assert_eq!(stripped.components.len(), 21);
    }

    #[test]
    fn f21_graph_does_not_decompose_over_sylow7_cosets() {
        let gamma = canonical_f21_graph();
        let g = gamma.group();
        let x = g.parse_element("x").unwrap();
        let labels: Vec<usize> = (0..21).map(|v| v % 3).collect();
        let b = BlockSystem::from_labels(&labels).unwrap();
        assert_eq!(b.blocks()[0], g.subgroup_generated(&[x]).as_slice());
        let gl = g.left_regular_group();
        let r = maintool_decompose(&gamma, &gl, &b).unwrap();
        assert!(!r.success);
        assert_eq!(r.failing_pair.unwrap().intersection, 7);
        assert!(r.phrasings_agree());
    }

    #[test]
    fn even_order_rejected() {
        let z4 = Arc::new(GroupTable::cyclic(4));
        let c4 = ColoredCayleyGraph::new(z4.clone(), ConnectionSet::symmetric_closure(&z4, &[1]).unwrap()).unwrap();
        let gl = z4.left_regular_group();
        assert!(matches!(
            maintool_decompose(&c4, &gl, &BlockSystem::whole(4)),
            Err(Error::EvenOrder(4))
        ));
    }

    #[test]
    fn round_trip_small_product() {
        let z3 = Arc::new(GroupTable::cyclic(3));
        let k3 = ColoredCayleyGraph::new(z3.clone(), ConnectionSet::complete(&z3)).unwrap();
        let p = cartesian_product(&k3, &cycle5()).unwrap();
        let ao = color_preserving_group(&p);
        // fibers of the Z5 factor: blocks {(i, j) : i fixed}
        let labels: Vec<usize> = (0..15).map(|v| v / 5).collect();
        let b = BlockSystem::from_labels(&labels).unwrap();
        let r = maintool_decompose(&p, &ao, &b).unwrap();
        assert!(r.success, "{:?}", r.failing_pair);
        let f = r.factors.unwrap();
        assert!(are_isomorphic(&f.factor1, &k3, true).is_some());
        assert!(are_isomorphic(&f.factor2, &cycle5(), true).is_some());
        assert_eq!((f.g1.len(), f.g2.len()), (3, 5));
    }

    #[test]
    fn f21_alone_splits_off_trivial_factor() {
        let gamma = canonical_f21_graph();
        let ps = product_structure_verdict(&gamma).unwrap().unwrap();
        assert_eq!(ps.other_factor.order(), 1);
        assert_eq!(ps.f21_factor.order(), 21);
        assert_eq!(ps.decomposition.blocks.num_blocks(), 1);
    }

    #[test]
    fn cca_input_rejected() {
        let z3 = Arc::new(GroupTable::cyclic(3));
        let k3 = ColoredCayleyGraph::new(z3.clone(), ConnectionSet::complete(&z3)).unwrap();
        assert!(matches!(product_structure_verdict(&k3), Err(Error::GraphIsCca)));
        let z9 = Arc::new(GroupTable::cyclic(9));
        let c9 = ColoredCayleyGraph::new(z9.clone(), ConnectionSet::complete(&z9)).unwrap();
        assert!(matches!(
            product_structure_verdict(&c9),
            Err(Error::NotOddSquareFree(9))
        ));
    }

    #[test]
    fn product_check_small() {
        let z1 = Arc::new(GroupTable::cyclic(1));
        let k1 = ColoredCayleyGraph::new(z1.clone(), ConnectionSet::complete(&z1)).unwrap();
        let gamma = canonical_f21_graph();
        let r = aut_product_check(&k1, &gamma).unwrap();
        assert!(r.aut_is_product() && r.ao_is_product());
        assert_eq!(r.product_aut, 336);
        let z3 = Arc::new(GroupTable::cyclic(3));
        let k3 = ColoredCayleyGraph::new(z3.clone(), ConnectionSet::complete(&z3)).unwrap();
        let r = aut_product_check(&k3, &cycle5()).unwrap();
        assert!(r.aut_is_product() && r.ao_is_product());
        assert_eq!(r.product_aut, 60);
        assert!(aut_product_check(&gamma, &cycle5()).is_ok());
        assert!(aut_product_check(&gamma, &gamma).is_err());
    }

    #[test]
    fn quotient_lemma_on_f21() {
        let gamma = canonical_f21_graph();
        let g = gamma.group();
        let n = g.subgroup_generated(&[g.parse_element("x").unwrap()]);
        // A° of the F21 graph does not preserve the Sylow-7 cosets
        let ao = color_preserving_group(&gamma);
        assert!(quotient_lemma_check(&gamma, &ao, &n).is_err());
        assert_eq!(quotient_lemma_check(&gamma, &g.left_regular_group(), &n).unwrap(), 2);
    }

    #[test]
    fn odd_square_free() {
        let yes: Vec<usize> = (1..120).filter(|&n| is_odd_square_free(n)).take(8).collect();
        assert_eq!(yes, vec![1, 3, 5, 7, 11, 13, 15, 17]);
        assert!(is_odd_square_free(105) && !is_odd_square_free(45));
    }
}
