//! Affine maps, CCA verdicts for graphs and groups, the Hamiltonian 2-group
//! predicate, and the inverter checks on complete Cayley graphs.

use std::sync::Arc;

use serde::Serialize;

use crate::blocks::is_primitive;
use crate::cayley::{ColoredCayleyGraph, ConnectionSet};
use crate::enumerate::enumerate_connection_sets;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::perm::Perm;
use crate::permgroup::PermGroup;
use crate::search::color_preserving_group;

/// Largest group order accepted by [`is_hamiltonian_2group`].
pub const HAMILTONIAN_LIMIT: usize = 64;

/// True iff `x ↦ α(1)⁻¹·α(x)` is an automorphism of `group`, that is, `α`
/// lies in `G_L · Aut(G)`.
pub fn is_affine(alpha: &Perm, group: &GroupTable) -> bool {
    let n = group.order();
    if alpha.degree() != n {
        return false;
    }
    let shift = group.inv(alpha.apply(group.identity()));
    let beta: Vec<usize> = (0..n).map(|x| group.mul(shift, alpha.apply(x))).collect();
    (0..n).all(|x| (0..n).all(|y| beta[group.mul(x, y)] == group.mul(beta[x], beta[y])))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CcaNotes {
    /// `G_L` is normal in `A°`.
    pub gl_normal: bool,
    /// `A°` admits no nontrivial block system.
    pub ao_primitive: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CcaVerdict {
    pub is_cca: bool,
    pub ao_order: u64,
    /// A color-preserving automorphism that is not affine.
    #[serde(rename = "witness_images", skip_serializing_if = "Option::is_none")]
    pub witness: Option<Perm>,
    pub notes: CcaNotes,
}

/// Decides whether every color-preserving automorphism of the connected
/// graph `graph` is affine.
pub fn cca_verdict(graph: &ColoredCayleyGraph) -> Result<CcaVerdict> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let ao = color_preserving_group(graph);
    verdict_from_group(graph, &ao)
}

/// [`cca_verdict`] with `A°` supplied by the caller.
pub fn verdict_from_group(graph: &ColoredCayleyGraph, ao: &PermGroup) -> Result<CcaVerdict> {
    let group = graph.group();
    let gl = group.left_regular_group();
    let gl_normal = gl.is_normal_in(ao)?;
    // The normalizer of G_L in Sym(G) is exactly the affine group, so the
    // generators of A° are all affine iff G_L is normal in A°.
    let witness = ao.generators().iter().find(|g| !is_affine(g, group)).cloned();
    if gl_normal != witness.is_none() {
        return Err(Error::Inconsistent(format!(
            "normality test says {gl_normal} but a non-affine generator {} found",
            if witness.is_some() { "was" } else { "was not" }
        )));
    }
    if let Some(w) = &witness {
        if !graph.is_color_preserving(w) {
            return Err(Error::Inconsistent("witness does not preserve colors".into()));
        }
    }
    Ok(CcaVerdict {
        is_cca: gl_normal,
        ao_order: ao.order().try_into().expect("group order fits in u64"),
        witness,
        notes: CcaNotes {
            gl_normal,
            ao_primitive: is_primitive(ao)?,
        },
    })
}

/// Verdict for a group together with the failing connection sets (one per
/// `Aut(G)`-orbit, or every member of those orbits with `expand`).
#[derive(Clone, Debug)]
pub struct GroupVerdict {
    pub is_cca: bool,
    pub failing: Vec<ConnectionSet>,
}

/// Runs [`cca_verdict`] over every connected Cayley graph of `group` up to
/// automorphisms of `group`.
pub fn cca_group_verdict(group: &GroupTable, expand: bool) -> Result<GroupVerdict> {
    let shared = Arc::new(group.clone());
    let sets = enumerate_connection_sets(group, true, true)?;
    let mut failing_masks = Vec::new();
    let mut reps = Vec::new();
    for (mask, conn) in enumerate_connection_sets(group, true, true)? {
        let graph = ColoredCayleyGraph::new(shared.clone(), conn.clone())?;
        if !cca_verdict(&graph)?.is_cca {
            failing_masks.push(mask);
            reps.push(conn);
        }
    }
    let failing = if expand {
        failing_masks
            .iter()
            .flat_map(|&m| sets.orbit(m))
            .map(|m| {
                ConnectionSet::new(group, sets.pairs().elements(group.order(), m))
                    .expect("pair unions are valid connection sets")
            })
            .collect()
    } else {
        reps
    };
    Ok(GroupVerdict {
        is_cca: failing.is_empty(),
        failing,
    })
}

fn as_mask(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |m, &x| m | 1 << x)
}

fn mask_elements(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Every subgroup of `group` as a bitmask, found by closing the cyclic
/// subgroups under joins. Requires `|G| ≤ 64`.
pub fn all_subgroups(group: &GroupTable) -> Result<Vec<u64>> {
    let n = group.order();
    if n > HAMILTONIAN_LIMIT {
        return Err(Error::TooLarge {
            what: "group order for subgroup enumeration",
            size: n,
            limit: HAMILTONIAN_LIMIT,
        });
    }
    let mut subgroups: Vec<u64> = (0..n)
        .map(|g| as_mask(group.subgroup_generated(&[g]).as_slice()))
        .collect();
    subgroups.sort_unstable();
    subgroups.dedup();
    let cyclic = subgroups.clone();
    let mut frontier = subgroups.clone();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for &h in &frontier {
            for &c in &cyclic {
                if h & c == c {
                    continue;
                }
                let join = as_mask(group.subgroup_generated(&mask_elements(h | c)).as_slice());
                if subgroups.binary_search(&join).is_err() && !fresh.contains(&join) {
                    fresh.push(join);
                }
            }
        }
        subgroups.extend(&fresh);
        subgroups.sort_unstable();
        frontier = fresh;
    }
    Ok(subgroups)
}

/// A nonabelian 2-group all of whose subgroups are normal.
pub fn is_hamiltonian_2group(group: &GroupTable) -> Result<bool> {
    let n = group.order();
    if n > HAMILTONIAN_LIMIT {
        return Err(Error::TooLarge {
            what: "group order for subgroup enumeration",
            size: n,
            limit: HAMILTONIAN_LIMIT,
        });
    }
    if !n.is_power_of_two() || group.is_abelian() {
        return Ok(false);
    }
    for h in all_subgroups(group)? {
        let set = crate::group::ElementSet::new(n, mask_elements(h))?;
        if !group.is_normal(&set) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the inverter checks for one color-preserving `φ` of a
/// complete Cayley graph fixing the identity.
#[derive(Clone, Debug, Default, Serialize)]
pub struct InvertersReport {
    /// `φ(x) = x⁻¹` for every `x`.
    pub inverts_everything: bool,
    /// `φ(a) ∈ {a, a⁻¹}` for every `a`.
    pub fixes_or_inverts_each: bool,
    /// `(g, x)` pairs with `φ(g) = g`, `|g| > 2`, `φ(x) = x⁻¹ ≠ x`.
    pub pairs_checked: Vec<(usize, usize)>,
    /// Human-readable descriptions of failed assertions.
    pub violations: Vec<String>,
}

impl InvertersReport {
    pub fn passed(&self) -> bool {
        self.fixes_or_inverts_each && self.violations.is_empty()
    }
}

/// Checks that every `x` inverted by `φ` inverts every `g` fixed by `φ`, and
/// that such `x` have order 4 unless `φ` is global inversion.
pub fn check_inverters_lemma(group: &GroupTable, phi: &Perm) -> Result<InvertersReport> {
    let n = group.order();
    let complete = ColoredCayleyGraph::new(Arc::new(group.clone()), ConnectionSet::complete(group))?;
    if phi.degree() != n || !complete.is_color_preserving(phi) {
        return Err(Error::Precondition(
            "map is not a color-preserving automorphism of the complete Cayley graph".into(),
        ));
    }
    if !phi.fixes(group.identity()) {
        return Err(Error::Precondition("map does not fix the identity".into()));
    }
    let mut report = InvertersReport {
        inverts_everything: (0..n).all(|x| phi.apply(x) == group.inv(x)),
        fixes_or_inverts_each: (0..n).all(|x| phi.apply(x) == x || phi.apply(x) == group.inv(x)),
        ..Default::default()
    };
    let inverted: Vec<usize> = (0..n)
        .filter(|&x| phi.apply(x) == group.inv(x) && group.inv(x) != x)
        .collect();
    let fixed: Vec<usize> = (0..n)
        .filter(|&g| phi.apply(g) == g && group.element_order(g) > 2)
        .collect();
    for &x in &inverted {
        if !report.inverts_everything && group.element_order(x) != 4 {
            report.violations.push(format!(
                "{} is inverted but has order {}",
                group.label(x),
                group.element_order(x)
            ));
        }
        for &g in &fixed {
            report.pairs_checked.push((g, x));
            if group.conjugate(group.inv(x), g) != group.inv(g) {
                report
                    .violations
                    .push(format!("{} does not invert {}", group.label(x), group.label(g)));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(group: GroupTable, set: &str) -> ColoredCayleyGraph {
        let g = Arc::new(group);
        let s = g.parse_set(set).unwrap();
        ColoredCayleyGraph::new(g.clone(), ConnectionSet::new(&g, s).unwrap()).unwrap()
    }

    fn complete(group: GroupTable) -> ColoredCayleyGraph {
        let g = Arc::new(group);
        ColoredCayleyGraph::new(g.clone(), ConnectionSet::complete(&g)).unwrap()
    }

    fn inversion(group: &GroupTable) -> Perm {
        Perm::from_images((0..group.order()).map(|x| group.inv(x)).collect()).unwrap()
    }

    #[test]
    fn affine_examples() {
        let f21 = GroupTable::f21();
        for k in 0..21 {
            assert!(is_affine(&f21.left_translation(k), &f21));
        }
        let z9 = GroupTable::cyclic(9);
        assert!(is_affine(&inversion(&z9), &z9));
        let q8 = GroupTable::q8();
        assert!(!is_affine(&inversion(&q8), &q8));
        for a in f21.all_automorphisms() {
            assert!(is_affine(&a.compose(&f21.left_translation(5)), &f21));
        }
    }

    #[test]
    fn f21_graph_is_not_cca() {
        let gamma = graph(GroupTable::f21(), "a,a^2,ax,(ax)^-1");
        let v = cca_verdict(&gamma).unwrap();
        assert!(!v.is_cca);
        assert_eq!(v.ao_order, 168);
        let w = v.witness.unwrap();
        assert!(gamma.is_color_preserving(&w) && !is_affine(&w, gamma.group()));
        assert!(!v.notes.gl_normal);
    }

    #[test]
    fn small_verdicts() {
        let k3 = graph(GroupTable::cyclic(3), "1,2");
        let v = cca_verdict(&k3).unwrap();
        assert!(v.is_cca && v.witness.is_none());
        assert_eq!(v.ao_order, 6);
        let json = serde_json::to_value(&v).unwrap();
        assert!(json.get("witness_images").is_none());
        assert_eq!(json["notes"]["gl_normal"], true);

        let q = complete(GroupTable::q8());
        let v = cca_verdict(&q).unwrap();
        assert!(!v.is_cca);
        let inv = inversion(q.group());
        assert!(q.is_color_preserving(&inv) && !is_affine(&inv, q.group()));
        assert!(serde_json::to_value(&v).unwrap()["witness_images"].is_array());

        let disconnected = graph(GroupTable::f21(), "x,x^6");
        assert!(matches!(cca_verdict(&disconnected), Err(Error::Disconnected)));
    }

    #[test]
    fn group_verdicts() {
        assert!(cca_group_verdict(&GroupTable::cyclic(5), false).unwrap().is_cca);
        assert!(cca_group_verdict(&GroupTable::cyclic(7), false).unwrap().is_cca);
        let f21 = cca_group_verdict(&GroupTable::f21(), false).unwrap();
        assert!(!f21.is_cca);
        assert_eq!(f21.failing.len(), 1);
        assert!(!cca_group_verdict(&GroupTable::q8(), false).unwrap().failing.is_empty());
    }

    #[test]
    fn hamiltonian_recognition() {
        assert!(is_hamiltonian_2group(&GroupTable::q8()).unwrap());
        assert!(is_hamiltonian_2group(&GroupTable::hamiltonian_2group(1)).unwrap());
        assert!(is_hamiltonian_2group(&GroupTable::hamiltonian_2group(2)).unwrap());
        assert!(!is_hamiltonian_2group(&GroupTable::cyclic(8)).unwrap());
        assert!(!is_hamiltonian_2group(&GroupTable::dihedral(4)).unwrap());
        assert!(!is_hamiltonian_2group(&GroupTable::f21()).unwrap());
        assert!(!is_hamiltonian_2group(&GroupTable::elementary_abelian(2, 3)).unwrap());
        assert!(is_hamiltonian_2group(&GroupTable::cyclic(128)).is_err());
    }

    #[test]
    fn subgroup_counts() {
        // Q8: 1, <-1>, <i>, <j>, <k>, Q8.  D4: 10 subgroups.  Z2^3: 16.
        assert_eq!(all_subgroups(&GroupTable::q8()).unwrap().len(), 6);
        assert_eq!(all_subgroups(&GroupTable::dihedral(4)).unwrap().len(), 10);
        assert_eq!(all_subgroups(&GroupTable::elementary_abelian(2, 3)).unwrap().len(), 16);
        assert_eq!(all_subgroups(&GroupTable::symmetric(3)).unwrap().len(), 6);
    }

    #[test]
    fn inverters_on_quaternions() {
        let q = GroupTable::q8();
        let report = check_inverters_lemma(&q, &inversion(&q)).unwrap();
        assert!(report.inverts_everything && report.passed());
        assert!(report.pairs_checked.is_empty());

        let g = GroupTable::hamiltonian_2group(1);
        let k = complete(g.clone());
        let stab = color_preserving_group(&k).point_stabilizer(g.identity());
        for phi in stab.elements() {
            let r = check_inverters_lemma(&g, &phi).unwrap();
            assert!(r.passed(), "{:?}", r.violations);
        }
    }

    #[test]
    fn inverters_on_odd_order() {
        let g = GroupTable::f21();
        let k = complete(g.clone());
        let stab = color_preserving_group(&k).point_stabilizer(g.identity());
        for phi in stab.elements() {
            let r = check_inverters_lemma(&g, &phi).unwrap();
            assert!(r.fixes_or_inverts_each && r.passed());
        }
        let not_fixing = g.left_translation(1);
        assert!(matches!(
            check_inverters_lemma(&g, &not_fixing),
            Err(Error::Precondition(_))
        ));
        let bogus = Perm::from_cycles(21, &[&[1, 2, 3]]).unwrap();
        assert!(check_inverters_lemma(&g, &bogus).is_err());
    }
}
