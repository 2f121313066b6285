//! Exhaustive census of the connected Cayley graphs of a small group.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::report::Checklist;
use crate::cartesian::canonical_f21_graph;
use crate::cayley::ColoredCayleyGraph;
use crate::cca::{verdict_from_group, CcaVerdict};
use crate::enumerate::{enumerate_connection_sets, InversePairs};
use crate::error::Result;
use crate::group::GroupTable;
use crate::search::{are_isomorphic, color_preserving_group, plain_digraph, uncolored_aut_group};

/// One `Aut(G)`-orbit of connected connection sets.
#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub mask: u32,
    pub set: Vec<String>,
    pub elements: Vec<usize>,
    pub orbit_size: usize,
    pub valency: usize,
    pub verdict: CcaVerdict,
    /// Isomorphism class among the non-CCA graphs.
    pub iso_class: Option<usize>,
}

/// An isomorphism class of connected non-CCA graphs.
#[derive(Clone, Debug, Serialize)]
pub struct NonCcaClass {
    pub class: usize,
    pub representative: Vec<String>,
    pub representative_mask: u32,
    pub valency: usize,
    pub ao_order: u64,
    pub aut_order: u64,
    pub suborbits: Vec<usize>,
    /// `|Aut(G) ∩ Aut(Γ)|`.
    pub affine_slice: usize,
    pub orbits_in_class: usize,
    /// Connection sets (of any verdict) whose graph is isomorphic to the
    /// representative.
    pub sets_in_class: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusSummary {
    pub group: String,
    pub group_order: usize,
    pub aut_group_order: usize,
    pub inverse_pairs: usize,
    pub total_sets: usize,
    pub connected_sets: usize,
    pub orbits: usize,
    pub non_cca_orbits: usize,
    pub non_cca_sets: usize,
    pub classes: Vec<NonCcaClass>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub rows: Vec<CensusRow>,
    pub summary: CensusSummary,
    /// Internal consistency checks made while building the report.
    pub checks: Checklist,
}

impl CensusReport {
    /// One JSON object per row, then the summary.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&serde_json::to_string(row).expect("row serializes"));
            out.push('\n');
        }
        let summary = serde_json::json!({ "summary": self.summary });
        out.push_str(&serde_json::to_string(&summary).expect("summary serializes"));
        out.push('\n');
        out
    }

    /// A fixed-width table of the summary.
    pub fn summary_table(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "group {} (order {}, |Aut| {})\n  connection sets {}  connected {}  Aut-orbits {}  non-CCA orbits {}  non-CCA sets {}\n",
            s.group, s.group_order, s.aut_group_order, s.total_sets, s.connected_sets, s.orbits, s.non_cca_orbits, s.non_cca_sets
        );
        out.push_str("  class  valency  |A°|   |Aut|  suborbits        |Aut(G)∩Aut(Γ)|  sets  representative\n");
        for c in &s.classes {
            out.push_str(&format!(
                "  {:<5}  {:<7}  {:<5}  {:<5}  {:<15}  {:<15}  {:<4}  {}\n",
                c.class,
                c.valency,
                c.ao_order,
                c.aut_order,
                format!("{:?}", c.suborbits),
                c.affine_slice,
                c.sets_in_class,
                c.representative.join(",")
            ));
        }
        out
    }
}

fn thread_pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
}

/// Verdict for every connected mask in `1..total`, sharded by mask range.
fn verdicts_by_mask(group: &Arc<GroupTable>, jobs: usize) -> Result<Vec<(u32, usize, CcaVerdict)>> {
    let total = enumerate_connection_sets(group, true, false)?.total_masks();
    let shards = (jobs.max(1) * 4) as u32;
    let width = total.div_ceil(shards).max(1);
    let ranges: Vec<std::ops::Range<u32>> = (0..shards).map(|i| i * width..((i + 1) * width).min(total)).collect();
    let pool = thread_pool(jobs);
    let parts: Vec<Result<Vec<(u32, usize, CcaVerdict)>>> = pool.install(|| {
        ranges
            .par_iter()
            .map(|r| {
                enumerate_connection_sets(group, true, false)?
                    .with_range(r.clone())
                    .map(|(mask, conn)| {
                        let valency = conn.len();
                        let graph = ColoredCayleyGraph::new(group.clone(), conn)?;
                        let ao = color_preserving_group(&graph);
                        Ok((mask, valency, verdict_from_group(&graph, &ao)?))
                    })
                    .collect()
            })
            .collect()
    });
    let mut all = Vec::new();
    for p in parts {
        all.extend(p?);
    }
    all.sort_by_key(|(m, _, _)| *m);
    Ok(all)
}

/// Enumerates every inverse-closed connection set of `group`, decides CCA
/// for each connected one, and clusters the non-CCA graphs by isomorphism.
pub fn run_census(descriptor: &str, group: &GroupTable, jobs: usize) -> Result<CensusReport> {
    let shared = Arc::new(group.clone());
    let n = group.order();
    let pairs = InversePairs::new(group);
    let enumerator = enumerate_connection_sets(group, true, true)?;
    let total_sets = (enumerator.total_masks() - 1) as usize;
    let verdicts = verdicts_by_mask(&shared, jobs)?;
    let lookup = |mask: u32| -> &(u32, usize, CcaVerdict) {
        let i = verdicts
            .binary_search_by_key(&mask, |(m, _, _)| *m)
            .expect("connected mask");
        &verdicts[i]
    };
    let graph_of = |mask: u32| {
        let conn = crate::cayley::ConnectionSet::new(group, pairs.elements(n, mask)).expect("valid set");
        ColoredCayleyGraph::new(shared.clone(), conn).expect("valid graph")
    };
    let mut checks = Checklist::new();

    let reps: Vec<u32> = enumerate_connection_sets(group, true, true)?.map(|(m, _)| m).collect();
    let mut rows = Vec::new();
    let mut consistent = true;
    for &mask in &reps {
        let orbit = enumerator.orbit(mask);
        let (_, valency, verdict) = lookup(mask).clone();
        consistent &= orbit.iter().all(|&m| {
            let (_, _, v) = lookup(m);
            v.is_cca == verdict.is_cca && v.ao_order == verdict.ao_order
        });
        let set = pairs.elements(n, mask);
        rows.push(CensusRow {
            mask,
            set: set.iter().map(|x| group.label(x).to_string()).collect(),
            elements: set.as_slice().to_vec(),
            orbit_size: orbit.len(),
            valency,
            verdict,
            iso_class: None,
        });
    }
    checks.check(
        "verdicts constant on Aut(G)-orbits",
        consistent,
        format!("{} orbits", reps.len()),
    );
    let covered: usize = rows.iter().map(|r| r.orbit_size).sum();
    checks.equal("orbits cover the connected sets", covered, verdicts.len());

    // Cluster non-CCA representatives by uncolored isomorphism.
    let mut class_reps: Vec<(u32, ColoredCayleyGraph)> = Vec::new();
    for row in rows.iter_mut().filter(|r| !r.verdict.is_cca) {
        let graph = graph_of(row.mask);
        let found = class_reps
            .iter()
            .position(|(_, rep)| rep.valency() == graph.valency() && are_isomorphic(rep, &graph, false).is_some());
        row.iso_class = Some(match found {
            Some(k) => k,
            None => {
                class_reps.push((row.mask, graph));
                class_reps.len() - 1
            }
        });
    }

    let automorphisms = group.all_automorphisms();
    let mut classes = Vec::new();
    for (k, (mask, rep)) in class_reps.iter().enumerate() {
        let aut = uncolored_aut_group(rep);
        let plain = plain_digraph(rep);
        let sets_in_class = verdicts
            .iter()
            .filter(|(_, valency, _)| *valency == rep.valency())
            .filter(|(m, _, _)| are_isomorphic(rep, &graph_of(*m), false).is_some())
            .count();
        let (_, valency, verdict) = lookup(*mask);
        classes.push(NonCcaClass {
            class: k,
            representative: pairs
                .elements(n, *mask)
                .iter()
                .map(|x| group.label(x).to_string())
                .collect(),
            representative_mask: *mask,
            valency: *valency,
            ao_order: verdict.ao_order,
            aut_order: aut.order() as u64,
            suborbits: aut.suborbit_lengths(group.identity()),
            affine_slice: automorphisms.iter().filter(|a| plain.is_automorphism(a)).count(),
            orbits_in_class: rows.iter().filter(|r| r.iso_class == Some(k)).count(),
            sets_in_class,
        });
    }

    let non_cca_rows: Vec<&CensusRow> = rows.iter().filter(|r| !r.verdict.is_cca).collect();
    let summary = CensusSummary {
        group: descriptor.to_string(),
        group_order: n,
        aut_group_order: automorphisms.len(),
        inverse_pairs: pairs.len(),
        total_sets,
        connected_sets: verdicts.len(),
        orbits: rows.len(),
        non_cca_orbits: non_cca_rows.len(),
        non_cca_sets: non_cca_rows.iter().map(|r| r.orbit_size).sum(),
        classes,
    };
    Ok(CensusReport { rows, summary, checks })
}

/// The census of `F21` with the expected outcome asserted.
pub fn cmd_f21_census(jobs: usize) -> Result<(CensusReport, Checklist)> {
    let report = run_census("F21", &GroupTable::f21(), jobs)?;
    let mut checks = report.checks.clone();
    let s = &report.summary;
    checks.equal("inverse pairs", s.inverse_pairs, 10);
    checks.equal("nonempty connection sets", s.total_sets, 1023);
    checks.equal("|Aut(F21)|", s.aut_group_order, 42);
    checks.equal("non-CCA isomorphism classes", s.classes.len(), 1);
    if let Some(c) = s.classes.first() {
        checks.equal("valency of the non-CCA graph", c.valency, 4);
        checks.equal("|A°| of the non-CCA graph", c.ao_order, 168);
        checks.equal("|Aut| of the non-CCA graph", c.aut_order, 336);
        checks.equal("suborbit lengths", c.suborbits.clone(), vec![1, 4, 8, 8]);
        checks.equal("connection sets in the class", c.sets_in_class, 21);
        checks.equal("|Aut(F21) ∩ Aut(Γ)|", c.affine_slice, 2);
        let canonical = canonical_f21_graph();
        let rep = crate::cayley::ConnectionSet::new(
            &GroupTable::f21(),
            InversePairs::new(&GroupTable::f21()).elements(21, c.representative_mask),
        )?;
        let rep = ColoredCayleyGraph::new(Arc::new(GroupTable::f21()), rep)?;
        checks.check(
            "class contains Cay(F21, {a^±1, (ax)^±1})",
            are_isomorphic(&rep, &canonical, false).is_some(),
            c.representative.join(","),
        );
    }
    Ok((report, checks))
}
