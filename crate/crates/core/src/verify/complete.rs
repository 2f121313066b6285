//! Complete Cayley graphs: CCA exactly when the group is not a Hamiltonian
//! 2-group.

use std::sync::Arc;

use serde::Serialize;

use super::descriptor::parse_group;
use super::report::Checklist;
use crate::cayley::{ColoredCayleyGraph, ConnectionSet};
use crate::cca::{cca_verdict, is_affine, is_hamiltonian_2group};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::search::color_preserving_group;

/// Largest group accepted by [`cmd_complete_cca`].
pub const COMPLETE_LIMIT: usize = 32;

pub const DEFAULT_ROSTER: [&str; 11] = [
    "Z5", "Z7", "Z8", "Z9", "Z2^3", "D4", "Q8", "Q8xZ2", "Q8xZ2^2", "S3", "F21",
];

#[derive(Clone, Debug, Serialize)]
pub struct CompleteRow {
    pub group: String,
    pub order: usize,
    pub is_cca: bool,
    pub hamiltonian_2group: bool,
    pub ao_order: u64,
    /// For non-CCA groups: inversion `x ↦ x⁻¹` is color-preserving and not
    /// affine.
    pub inversion_witnesses: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompleteReport {
    pub rows: Vec<CompleteRow>,
    pub checks: Checklist,
}

impl CompleteReport {
    pub fn summary_table(&self) -> String {
        let mut out = String::from("  group      order  |A°|          CCA    Hamiltonian\n");
        for r in &self.rows {
            out.push_str(&format!(
                "  {:<9}  {:<5}  {:<12}  {:<5}  {}\n",
                r.group, r.order, r.ao_order, r.is_cca, r.hamiltonian_2group
            ));
        }
        out
    }
}

/// Verdict and Hamiltonian test for the complete Cayley graph of each group
/// in `roster`.
pub fn cmd_complete_cca(roster: &[String]) -> Result<CompleteReport> {
    let mut checks = Checklist::new();
    let mut rows = Vec::new();
    for descriptor in roster {
        let group = Arc::new(parse_group(descriptor)?);
        let n = group.order();
        if n > COMPLETE_LIMIT {
            return Err(Error::TooLarge {
                what: "group order for the complete-graph check",
                size: n,
                limit: COMPLETE_LIMIT,
            });
        }
        let graph = ColoredCayleyGraph::new(group.clone(), ConnectionSet::complete(&group))?;
        let verdict = if n == 1 { None } else { Some(cca_verdict(&graph)?) };
        let is_cca = verdict.as_ref().is_none_or(|v| v.is_cca);
        let hamiltonian = is_hamiltonian_2group(&group)?;
        checks.check(
            format!("{descriptor}: CCA iff not a Hamiltonian 2-group"),
            is_cca != hamiltonian,
            format!("cca={is_cca} hamiltonian={hamiltonian}"),
        );
        let inversion_witnesses = (!is_cca).then(|| {
            let inv = Perm::from_images((0..n).map(|x| group.inv(x)).collect()).expect("inversion is a bijection");
            let ao = color_preserving_group(&graph);
            ao.contains(&inv) && !is_affine(&inv, &group)
        });
        if let Some(ok) = inversion_witnesses {
            checks.check(format!("{descriptor}: inversion is a non-affine witness"), ok, "");
        }
        rows.push(CompleteRow {
            group: descriptor.clone(),
            order: n,
            is_cca,
            hamiltonian_2group: hamiltonian,
            ao_order: verdict.map_or(1, |v| v.ao_order),
            inversion_witnesses,
        });
    }
    Ok(CompleteReport { rows, checks })
}

/// [`cmd_complete_cca`] on [`DEFAULT_ROSTER`], also asserting which entries
/// fail.
pub fn cmd_complete_default() -> Result<CompleteReport> {
    let roster: Vec<String> = DEFAULT_ROSTER.iter().map(|s| s.to_string()).collect();
    let mut report = cmd_complete_cca(&roster)?;
    let failing: Vec<&str> = report
        .rows
        .iter()
        .filter(|r| !r.is_cca)
        .map(|r| r.group.as_str())
        .collect();
    let failing = failing.join(",");
    report
        .checks
        .equal("non-CCA entries", failing.as_str(), "Q8,Q8xZ2,Q8xZ2^2");
    Ok(report)
}
