//! End-to-end reproduction runs: the `F21` census, complete graphs, the
//! product demonstration and the oracle suites, each returning a report
//! with a list of named checks.

pub mod census;
pub mod complete;
pub mod descriptor;
pub mod fixtures;
pub mod oracle;
pub mod product;
pub mod report;

use std::sync::Arc;

pub use census::{cmd_f21_census, run_census, CensusReport, CensusRow, CensusSummary, NonCcaClass};
pub use complete::{cmd_complete_cca, cmd_complete_default, CompleteReport, CompleteRow, DEFAULT_ROSTER};
pub use descriptor::parse_group;
pub use oracle::cmd_oracle_suite;
pub use product::{cmd_product_demo, validate_m, ProductDemoReport};
pub use report::{Check, Checklist};

use crate::cayley::{ColoredCayleyGraph, ConnectionSet};
use crate::cca::{cca_verdict, CcaVerdict};
use crate::error::Result;

/// Recomputes the verdict for `descriptor` and a comma-separated
/// connection set such as `"a,a^2,ax,(ax)^-1"`.
pub fn replay_verdict(descriptor: &str, set: &str) -> Result<CcaVerdict> {
    let group = Arc::new(parse_group(descriptor)?);
    let members = group.parse_set(set)?;
    let graph = ColoredCayleyGraph::new(group.clone(), ConnectionSet::new(&group, members)?)?;
    cca_verdict(&graph)
}
