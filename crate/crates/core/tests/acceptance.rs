//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use cca_core::cayley::{ColoredCayleyGraph, ConnectionSet};
use cca_core::enumerate::InversePairs;
use cca_core::search::{plain_digraph, uncolored_aut_group};
use cca_core::verify::oracle::{brute_force_equivalence, two_closure_suite, white_oracle};
use cca_core::verify::{cmd_complete_default, cmd_f21_census, cmd_product_demo, CensusReport, Checklist};
use cca_core::GroupTable;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_checks(checks: &Checklist, filter: impl Fn(&str) -> bool) -> Self {
        let selected: Vec<_> = checks.checks.iter().filter(|c| filter(&c.name)).collect();
        let failed: Vec<String> = selected
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect();
        Outcome {
            passed: !selected.is_empty() && failed.is_empty(),
            detail: if failed.is_empty() {
                format!("{} checks", selected.len())
            } else {
                failed.join("; ")
            },
        }
    }

    fn error(e: impl std::fmt::Display) -> Self {
        Outcome {
            passed: false,
            detail: format!("error: {e}"),
        }
    }
}

fn census_graph(report: &CensusReport) -> Option<ColoredCayleyGraph> {
    let class = report.summary.classes.first()?;
    let group = Arc::new(GroupTable::f21());
    let set = InversePairs::new(&group).elements(21, class.representative_mask);
    let conn = ConnectionSet::new(&group, set).ok()?;
    ColoredCayleyGraph::new(group, conn).ok()
}

fn f21_census(report: &CensusReport) -> Outcome {
    let s = &report.summary;
    let Some(c) = s.classes.first() else {
        return Outcome::error("no non-CCA class");
    };
    let passed = s.total_sets == 1023
        && s.classes.len() == 1
        && c.valency == 4
        && c.ao_order == 168
        && c.aut_order == 336
        && c.sets_in_class == 21
        && report.checks.passed();
    Outcome {
        passed,
        detail: format!(
            "sets {} classes {} valency {} |A°| {} |Aut| {} sets in class {}",
            s.total_sets,
            s.classes.len(),
            c.valency,
            c.ao_order,
            c.aut_order,
            c.sets_in_class
        ),
    }
}

fn suborbits(report: &CensusReport) -> Outcome {
    let Some(graph) = census_graph(report) else {
        return Outcome::error("no representative");
    };
    let aut = uncolored_aut_group(&graph);
    let lengths: Vec<Vec<usize>> = (0..21).map(|v| aut.suborbit_lengths(v)).collect();
    Outcome {
        passed: lengths.iter().all(|l| *l == [1, 4, 8, 8]),
        detail: format!("{:?} from all 21 base vertices", lengths[0]),
    }
}

fn affine_slice(report: &CensusReport) -> Outcome {
    let Some(graph) = census_graph(report) else {
        return Outcome::error("no representative");
    };
    let automorphisms = GroupTable::f21().all_automorphisms();
    let plain = plain_digraph(&graph);
    let slice = automorphisms.iter().filter(|a| plain.is_automorphism(a)).count();
    Outcome {
        passed: automorphisms.len() == 42 && slice == 2,
        detail: format!("|Aut(F21)| = {}, slice = {slice}", automorphisms.len()),
    }
}

fn complete_graphs() -> Outcome {
    match cmd_complete_default() {
        Ok(r) => {
            let mut o = Outcome::from_checks(&r.checks, |_| true);
            let failing: Vec<&str> = r.rows.iter().filter(|x| !x.is_cca).map(|x| x.group.as_str()).collect();
            o.detail = format!("non-CCA: {}; {}", failing.join(","), o.detail);
            o
        }
        Err(e) => Outcome::error(e),
    }
}

fn white() -> Outcome {
    Outcome::from_checks(&white_oracle(0, 20), |_| true)
}

fn brute_force() -> Outcome {
    match brute_force_equivalence(std::thread::available_parallelism().map_or(1, |n| n.get())) {
        Ok(c) => Outcome::from_checks(&c, |_| true),
        Err(e) => Outcome::error(e),
    }
}

fn two_closure() -> Outcome {
    match two_closure_suite(0) {
        Ok(c) => Outcome::from_checks(&c, |_| true),
        Err(e) => Outcome::error(e),
    }
}

fn main() -> ExitCode {
    let mut results: Vec<(&str, Outcome)> = Vec::new();
    let start = Instant::now();
    let census = cmd_f21_census(1).map(|(report, _)| report);
    let product = cmd_product_demo(5, 0);
    match &census {
        Ok(report) => {
            results.push((
                "1 F21 census: one non-CCA class, valency 4, |A°| 168, |Aut| 336, 21 sets",
                f21_census(report),
            ));
            results.push(("2 suborbit lengths {1, 4, 8, 8}", suborbits(report)));
            results.push(("3 |Aut(F21)| = 42 and |Aut(F21) ∩ Aut(Γ)| = 2", affine_slice(report)));
        }
        Err(e) => {
            for name in ["1 F21 census", "2 suborbit lengths", "3 affine slice"] {
                results.push((name, Outcome::error(e)));
            }
        }
    }
    results.push((
        "4 complete graphs: CCA iff not a Hamiltonian 2-group",
        complete_graphs(),
    ));
    results.push(("5 exact-arc-color group equals G_L on 20 seeded digraphs", white()));
    results.push(("6 search equals brute force on all groups of order ≤ 8", brute_force()));
    results.push(("7 A° is 2-closed on Γ_F21 and 5 seeded CCA graphs", two_closure()));
    match &product {
        Ok(r) => {
            let mut structure = Outcome::from_checks(&r.checks, |n| {
                matches!(
                    n,
                    "product graph is not CCA"
                        | "product structure found"
                        | "|G1|"
                        | "G = G1 × F21"
                        | "recovered F21 factor is isomorphic to Γ_F21"
                        | "|A°| at m = 5"
                )
            });
            structure.detail = format!("|A°| = {}, |G1| = {}; {}", r.ao_order, r.g1_order, structure.detail);
            results.push(("8 product structure of C5 □ Γ_F21", structure));
            results.push((
                "9 decomposition properties at n = 105",
                Outcome::from_checks(&r.checks, |n| {
                    matches!(
                        n,
                        "ℰ is A-invariant"
                            | "stripped components lie in ℰ-classes"
                            | "|E ∩ B| = 1 for all classes and blocks"
                            | "S1 and S2 commute"
                    )
                }),
            ));
            results.push((
                "10 A° induces color-preserving maps on the Z5 quotient",
                Outcome::from_checks(&r.checks, |n| n == "A° induces color-preserving maps on G/Z_m"),
            ));
        }
        Err(e) => {
            for name in ["8 product structure", "9 decomposition properties", "10 quotient"] {
                results.push((name, Outcome::error(e)));
            }
        }
    }
    let mut failed = 0;
    for (name, outcome) in &results {
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        failed += usize::from(!outcome.passed);
        println!("{status}  {name}  ({})", outcome.detail);
    }
    println!(
        "{} criteria, {failed} failed, {:.1}s",
        results.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
