//! One-shot consistency audit of a plane graph, used by the fuzz and
//! enumeration drivers.

use serde::Serialize;

use crate::census::{degree_census, gonality_histogram, verify_counting_identities};
use crate::classes::{classify, Gamma2ScanInput};
use crate::embedding::{compute_genus, PlaneGraph};
use crate::par::{self, Execution};
use crate::relations::evaluate_catalog_with;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Audit {
    /// Human-readable description of every failed check.
    pub violations: Vec<String>,
}

impl Audit {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks Euler's formula, the counting identities, every applicable
/// relation except those reproduced as printed, and scan/classify agreement.
pub fn audit(pg: &PlaneGraph) -> Audit {
    let mut violations = Vec::new();

    match compute_genus(pg.embedding(), pg.faces()) {
        Ok(0) => {}
        Ok(g) => violations.push(format!("genus {g}")),
        Err(e) => violations.push(e.to_string()),
    }

    let census = degree_census(pg);
    let histogram = gonality_histogram(pg);
    for v in verify_counting_identities(pg, &census, &histogram) {
        if let Ok(b) = v.outcome {
            if !b.holds() {
                violations.push(format!("{:?}: {} != {}", v.identity, b.lhs, b.rhs));
            }
        }
    }

    let two_connected = pg.is_two_connected();
    for r in evaluate_catalog_with(&census, &histogram, two_connected) {
        if r.printed_variant {
            continue;
        }
        if let Some(res) = r.residual.filter(|&x| x != 0) {
            violations.push(format!("{}: residual {res}", r.relation));
        }
    }

    let scan = Gamma2ScanInput::from_plane_graph(pg).scan();
    let class = classify(pg);
    if scan.is_gamma2 != class.gamma2 {
        violations.push("gamma2 scan disagrees with classify".to_string());
    }
    if scan.row_visits > pg.vertex_count() {
        violations.push(format!("scan read {} rows", scan.row_visits));
    }

    Audit { violations }
}

pub fn audit_many(graphs: &[PlaneGraph], exec: Execution) -> Vec<Audit> {
    par::map_collect(exec, graphs, audit)
}
