//! Euler-type relations between the degree census and the face counts,
//! evaluated as exact integer residuals (left side minus right side).
//!
//! Every relation is cleared of fractions before evaluation: the master
//! relation is scaled by `2 * eta`, the face-count equation by 2. Nothing in
//! this module touches floating point.
//!
//! Derivation of the master relation: with `V - E + (F - 1) = 1`,
//! `2E = sum_d d V_d` and, for uniform interior gonality `eta`,
//! `eta (F - 1) = sum_d d V_d^int + sum_d (d - 1) V_d^ext`, multiplying by
//! `2 eta` gives
//!
//! ```text
//! sum_d (2 eta - d eta + 2d) V_d^int + sum_d (2 eta - d eta + 2d - 2) V_d^ext = 2 eta
//! ```
//!
//! The quadrangulation and triangle-count relations are specialisations of
//! the same identity, so they are evaluated with the same per-degree
//! coefficients for every degree present.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::census::{self, degree_census, gonality_histogram, Census, GonalityHistogram};
use crate::embedding::PlaneGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("gonality {0} is below 3")]
    BadEta(usize),
    #[error("degree {degree} exceeds 4; relation is tabulated for degrees 2..=4 only")]
    DegreeTooLarge { degree: usize },
    #[error("degree {degree} is below 2; relation is tabulated for degrees 2..=4 only")]
    DegreeTooSmall { degree: usize },
    #[error("predicted triangle count {0} is negative; census is outside the {{3,4}}-gonal domain")]
    NegativePrediction(i64),
    #[error("interior face of gonality {gonality} is outside {{3, 4}}")]
    MixedGonalityOutOfRange { gonality: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RelationId {
    Master,
    D4General,
    Gamma2Corrected,
    Gamma2Printed,
    FaceSystem,
    F3Prediction,
}

impl RelationId {
    pub const ALL: [RelationId; 6] = [
        RelationId::Master,
        RelationId::D4General,
        RelationId::Gamma2Corrected,
        RelationId::Gamma2Printed,
        RelationId::FaceSystem,
        RelationId::F3Prediction,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RelationId::Master => "MASTER",
            RelationId::D4General => "D4_GENERAL",
            RelationId::Gamma2Corrected => "GAMMA2_CORRECTED",
            RelationId::Gamma2Printed => "GAMMA2_PRINTED",
            RelationId::FaceSystem => "FACE_SYSTEM",
            RelationId::F3Prediction => "F3_PREDICTION",
        }
    }

    /// Whether this entry is the known-wrong variant kept for comparison.
    pub fn is_printed_variant(self) -> bool {
        self == RelationId::Gamma2Printed
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RelationId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RelationId::ALL
            .into_iter()
            .find(|r| r.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown relation `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gamma2Variant {
    /// `|V3^int| + 2|V2^int| = 4 + |V4^ext| - |V2^ext|`
    Corrected,
    /// `|V3^int| + 2|V2^int| = 4 + |V4^ext| + |V3^ext| - |V2^ext|`; off by `|V3^ext|`.
    Printed,
}

fn check_eta(eta: usize) -> Result<(), RelationError> {
    if eta < 3 {
        Err(RelationError::BadEta(eta))
    } else {
        Ok(())
    }
}

/// Master relation scaled by `2 * eta`. Zero on every 2-connected plane graph
/// whose interior faces are all `eta`-gons.
pub fn residual_master(census: &Census, eta: usize) -> Result<i64, RelationError> {
    check_eta(eta)?;
    let eta = eta as i64;
    let lhs: i64 = census
        .rows()
        .map(|(d, int, ext)| {
            let d = d as i64;
            let base = 2 * eta - d * eta + 2 * d;
            base * int + (base - 2) * ext
        })
        .sum();
    Ok(lhs - 2 * eta)
}

fn check_degrees_2_to_4(census: &Census) -> Result<(), RelationError> {
    if census.max_degree > 4 {
        return Err(RelationError::DegreeTooLarge {
            degree: census.max_degree,
        });
    }
    match census.min_degree() {
        Some(degree) if degree < 2 => Err(RelationError::DegreeTooSmall { degree }),
        _ => Ok(()),
    }
}

/// The degree-at-most-4 coefficient table:
/// `(8-2η)V4i + (6-2η)V4e + (6-η)V3i + (4-η)V3e + 4V2i + 2V2e - 2η`.
pub fn residual_d4_general(census: &Census, eta: usize) -> Result<i64, RelationError> {
    check_eta(eta)?;
    check_degrees_2_to_4(census)?;
    let eta = eta as i64;
    let (i, e) = (|d| census.interior(d), |d| census.exterior(d));
    Ok(i(4) * (8 - 2 * eta)
        + e(4) * (6 - 2 * eta)
        + i(3) * (6 - eta)
        + e(3) * (4 - eta)
        + 4 * i(2)
        + 2 * e(2)
        - 2 * eta)
}

/// Quadrangulation relation.
///
/// The corrected form is the master relation at `eta = 4` halved, i.e.
/// `sum_d (4 - d) V_d^int + sum_d (3 - d) V_d^ext - 4`, which on degrees 2..=4
/// reads `V3i + 2 V2i - (4 + V4e - V2e)`. The printed form additionally
/// subtracts `|V3^ext|`.
pub fn residual_gamma2(census: &Census, variant: Gamma2Variant) -> i64 {
    let corrected: i64 = census
        .rows()
        .map(|(d, int, ext)| {
            let d = d as i64;
            (4 - d) * int + (3 - d) * ext
        })
        .sum::<i64>()
        - 4;
    match variant {
        Gamma2Variant::Corrected => corrected,
        Gamma2Variant::Printed => corrected - census.exterior(3),
    }
}

/// `sum_d d V_d^int + sum_d (d - 1) V_d^ext - sum_eta eta F_eta`, any gonalities.
pub fn residual_incidence(census: &Census, histogram: &GonalityHistogram) -> i64 {
    census::incidence_lhs(census) - census::incidence_rhs(histogram)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FaceSystemResiduals {
    pub incidence: i64,
    /// `2 (1 + E - V) - 2 (F3 + F4)`, which for degrees 2..=4 is
    /// `2 + 2 V4i + 2 V4e + V3i + V3e - 2 (F3 + F4)`.
    pub count: i64,
}

/// Incidence and face-count equations for interior faces of gonality 3 and 4.
pub fn check_face_system(
    census: &Census,
    histogram: &GonalityHistogram,
) -> Result<FaceSystemResiduals, RelationError> {
    if let Some(gonality) = histogram.gonalities().find(|&g| g != 3 && g != 4) {
        return Err(RelationError::MixedGonalityOutOfRange { gonality });
    }
    let excess: i64 = census
        .rows()
        .map(|(d, int, ext)| (d as i64 - 2) * (int + ext))
        .sum();
    Ok(FaceSystemResiduals {
        incidence: residual_incidence(census, histogram),
        count: 2 + excess - 2 * (histogram.count(3) + histogram.count(4)),
    })
}

/// Triangle count of a 2-connected plane graph with interior faces of
/// gonality 3 and 4: `4 + sum_d (d - 4) V_d^int + sum_d (d - 3) V_d^ext`,
/// which on degrees 2..=4 reads `4 + V4e - V3i - 2 V2i - V2e`.
pub fn predict_f3(census: &Census) -> Result<i64, RelationError> {
    let f3 = 4 + census
        .rows()
        .map(|(d, int, ext)| {
            let d = d as i64;
            (d - 4) * int + (d - 3) * ext
        })
        .sum::<i64>();
    if f3 < 0 {
        return Err(RelationError::NegativePrediction(f3));
    }
    Ok(f3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub relation: RelationId,
    pub printed_variant: bool,
    pub applicable: bool,
    pub residual: Option<i64>,
    pub notes: String,
}

impl RelationReport {
    fn value(relation: RelationId, residual: i64, notes: String) -> Self {
        RelationReport {
            relation,
            printed_variant: relation.is_printed_variant(),
            applicable: true,
            residual: Some(residual),
            notes,
        }
    }

    fn gated(relation: RelationId, reason: impl Into<String>) -> Self {
        RelationReport {
            relation,
            printed_variant: relation.is_printed_variant(),
            applicable: false,
            residual: None,
            notes: reason.into(),
        }
    }

    pub fn holds(&self) -> Option<bool> {
        self.residual.map(|r| r == 0)
    }
}

/// Evaluates every relation in the catalog, gating those whose hypotheses
/// fail. Each [`RelationId`] appears exactly once, in [`RelationId::ALL`] order.
pub fn evaluate_catalog(pg: &PlaneGraph) -> Vec<RelationReport> {
    evaluate_catalog_with(
        &degree_census(pg),
        &gonality_histogram(pg),
        pg.is_two_connected(),
    )
}

pub fn evaluate_catalog_with(
    census: &Census,
    histogram: &GonalityHistogram,
    two_connected: bool,
) -> Vec<RelationReport> {
    RelationId::ALL
        .into_iter()
        .map(|id| evaluate_one(id, census, histogram, two_connected))
        .collect()
}

fn evaluate_one(
    id: RelationId,
    census: &Census,
    histogram: &GonalityHistogram,
    two_connected: bool,
) -> RelationReport {
    if !two_connected {
        return RelationReport::gated(id, "graph is not 2-connected");
    }
    let uniform = histogram.uniform();
    match id {
        RelationId::Master => match uniform {
            Some(eta) => match residual_master(census, eta) {
                Ok(r) => RelationReport::value(id, r, format!("eta={eta}; scaled by 2*eta")),
                Err(e) => RelationReport::gated(id, e.to_string()),
            },
            None => RelationReport::gated(id, "interior gonality is not uniform"),
        },
        RelationId::D4General => match uniform {
            Some(eta) => match residual_d4_general(census, eta) {
                Ok(r) => RelationReport::value(id, r, format!("eta={eta}")),
                Err(e) => RelationReport::gated(id, e.to_string()),
            },
            None => RelationReport::gated(id, "interior gonality is not uniform"),
        },
        RelationId::Gamma2Corrected | RelationId::Gamma2Printed => {
            if uniform != Some(4) {
                return RelationReport::gated(id, "interior faces are not all 4-gons");
            }
            let (variant, note) = if id == RelationId::Gamma2Printed {
                (Gamma2Variant::Printed, "includes the extra +|V3^ext| term")
            } else {
                (Gamma2Variant::Corrected, "|V3^ext| coefficient is 4-eta = 0")
            };
            RelationReport::value(id, residual_gamma2(census, variant), note.to_string())
        }
        RelationId::FaceSystem => match check_face_system(census, histogram) {
            Ok(r) => RelationReport::value(
                id,
                r.incidence.abs() + r.count.abs(),
                format!("incidence={} count={}", r.incidence, r.count),
            ),
            Err(e) => RelationReport::gated(id, e.to_string()),
        },
        RelationId::F3Prediction => {
            if let Some(gonality) = histogram.gonalities().find(|&g| g != 3 && g != 4) {
                let e = RelationError::MixedGonalityOutOfRange { gonality };
                return RelationReport::gated(id, e.to_string());
            }
            match predict_f3(census) {
                Ok(p) => RelationReport::value(
                    id,
                    p - histogram.count(3),
                    format!("predicted={p} actual={}", histogram.count(3)),
                ),
                Err(e) => RelationReport::gated(id, e.to_string()),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(int: &[(usize, u64)], ext: &[(usize, u64)]) -> Census {
        Census::from_counts(int, ext)
    }

    fn h(pairs: &[(usize, u64)]) -> GonalityHistogram {
        GonalityHistogram::from_counts(pairs)
    }

    #[test]
    fn master_examples() {
        assert_eq!(residual_master(&c(&[], &[(2, 4)]), 4), Ok(0));
        assert_eq!(residual_master(&c(&[(3, 4)], &[(3, 4)]), 4), Ok(0));
        assert_eq!(residual_master(&c(&[], &[(2, 6)]), 6), Ok(0));
        assert_eq!(residual_master(&c(&[], &[(2, 4)]), 2), Err(RelationError::BadEta(2)));
        // W6: hub degree 6, rim degree 3, triangles
        assert_eq!(residual_master(&c(&[(6, 1)], &[(3, 6)]), 3), Ok(0));
        // wrong eta for C4
        assert_ne!(residual_master(&c(&[], &[(2, 4)]), 3), Ok(0));
    }

    #[test]
    fn d4_general_examples() {
        assert_eq!(residual_d4_general(&c(&[(4, 1)], &[(3, 4)]), 3), Ok(0));
        assert_eq!(residual_d4_general(&c(&[(3, 1)], &[(3, 3)]), 3), Ok(0));
        assert_eq!(
            residual_d4_general(&c(&[(5, 1)], &[(3, 5)]), 3),
            Err(RelationError::DegreeTooLarge { degree: 5 })
        );
        assert_eq!(
            residual_d4_general(&c(&[], &[(1, 2)]), 3),
            Err(RelationError::DegreeTooSmall { degree: 1 })
        );
    }

    #[test]
    fn d4_general_matches_master_on_small_degrees() {
        for eta in 3..9 {
            for a in 0..3u64 {
                for b in 0..3u64 {
                    let census = c(&[(2, a), (3, b), (4, a + b)], &[(2, b), (3, 1), (4, a)]);
                    assert_eq!(
                        residual_d4_general(&census, eta),
                        residual_master(&census, eta)
                    );
                }
            }
        }
    }

    #[test]
    fn gamma2_examples() {
        let c4 = c(&[], &[(2, 4)]);
        assert_eq!(residual_gamma2(&c4, Gamma2Variant::Corrected), 0);
        let cube = c(&[(3, 4)], &[(3, 4)]);
        assert_eq!(residual_gamma2(&cube, Gamma2Variant::Corrected), 0);
        assert_eq!(residual_gamma2(&cube, Gamma2Variant::Printed), -4);
        let grid = c(&[(4, 1)], &[(2, 4), (3, 4)]);
        assert_eq!(residual_gamma2(&grid, Gamma2Variant::Corrected), 0);
        assert_eq!(residual_gamma2(&grid, Gamma2Variant::Printed), -4);
    }

    #[test]
    fn face_system_examples() {
        let k4 = check_face_system(&c(&[(3, 1)], &[(3, 3)]), &h(&[(3, 3)])).unwrap();
        assert_eq!(k4, FaceSystemResiduals { incidence: 0, count: 0 });
        let prism = check_face_system(&c(&[(3, 3)], &[(3, 3)]), &h(&[(3, 1), (4, 3)])).unwrap();
        assert_eq!(prism, FaceSystemResiduals { incidence: 0, count: 0 });
        let c4 = check_face_system(&c(&[], &[(2, 4)]), &h(&[(4, 1)])).unwrap();
        assert_eq!(c4, FaceSystemResiduals { incidence: 0, count: 0 });
        assert_eq!(
            check_face_system(&c(&[], &[(2, 5)]), &h(&[(5, 1)])),
            Err(RelationError::MixedGonalityOutOfRange { gonality: 5 })
        );
        assert_eq!(residual_incidence(&c(&[], &[(2, 5)]), &h(&[(5, 1)])), 0);
    }

    #[test]
    fn f3_examples() {
        assert_eq!(predict_f3(&c(&[], &[(2, 3)])), Ok(1));
        assert_eq!(predict_f3(&c(&[(3, 1)], &[(3, 3)])), Ok(3));
        assert_eq!(predict_f3(&c(&[], &[(2, 2), (3, 2)])), Ok(2));
        assert_eq!(predict_f3(&c(&[(2, 3)], &[(2, 4)])), Err(RelationError::NegativePrediction(-6)));
    }

    #[test]
    fn relation_ids_parse() {
        for id in RelationId::ALL {
            assert_eq!(id.as_str().parse::<RelationId>(), Ok(id));
        }
        assert!("nope".parse::<RelationId>().is_err());
    }

    #[test]
    fn catalog_gates_disconnected_hypotheses() {
        let census = c(&[], &[(2, 4), (4, 1)]);
        let reports = evaluate_catalog_with(&census, &h(&[(3, 2)]), false);
        assert_eq!(reports.len(), RelationId::ALL.len());
        assert!(reports.iter().all(|r| !r.applicable && r.residual.is_none()));
    }
}
