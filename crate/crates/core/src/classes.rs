//! Membership in the three plane-graph classes.
//!
//! * class 1: 2-connected, all interior faces share one gonality `eta`;
//! * class 2: class 1 with `eta = 4` and an interior vertex of degree other than 4;
//! * class 3: class 1 containing an interior triangle.
//!
//! Class 3 is ambiguous: read literally it inherits uniform gonality (so every
//! interior face is a triangle), yet the triangle-count relation is stated for
//! graphs mixing 3- and 4-gons. Both readings are reported.

use serde::Serialize;
use thiserror::Error;

use crate::census::{degree_census, gonality_histogram};
use crate::embedding::{PlaneGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("{rows} adjacency rows but {marks} exterior marks")]
    LengthMismatch { rows: usize, marks: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Gamma3Reading {
    /// Class 1 with `eta = 3`.
    Strict,
    /// 2-connected, interior gonalities within {3, 4}, at least one triangle.
    Mixed34,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub two_connected: bool,
    pub uniform_gonality: Option<usize>,
    pub gamma1: bool,
    pub gamma2: bool,
    pub gamma3_strict: bool,
    pub gamma3_mixed34: bool,
    pub max_degree: usize,
}

impl ClassReport {
    pub fn gamma3(&self, reading: Gamma3Reading) -> bool {
        match reading {
            Gamma3Reading::Strict => self.gamma3_strict,
            Gamma3Reading::Mixed34 => self.gamma3_mixed34,
        }
    }
}

pub fn classify(pg: &PlaneGraph) -> ClassReport {
    let two_connected = pg.is_two_connected();
    let histogram = gonality_histogram(pg);
    let census = degree_census(pg);
    let uniform_gonality = histogram.uniform();

    let gamma1 = two_connected && uniform_gonality.is_some();
    let gamma2 = gamma1
        && uniform_gonality == Some(4)
        && census.interior_by_degree.keys().any(|&d| d != 4);
    let gamma3_strict = gamma1 && uniform_gonality == Some(3);
    let gamma3_mixed34 = two_connected && histogram.all_within(&[3, 4]) && histogram.count(3) >= 1;

    ClassReport {
        two_connected,
        uniform_gonality,
        gamma1,
        gamma2,
        gamma3_strict,
        gamma3_mixed34,
        max_degree: census.max_degree,
    }
}

/// Result of [`gamma2_linear_scan`] together with the number of adjacency
/// rows it read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOutcome {
    pub is_gamma2: bool,
    pub row_visits: usize,
}

/// Class 2 recognition by one pass over the adjacency rows.
///
/// `quad_member` is the precomputed fact that the graph is 2-connected with
/// every interior face a 4-gon. Each row is read exactly once; the answer is
/// whether some unmarked (interior) row has length other than 4.
pub fn gamma2_linear_scan<R: AsRef<[VertexId]>>(
    adjacency_rows: &[R],
    exterior_marks: &[bool],
    quad_member: bool,
) -> Result<ScanOutcome, ClassError> {
    if adjacency_rows.len() != exterior_marks.len() {
        return Err(ClassError::LengthMismatch {
            rows: adjacency_rows.len(),
            marks: exterior_marks.len(),
        });
    }
    let mut row_visits = 0;
    let mut found = false;
    for (row, &exterior) in adjacency_rows.iter().zip(exterior_marks) {
        row_visits += 1;
        if !exterior && row.as_ref().len() != 4 {
            found = true;
        }
    }
    Ok(ScanOutcome {
        is_gamma2: quad_member && found,
        row_visits,
    })
}

/// The precomputed inputs of [`gamma2_linear_scan`] for a plane graph.
#[derive(Clone, Debug)]
pub struct Gamma2ScanInput {
    pub rows: Vec<Vec<VertexId>>,
    pub exterior_marks: Vec<bool>,
    pub quad_member: bool,
}

impl Gamma2ScanInput {
    pub fn from_plane_graph(pg: &PlaneGraph) -> Self {
        let quad_member = pg.is_two_connected() && pg.interior_faces().all(|(_, f)| f.len() == 4);
        Gamma2ScanInput {
            rows: pg.embedding().rotations().to_vec(),
            exterior_marks: pg.exterior_mask(),
            quad_member,
        }
    }

    pub fn scan(&self) -> ScanOutcome {
        gamma2_linear_scan(&self.rows, &self.exterior_marks, self.quad_member)
            .expect("rows and marks come from the same graph")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_grid, gen_polygon, gen_prism, gen_wheel};

    #[test]
    fn cube_is_gamma2() {
        let r = classify(&gen_prism(4).unwrap());
        assert!(r.gamma1 && r.gamma2);
        assert_eq!(r.uniform_gonality, Some(4));
        assert!(!r.gamma3_strict && !r.gamma3_mixed34);
    }

    #[test]
    fn grid_is_gamma1_not_gamma2() {
        let r = classify(&gen_grid(2, 2).unwrap());
        assert!(r.gamma1);
        assert_eq!(r.uniform_gonality, Some(4));
        assert!(!r.gamma2);
    }

    #[test]
    fn triangular_prism_readings_differ() {
        let r = classify(&gen_prism(3).unwrap());
        assert!(!r.gamma1);
        assert!(!r.gamma3(Gamma3Reading::Strict));
        assert!(r.gamma3(Gamma3Reading::Mixed34));
    }

    #[test]
    fn wheels_are_strict_gamma3() {
        for n in 3..8 {
            let r = classify(&gen_wheel(n).unwrap());
            assert!(r.gamma1 && r.gamma3_strict && r.gamma3_mixed34);
            assert_eq!(r.max_degree, n.max(3));
        }
    }

    #[test]
    fn scan_examples() {
        let cube = Gamma2ScanInput::from_plane_graph(&gen_prism(4).unwrap()).scan();
        assert_eq!(cube, ScanOutcome { is_gamma2: true, row_visits: 8 });

        let grid = Gamma2ScanInput::from_plane_graph(&gen_grid(2, 2).unwrap()).scan();
        assert!(!grid.is_gamma2);
        assert!(grid.row_visits <= 9);

        let c4 = Gamma2ScanInput::from_plane_graph(&gen_polygon(4).unwrap()).scan();
        assert!(!c4.is_gamma2);
    }

    #[test]
    fn scan_rejects_mismatched_lengths() {
        let rows = vec![vec![1usize], vec![0]];
        assert_eq!(
            gamma2_linear_scan(&rows, &[true], true),
            Err(ClassError::LengthMismatch { rows: 2, marks: 1 })
        );
    }
}
