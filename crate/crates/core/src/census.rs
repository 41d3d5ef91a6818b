//! Interior/exterior degree census and interior-face gonality histogram.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::embedding::{PlaneGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("identity requires a 2-connected graph; cut vertex {cut_vertex} present")]
    NotTwoConnected { cut_vertex: VertexId },
}

/// Vertices on the outer face walk versus all others. Both lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    pub interior: Vec<VertexId>,
    pub exterior: Vec<VertexId>,
}

pub fn classify_vertices(pg: &PlaneGraph) -> VertexPartition {
    let mask = pg.exterior_mask();
    let (exterior, interior) = (0..pg.vertex_count()).partition(|&v| mask[v]);
    VertexPartition { interior, exterior }
}

/// Vertex counts by degree, split by region.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    pub interior_by_degree: BTreeMap<usize, u64>,
    pub exterior_by_degree: BTreeMap<usize, u64>,
    pub max_degree: usize,
}

impl Census {
    /// Builds a census from `(degree, count)` pairs; zero counts are dropped.
    pub fn from_counts(interior: &[(usize, u64)], exterior: &[(usize, u64)]) -> Self {
        let collect = |pairs: &[(usize, u64)]| {
            let mut m = BTreeMap::new();
            for &(d, n) in pairs {
                if n > 0 {
                    *m.entry(d).or_insert(0) += n;
                }
            }
            m
        };
        let interior_by_degree = collect(interior);
        let exterior_by_degree = collect(exterior);
        let max_degree = interior_by_degree
            .keys()
            .chain(exterior_by_degree.keys())
            .copied()
            .max()
            .unwrap_or(0);
        Census {
            interior_by_degree,
            exterior_by_degree,
            max_degree,
        }
    }

    pub fn interior(&self, degree: usize) -> i64 {
        self.interior_by_degree.get(&degree).copied().unwrap_or(0) as i64
    }

    pub fn exterior(&self, degree: usize) -> i64 {
        self.exterior_by_degree.get(&degree).copied().unwrap_or(0) as i64
    }

    pub fn interior_total(&self) -> i64 {
        self.interior_by_degree.values().sum::<u64>() as i64
    }

    pub fn exterior_total(&self) -> i64 {
        self.exterior_by_degree.values().sum::<u64>() as i64
    }

    pub fn vertex_total(&self) -> i64 {
        self.interior_total() + self.exterior_total()
    }

    /// Smallest degree carrying a nonzero count.
    pub fn min_degree(&self) -> Option<usize> {
        self.interior_by_degree
            .keys()
            .chain(self.exterior_by_degree.keys())
            .copied()
            .min()
    }

    /// `(degree, interior count, exterior count)` over every degree present.
    pub fn rows(&self) -> impl Iterator<Item = (usize, i64, i64)> + '_ {
        let mut degrees: Vec<usize> = self
            .interior_by_degree
            .keys()
            .chain(self.exterior_by_degree.keys())
            .copied()
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
            .into_iter()
            .map(move |d| (d, self.interior(d), self.exterior(d)))
    }
}

pub fn degree_census(pg: &PlaneGraph) -> Census {
    let g = pg.embedding();
    let mask = pg.exterior_mask();
    let mut census = Census::default();
    for (v, &exterior) in mask.iter().enumerate() {
        let d = g.degree(v);
        let bucket = if exterior {
            &mut census.exterior_by_degree
        } else {
            &mut census.interior_by_degree
        };
        *bucket.entry(d).or_insert(0) += 1;
        census.max_degree = census.max_degree.max(d);
    }
    census
}

/// Interior faces counted by boundary length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GonalityHistogram {
    pub faces_by_gonality: BTreeMap<usize, u64>,
}

impl GonalityHistogram {
    pub fn from_counts(pairs: &[(usize, u64)]) -> Self {
        let mut faces_by_gonality = BTreeMap::new();
        for &(eta, n) in pairs {
            if n > 0 {
                *faces_by_gonality.entry(eta).or_insert(0) += n;
            }
        }
        GonalityHistogram { faces_by_gonality }
    }

    pub fn count(&self, gonality: usize) -> i64 {
        self.faces_by_gonality.get(&gonality).copied().unwrap_or(0) as i64
    }

    pub fn total(&self) -> i64 {
        self.faces_by_gonality.values().sum::<u64>() as i64
    }

    /// The common gonality when every interior face has the same length.
    pub fn uniform(&self) -> Option<usize> {
        let mut keys = self.faces_by_gonality.keys();
        match (keys.next(), keys.next()) {
            (Some(&eta), None) => Some(eta),
            _ => None,
        }
    }

    pub fn gonalities(&self) -> impl Iterator<Item = usize> + '_ {
        self.faces_by_gonality.keys().copied()
    }

    pub fn all_within(&self, allowed: &[usize]) -> bool {
        self.gonalities().all(|eta| allowed.contains(&eta))
    }
}

pub fn gonality_histogram(pg: &PlaneGraph) -> GonalityHistogram {
    let mut h = GonalityHistogram::default();
    for (_, face) in pg.interior_faces() {
        *h.faces_by_gonality.entry(face.len()).or_insert(0) += 1;
    }
    h
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CountingIdentity {
    /// `|V^int| + |V^ext| = V`
    VertexPartition,
    /// `2E = sum_d d (|V_d^int| + |V_d^ext|)`
    Handshake,
    /// `sum_d d |V_d^int| + sum_d (d - 1) |V_d^ext| = sum_eta eta |F_eta|`
    FaceIncidence,
}

/// Both sides of an integer identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Balance {
    pub lhs: i64,
    pub rhs: i64,
}

impl Balance {
    pub fn residual(&self) -> i64 {
        self.lhs - self.rhs
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub identity: CountingIdentity,
    pub outcome: Result<Balance, CensusError>,
}

impl IdentityVerdict {
    /// `Some(true)` when evaluated and balanced, `None` when gated.
    pub fn holds(&self) -> Option<bool> {
        self.outcome.as_ref().ok().map(Balance::holds)
    }
}

/// Evaluates the vertex-partition, handshake and face-incidence identities.
///
/// Face incidence is only asserted on 2-connected graphs; elsewhere an
/// exterior vertex may meet the outer face in several boundary intervals.
pub fn verify_counting_identities(
    pg: &PlaneGraph,
    census: &Census,
    histogram: &GonalityHistogram,
) -> Vec<IdentityVerdict> {
    let partition = Balance {
        lhs: census.interior_total() + census.exterior_total(),
        rhs: pg.vertex_count() as i64,
    };

    let handshake = Balance {
        lhs: 2 * pg.edge_count() as i64,
        rhs: census
            .rows()
            .map(|(d, int, ext)| d as i64 * (int + ext))
            .sum(),
    };

    let cut = crate::embedding::cut_vertices(pg.embedding());
    let incidence = if pg.vertex_count() < 3 || !cut.is_empty() {
        Err(CensusError::NotTwoConnected {
            cut_vertex: cut.first().copied().unwrap_or(0),
        })
    } else {
        Ok(Balance {
            lhs: incidence_lhs(census),
            rhs: incidence_rhs(histogram),
        })
    };

    vec![
        IdentityVerdict {
            identity: CountingIdentity::VertexPartition,
            outcome: Ok(partition),
        },
        IdentityVerdict {
            identity: CountingIdentity::Handshake,
            outcome: Ok(handshake),
        },
        IdentityVerdict {
            identity: CountingIdentity::FaceIncidence,
            outcome: incidence,
        },
    ]
}

/// `sum_d d |V_d^int| + sum_d (d - 1) |V_d^ext|`
pub(crate) fn incidence_lhs(census: &Census) -> i64 {
    census
        .rows()
        .map(|(d, int, ext)| {
            let d = d as i64;
            d * int + (d - 1) * ext
        })
        .sum()
}

/// `sum_eta eta |F_eta|`
pub(crate) fn incidence_rhs(histogram: &GonalityHistogram) -> i64 {
    histogram
        .faces_by_gonality
        .iter()
        .map(|(&eta, &n)| eta as i64 * n as i64)
        .sum()
}
