//! Plane graphs as rotation systems, with exact integer checks of Euler-type
//! identities relating the interior/exterior degree census to face counts.
//!
//! The pipeline is: build an [`EmbeddedGraph`] from rotations, trace its
//! faces, designate an exterior face to get a [`PlaneGraph`], then compute
//! the [`Census`] and [`GonalityHistogram`] and evaluate relations and class
//! membership on them.

pub mod audit;
pub mod census;
pub mod classes;
pub mod cli;
pub mod embedding;
pub mod enumerate;
pub mod generators;
pub mod io;
pub mod par;
pub mod relations;

pub use census::{
    classify_vertices, degree_census, gonality_histogram, verify_counting_identities, Census,
    GonalityHistogram,
};
pub use classes::{classify, gamma2_linear_scan, ClassReport, Gamma3Reading};
pub use embedding::{
    build_embedding, check_two_connected, compute_genus, designate_outer_face, enumerate_faces,
    Dart, EmbeddedGraph, EmbeddingError, FaceId, FaceSet, PlaneGraph, VertexId,
};
pub use enumerate::{enumerate_small, GonalityFilter, SmallEnumeration};
pub use generators::{
    fuzz, gen_grid, gen_polygon, gen_prism, gen_wheel, quad_split, stellar_subdivide, CornerPair,
    FuzzConfig, FuzzFamily, GenerateError,
};
pub use io::{build_report, parse_embedding, serialize_embedding, serialize_report, Report};
pub use par::Execution;
pub use relations::{
    check_face_system, predict_f3, residual_d4_general, residual_gamma2, residual_master,
    Gamma2Variant, RelationError, RelationId, RelationReport,
};
