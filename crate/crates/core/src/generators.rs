//! Parametric plane-graph families and class-preserving refinements.
//!
//! Rotations are listed counter-clockwise for a straight-line drawing of each
//! family, and the exterior face is designated through a dart on the outer
//! boundary.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::embedding::{build_embedding, Dart, EmbeddingError, FaceId, PlaneGraph, VertexId};
use crate::par::{self, Execution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("{family} needs {requirement}, got {got}")]
    BadSize {
        family: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("face {0} is not an interior 4-gon")]
    NotInteriorQuad(FaceId),
    #[error("face {0} is not an interior triangle")]
    NotInteriorTriangle(FaceId),
    #[error("exhaustive enumeration is capped at {limit} vertices, requested {requested}")]
    SizeTooLarge { limit: usize, requested: usize },
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

fn bad_size(family: &'static str, requirement: &'static str, got: usize) -> GenerateError {
    GenerateError::BadSize {
        family,
        requirement,
        got,
    }
}

fn assemble(rotations: Vec<Vec<VertexId>>, outer: Dart) -> Result<PlaneGraph, GenerateError> {
    let g = build_embedding(rotations.len(), rotations)?;
    Ok(PlaneGraph::with_outer_dart(g, outer)?)
}

/// The `n`-cycle `0, 1, ..., n-1`.
pub fn gen_polygon(n: usize) -> Result<PlaneGraph, GenerateError> {
    if n < 3 {
        return Err(bad_size("polygon", "n >= 3", n));
    }
    let rotations = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
    assemble(rotations, Dart::new(0, 1))
}

/// `m` by `n` cells; vertex `r * (n + 1) + c` sits at column `c`, row `r`.
pub fn gen_grid(m: usize, n: usize) -> Result<PlaneGraph, GenerateError> {
    if m < 2 {
        return Err(bad_size("grid", "m >= 2", m));
    }
    if n < 2 {
        return Err(bad_size("grid", "n >= 2", n));
    }
    let (rows, cols) = (m + 1, n + 1);
    let id = |r: usize, c: usize| r * cols + c;
    let mut rotations = vec![Vec::with_capacity(4); rows * cols];
    for r in 0..rows {
        for c in 0..cols {
            let rot = &mut rotations[id(r, c)];
            if c + 1 < cols {
                rot.push(id(r, c + 1));
            }
            if r + 1 < rows {
                rot.push(id(r + 1, c));
            }
            if c > 0 {
                rot.push(id(r, c - 1));
            }
            if r > 0 {
                rot.push(id(r - 1, c));
            }
        }
    }
    // bottom edge traversed left to right runs along the exterior
    assemble(rotations, Dart::new(id(0, 0), id(0, 1)))
}

/// Outer `n`-gon `0..n`, inner `n`-gon `n..2n`, spokes `i -- n + i`.
pub fn gen_prism(n: usize) -> Result<PlaneGraph, GenerateError> {
    if n < 3 {
        return Err(bad_size("prism", "n >= 3", n));
    }
    let next = |i: usize| (i + 1) % n;
    let prev = |i: usize| (i + n - 1) % n;
    let mut rotations = Vec::with_capacity(2 * n);
    for i in 0..n {
        rotations.push(vec![next(i), n + i, prev(i)]);
    }
    for i in 0..n {
        rotations.push(vec![i, n + next(i), n + prev(i)]);
    }
    assemble(rotations, Dart::new(0, 1))
}

/// Rim `0..n` around hub `n`. `gen_wheel(3)` is the planar K4.
pub fn gen_wheel(n: usize) -> Result<PlaneGraph, GenerateError> {
    if n < 3 {
        return Err(bad_size("wheel", "n >= 3", n));
    }
    let mut rotations: Vec<Vec<VertexId>> = (0..n)
        .map(|i| vec![(i + 1) % n, n, (i + n - 1) % n])
        .collect();
    rotations.push((0..n).collect());
    assemble(rotations, Dart::new(0, 1))
}

/// Which pair of opposite corners of a 4-gon receives the new vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CornerPair {
    /// First and third corners of the face walk.
    First,
    /// Second and fourth corners.
    Second,
}

/// Inserts `new` into the rotation at `at` immediately after `after`.
fn insert_after(rotations: &mut [Vec<VertexId>], at: VertexId, after: VertexId, new: VertexId) {
    let rot = &mut rotations[at];
    let pos = rot
        .iter()
        .position(|&x| x == after)
        .expect("face corner adjacent to its predecessor");
    rot.insert(pos + 1, new);
}

/// Splits an interior 4-gon into two by a new degree-2 vertex joined to a
/// pair of opposite corners.
pub fn quad_split(
    pg: &PlaneGraph,
    face: FaceId,
    corners: CornerPair,
) -> Result<PlaneGraph, GenerateError> {
    let walk: Vec<VertexId> = match pg.faces().face(face) {
        Some(f) if face != pg.outer_face() && f.len() == 4 => f.vertices().collect(),
        _ => return Err(GenerateError::NotInteriorQuad(face)),
    };
    if (0..4).any(|i| (i + 1..4).any(|j| walk[i] == walk[j])) {
        return Err(GenerateError::NotInteriorQuad(face));
    }
    let (a, b) = match corners {
        CornerPair::First => (0, 2),
        CornerPair::Second => (1, 3),
    };
    let mut rotations = pg.embedding().rotations().to_vec();
    let c = rotations.len();
    insert_after(&mut rotations, walk[a], walk[(a + 3) % 4], c);
    insert_after(&mut rotations, walk[b], walk[(b + 3) % 4], c);
    rotations.push(vec![walk[a], walk[b]]);
    assemble(rotations, pg.outer_dart())
}

/// Stellar subdivision: a new vertex inside an interior triangle, joined to
/// its three corners.
pub fn stellar_subdivide(pg: &PlaneGraph, face: FaceId) -> Result<PlaneGraph, GenerateError> {
    let walk: Vec<VertexId> = match pg.faces().face(face) {
        Some(f) if face != pg.outer_face() && f.len() == 3 => f.vertices().collect(),
        _ => return Err(GenerateError::NotInteriorTriangle(face)),
    };
    let [a, b, c] = [walk[0], walk[1], walk[2]];
    if a == b || b == c || a == c {
        return Err(GenerateError::NotInteriorTriangle(face));
    }
    let mut rotations = pg.embedding().rotations().to_vec();
    let s = rotations.len();
    insert_after(&mut rotations, a, c, s);
    insert_after(&mut rotations, b, a, s);
    insert_after(&mut rotations, c, b, s);
    rotations.push(vec![a, c, b]);
    assemble(rotations, pg.outer_dart())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Refinement {
    QuadSplit,
    Stellar,
}

/// Base instances for fuzzing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FuzzFamily {
    /// C4, refined by quad splits.
    Square,
    /// 2x2 grid, refined by quad splits.
    Grid,
    /// Cube graph, refined by quad splits.
    Cube,
    /// C3, refined by stellar subdivision.
    Triangle,
    /// Planar K4, refined by stellar subdivision.
    K4,
    /// Wheel with hub degree 5, refined by stellar subdivision.
    Wheel,
    /// Triangular prism (mixed 3/4-gons), stellar subdivision of its triangles.
    TriangularPrism,
}

impl FuzzFamily {
    pub const ALL: [FuzzFamily; 7] = [
        FuzzFamily::Square,
        FuzzFamily::Grid,
        FuzzFamily::Cube,
        FuzzFamily::Triangle,
        FuzzFamily::K4,
        FuzzFamily::Wheel,
        FuzzFamily::TriangularPrism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FuzzFamily::Square => "square",
            FuzzFamily::Grid => "grid",
            FuzzFamily::Cube => "cube",
            FuzzFamily::Triangle => "triangle",
            FuzzFamily::K4 => "k4",
            FuzzFamily::Wheel => "wheel",
            FuzzFamily::TriangularPrism => "triangular-prism",
        }
    }

    pub fn refinement(self) -> Refinement {
        match self {
            FuzzFamily::Square | FuzzFamily::Grid | FuzzFamily::Cube => Refinement::QuadSplit,
            _ => Refinement::Stellar,
        }
    }

    pub fn base(self) -> PlaneGraph {
        match self {
            FuzzFamily::Square => gen_polygon(4),
            FuzzFamily::Grid => gen_grid(2, 2),
            FuzzFamily::Cube => gen_prism(4),
            FuzzFamily::Triangle => gen_polygon(3),
            FuzzFamily::K4 => gen_wheel(3),
            FuzzFamily::Wheel => gen_wheel(5),
            FuzzFamily::TriangularPrism => gen_prism(3),
        }
        .expect("base sizes are valid")
    }
}

impl std::str::FromStr for FuzzFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FuzzFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

/// Reproducible refinement run. Randomness comes from ChaCha8 seeded with
/// `seed`; identical configs give identical rotations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub operations: usize,
    pub family: FuzzFamily,
}

impl FuzzConfig {
    pub fn new(family: FuzzFamily, seed: u64, operations: usize) -> Self {
        FuzzConfig {
            seed,
            operations,
            family,
        }
    }
}

/// Interior faces of the given length, in face-id order.
pub fn interior_faces_of_len(pg: &PlaneGraph, len: usize) -> Vec<FaceId> {
    pg.interior_faces()
        .filter(|(_, f)| f.len() == len)
        .map(|(id, _)| id)
        .collect()
}

/// Applies one uniformly chosen eligible refinement.
pub fn refine_once<R: Rng>(
    pg: &PlaneGraph,
    refinement: Refinement,
    rng: &mut R,
) -> Result<PlaneGraph, GenerateError> {
    match refinement {
        Refinement::QuadSplit => {
            let faces = interior_faces_of_len(pg, 4);
            if faces.is_empty() {
                return Err(GenerateError::NotInteriorQuad(pg.outer_face()));
            }
            let face = faces[rng.random_range(0..faces.len())];
            let corners = if rng.random_bool(0.5) {
                CornerPair::First
            } else {
                CornerPair::Second
            };
            quad_split(pg, face, corners)
        }
        Refinement::Stellar => {
            let faces = interior_faces_of_len(pg, 3);
            if faces.is_empty() {
                return Err(GenerateError::NotInteriorTriangle(pg.outer_face()));
            }
            let face = faces[rng.random_range(0..faces.len())];
            stellar_subdivide(pg, face)
        }
    }
}

pub fn fuzz(config: FuzzConfig) -> Result<PlaneGraph, GenerateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let refinement = config.family.refinement();
    let mut pg = config.family.base();
    for _ in 0..config.operations {
        pg = refine_once(&pg, refinement, &mut rng)?;
    }
    Ok(pg)
}

/// Runs many independent configs, in parallel when `exec` allows.
pub fn fuzz_many(
    configs: &[FuzzConfig],
    exec: Execution,
) -> Result<Vec<PlaneGraph>, GenerateError> {
    par::map_collect(exec, configs, |c| fuzz(*c))
        .into_iter()
        .collect()
}
