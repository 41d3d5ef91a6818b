//! Combinatorial embeddings encoded as rotation systems.
//!
//! An [`EmbeddedGraph`] stores, for every vertex, the cyclic order of its
//! neighbours. Faces are the orbits of darts under the successor rule
//!
//! ```text
//! succ(u -> v) = v -> w   where w immediately follows u in the rotation at v
//! ```
//!
//! and the embedding is planar exactly when `V - E + F = 2`.

use std::fmt;

use thiserror::Error;

pub type VertexId = usize;

/// One side of an edge, traversed from `tail` to `head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Dart {
    pub fn new(tail: VertexId, head: VertexId) -> Self {
        Dart { tail, head }
    }

    pub fn reversed(self) -> Self {
        Dart::new(self.head, self.tail)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.tail, self.head)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceId(pub usize);

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} lists neighbour {neighbor}, which is out of range")]
    NeighborOutOfRange { vertex: VertexId, neighbor: VertexId },
    #[error("rotation count {found} does not match vertex count {expected}")]
    RotationCount { expected: usize, found: usize },
    #[error("vertex {vertex} lists itself as a neighbour (loop edge)")]
    LoopEdge { vertex: VertexId },
    #[error("vertex {vertex} lists neighbour {neighbor} more than once")]
    DuplicateNeighbor { vertex: VertexId, neighbor: VertexId },
    #[error("edge ({from}, {to}) is present at {from} but {from} is missing from the rotation at {to}")]
    AsymmetricAdjacency { from: VertexId, to: VertexId },
    #[error("graph is disconnected: vertex {vertex} is unreachable from vertex 0")]
    Disconnected { vertex: VertexId },
    #[error("embedding has genus {genus}, expected a plane embedding")]
    NonPlanarEmbedding { genus: usize },
    #[error("face id {0} does not exist")]
    BadFaceId(FaceId),
    #[error("dart {0} is not an edge side of this graph")]
    BadDart(Dart),
    #[error("internal inconsistency: V - E + F = {chi} does not give a non-negative integral genus")]
    InternalInconsistency { chi: i64 },
}

/// A connected simple graph together with a cyclic neighbour order at every
/// vertex.
///
/// Darts are numbered contiguously: the darts leaving `u` occupy
/// `offsets[u]..offsets[u + 1]` in rotation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rotations: Vec<Vec<VertexId>>,
    offsets: Vec<usize>,
    tails: Vec<VertexId>,
    heads: Vec<VertexId>,
    twins: Vec<usize>,
}

/// Validates the rotation lists and builds the dart tables.
pub fn build_embedding(
    vertex_count: usize,
    rotations: Vec<Vec<VertexId>>,
) -> Result<EmbeddedGraph, EmbeddingError> {
    if vertex_count == 0 {
        return Err(EmbeddingError::Empty);
    }
    if rotations.len() != vertex_count {
        return Err(EmbeddingError::RotationCount {
            expected: vertex_count,
            found: rotations.len(),
        });
    }

    // Per-vertex checks first so errors name the offending vertex in order.
    let mut seen = vec![usize::MAX; vertex_count];
    for (u, rot) in rotations.iter().enumerate() {
        for &v in rot {
            if v >= vertex_count {
                return Err(EmbeddingError::NeighborOutOfRange { vertex: u, neighbor: v });
            }
            if v == u {
                return Err(EmbeddingError::LoopEdge { vertex: u });
            }
            if seen[v] == u {
                return Err(EmbeddingError::DuplicateNeighbor { vertex: u, neighbor: v });
            }
            seen[v] = u;
        }
    }

    let mut offsets = Vec::with_capacity(vertex_count + 1);
    let mut total = 0;
    for rot in &rotations {
        offsets.push(total);
        total += rot.len();
    }
    offsets.push(total);

    let mut tails = Vec::with_capacity(total);
    let mut heads = Vec::with_capacity(total);
    for (u, rot) in rotations.iter().enumerate() {
        for &v in rot {
            tails.push(u);
            heads.push(v);
        }
    }

    // twin of v -> u is u -> v
    let mut twins = vec![usize::MAX; total];
    for v in 0..vertex_count {
        for (i, &u) in rotations[v].iter().enumerate() {
            match rotations[u].iter().position(|&x| x == v) {
                Some(j) => twins[offsets[v] + i] = offsets[u] + j,
                None => return Err(EmbeddingError::AsymmetricAdjacency { from: v, to: u }),
            }
        }
    }

    let g = EmbeddedGraph {
        rotations,
        offsets,
        tails,
        heads,
        twins,
    };
    if let Some(vertex) = g.first_unreachable() {
        return Err(EmbeddingError::Disconnected { vertex });
    }
    Ok(g)
}

impl EmbeddedGraph {
    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.tails.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.tails.len()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.rotations.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Neighbours of `v` in cyclic order.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<VertexId>] {
        &self.rotations
    }

    pub fn into_rotations(self) -> Vec<Vec<VertexId>> {
        self.rotations
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count() && self.rotations[u].contains(&v)
    }

    pub fn dart(&self, index: usize) -> Dart {
        Dart::new(self.tails[index], self.heads[index])
    }

    pub fn dart_index(&self, dart: Dart) -> Option<usize> {
        if dart.tail >= self.vertex_count() {
            return None;
        }
        self.rotations[dart.tail]
            .iter()
            .position(|&h| h == dart.head)
            .map(|i| self.offsets[dart.tail] + i)
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.dart_count()).map(|d| self.dart(d))
    }

    /// Undirected edges `(u, v)` with `u < v`, in dart order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.darts()
            .filter(|d| d.tail < d.head)
            .map(|d| (d.tail, d.head))
    }

    pub(crate) fn twin(&self, index: usize) -> usize {
        self.twins[index]
    }

    /// Index of the first dart leaving `v`.
    pub(crate) fn first_dart(&self, v: VertexId) -> usize {
        self.offsets[v]
    }

    /// Index of the face-successor of the dart at `index`.
    pub fn successor(&self, index: usize) -> usize {
        let v = self.heads[index];
        let back = self.twins[index] - self.offsets[v];
        let deg = self.rotations[v].len();
        self.offsets[v] + (back + 1) % deg
    }

    fn first_unreachable(&self) -> Option<VertexId> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.rotations[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }
}

/// One face: the closed dart walk produced by the successor rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    darts: Vec<Dart>,
}

impl Face {
    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    /// Boundary length, counting a bridge twice if the walk traverses it both ways.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Tails of the boundary darts, i.e. the vertex walk around the face.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.darts.iter().map(|d| d.tail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Face>,
    face_of_dart: Vec<FaceId>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> Option<&Face> {
        self.faces.get(id.0)
    }

    pub fn ids(&self) -> impl Iterator<Item = FaceId> {
        (0..self.faces.len()).map(FaceId)
    }

    /// Face containing the dart with the given index.
    pub fn face_of_dart(&self, dart_index: usize) -> FaceId {
        self.face_of_dart[dart_index]
    }

    pub fn total_boundary_length(&self) -> usize {
        self.faces.iter().map(Face::len).sum()
    }
}

/// Traces every face of `g`. Faces are numbered in order of their first dart.
pub fn enumerate_faces(g: &EmbeddedGraph) -> FaceSet {
    let mut face_of_dart = vec![FaceId(usize::MAX); g.dart_count()];
    let mut faces = Vec::new();
    for start in 0..g.dart_count() {
        if face_of_dart[start].0 != usize::MAX {
            continue;
        }
        let id = FaceId(faces.len());
        let mut darts = Vec::new();
        let mut d = start;
        loop {
            face_of_dart[d] = id;
            darts.push(g.dart(d));
            d = g.successor(d);
            if d == start {
                break;
            }
        }
        faces.push(Face { darts });
    }
    FaceSet {
        faces,
        face_of_dart,
    }
}

/// Genus from `V - E + F = 2 - 2g`.
pub fn compute_genus(g: &EmbeddedGraph, f: &FaceSet) -> Result<usize, EmbeddingError> {
    let chi = euler_characteristic(g, f);
    let twice = 2 - chi;
    if twice < 0 || twice % 2 != 0 {
        return Err(EmbeddingError::InternalInconsistency { chi });
    }
    Ok((twice / 2) as usize)
}

pub fn euler_characteristic(g: &EmbeddedGraph, f: &FaceSet) -> i64 {
    g.vertex_count() as i64 - g.edge_count() as i64 + f.len() as i64
}

/// True iff the graph has at least three vertices and no cut vertex.
pub fn check_two_connected(g: &EmbeddedGraph) -> bool {
    let n = g.vertex_count();
    n >= 3 && cut_vertices(g).is_empty()
}

/// Articulation points via iterative DFS low-points.
pub fn cut_vertices(g: &EmbeddedGraph) -> Vec<VertexId> {
    let n = g.vertex_count();
    const UNSEEN: usize = usize::MAX;
    let mut order = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut clock = 0;

    // (vertex, parent, next rotation index)
    let mut stack: Vec<(VertexId, VertexId, usize)> = vec![(0, UNSEEN, 0)];
    order[0] = 0;
    low[0] = 0;
    clock += 1;
    let mut root_children = 0;

    while let Some(&mut (u, parent, ref mut next)) = stack.last_mut() {
        if let Some(&v) = g.rotation(u).get(*next) {
            *next += 1;
            if order[v] == UNSEEN {
                order[v] = clock;
                low[v] = clock;
                clock += 1;
                if u == 0 {
                    root_children += 1;
                }
                stack.push((v, u, 0));
            } else if v != parent {
                low[u] = low[u].min(order[v]);
            }
        } else {
            stack.pop();
            if parent != UNSEEN {
                low[parent] = low[parent].min(low[u]);
                if parent != 0 && low[u] >= order[parent] {
                    is_cut[parent] = true;
                }
            }
        }
    }
    if root_children > 1 {
        is_cut[0] = true;
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// A genus-0 embedding with one face designated as exterior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    embedding: EmbeddedGraph,
    faces: FaceSet,
    outer_face: FaceId,
}

/// Promotes a planar embedding to a [`PlaneGraph`].
///
/// Without an explicit `choice` the outer face is the longest face, ties going
/// to the smallest face id.
pub fn designate_outer_face(
    g: EmbeddedGraph,
    f: FaceSet,
    choice: Option<FaceId>,
) -> Result<PlaneGraph, EmbeddingError> {
    let genus = compute_genus(&g, &f)?;
    if genus != 0 {
        return Err(EmbeddingError::NonPlanarEmbedding { genus });
    }
    let outer_face = match choice {
        Some(id) if id.0 < f.len() => id,
        Some(id) => return Err(EmbeddingError::BadFaceId(id)),
        None => default_outer_face(&f),
    };
    Ok(PlaneGraph {
        embedding: g,
        faces: f,
        outer_face,
    })
}

fn default_outer_face(f: &FaceSet) -> FaceId {
    let mut best = FaceId(0);
    for id in f.ids() {
        if f.faces[id.0].len() > f.faces[best.0].len() {
            best = id;
        }
    }
    best
}

impl PlaneGraph {
    /// Traces faces and applies the default outer-face rule.
    pub fn new(g: EmbeddedGraph) -> Result<Self, EmbeddingError> {
        let f = enumerate_faces(&g);
        designate_outer_face(g, f, None)
    }

    pub fn with_outer_face(g: EmbeddedGraph, face: FaceId) -> Result<Self, EmbeddingError> {
        let f = enumerate_faces(&g);
        designate_outer_face(g, f, Some(face))
    }

    /// Uses the face containing `dart` as the exterior.
    pub fn with_outer_dart(g: EmbeddedGraph, dart: Dart) -> Result<Self, EmbeddingError> {
        let index = g.dart_index(dart).ok_or(EmbeddingError::BadDart(dart))?;
        let f = enumerate_faces(&g);
        let face = f.face_of_dart(index);
        designate_outer_face(g, f, Some(face))
    }

    pub fn from_rotations(rotations: Vec<Vec<VertexId>>) -> Result<Self, EmbeddingError> {
        PlaneGraph::new(build_embedding(rotations.len(), rotations)?)
    }

    pub fn embedding(&self) -> &EmbeddedGraph {
        &self.embedding
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer_face
    }

    pub fn outer(&self) -> &Face {
        &self.faces.faces[self.outer_face.0]
    }

    /// First dart of the outer face walk; designates the same face on re-trace.
    pub fn outer_dart(&self) -> Dart {
        self.outer().darts[0]
    }

    /// Faces other than the exterior one, with their ids.
    pub fn interior_faces(&self) -> impl Iterator<Item = (FaceId, &Face)> {
        let outer = self.outer_face;
        self.faces
            .faces
            .iter()
            .enumerate()
            .map(|(i, f)| (FaceId(i), f))
            .filter(move |(id, _)| *id != outer)
    }

    pub fn vertex_count(&self) -> usize {
        self.embedding.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.embedding.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn is_two_connected(&self) -> bool {
        check_two_connected(&self.embedding)
    }

    /// Membership mask of vertices incident to the outer face.
    pub fn exterior_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.vertex_count()];
        for v in self.outer().vertices() {
            mask[v] = true;
        }
        mask
    }

    pub fn into_parts(self) -> (EmbeddedGraph, FaceSet, FaceId) {
        (self.embedding, self.faces, self.outer_face)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k4() -> EmbeddedGraph {
        // hub 3 inside the triangle 0, 1, 2 (counter-clockwise)
        build_embedding(
            4,
            vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        )
        .unwrap()
    }

    fn grid3() -> EmbeddedGraph {
        // vertex r * 3 + c at (c, r); neighbours east, north, west, south
        let mut rot = vec![Vec::new(); 9];
        for r in 0..3usize {
            for c in 0..3usize {
                let v = r * 3 + c;
                if c + 1 < 3 {
                    rot[v].push(v + 1);
                }
                if r + 1 < 3 {
                    rot[v].push(v + 3);
                }
                if c > 0 {
                    rot[v].push(v - 1);
                }
                if r > 0 {
                    rot[v].push(v - 3);
                }
            }
        }
        build_embedding(9, rot).unwrap()
    }

    fn lengths(f: &FaceSet) -> Vec<usize> {
        let mut l: Vec<_> = f.faces().iter().map(Face::len).collect();
        l.sort_unstable();
        l
    }

    #[test]
    fn builds_small_cycles() {
        let c3 = build_embedding(3, vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!((c3.vertex_count(), c3.edge_count()), (3, 3));
        let c4 = build_embedding(4, vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![2, 0]]).unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
    }

    #[test]
    fn rejects_malformed_rotations() {
        assert_eq!(
            build_embedding(2, vec![vec![1], vec![0, 0]]),
            Err(EmbeddingError::DuplicateNeighbor { vertex: 1, neighbor: 0 })
        );
        assert_eq!(
            build_embedding(2, vec![vec![0], vec![]]),
            Err(EmbeddingError::LoopEdge { vertex: 0 })
        );
        assert_eq!(
            build_embedding(3, vec![vec![1], vec![0, 2], vec![]]),
            Err(EmbeddingError::AsymmetricAdjacency { from: 1, to: 2 })
        );
        assert_eq!(
            build_embedding(4, vec![vec![1], vec![0], vec![3], vec![2]]),
            Err(EmbeddingError::Disconnected { vertex: 2 })
        );
        assert_eq!(
            build_embedding(2, vec![vec![5], vec![]]),
            Err(EmbeddingError::NeighborOutOfRange { vertex: 0, neighbor: 5 })
        );
        assert_eq!(build_embedding(0, vec![]), Err(EmbeddingError::Empty));
    }

    #[test]
    fn traces_cycle_faces() {
        let c4 = build_embedding(4, vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![2, 0]]).unwrap();
        let f = enumerate_faces(&c4);
        assert_eq!(lengths(&f), vec![4, 4]);
        assert_eq!(compute_genus(&c4, &f), Ok(0));
    }

    #[test]
    fn traces_k4_and_grid() {
        let g = k4();
        let f = enumerate_faces(&g);
        assert_eq!(lengths(&f), vec![3, 3, 3, 3]);
        assert_eq!(compute_genus(&g, &f), Ok(0));

        let g = grid3();
        let f = enumerate_faces(&g);
        assert_eq!(lengths(&f), vec![4, 4, 4, 4, 8]);
        assert_eq!(f.total_boundary_length(), 2 * g.edge_count());
    }

    #[test]
    fn reversed_rotation_gives_torus() {
        let mut rot = k4().into_rotations();
        rot[3].reverse();
        let g = build_embedding(4, rot).unwrap();
        let f = enumerate_faces(&g);
        assert_eq!(f.len(), 2);
        assert_eq!(compute_genus(&g, &f), Ok(1));
        assert_eq!(
            designate_outer_face(g, f, None),
            Err(EmbeddingError::NonPlanarEmbedding { genus: 1 })
        );
    }

    #[test]
    fn every_dart_returns_to_itself() {
        let g = grid3();
        let f = enumerate_faces(&g);
        for d in 0..g.dart_count() {
            let len = f.face(f.face_of_dart(d)).unwrap().len();
            let mut e = d;
            for _ in 0..len {
                e = g.successor(e);
            }
            assert_eq!(e, d);
            assert_eq!(g.twin(g.twin(d)), d);
        }
    }

    #[test]
    fn outer_face_defaults_and_choices() {
        let c4 = build_embedding(4, vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![2, 0]]).unwrap();
        assert_eq!(PlaneGraph::new(c4).unwrap().outer_face(), FaceId(0));

        let pg = PlaneGraph::new(grid3()).unwrap();
        assert_eq!(pg.outer().len(), 8);

        let pg = PlaneGraph::with_outer_face(k4(), FaceId(2)).unwrap();
        assert_eq!(pg.outer_face(), FaceId(2));
        assert_eq!(
            PlaneGraph::with_outer_face(k4(), FaceId(4)),
            Err(EmbeddingError::BadFaceId(FaceId(4)))
        );
    }

    #[test]
    fn two_connectivity() {
        let c3 = build_embedding(3, vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert!(check_two_connected(&c3));
        let bowtie = build_embedding(
            5,
            vec![vec![1, 2, 3, 4], vec![2, 0], vec![0, 1], vec![4, 0], vec![0, 3]],
        )
        .unwrap();
        assert!(!check_two_connected(&bowtie));
        assert_eq!(cut_vertices(&bowtie), vec![0]);
        assert!(check_two_connected(&grid3()));
        let edge = build_embedding(2, vec![vec![1], vec![0]]).unwrap();
        assert!(!check_two_connected(&edge));
    }

    #[test]
    fn grid_two_connected_matches_vertex_deletion() {
        let g = grid3();
        for removed in 0..9 {
            let mut seen = [false; 9];
            let start = if removed == 0 { 1 } else { 0 };
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                for &v in g.rotation(u) {
                    if v != removed && !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            assert_eq!(seen.iter().filter(|&&s| s).count(), 8, "removing {removed}");
        }
        assert!(check_two_connected(&g));
    }

    #[test]
    fn outer_walk_of_two_connected_graph_is_simple() {
        let pg = PlaneGraph::new(grid3()).unwrap();
        let mut walk: Vec<_> = pg.outer().vertices().collect();
        walk.sort_unstable();
        walk.dedup();
        assert_eq!(walk.len(), pg.outer().len());
    }
}
