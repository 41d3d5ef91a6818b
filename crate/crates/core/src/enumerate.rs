//! Exhaustive enumeration of small 2-connected plane graphs.
//!
//! Every 2-connected plane embedding arises from a cycle by repeatedly adding
//! an ear (a path whose inner vertices are new) inside one face between two
//! distinct boundary vertices. Starting from `C3..=Cn` and applying every
//! possible ear therefore reaches every embedding on at most `n` vertices.
//! Embeddings are deduplicated by an orientation-preserving canonical code,
//! so each one is kept once up to relabelling; mirror images are kept as
//! distinct embeddings.

use std::collections::{BTreeSet, HashSet};

use crate::embedding::{
    build_embedding, check_two_connected, compute_genus, enumerate_faces, EmbeddedGraph, FaceId,
    PlaneGraph, VertexId,
};
use crate::generators::GenerateError;
use crate::par::{self, Execution};

pub const MAX_ENUMERATION_VERTICES: usize = 8;

/// Canonical code: vertex labels assigned in BFS order along rotations, each
/// vertex contributing its degree followed by its neighbours' labels.
pub type MapCode = Vec<u8>;

/// Allowed interior-face gonalities, e.g. `{3}` or `{3, 4}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GonalityFilter(pub BTreeSet<usize>);

impl GonalityFilter {
    pub fn new(allowed: impl IntoIterator<Item = usize>) -> Self {
        GonalityFilter(allowed.into_iter().collect())
    }

    pub fn admits(&self, pg: &PlaneGraph) -> bool {
        pg.interior_faces().all(|(_, f)| self.0.contains(&f.len()))
    }
}

/// Every 2-connected plane embedding on `3..=max_vertices` vertices, one
/// representative per orientation-preserving isomorphism class.
pub struct SmallEnumeration {
    maps: Vec<EmbeddedGraph>,
    filter: Option<GonalityFilter>,
}

impl SmallEnumeration {
    pub fn maps(&self) -> &[EmbeddedGraph] {
        &self.maps
    }

    pub fn filter(&self) -> Option<&GonalityFilter> {
        self.filter.as_ref()
    }

    /// One plane graph per (embedding, outer face) pair passing the filter.
    pub fn plane_graphs(&self) -> impl Iterator<Item = PlaneGraph> + '_ {
        self.maps.iter().flat_map(move |g| self.plane_graphs_of(g))
    }

    /// The plane graphs contributed by one embedding.
    pub fn plane_graphs_of(&self, g: &EmbeddedGraph) -> Vec<PlaneGraph> {
        let faces = enumerate_faces(g).len();
        (0..faces)
            .map(|f| PlaneGraph::with_outer_face(g.clone(), FaceId(f)).expect("enumerated maps are planar"))
            .filter(|pg| self.filter.as_ref().is_none_or(|flt| flt.admits(pg)))
            .collect()
    }

    /// All plane graphs, materialised per embedding in parallel when allowed.
    pub fn collect_plane_graphs(&self, exec: Execution) -> Vec<PlaneGraph> {
        par::flat_map_collect(exec, &self.maps, |g| self.plane_graphs_of(g))
    }
}

impl<'a> IntoIterator for &'a SmallEnumeration {
    type Item = PlaneGraph;
    type IntoIter = Box<dyn Iterator<Item = PlaneGraph> + 'a>;

    fn into_iter(self) -> Self::IntoIter {
        Box::new(self.plane_graphs())
    }
}

pub fn enumerate_small(
    max_vertices: usize,
    gonality_filter: Option<GonalityFilter>,
) -> Result<SmallEnumeration, GenerateError> {
    enumerate_small_with(max_vertices, gonality_filter, Execution::Parallel)
}

pub fn enumerate_small_with(
    max_vertices: usize,
    gonality_filter: Option<GonalityFilter>,
    exec: Execution,
) -> Result<SmallEnumeration, GenerateError> {
    if max_vertices < 3 {
        return Err(GenerateError::BadSize {
            family: "enumeration",
            requirement: "max_vertices >= 3",
            got: max_vertices,
        });
    }
    if max_vertices > MAX_ENUMERATION_VERTICES {
        return Err(GenerateError::SizeTooLarge {
            limit: MAX_ENUMERATION_VERTICES,
            requested: max_vertices,
        });
    }

    let max_edges = 3 * max_vertices - 6;
    // buckets[e] holds codes of embeddings with e edges
    let mut buckets: Vec<HashSet<MapCode>> = vec![HashSet::new(); max_edges + 1];
    // a cycle on n vertices has n edges
    #[allow(clippy::needless_range_loop)]
    for n in 3..=max_vertices {
        let cycle = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
        let g = build_embedding(n, cycle)?;
        buckets[n].insert(canonical_code(&g));
    }

    let mut maps = Vec::new();
    for e in 3..=max_edges {
        let mut level: Vec<MapCode> = std::mem::take(&mut buckets[e]).into_iter().collect();
        level.sort_unstable();
        let graphs: Vec<EmbeddedGraph> = level.iter().map(|c| decode(c)).collect();
        const CHUNK: usize = 512;
        for chunk in graphs.chunks(CHUNK) {
            let children = par::flat_map_collect(exec, chunk, |g| ear_children(g, max_vertices));
            for code in children {
                let edges = (code.len() - code_vertex_count(&code)) / 2;
                buckets[edges].insert(code);
            }
        }
        maps.extend(graphs);
    }

    Ok(SmallEnumeration {
        maps,
        filter: gonality_filter,
    })
}

fn code_vertex_count(code: &[u8]) -> usize {
    let mut i = 0;
    let mut n = 0;
    while i < code.len() {
        i += 1 + code[i] as usize;
        n += 1;
    }
    n
}

/// Codes of every embedding obtained by adding one ear to `g`.
fn ear_children(g: &EmbeddedGraph, max_vertices: usize) -> Vec<MapCode> {
    let n = g.vertex_count();
    let spare = max_vertices - n;
    let faces = enumerate_faces(g);
    let mut out = HashSet::new();
    for face in faces.faces() {
        let walk: Vec<VertexId> = face.vertices().collect();
        let k = walk.len();
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (walk[i], walk[j]);
                let (before_a, before_b) = (walk[(i + k - 1) % k], walk[(j + k - 1) % k]);
                for inner in 0..=spare {
                    if inner == 0 && g.has_edge(a, b) {
                        continue;
                    }
                    let child = add_ear(g, a, before_a, b, before_b, inner);
                    debug_assert!(compute_genus(&child, &enumerate_faces(&child)) == Ok(0));
                    debug_assert!(check_two_connected(&child));
                    out.insert(canonical_code(&child));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Joins `a` and `b` by a path through `inner` new vertices, drawn inside the
/// face whose walk enters `a` from `before_a` and `b` from `before_b`.
fn add_ear(
    g: &EmbeddedGraph,
    a: VertexId,
    before_a: VertexId,
    b: VertexId,
    before_b: VertexId,
    inner: usize,
) -> EmbeddedGraph {
    let mut rotations = g.rotations().to_vec();
    let n = rotations.len();
    let path: Vec<VertexId> = std::iter::once(a)
        .chain(n..n + inner)
        .chain(std::iter::once(b))
        .collect();
    for w in 1..path.len() - 1 {
        rotations.push(vec![path[w - 1], path[w + 1]]);
    }
    let insert = |rot: &mut Vec<VertexId>, after: VertexId, new: VertexId| {
        let pos = rot.iter().position(|&x| x == after).expect("face walk predecessor");
        rot.insert(pos + 1, new);
    };
    insert(&mut rotations[a], before_a, path[1]);
    insert(&mut rotations[b], before_b, path[path.len() - 2]);
    build_embedding(rotations.len(), rotations).expect("ear keeps the graph simple")
}

/// Minimum code over all starting darts whose (tail degree, head degree) is
/// lexicographically largest.
pub fn canonical_code(g: &EmbeddedGraph) -> MapCode {
    let key = |d: usize| {
        let dart = g.dart(d);
        (g.degree(dart.tail), g.degree(dart.head))
    };
    let best_key = (0..g.dart_count()).map(key).max().expect("graph has edges");
    let mut best: Option<MapCode> = None;
    for d in (0..g.dart_count()).filter(|&d| key(d) == best_key) {
        if let Some(code) = encode_from(g, d, best.as_deref()) {
            best = Some(code);
        }
    }
    best.expect("at least one starting dart")
}

/// Code rooted at dart `start`, or `None` once it provably exceeds `bound`.
fn encode_from(g: &EmbeddedGraph, start: usize, bound: Option<&[u8]>) -> Option<MapCode> {
    const UNSET: u8 = u8::MAX;
    let n = g.vertex_count();
    let mut label = vec![UNSET; n];
    // rotation index at which each vertex's neighbour list starts
    let mut first = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut code = Vec::with_capacity(n + g.dart_count());
    let mut smaller = bound.is_none();

    let root = g.dart(start).tail;
    label[root] = 0;
    first[root] = start - g.first_dart(root);
    order.push(root);

    let push = |code: &mut MapCode, value: u8, smaller: &mut bool| -> bool {
        if !*smaller {
            let b = bound.expect("bound present until smaller")[code.len()];
            if value > b {
                return false;
            }
            if value < b {
                *smaller = true;
            }
        }
        code.push(value);
        true
    };

    let mut i = 0;
    while i < order.len() {
        let w = order[i];
        let deg = g.degree(w);
        if !push(&mut code, deg as u8, &mut smaller) {
            return None;
        }
        for k in 0..deg {
            let idx = g.first_dart(w) + (first[w] + k) % deg;
            let x = g.dart(idx).head;
            if label[x] == UNSET {
                label[x] = order.len() as u8;
                first[x] = g.twin(idx) - g.first_dart(x);
                order.push(x);
            }
            if !push(&mut code, label[x], &mut smaller) {
                return None;
            }
        }
        i += 1;
    }
    if smaller {
        Some(code)
    } else {
        None
    }
}

/// Rebuilds the rotation system a code describes (vertex `i` = label `i`).
pub fn decode(code: &[u8]) -> EmbeddedGraph {
    let mut rotations = Vec::new();
    let mut i = 0;
    while i < code.len() {
        let deg = code[i] as usize;
        rotations.push(code[i + 1..i + 1 + deg].iter().map(|&x| x as usize).collect());
        i += 1 + deg;
    }
    build_embedding(rotations.len(), rotations).expect("valid canonical code")
}
