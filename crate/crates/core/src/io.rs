//! Embedding documents and structured reports.
//!
//! Embedding documents are line oriented ASCII:
//!
//! ```text
//! pg 1
//! 3
//! 0: 1 2
//! 1: 2 0
//! 2: 0 1
//! outer: 0 1
//! ```
//!
//! The header names format version 1, the second line gives the vertex count
//! `N`, and `N` rotation lines follow in vertex order, each listing neighbours
//! in cyclic order. The optional `outer: u v` line makes the face containing
//! dart `(u, v)` exterior; without it the longest face is used. Lines starting
//! with `#` and blank lines are ignored.

use serde::Serialize;
use thiserror::Error;

use crate::census::{
    classify_vertices, degree_census, gonality_histogram, verify_counting_identities, Census,
    CountingIdentity, GonalityHistogram,
};
use crate::classes::{classify, ClassReport, Gamma2ScanInput};
use crate::embedding::{
    build_embedding, compute_genus, euler_characteristic, Dart, EmbeddingError, PlaneGraph,
    VertexId,
};
use crate::relations::{evaluate_catalog_with, RelationReport};

pub const FORMAT_HEADER: &str = "pg 1";
pub const REPORT_SCHEMA: &str = "planar-euler.report/1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: EmbeddingError,
    },
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { line, .. } | ParseError::AtLine { line, .. } => Some(*line),
            ParseError::Embedding(_) => None,
        }
    }

    pub fn embedding_error(&self) -> Option<&EmbeddingError> {
        match self {
            ParseError::AtLine { source, .. } | ParseError::Embedding(source) => Some(source),
            ParseError::Syntax { .. } => None,
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected {what}, found `{token}`")))
}

pub fn parse_embedding(text: &str) -> Result<PlaneGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_line, header) = lines.next().ok_or_else(|| syntax(1, "empty document"))?;
    if header.trim() != FORMAT_HEADER {
        return Err(syntax(header_line, format!("expected header `{FORMAT_HEADER}`")));
    }
    let (count_line, count) = lines
        .next()
        .ok_or_else(|| syntax(header_line + 1, "missing vertex count"))?;
    let n = parse_usize(count_line, count.trim(), "vertex count")?;

    let mut rotations = Vec::with_capacity(n);
    let mut vertex_lines = Vec::with_capacity(n);
    for expected in 0..n {
        let (line, text) = lines
            .next()
            .ok_or_else(|| syntax(count_line + expected + 1, format!("missing rotation line for vertex {expected}")))?;
        let (index, rest) = text
            .split_once(':')
            .ok_or_else(|| syntax(line, "expected `i: n1 n2 ...`"))?;
        let index = parse_usize(line, index.trim(), "vertex index")?;
        if index != expected {
            return Err(syntax(line, format!("expected vertex {expected}, found {index}")));
        }
        let rot = rest
            .split_whitespace()
            .map(|t| parse_usize(line, t, "neighbour id"))
            .collect::<Result<Vec<_>, _>>()?;
        rotations.push(rot);
        vertex_lines.push(line);
    }

    let mut outer = None;
    if let Some((line, text)) = lines.next() {
        let rest = text
            .strip_prefix("outer:")
            .ok_or_else(|| syntax(line, "expected `outer: u v` or end of document"))?;
        let ids: Vec<_> = rest
            .split_whitespace()
            .map(|t| parse_usize(line, t, "vertex id"))
            .collect::<Result<_, _>>()?;
        match ids.as_slice() {
            &[u, v] => outer = Some((line, Dart::new(u, v))),
            _ => return Err(syntax(line, "outer directive takes exactly two vertex ids")),
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "unexpected content after the document"));
    }

    let at_vertex = |v: VertexId, source: EmbeddingError| match vertex_lines.get(v) {
        Some(&line) => ParseError::AtLine { line, source },
        None => ParseError::Embedding(source),
    };
    let g = build_embedding(n, rotations).map_err(|e| match e {
        EmbeddingError::LoopEdge { vertex }
        | EmbeddingError::DuplicateNeighbor { vertex, .. }
        | EmbeddingError::NeighborOutOfRange { vertex, .. }
        | EmbeddingError::Disconnected { vertex } => at_vertex(vertex, e),
        EmbeddingError::AsymmetricAdjacency { from, .. } => at_vertex(from, e),
        other => ParseError::Embedding(other),
    })?;

    match outer {
        Some((line, dart)) => PlaneGraph::with_outer_dart(g, dart).map_err(|e| match e {
            EmbeddingError::BadDart(_) => ParseError::AtLine { line, source: e },
            other => ParseError::Embedding(other),
        }),
        None => Ok(PlaneGraph::new(g)?),
    }
}

/// Writes the document for `pg`, always including the outer directive.
pub fn serialize_embedding(pg: &PlaneGraph) -> String {
    use std::fmt::Write;

    let g = pg.embedding();
    let mut out = String::new();
    let _ = writeln!(out, "{FORMAT_HEADER}");
    let _ = writeln!(out, "{}", g.vertex_count());
    for v in 0..g.vertex_count() {
        let _ = write!(out, "{v}:");
        for w in g.rotation(v) {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    let outer = pg.outer_dart();
    let _ = writeln!(out, "outer: {} {}", outer.tail, outer.head);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub genus: usize,
    pub two_connected: bool,
    pub outer_face: usize,
    pub outer_face_length: usize,
    pub outer_dart: [VertexId; 2],
    pub interior_vertices: Vec<VertexId>,
    pub exterior_vertices: Vec<VertexId>,
}

pub fn summarize(pg: &PlaneGraph) -> GraphSummary {
    let partition = classify_vertices(pg);
    let outer = pg.outer_dart();
    GraphSummary {
        vertices: pg.vertex_count(),
        edges: pg.edge_count(),
        faces: pg.face_count(),
        euler_characteristic: euler_characteristic(pg.embedding(), pg.faces()),
        genus: compute_genus(pg.embedding(), pg.faces()).expect("plane graph has genus 0"),
        two_connected: pg.is_two_connected(),
        outer_face: pg.outer_face().0,
        outer_face_length: pg.outer().len(),
        outer_dart: [outer.tail, outer.head],
        interior_vertices: partition.interior,
        exterior_vertices: partition.exterior,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountingEntry {
    pub identity: CountingIdentity,
    pub applicable: bool,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub residual: Option<i64>,
    pub reason: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanEntry {
    pub is_gamma2: bool,
    pub row_visits: usize,
    pub agrees_with_classify: bool,
}

/// Everything known about one plane graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub graph: GraphSummary,
    pub census: Census,
    pub gonality: GonalityHistogram,
    pub counting: Vec<CountingEntry>,
    pub relations: Vec<RelationReport>,
    pub classes: ClassReport,
    pub gamma2_scan: ScanEntry,
}

pub fn build_report(pg: &PlaneGraph) -> Report {
    let graph = summarize(pg);
    let census = degree_census(pg);
    let gonality = gonality_histogram(pg);
    let counting = verify_counting_identities(pg, &census, &gonality)
        .into_iter()
        .map(|v| match v.outcome {
            Ok(b) => CountingEntry {
                identity: v.identity,
                applicable: true,
                lhs: Some(b.lhs),
                rhs: Some(b.rhs),
                residual: Some(b.residual()),
                reason: None,
            },
            Err(e) => CountingEntry {
                identity: v.identity,
                applicable: false,
                lhs: None,
                rhs: None,
                residual: None,
                reason: Some(e.to_string()),
            },
        })
        .collect();
    let relations = evaluate_catalog_with(&census, &gonality, graph.two_connected);
    let classes = classify(pg);
    let scan = Gamma2ScanInput::from_plane_graph(pg).scan();
    Report {
        schema: REPORT_SCHEMA,
        gamma2_scan: ScanEntry {
            is_gamma2: scan.is_gamma2,
            row_visits: scan.row_visits,
            agrees_with_classify: scan.is_gamma2 == classes.gamma2,
        },
        graph,
        census,
        gonality,
        counting,
        relations,
        classes,
    }
}

/// Pretty JSON with fields in declaration order.
pub fn serialize_report(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report is plain data");
    s.push('\n');
    s
}
