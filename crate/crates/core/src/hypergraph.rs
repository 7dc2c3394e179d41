//! Hypergraphs on the vertex set `[w] = {1, ..., w}` and their text/JSON formats.
//!
//! Text format: a header line `w h` followed by `h` lines of space-separated
//! vertex numbers. JSON format: `{"w": 14, "edges": [[3, 4, 9], ...]}`.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::vertex_set::{Vertex, VertexSet};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed header: expected `w h`, found {0:?}")]
    MalformedHeader(String),
    #[error("line {line}: invalid vertex token {token:?}")]
    BadVertex { line: usize, token: String },
    #[error("line {line}: vertex {vertex} out of range 1..={w}")]
    VertexOutOfRange { line: usize, vertex: usize, w: usize },
    #[error("line {line}: empty edge")]
    EmptyEdge { line: usize },
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCount { expected: usize, found: usize },
    #[error("invalid JSON hypergraph: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("vertex count must be positive")]
    NoVertices,
    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },
    #[error("edge {index} contains vertex {vertex} outside 1..={w}")]
    VertexOutOfRange { index: usize, vertex: usize, w: usize },
}

/// A hypergraph `{H_1, ..., H_h}` on `[w]`.
///
/// Edge order is significant: the engine imposes edges in this order.
/// Duplicate edges and nested edges are kept as given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    w: usize,
    edges: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct JsonHypergraph {
    w: usize,
    edges: Vec<Vec<Vertex>>,
}

impl Hypergraph {
    pub fn new(w: usize, edges: Vec<VertexSet>) -> Result<Self, HypergraphError> {
        if w == 0 {
            return Err(HypergraphError::NoVertices);
        }
        for (index, edge) in edges.iter().enumerate() {
            if edge.is_empty() {
                return Err(HypergraphError::EmptyEdge { index });
            }
            if let Some(vertex) = edge.iter().find(|&v| v == 0 || v > w) {
                return Err(HypergraphError::VertexOutOfRange { index, vertex, w });
            }
        }
        Ok(Hypergraph { w, edges })
    }

    /// Convenience constructor from vertex lists; panics on invalid input.
    pub fn from_edges<E, I>(w: usize, edges: E) -> Self
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let edges = edges.into_iter().map(|e| e.into_iter().collect()).collect();
        Hypergraph::new(w, edges).expect("invalid hypergraph")
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn h(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// Largest edge size `d`, or 0 without edges.
    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// True iff `x` meets every edge.
    pub fn is_transversal(&self, x: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.intersects(x))
    }

    /// Same hypergraph with edges stably sorted by ascending size.
    pub fn sorted_by_size(&self) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.sort_by_key(VertexSet::len);
        Hypergraph { w: self.w, edges }
    }

    /// Parses the plain text format.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.lines().enumerate().skip_while(|(_, l)| l.trim().is_empty());
        let (_, header) = lines
            .next()
            .ok_or_else(|| ParseError::MalformedHeader(String::new()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| ParseError::MalformedHeader(header.to_string()))?;
        let (w, h) = match nums[..] {
            [w, h] if w > 0 => (w, h),
            _ => return Err(ParseError::MalformedHeader(header.to_string())),
        };

        let mut edges = Vec::with_capacity(h);
        for (idx, line) in lines {
            let line_no = idx + 1;
            if edges.len() == h {
                if line.trim().is_empty() {
                    continue;
                }
                return Err(ParseError::EdgeCount { expected: h, found: h + 1 });
            }
            let mut edge = VertexSet::new();
            for token in line.split_whitespace() {
                let vertex: usize = token
                    .parse()
                    .map_err(|_| ParseError::BadVertex { line: line_no, token: token.to_string() })?;
                if vertex == 0 || vertex > w {
                    return Err(ParseError::VertexOutOfRange { line: line_no, vertex, w });
                }
                edge.insert(vertex);
            }
            if edge.is_empty() {
                return Err(ParseError::EmptyEdge { line: line_no });
            }
            edges.push(edge);
        }
        if edges.len() != h {
            return Err(ParseError::EdgeCount { expected: h, found: edges.len() });
        }
        Ok(Hypergraph { w, edges })
    }

    pub fn parse_json(text: &str) -> Result<Self, ParseError> {
        let raw: JsonHypergraph = serde_json::from_str(text)?;
        let edges = raw.edges.into_iter().map(VertexSet::from_iter).collect();
        Hypergraph::new(raw.w, edges).map_err(|e| match e {
            HypergraphError::NoVertices => ParseError::MalformedHeader(format!("w = {}", raw.w)),
            HypergraphError::EmptyEdge { index } => ParseError::EmptyEdge { line: index + 1 },
            HypergraphError::VertexOutOfRange { index, vertex, w } => {
                ParseError::VertexOutOfRange { line: index + 1, vertex, w }
            }
        })
    }

    /// Reads a hypergraph file; `.json` files use the JSON format.
    pub fn load(path: impl AsRef<Path>) -> Result<Self, ParseError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)
            .map_err(|source| ParseError::Io { path: path.display().to_string(), source })?;
        if path.extension().is_some_and(|ext| ext.eq_ignore_ascii_case("json")) {
            Hypergraph::parse_json(&text)
        } else {
            Hypergraph::parse(&text)
        }
    }

    pub fn to_json(&self) -> String {
        let raw = JsonHypergraph { w: self.w, edges: self.edges.iter().map(VertexSet::to_vec).collect() };
        serde_json::to_string(&raw).expect("hypergraph serializes")
    }

    /// `H' = {H_i ∩ A}`, on the vertex set `a` with the original labels: the
    /// transversals of `H'` inside `a` are exactly the transversals of `self`
    /// contained in `a`. Returns `None` when some edge misses `a` entirely,
    /// in which case no subset of `a` is a transversal.
    pub fn subset_reduced(&self, a: &VertexSet) -> Option<Hypergraph> {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let cut = e.intersection(a);
                (!cut.is_empty()).then_some(cut)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Hypergraph { w: self.w, edges })
    }

    /// `H'' = {H_i : H_i ∩ A = ∅}`. The transversals of `self` containing `a`
    /// are exactly `a ∪ Y` for `Y` a transversal of `H''`.
    pub fn superset_reduced(&self, a: &VertexSet) -> Hypergraph {
        let edges = self.edges.iter().filter(|e| e.is_disjoint(a)).cloned().collect();
        Hypergraph { w: self.w, edges }
    }
}

/// Canonical text rendering, accepted by [`Hypergraph::parse`].
impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.w, self.edges.len())?;
        for edge in &self.edges {
            writeln!(f, "{edge}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "14 6\n3 4 9\n5 10\n6 7 11 12\n8 13 14\n1 2 3 4 5 6 7 8\n3 4 5 8 12 13\n";

    fn example() -> Hypergraph {
        Hypergraph::parse(EXAMPLE).unwrap()
    }

    #[test]
    fn parses_example_system() {
        let h = example();
        assert_eq!(h.w(), 14);
        assert_eq!(h.h(), 6);
        assert_eq!(h.edges()[0], VertexSet::from([3, 4, 9]));
        assert_eq!(h.edges()[5], VertexSet::from([3, 4, 5, 8, 12, 13]));
        assert_eq!(h.max_edge_size(), 8);
    }

    #[test]
    fn parses_edgeless_system() {
        let h = Hypergraph::parse("3 0\n").unwrap();
        assert_eq!((h.w(), h.h()), (3, 0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Hypergraph::parse("4 1\n2 5\n"),
            Err(ParseError::VertexOutOfRange { vertex: 5, w: 4, .. })
        ));
        assert!(matches!(Hypergraph::parse("4 2\n1\n\n"), Err(ParseError::EmptyEdge { line: 3 })));
        assert!(matches!(Hypergraph::parse("4\n"), Err(ParseError::MalformedHeader(_))));
        assert!(matches!(Hypergraph::parse("0 0\n"), Err(ParseError::MalformedHeader(_))));
        assert!(matches!(Hypergraph::parse("x 1\n1\n"), Err(ParseError::MalformedHeader(_))));
        assert!(matches!(Hypergraph::parse("4 1\n1 b\n"), Err(ParseError::BadVertex { .. })));
        assert!(matches!(Hypergraph::parse("4 2\n1\n"), Err(ParseError::EdgeCount { expected: 2, found: 1 })));
        assert!(matches!(Hypergraph::parse("4 1\n1\n2\n"), Err(ParseError::EdgeCount { .. })));
    }

    #[test]
    fn collapses_duplicate_vertices_and_keeps_duplicate_edges() {
        let h = Hypergraph::parse("3 2\n2 2 1\n1 2\n").unwrap();
        assert_eq!(h.edges()[0], VertexSet::from([1, 2]));
        assert_eq!(h.edges()[0], h.edges()[1]);
    }

    #[test]
    fn json_format() {
        let h = Hypergraph::parse_json(r#"{"w": 14, "edges": [[3,4,9],[5,10],[6,7,11,12],[8,13,14],[1,2,3,4,5,6,7,8],[3,4,5,8,12,13]]}"#)
            .unwrap();
        assert_eq!(h, example());
        assert_eq!(Hypergraph::parse_json(&h.to_json()).unwrap(), h);
        assert!(matches!(Hypergraph::parse_json(r#"{"w": 2, "edges": [[]]}"#), Err(ParseError::EmptyEdge { .. })));
    }

    #[test]
    fn render_round_trip() {
        let h = example();
        assert_eq!(h.to_string(), EXAMPLE);
        assert_eq!(Hypergraph::parse(&h.to_string()).unwrap(), h);
    }

    #[test]
    fn subset_reduction() {
        let h = example();
        assert_eq!(h.subset_reduced(&VertexSet::full(14)), Some(h.clone()));
        // H_3 = {6,7,11,12} misses A
        assert_eq!(h.subset_reduced(&VertexSet::from([3, 4, 5, 8, 9, 10, 13])), None);

        let mut a = VertexSet::full(14);
        a.remove(7);
        let reduced = h.subset_reduced(&a).unwrap();
        assert_eq!(reduced.edges()[2], VertexSet::from([6, 11, 12]));
        assert_eq!(reduced.edges()[4], VertexSet::from([1, 2, 3, 4, 5, 6, 8]));
        assert_eq!(reduced.edges()[0], h.edges()[0]);
    }

    #[test]
    fn superset_reduction() {
        let h = example();
        let reduced = h.superset_reduced(&VertexSet::from([8, 9]));
        assert_eq!(reduced.edges(), &[VertexSet::from([5, 10]), VertexSet::from([6, 7, 11, 12])]);
        assert_eq!(h.superset_reduced(&VertexSet::new()), h);
        assert_eq!(h.superset_reduced(&VertexSet::full(14)).h(), 0);
    }
}
