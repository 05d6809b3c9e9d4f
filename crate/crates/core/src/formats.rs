//! Text serialization: edge-list, JSON, and DOT.
//!
//! Edge-list format: first line `bipartite <n> <k>`, then exactly `k*n`
//! lines `<a> <b>` with 0-based indices. The JSON schema is
//! `{"n", "k", "edges": [[a, b], ...], "labels": [...], "sums_A": [...],
//! "sums_B": [...]}` with the last three fields present only when a
//! complete labeling is supplied.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Labeling, SumProfile};

/// Output format selector for [`export`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Json,
    Dot,
}

/// JSON document for a graph and optional labeling, mirroring the edge-list
/// content plus labels and vertex-sum profile.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub k: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<u64>>,
    #[serde(rename = "sums_A", skip_serializing_if = "Option::is_none")]
    pub sums_a: Option<Vec<u64>>,
    #[serde(rename = "sums_B", skip_serializing_if = "Option::is_none")]
    pub sums_b: Option<Vec<u64>>,
}

impl GraphDocument {
    pub fn build(graph: &BipartiteGraph, labeling: Option<&Labeling>) -> Result<Self> {
        let labels = match labeling {
            Some(l) => Some(l.dense(graph)?),
            None => None,
        };
        let sums = labeling.map(|l| SumProfile::partial(graph, l));
        Ok(Self {
            n: graph.n(),
            k: graph.k(),
            edges: graph.edges().iter().map(|e| [e.a, e.b]).collect(),
            labels,
            sums_a: sums.as_ref().map(|s| s.sums_a.clone()),
            sums_b: sums.map(|s| s.sums_b),
        })
    }
}

/// Parses the edge-list format into a validated graph.
pub fn parse_graph(text: &str) -> Result<BipartiteGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::MalformedHeader("empty input".into()))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("bipartite") {
        return Err(Error::MalformedHeader(header.trim().into()));
    }
    let n = parse_usize(parts.next(), 1, header)?;
    let k = parse_usize(parts.next(), 1, header)?;
    if parts.next().is_some() {
        return Err(Error::MalformedHeader(header.trim().into()));
    }
    if k < 2 {
        return Err(Error::DegreeTooSmall { k });
    }

    let mut pairs = Vec::with_capacity(k * n);
    for (idx, line) in lines {
        let lineno = idx + 1;
        let mut fields = line.split_whitespace();
        let a = parse_field(fields.next(), lineno, line)?;
        let b = parse_field(fields.next(), lineno, line)?;
        if fields.next().is_some() {
            return Err(Error::InvalidInteger {
                line: lineno,
                text: line.trim().into(),
            });
        }
        pairs.push((a, b));
    }
    if pairs.len() != k * n {
        return Err(Error::EdgeCountMismatch {
            expected: k * n,
            found: pairs.len(),
        });
    }
    BipartiteGraph::new(n, k, &pairs)
}

fn parse_usize(field: Option<&str>, line: usize, context: &str) -> Result<usize> {
    let text = field.ok_or_else(|| Error::MalformedHeader(context.trim().into()))?;
    text.parse().map_err(|_| Error::InvalidInteger {
        line,
        text: text.into(),
    })
}

fn parse_field(field: Option<&str>, line: usize, context: &str) -> Result<usize> {
    let text = field.ok_or_else(|| Error::InvalidInteger {
        line,
        text: context.trim().into(),
    })?;
    text.parse().map_err(|_| Error::InvalidInteger {
        line,
        text: text.into(),
    })
}

/// Serializes a graph (and optionally a complete labeling) to `format`.
///
/// Deterministic: identical inputs yield byte-identical output.
pub fn export(
    graph: &BipartiteGraph,
    labeling: Option<&Labeling>,
    format: Format,
) -> Result<String> {
    if let Some(l) = labeling {
        if !l.is_complete(graph) {
            return Err(Error::PartialLabeling);
        }
    }
    match format {
        Format::EdgeList => Ok(export_edgelist(graph)),
        Format::Json => {
            let doc = GraphDocument::build(graph, labeling)?;
            Ok(serde_json::to_string_pretty(&doc).expect("serializable document"))
        }
        Format::Dot => Ok(export_dot(graph, labeling)),
    }
}

fn export_edgelist(graph: &BipartiteGraph) -> String {
    let mut out = format!("bipartite {} {}\n", graph.n(), graph.k());
    for e in graph.edges() {
        out.push_str(&format!("{} {}\n", e.a, e.b));
    }
    out
}

fn export_dot(graph: &BipartiteGraph, labeling: Option<&Labeling>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..graph.n() {
        out.push_str(&format!("  a{v};\n"));
    }
    for v in 0..graph.n() {
        out.push_str(&format!("  b{v};\n"));
    }
    for e in graph.edges() {
        match labeling.and_then(|l| l.get(e.id)) {
            Some(label) => {
                out.push_str(&format!("  a{} -- b{} [label=\"{}\"];\n", e.a, e.b, label))
            }
            None => out.push_str(&format!("  a{} -- b{};\n", e.a, e.b)),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const C4_TEXT: &str = "bipartite 2 2\n0 0\n0 1\n1 1\n1 0\n";

    #[test]
    fn parse_c4() {
        let g = parse_graph(C4_TEXT).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.k(), 2);
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn parse_k33() {
        let mut text = String::from("bipartite 3 3\n");
        for a in 0..3 {
            for b in 0..3 {
                text.push_str(&format!("{a} {b}\n"));
            }
        }
        let g = parse_graph(&text).unwrap();
        assert_eq!(g.edge_count(), 9);
    }

    #[test]
    fn parse_duplicate_edge() {
        let text = "bipartite 2 2\n0 0\n0 0\n1 1\n1 0\n";
        assert_eq!(
            parse_graph(text).unwrap_err(),
            Error::DuplicateEdge { a: 0, b: 0 }
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_graph("bipartite 2\n"),
            Err(Error::MalformedHeader(_))
        ));
        assert!(matches!(
            parse_graph("graph 2 2\n"),
            Err(Error::MalformedHeader(_))
        ));
        assert_eq!(
            parse_graph("bipartite 2 1\n0 0\n1 1\n").unwrap_err(),
            Error::DegreeTooSmall { k: 1 }
        );
        assert!(matches!(
            parse_graph("bipartite 2 2\n0 5\n0 1\n1 1\n1 0\n"),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            parse_graph("bipartite 2 2\n0 0\n0 1\n"),
            Err(Error::EdgeCountMismatch { .. })
        ));
    }

    #[test]
    fn edgelist_round_trip() {
        let g = parse_graph(C4_TEXT).unwrap();
        let text = export(&g, None, Format::EdgeList).unwrap();
        let g2 = parse_graph(&text).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn json_sums_total_matches_handshake() {
        let g = parse_graph(C4_TEXT).unwrap();
        let mut l = Labeling::new();
        for (edge, label) in [(0, 1), (1, 3), (2, 4), (3, 2)] {
            l.assign(edge, label).unwrap();
        }
        let doc = GraphDocument::build(&g, Some(&l)).unwrap();
        let total_a: u64 = doc.sums_a.as_ref().unwrap().iter().sum();
        let total_b: u64 = doc.sums_b.as_ref().unwrap().iter().sum();
        // both parts see every label once: 2 * (1+2+3+4) = 20 in total
        assert_eq!(total_a + total_b, 20);
        assert_eq!(total_a, 10);
        assert_eq!(total_b, 10);
    }

    #[test]
    fn dot_annotates_all_edges() {
        let mut text = String::from("bipartite 3 3\n");
        for a in 0..3 {
            for b in 0..3 {
                text.push_str(&format!("{a} {b}\n"));
            }
        }
        let g = parse_graph(&text).unwrap();
        let mut l = Labeling::new();
        for id in 0..9 {
            l.assign(id, id as u64 + 1).unwrap();
        }
        let dot = export(&g, Some(&l), Format::Dot).unwrap();
        assert_eq!(dot.matches("label=").count(), 9);
        assert_eq!(dot.matches(";\n").count(), 6 + 9);
    }

    #[test]
    fn export_rejects_partial_labeling() {
        let g = parse_graph(C4_TEXT).unwrap();
        let mut l = Labeling::new();
        l.assign(0, 1).unwrap();
        assert_eq!(
            export(&g, Some(&l), Format::Json).unwrap_err(),
            Error::PartialLabeling
        );
    }
}
