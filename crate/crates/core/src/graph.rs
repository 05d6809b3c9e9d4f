//! Core graph and labeling representations.
//!
//! A [`BipartiteGraph`] is a k-regular bipartite graph with parts `A` and `B`
//! of equal size `n`. Edges carry stable ids; a top-level graph uses ids
//! `0..k*n`, while subgraphs produced by factor operations keep the ids of
//! their parent. A [`Labeling`] assigns the labels `1..=k*n` to edge ids and
//! may be partial while a construction is in progress.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// An edge between `a` in part A and `b` in part B, with a stable id.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: usize,
    pub a: usize,
    pub b: usize,
}

/// A k-regular bipartite graph on parts of size `n`.
///
/// Immutable after construction; all invariants (regularity, simplicity,
/// edge count) are validated by the constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n: usize,
    k: usize,
    edges: Vec<Edge>,
}

impl BipartiteGraph {
    /// Builds a validated top-level graph. Edge ids are assigned in input
    /// order, so id `i` is `pairs[i]`. Requires `k >= 2`.
    pub fn new(n: usize, k: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if k < 2 {
            return Err(Error::DegreeTooSmall { k });
        }
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(id, &(a, b))| Edge { id, a, b })
            .collect();
        Self::from_edges(n, k, edges)
    }

    /// Builds a graph from edges that already carry ids (used for factor
    /// subgraphs, where ids must survive). Allows `k = 1`.
    pub fn from_edges(n: usize, k: usize, edges: Vec<Edge>) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::EdgeCountMismatch {
                expected: k * n,
                found: edges.len(),
            });
        }
        if edges.len() != k * n {
            return Err(Error::EdgeCountMismatch {
                expected: k * n,
                found: edges.len(),
            });
        }
        let mut deg_a = vec![0usize; n];
        let mut deg_b = vec![0usize; n];
        let mut seen = BTreeSet::new();
        for e in &edges {
            if e.a >= n {
                return Err(Error::VertexOutOfRange {
                    line: e.id + 2,
                    value: e.a,
                    n,
                });
            }
            if e.b >= n {
                return Err(Error::VertexOutOfRange {
                    line: e.id + 2,
                    value: e.b,
                    n,
                });
            }
            if !seen.insert((e.a, e.b)) {
                return Err(Error::DuplicateEdge { a: e.a, b: e.b });
            }
            deg_a[e.a] += 1;
            deg_b[e.b] += 1;
        }
        for (v, &d) in deg_a.iter().enumerate() {
            if d != k {
                return Err(Error::NotRegular {
                    vertex: format!("a{v}"),
                    degree: d,
                    expected: k,
                });
            }
        }
        for (v, &d) in deg_b.iter().enumerate() {
            if d != k {
                return Err(Error::NotRegular {
                    vertex: format!("b{v}"),
                    degree: d,
                    expected: k,
                });
            }
        }
        Ok(Self { n, k, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Incident edges per A-vertex, in edge-id order.
    pub fn adjacency_a(&self) -> Vec<Vec<Edge>> {
        let mut adj = vec![Vec::with_capacity(self.k); self.n];
        for e in &self.edges {
            adj[e.a].push(*e);
        }
        for list in &mut adj {
            list.sort_by_key(|e| e.id);
        }
        adj
    }

    /// Incident edges per B-vertex, in edge-id order.
    pub fn adjacency_b(&self) -> Vec<Vec<Edge>> {
        let mut adj = vec![Vec::with_capacity(self.k); self.n];
        for e in &self.edges {
            adj[e.b].push(*e);
        }
        for list in &mut adj {
            list.sort_by_key(|e| e.id);
        }
        adj
    }

    /// True when the edge ids are exactly `0..k*n`, i.e. this is a top-level
    /// graph rather than a factor subgraph.
    pub fn has_contiguous_ids(&self) -> bool {
        let mut ids: Vec<usize> = self.edges.iter().map(|e| e.id).collect();
        ids.sort_unstable();
        ids.iter().copied().eq(0..self.edges.len())
    }
}

/// An assignment of labels to edge ids; partial during staged construction.
///
/// Labels are pairwise distinct at all times. A labeling is complete for a
/// graph when every edge carries a label and the labels are exactly
/// `1..=|E|`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Labeling {
    assignment: BTreeMap<usize, u64>,
    used: BTreeSet<u64>,
}

impl Labeling {
    pub fn new() -> Self {
        Self::default()
    }

    /// Assigns `label` to `edge`; rejects reuse of either.
    pub fn assign(&mut self, edge: usize, label: u64) -> Result<()> {
        if self.assignment.contains_key(&edge) {
            return Err(Error::EdgeAlreadyLabeled { edge });
        }
        if !self.used.insert(label) {
            return Err(Error::DuplicateLabel { label });
        }
        self.assignment.insert(edge, label);
        Ok(())
    }

    pub fn get(&self, edge: usize) -> Option<u64> {
        self.assignment.get(&edge).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Iterates `(edge, label)` pairs in edge-id order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.assignment.iter().map(|(&e, &l)| (e, l))
    }

    /// Checks that this labeling is a bijection from the edges of `graph`
    /// onto `1..=|E|`.
    pub fn check_complete(&self, graph: &BipartiteGraph) -> Result<()> {
        let m = graph.edge_count() as u64;
        if self.assignment.len() != graph.edge_count() {
            return Err(Error::NotBijective(format!(
                "{} of {} edges labeled",
                self.assignment.len(),
                graph.edge_count()
            )));
        }
        for e in graph.edges() {
            match self.get(e.id) {
                None => {
                    return Err(Error::NotBijective(format!("edge {} unlabeled", e.id)));
                }
                Some(l) if l < 1 || l > m => {
                    return Err(Error::NotBijective(format!(
                        "label {l} on edge {} outside 1..={m}",
                        e.id
                    )));
                }
                Some(_) => {}
            }
        }
        // distinctness is maintained by `assign`; with |E| labels in range it
        // follows that the map is onto
        Ok(())
    }

    pub fn is_complete(&self, graph: &BipartiteGraph) -> bool {
        self.check_complete(graph).is_ok()
    }

    /// Merges another labeling (e.g. a labeled factor) into this one.
    pub fn absorb(&mut self, other: &Labeling) -> Result<()> {
        for (edge, label) in other.iter() {
            self.assign(edge, label)?;
        }
        Ok(())
    }

    /// Labels in edge-id order for a top-level graph, for serialization.
    pub fn dense(&self, graph: &BipartiteGraph) -> Result<Vec<u64>> {
        self.check_complete(graph)?;
        Ok((0..graph.edge_count())
            .map(|id| self.get(id).expect("complete labeling"))
            .collect())
    }
}

/// Integer vertex-sums over both parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumProfile {
    pub sums_a: Vec<u64>,
    pub sums_b: Vec<u64>,
}

impl SumProfile {
    /// Sums over the labeled subset of edges only (partial sums).
    pub fn partial(graph: &BipartiteGraph, labeling: &Labeling) -> Self {
        let mut sums_a = vec![0u64; graph.n()];
        let mut sums_b = vec![0u64; graph.n()];
        for e in graph.edges() {
            if let Some(l) = labeling.get(e.id) {
                sums_a[e.a] += l;
                sums_b[e.b] += l;
            }
        }
        Self { sums_a, sums_b }
    }
}
