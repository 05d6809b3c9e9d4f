//! Perfect matchings, 1-factorizations, factor unions, and cycle
//! decompositions of 2-factors.
//!
//! By Hall's marriage theorem every d-regular bipartite graph has a
//! perfect matching; peeling one matching at a time decomposes a k-regular
//! graph into k 1-factors. All operations are deterministic: vertices and
//! adjacency are scanned in index order.

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge};

/// A set of pairwise vertex-disjoint edges, stored as sorted edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<usize>,
}

impl Matching {
    pub fn edge_ids(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// An ordered list of k pairwise edge-disjoint perfect matchings whose union
/// is the edge set of the factorized graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<Matching>,
}

impl Factorization {
    pub fn factors(&self) -> &[Matching] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// An even cycle recorded with a traversal orientation: the cycle visits
/// `a[0], b[0], a[1], b[1], ..., a[p-1], b[p-1]` and back to `a[0]`, with
/// `edges[2i]` joining `a[i]` to `b[i]` and `edges[2i+1]` joining `b[i]` to
/// `a[i+1 mod p]`. Traversal starts at the lowest A-vertex of the cycle and
/// first follows its lowest incident edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedCycle {
    pub a_vertices: Vec<usize>,
    pub b_vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl OrientedCycle {
    /// Number of A-vertices on the cycle; the cycle length is twice this.
    pub fn half_len(&self) -> usize {
        self.a_vertices.len()
    }
}

/// The even cycles partitioning the edge set of a 2-factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<OrientedCycle>,
}

/// Finds a perfect matching in a d-regular bipartite graph by augmenting
/// paths (Kuhn's algorithm). Regularity guarantees existence.
pub fn find_perfect_matching(graph: &BipartiteGraph) -> Result<Matching> {
    let n = graph.n();
    let adj = graph.adjacency_a();
    let mut match_b: Vec<Option<usize>> = vec![None; n]; // b -> a
    let mut edge_b: Vec<Option<Edge>> = vec![None; n];

    fn augment(
        a: usize,
        adj: &[Vec<Edge>],
        visited: &mut [bool],
        match_b: &mut [Option<usize>],
        edge_b: &mut [Option<Edge>],
    ) -> bool {
        for e in &adj[a] {
            if visited[e.b] {
                continue;
            }
            visited[e.b] = true;
            let free = match match_b[e.b] {
                None => true,
                Some(a2) => augment(a2, adj, visited, match_b, edge_b),
            };
            if free {
                match_b[e.b] = Some(a);
                edge_b[e.b] = Some(*e);
                return true;
            }
        }
        false
    }

    for a in 0..n {
        let mut visited = vec![false; n];
        if !augment(a, &adj, &mut visited, &mut match_b, &mut edge_b) {
            return Err(Error::NotRegular {
                vertex: format!("a{a}"),
                degree: adj[a].len(),
                expected: graph.k(),
            });
        }
    }

    let mut edges: Vec<usize> = edge_b
        .into_iter()
        .map(|e| e.expect("all B-vertices matched").id)
        .collect();
    edges.sort_unstable();
    Ok(Matching { edges })
}

/// Decomposes a k-regular bipartite graph into k perfect matchings by
/// peeling one matching at a time from the remaining regular graph.
pub fn one_factorize(graph: &BipartiteGraph) -> Result<Factorization> {
    let mut factors = Vec::with_capacity(graph.k());
    let mut remaining = graph.clone();
    for round in 0..graph.k() {
        let matching = find_perfect_matching(&remaining)?;
        if round + 1 < graph.k() {
            let taken: std::collections::BTreeSet<usize> = matching.edges.iter().copied().collect();
            let rest: Vec<Edge> = remaining
                .edges()
                .iter()
                .copied()
                .filter(|e| !taken.contains(&e.id))
                .collect();
            remaining = BipartiteGraph::from_edges(graph.n(), graph.k() - round - 1, rest)?;
        }
        factors.push(matching);
    }
    Ok(Factorization { factors })
}

/// Union of the selected factors as a spanning subgraph; original edge ids
/// are preserved.
pub fn combine_factors(
    graph: &BipartiteGraph,
    factorization: &Factorization,
    indices: &[usize],
) -> Result<BipartiteGraph> {
    let mut seen = std::collections::BTreeSet::new();
    for &i in indices {
        if i >= factorization.len() {
            return Err(Error::FactorIndexOutOfRange {
                index: i,
                count: factorization.len(),
            });
        }
        if !seen.insert(i) {
            return Err(Error::DuplicateFactorIndex(i));
        }
    }
    let by_id: std::collections::BTreeMap<usize, Edge> =
        graph.edges().iter().map(|e| (e.id, *e)).collect();
    let mut edges = Vec::new();
    for &i in indices {
        for &id in factorization.factors[i].edge_ids() {
            edges.push(by_id[&id]);
        }
    }
    edges.sort_by_key(|e| e.id);
    BipartiteGraph::from_edges(graph.n(), indices.len(), edges)
}

/// Decomposes a 2-regular bipartite graph into its even cycles, each with a
/// deterministic traversal orientation.
pub fn cycle_decomposition(two_factor: &BipartiteGraph) -> Result<CycleDecomposition> {
    if two_factor.k() != 2 {
        return Err(Error::NotTwoRegular);
    }
    let n = two_factor.n();
    let adj_a = two_factor.adjacency_a();
    let adj_b = two_factor.adjacency_b();
    let mut visited_a = vec![false; n];
    let mut cycles = Vec::new();

    for start in 0..n {
        if visited_a[start] {
            continue;
        }
        let mut a_vertices = Vec::new();
        let mut b_vertices = Vec::new();
        let mut edges = Vec::new();

        let mut a = start;
        // first step along the lowest edge id at the start vertex
        let mut edge = adj_a[start][0];
        loop {
            visited_a[a] = true;
            a_vertices.push(a);
            edges.push(edge.id);
            let b = edge.b;
            b_vertices.push(b);
            let out = if adj_b[b][0].id == edge.id {
                adj_b[b][1]
            } else {
                adj_b[b][0]
            };
            edges.push(out.id);
            a = out.a;
            if a == start {
                break;
            }
            edge = if adj_a[a][0].id == out.id {
                adj_a[a][1]
            } else {
                adj_a[a][0]
            };
        }
        cycles.push(OrientedCycle {
            a_vertices,
            b_vertices,
            edges,
        });
    }
    Ok(CycleDecomposition { cycles })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::parse_graph;

    fn c4() -> BipartiteGraph {
        BipartiteGraph::new(2, 2, &[(0, 0), (0, 1), (1, 1), (1, 0)]).unwrap()
    }

    fn c6() -> BipartiteGraph {
        BipartiteGraph::new(3, 2, &[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)]).unwrap()
    }

    fn k33() -> BipartiteGraph {
        let pairs: Vec<(usize, usize)> = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).collect();
        BipartiteGraph::new(3, 3, &pairs).unwrap()
    }

    fn assert_perfect(g: &BipartiteGraph, m: &Matching) {
        assert_eq!(m.len(), g.n());
        let by_id: std::collections::BTreeMap<usize, Edge> =
            g.edges().iter().map(|e| (e.id, *e)).collect();
        let mut seen_a = vec![false; g.n()];
        let mut seen_b = vec![false; g.n()];
        for id in m.edge_ids() {
            let e = by_id[id];
            assert!(!seen_a[e.a] && !seen_b[e.b], "matching not vertex-disjoint");
            seen_a[e.a] = true;
            seen_b[e.b] = true;
        }
    }

    /// Exhaustive perfect-matching enumeration, used as an independent
    /// check against the augmenting-path search.
    fn all_perfect_matchings(g: &BipartiteGraph) -> Vec<Vec<usize>> {
        fn recurse(
            a: usize,
            g: &BipartiteGraph,
            adj: &[Vec<Edge>],
            used_b: &mut Vec<bool>,
            chosen: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if a == g.n() {
                let mut m = chosen.clone();
                m.sort_unstable();
                out.push(m);
                return;
            }
            for e in &adj[a] {
                if !used_b[e.b] {
                    used_b[e.b] = true;
                    chosen.push(e.id);
                    recurse(a + 1, g, adj, used_b, chosen, out);
                    chosen.pop();
                    used_b[e.b] = false;
                }
            }
        }
        let adj = g.adjacency_a();
        let mut out = Vec::new();
        recurse(
            0,
            g,
            &adj,
            &mut vec![false; g.n()],
            &mut Vec::new(),
            &mut out,
        );
        out
    }

    #[test]
    fn matching_on_c4() {
        let g = c4();
        let m = find_perfect_matching(&g).unwrap();
        assert_perfect(&g, &m);
        // either opposite pair is valid
        assert!(m.edge_ids() == [0, 2] || m.edge_ids() == [1, 3]);
    }

    #[test]
    fn matching_on_k33() {
        let g = k33();
        let m = find_perfect_matching(&g).unwrap();
        assert_perfect(&g, &m);
    }

    #[test]
    fn matching_confirmed_by_enumeration() {
        for seed in 0..6 {
            let g = crate::generate::gen_regular_bipartite(4, 3, seed).unwrap();
            let m = find_perfect_matching(&g).unwrap();
            assert_perfect(&g, &m);
            let all = all_perfect_matchings(&g);
            assert!(all.contains(&m.edge_ids().to_vec()));
        }
    }

    #[test]
    fn factorize_c6() {
        let g = c6();
        let f = one_factorize(&g).unwrap();
        assert_eq!(f.len(), 2);
        // the only 1-factorization of an even cycle: alternating edges
        let ids0: Vec<usize> = f.factors()[0].edge_ids().to_vec();
        let ids1: Vec<usize> = f.factors()[1].edge_ids().to_vec();
        assert!(
            (ids0 == [0, 2, 4] && ids1 == [1, 3, 5]) || (ids0 == [1, 3, 5] && ids1 == [0, 2, 4])
        );
    }

    #[test]
    fn factorize_k33_latin_structure() {
        let g = k33();
        let f = one_factorize(&g).unwrap();
        assert_eq!(f.len(), 3);
        let mut all: Vec<usize> = Vec::new();
        for m in f.factors() {
            assert_perfect(&g, m);
            all.extend_from_slice(m.edge_ids());
        }
        all.sort_unstable();
        assert_eq!(all, (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn factorize_partitions_edges() {
        // 4-regular graph on 10+10 from stacked shifted matchings
        let mut pairs = Vec::new();
        for s in 0..4 {
            for a in 0..10 {
                pairs.push((a, (a + s * 2 + s) % 10));
            }
        }
        let g = BipartiteGraph::new(10, 4, &pairs).unwrap();
        let f = one_factorize(&g).unwrap();
        let mut all: Vec<usize> = Vec::new();
        for m in f.factors() {
            assert_perfect(&g, m);
            all.extend_from_slice(m.edge_ids());
        }
        all.sort_unstable();
        assert_eq!(all, (0..40).collect::<Vec<_>>());
    }

    #[test]
    fn combine_two_factors_of_c6() {
        let g = c6();
        let f = one_factorize(&g).unwrap();
        let combined = combine_factors(&g, &f, &[0, 1]).unwrap();
        assert_eq!(combined, g);
        assert!(matches!(
            combine_factors(&g, &f, &[0, 0]),
            Err(Error::DuplicateFactorIndex(0))
        ));
    }

    #[test]
    fn combine_factors_of_k33_gives_cycles() {
        let g = k33();
        let f = one_factorize(&g).unwrap();
        for pair in [[0, 1], [0, 2], [1, 2]] {
            let sub = combine_factors(&g, &f, &pair).unwrap();
            assert_eq!(sub.k(), 2);
            let dec = cycle_decomposition(&sub).unwrap();
            let total: usize = dec.cycles.iter().map(|c| 2 * c.half_len()).sum();
            assert_eq!(total, 6);
            for c in &dec.cycles {
                assert!(c.half_len() >= 2);
            }
        }
    }

    #[test]
    fn decompose_c4() {
        let dec = cycle_decomposition(&c4()).unwrap();
        assert_eq!(dec.cycles.len(), 1);
        assert_eq!(dec.cycles[0].half_len(), 2);
        assert_eq!(dec.cycles[0].edges.len(), 4);
    }

    #[test]
    fn decompose_c4_plus_c6() {
        let text = "bipartite 5 2\n0 0\n0 1\n1 1\n1 0\n2 2\n3 2\n3 3\n4 3\n4 4\n2 4\n";
        let g = parse_graph(text).unwrap();
        let dec = cycle_decomposition(&g).unwrap();
        let mut lens: Vec<usize> = dec.cycles.iter().map(|c| c.edges.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![4, 6]);
    }

    #[test]
    fn decompose_rejects_non_two_regular() {
        assert!(matches!(
            cycle_decomposition(&k33()),
            Err(Error::NotTwoRegular)
        ));
    }

    #[test]
    fn traversal_convention() {
        let dec = cycle_decomposition(&c6()).unwrap();
        let c = &dec.cycles[0];
        assert_eq!(c.a_vertices[0], 0);
        assert_eq!(c.edges[0], 0); // lowest edge id at a0
                                   // edges alternate (a_i, b_i), (b_i, a_{i+1})
        let g = c6();
        let by_id: std::collections::BTreeMap<usize, Edge> =
            g.edges().iter().map(|e| (e.id, *e)).collect();
        let p = c.half_len();
        for i in 0..p {
            let e_in = by_id[&c.edges[2 * i]];
            assert_eq!((e_in.a, e_in.b), (c.a_vertices[i], c.b_vertices[i]));
            let e_out = by_id[&c.edges[2 * i + 1]];
            assert_eq!(e_out.b, c.b_vertices[i]);
            assert_eq!(e_out.a, c.a_vertices[(i + 1) % p]);
        }
    }
}
