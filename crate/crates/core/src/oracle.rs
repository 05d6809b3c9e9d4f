//! Brute-force ground truth for tiny instances.
//!
//! The oracle works on a plain undirected graph (it is not restricted to
//! bipartite inputs) and recomputes vertex sums from scratch, sharing no
//! code with the verification module, so the two can cross-check each
//! other. Enumeration is over label permutations in lexicographic order by
//! edge index, with a branch abandoned as soon as two fully-labeled
//! vertices conflict.

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Largest edge count accepted by [`count_antimagic`].
pub const COUNT_MAX_EDGES: usize = 9;

/// A generous default budget for [`brute_force_search`].
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// An arbitrary simple graph as a vertex count plus edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    pub num_vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Flattens a bipartite graph: A-vertex `i` becomes `i`, B-vertex `j`
    /// becomes `n + j`. Edge order follows edge ids.
    pub fn from_bipartite(graph: &BipartiteGraph) -> Self {
        let n = graph.n();
        let mut edges: Vec<(usize, usize, usize)> =
            graph.edges().iter().map(|e| (e.id, e.a, n + e.b)).collect();
        edges.sort_unstable();
        Self {
            num_vertices: 2 * n,
            edges: edges.into_iter().map(|(_, u, v)| (u, v)).collect(),
        }
    }

    /// Checks a full labeling (label of edge `i` at position `i`) with the
    /// oracle's own sum computation.
    pub fn is_antimagic_labeling(&self, labels: &[u64]) -> bool {
        assert_eq!(labels.len(), self.edges.len());
        let mut sums = vec![0u64; self.num_vertices];
        for (&(u, v), &l) in self.edges.iter().zip(labels) {
            sums[u] += l;
            sums[v] += l;
        }
        sums.sort_unstable();
        sums.windows(2).all(|w| w[0] != w[1])
    }
}

/// Result of an exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// The lexicographically first antimagic labeling, by edge index.
    Found(Vec<u64>),
    /// The full permutation space was exhausted without success.
    NoneExists,
}

struct Searcher<'a> {
    graph: &'a SimpleGraph,
    remaining: Vec<usize>,
    sums: Vec<u64>,
    taken_sums: std::collections::BTreeMap<u64, usize>,
    used: Vec<bool>,
    labels: Vec<u64>,
    explored: u64,
    budget: u64,
    count: u64,
    stop_at_first: bool,
    witness: Option<Vec<u64>>,
}

impl<'a> Searcher<'a> {
    fn new(graph: &'a SimpleGraph, budget: u64, stop_at_first: bool) -> Self {
        let mut remaining = vec![0usize; graph.num_vertices];
        for &(u, v) in &graph.edges {
            remaining[u] += 1;
            remaining[v] += 1;
        }
        Self {
            graph,
            remaining,
            sums: vec![0; graph.num_vertices],
            taken_sums: std::collections::BTreeMap::new(),
            used: vec![false; graph.edges.len() + 1],
            labels: vec![0; graph.edges.len()],
            explored: 0,
            budget,
            count: 0,
            stop_at_first,
            witness: None,
        }
    }

    /// Registers a finished vertex-sum; false means it collides with
    /// another finished vertex.
    fn complete(&mut self, vertex: usize) -> bool {
        let entry = self.taken_sums.entry(self.sums[vertex]).or_insert(0);
        *entry += 1;
        *entry == 1
    }

    fn uncomplete(&mut self, vertex: usize) {
        let entry = self.taken_sums.get_mut(&self.sums[vertex]).unwrap();
        *entry -= 1;
        if *entry == 0 {
            self.taken_sums.remove(&self.sums[vertex]);
        }
    }

    /// Returns false when the budget runs out.
    fn recurse(&mut self, edge: usize) -> bool {
        if edge == self.graph.edges.len() {
            self.count += 1;
            if self.witness.is_none() {
                self.witness = Some(self.labels.clone());
            }
            return true;
        }
        let (u, v) = self.graph.edges[edge];
        for label in 1..=self.graph.edges.len() as u64 {
            if self.used[label as usize] {
                continue;
            }
            if self.explored == self.budget {
                return false;
            }
            self.explored += 1;

            self.used[label as usize] = true;
            self.labels[edge] = label;
            self.sums[u] += label;
            self.sums[v] += label;
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
            let u_done = self.remaining[u] == 0;
            let v_done = self.remaining[v] == 0;

            let mut ok = true;
            if u_done {
                ok &= self.complete(u);
            }
            if v_done {
                ok &= self.complete(v);
            }

            let in_budget = if ok { self.recurse(edge + 1) } else { true };

            if v_done {
                self.uncomplete(v);
            }
            if u_done {
                self.uncomplete(u);
            }
            self.remaining[u] += 1;
            self.remaining[v] += 1;
            self.sums[u] -= label;
            self.sums[v] -= label;
            self.used[label as usize] = false;

            if !in_budget {
                return false;
            }
            if self.stop_at_first && self.witness.is_some() {
                return true;
            }
        }
        true
    }
}

/// Searches for the first antimagic labeling in lexicographic permutation
/// order. `budget` bounds the number of label assignments tried; running
/// out is an error distinct from a completed search that found nothing.
pub fn brute_force_search(graph: &SimpleGraph, budget: u64) -> Result<SearchOutcome> {
    let mut s = Searcher::new(graph, budget, true);
    let finished = s.recurse(0);
    match s.witness {
        Some(w) => Ok(SearchOutcome::Found(w)),
        None if finished => Ok(SearchOutcome::NoneExists),
        None => Err(Error::OracleBudgetExhausted {
            explored: s.explored,
        }),
    }
}

/// Exact count of antimagic labelings over all |E|! permutations.
pub fn count_antimagic(graph: &SimpleGraph) -> Result<u64> {
    if graph.edges.len() > COUNT_MAX_EDGES {
        return Err(Error::InstanceTooLarge {
            edges: graph.edges.len(),
            max: COUNT_MAX_EDGES,
        });
    }
    let mut s = Searcher::new(graph, u64::MAX, false);
    let finished = s.recurse(0);
    debug_assert!(finished);
    Ok(s.count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> SimpleGraph {
        SimpleGraph {
            num_vertices: 2,
            edges: vec![(0, 1)],
        }
    }

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph {
            num_vertices: n,
            edges: (0..n).map(|i| (i, (i + 1) % n)).collect(),
        }
    }

    #[test]
    fn k2_has_no_antimagic_labeling() {
        assert_eq!(
            brute_force_search(&k2(), 100).unwrap(),
            SearchOutcome::NoneExists
        );
        assert_eq!(count_antimagic(&k2()).unwrap(), 0);
    }

    #[test]
    fn c4_search_finds_labeling() {
        let g = cycle(4);
        match brute_force_search(&g, 1_000_000).unwrap() {
            SearchOutcome::Found(labels) => {
                assert!(g.is_antimagic_labeling(&labels));
            }
            SearchOutcome::NoneExists => panic!("C4 is antimagic"),
        }
    }

    #[test]
    fn c3_count_positive() {
        let c = count_antimagic(&cycle(3)).unwrap();
        assert!(c > 0);
        // cross-check against a plain factorial enumeration
        let g = cycle(3);
        let mut naive = 0;
        let perms = [
            [1u64, 2, 3],
            [1, 3, 2],
            [2, 1, 3],
            [2, 3, 1],
            [3, 1, 2],
            [3, 2, 1],
        ];
        for p in perms {
            if g.is_antimagic_labeling(&p) {
                naive += 1;
            }
        }
        assert_eq!(c, naive);
    }

    #[test]
    fn budget_zero_is_distinct_from_none() {
        let err = brute_force_search(&cycle(4), 0).unwrap_err();
        assert_eq!(err, Error::OracleBudgetExhausted { explored: 0 });
    }

    #[test]
    fn count_rejects_large_instances() {
        let g = cycle(12);
        assert!(matches!(
            count_antimagic(&g),
            Err(Error::InstanceTooLarge { .. })
        ));
    }

    #[test]
    fn bipartite_flattening_keeps_edge_order() {
        let g = BipartiteGraph::new(2, 2, &[(0, 0), (0, 1), (1, 1), (1, 0)]).unwrap();
        let s = SimpleGraph::from_bipartite(&g);
        assert_eq!(s.num_vertices, 4);
        assert_eq!(s.edges, vec![(0, 2), (0, 3), (1, 3), (1, 2)]);
    }
}
