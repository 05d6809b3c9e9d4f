//! The labeling constructions, one per degree case, plus a dispatcher and a
//! bounded repair fallback.
//!
//! Every construction labels the graph in stages whose partial sums satisfy
//! modular invariants (checked and recorded as [`StageReport`]s), so that
//! vertices in A and B land in different congruence classes and a final
//! 1-factor separates vertices within each part. The dispatcher verifies
//! each result and falls back to a deterministic local search if a branch
//! ever misses; on the standard corpus the fallback never fires.

mod cycle_dp;

pub mod cycle;
pub mod even_high;
pub mod four_regular;
pub mod key_lemma;
pub mod odd;
pub mod six_regular;
pub mod three_factor;
pub mod three_regular;

pub use cycle::{
    compose_disjoint_union, cycle_vertex_sums, label_2_regular, label_cycle, LabeledComponent,
};
pub use even_high::label_even_ge8;
pub use four_regular::label_4_regular;
pub use key_lemma::{label_key_lemma, KeyLemmaOutcome, KeyLemmaState};
pub use odd::label_odd_regular;
pub use six_regular::label_6_regular;
pub use three_factor::label_three_factor;
pub use three_regular::label_3_regular;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::factorize::{one_factorize, Matching};
use crate::graph::{BipartiteGraph, Edge, Labeling};
use crate::verify::{verify_antimagic, StageReport};

/// Degree decomposition plan for the composite constructions: a k-regular
/// graph splits into small factors plus a (2l+2)-factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionParams {
    pub k: usize,
    pub l: usize,
    /// Amount added to every label of the (2l+2)-factor sub-construction.
    pub label_offset: u64,
}

impl ConstructionParams {
    /// Plan for odd k = 2l+5: a 3-factor plus a (2l+2)-factor whose labels
    /// are shifted past the 3n smallest.
    pub fn odd(k: usize, n: usize) -> Result<Self> {
        if k < 5 || k.is_multiple_of(2) {
            return Err(Error::ConstructionFailed {
                stage: "dispatch".into(),
                details: format!("odd-degree plan needs odd k >= 5, got {k}"),
            });
        }
        Ok(Self {
            k,
            l: (k - 5) / 2,
            label_offset: 3 * n as u64,
        })
    }

    /// Plan for even k = 2l+8: two 3-factors plus a (2l+2)-factor whose
    /// labels are shifted past the 6n smallest.
    pub fn even_high(k: usize, n: usize) -> Result<Self> {
        if k < 8 || k % 2 == 1 {
            return Err(Error::ConstructionFailed {
                stage: "dispatch".into(),
                details: format!("high-even plan needs even k >= 8, got {k}"),
            });
        }
        Ok(Self {
            k,
            l: (k - 8) / 2,
            label_offset: 6 * n as u64,
        })
    }
}

/// B-vertices whose partial sum landed in the residue class the stage tried
/// to avoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadVertexReport {
    pub bad: Vec<usize>,
    pub m: usize,
}

impl BadVertexReport {
    pub fn new(mut bad: Vec<usize>) -> Self {
        bad.sort_unstable();
        let m = bad.len();
        Self { bad, m }
    }
}

/// Result of a full construction branch.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub labeling: Labeling,
    pub stages: Vec<StageReport>,
    pub bad: Option<BadVertexReport>,
}

/// Which branch the dispatcher took, and whether repair was needed.
#[derive(Debug, Clone)]
pub struct AntimagicOutcome {
    pub labeling: Labeling,
    pub stages: Vec<StageReport>,
    pub bad: Option<BadVertexReport>,
    pub branch: &'static str,
    /// Number of repair swaps applied; `None` when the construction was
    /// conflict-free as built (the expected case).
    pub repair_swaps: Option<usize>,
}

/// Labels any regular bipartite graph of degree at least 2, dispatching on
/// the degree, self-verifying, and repairing if a branch misses.
pub fn label_antimagic(graph: &BipartiteGraph) -> Result<AntimagicOutcome> {
    let k = graph.k();
    if k < 2 {
        return Err(Error::DegreeTooSmall { k });
    }
    let (outcome, branch, modulus) = match k {
        2 => (
            Outcome {
                labeling: label_2_regular(graph)?,
                stages: Vec::new(),
                bad: None,
            },
            "2-regular",
            None,
        ),
        3 => (label_3_regular(graph)?, "3-regular", Some(3)),
        4 => (label_4_regular(graph)?, "4-regular", Some(4)),
        6 => (label_6_regular(graph)?, "6-regular", Some(4)),
        k if k % 2 == 1 => (label_odd_regular(graph)?, "odd-regular", Some(3)),
        _ => (label_even_ge8(graph)?, "even-ge8", Some(3)),
    };

    let report = verify_antimagic(graph, &outcome.labeling)?;
    if report.is_antimagic() {
        return Ok(AntimagicOutcome {
            labeling: outcome.labeling,
            stages: outcome.stages,
            bad: outcome.bad,
            branch,
            repair_swaps: None,
        });
    }

    let factorization = one_factorize(graph)?;
    let mut factor_of = BTreeMap::new();
    for (i, m) in factorization.factors().iter().enumerate() {
        for &id in m.edge_ids() {
            factor_of.insert(id, i);
        }
    }
    let constraints = RepairConstraints {
        factor_of: Some(factor_of),
        residue_modulus: modulus,
    };
    let repaired = repair_labeling(
        graph,
        &outcome.labeling,
        &constraints,
        DEFAULT_REPAIR_BUDGET,
    )?;
    Ok(AntimagicOutcome {
        labeling: repaired.labeling,
        stages: outcome.stages,
        bad: outcome.bad,
        branch,
        repair_swaps: Some(repaired.swaps),
    })
}

/// Default candidate-evaluation budget for [`repair_labeling`].
pub const DEFAULT_REPAIR_BUDGET: u64 = 5_000_000;

/// Stage invariants the repair search must preserve while swapping labels.
#[derive(Debug, Clone, Default)]
pub struct RepairConstraints {
    /// When set, swapped edges must belong to the same factor.
    pub factor_of: Option<BTreeMap<usize, usize>>,
    /// When set, swapped labels must be congruent under this modulus.
    pub residue_modulus: Option<u64>,
}

impl RepairConstraints {
    fn permits(&self, e1: usize, e2: usize, l1: u64, l2: u64) -> bool {
        if let Some(factor_of) = &self.factor_of {
            if factor_of.get(&e1) != factor_of.get(&e2) {
                return false;
            }
        }
        if let Some(m) = self.residue_modulus {
            if l1 % m != l2 % m {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone)]
pub struct RepairOutcome {
    pub labeling: Labeling,
    pub swaps: usize,
}

/// Bounded deterministic local search over label swaps that respect
/// `protected`. Greedy first-improvement on the conflict count; fails with
/// the remaining conflict count when the budget runs out or no swap helps.
pub fn repair_labeling(
    graph: &BipartiteGraph,
    labeling: &Labeling,
    protected: &RepairConstraints,
    budget: u64,
) -> Result<RepairOutcome> {
    let mut current = labeling.clone();
    let mut conflicts = verify_antimagic(graph, &current)?.conflicts.len();
    let mut swaps = 0usize;
    let mut evaluated: u64 = 0;
    let ids: Vec<usize> = {
        let mut v: Vec<usize> = graph.edges().iter().map(|e| e.id).collect();
        v.sort_unstable();
        v
    };

    while conflicts > 0 {
        let mut improved = false;
        'scan: for (i, &e1) in ids.iter().enumerate() {
            for &e2 in &ids[i + 1..] {
                let l1 = current.get(e1).expect("complete");
                let l2 = current.get(e2).expect("complete");
                if !protected.permits(e1, e2, l1, l2) {
                    continue;
                }
                if evaluated == budget {
                    return Err(Error::RepairBudgetExhausted { conflicts });
                }
                evaluated += 1;
                let candidate = swap_labels(&current, e1, e2, l1, l2);
                let count = verify_antimagic(graph, &candidate)?.conflicts.len();
                if count < conflicts {
                    current = candidate;
                    conflicts = count;
                    swaps += 1;
                    improved = true;
                    break 'scan;
                }
            }
        }
        if !improved {
            return Err(Error::RepairBudgetExhausted { conflicts });
        }
    }
    Ok(RepairOutcome {
        labeling: current,
        swaps,
    })
}

fn swap_labels(labeling: &Labeling, e1: usize, e2: usize, l1: u64, l2: u64) -> Labeling {
    let mut out = Labeling::new();
    for (e, l) in labeling.iter() {
        let l = if e == e1 {
            l2
        } else if e == e2 {
            l1
        } else {
            l
        };
        out.assign(e, l).expect("swap preserves distinctness");
    }
    out
}

/// Map from edge id to the full edge, for factor bookkeeping.
pub(crate) fn edges_by_id(graph: &BipartiteGraph) -> BTreeMap<usize, Edge> {
    graph.edges().iter().map(|e| (e.id, *e)).collect()
}

/// Vertex-indexed view of a perfect matching.
pub(crate) struct FactorLookup {
    pub at_a: Vec<Edge>,
    pub at_b: Vec<Edge>,
}

pub(crate) fn factor_lookup(
    graph: &BipartiteGraph,
    matching: &Matching,
    by_id: &BTreeMap<usize, Edge>,
) -> FactorLookup {
    let n = graph.n();
    let placeholder = Edge {
        id: usize::MAX,
        a: usize::MAX,
        b: usize::MAX,
    };
    let mut at_a = vec![placeholder; n];
    let mut at_b = vec![placeholder; n];
    for &id in matching.edge_ids() {
        let e = by_id[&id];
        at_a[e.a] = e;
        at_b[e.b] = e;
    }
    FactorLookup { at_a, at_b }
}

/// B-vertices ordered by increasing partial sum under `labeling` restricted
/// to `subgraph`, ties broken by vertex index.
pub(crate) fn b_vertices_by_partial_sum(
    subgraph: &BipartiteGraph,
    labeling: &Labeling,
) -> Vec<usize> {
    let sums = crate::graph::SumProfile::partial(subgraph, labeling);
    let mut order: Vec<usize> = (0..subgraph.n()).collect();
    order.sort_by_key(|&v| (sums.sums_b[v], v));
    order
}
