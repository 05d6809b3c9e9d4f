//! The 6-regular construction: a 3-factor carrying the mod-4 triples (one
//! nonzero residue class per 1-factor, so every B partial sum is 2 mod 4),
//! a 2-factor carrying the labels 4n+1..6n in pairs summing to 10n+1 with
//! orientations chosen so no B-sum falls in the forbidden class mod 4, and
//! a final 1-factor of multiples of 4 ordered by increasing partial sum.

use crate::error::{Error, Result};
use crate::factorize::{combine_factors, cycle_decomposition, one_factorize};
use crate::graph::{BipartiteGraph, Labeling};
use crate::partitions::{residue_labels, triple_partition_mod4};
use crate::verify::{verify_stage, StageInvariant, SumConstraint};

use super::cycle_dp::{distribute_counts, CycleProblem, SlotType};
use super::{b_vertices_by_partial_sum, edges_by_id, factor_lookup, Outcome};

/// A pair of H2 labels summing to 10n+1, tracked by its residues mod 4.
#[derive(Debug, Clone, Copy)]
struct H2Pair {
    low: u64,
    high: u64,
}

impl H2Pair {
    fn element_with_residue(&self, r: u64) -> u64 {
        if self.low % 4 == r {
            self.low
        } else {
            debug_assert_eq!(self.high % 4, r);
            self.high
        }
    }
}

/// Labels a 6-regular bipartite graph antimagically.
pub fn label_6_regular(graph: &BipartiteGraph) -> Result<Outcome> {
    let n = graph.n();
    let nn = n as u64;
    if graph.k() != 6 {
        return Err(Error::NotRegular {
            vertex: "graph".into(),
            degree: graph.k(),
            expected: 6,
        });
    }

    let by_id = edges_by_id(graph);
    let factorization = one_factorize(graph)?;
    let h1 = factor_lookup(graph, &factorization.factors()[0], &by_id);
    let h2 = combine_factors(graph, &factorization, &[1, 2])?;
    let h3 = combine_factors(graph, &factorization, &[3, 4, 5])?;
    let h3_factors: Vec<_> = (3..6)
        .map(|i| factor_lookup(graph, &factorization.factors()[i], &by_id))
        .collect();

    let mut labeling = Labeling::new();

    // H3: one triple per A-vertex, residue class c on the c-th 1-factor
    let triples = triple_partition_mod4(nn)?;
    for (v, triple) in triples.iter().enumerate() {
        for (c, lookup) in h3_factors.iter().enumerate() {
            let class = c as u64 + 1;
            let label = triple
                .element_with_residue(class)
                .expect("mod-4 triples cover 1, 2, 3");
            labeling.assign(lookup.at_a[v].id, label)?;
        }
    }
    let h3_stage = StageInvariant::new(
        "6-regular-h3",
        SumConstraint::ResidueIs {
            modulus: 4,
            residue: 2,
        },
        SumConstraint::ResidueIs {
            modulus: 4,
            residue: 2,
        },
    );
    let mut stages = vec![verify_stage(&h3, &labeling, &h3_stage)];

    // H2: pairs (4n+j, 6n+1-j); mod 4 these are {1,2}/{3,0} pairs for odd
    // n and {1,0}/{3,2} pairs for even n. The kind containing residue 1 is
    // the counted pool.
    let forbidden = (10 * nn + 1) % 4;
    let (counted_res, other_res): ((u64, u64), (u64, u64)) = if nn % 2 == 1 {
        ((1, 2), (3, 0))
    } else {
        ((1, 0), (3, 2))
    };
    let mut counted_pool = Vec::new();
    let mut other_pool = Vec::new();
    for j in 1..=nn {
        let pair = H2Pair {
            low: 4 * nn + j,
            high: 6 * nn + 1 - j,
        };
        let residues = (pair.low % 4, pair.high % 4);
        if residues == counted_res || (residues.1, residues.0) == counted_res {
            counted_pool.push(pair);
        } else {
            debug_assert!(
                residues == other_res || (residues.1, residues.0) == other_res,
                "pair {pair:?} matches neither kind"
            );
            other_pool.push(pair);
        }
    }
    let total_counted = counted_pool.len();
    counted_pool.reverse();
    other_pool.reverse();

    let types = vec![
        SlotType {
            enter: counted_res.0,
            leave: counted_res.1,
            counted: true,
        },
        SlotType {
            enter: counted_res.1,
            leave: counted_res.0,
            counted: true,
        },
        SlotType {
            enter: other_res.0,
            leave: other_res.1,
            counted: false,
        },
        SlotType {
            enter: other_res.1,
            leave: other_res.0,
            counted: false,
        },
    ];
    let allowed_row: Vec<bool> = (0..4).map(|r| r != forbidden).collect();

    let decomposition = cycle_decomposition(&h2)?;
    let problems: Vec<CycleProblem> = decomposition
        .cycles
        .iter()
        .map(|cycle| CycleProblem {
            modulus: 4,
            types: types.clone(),
            allowed: vec![allowed_row.clone(); cycle.half_len()],
        })
        .collect();
    let tables: Vec<Vec<u32>> = problems
        .iter()
        .map(|p| p.min_violations_per_count())
        .collect();
    let (_, counts) =
        distribute_counts(&tables, total_counted).ok_or_else(|| Error::ConstructionFailed {
            stage: "6-regular-h2".into(),
            details: "pair kinds cannot be spread over the 2-factor cycles".into(),
        })?;

    for ((cycle, problem), &count) in decomposition.cycles.iter().zip(&problems).zip(&counts) {
        let (_, assignment) =
            problem
                .assignment(count)
                .ok_or_else(|| Error::ConstructionFailed {
                    stage: "6-regular-h2".into(),
                    details: "per-cycle assignment vanished after distribution".into(),
                })?;
        let p = cycle.half_len();
        for (i, &type_index) in assignment.iter().enumerate() {
            let pair = if types[type_index].counted {
                counted_pool.pop().expect("counted pool")
            } else {
                other_pool.pop().expect("other pool")
            };
            let entering = cycle.edges[(2 * i + 2 * p - 1) % (2 * p)];
            let leaving = cycle.edges[2 * i];
            let enter_label = pair.element_with_residue(types[type_index].enter);
            labeling.assign(entering, enter_label)?;
            labeling.assign(leaving, pair.low + pair.high - enter_label)?;
        }
    }

    // partial sums over H2 ∪ H3: A is 2 + (10n+1) and B avoids 2+forbidden
    let combined_stage = StageInvariant::new(
        "6-regular-h2h3",
        SumConstraint::ResidueIs {
            modulus: 4,
            residue: (2 + 10 * nn + 1) % 4,
        },
        SumConstraint::ResidueNot {
            modulus: 4,
            residue: (2 + forbidden) % 4,
        },
    );
    stages.push(verify_stage(graph, &labeling, &combined_stage));

    // H1: label 4i at the i-th B-vertex by increasing partial sum
    let zero_labels = residue_labels(n, 0, 4);
    let b_order = b_vertices_by_partial_sum(graph, &labeling);
    for (idx, &b) in b_order.iter().enumerate() {
        labeling.assign(h1.at_b[b].id, zero_labels[idx])?;
    }

    let final_stage = StageInvariant::new(
        "6-regular-final",
        SumConstraint::ResidueIs {
            modulus: 4,
            residue: (2 + 10 * nn + 1) % 4,
        },
        SumConstraint::ResidueNot {
            modulus: 4,
            residue: (2 + forbidden) % 4,
        },
    );
    stages.push(verify_stage(graph, &labeling, &final_stage));

    Ok(Outcome {
        labeling,
        stages,
        bad: None,
    })
}
