//! The 4-regular construction. The 3-factor carries the mod-4 triples, but
//! with only one spare 1-factor the B-sums cannot all dodge the A residue
//! class: B-vertices whose 3-factor partial sum is 2 mod 4 are bad. Three
//! rounds of label swaps shrink the bad set — alternating 1/2 swaps around
//! each cycle of the {1,2}-labeled 2-factor, swaps along bad paths (the
//! class-3 edge at a bad vertex plus the class-2 edge adjacent to it in A),
//! and local swaps at any A-vertex still adjacent to two bad vertices.
//! The smallest labels of every residue class are then routed to the bad
//! vertices so their total sums stay below 3n, out of everyone's way.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::factorize::{combine_factors, cycle_decomposition, one_factorize};
use crate::graph::{BipartiteGraph, Edge, Labeling, SumProfile};
use crate::partitions::{residue_labels, triple_partition_mod4, LabelTriple};
use crate::verify::{verify_stage, Part, StageInvariant, SumConstraint};

use super::{edges_by_id, factor_lookup, BadVertexReport, FactorLookup, Outcome};

/// Labels a 4-regular bipartite graph antimagically.
pub fn label_4_regular(graph: &BipartiteGraph) -> Result<Outcome> {
    let n = graph.n();
    let nn = n as u64;
    if graph.k() != 4 {
        return Err(Error::NotRegular {
            vertex: "graph".into(),
            degree: graph.k(),
            expected: 4,
        });
    }

    let by_id = edges_by_id(graph);
    let factorization = one_factorize(graph)?;
    let h1 = factor_lookup(graph, &factorization.factors()[0], &by_id);
    let h3_lookups: Vec<FactorLookup> = (1..4)
        .map(|i| factor_lookup(graph, &factorization.factors()[i], &by_id))
        .collect();
    let h3 = combine_factors(graph, &factorization, &[1, 2, 3])?;

    // residue classes per edge: 1 on the first 1-factor, 2 on the second,
    // 3 on the third — then swap toward fewer bad vertices
    let mut class: BTreeMap<usize, u64> = BTreeMap::new();
    for (i, lookup) in h3_lookups.iter().enumerate() {
        for v in 0..n {
            class.insert(lookup.at_a[v].id, i as u64 + 1);
        }
    }

    // round 1: swap 1 and 2 at every second A-vertex of each cycle of the
    // {1,2} 2-factor
    let two_factor = combine_factors(graph, &factorization, &[1, 2])?;
    for cycle in &cycle_decomposition(&two_factor)?.cycles {
        for (i, &a) in cycle.a_vertices.iter().enumerate() {
            if i % 2 == 0 {
                let e1 = h3_lookups[0].at_a[a].id;
                let e2 = h3_lookups[1].at_a[a].id;
                let c1 = class[&e1];
                let c2 = class[&e2];
                class.insert(e1, c2);
                class.insert(e2, c1);
            }
        }
    }

    let b_edges = |b: usize| -> [Edge; 3] {
        [
            h3_lookups[0].at_b[b],
            h3_lookups[1].at_b[b],
            h3_lookups[2].at_b[b],
        ]
    };
    let a_edges = |a: usize| -> [Edge; 3] {
        [
            h3_lookups[0].at_a[a],
            h3_lookups[1].at_a[a],
            h3_lookups[2].at_a[a],
        ]
    };
    let is_bad = |class: &BTreeMap<usize, u64>, b: usize| -> bool {
        b_edges(b).iter().map(|e| class[&e.id]).sum::<u64>() % 4 == 2
    };

    // round 2: swap labels along alternate bad paths; chains of bad paths
    // are walked from their heads, cycles leave one bad vertex each
    let bads: Vec<usize> = (0..n).filter(|&b| is_bad(&class, b)).collect();
    let mut path_of: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new(); // b -> (e3, e2, target)
    for &b in &bads {
        let e3 = *b_edges(b)
            .iter()
            .find(|e| class[&e.id] == 3)
            .expect("a bad vertex has one edge of each class");
        let e2 = *a_edges(e3.a)
            .iter()
            .find(|e| class[&e.id] == 2)
            .expect("an A-vertex has one edge of each class");
        path_of.insert(b, (e3.id, e2.id, e2.b));
    }
    let targets: BTreeMap<usize, usize> = path_of.iter().map(|(&b, p)| (b, p.2)).collect();
    for b in choose_path_swaps(&bads, &targets) {
        let (e3, e2, _) = path_of[&b];
        class.insert(e3, 2);
        class.insert(e2, 3);
    }

    // round 3: an A-vertex adjacent to two or more bad vertices swaps the
    // classes on its own edges until every A-vertex touches at most one
    loop {
        let mut changed = false;
        for a in 0..n {
            let edges = a_edges(a);
            let bad_here: Vec<Edge> = edges
                .iter()
                .copied()
                .filter(|e| is_bad(&class, e.b))
                .collect();
            if bad_here.len() >= 3 {
                for e in &edges {
                    let c = class[&e.id];
                    class.insert(e.id, c % 3 + 1);
                }
                changed = true;
                break;
            }
            if bad_here.len() == 2 {
                let c0 = class[&bad_here[0].id];
                let c1 = class[&bad_here[1].id];
                class.insert(bad_here[0].id, c1);
                class.insert(bad_here[1].id, c0);
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }

    let bad = BadVertexReport::new((0..n).filter(|&b| is_bad(&class, b)).collect());
    debug_assert!(
        (0..n).all(|a| a_edges(a).iter().filter(|e| is_bad(&class, e.b)).count() <= 1),
        "round 3 leaves every A-vertex with at most one bad neighbor"
    );

    // real labels: the bad vertices receive the smallest labels of each
    // residue class, dragging each label's whole triple to the A-vertex
    // behind it
    let triples = triple_partition_mod4(nn)?;
    let mut triple_used = vec![false; triples.len()];
    let mut triple_of_a: Vec<Option<usize>> = vec![None; n];
    for residue in 1..=3u64 {
        for &b in &bad.bad {
            let edge = *b_edges(b)
                .iter()
                .find(|e| class[&e.id] == residue)
                .expect("bad vertices keep one edge of each class");
            let choice = smallest_unused_triple(&triples, &triple_used, residue)?;
            if triple_of_a[edge.a].is_some() {
                return Err(Error::ConstructionFailed {
                    stage: "4-regular-triples".into(),
                    details: format!("A-vertex {} pulled toward two bad vertices", edge.a),
                });
            }
            triple_of_a[edge.a] = Some(choice);
            triple_used[choice] = true;
        }
    }
    let mut next_free = 0usize;
    for slot in triple_of_a.iter_mut() {
        if slot.is_none() {
            while triple_used[next_free] {
                next_free += 1;
            }
            *slot = Some(next_free);
            triple_used[next_free] = true;
        }
    }

    let mut labeling = Labeling::new();
    for a in 0..n {
        let triple = &triples[triple_of_a[a].expect("every A-vertex owns a triple")];
        for e in a_edges(a) {
            let label = triple
                .element_with_residue(class[&e.id])
                .expect("mod-4 triples cover 1, 2, 3");
            labeling.assign(e.id, label)?;
        }
    }

    let mut h3_stage = StageInvariant::new(
        "4-regular-h3",
        SumConstraint::ResidueIs {
            modulus: 4,
            residue: 2,
        },
        SumConstraint::ResidueNot {
            modulus: 4,
            residue: 2,
        },
    );
    for &b in &bad.bad {
        h3_stage = h3_stage.with_exception(
            Part::B,
            b,
            SumConstraint::ResidueIs {
                modulus: 4,
                residue: 2,
            },
        );
    }
    let mut stages = vec![verify_stage(&h3, &labeling, &h3_stage)];

    // final 1-factor: multiples of 4, smallest at the bad vertices in order
    // of increasing partial sum, then the good vertices likewise
    let zero_labels = residue_labels(n, 0, 4);
    let partial = SumProfile::partial(graph, &labeling);
    let mut bad_order = bad.bad.clone();
    bad_order.sort_by_key(|&b| (partial.sums_b[b], b));
    let bad_lookup: BTreeSet<usize> = bad.bad.iter().copied().collect();
    let mut good_order: Vec<usize> = (0..n).filter(|b| !bad_lookup.contains(b)).collect();
    good_order.sort_by_key(|&b| (partial.sums_b[b], b));
    for (idx, &b) in bad_order.iter().chain(good_order.iter()).enumerate() {
        labeling.assign(h1.at_b[b].id, zero_labels[idx])?;
    }

    let mut final_stage = StageInvariant::new(
        "4-regular-final",
        SumConstraint::ResidueIs {
            modulus: 4,
            residue: 2,
        },
        SumConstraint::ResidueNot {
            modulus: 4,
            residue: 2,
        },
    );
    for &b in &bad.bad {
        final_stage = final_stage.with_exception(
            Part::B,
            b,
            SumConstraint::ResidueIs {
                modulus: 4,
                residue: 2,
            },
        );
    }
    stages.push(verify_stage(graph, &labeling, &final_stage));

    Ok(Outcome {
        labeling,
        stages,
        bad: Some(bad),
    })
}

/// Picks the bad paths to swap, given each bad vertex's target (the B-end
/// of the class-2 edge adjacent in A to its class-3 edge). A swap turns its
/// source good and, when the target is bad, the target too; swapping two
/// adjacent paths would re-break the shared vertex. Walking each chain from
/// its head and each ring from its smallest vertex, every second path is
/// swapped: chains come out fully good, an odd ring keeps one bad vertex.
fn choose_path_swaps(bads: &[usize], target_of: &BTreeMap<usize, usize>) -> Vec<usize> {
    let bad_set: BTreeSet<usize> = bads.iter().copied().collect();
    let mut indegree: BTreeMap<usize, usize> = bads.iter().map(|&b| (b, 0)).collect();
    for &b in bads {
        let target = target_of[&b];
        if bad_set.contains(&target) {
            *indegree.get_mut(&target).unwrap() += 1;
        }
    }

    let mut to_swap: Vec<usize> = Vec::new();
    let mut visited: BTreeSet<usize> = BTreeSet::new();
    for &head in bads.iter().filter(|&&b| indegree[&b] == 0) {
        let mut chain = Vec::new();
        let mut cur = head;
        loop {
            visited.insert(cur);
            chain.push(cur);
            let target = target_of[&cur];
            if !bad_set.contains(&target) || visited.contains(&target) {
                break;
            }
            cur = target;
        }
        to_swap.extend(chain.iter().step_by(2));
    }
    for &start in bads {
        if visited.contains(&start) {
            continue;
        }
        let mut ring = Vec::new();
        let mut cur = start;
        loop {
            visited.insert(cur);
            ring.push(cur);
            cur = target_of[&cur];
            if cur == start {
                break;
            }
        }
        let r = ring.len();
        let limit = if r % 2 == 0 { r - 1 } else { r - 2 };
        to_swap.extend(ring[..limit].iter().step_by(2));
    }
    to_swap
}

fn smallest_unused_triple(triples: &[LabelTriple], used: &[bool], residue: u64) -> Result<usize> {
    triples
        .iter()
        .enumerate()
        .filter(|(i, _)| !used[*i])
        .min_by_key(|(_, t)| t.element_with_residue(residue).expect("residue covered"))
        .map(|(i, _)| i)
        .ok_or_else(|| Error::ConstructionFailed {
            stage: "4-regular-triples".into(),
            details: "triple pool exhausted".into(),
        })
}
