//! The 3-regular construction: a 2-factor labeled with paired 1- and
//! 2-labels so every A-sum is 3n, orientations alternated around each cycle
//! so B-sums avoid multiples of 3 (marking at most one bad vertex per cycle
//! with an odd number of A-vertices), and the 1-factor labeled with the
//! multiples of 3 — smallest at the bad vertices, the rest in order of
//! increasing partial sum.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::factorize::{combine_factors, cycle_decomposition, one_factorize};
use crate::graph::{BipartiteGraph, Labeling, SumProfile};
use crate::partitions::residue_labels;
use crate::verify::{verify_stage, Part, StageInvariant, SumConstraint};

use super::{edges_by_id, factor_lookup, BadVertexReport, Outcome};

/// Labels a 3-regular bipartite graph antimagically.
pub fn label_3_regular(graph: &BipartiteGraph) -> Result<Outcome> {
    let n = graph.n();
    let nn = n as u64;
    let by_id = edges_by_id(graph);
    let factorization = one_factorize(graph)?;
    let h1 = factor_lookup(graph, &factorization.factors()[0], &by_id);
    let h2 = combine_factors(graph, &factorization, &[1, 2])?;
    let decomposition = cycle_decomposition(&h2)?;

    // orientation: at A-position i of a cycle, even i puts the 1-label on
    // the entering edge and the 2-label on the leaving edge; odd i flips.
    // A cycle with an odd number of A-vertices leaves its wrap-around
    // B-vertex with one label of each class: that vertex is bad.
    let mut bad_info: Vec<(usize, usize, usize)> = Vec::new(); // (bad b, u, w)
    for cycle in &decomposition.cycles {
        let p = cycle.half_len();
        if p % 2 == 1 {
            bad_info.push((
                cycle.b_vertices[p - 1],
                cycle.a_vertices[p - 1],
                cycle.a_vertices[0],
            ));
        }
    }
    bad_info.sort_unstable();
    let bad = BadVertexReport::new(bad_info.iter().map(|&(b, _, _)| b).collect());
    let m = bad.m as u64;

    // pairs are (i, 3n-i) with i running over the 1-labels; at the r-th bad
    // vertex the two incident labels must be j_r = 3r-2 and 3m - j_r, both
    // small elements of their own pairs, so the bad partial sums all equal 3m
    let mut pair_of_a: Vec<Option<u64>> = vec![None; n]; // 1-label of the pair
    let mut reserved: BTreeSet<u64> = BTreeSet::new();
    for (r, &(_, u, w)) in bad_info.iter().enumerate() {
        let j_r = 3 * (r as u64 + 1) - 2;
        let u_one = 3 * nn - 3 * m + j_r;
        pair_of_a[u] = Some(u_one);
        pair_of_a[w] = Some(j_r);
        reserved.insert(u_one);
        reserved.insert(j_r);
    }
    let mut free_ones = (0..nn).map(|i| 3 * i + 1).filter(|l| !reserved.contains(l));
    for cycle in &decomposition.cycles {
        for &a in &cycle.a_vertices {
            if pair_of_a[a].is_none() {
                pair_of_a[a] = Some(free_ones.next().expect("one pair per A-vertex"));
            }
        }
    }

    let mut labeling = Labeling::new();
    for cycle in &decomposition.cycles {
        let p = cycle.half_len();
        for i in 0..p {
            let a = cycle.a_vertices[i];
            let one = pair_of_a[a].expect("assigned above");
            let two = 3 * nn - one;
            let entering = cycle.edges[(2 * i + 2 * p - 1) % (2 * p)];
            let leaving = cycle.edges[2 * i];
            if i % 2 == 0 {
                labeling.assign(entering, one)?;
                labeling.assign(leaving, two)?;
            } else {
                labeling.assign(entering, two)?;
                labeling.assign(leaving, one)?;
            }
        }
    }

    let mut pairing_stage = StageInvariant::new(
        "3-regular-pairing",
        SumConstraint::Equal(3 * nn),
        SumConstraint::ResidueNot {
            modulus: 3,
            residue: 0,
        },
    );
    for &b in &bad.bad {
        pairing_stage = pairing_stage.with_exception(Part::B, b, SumConstraint::Equal(3 * m));
    }
    let stage_pairing = verify_stage(&h2, &labeling, &pairing_stage);

    // 0-labels: smallest at the bad vertices, the rest over the good
    // vertices in order of increasing partial sum
    let zero_labels = residue_labels(n, 0, 3);
    let partial = SumProfile::partial(graph, &labeling);
    let bad_set: BTreeSet<usize> = bad.bad.iter().copied().collect();
    let mut good: Vec<usize> = (0..n).filter(|v| !bad_set.contains(v)).collect();
    good.sort_by_key(|&v| (partial.sums_b[v], v));
    for (idx, &b) in bad.bad.iter().chain(good.iter()).enumerate() {
        labeling.assign(h1.at_b[b].id, zero_labels[idx])?;
    }

    let mut final_stage = StageInvariant::new(
        "3-regular-final",
        SumConstraint::ResidueIs {
            modulus: 3,
            residue: 0,
        },
        SumConstraint::ResidueNot {
            modulus: 3,
            residue: 0,
        },
    );
    for (r, &b) in bad.bad.iter().enumerate() {
        final_stage = final_stage.with_exception(
            Part::B,
            b,
            SumConstraint::Equal(3 * m + 3 * (r as u64 + 1)),
        );
    }
    let stage_final = verify_stage(graph, &labeling, &final_stage);

    Ok(Outcome {
        labeling,
        stages: vec![stage_pairing, stage_final],
        bad: Some(bad),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen_named, gen_regular_bipartite, Family};
    use crate::verify::verify_antimagic;

    #[test]
    fn k33_a_sums_are_the_expected_multiples() {
        let g = gen_named(Family::CompleteBipartite, 3).unwrap();
        let out = label_3_regular(&g).unwrap();
        for s in &out.stages {
            assert!(s.passed(), "{}: {:?}", s.stage, s.failures);
        }
        let sums = SumProfile::partial(&g, &out.labeling);
        let mut a = sums.sums_a.clone();
        a.sort_unstable();
        assert_eq!(a, vec![12, 15, 18]); // {3n+3, ..., 6n}
        assert!(verify_antimagic(&g, &out.labeling).unwrap().is_antimagic());
    }

    #[test]
    fn q3_is_labeled_antimagically() {
        let g = gen_named(Family::Hypercube3, 4).unwrap();
        let out = label_3_regular(&g).unwrap();
        assert!(verify_antimagic(&g, &out.labeling).unwrap().is_antimagic());
    }

    #[test]
    fn bad_vertices_bounded_and_sums_structured() {
        for n in 3..=14 {
            for seed in 0..5 {
                let g = gen_regular_bipartite(n, 3, seed).unwrap();
                let out = label_3_regular(&g).unwrap();
                let bad = out.bad.as_ref().unwrap();
                assert!(bad.m <= n / 3, "n={n} seed={seed}: {} bad vertices", bad.m);
                for s in &out.stages {
                    assert!(
                        s.passed(),
                        "n={n} seed={seed} {}: {:?}",
                        s.stage,
                        s.failures
                    );
                }
                let sums = SumProfile::partial(&g, &out.labeling);
                let mut a = sums.sums_a.clone();
                a.sort_unstable();
                let expected: Vec<u64> = (1..=n as u64).map(|i| 3 * n as u64 + 3 * i).collect();
                assert_eq!(a, expected);
                assert!(verify_antimagic(&g, &out.labeling).unwrap().is_antimagic());
            }
        }
    }
}
