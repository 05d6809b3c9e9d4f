//! Odd degree k = 2l+5: a (2l+2)-factor labeled by the key lemma (labels
//! shifted past the 3n smallest, which moves every vertex-sum by a multiple
//! of 3 and so preserves the congruence structure), then a 3-factor labeled
//! over B in order of increasing partial sum.

use crate::error::Result;
use crate::factorize::{combine_factors, one_factorize};
use crate::graph::{BipartiteGraph, Labeling};
use crate::verify::{verify_stage, StageInvariant, SumConstraint};

use super::{
    b_vertices_by_partial_sum, label_key_lemma, label_three_factor, ConstructionParams, Outcome,
};

/// Labels a k-regular bipartite graph with odd k >= 5.
pub fn label_odd_regular(graph: &BipartiteGraph) -> Result<Outcome> {
    let n = graph.n();
    let k = graph.k();
    let params = ConstructionParams::odd(k, n)?;
    let factorization = one_factorize(graph)?;
    let h3 = combine_factors(graph, &factorization, &[0, 1, 2])?;
    let big_indices: Vec<usize> = (3..k).collect();
    let h_big = combine_factors(graph, &factorization, &big_indices)?;

    let key = label_key_lemma(&h_big, params.l)?;
    let mut stages = vec![key.stage.clone()];

    // shift the (2l+2)-factor labels past 1..3n
    let mut labeling = Labeling::new();
    for (edge, label) in key.labeling.iter() {
        labeling.assign(edge, label + params.label_offset)?;
    }
    let degree_big = (2 * params.l + 2) as u64;
    let t_shifted = key.state.t + params.label_offset * degree_big;
    let shifted_stage = StageInvariant::new(
        "odd-shifted",
        SumConstraint::Equal(t_shifted),
        SumConstraint::ResidueNot {
            modulus: 3,
            residue: t_shifted % 3,
        },
    );
    stages.push(verify_stage(&h_big, &labeling, &shifted_stage));

    let b_order = b_vertices_by_partial_sum(&h_big, &labeling);
    let (h3_labels, h3_stage) = label_three_factor(&h3, &b_order, 0)?;
    labeling.absorb(&h3_labels)?;
    stages.push(h3_stage);

    Ok(Outcome {
        labeling,
        stages,
        bad: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen_named, gen_regular_bipartite, Family};
    use crate::graph::SumProfile;
    use crate::verify::verify_antimagic;

    #[test]
    fn k55_is_antimagic() {
        let g = gen_named(Family::CompleteBipartite, 5).unwrap();
        let out = label_odd_regular(&g).unwrap();
        for s in &out.stages {
            assert!(s.passed(), "{}: {:?}", s.stage, s.failures);
        }
        assert!(verify_antimagic(&g, &out.labeling).unwrap().is_antimagic());
    }

    #[test]
    fn shifting_preserves_residue_classes() {
        // the shift adds 3n per edge, i.e. a multiple of 3 per vertex, so
        // every partial sum keeps its residue class mod 3
        let g = gen_regular_bipartite(6, 5, 13).unwrap();
        let f = one_factorize(&g).unwrap();
        let big: Vec<usize> = (3..5).collect();
        let h_big = combine_factors(&g, &f, &big).unwrap();
        let key = label_key_lemma(&h_big, 0).unwrap();

        let mut shifted = Labeling::new();
        for (e, l) in key.labeling.iter() {
            shifted.assign(e, l + 18).unwrap();
        }
        let before = SumProfile::partial(&h_big, &key.labeling);
        let after = SumProfile::partial(&h_big, &shifted);
        for v in 0..6 {
            assert_eq!(before.sums_a[v] % 3, after.sums_a[v] % 3);
            assert_eq!(before.sums_b[v] % 3, after.sums_b[v] % 3);
        }
    }

    #[test]
    fn random_seven_regular_is_antimagic() {
        let g = gen_regular_bipartite(10, 7, 7).unwrap();
        let out = label_odd_regular(&g).unwrap();
        assert!(verify_antimagic(&g, &out.labeling).unwrap().is_antimagic());
    }

    #[test]
    fn rejects_even_or_small_degree() {
        let g = gen_regular_bipartite(6, 4, 0).unwrap();
        assert!(label_odd_regular(&g).is_err());
        let g = gen_regular_bipartite(5, 3, 0).unwrap();
        assert!(label_odd_regular(&g).is_err());
    }
}
