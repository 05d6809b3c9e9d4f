//! Even degree k = 2l+8: a (2l+2)-factor labeled by the key lemma over all
//! but the 6n smallest labels, one 3-factor carrying the mod-3 triples of
//! the labels 3n+1..6n (one residue class per 1-factor, so every B partial
//! sum stays 0 mod 3), and a final 3-factor labeled over B in order of
//! increasing partial sum.

use crate::error::Result;
use crate::factorize::{combine_factors, one_factorize};
use crate::graph::{BipartiteGraph, Labeling};
use crate::partitions::triple_partition_mod3;
use crate::verify::{verify_stage, StageInvariant, SumConstraint};

use super::{
    b_vertices_by_partial_sum, edges_by_id, factor_lookup, label_key_lemma, label_three_factor,
    ConstructionParams, Outcome,
};

/// Labels a k-regular bipartite graph with even k >= 8.
pub fn label_even_ge8(graph: &BipartiteGraph) -> Result<Outcome> {
    let n = graph.n();
    let nn = n as u64;
    let k = graph.k();
    let params = ConstructionParams::even_high(k, n)?;

    let by_id = edges_by_id(graph);
    let factorization = one_factorize(graph)?;
    let g3 = combine_factors(graph, &factorization, &[0, 1, 2])?;
    let g3_lookups: Vec<_> = (0..3)
        .map(|i| factor_lookup(graph, &factorization.factors()[i], &by_id))
        .collect();
    let h3 = combine_factors(graph, &factorization, &[3, 4, 5])?;
    let big_indices: Vec<usize> = (6..k).collect();
    let h_big = combine_factors(graph, &factorization, &big_indices)?;

    // the (2l+2)-factor takes all but the 6n smallest labels
    let key = label_key_lemma(&h_big, params.l)?;
    let mut stages = vec![key.stage.clone()];
    let mut labeling = Labeling::new();
    for (edge, label) in key.labeling.iter() {
        labeling.assign(edge, label + params.label_offset)?;
    }
    let t_shifted = key.state.t + params.label_offset * (2 * params.l as u64 + 2);

    // G3: mod-3 triples of {3n+1..6n}; residue class c goes on 1-factor c,
    // so each B-vertex collects one label of every class
    let triples = triple_partition_mod3(nn)?;
    for (v, triple) in triples.iter().enumerate() {
        for (c, lookup) in g3_lookups.iter().enumerate() {
            let base = triple
                .element_with_residue(c as u64)
                .expect("mod-3 triples cover 0, 1, 2");
            labeling.assign(lookup.at_a[v].id, base + 3 * nn)?;
        }
    }
    let g3_stage = StageInvariant::new(
        "even-ge8-g3",
        SumConstraint::ResidueIs {
            modulus: 3,
            residue: 0,
        },
        SumConstraint::ResidueIs {
            modulus: 3,
            residue: 0,
        },
    );
    {
        // check the G3 contribution alone
        let mut g3_only = Labeling::new();
        for e in g3.edges() {
            g3_only.assign(e.id, labeling.get(e.id).expect("G3 labeled"))?;
        }
        stages.push(verify_stage(&g3, &g3_only, &g3_stage));
    }

    // after H_{2l+2} and G3, A-sums are 0 mod 3 shifted by t's class while
    // B-sums stay outside it
    let combined_stage = StageInvariant::new(
        "even-ge8-partial",
        SumConstraint::ResidueIs {
            modulus: 3,
            residue: t_shifted % 3,
        },
        SumConstraint::ResidueNot {
            modulus: 3,
            residue: t_shifted % 3,
        },
    );
    stages.push(verify_stage(graph, &labeling, &combined_stage));

    let b_order = b_vertices_by_partial_sum(graph, &labeling);
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
    use crate::generate::gen_regular_bipartite;
    use crate::graph::SumProfile;
    use crate::verify::verify_antimagic;
    use std::collections::BTreeSet;

    #[test]
    fn eight_regular_random_graph_is_antimagic() {
        let g = gen_regular_bipartite(10, 8, 1).unwrap();
        let out = label_even_ge8(&g).unwrap();
        for s in &out.stages {
            assert!(s.passed(), "{}: {:?}", s.stage, s.failures);
        }
        assert!(verify_antimagic(&g, &out.labeling).unwrap().is_antimagic());
    }

    #[test]
    fn g3_uses_exactly_the_middle_label_block() {
        let g = gen_regular_bipartite(9, 8, 5).unwrap();
        let out = label_even_ge8(&g).unwrap();
        let f = one_factorize(&g).unwrap();
        let g3_ids: BTreeSet<usize> = (0..3)
            .flat_map(|i| f.factors()[i].edge_ids().iter().copied())
            .collect();
        let g3_labels: BTreeSet<u64> = out
            .labeling
            .iter()
            .filter(|(e, _)| g3_ids.contains(e))
            .map(|(_, l)| l)
            .collect();
        let n = 9u64;
        assert_eq!(g3_labels, (3 * n + 1..=6 * n).collect::<BTreeSet<u64>>());
    }

    #[test]
    fn ten_regular_is_antimagic() {
        let g = gen_regular_bipartite(12, 10, 2).unwrap();
        let out = label_even_ge8(&g).unwrap();
        assert!(verify_antimagic(&g, &out.labeling).unwrap().is_antimagic());
    }

    #[test]
    fn a_and_b_separate_mod_3_before_the_final_factor() {
        let g = gen_regular_bipartite(11, 8, 4).unwrap();
        let out = label_even_ge8(&g).unwrap();
        let f = one_factorize(&g).unwrap();
        let h3_ids: BTreeSet<usize> = (3..6)
            .flat_map(|i| f.factors()[i].edge_ids().iter().copied())
            .collect();
        let mut partial = Labeling::new();
        for (e, l) in out.labeling.iter() {
            if !h3_ids.contains(&e) {
                partial.assign(e, l).unwrap();
            }
        }
        let sums = SumProfile::partial(&g, &partial);
        let class = sums.sums_a[0] % 3;
        assert!(sums.sums_a.iter().all(|&s| s % 3 == class));
        assert!(sums.sums_b.iter().all(|&s| s % 3 != class));
    }

    #[test]
    fn rejects_wrong_degree() {
        let g = gen_regular_bipartite(8, 6, 0).unwrap();
        assert!(label_even_ge8(&g).is_err());
    }
}
