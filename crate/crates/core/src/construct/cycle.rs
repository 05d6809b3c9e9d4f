//! Cycle labeling and disjoint-union composition; together they settle the
//! 2-regular case.

use crate::error::{Error, Result};
use crate::factorize::cycle_decomposition;
use crate::graph::{BipartiteGraph, Labeling};

/// Labels one cycle of the given length so that consecutive-edge sums are
/// pairwise distinct: `1, 3, ..., n, n-1, ..., 4, 2` in traversal order for
/// odd length, with the two largest labels switched in the middle for even
/// length. Returned labels are in traversal order; the vertex between
/// positions i and i+1 receives their label sum.
pub fn label_cycle(length: usize) -> Vec<u64> {
    assert!(length >= 3, "a cycle has at least 3 edges");
    let n = length as u64;
    let mut labels: Vec<u64> = (1..=n).step_by(2).collect();
    let mut evens: Vec<u64> = (2..=n).step_by(2).collect();
    evens.reverse();
    labels.extend(evens);
    labels
}

/// A labeled regular component of a disjoint union: its degree and its
/// `(edge id, label)` assignment using labels `1..=|E|` of the component.
#[derive(Debug, Clone)]
pub struct LabeledComponent {
    pub degree: usize,
    pub labels: Vec<(usize, u64)>,
}

/// Composes antimagic labelings of disjoint regular components by shifting
/// each component's labels past all previous ones. Translating every label
/// of a regular component moves all of its vertex-sums by the same amount,
/// so each component stays conflict-free and the blocks cannot collide.
/// Components must arrive sorted by non-decreasing degree.
pub fn compose_disjoint_union(components: &[LabeledComponent]) -> Result<Labeling> {
    if components.windows(2).any(|w| w[0].degree > w[1].degree) {
        return Err(Error::UnsortedComponents);
    }
    let mut out = Labeling::new();
    let mut shift = 0u64;
    for c in components {
        for &(edge, label) in &c.labels {
            out.assign(edge, label + shift)?;
        }
        shift += c.labels.len() as u64;
    }
    Ok(out)
}

/// Labels a 2-regular bipartite graph (a disjoint union of even cycles) by
/// labeling each cycle and composing.
pub fn label_2_regular(graph: &BipartiteGraph) -> Result<Labeling> {
    if graph.k() != 2 {
        return Err(Error::NotTwoRegular);
    }
    let decomposition = cycle_decomposition(graph)?;
    let components: Vec<LabeledComponent> = decomposition
        .cycles
        .iter()
        .map(|cycle| {
            let labels = label_cycle(cycle.edges.len());
            LabeledComponent {
                degree: 2,
                labels: cycle.edges.iter().copied().zip(labels).collect(),
            }
        })
        .collect();
    compose_disjoint_union(&components)
}

/// Sums at the vertices of a standalone cycle labeled in traversal order.
pub fn cycle_vertex_sums(labels: &[u64]) -> Vec<u64> {
    let n = labels.len();
    (0..n).map(|i| labels[i] + labels[(i + 1) % n]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen_named, Family};
    use crate::verify::verify_antimagic;
    use std::collections::BTreeSet;

    #[test]
    fn fact1_sequences() {
        assert_eq!(label_cycle(3), vec![1, 3, 2]);
        assert_eq!(label_cycle(4), vec![1, 3, 4, 2]);
        assert_eq!(label_cycle(5), vec![1, 3, 5, 4, 2]);
        assert_eq!(label_cycle(6), vec![1, 3, 5, 6, 4, 2]);
    }

    #[test]
    fn fact1_sums() {
        assert_eq!(cycle_vertex_sums(&label_cycle(3)), vec![4, 5, 3]);
        assert_eq!(cycle_vertex_sums(&label_cycle(4)), vec![4, 7, 6, 3]);
        assert_eq!(cycle_vertex_sums(&label_cycle(5)), vec![4, 8, 9, 6, 3]);
    }

    #[test]
    fn fact1_sums_distinct_for_all_lengths() {
        for len in 3..=60 {
            let sums = cycle_vertex_sums(&label_cycle(len));
            let distinct: BTreeSet<u64> = sums.iter().copied().collect();
            assert_eq!(distinct.len(), len, "length {len}");
        }
    }

    #[test]
    fn compose_c3_with_c4() {
        // abstract components: C3 on edges 0..3, C4 on edges 3..7
        let c3 = LabeledComponent {
            degree: 2,
            labels: vec![(0, 1), (1, 3), (2, 2)],
        };
        let c4 = LabeledComponent {
            degree: 2,
            labels: vec![(3, 1), (4, 3), (5, 4), (6, 2)],
        };
        let composed = compose_disjoint_union(&[c3, c4]).unwrap();
        let shifted: Vec<u64> = (3..7).map(|e| composed.get(e).unwrap()).collect();
        assert_eq!(shifted, vec![4, 6, 7, 5]);

        // recompute all seven vertex sums and check distinctness
        let c3_sums = cycle_vertex_sums(&[1, 3, 2]);
        let c4_sums = cycle_vertex_sums(&shifted);
        let all: BTreeSet<u64> = c3_sums.iter().chain(c4_sums.iter()).copied().collect();
        assert_eq!(all.len(), 7);
        assert!(c3_sums.iter().max() < c4_sums.iter().min());
    }

    #[test]
    fn compose_two_copies_of_c4() {
        let first = LabeledComponent {
            degree: 2,
            labels: vec![(0, 1), (1, 3), (2, 4), (3, 2)],
        };
        let second = LabeledComponent {
            degree: 2,
            labels: vec![(4, 1), (5, 3), (6, 4), (7, 2)],
        };
        let composed = compose_disjoint_union(&[first, second]).unwrap();
        let shifted: Vec<u64> = (4..8).map(|e| composed.get(e).unwrap()).collect();
        assert_eq!(shifted, vec![5, 7, 8, 6]);
        let first_sums = cycle_vertex_sums(&[1, 3, 4, 2]);
        let second_sums = cycle_vertex_sums(&shifted);
        let all: BTreeSet<u64> = first_sums
            .iter()
            .chain(second_sums.iter())
            .copied()
            .collect();
        assert_eq!(all.len(), 8);
        assert!(first_sums.iter().max() < second_sums.iter().min());
    }

    #[test]
    fn compose_single_component_unchanged() {
        let c = LabeledComponent {
            degree: 2,
            labels: vec![(0, 1), (1, 3), (2, 4), (3, 2)],
        };
        let composed = compose_disjoint_union(std::slice::from_ref(&c)).unwrap();
        for &(e, l) in &c.labels {
            assert_eq!(composed.get(e), Some(l));
        }
    }

    #[test]
    fn compose_rejects_decreasing_degree() {
        let hi = LabeledComponent {
            degree: 3,
            labels: vec![(0, 1)],
        };
        let lo = LabeledComponent {
            degree: 2,
            labels: vec![(1, 1)],
        };
        assert_eq!(
            compose_disjoint_union(&[hi, lo]).unwrap_err(),
            Error::UnsortedComponents
        );
    }

    #[test]
    fn two_regular_cycles_are_antimagic() {
        for n in [2usize, 3, 5, 8] {
            let g = gen_named(Family::Cycle, n).unwrap();
            let labeling = label_2_regular(&g).unwrap();
            assert!(verify_antimagic(&g, &labeling).unwrap().is_antimagic());
        }
    }

    #[test]
    fn two_regular_disjoint_union_is_antimagic() {
        // C4 + C6 on parts of size 5
        let g = BipartiteGraph::new(
            5,
            2,
            &[
                (0, 0),
                (0, 1),
                (1, 1),
                (1, 0),
                (2, 2),
                (3, 2),
                (3, 3),
                (4, 3),
                (4, 4),
                (2, 4),
            ],
        )
        .unwrap();
        let labeling = label_2_regular(&g).unwrap();
        assert!(verify_antimagic(&g, &labeling).unwrap().is_antimagic());
    }
}
