//! Labeling a 3-factor so the B-sums are a prescribed arithmetic
//! progression: at the i-th vertex of the given B-order the sum is
//! `3n + 3i` (plus three times the label offset), and exactly one A-vertex
//! attains each of those values as well.

use crate::error::{Error, Result};
use crate::factorize::one_factorize;
use crate::graph::{BipartiteGraph, Labeling};
use crate::verify::{Part, StageInvariant, StageReport, SumConstraint};

use super::{edges_by_id, factor_lookup};

/// Labels a 3-regular subgraph with `offset + {1..3n}`. Decomposes into
/// three 1-factors R, S, T; R uses labels `3i-2` keyed to `b_order`, S uses
/// `3n+3-3i` at the R-partner in A, and T uses `3i-1` at the S-partner in
/// B, so each 1-factor carries one congruence class mod 3.
pub fn label_three_factor(
    h3: &BipartiteGraph,
    b_order: &[usize],
    offset: u64,
) -> Result<(Labeling, StageReport)> {
    let n = h3.n();
    if h3.k() != 3 {
        return Err(Error::NotRegular {
            vertex: "subgraph".into(),
            degree: h3.k(),
            expected: 3,
        });
    }
    {
        let mut seen = vec![false; n];
        for &b in b_order {
            if b >= n || seen[b] {
                return Err(Error::ConstructionFailed {
                    stage: "three-factor".into(),
                    details: format!("b_order is not a permutation of 0..{n}"),
                });
            }
            seen[b] = true;
        }
        if b_order.len() != n {
            return Err(Error::ConstructionFailed {
                stage: "three-factor".into(),
                details: format!("b_order has {} entries, expected {n}", b_order.len()),
            });
        }
    }

    let by_id = edges_by_id(h3);
    let factorization = one_factorize(h3)?;
    let r = factor_lookup(h3, &factorization.factors()[0], &by_id);
    let s = factor_lookup(h3, &factorization.factors()[1], &by_id);
    let t = factor_lookup(h3, &factorization.factors()[2], &by_id);

    let nn = n as u64;
    let mut labeling = Labeling::new();
    let mut invariant = StageInvariant::new(
        "three-factor-b-sums",
        SumConstraint::Unconstrained,
        SumConstraint::Unconstrained,
    );
    for (idx, &b_i) in b_order.iter().enumerate() {
        let i = idx as u64 + 1;
        let e_r = r.at_b[b_i];
        labeling.assign(e_r.id, offset + 3 * i - 2)?;
        let a_i = e_r.a;
        let e_s = s.at_a[a_i];
        labeling.assign(e_s.id, offset + 3 * nn + 3 - 3 * i)?;
        let b_prime = e_s.b;
        let e_t = t.at_b[b_prime];
        labeling.assign(e_t.id, offset + 3 * i - 1)?;
        invariant = invariant.with_exception(
            Part::B,
            b_i,
            SumConstraint::Equal(3 * offset + 3 * nn + 3 * i),
        );
    }
    let report = crate::verify::verify_stage(h3, &labeling, &invariant);
    Ok((labeling, report))
}
