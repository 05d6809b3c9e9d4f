//! The (2l+2)-factor labeling: equal sums across A, with every B-sum in a
//! different congruence class mod 3.
//!
//! Labels `1..=m` (m = (2l+2)n) are paired so each pair sums to `m+1`; with
//! `m+1 = 2a (mod 3)` a pair is a like-pair (both elements congruent to a)
//! or a split-pair (one element in each other class). Each A-vertex takes l
//! pairs in the 2l-factor and one pair in the final 2-factor, so its total
//! is `t = (m+1)(l+1)`. On the 2l-factor's cycles the pair kinds are kept
//! uniform — a like-to-split switch is forced in at most one cycle and its
//! two boundary B-vertices `x`, `y` are tracked. The 2-factor then places
//! its pairs so every B-vertex, including `x` and `y`, lands outside t's
//! residue class; the per-cycle arrangement is found by an exact search
//! over pair kinds and split orientations.

use crate::error::{Error, Result};
use crate::factorize::{combine_factors, cycle_decomposition, one_factorize, OrientedCycle};
use crate::graph::{BipartiteGraph, Labeling};
use crate::partitions::{pair_partition, LabelPair, PairKind};
use crate::verify::{verify_stage, StageInvariant, StageReport, SumConstraint};

use super::cycle_dp::{distribute_counts, CycleProblem, SlotType};

/// Bookkeeping from the key-lemma run: the common A-sum `t`, the residue
/// `a`, and the exception vertices of the mixed cycle with their sum
/// deviations mod 3 (when a mixed cycle was forced).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyLemmaState {
    pub t: u64,
    pub a: u64,
    pub x: Option<usize>,
    pub y: Option<usize>,
    pub t1: Option<u64>,
    pub t2: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct KeyLemmaOutcome {
    pub labeling: Labeling,
    pub state: KeyLemmaState,
    pub stage: StageReport,
}

impl KeyLemmaOutcome {
    /// True when the stage invariant failed somewhere and the caller should
    /// route the final labeling through repair.
    pub fn needs_repair(&self) -> bool {
        !self.stage.passed()
    }
}

/// How a pair is oriented at an A-vertex along the cycle traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Placement {
    /// Like-pair; the smaller element goes on the entering edge.
    Like,
    /// Split-pair with the (a+1)-class element entering.
    SplitPlus,
    /// Split-pair with the (a+2)-class element entering.
    SplitMinus,
}

/// Labels a (2l+2)-regular bipartite subgraph with `1..=(2l+2)n` so that
/// every A-sum equals `t = (m+1)(l+1)` and every B-sum avoids t's residue
/// class mod 3. If some cycle admits no valid arrangement the labeling is
/// still completed with the fewest violations and the returned stage report
/// carries the failures.
pub fn label_key_lemma(h: &BipartiteGraph, l: usize) -> Result<KeyLemmaOutcome> {
    let n = h.n();
    let k = 2 * l + 2;
    if h.k() != k {
        return Err(Error::NotRegular {
            vertex: "subgraph".into(),
            degree: h.k(),
            expected: k,
        });
    }
    let m = (k * n) as u64;
    let pairs = pair_partition(m)?;
    let a = pairs[0].residue_a;
    let t = (m + 1) * (l as u64 + 1);

    let factorization = one_factorize(h)?;
    let two_factors: Vec<BipartiteGraph> = (0..=l)
        .map(|j| combine_factors(h, &factorization, &[2 * j, 2 * j + 1]))
        .collect::<Result<_>>()?;

    let mut labeling = Labeling::new();
    let mut state = KeyLemmaState {
        t,
        a,
        x: None,
        y: None,
        t1: None,
        t2: None,
    };

    // the 2l-factor uses the pairs whose smaller label is at most l*n
    let (low_pairs, high_pairs) = pairs.split_at(l * n);
    let mut likes: Vec<&LabelPair> = low_pairs
        .iter()
        .filter(|p| p.kind == PairKind::Like)
        .collect();
    let mut splits: Vec<&LabelPair> = low_pairs
        .iter()
        .filter(|p| p.kind == PairKind::Split)
        .collect();
    likes.reverse(); // popped from the back, so ascending order of use
    splits.reverse();

    for two_factor in &two_factors[..l] {
        let decomposition = cycle_decomposition(two_factor)?;
        for cycle in &decomposition.cycles {
            let p = cycle.half_len();
            let like_prefix = if likes.len() >= p { p } else { likes.len() };
            if like_prefix > 0 && like_prefix < p {
                // the one mixed cycle: record the kind-switch vertices
                state.x = Some(cycle.b_vertices[like_prefix - 1]);
                state.y = Some(cycle.b_vertices[p - 1]);
                state.t1 = Some(1);
                state.t2 = Some(2);
            }
            for i in 0..p {
                let (pair, placement) = if i < like_prefix {
                    (*likes.pop().expect("like pool"), Placement::Like)
                } else {
                    (*splits.pop().expect("split pool"), Placement::SplitPlus)
                };
                place_pair(&mut labeling, cycle, i, &pair, placement, a)?;
            }
        }
    }

    // the 2-factor gets the remaining n pairs
    label_final_two_factor(
        &mut labeling,
        &two_factors[l],
        high_pairs,
        a,
        state.x,
        state.y,
    )?;

    let invariant = StageInvariant::new(
        "key-lemma",
        SumConstraint::Equal(t),
        SumConstraint::ResidueNot {
            modulus: 3,
            residue: t % 3,
        },
    );
    let stage = verify_stage(h, &labeling, &invariant);
    Ok(KeyLemmaOutcome {
        labeling,
        state,
        stage,
    })
}

fn label_final_two_factor(
    labeling: &mut Labeling,
    two_factor: &BipartiteGraph,
    pairs: &[LabelPair],
    a: u64,
    x: Option<usize>,
    y: Option<usize>,
) -> Result<()> {
    let decomposition = cycle_decomposition(two_factor)?;

    let types = vec![
        SlotType {
            enter: a % 3,
            leave: a % 3,
            counted: true,
        },
        SlotType {
            enter: (a + 1) % 3,
            leave: (a + 2) % 3,
            counted: false,
        },
        SlotType {
            enter: (a + 2) % 3,
            leave: (a + 1) % 3,
            counted: false,
        },
    ];
    let allow = |set: [u64; 2]| -> Vec<bool> {
        (0..3u64).map(|r| set.iter().any(|&s| s % 3 == r)).collect()
    };
    // a normal B-vertex must avoid 2a; the mixed-cycle exceptions already
    // deviate by 1 or 2 in the 2l-factor, which shifts their allowed set
    let normal = allow([2 * a + 1, 2 * a + 2]);
    let at_x = allow([2 * a, 2 * a + 1]);
    let at_y = allow([2 * a, 2 * a + 2]);

    let problems: Vec<CycleProblem> = decomposition
        .cycles
        .iter()
        .map(|cycle| CycleProblem {
            modulus: 3,
            types: types.clone(),
            allowed: cycle
                .b_vertices
                .iter()
                .map(|&b| {
                    if Some(b) == x {
                        at_x.clone()
                    } else if Some(b) == y {
                        at_y.clone()
                    } else {
                        normal.clone()
                    }
                })
                .collect(),
        })
        .collect();

    let mut likes: Vec<&LabelPair> = pairs.iter().filter(|p| p.kind == PairKind::Like).collect();
    let mut splits: Vec<&LabelPair> = pairs.iter().filter(|p| p.kind == PairKind::Split).collect();
    let total_likes = likes.len();
    likes.reverse();
    splits.reverse();

    let tables: Vec<Vec<u32>> = problems
        .iter()
        .map(|p| p.min_violations_per_count())
        .collect();
    let (_, counts) =
        distribute_counts(&tables, total_likes).ok_or_else(|| Error::ConstructionFailed {
            stage: "key-lemma".into(),
            details: "like-pair supply cannot be spread over the 2-factor cycles".into(),
        })?;

    for ((cycle, problem), &count) in decomposition.cycles.iter().zip(&problems).zip(&counts) {
        let (_, assignment) =
            problem
                .assignment(count)
                .ok_or_else(|| Error::ConstructionFailed {
                    stage: "key-lemma".into(),
                    details: "per-cycle assignment vanished after distribution".into(),
                })?;
        for (i, &type_index) in assignment.iter().enumerate() {
            let (pair, placement) = match type_index {
                0 => (*likes.pop().expect("like pool"), Placement::Like),
                1 => (*splits.pop().expect("split pool"), Placement::SplitPlus),
                _ => (*splits.pop().expect("split pool"), Placement::SplitMinus),
            };
            place_pair(labeling, cycle, i, &pair, placement, a)?;
        }
    }
    Ok(())
}

/// Writes a pair onto the two cycle edges at A-position `i`: the entering
/// edge is the one arriving from the previous B-vertex, the leaving edge
/// continues the traversal.
fn place_pair(
    labeling: &mut Labeling,
    cycle: &OrientedCycle,
    i: usize,
    pair: &LabelPair,
    placement: Placement,
    a: u64,
) -> Result<()> {
    let p = cycle.half_len();
    let entering = cycle.edges[(2 * i + 2 * p - 1) % (2 * p)];
    let leaving = cycle.edges[2 * i];
    let (enter_label, leave_label) = match placement {
        Placement::Like => (pair.low, pair.high),
        Placement::SplitPlus => {
            let e = pair.element_with_residue((a + 1) % 3).expect("split pair");
            (e, pair.low + pair.high - e)
        }
        Placement::SplitMinus => {
            let e = pair.element_with_residue((a + 2) % 3).expect("split pair");
            (e, pair.low + pair.high - e)
        }
    };
    labeling.assign(entering, enter_label)?;
    labeling.assign(leaving, leave_label)?;
    Ok(())
}
