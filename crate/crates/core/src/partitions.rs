//! Residue-class label sets and the pair/triple partition lemmas.
//!
//! These are the arithmetic building blocks of the constructions: labels
//! `1..=m` split into pairs summing to `m+1` (classified by residue mod 3),
//! `{1..3n}` split into triples covering all residue classes mod 3 with two
//! possible sums, and the non-multiples of 4 below `4n` split into triples
//! covering the nonzero residue classes mod 4.

use crate::error::{Error, Result};

/// How a pair summing to `m+1` sits in the residue classes mod 3, relative
/// to the residue `a` with `m+1 = 2a (mod 3)`: a like-pair has both elements
/// congruent to `a`, a split-pair one element in each of the other classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Like,
    Split,
}

/// A pair of labels `(low, high)` with `low + high = m + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelPair {
    pub low: u64,
    pub high: u64,
    pub kind: PairKind,
    /// The residue `a` mod 3 against which the pair is classified.
    pub residue_a: u64,
}

impl LabelPair {
    /// The element of the pair congruent to `r` mod 3, when one exists.
    pub fn element_with_residue(&self, r: u64) -> Option<u64> {
        if self.low % 3 == r {
            Some(self.low)
        } else if self.high % 3 == r {
            Some(self.high)
        } else {
            None
        }
    }
}

/// A triple of labels with a prescribed sum, covering one label per residue
/// class ({0,1,2} mod 3, or {1,2,3} mod 4).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelTriple {
    pub labels: [u64; 3],
    pub target_sum: u64,
    pub modulus: u64,
    /// Residues of `labels` under `modulus`, in label order.
    pub residue_signature: [u64; 3],
}

impl LabelTriple {
    fn new(labels: [u64; 3], modulus: u64, expected_residues: [u64; 3]) -> Result<Self> {
        let target_sum = labels.iter().sum();
        let residue_signature = [
            labels[0] % modulus,
            labels[1] % modulus,
            labels[2] % modulus,
        ];
        let mut got = residue_signature;
        let mut want = expected_residues;
        got.sort_unstable();
        want.sort_unstable();
        if got != want {
            return Err(Error::ConstructionFailed {
                stage: "triple-partition".into(),
                details: format!(
                    "triple {labels:?} covers residues {got:?} mod {modulus}, expected {want:?}"
                ),
            });
        }
        Ok(Self {
            labels,
            target_sum,
            modulus,
            residue_signature,
        })
    }

    /// The element congruent to `r` under the triple's modulus.
    pub fn element_with_residue(&self, r: u64) -> Option<u64> {
        self.labels.iter().copied().find(|&l| l % self.modulus == r)
    }
}

/// The `count` smallest positive integers congruent to `j` mod `modulus`,
/// ascending. For `j = 0` these start at `modulus`.
pub fn residue_labels(count: usize, j: u64, modulus: u64) -> Vec<u64> {
    assert!(j < modulus, "residue out of range");
    let first = if j == 0 { modulus } else { j };
    (0..count as u64).map(|i| first + i * modulus).collect()
}

/// Partitions `1..=m` (m even) into `m/2` pairs `(i, m+1-i)`, classified
/// like/split against the residue `a` with `m+1 = 2a (mod 3)`.
pub fn pair_partition(m: u64) -> Result<Vec<LabelPair>> {
    if !m.is_multiple_of(2) {
        return Err(Error::ConstructionFailed {
            stage: "pair-partition".into(),
            details: format!("label count {m} is odd"),
        });
    }
    // 2 is its own inverse mod 3, so a = 2(m+1) mod 3
    let a = (2 * (m + 1)) % 3;
    let pairs = (1..=m / 2)
        .map(|i| {
            let low = i;
            let high = m + 1 - i;
            let kind = if low % 3 == a && high % 3 == a {
                PairKind::Like
            } else {
                PairKind::Split
            };
            LabelPair {
                low,
                high,
                kind,
                residue_a: a,
            }
        })
        .collect();
    Ok(pairs)
}

/// Partitions `{1..3n}` into `n` triples, each covering one label per
/// residue class mod 3; triple sums are `{6n+3, 3n}` for even `n` and
/// `{6n, 3n}` for odd `n`. Output keeps the first-type triples (by index i)
/// before the second-type ones.
pub fn triple_partition_mod3(n: u64) -> Result<Vec<LabelTriple>> {
    assert!(n >= 1);
    let mut triples = Vec::with_capacity(n as usize);
    if n.is_multiple_of(2) {
        for i in 1..=n / 2 {
            triples.push(LabelTriple::new(
                [3 * n - 3 * i + 3, 3 * n - 3 * i + 2, 6 * i - 2],
                3,
                [0, 1, 2],
            )?);
        }
        for i in 1..=n / 2 {
            triples.push(LabelTriple::new(
                [3 * i, 3 * i - 1, 3 * n - 6 * i + 1],
                3,
                [0, 1, 2],
            )?);
        }
    } else {
        for i in 1..=n.div_ceil(2) {
            triples.push(LabelTriple::new(
                [3 * n - 3 * i + 3, 3 * n - 3 * i + 2, 6 * i - 5],
                3,
                [0, 1, 2],
            )?);
        }
        for i in 1..=n / 2 {
            triples.push(LabelTriple::new(
                [3 * i, 3 * i - 1, 3 * n - 6 * i + 1],
                3,
                [0, 1, 2],
            )?);
        }
    }
    Ok(triples)
}

/// Partitions `H = {1..4n-1} \ {multiples of 4}` into `n` triples, each
/// covering one label per nonzero residue class mod 4; triple sums are
/// `{8n+2, 4n-2}` for even `n` and `{8n-2, 4n-2}` for odd `n`.
pub fn triple_partition_mod4(n: u64) -> Result<Vec<LabelTriple>> {
    assert!(n >= 1);
    let mut triples = Vec::with_capacity(n as usize);
    if n.is_multiple_of(2) {
        for i in 1..=n / 2 {
            triples.push(LabelTriple::new(
                [8 * i - 3, 4 * n - 4 * i + 2, 4 * n - 4 * i + 3],
                4,
                [1, 2, 3],
            )?);
        }
        for i in 1..=n / 2 {
            triples.push(LabelTriple::new(
                [4 * n - 8 * i + 1, 4 * i - 2, 4 * i - 1],
                4,
                [1, 2, 3],
            )?);
        }
    } else {
        for i in 1..=n.div_ceil(2) {
            triples.push(LabelTriple::new(
                [8 * i - 7, 4 * n - 4 * i + 2, 4 * n - 4 * i + 3],
                4,
                [1, 2, 3],
            )?);
        }
        for i in 1..=n / 2 {
            triples.push(LabelTriple::new(
                [4 * n - 8 * i + 1, 4 * i - 2, 4 * i - 1],
                4,
                [1, 2, 3],
            )?);
        }
    }
    Ok(triples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn residue_label_lists() {
        assert_eq!(residue_labels(3, 0, 3), vec![3, 6, 9]);
        assert_eq!(residue_labels(3, 1, 3), vec![1, 4, 7]);
        assert_eq!(residue_labels(2, 2, 4), vec![2, 6]);
    }

    #[test]
    fn pair_partition_m12() {
        let pairs = pair_partition(12).unwrap();
        assert_eq!(pairs.len(), 6);
        assert!(pairs.iter().all(|p| p.low + p.high == 13));
        // 13 = 2a (mod 3) gives a = 2
        assert_eq!(pairs[0].residue_a, 2);
        let p2 = pairs.iter().find(|p| p.low == 2).unwrap();
        assert_eq!(p2.kind, PairKind::Like);
        let p1 = pairs.iter().find(|p| p.low == 1).unwrap();
        assert_eq!(p1.kind, PairKind::Split);
    }

    #[test]
    fn pair_partition_m2_and_odd() {
        let pairs = pair_partition(2).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!((pairs[0].low, pairs[0].high), (1, 2));
        assert!(pair_partition(7).is_err());
    }

    #[test]
    fn pair_partition_m24_like_count() {
        let pairs = pair_partition(24).unwrap();
        assert_eq!(pairs.len(), 12);
        // enumerating residues of all 12 pairs: exactly those with both
        // entries congruent to a are like-pairs
        let a = pairs[0].residue_a;
        let like_by_enumeration = pairs
            .iter()
            .filter(|p| p.low % 3 == a && p.high % 3 == a)
            .count();
        let like_by_kind = pairs.iter().filter(|p| p.kind == PairKind::Like).count();
        assert_eq!(like_by_enumeration, like_by_kind);
        assert_eq!(like_by_kind, 4);
    }

    fn check_triples(triples: &[LabelTriple], universe: &BTreeSet<u64>, sums: &BTreeSet<u64>) {
        let mut seen = BTreeSet::new();
        for t in triples {
            assert!(
                sums.contains(&t.target_sum),
                "unexpected sum {}",
                t.target_sum
            );
            for &l in &t.labels {
                assert!(seen.insert(l), "label {l} repeated");
            }
        }
        assert_eq!(&seen, universe);
    }

    #[test]
    fn triples_mod3_small() {
        let t1 = triple_partition_mod3(1).unwrap();
        assert_eq!(t1.len(), 1);
        assert_eq!(t1[0].labels, [3, 2, 1]);
        assert_eq!(t1[0].target_sum, 6);

        let t2 = triple_partition_mod3(2).unwrap();
        assert_eq!(t2[0].labels, [6, 5, 4]);
        assert_eq!(t2[1].labels, [3, 2, 1]);
        assert_eq!(t2[0].target_sum, 15); // 6n+3
        assert_eq!(t2[1].target_sum, 6); // 3n

        let t3 = triple_partition_mod3(3).unwrap();
        assert_eq!(t3[0].labels, [9, 8, 1]);
        assert_eq!(t3[1].labels, [6, 5, 7]);
        assert_eq!(t3[2].labels, [3, 2, 4]);
        assert_eq!(
            t3.iter().map(|t| t.target_sum).collect::<Vec<_>>(),
            vec![18, 18, 9]
        );
    }

    #[test]
    fn triples_mod3_partition_sweep() {
        for n in 1..=60u64 {
            let triples = triple_partition_mod3(n).unwrap();
            assert_eq!(triples.len(), n as usize);
            let universe: BTreeSet<u64> = (1..=3 * n).collect();
            let sums: BTreeSet<u64> = if n % 2 == 0 {
                [3 * n, 6 * n + 3].into_iter().collect()
            } else {
                [3 * n, 6 * n].into_iter().collect()
            };
            check_triples(&triples, &universe, &sums);
        }
    }

    #[test]
    fn triples_mod4_small() {
        let t1 = triple_partition_mod4(1).unwrap();
        assert_eq!(t1[0].labels, [1, 2, 3]);
        assert_eq!(t1[0].target_sum, 6); // 8n-2

        let t2 = triple_partition_mod4(2).unwrap();
        assert_eq!(t2[0].labels, [5, 6, 7]);
        assert_eq!(t2[1].labels, [1, 2, 3]);
        assert_eq!(t2[0].target_sum, 18); // 8n+2
        assert_eq!(t2[1].target_sum, 6); // 4n-2

        let t3 = triple_partition_mod4(3).unwrap();
        assert_eq!(t3[0].labels, [1, 10, 11]);
        assert_eq!(t3[1].labels, [9, 6, 7]);
        assert_eq!(t3[2].labels, [5, 2, 3]);
        assert_eq!(
            t3.iter().map(|t| t.target_sum).collect::<Vec<_>>(),
            vec![22, 22, 10]
        );
    }

    #[test]
    fn triples_mod4_partition_sweep() {
        for n in 1..=60u64 {
            let triples = triple_partition_mod4(n).unwrap();
            assert_eq!(triples.len(), n as usize);
            let universe: BTreeSet<u64> = (1..4 * n).filter(|l| l % 4 != 0).collect();
            let sums: BTreeSet<u64> = if n % 2 == 0 {
                [4 * n - 2, 8 * n + 2].into_iter().collect()
            } else {
                [4 * n - 2, 8 * n - 2].into_iter().collect()
            };
            check_triples(&triples, &universe, &sums);
        }
    }

    #[test]
    fn pair_partition_covers_universe() {
        for m in (2..=200u64).step_by(2) {
            let pairs = pair_partition(m).unwrap();
            let mut seen = BTreeSet::new();
            for p in &pairs {
                assert_eq!(p.low + p.high, m + 1);
                assert!(p.low < p.high);
                seen.insert(p.low);
                seen.insert(p.high);
                match p.kind {
                    PairKind::Like => {
                        assert_eq!(p.low % 3, p.residue_a);
                        assert_eq!(p.high % 3, p.residue_a);
                    }
                    PairKind::Split => {
                        assert_ne!(p.low % 3, p.high % 3);
                        assert!(p.low % 3 != p.residue_a || p.high % 3 != p.residue_a);
                    }
                }
            }
            assert_eq!(seen, (1..=m).collect::<BTreeSet<u64>>());
        }
    }
}
