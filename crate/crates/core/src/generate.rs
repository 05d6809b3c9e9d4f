//! Test-graph generators: random k-regular bipartite graphs and named
//! families.
//!
//! Random generation stacks k permutations of `[0, n)`, each contributing a
//! perfect matching. A permutation colliding with an earlier one (which
//! would create a parallel edge) is rejected and resampled; if the rejection
//! cap is hit — which happens routinely once k approaches n — the matching
//! is instead built directly on the still-allowed pairs with a randomized
//! augmenting-path search, which always succeeds because the allowed graph
//! stays regular. All randomness flows from the seed.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Per-permutation rejection attempts before switching to the
/// augmenting-path fallback.
const REJECTION_CAP: usize = 10_000;

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Even cycle C_{2n} (2-regular on parts of size n).
    Cycle,
    /// Complete bipartite K_{n,n} (n-regular).
    CompleteBipartite,
    /// The 3-cube Q3 (3-regular, parts of size 4).
    Hypercube3,
    /// K_{n,n} minus a perfect matching ((n-1)-regular).
    Crown,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "cycle" => Ok(Family::Cycle),
            "complete_bipartite" => Ok(Family::CompleteBipartite),
            "hypercube3" => Ok(Family::Hypercube3),
            "crown" => Ok(Family::Crown),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

/// Generates a simple k-regular bipartite graph on parts of size n,
/// deterministic for fixed `(n, k, seed)`.
pub fn gen_regular_bipartite(n: usize, k: usize, seed: u64) -> Result<BipartiteGraph> {
    if k < 2 {
        return Err(Error::DegreeTooSmall { k });
    }
    if k > n {
        return Err(Error::DegreeExceedsPartSize { k, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // used[a] marks the b's already adjacent to a
    let mut used = vec![vec![false; n]; n];
    let mut pairs = Vec::with_capacity(k * n);

    for _ in 0..k {
        let perm = match sample_disjoint_permutation(n, &used, &mut rng) {
            Some(p) => p,
            None => matching_on_allowed_pairs(n, &used, &mut rng)?,
        };
        for (a, &b) in perm.iter().enumerate() {
            used[a][b] = true;
            pairs.push((a, b));
        }
    }
    BipartiteGraph::new(n, k, &pairs)
}

fn sample_disjoint_permutation(
    n: usize,
    used: &[Vec<bool>],
    rng: &mut ChaCha8Rng,
) -> Option<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    for _ in 0..REJECTION_CAP {
        perm.shuffle(rng);
        if perm.iter().enumerate().all(|(a, &b)| !used[a][b]) {
            return Some(perm);
        }
    }
    None
}

/// Perfect matching avoiding the used pairs, via augmenting paths over a
/// randomly permuted vertex order. The allowed graph is regular, so the
/// matching always completes.
fn matching_on_allowed_pairs(
    n: usize,
    used: &[Vec<bool>],
    rng: &mut ChaCha8Rng,
) -> Result<Vec<usize>> {
    let mut a_order: Vec<usize> = (0..n).collect();
    a_order.shuffle(rng);
    let mut b_order: Vec<usize> = (0..n).collect();
    b_order.shuffle(rng);

    fn augment(
        a: usize,
        used: &[Vec<bool>],
        b_order: &[usize],
        visited: &mut [bool],
        match_b: &mut [Option<usize>],
    ) -> bool {
        for &b in b_order {
            if used[a][b] || visited[b] {
                continue;
            }
            visited[b] = true;
            let free = match match_b[b] {
                None => true,
                Some(a2) => augment(a2, used, b_order, visited, match_b),
            };
            if free {
                match_b[b] = Some(a);
                return true;
            }
        }
        false
    }

    let mut match_b: Vec<Option<usize>> = vec![None; n];
    for &a in &a_order {
        let mut visited = vec![false; n];
        if !augment(a, used, &b_order, &mut visited, &mut match_b) {
            return Err(Error::GenerationFailed {
                attempts: REJECTION_CAP,
            });
        }
    }
    let mut perm = vec![0usize; n];
    for (b, a) in match_b.into_iter().enumerate() {
        perm[a.expect("matching is perfect")] = b;
    }
    Ok(perm)
}

/// Builds a named family instance with size parameter `n`.
pub fn gen_named(family: Family, n: usize) -> Result<BipartiteGraph> {
    match family {
        Family::Cycle => {
            if n < 2 {
                return Err(Error::InvalidFamilyParameter {
                    family: "cycle".into(),
                    n,
                    reason: "cycle C_{2n} requires n >= 2".into(),
                });
            }
            let mut pairs = Vec::with_capacity(2 * n);
            for i in 0..n {
                pairs.push((i, i));
                pairs.push(((i + 1) % n, i));
            }
            BipartiteGraph::new(n, 2, &pairs)
        }
        Family::CompleteBipartite => {
            if n < 2 {
                return Err(Error::InvalidFamilyParameter {
                    family: "complete_bipartite".into(),
                    n,
                    reason: "K_{n,n} needs n >= 2 for degree >= 2".into(),
                });
            }
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
            BipartiteGraph::new(n, n, &pairs)
        }
        Family::Hypercube3 => {
            if n != 4 {
                return Err(Error::InvalidFamilyParameter {
                    family: "hypercube3".into(),
                    n,
                    reason: "Q3 has exactly 4 vertices per side".into(),
                });
            }
            // bipartition of the 3-cube by coordinate parity
            let evens = [0b000usize, 0b011, 0b101, 0b110];
            let odds = [0b001usize, 0b010, 0b100, 0b111];
            let b_index = |w: usize| odds.iter().position(|&o| o == w).unwrap();
            let mut pairs = Vec::with_capacity(12);
            for (ai, &v) in evens.iter().enumerate() {
                for bit in 0..3 {
                    pairs.push((ai, b_index(v ^ (1 << bit))));
                }
            }
            BipartiteGraph::new(4, 3, &pairs)
        }
        Family::Crown => {
            if n < 3 {
                return Err(Error::InvalidFamilyParameter {
                    family: "crown".into(),
                    n,
                    reason: "crown needs n >= 3 for degree >= 2".into(),
                });
            }
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
                .collect();
            BipartiteGraph::new(n, n - 1, &pairs)
        }
    }
}
