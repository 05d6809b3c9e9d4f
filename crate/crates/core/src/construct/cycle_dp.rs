//! Minimum-violation assignment of pair types around a cycle.
//!
//! Several constructions place one label pair at each A-vertex of a cycle
//! and need the two labels seen by each B-vertex (the leaving label of one
//! A-vertex plus the entering label of the next) to avoid certain residue
//! classes. This module solves that exactly: given the per-slot type
//! alphabet and the allowed residues at each B-position, a cyclic DP finds
//! the assignment minimizing the number of violated B-constraints while
//! using a prescribed number of "counted" types (the like-pair or
//! first-kind pool, whose supply is fixed globally).

pub(crate) const INF: u32 = u32::MAX / 2;

/// One way to place a pair at an A-vertex: the residue put on the edge by
/// which the traversal enters the vertex, the residue on the leaving edge,
/// and whether the placement consumes the counted pool.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SlotType {
    pub enter: u64,
    pub leave: u64,
    pub counted: bool,
}

/// A single cycle's assignment problem.
pub(crate) struct CycleProblem {
    pub modulus: u64,
    pub types: Vec<SlotType>,
    /// `allowed[i][r]`: residue `r` is acceptable for the B-vertex between
    /// positions `i` and `i+1 (mod p)`.
    pub allowed: Vec<Vec<bool>>,
}

/// `dp[i][t][c]` as built by [`CycleProblem::table_for_start`].
type DpTable = Vec<Vec<Vec<u32>>>;

impl CycleProblem {
    fn positions(&self) -> usize {
        self.allowed.len()
    }

    fn violation(&self, i: usize, t: usize, t_next: usize) -> u32 {
        let r = (self.types[t].leave + self.types[t_next].enter) % self.modulus;
        u32::from(!self.allowed[i][r as usize])
    }

    /// dp[i][t][c]: minimal violations over positions 0..=i with type `t`
    /// at position i and `c` counted slots so far, given the fixed start.
    #[allow(clippy::needless_range_loop)]
    fn table_for_start(&self, start: usize) -> DpTable {
        let p = self.positions();
        let nt = self.types.len();
        let mut dp = vec![vec![vec![INF; p + 1]; nt]; p];
        let c0 = usize::from(self.types[start].counted);
        dp[0][start][c0] = 0;
        for i in 1..p {
            for t_prev in 0..nt {
                for c in 0..=i {
                    let cost = dp[i - 1][t_prev][c];
                    if cost >= INF {
                        continue;
                    }
                    for t in 0..nt {
                        let c2 = c + usize::from(self.types[t].counted);
                        let total = cost + self.violation(i - 1, t_prev, t);
                        if total < dp[i][t][c2] {
                            dp[i][t][c2] = total;
                        }
                    }
                }
            }
        }
        dp
    }

    /// Minimal violations achievable for each exact counted-slot count.
    #[allow(clippy::needless_range_loop)]
    pub fn min_violations_per_count(&self) -> Vec<u32> {
        let p = self.positions();
        let mut best = vec![INF; p + 1];
        for start in 0..self.types.len() {
            let dp = self.table_for_start(start);
            for t in 0..self.types.len() {
                for (c, item) in best.iter_mut().enumerate() {
                    let cost = dp[p - 1][t][c];
                    if cost >= INF {
                        continue;
                    }
                    let closed = cost + self.violation(p - 1, t, start);
                    if closed < *item {
                        *item = closed;
                    }
                }
            }
        }
        best
    }

    /// Deterministic minimum-violation assignment using exactly `count`
    /// counted slots; `None` when no assignment achieves that count.
    #[allow(clippy::needless_range_loop)]
    pub fn assignment(&self, count: usize) -> Option<(u32, Vec<usize>)> {
        let p = self.positions();
        if count > p {
            return None;
        }
        let mut best: Option<(u32, usize, DpTable)> = None;
        for start in 0..self.types.len() {
            let dp = self.table_for_start(start);
            let mut local = INF;
            for t in 0..self.types.len() {
                let cost = dp[p - 1][t][count];
                if cost < INF {
                    local = local.min(cost + self.violation(p - 1, t, start));
                }
            }
            if local < INF && best.as_ref().is_none_or(|(b, _, _)| local < *b) {
                best = Some((local, start, dp));
            }
        }
        let (total, start, dp) = best?;

        // walk backward, preferring the smallest type index at each step
        let mut assignment = vec![0usize; p];
        assignment[0] = start;
        let mut need = total;
        let mut c = count;
        // find the end state
        let mut cur = (0..self.types.len())
            .find(|&t| {
                dp[p - 1][t][count] < INF
                    && dp[p - 1][t][count] + self.violation(p - 1, t, start) == total
            })
            .expect("end state exists");
        assignment[p - 1] = cur;
        need -= self.violation(p - 1, cur, start);
        for i in (1..p).rev() {
            c -= usize::from(self.types[cur].counted);
            if i == 1 {
                debug_assert_eq!(dp[0][start][c], 0);
                debug_assert_eq!(need, self.violation(0, start, cur));
                break;
            }
            let prev = (0..self.types.len())
                .find(|&t| {
                    dp[i - 1][t][c] < INF && dp[i - 1][t][c] + self.violation(i - 1, t, cur) == need
                })
                .expect("backward path exists");
            need -= self.violation(i - 1, prev, cur);
            assignment[i - 1] = prev;
            cur = prev;
        }
        Some((total, assignment))
    }
}

/// Distributes `total` counted slots among cycles, minimizing the summed
/// violations; `tables[c]` is cycle c's per-count minimum from
/// [`CycleProblem::min_violations_per_count`]. Returns the chosen count per
/// cycle, deterministically preferring smaller counts in earlier cycles.
pub(crate) fn distribute_counts(tables: &[Vec<u32>], total: usize) -> Option<(u32, Vec<usize>)> {
    let m = tables.len();
    // suffix[i][r]: min cost for cycles i.. using exactly r counted slots
    let mut suffix = vec![vec![INF; total + 1]; m + 1];
    suffix[m][0] = 0;
    for i in (0..m).rev() {
        for r in 0..=total {
            let mut best = INF;
            for (c, &cost) in tables[i].iter().enumerate() {
                if c > r || cost >= INF {
                    continue;
                }
                let rest = suffix[i + 1][r - c];
                if rest < INF {
                    best = best.min(cost + rest);
                }
            }
            suffix[i][r] = best;
        }
    }
    if suffix[0][total] >= INF {
        return None;
    }
    let mut counts = Vec::with_capacity(m);
    let mut r = total;
    for i in 0..m {
        let target = suffix[i][r];
        let c = (0..tables[i].len().min(r + 1))
            .find(|&c| {
                tables[i][c] < INF
                    && suffix[i + 1][r - c] < INF
                    && tables[i][c] + suffix[i + 1][r - c] == target
            })
            .expect("distribution reconstructs");
        counts.push(c);
        r -= c;
    }
    Some((suffix[0][total], counts))
}
