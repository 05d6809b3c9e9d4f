//! Ground-truth checking: vertex sums, antimagic verification with full
//! conflict reporting, and per-stage modular invariant checks.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Labeling, SumProfile};

/// Which part of the bipartition a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Part {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConflictKind {
    WithinA,
    WithinB,
    Cross,
}

/// A pair of vertices with equal vertex-sums.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conflict {
    pub u: (Part, usize),
    pub v: (Part, usize),
    pub sum: u64,
    pub kind: ConflictKind,
}

/// All conflicting vertex pairs under a labeling; empty iff antimagic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConflictReport {
    pub conflicts: Vec<Conflict>,
}

impl ConflictReport {
    pub fn is_antimagic(&self) -> bool {
        self.conflicts.is_empty()
    }
}

/// Exact vertex-sums for a complete labeling.
pub fn vertex_sums(graph: &BipartiteGraph, labeling: &Labeling) -> Result<SumProfile> {
    for e in graph.edges() {
        if labeling.get(e.id).is_none() {
            return Err(Error::PartialLabeling);
        }
    }
    Ok(SumProfile::partial(graph, labeling))
}

/// Checks a complete labeling for antimagicness, listing every conflicting
/// pair. Non-bijective labelings are reported as an error, distinct from
/// conflicts.
pub fn verify_antimagic(graph: &BipartiteGraph, labeling: &Labeling) -> Result<ConflictReport> {
    labeling.check_complete(graph)?;
    let sums = SumProfile::partial(graph, labeling);

    // (sum, part, index) sorted so equal sums are adjacent
    let mut entries: Vec<(u64, Part, usize)> = Vec::with_capacity(2 * graph.n());
    for (v, &s) in sums.sums_a.iter().enumerate() {
        entries.push((s, Part::A, v));
    }
    for (v, &s) in sums.sums_b.iter().enumerate() {
        entries.push((s, Part::B, v));
    }
    entries.sort_unstable();

    let mut conflicts = Vec::new();
    let mut i = 0;
    while i < entries.len() {
        let mut j = i + 1;
        while j < entries.len() && entries[j].0 == entries[i].0 {
            j += 1;
        }
        for x in i..j {
            for y in x + 1..j {
                let (sum, pu, u) = entries[x];
                let (_, pv, v) = entries[y];
                let kind = match (pu, pv) {
                    (Part::A, Part::A) => ConflictKind::WithinA,
                    (Part::B, Part::B) => ConflictKind::WithinB,
                    _ => ConflictKind::Cross,
                };
                conflicts.push(Conflict {
                    u: (pu, u),
                    v: (pv, v),
                    sum,
                    kind,
                });
            }
        }
        i = j;
    }
    Ok(ConflictReport { conflicts })
}

/// A residue or equality constraint on partial sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SumConstraint {
    Equal(u64),
    ResidueIs { modulus: u64, residue: u64 },
    ResidueNot { modulus: u64, residue: u64 },
    Unconstrained,
}

impl SumConstraint {
    pub fn holds(&self, sum: u64) -> bool {
        match *self {
            SumConstraint::Equal(t) => sum == t,
            SumConstraint::ResidueIs { modulus, residue } => sum % modulus == residue % modulus,
            SumConstraint::ResidueNot { modulus, residue } => sum % modulus != residue % modulus,
            SumConstraint::Unconstrained => true,
        }
    }
}

/// The modular condition a construction stage must satisfy, with optional
/// per-vertex exceptions (e.g. the bad vertices of the 3-regular stage).
#[derive(Debug, Clone, Serialize)]
pub struct StageInvariant {
    pub name: String,
    pub part_a: SumConstraint,
    pub part_b: SumConstraint,
    pub exceptions: Vec<(Part, usize, SumConstraint)>,
}

impl StageInvariant {
    pub fn new(name: &str, part_a: SumConstraint, part_b: SumConstraint) -> Self {
        Self {
            name: name.into(),
            part_a,
            part_b,
            exceptions: Vec::new(),
        }
    }

    pub fn with_exception(mut self, part: Part, vertex: usize, c: SumConstraint) -> Self {
        self.exceptions.push((part, vertex, c));
        self
    }

    fn constraint_for(&self, part: Part, vertex: usize) -> SumConstraint {
        for &(p, v, c) in &self.exceptions {
            if p == part && v == vertex {
                return c;
            }
        }
        match part {
            Part::A => self.part_a,
            Part::B => self.part_b,
        }
    }
}

/// Per-stage record of partial sums and which vertices violate the declared
/// invariant.
#[derive(Debug, Clone, Serialize)]
pub struct StageReport {
    pub stage: String,
    pub sums_a: Vec<u64>,
    pub sums_b: Vec<u64>,
    pub failures: Vec<(Part, usize)>,
}

impl StageReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the partial sums of a (possibly partial) labeling against a
/// declared stage invariant, reporting per-vertex pass/fail.
pub fn verify_stage(
    graph: &BipartiteGraph,
    labeling: &Labeling,
    invariant: &StageInvariant,
) -> StageReport {
    let sums = SumProfile::partial(graph, labeling);
    let mut failures = Vec::new();
    for (v, &s) in sums.sums_a.iter().enumerate() {
        if !invariant.constraint_for(Part::A, v).holds(s) {
            failures.push((Part::A, v));
        }
    }
    for (v, &s) in sums.sums_b.iter().enumerate() {
        if !invariant.constraint_for(Part::B, v).holds(s) {
            failures.push((Part::B, v));
        }
    }
    StageReport {
        stage: invariant.name.clone(),
        sums_a: sums.sums_a,
        sums_b: sums.sums_b,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> BipartiteGraph {
        BipartiteGraph::new(2, 2, &[(0, 0), (0, 1), (1, 1), (1, 0)]).unwrap()
    }

    fn labeling_of(pairs: &[(usize, u64)]) -> Labeling {
        let mut l = Labeling::new();
        for &(e, v) in pairs {
            l.assign(e, v).unwrap();
        }
        l
    }

    #[test]
    fn sums_of_fact1_labeling() {
        let g = c4();
        // labels 1,3,4,2 in cycle order: edges 0..3 trace the 4-cycle
        let l = labeling_of(&[(0, 1), (1, 3), (2, 4), (3, 2)]);
        let s = vertex_sums(&g, &l).unwrap();
        assert_eq!(s.sums_a, vec![4, 6]);
        assert_eq!(s.sums_b, vec![3, 7]);
    }

    #[test]
    fn sums_require_completeness() {
        let g = c4();
        let l = labeling_of(&[(0, 1)]);
        assert_eq!(vertex_sums(&g, &l).unwrap_err(), Error::PartialLabeling);
    }

    #[test]
    fn antimagic_c4() {
        let g = c4();
        let good = labeling_of(&[(0, 1), (1, 3), (2, 4), (3, 2)]);
        assert!(verify_antimagic(&g, &good).unwrap().is_antimagic());

        let bad = labeling_of(&[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let report = verify_antimagic(&g, &bad).unwrap();
        assert_eq!(report.conflicts.len(), 1);
        let c = &report.conflicts[0];
        assert_eq!(c.sum, 5);
        assert_eq!(c.kind, ConflictKind::WithinB);
    }

    #[test]
    fn non_bijective_is_an_error_not_a_conflict() {
        let g = c4();
        let l = labeling_of(&[(0, 1), (1, 3), (2, 4)]);
        assert!(matches!(
            verify_antimagic(&g, &l),
            Err(Error::NotBijective(_))
        ));
    }

    #[test]
    fn handshake_identity() {
        let pairs: Vec<(usize, usize)> = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).collect();
        let g = BipartiteGraph::new(3, 3, &pairs).unwrap();
        let l = labeling_of(&(0..9).map(|i| (i, i as u64 + 1)).collect::<Vec<_>>());
        let s = vertex_sums(&g, &l).unwrap();
        let total: u64 = s.sums_a.iter().sum::<u64>() + s.sums_b.iter().sum::<u64>();
        assert_eq!(total, 90); // 2 * 45
    }

    #[test]
    fn stage_check_with_exception() {
        let g = c4();
        let l = labeling_of(&[(0, 1), (1, 3), (2, 4), (3, 2)]);
        // A-sums are 4 and 6; declare A = 4 with an exception at a1
        let inv = StageInvariant::new(
            "demo",
            SumConstraint::Equal(4),
            SumConstraint::ResidueNot {
                modulus: 3,
                residue: 2,
            },
        )
        .with_exception(Part::A, 1, SumConstraint::Equal(6));
        let report = verify_stage(&g, &l, &inv);
        // B-sums are 3 and 7: 3 % 3 = 0 ok, 7 % 3 = 1 ok
        assert!(report.passed(), "failures: {:?}", report.failures);

        let flipped = labeling_of(&[(0, 3), (1, 1), (2, 4), (3, 2)]);
        let report = verify_stage(&g, &flipped, &inv);
        assert!(!report.passed());
    }
}
