//! Robust index vectors: a vector survives every removal of `⌊βn⌋` vertices.
//!
//! Removing more vertices only destroys more copies, so checking `|W| = m`
//! covers every `|W| <= m`. A vector is robust exactly when the copies
//! realizing it have no hitting set of size `m`, which a bounded branching
//! search decides; sampling is used only when that search runs out of budget.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use serde::Serialize;

use super::{index_vector, IndexVector, Problem, SetSampling};
use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::VertexPartition;
use crate::rational::Rational;
use crate::solver::{enumerate_compatible_copies, Meter};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RobustStatus {
    /// No `m`-set meets every realizing copy.
    Robust,
    /// Every sampled `W` left a copy; not a proof.
    Sampled { passed: u64, samples: u64 },
    /// Removing `witness` kills every copy with this vector.
    NotRobust { witness: Vec<usize> },
    Indeterminate,
}

#[derive(Clone, Debug, Serialize)]
pub struct RobustVector {
    pub vector: IndexVector,
    pub copies: usize,
    pub status: RobustStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct RobustVectors {
    /// Size of the removed sets, `⌊βn⌋`.
    pub removed: usize,
    /// Candidate vectors in lexicographic order.
    pub vectors: Vec<RobustVector>,
    /// Copy enumeration hit the budget; candidates may be incomplete.
    pub truncated: bool,
}

impl RobustVectors {
    /// Vectors proved robust.
    pub fn proven(&self) -> Vec<IndexVector> {
        self.vectors.iter().filter(|v| v.status == RobustStatus::Robust).map(|v| v.vector.clone()).collect()
    }
}

/// Searches for a set of at most `k` vertices meeting every copy.
fn hitting_set(copies: &[VertexSet], k: usize, chosen: &mut Vec<usize>, meter: &mut Meter) -> Option<bool> {
    if !meter.tick() {
        return None;
    }
    let Some(open) = copies.iter().find(|c| !chosen.iter().any(|&v| c.contains(v))) else {
        return Some(true);
    };
    if chosen.len() == k {
        return Some(false);
    }
    for v in open.iter() {
        chosen.push(v);
        let r = hitting_set(copies, k, chosen, meter);
        if r != Some(false) {
            return r;
        }
        chosen.pop();
    }
    Some(false)
}

fn sampled(copies: &[VertexSet], n: usize, m: usize, sampling: SetSampling, salt: u64) -> RobustStatus {
    for i in 0..sampling.samples {
        let mut rng = crate::rng::stream(sampling.seed ^ salt, i);
        let w = VertexSet::from_slice(n, &sample(&mut rng, n, m).into_vec());
        if copies.iter().all(|c| !c.is_disjoint(&w)) {
            return RobustStatus::NotRobust { witness: w.to_vec() };
        }
    }
    RobustStatus::Sampled { passed: sampling.samples, samples: sampling.samples }
}

/// Index vectors of all compatible copies, each labelled by how robustness
/// was settled.
pub fn robust_vectors(p: &Problem, part: &VertexPartition, beta: Rational, sampling: SetSampling) -> Result<RobustVectors> {
    let n = p.g.n();
    let m = beta.times(n as i64).floor().clamp(0, n as i64) as usize;
    let copies = enumerate_compatible_copies(p.h, p.g, p.f, p.budget)?;
    let mut by_vector: BTreeMap<IndexVector, Vec<VertexSet>> = BTreeMap::new();
    for c in &copies.copies {
        by_vector.entry(index_vector(&c.vertices, part)?).or_default().push(c.vertex_set(n));
    }
    let mut vectors = Vec::new();
    for (salt, (vector, sets)) in by_vector.into_iter().enumerate() {
        let status = if copies.truncated {
            RobustStatus::Indeterminate
        } else {
            let mut meter = Meter::new(p.budget);
            let mut chosen = Vec::new();
            match hitting_set(&sets, m, &mut chosen, &mut meter) {
                Some(false) => RobustStatus::Robust,
                Some(true) => {
                    // Pad the hitting set to exactly m vertices.
                    let mut w = VertexSet::from_slice(n, &chosen);
                    for v in 0..n {
                        if w.len() == m {
                            break;
                        }
                        w.insert(v);
                    }
                    RobustStatus::NotRobust { witness: w.to_vec() }
                }
                None => sampled(&sets, n, m, sampling, salt as u64),
            }
        };
        vectors.push(RobustVector { vector, copies: sets.len(), status });
    }
    Ok(RobustVectors { removed: m, vectors, truncated: copies.truncated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::incompat::IncompatibilitySystem;
    use crate::solver::Budget;

    #[test]
    fn beta_zero_keeps_every_realized_vector() {
        let h = Graph::complete(2);
        let g = Graph::path(4);
        let f = IncompatibilitySystem::empty(&g);
        let part = VertexPartition::consecutive(&[2, 2]).unwrap();
        let r = robust_vectors(&Problem::new(&h, &g, &f), &part, Rational::zero(), SetSampling::default()).unwrap();
        let got: Vec<_> = r.vectors.iter().map(|v| (v.vector.clone(), v.status.clone())).collect();
        assert_eq!(got, vec![(vec![0, 2], RobustStatus::Robust), (vec![1, 1], RobustStatus::Robust), (vec![2, 0], RobustStatus::Robust)]);
    }

    #[test]
    fn single_copy_vector_dies() {
        // Only the edge 01 lies inside block 0.
        let h = Graph::complete(2);
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let f = IncompatibilitySystem::empty(&g);
        let part = VertexPartition::consecutive(&[2, 2]).unwrap();
        let r = robust_vectors(&Problem::new(&h, &g, &f), &part, Rational::new(1, 4), SetSampling::default()).unwrap();
        assert_eq!(r.removed, 1);
        let v = r.vectors.iter().find(|v| v.vector == vec![2, 0]).unwrap();
        assert_eq!(v.status, RobustStatus::NotRobust { witness: vec![0] });
        // Two disjoint transversal edges survive any single removal.
        let t = r.vectors.iter().find(|v| v.vector == vec![1, 1]).unwrap();
        assert_eq!(t.status, RobustStatus::Robust);
    }

    #[test]
    fn exhausted_search_is_only_sampled() {
        // Edges of K_8: no two vertices meet them all.
        let g = Graph::complete(8);
        let sets: Vec<VertexSet> = g.edges().iter().map(|&(a, b)| VertexSet::from_slice(8, &[a, b])).collect();
        assert_eq!(hitting_set(&sets, 2, &mut Vec::new(), &mut Meter::new(Budget(5))), None);
        assert_eq!(hitting_set(&sets, 2, &mut Vec::new(), &mut Meter::new(Budget::UNLIMITED)), Some(false));
        let s = SetSampling { samples: 10, ..Default::default() };
        assert_eq!(sampled(&sets, 8, 2, s, 0), RobustStatus::Sampled { passed: 10, samples: 10 });
        assert!(matches!(sampled(&sets, 8, 7, s, 0), RobustStatus::NotRobust { .. }));
    }
}
