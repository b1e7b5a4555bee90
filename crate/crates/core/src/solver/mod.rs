//! Compatible copies, factors and tilings.
//!
//! Every search is bounded by a node [`Budget`]; running out is reported
//! explicitly (truncated enumeration, `Indeterminate` decision) and never
//! confused with a proof of absence.

mod cover;
mod embed;
mod transversal;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{precondition, Result};
use crate::graph::Graph;
use crate::incompat::IncompatibilitySystem;

pub use cover::{find_compatible_factor, find_factor_within, max_compatible_tiling, FactorOutcome, MaxTiling, NoFactorReason};
pub use embed::{enumerate_compatible_copies, enumerate_within, find_copy_containing, CopyEnumeration};
pub use transversal::{count_transversal_copies, enumerate_transversal_copies, TransversalCount};

/// Node-expansion cap for a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget(pub u64);

impl Budget {
    pub const UNLIMITED: Budget = Budget(u64::MAX);
    pub const DEFAULT: Budget = Budget(50_000_000);
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// Running node counter against a [`Budget`].
#[derive(Clone, Debug)]
pub struct Meter {
    limit: u64,
    used: u64,
    exhausted: bool,
}

impl Meter {
    pub fn new(budget: Budget) -> Meter {
        Meter { limit: budget.0, used: 0, exhausted: false }
    }

    /// Charges one node; false once the budget is spent.
    pub fn tick(&mut self) -> bool {
        if self.used >= self.limit {
            self.exhausted = true;
            return false;
        }
        self.used += 1;
        true
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    /// Budget left for a nested search.
    pub fn remaining(&self) -> Budget {
        Budget(self.limit - self.used)
    }

    /// Adds the work of a nested search.
    pub fn absorb(&mut self, used: u64, exhausted: bool) {
        self.used = self.used.saturating_add(used).min(self.limit);
        self.exhausted |= exhausted;
    }
}

/// A copy of the pattern: `map[p]` is the host image of pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
    /// Sorted image vertices.
    pub vertices: Vec<usize>,
    /// Sorted image edges `(u, v)` with `u < v`.
    pub edges: Vec<(usize, usize)>,
}

impl Embedding {
    pub fn new(h: &Graph, map: Vec<usize>) -> Embedding {
        let mut vertices = map.clone();
        vertices.sort_unstable();
        let mut edges: Vec<(usize, usize)> = h
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (map[a], map[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        Embedding { map, vertices, edges }
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_slice(n, &self.vertices)
    }

    /// Independent check that this is a compatible copy of `h` in `g`.
    pub fn verify(&self, h: &Graph, g: &Graph, f: &IncompatibilitySystem) -> Result<(), String> {
        if self.map.len() != h.n() {
            return Err(format!("map has {} entries, pattern has {} vertices", self.map.len(), h.n()));
        }
        let mut seen = vec![false; g.n()];
        for &x in &self.map {
            if x >= g.n() || std::mem::replace(&mut seen[x], true) {
                return Err(format!("image vertex {x} out of range or repeated"));
            }
        }
        if *self != Embedding::new(h, self.map.clone()) {
            return Err("stored image does not match the map".into());
        }
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return Err(format!("image edge {u} {v} missing from host"));
            }
        }
        match f.is_compatible_subgraph(&self.edges) {
            crate::incompat::Compatibility::Compatible => Ok(()),
            crate::incompat::Compatibility::Violation { at, e, f } => {
                Err(format!("edges {e:?} and {f:?} incompatible at {at}"))
            }
        }
    }
}

/// Vertex-disjoint compatible copies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tiling {
    pub copies: Vec<Embedding>,
    pub covered: VertexSet,
}

impl Tiling {
    pub fn empty(n: usize) -> Tiling {
        Tiling { copies: Vec::new(), covered: VertexSet::new(n) }
    }

    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    pub fn push(&mut self, e: Embedding) {
        for &v in &e.vertices {
            self.covered.insert(v);
        }
        self.copies.push(e);
    }

    /// Sorts copies by their smallest vertex.
    pub fn normalize(&mut self) {
        self.copies.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    }

    /// Independent check: each copy is compatible, copies are disjoint, and
    /// the covered set is exactly `target` when given.
    pub fn verify(
        &self,
        h: &Graph,
        g: &Graph,
        f: &IncompatibilitySystem,
        target: Option<&VertexSet>,
    ) -> Result<(), String> {
        let mut covered = VertexSet::new(g.n());
        for (i, c) in self.copies.iter().enumerate() {
            c.verify(h, g, f).map_err(|e| format!("copy {i}: {e}"))?;
            for &v in &c.vertices {
                if !covered.insert(v) {
                    return Err(format!("vertex {v} covered twice"));
                }
            }
        }
        if covered != self.covered {
            return Err("covered set does not match the copies".into());
        }
        if let Some(t) = target {
            if &covered != t {
                return Err("tiling does not cover exactly the target set".into());
            }
        }
        Ok(())
    }
}

pub(crate) fn check_inputs(h: &Graph, g: &Graph, f: &IncompatibilitySystem) -> Result<()> {
    if h.n() == 0 {
        return Err(precondition("pattern graph has no vertices"));
    }
    if !f.is_bound_to(g) {
        return Err(precondition("incompatibility system is bound to a different graph"));
    }
    Ok(())
}

/// Inclusion-maximal tiling built greedily over a seeded random vertex order.
#[derive(Clone, Debug, Serialize)]
pub struct GreedyTiling {
    pub tiling: Tiling,
    pub uncovered: usize,
}

pub fn greedy_almost_tiling(h: &Graph, g: &Graph, f: &IncompatibilitySystem, seed: u64) -> Result<GreedyTiling> {
    check_inputs(h, g, f)?;
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(&mut crate::rng::stream(seed, 0));
    let mut tiling = Tiling::empty(g.n());
    let mut meter = Meter::new(Budget::UNLIMITED);
    for v in order {
        if tiling.covered.contains(v) {
            continue;
        }
        let free = g.vertex_set().difference(&tiling.covered);
        if let Some(e) = find_copy_containing(h, g, f, v, &free, &mut meter) {
            tiling.push(e);
        }
    }
    tiling.normalize();
    let uncovered = g.n() - tiling.covered.len();
    Ok(GreedyTiling { tiling, uncovered })
}

/// Whether `v` extends the copy `emb`: `v` is adjacent to every image
/// vertex, the edges from `v` are pairwise compatible at `v`, and each edge
/// `vu` is compatible at `u` with the copy's edges at `u`.
pub fn good_pair(v: usize, emb: &Embedding, g: &Graph, f: &IncompatibilitySystem) -> Result<bool> {
    if emb.vertices.contains(&v) {
        return Err(precondition(format!("vertex {v} lies in the copy")));
    }
    g.check_vertex(v)?;
    if !f.is_compatible_subgraph(&emb.edges).is_compatible() {
        return Ok(false);
    }
    if !emb.vertices.iter().all(|&u| g.has_edge(v, u)) {
        return Ok(false);
    }
    let img = &emb.vertices;
    for (i, &a) in img.iter().enumerate() {
        if img[i + 1..].iter().any(|&b| f.incompatible_at(v, a, b)) {
            return Ok(false);
        }
    }
    for &(a, b) in &emb.edges {
        if f.incompatible_at(a, v, b) || f.incompatible_at(b, v, a) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn greedy_is_maximal() {
        let g = Graph::cycle(7);
        let f = IncompatibilitySystem::empty(&g);
        let k2 = Graph::complete(2);
        for seed in 0..10 {
            let r = greedy_almost_tiling(&k2, &g, &f, seed).unwrap();
            r.tiling.verify(&k2, &g, &f, None).unwrap();
            let free = g.vertex_set().difference(&r.tiling.covered);
            for (u, v) in g.edges() {
                assert!(!(free.contains(u) && free.contains(v)));
            }
            assert_eq!(r.uncovered, 7 - 2 * r.tiling.len());
        }
    }

    #[test]
    fn greedy_on_empty_graph() {
        let g = Graph::empty(5).unwrap();
        let f = IncompatibilitySystem::empty(&g);
        let r = greedy_almost_tiling(&Graph::complete(2), &g, &f, 1).unwrap();
        assert!(r.tiling.is_empty());
        assert_eq!(r.uncovered, 5);
    }

    #[test]
    fn good_pair_examples() {
        let g = Graph::complete(4);
        let k3 = Graph::complete(3);
        let emb = Embedding::new(&k3, vec![0, 1, 2]);
        let f = IncompatibilitySystem::empty(&g);
        assert!(good_pair(3, &emb, &g, &f).unwrap());
        let f = IncompatibilitySystem::from_triples(&g, &[(3, 0, 1)]).unwrap();
        assert!(!good_pair(3, &emb, &g, &f).unwrap());
        let f = IncompatibilitySystem::from_triples(&g, &[(0, 3, 1)]).unwrap();
        assert!(!good_pair(3, &emb, &g, &f).unwrap());
        let mut g2 = g.clone();
        g2.remove_edge(3, 2);
        let f2 = IncompatibilitySystem::empty(&g2);
        assert!(!good_pair(3, &emb, &g2, &f2).unwrap());
        assert!(good_pair(0, &emb, &g, &f).is_err());
    }

    #[test]
    fn embedding_verify_rejects_bad_maps() {
        let g = Graph::path(3);
        let f = IncompatibilitySystem::empty(&g);
        let k3 = Graph::complete(3);
        assert!(Embedding::new(&k3, vec![0, 1, 2]).verify(&k3, &g, &f).is_err());
        let p3 = Graph::path(3);
        assert!(Embedding::new(&p3, vec![0, 1, 2]).verify(&p3, &g, &f).is_ok());
        assert!(Embedding::new(&p3, vec![0, 1, 1]).verify(&p3, &g, &f).is_err());
    }
}
