//! Compatible copies of `K_r(h_1, ..., h_r)` with exactly `h_i` vertices in
//! the i-th given set, grown part by part: every new vertex must be adjacent
//! to all vertices already placed in earlier parts, its new edges must be
//! pairwise compatible at itself, and each new edge must be compatible with
//! the copy's edges at the other endpoint.

use serde::Serialize;

use super::{Budget, Embedding, Meter};
use crate::bitset::VertexSet;
use crate::error::{precondition, Result};
use crate::graph::{complete_multipartite, Graph, MultipartiteSpec};
use crate::incompat::IncompatibilitySystem;

/// Called with each transversal copy as (host vertex, part index) pairs.
type Visit<'a> = dyn FnMut(&[(usize, usize)]) + 'a;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TransversalCount {
    pub count: u64,
    pub truncated: bool,
    pub nodes: u64,
}

struct Extender<'a> {
    g: &'a Graph,
    f: &'a IncompatibilitySystem,
    sizes: &'a [usize],
    parts: &'a [VertexSet],
    /// Chosen vertices with their part index, in placement order.
    chosen: Vec<(usize, usize)>,
}

impl Extender<'_> {
    fn fits(&self, x: usize, part: usize) -> bool {
        let earlier: Vec<usize> = self.chosen.iter().filter(|&&(_, p)| p != part).map(|&(v, _)| v).collect();
        if !earlier.iter().all(|&y| self.g.has_edge(x, y)) {
            return false;
        }
        if self.f.is_empty() {
            return true;
        }
        for (i, &a) in earlier.iter().enumerate() {
            if earlier[i + 1..].iter().any(|&b| self.f.incompatible_at(x, a, b)) {
                return false;
            }
        }
        for &(y, py) in &self.chosen {
            if py == part {
                continue;
            }
            for &(z, pz) in &self.chosen {
                if pz != py && self.f.incompatible_at(y, x, z) {
                    return false;
                }
            }
        }
        true
    }

    fn grow(
        &mut self,
        part: usize,
        from: usize,
        meter: &mut Meter,
        visit: &mut Visit,
    ) -> bool {
        if part == self.sizes.len() {
            visit(&self.chosen);
            return true;
        }
        let placed = self.chosen.iter().filter(|&&(_, p)| p == part).count();
        if placed == self.sizes[part] {
            return self.grow(part + 1, 0, meter, visit);
        }
        if !meter.tick() {
            return false;
        }
        let cands: Vec<usize> = self.parts[part].iter().filter(|&x| x >= from).collect();
        for x in cands {
            if !self.fits(x, part) {
                continue;
            }
            self.chosen.push((x, part));
            let ok = self.grow(part, x + 1, meter, visit);
            self.chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

fn check_parts(spec: &MultipartiteSpec, g: &Graph, f: &IncompatibilitySystem, parts: &[VertexSet]) -> Result<()> {
    if !f.is_bound_to(g) {
        return Err(precondition("incompatibility system is bound to a different graph"));
    }
    if parts.len() != spec.r() {
        return Err(precondition(format!("{} vertex sets given for {} parts", parts.len(), spec.r())));
    }
    for (i, a) in parts.iter().enumerate() {
        if let Some(v) = a.iter().find(|&v| v >= g.n()) {
            return Err(precondition(format!("set {i} contains vertex {v} outside the host")));
        }
        if parts[i + 1..].iter().any(|b| !a.is_disjoint(b)) {
            return Err(precondition("vertex sets must be pairwise disjoint"));
        }
    }
    Ok(())
}

fn run(
    spec: &MultipartiteSpec,
    g: &Graph,
    f: &IncompatibilitySystem,
    parts: &[VertexSet],
    budget: Budget,
    visit: &mut Visit,
) -> Result<(bool, u64)> {
    check_parts(spec, g, f, parts)?;
    let mut ext = Extender { g, f, sizes: spec.parts(), parts, chosen: Vec::new() };
    let mut meter = Meter::new(budget);
    let complete = ext.grow(0, 0, &mut meter, visit);
    Ok((!complete, meter.used()))
}

/// Enumerates the copies in lexicographic order of their part-wise vertex
/// lists. Pattern vertices are numbered part by part as in
/// [`complete_multipartite`].
pub fn enumerate_transversal_copies(
    spec: &MultipartiteSpec,
    g: &Graph,
    f: &IncompatibilitySystem,
    parts: &[VertexSet],
    budget: Budget,
) -> Result<(Vec<Embedding>, TransversalCount)> {
    let (pattern, _) = complete_multipartite(spec);
    let mut out = Vec::new();
    let (truncated, nodes) = run(spec, g, f, parts, budget, &mut |chosen| {
        out.push(Embedding::new(&pattern, chosen.iter().map(|&(v, _)| v).collect()));
    })?;
    let count = TransversalCount { count: out.len() as u64, truncated, nodes };
    Ok((out, count))
}

/// Exact number of compatible transversal copies.
pub fn count_transversal_copies(
    spec: &MultipartiteSpec,
    g: &Graph,
    f: &IncompatibilitySystem,
    parts: &[VertexSet],
    budget: Budget,
) -> Result<TransversalCount> {
    let mut count = 0u64;
    let (truncated, nodes) = run(spec, g, f, parts, budget, &mut |_| count += 1)?;
    Ok(TransversalCount { count, truncated, nodes })
}
