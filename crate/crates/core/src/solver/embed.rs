//! Backtracking enumeration of compatible embeddings.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::Serialize;

use super::{Budget, Embedding, Meter};
use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;
use crate::incompat::IncompatibilitySystem;

/// Static assignment order: each next pattern vertex has the most already
/// placed neighbours (ties: higher degree, then smaller id), starting from
/// `start` when given.
pub(crate) fn search_order(h: &Graph, start: Option<usize>) -> Vec<usize> {
    let n = h.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    if let Some(s) = start {
        placed[s] = true;
        order.push(s);
    }
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = h.neighbors(v).iter().filter(|&w| placed[w]).count();
                (back, h.degree(v), usize::MAX - v)
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Backtracking matcher for one (pattern, host, system) triple restricted to
/// an allowed host vertex set.
pub(crate) struct Matcher<'a> {
    h: &'a Graph,
    g: &'a Graph,
    f: &'a IncompatibilitySystem,
    order: Vec<usize>,
    pos: Vec<usize>,
    back: Vec<Vec<usize>>,
    allowed: VertexSet,
    check_f: bool,
}

impl<'a> Matcher<'a> {
    pub(crate) fn new(
        h: &'a Graph,
        g: &'a Graph,
        f: &'a IncompatibilitySystem,
        allowed: VertexSet,
        start: Option<usize>,
    ) -> Matcher<'a> {
        let order = search_order(h, start);
        let mut pos = vec![0; h.n()];
        for (i, &p) in order.iter().enumerate() {
            pos[p] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &p)| h.neighbors(p).iter().filter(|&q| pos[q] < i).collect())
            .collect();
        Matcher { h, g, f, order, pos, back, allowed, check_f: !f.is_empty() }
    }

    /// Visits every compatible labelled embedding (pattern vertex → host
    /// vertex), optionally pinning the first pattern vertex in the order to
    /// `pin`. Returns `Break` when the visitor stopped or the budget ran out.
    pub(crate) fn run(
        &self,
        pin: Option<usize>,
        meter: &mut Meter,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if self.h.n() == 0 {
            return visit(&[]);
        }
        let mut map = vec![usize::MAX; self.h.n()];
        let mut used = VertexSet::new(self.g.n());
        self.extend(0, pin, &mut map, &mut used, meter, visit)
    }

    fn candidates(&self, i: usize, used: &VertexSet, map: &[usize]) -> VertexSet {
        let mut cand = self.allowed.difference(used);
        for &q in &self.back[i] {
            cand.intersect_with(self.g.neighbors(map[q]));
        }
        cand
    }

    /// Checks the edges created by placing pattern vertex `order[i]` at `x`.
    fn compatible_extension(&self, i: usize, x: usize, map: &[usize]) -> bool {
        if !self.check_f {
            return true;
        }
        let back = &self.back[i];
        for (a, &q) in back.iter().enumerate() {
            let y = map[q];
            // Pairs of new edges meeting at x.
            for &q2 in &back[a + 1..] {
                if self.f.incompatible_at(x, y, map[q2]) {
                    return false;
                }
            }
            // New edge yx against the copy edges already present at y.
            for q2 in self.h.neighbors(q).iter() {
                if self.pos[q2] < i && self.f.incompatible_at(y, x, map[q2]) {
                    return false;
                }
            }
        }
        true
    }

    fn extend(
        &self,
        i: usize,
        pin: Option<usize>,
        map: &mut [usize],
        used: &mut VertexSet,
        meter: &mut Meter,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if i == self.order.len() {
            return visit(map);
        }
        if !meter.tick() {
            return ControlFlow::Break(());
        }
        let p = self.order[i];
        let mut cand = self.candidates(i, used, map);
        if i == 0 {
            if let Some(x) = pin {
                let keep = cand.contains(x);
                cand.clear();
                if keep {
                    cand.insert(x);
                }
            }
        }
        for x in cand.iter() {
            if !self.compatible_extension(i, x, map) {
                continue;
            }
            map[p] = x;
            used.insert(x);
            let flow = self.extend(i + 1, None, map, used, meter, visit);
            used.remove(x);
            map[p] = usize::MAX;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Image vertices and edges, which identify a copy.
type CopyKey = (Vec<usize>, Vec<(usize, usize)>);

/// All compatible copies found, deduplicated by image and sorted by key.
#[derive(Clone, Debug, Serialize)]
pub struct CopyEnumeration {
    pub copies: Vec<Embedding>,
    /// Set when the node budget ran out; `copies` is then a prefix.
    pub truncated: bool,
    pub nodes: u64,
}

/// Every compatible copy of `h` in `g` up to automorphisms of `h`.
pub fn enumerate_compatible_copies(
    h: &Graph,
    g: &Graph,
    f: &IncompatibilitySystem,
    budget: Budget,
) -> Result<CopyEnumeration> {
    enumerate_within(h, g, f, &g.vertex_set(), budget)
}

/// Copies whose image lies inside `allowed`.
pub fn enumerate_within(
    h: &Graph,
    g: &Graph,
    f: &IncompatibilitySystem,
    allowed: &VertexSet,
    budget: Budget,
) -> Result<CopyEnumeration> {
    super::check_inputs(h, g, f)?;
    let matcher = Matcher::new(h, g, f, allowed.clone(), None);
    let mut meter = Meter::new(budget);
    let mut seen: BTreeMap<CopyKey, Vec<usize>> = BTreeMap::new();
    let flow = matcher.run(None, &mut meter, &mut |map| {
        let emb = Embedding::new(h, map.to_vec());
        seen.entry((emb.vertices.clone(), emb.edges.clone())).or_insert_with(|| map.to_vec());
        ControlFlow::Continue(())
    });
    let copies = seen.into_values().map(|m| Embedding::new(h, m)).collect();
    Ok(CopyEnumeration { copies, truncated: flow.is_break(), nodes: meter.used() })
}

/// First compatible copy (in search order) using `v` and otherwise only
/// vertices of `allowed`.
pub fn find_copy_containing(
    h: &Graph,
    g: &Graph,
    f: &IncompatibilitySystem,
    v: usize,
    allowed: &VertexSet,
    meter: &mut Meter,
) -> Option<Embedding> {
    let mut allowed = allowed.clone();
    allowed.insert(v);
    for p in 0..h.n() {
        let matcher = Matcher::new(h, g, f, allowed.clone(), Some(p));
        let mut found = None;
        let _ = matcher.run(Some(v), meter, &mut |map| {
            found = Some(map.to_vec());
            ControlFlow::Break(())
        });
        if let Some(m) = found {
            return Some(Embedding::new(h, m));
        }
        if meter.exhausted() {
            return None;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(h: &Graph, g: &Graph, f: &IncompatibilitySystem) -> usize {
        enumerate_compatible_copies(h, g, f, Budget::UNLIMITED).unwrap().copies.len()
    }

    #[test]
    fn copy_count_examples() {
        let k3 = Graph::complete(3);
        let k4 = Graph::complete(4);
        assert_eq!(count(&Graph::complete(2), &k3, &IncompatibilitySystem::empty(&k3)), 3);
        assert_eq!(count(&k3, &k4, &IncompatibilitySystem::empty(&k4)), 4);
        let f = IncompatibilitySystem::from_triples(&k4, &[(0, 1, 2)]).unwrap();
        let copies = enumerate_compatible_copies(&k3, &k4, &f, Budget::UNLIMITED).unwrap().copies;
        assert_eq!(copies.len(), 3);
        assert!(copies.iter().all(|c| c.vertices != vec![0, 1, 2]));
    }

    #[test]
    fn budget_truncates() {
        let k6 = Graph::complete(6);
        let r = enumerate_compatible_copies(&Graph::complete(3), &k6, &IncompatibilitySystem::empty(&k6), Budget(3))
            .unwrap();
        assert!(r.truncated);
    }

    #[test]
    fn copies_are_sorted_and_distinct() {
        let c5 = Graph::cycle(5);
        let r = enumerate_compatible_copies(&Graph::path(3), &c5, &IncompatibilitySystem::empty(&c5), Budget::UNLIMITED)
            .unwrap();
        assert_eq!(r.copies.len(), 5);
        let keys: Vec<_> = r.copies.iter().map(|c| (c.vertices.clone(), c.edges.clone())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn pinned_search() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let f = IncompatibilitySystem::empty(&g);
        let k3 = Graph::complete(3);
        let mut meter = Meter::new(Budget::UNLIMITED);
        let e = find_copy_containing(&k3, &g, &f, 1, &g.vertex_set(), &mut meter).unwrap();
        assert_eq!(e.vertices, vec![0, 1, 2]);
        assert!(find_copy_containing(&k3, &g, &f, 3, &g.vertex_set(), &mut meter).is_none());
    }
}
