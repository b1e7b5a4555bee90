//! Exact cover over compatible copies: factor decision and maximum tilings.

use serde::Serialize;

use super::{embed, Budget, Embedding, Meter, Tiling};
use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;
use crate::incompat::IncompatibilitySystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoFactorReason {
    /// The target size is not a multiple of the pattern order.
    Divisibility,
    /// Some target vertex lies in no compatible copy.
    UncoverableVertex(usize),
    /// The exact-cover search finished without a cover.
    SearchExhausted,
}

/// Result of an exact factor search. `None` is a proof of absence;
/// `Indeterminate` only means the budget ran out.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum FactorOutcome {
    Found { tiling: Tiling, nodes: u64 },
    None { reason: NoFactorReason, nodes: u64, copies: usize },
    Indeterminate { nodes: u64 },
}

impl FactorOutcome {
    pub fn tiling(&self) -> Option<&Tiling> {
        match self {
            FactorOutcome::Found { tiling, .. } => Some(tiling),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, FactorOutcome::Found { .. })
    }

    pub fn is_none(&self) -> bool {
        matches!(self, FactorOutcome::None { .. })
    }

    pub fn is_indeterminate(&self) -> bool {
        matches!(self, FactorOutcome::Indeterminate { .. })
    }

    pub fn nodes(&self) -> u64 {
        match self {
            FactorOutcome::Found { nodes, .. }
            | FactorOutcome::None { nodes, .. }
            | FactorOutcome::Indeterminate { nodes } => *nodes,
        }
    }
}

struct Rows {
    copies: Vec<Embedding>,
    masks: Vec<VertexSet>,
    by_vertex: Vec<Vec<usize>>,
}

impl Rows {
    fn new(copies: Vec<Embedding>, n: usize) -> Rows {
        let masks: Vec<VertexSet> = copies.iter().map(|c| c.vertex_set(n)).collect();
        let mut by_vertex = vec![Vec::new(); n];
        for (i, c) in copies.iter().enumerate() {
            for &v in &c.vertices {
                by_vertex[v].push(i);
            }
        }
        Rows { copies, masks, by_vertex }
    }

    fn tiling(&self, chosen: &[usize], n: usize) -> Tiling {
        let mut t = Tiling::empty(n);
        for &i in chosen {
            t.push(self.copies[i].clone());
        }
        t.normalize();
        t
    }
}

/// Decides whether `g` has a compatible `h`-factor.
pub fn find_compatible_factor(
    h: &Graph,
    g: &Graph,
    f: &IncompatibilitySystem,
    budget: Budget,
) -> Result<FactorOutcome> {
    find_factor_within(h, g, f, &g.vertex_set(), budget)
}

/// Decides whether the induced subgraph `g[target]` has a compatible
/// `h`-factor.
pub fn find_factor_within(
    h: &Graph,
    g: &Graph,
    f: &IncompatibilitySystem,
    target: &VertexSet,
    budget: Budget,
) -> Result<FactorOutcome> {
    super::check_inputs(h, g, f)?;
    if !target.len().is_multiple_of(h.n()) {
        return Ok(FactorOutcome::None { reason: NoFactorReason::Divisibility, nodes: 0, copies: 0 });
    }
    if target.is_empty() {
        return Ok(FactorOutcome::Found { tiling: Tiling::empty(g.n()), nodes: 0 });
    }
    let en = embed::enumerate_within(h, g, f, target, budget)?;
    if en.truncated {
        return Ok(FactorOutcome::Indeterminate { nodes: en.nodes });
    }
    let mut meter = Meter::new(budget);
    meter.absorb(en.nodes, false);
    let rows = Rows::new(en.copies, g.n());
    let ncopies = rows.copies.len();
    if let Some(v) = target.iter().find(|&v| rows.by_vertex[v].is_empty()) {
        return Ok(FactorOutcome::None {
            reason: NoFactorReason::UncoverableVertex(v),
            nodes: meter.used(),
            copies: ncopies,
        });
    }
    let mut search = Cover { rows: &rows, target, meter: &mut meter, chosen: Vec::new() };
    let mut covered = VertexSet::new(g.n());
    let found = search.solve(&mut covered);
    let chosen = std::mem::take(&mut search.chosen);
    let nodes = meter.used();
    Ok(match found {
        Some(true) => FactorOutcome::Found { tiling: rows.tiling(&chosen, g.n()), nodes },
        Some(false) => FactorOutcome::None { reason: NoFactorReason::SearchExhausted, nodes, copies: ncopies },
        None => FactorOutcome::Indeterminate { nodes },
    })
}

struct Cover<'a> {
    rows: &'a Rows,
    target: &'a VertexSet,
    meter: &'a mut Meter,
    chosen: Vec<usize>,
}

impl Cover<'_> {
    /// `Some(true)` when a cover was found (left in `chosen`), `Some(false)`
    /// when none exists below this node, `None` when out of budget.
    fn solve(&mut self, covered: &mut VertexSet) -> Option<bool> {
        if !self.meter.tick() {
            return None;
        }
        // Minimum-remaining-values column, ties to the smallest vertex.
        let mut best: Option<(usize, usize)> = None;
        for v in self.target.difference(covered).iter() {
            let count = self.rows.by_vertex[v].iter().filter(|&&c| self.rows.masks[c].is_disjoint(covered)).count();
            if best.is_none_or(|(_, b)| count < b) {
                best = Some((v, count));
                if count == 0 {
                    return Some(false);
                }
            }
        }
        let Some((v, _)) = best else {
            return Some(true);
        };
        for &c in &self.rows.by_vertex[v] {
            let mask = &self.rows.masks[c];
            if !mask.is_disjoint(covered) {
                continue;
            }
            covered.union_with(mask);
            self.chosen.push(c);
            match self.solve(covered) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            self.chosen.pop();
            covered.difference_with(mask);
        }
        Some(false)
    }
}

/// Largest tiling found, with `optimal` set when the search completed.
#[derive(Clone, Debug, Serialize)]
pub struct MaxTiling {
    pub tiling: Tiling,
    pub optimal: bool,
    pub nodes: u64,
}

/// Branch and bound for a maximum-cardinality compatible tiling.
pub fn max_compatible_tiling(h: &Graph, g: &Graph, f: &IncompatibilitySystem, budget: Budget) -> Result<MaxTiling> {
    super::check_inputs(h, g, f)?;
    let en = embed::enumerate_compatible_copies(h, g, f, budget)?;
    if en.truncated {
        return Ok(MaxTiling { tiling: Tiling::empty(g.n()), optimal: false, nodes: en.nodes });
    }
    let mut meter = Meter::new(budget);
    meter.absorb(en.nodes, false);
    let rows = Rows::new(en.copies, g.n());
    let mut live = VertexSet::new(g.n());
    for v in 0..g.n() {
        if !rows.by_vertex[v].is_empty() {
            live.insert(v);
        }
    }
    let mut bb = Branch { rows: &rows, h: h.n(), meter: &mut meter, chosen: Vec::new(), best: Vec::new() };
    let complete = bb.search(&mut live);
    let best = std::mem::take(&mut bb.best);
    Ok(MaxTiling { tiling: rows.tiling(&best, g.n()), optimal: complete, nodes: meter.used() })
}

struct Branch<'a> {
    rows: &'a Rows,
    h: usize,
    meter: &'a mut Meter,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl Branch<'_> {
    /// Returns false when the budget ran out.
    fn search(&mut self, live: &mut VertexSet) -> bool {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.chosen.len() + live.len() / self.h <= self.best.len() {
            return true;
        }
        if !self.meter.tick() {
            return false;
        }
        let Some(v) = live.first() else {
            return true;
        };
        for &c in &self.rows.by_vertex[v] {
            let mask = &self.rows.masks[c];
            if !mask.is_subset(live) {
                continue;
            }
            live.difference_with(mask);
            self.chosen.push(c);
            let ok = self.search(live);
            self.chosen.pop();
            live.union_with(mask);
            if !ok {
                return false;
            }
        }
        live.remove(v);
        let ok = self.search(live);
        live.insert(v);
        ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_in_c4() {
        let g = Graph::cycle(4);
        let f = IncompatibilitySystem::empty(&g);
        let k2 = Graph::complete(2);
        let r = find_compatible_factor(&k2, &g, &f, Budget::UNLIMITED).unwrap();
        let t = r.tiling().unwrap();
        assert_eq!(t.len(), 2);
        t.verify(&k2, &g, &f, Some(&g.vertex_set())).unwrap();
    }

    #[test]
    fn divisibility_and_uncoverable() {
        let g = Graph::complete(5);
        let f = IncompatibilitySystem::empty(&g);
        let r = find_compatible_factor(&Graph::complete(2), &g, &f, Budget::UNLIMITED).unwrap();
        assert!(matches!(r, FactorOutcome::None { reason: NoFactorReason::Divisibility, .. }));
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let f = IncompatibilitySystem::empty(&g);
        let r = find_compatible_factor(&Graph::complete(2), &g, &f, Budget::UNLIMITED).unwrap();
        assert!(matches!(r, FactorOutcome::None { reason: NoFactorReason::UncoverableVertex(3), .. }));
    }

    #[test]
    fn compatibility_blocks_factor() {
        // C_6 with P_3 centres 1 and 4 forbidden leaves no P_3-factor.
        let g = Graph::cycle(6);
        let p3 = Graph::path(3);
        let f = IncompatibilitySystem::from_triples(&g, &[(1, 0, 2), (4, 3, 5)]).unwrap();
        let r = find_compatible_factor(&p3, &g, &f, Budget::UNLIMITED).unwrap();
        let t = r.tiling().unwrap();
        t.verify(&p3, &g, &f, Some(&g.vertex_set())).unwrap();
        let all: Vec<_> = (0..6).map(|v| (v, (v + 5) % 6, (v + 1) % 6)).collect();
        let f = IncompatibilitySystem::from_triples(&g, &all).unwrap();
        assert!(find_compatible_factor(&p3, &g, &f, Budget::UNLIMITED).unwrap().is_none());
    }

    #[test]
    fn budget_yields_indeterminate() {
        let g = Graph::complete(12);
        let f = IncompatibilitySystem::empty(&g);
        let r = find_compatible_factor(&Graph::complete(3), &g, &f, Budget(5)).unwrap();
        assert!(r.is_indeterminate());
    }

    #[test]
    fn empty_target_has_empty_factor() {
        let g = Graph::complete(3);
        let f = IncompatibilitySystem::empty(&g);
        let r = find_factor_within(&Graph::complete(3), &g, &f, &g.empty_set(), Budget(0)).unwrap();
        assert!(r.tiling().unwrap().is_empty());
    }

    #[test]
    fn maximum_tilings() {
        let k4 = Graph::complete(4);
        let f = IncompatibilitySystem::empty(&k4);
        let r = max_compatible_tiling(&Graph::complete(3), &k4, &f, Budget::UNLIMITED).unwrap();
        assert_eq!((r.tiling.len(), r.optimal), (1, true));
        let r = max_compatible_tiling(&Graph::complete(2), &k4, &f, Budget::UNLIMITED).unwrap();
        assert_eq!((r.tiling.len(), r.optimal), (2, true));
        // Star K_{1,3}: one edge at most.
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let f = IncompatibilitySystem::empty(&star);
        let r = max_compatible_tiling(&Graph::complete(2), &star, &f, Budget::UNLIMITED).unwrap();
        assert_eq!((r.tiling.len(), r.optimal), (1, true));
    }
}
