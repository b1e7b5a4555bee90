//! Incompatibility systems: for every vertex `v` a family `F_v` of pairs of
//! edges meeting exactly at `v` that may not be used together.
//!
//! A pair `{va, vb} ∈ F_v` is stored at `v` as the sorted tuple `(a, b)`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{parse_error, precondition, EdgeName, Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::rng;

#[derive(Clone, Debug)]
pub struct IncompatibilitySystem {
    graph: Graph,
    at: Vec<HashSet<(usize, usize)>>,
}

/// Achieved Δ-bound: the largest number of partners any edge has at either
/// of its endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub delta: usize,
    pub per_vertex: Vec<usize>,
    pub pairs: usize,
}

/// Outcome of a subgraph compatibility test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Compatibility {
    Compatible,
    /// `e` and `f` are incompatible at `at`.
    Violation { at: usize, e: (usize, usize), f: (usize, usize) },
}

impl Compatibility {
    pub fn is_compatible(&self) -> bool {
        matches!(self, Compatibility::Compatible)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncompatJson {
    pub pairs: Vec<[usize; 3]>,
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn shared_vertex(e: (usize, usize), f: (usize, usize)) -> Option<(usize, usize, usize)> {
    // Returns (v, other end of e, other end of f) when e ∩ f = {v}.
    let (a, b) = e;
    let (c, d) = f;
    if ordered(a, b) == ordered(c, d) {
        return None;
    }
    if a == c {
        Some((a, b, d))
    } else if a == d {
        Some((a, b, c))
    } else if b == c {
        Some((b, a, d))
    } else if b == d {
        Some((b, a, c))
    } else {
        None
    }
}

impl IncompatibilitySystem {
    pub fn empty(g: &Graph) -> IncompatibilitySystem {
        IncompatibilitySystem { graph: g.clone(), at: vec![HashSet::new(); g.n()] }
    }

    /// Builds a system from triples `(v, a, b)` meaning `{va, vb} ∈ F_v`.
    pub fn from_triples(g: &Graph, triples: &[(usize, usize, usize)]) -> Result<IncompatibilitySystem> {
        let mut f = IncompatibilitySystem::empty(g);
        for &(v, a, b) in triples {
            f.add(v, a, b)?;
        }
        Ok(f)
    }

    /// Declares `va` and `vb` incompatible at `v`.
    pub fn add(&mut self, v: usize, a: usize, b: usize) -> Result<bool> {
        let g = &self.graph;
        g.check_vertex(v)?;
        if a == b {
            return Err(precondition(format!("pair at {v} repeats edge {{{v}, {a}}}")));
        }
        for x in [a, b] {
            if !g.has_edge(v, x) {
                return Err(Error::MissingEdge(EdgeName(v, x)));
            }
        }
        Ok(self.at[v].insert(ordered(a, b)))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Whether this system is defined over exactly `g`.
    pub fn is_bound_to(&self, g: &Graph) -> bool {
        &self.graph == g
    }

    pub fn is_empty(&self) -> bool {
        self.at.iter().all(HashSet::is_empty)
    }

    pub fn pair_count(&self) -> usize {
        self.at.iter().map(HashSet::len).sum()
    }

    /// `{va, vb} ∈ F_v`, no validation.
    #[inline]
    pub fn incompatible_at(&self, v: usize, a: usize, b: usize) -> bool {
        !self.at[v].is_empty() && self.at[v].contains(&ordered(a, b))
    }

    /// Edges sharing no vertex are always compatible.
    pub fn are_compatible(&self, e: (usize, usize), f: (usize, usize)) -> Result<bool> {
        for x in [e, f] {
            if !self.graph.has_edge(x.0, x.1) {
                return Err(Error::MissingEdge(EdgeName(x.0, x.1)));
            }
        }
        Ok(match shared_vertex(e, f) {
            Some((v, a, b)) => !self.incompatible_at(v, a, b),
            None => true,
        })
    }

    /// Checks every pair of edges in `edges`; reports the first violation in
    /// vertex order.
    pub fn is_compatible_subgraph(&self, edges: &[(usize, usize)]) -> Compatibility {
        let mut incident: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for &(a, b) in edges {
            incident.entry(a).or_default().push((a, b));
            incident.entry(b).or_default().push((a, b));
        }
        for (&v, es) in &incident {
            for (i, &e) in es.iter().enumerate() {
                for &f in &es[i + 1..] {
                    let oe = if e.0 == v { e.1 } else { e.0 };
                    let of = if f.0 == v { f.1 } else { f.0 };
                    if v < self.n() && self.incompatible_at(v, oe, of) {
                        return Compatibility::Violation { at: v, e, f };
                    }
                }
            }
        }
        Compatibility::Compatible
    }

    /// Number of edges at `v` incompatible with `va` at `v`.
    pub fn partners_at(&self, v: usize, a: usize) -> usize {
        self.at[v].iter().filter(|&&(x, y)| x == a || y == a).count()
    }

    pub fn bound_report(&self) -> BoundReport {
        let per_vertex: Vec<usize> = (0..self.n())
            .map(|v| {
                let mut count: BTreeMap<usize, usize> = BTreeMap::new();
                for &(a, b) in &self.at[v] {
                    *count.entry(a).or_default() += 1;
                    *count.entry(b).or_default() += 1;
                }
                count.values().copied().max().unwrap_or(0)
            })
            .collect();
        BoundReport {
            delta: per_vertex.iter().copied().max().unwrap_or(0),
            per_vertex,
            pairs: self.pair_count(),
        }
    }

    /// Sorted `(v, a, b)` triples with `a < b`.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<_> =
            self.at.iter().enumerate().flat_map(|(v, s)| s.iter().map(move |&(a, b)| (v, a, b))).collect();
        out.sort_unstable();
        out
    }

    /// Pairs `{v1, v2} ⊆ N(v)` with `vv1, vv2` incompatible at `v`, or with
    /// `vv1, v1v2` incompatible at `v1`, or symmetrically at `v2`.
    pub fn count_bad_pairs_at(&self, v: usize) -> usize {
        let nb: Vec<usize> = self.graph.neighbors(v).to_vec();
        let mut count = 0;
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                let bad = self.incompatible_at(v, x, y)
                    || (self.graph.has_edge(x, y) && (self.incompatible_at(x, v, y) || self.incompatible_at(y, v, x)));
                count += bad as usize;
            }
        }
        count
    }

    /// Union with another system over the same graph.
    pub fn extended(&self, other: &IncompatibilitySystem) -> Result<IncompatibilitySystem> {
        if self.graph != other.graph {
            return Err(precondition("systems are bound to different graphs"));
        }
        let mut out = self.clone();
        for (v, s) in other.at.iter().enumerate() {
            out.at[v].extend(s.iter().copied());
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, a, b) in self.triples() {
            writeln!(out, "{v} {a} {b}").unwrap();
        }
        out
    }

    /// Parses lines `v a b`; `#` starts a comment.
    pub fn parse_text(g: &Graph, text: &str) -> Result<IncompatibilitySystem> {
        let mut f = IncompatibilitySystem::empty(g);
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(parse_error(i + 1, "expected \"v a b\""));
            }
            let nums = toks
                .iter()
                .map(|t| t.parse::<usize>().map_err(|_| parse_error(i + 1, format!("bad vertex id {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            f.add(nums[0], nums[1], nums[2]).map_err(|e| parse_error(i + 1, e.to_string()))?;
        }
        Ok(f)
    }

    pub fn to_json(&self) -> IncompatJson {
        IncompatJson { pairs: self.triples().into_iter().map(|(v, a, b)| [v, a, b]).collect() }
    }

    pub fn from_json(g: &Graph, j: &IncompatJson) -> Result<IncompatibilitySystem> {
        let triples: Vec<_> = j.pairs.iter().map(|p| (p[0], p[1], p[2])).collect();
        IncompatibilitySystem::from_triples(g, &triples)
    }
}

/// Random system in which every edge has at most `⌊μn⌋` partners at each
/// endpoint.
///
/// At every vertex the incident edges are visited in random order; each
/// draws partners uniformly without replacement among the edges that still
/// have spare capacity, and the relation is symmetric from the start. Each
/// vertex uses its own stream derived from `seed`.
pub fn random_bounded_system(g: &Graph, mu: Rational, seed: u64) -> Result<IncompatibilitySystem> {
    if mu.is_negative() {
        return Err(precondition("μ must be non-negative"));
    }
    let cap = mu.times(g.n() as i64).floor().max(0) as usize;
    let mut f = IncompatibilitySystem::empty(g);
    if cap == 0 {
        return Ok(f);
    }
    let per_vertex: Vec<HashSet<(usize, usize)>> = (0..g.n())
        .into_par_iter()
        .map(|v| {
            let mut rng = rng::stream(seed, v as u64);
            let nb = g.neighbors(v).to_vec();
            let mut load: BTreeMap<usize, usize> = nb.iter().map(|&a| (a, 0)).collect();
            let mut pairs = HashSet::new();
            let mut order = nb.clone();
            order.shuffle(&mut rng);
            for &a in &order {
                let need = cap.saturating_sub(load[&a]);
                if need == 0 {
                    continue;
                }
                let mut cand: Vec<usize> = nb
                    .iter()
                    .copied()
                    .filter(|&b| b != a && load[&b] < cap && !pairs.contains(&ordered(a, b)))
                    .collect();
                cand.shuffle(&mut rng);
                for b in cand.into_iter().take(need) {
                    pairs.insert(ordered(a, b));
                    *load.get_mut(&a).unwrap() += 1;
                    *load.get_mut(&b).unwrap() += 1;
                }
            }
            pairs
        })
        .collect();
    f.at = per_vertex;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compatibility_examples() {
        let g = Graph::complete(4);
        let empty = IncompatibilitySystem::empty(&g);
        assert!(empty.are_compatible((0, 1), (0, 2)).unwrap());
        let f = IncompatibilitySystem::from_triples(&g, &[(0, 1, 2)]).unwrap();
        assert!(!f.are_compatible((0, 1), (0, 2)).unwrap());
        assert!(!f.are_compatible((2, 0), (1, 0)).unwrap());
        assert!(f.are_compatible((0, 1), (2, 3)).unwrap());
        assert!(matches!(
            IncompatibilitySystem::from_triples(&Graph::path(3), &[(0, 1, 2)]),
            Err(Error::MissingEdge(_))
        ));
        assert!(f.are_compatible((0, 1), (5, 6)).is_err());
    }

    #[test]
    fn subgraph_examples() {
        let g = Graph::complete(4);
        let f = IncompatibilitySystem::from_triples(&g, &[(0, 1, 2)]).unwrap();
        assert!(f.is_compatible_subgraph(&[(0, 1), (2, 3)]).is_compatible());
        assert_eq!(
            f.is_compatible_subgraph(&[(0, 1), (0, 2), (1, 2)]),
            Compatibility::Violation { at: 0, e: (0, 1), f: (0, 2) }
        );
        assert!(f.is_compatible_subgraph(&[]).is_compatible());
    }

    #[test]
    fn bound_examples() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(IncompatibilitySystem::empty(&g).bound_report().delta, 0);
        let f = IncompatibilitySystem::from_triples(&g, &[(0, 1, 2)]).unwrap();
        assert_eq!(f.bound_report().delta, 1);
        let f = IncompatibilitySystem::from_triples(&g, &[(0, 1, 2), (0, 1, 3), (0, 2, 3)]).unwrap();
        assert_eq!(f.bound_report().delta, 2);
    }

    #[test]
    fn random_system_examples() {
        let c6 = Graph::cycle(6);
        assert!(random_bounded_system(&c6, Rational::zero(), 1).unwrap().is_empty());
        let a = random_bounded_system(&c6, Rational::new(1, 6), 42).unwrap();
        let b = random_bounded_system(&c6, Rational::new(1, 6), 42).unwrap();
        assert_eq!(a.to_text(), b.to_text());
        // μn = 1 on a 2-regular graph: each vertex pairs its two edges.
        assert_eq!(a.pair_count(), 6);
        let k5 = Graph::complete(5);
        let full = random_bounded_system(&k5, Rational::int(3), 0).unwrap();
        assert_eq!(full.bound_report().delta, 3);
    }

    #[test]
    fn bad_pairs_examples() {
        let g = Graph::complete(4);
        assert_eq!(IncompatibilitySystem::empty(&g).count_bad_pairs_at(0), 0);
        let f = IncompatibilitySystem::from_triples(&g, &[(0, 1, 2)]).unwrap();
        assert!(f.count_bad_pairs_at(0) >= 1);
        // Clause (2): {1,2} is bad at 0 because 10 and 12 clash at 1.
        let f = IncompatibilitySystem::from_triples(&g, &[(1, 0, 2)]).unwrap();
        assert_eq!(f.count_bad_pairs_at(0), 1);
    }

    #[test]
    fn text_and_json_roundtrip() {
        let g = Graph::complete(4);
        let f = IncompatibilitySystem::from_triples(&g, &[(0, 2, 1), (3, 0, 1)]).unwrap();
        let text = f.to_text();
        assert_eq!(text, "0 1 2\n3 0 1\n");
        let back = IncompatibilitySystem::parse_text(&g, &format!("# header\n{text}\n")).unwrap();
        assert_eq!(back.triples(), f.triples());
        let j = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(j, r#"{"pairs":[[0,1,2],[3,0,1]]}"#);
        let back = IncompatibilitySystem::from_json(&g, &serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back.triples(), f.triples());
        assert!(IncompatibilitySystem::parse_text(&g, "0 1\n").is_err());
    }
}
