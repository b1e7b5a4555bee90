//! Pair densities, exhaustive ε-regularity at desk scale, reduced graphs and
//! counting experiments for compatible transversal copies.
//!
//! Regularity is only ever certified by scanning every admissible subset
//! `A ⊆ X`; for each `A` and each size `|B| = b`, the extreme densities are
//! attained by the `b` vertices of `Y` with most and fewest neighbours in
//! `A`, so `B` need not be enumerated. All thresholds are exact rationals.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, MultipartiteSpec, VertexPartition};
use crate::incompat::{random_bounded_system, IncompatibilitySystem};
use crate::rational::Rational;
use crate::solver::{count_transversal_copies, Budget};

/// Largest side accepted by the exhaustive regularity test.
pub const REGULARITY_CAP: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairStats {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub edges: usize,
    pub density: Rational,
}

fn check_pair(g: &Graph, x: &[usize], y: &[usize]) -> Result<(VertexSet, VertexSet)> {
    let xs = g.set_of(x)?;
    let ys = g.set_of(y)?;
    if xs.is_empty() || ys.is_empty() {
        return Err(precondition("both sides of a pair must be non-empty"));
    }
    if !xs.is_disjoint(&ys) {
        return Err(precondition("the sides of a pair must be disjoint"));
    }
    Ok((xs, ys))
}

fn ratio(e: usize, a: usize, b: usize) -> Rational {
    Rational::new(e as i64, (a * b) as i64)
}

/// `d(X, Y) = e(X, Y) / (|X||Y|)`.
pub fn density(g: &Graph, x: &[usize], y: &[usize]) -> Result<Rational> {
    Ok(pair_stats(g, x, y)?.density)
}

pub fn pair_stats(g: &Graph, x: &[usize], y: &[usize]) -> Result<PairStats> {
    let (xs, ys) = check_pair(g, x, y)?;
    let edges = g.edges_between(&xs, &ys);
    Ok(PairStats { x: xs.to_vec(), y: ys.to_vec(), edges, density: ratio(edges, xs.len(), ys.len()) })
}

/// Subsets `A ⊆ X`, `B ⊆ Y` whose density is at least `ε` away from `d(X, Y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrregularWitness {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub density: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub epsilon: Rational,
    pub density: Rational,
    /// ε-regular.
    pub regular: bool,
    /// `d(X, Y) >= d` when a density floor was given.
    pub dense_enough: Option<bool>,
    pub witness: Option<IrregularWitness>,
}

impl Regularity {
    /// ε-regular and, if a floor was given, dense enough.
    pub fn holds(&self) -> bool {
        self.regular && self.dense_enough != Some(false)
    }
}

fn far(d: Rational, base: Rational, eps: Rational) -> bool {
    let diff = if d >= base { d.0 - base.0 } else { base.0 - d.0 };
    diff >= eps.0
}

/// Exhaustive test of `(ε, d)`-regularity; both sides must have at most
/// [`REGULARITY_CAP`] vertices.
pub fn is_eps_regular_exhaustive(g: &Graph, x: &[usize], y: &[usize], eps: Rational, d_min: Option<Rational>) -> Result<Regularity> {
    if eps <= Rational::zero() {
        return Err(precondition("ε must be positive"));
    }
    let stats = pair_stats(g, x, y)?;
    let (xv, yv) = (&stats.x, &stats.y);
    if xv.len() > REGULARITY_CAP || yv.len() > REGULARITY_CAP {
        return Err(Error::CapExceeded(format!(
            "exhaustive regularity is limited to sides of {REGULARITY_CAP} vertices (got {} and {}); use sampled_irregularity for larger pairs",
            xv.len(),
            yv.len()
        )));
    }
    let base = stats.density;
    let dense_enough = d_min.map(|d| base >= d);
    let (nx, ny) = (xv.len(), yv.len());
    let min_b = (1..=ny).find(|&b| eps.reached_by(b, ny)).unwrap_or(ny);
    // adj[j] = bitmask over X of the neighbours of y_j.
    let adj: Vec<u32> = yv
        .iter()
        .map(|&w| xv.iter().enumerate().filter(|&(_, &u)| g.has_edge(u, w)).fold(0u32, |m, (i, _)| m | 1 << i))
        .collect();
    for mask in 1u32..(1 << nx) {
        let a = mask.count_ones() as usize;
        if !eps.reached_by(a, nx) {
            continue;
        }
        let mut deg: Vec<(usize, usize)> = adj.iter().enumerate().map(|(j, &m)| ((m & mask).count_ones() as usize, j)).collect();
        deg.sort_unstable_by(|p, q| q.cmp(p));
        let mut hi = 0;
        let mut lo = 0;
        for b in 1..=ny {
            hi += deg[b - 1].0;
            lo += deg[ny - b].0;
            if b < min_b {
                continue;
            }
            for (e, top) in [(hi, true), (lo, false)] {
                let d = ratio(e, a, b);
                if far(d, base, eps) {
                    let a_set = (0..nx).filter(|&i| mask >> i & 1 == 1).map(|i| xv[i]).collect();
                    let mut b_set: Vec<usize> =
                        if top { deg[..b].iter().map(|&(_, j)| yv[j]).collect() } else { deg[ny - b..].iter().map(|&(_, j)| yv[j]).collect() };
                    b_set.sort_unstable();
                    return Ok(Regularity {
                        epsilon: eps,
                        density: base,
                        regular: false,
                        dense_enough,
                        witness: Some(IrregularWitness { a: a_set, b: b_set, density: d }),
                    });
                }
            }
        }
    }
    Ok(Regularity { epsilon: eps, density: base, regular: true, dense_enough, witness: None })
}

/// Random search for an irregularity witness on pairs too large for the
/// exhaustive test. Finding none certifies nothing.
pub fn sampled_irregularity(g: &Graph, x: &[usize], y: &[usize], eps: Rational, samples: u64, seed: u64) -> Result<Option<IrregularWitness>> {
    use rand::seq::index::sample;
    use rand::Rng as _;
    let stats = pair_stats(g, x, y)?;
    let (xv, yv) = (&stats.x, &stats.y);
    let min_a = (1..=xv.len()).find(|&a| eps.reached_by(a, xv.len())).unwrap_or(xv.len());
    let min_b = (1..=yv.len()).find(|&b| eps.reached_by(b, yv.len())).unwrap_or(yv.len());
    for i in 0..samples {
        let mut rng = crate::rng::stream(seed, i);
        let ka = rng.gen_range(min_a..=xv.len());
        let kb = rng.gen_range(min_b..=yv.len());
        let mut a: Vec<usize> = sample(&mut rng, xv.len(), ka).into_iter().map(|k| xv[k]).collect();
        let mut b: Vec<usize> = sample(&mut rng, yv.len(), kb).into_iter().map(|k| yv[k]).collect();
        a.sort_unstable();
        b.sort_unstable();
        let d = density(g, &a, &b)?;
        if far(d, stats.density, eps) {
            return Ok(Some(IrregularWitness { a, b, density: d }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct PairVerdict {
    pub i: usize,
    pub j: usize,
    pub density: Rational,
    pub regular: bool,
}

/// Cluster graph with an edge exactly at the pairs verified `(ε, d)`-regular.
#[derive(Clone, Debug, Serialize)]
pub struct ReducedGraph {
    #[serde(skip)]
    pub graph: Graph,
    pub epsilon: Rational,
    pub d: Rational,
    pub edges: Vec<(usize, usize)>,
    pub pairs: Vec<PairVerdict>,
}

pub fn reduced_graph(g: &Graph, clusters: &VertexPartition, eps: Rational, d: Rational) -> Result<ReducedGraph> {
    let k = clusters.len();
    let mut r = Graph::empty(k)?;
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let reg = is_eps_regular_exhaustive(g, clusters.block(i), clusters.block(j), eps, Some(d))?;
            if reg.holds() {
                r.add_edge(i, j)?;
            }
            pairs.push(PairVerdict { i, j, density: reg.density, regular: reg.holds() });
        }
    }
    Ok(ReducedGraph { edges: r.edges(), graph: r, epsilon: eps, d, pairs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FactCheck {
    /// The premise of the fact failed, so nothing is claimed.
    NotApplicable { reason: String },
    Holds { detail: String },
    Violated { detail: String },
}

impl FactCheck {
    pub fn holds(&self) -> bool {
        matches!(self, FactCheck::Holds { .. })
    }

    pub fn violated(&self) -> bool {
        matches!(self, FactCheck::Violated { .. })
    }
}

fn subset_of(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.contains(v))
}

/// Slicing: if `(X, Y)` is ε-regular and `|X'| >= η|X|`, `|Y'| >= η|Y|` with
/// `η > ε`, then `(X', Y')` is `max(ε/η, 2ε)`-regular with density within ε.
pub fn check_slicing(
    g: &Graph,
    x: &[usize],
    y: &[usize],
    x2: &[usize],
    y2: &[usize],
    eps: Rational,
    eta: Rational,
) -> Result<FactCheck> {
    if !subset_of(x2, x) || !subset_of(y2, y) {
        return Err(precondition("slices must be subsets of their sides"));
    }
    let whole = is_eps_regular_exhaustive(g, x, y, eps, None)?;
    if eta <= eps {
        return Ok(FactCheck::NotApplicable { reason: format!("η = {eta} does not exceed ε = {eps}") });
    }
    let (sx, sy) = (g.set_of(x2)?.len(), g.set_of(y2)?.len());
    if !eta.reached_by(sx, g.set_of(x)?.len()) || !eta.reached_by(sy, g.set_of(y)?.len()) {
        return Err(precondition("slices must have at least η|X| and η|Y| vertices"));
    }
    if !whole.regular {
        return Ok(FactCheck::NotApplicable { reason: format!("(X, Y) is not {eps}-regular") });
    }
    let eps2 = Rational(std::cmp::max(eps.0 / eta.0, eps.0 * 2));
    let slice = is_eps_regular_exhaustive(g, x2, y2, eps2, None)?;
    let close = !far(slice.density, whole.density, eps);
    let detail = format!("ε' = {eps2}, d = {}, d' = {}", whole.density, slice.density);
    Ok(if slice.regular && close { FactCheck::Holds { detail } } else { FactCheck::Violated { detail } })
}

/// Degree fact: in an `(ε, d)`-regular pair and for `B ⊆ Y` with
/// `|B| >= ε|Y|`, at most `ε|X|` vertices of `X` have fewer than
/// `(d - ε)|B|` neighbours in `B`.
pub fn check_degree_fact(g: &Graph, x: &[usize], y: &[usize], b: &[usize], eps: Rational, d: Rational) -> Result<FactCheck> {
    if !subset_of(b, y) {
        return Err(precondition("B must be a subset of Y"));
    }
    let bset = g.set_of(b)?;
    let ny = g.set_of(y)?.len();
    if !eps.reached_by(bset.len(), ny) {
        return Ok(FactCheck::NotApplicable { reason: "|B| < ε|Y|".into() });
    }
    let reg = is_eps_regular_exhaustive(g, x, y, eps, Some(d))?;
    if !reg.holds() {
        return Ok(FactCheck::NotApplicable { reason: format!("(X, Y) is not ({eps}, {d})-regular") });
    }
    let floor = Rational(d.0 - eps.0).times(bset.len() as i64);
    let xs = g.set_of(x)?;
    let violators = xs.iter().filter(|&v| Rational::int(g.neighbors(v).intersection_len(&bset) as i64) < floor).count();
    let detail = format!("{violators} vertices below (d - ε)|B| = {floor}; allowance ε|X| = {}", eps.times(xs.len() as i64));
    Ok(if eps.times(xs.len() as i64) >= Rational::int(violators as i64) {
        FactCheck::Holds { detail }
    } else {
        FactCheck::Violated { detail }
    })
}

/// Compatible and total transversal copies of `K_r(h_1, ..., h_r)`.
#[derive(Clone, Debug, Serialize)]
pub struct CountReport {
    pub total: u64,
    pub compatible: u64,
    /// `∏ |U_i|^{h_i}`.
    pub product: u128,
    /// `compatible / product`.
    pub c_observed: f64,
    pub truncated: bool,
}

pub fn counting_experiment(
    g: &Graph,
    f: &IncompatibilitySystem,
    parts: &[VertexSet],
    spec: &MultipartiteSpec,
    budget: Budget,
) -> Result<CountReport> {
    let empty = IncompatibilitySystem::empty(g);
    let total = count_transversal_copies(spec, g, &empty, parts, budget)?;
    let compatible = count_transversal_copies(spec, g, f, parts, budget)?;
    let product = parts
        .iter()
        .zip(spec.parts())
        .try_fold(1u128, |acc, (u, &h)| (u.len() as u128).checked_pow(h as u32).and_then(|p| acc.checked_mul(p)))
        .ok_or_else(|| Error::CapExceeded("product of part sizes overflows".into()))?;
    let c_observed = if product == 0 { 0.0 } else { compatible.count as f64 / product as f64 };
    Ok(CountReport { total: total.count, compatible: compatible.count, product, c_observed, truncated: total.truncated || compatible.truncated })
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub mu: Rational,
    /// Largest number of partners any edge has at one endpoint.
    pub achieved_bound: usize,
    pub report: CountReport,
}

/// Runs [`counting_experiment`] under random `μn`-bounded systems for each
/// `μ`, with one stream per `μ` derived from `seed`.
pub fn counting_sweep(
    g: &Graph,
    parts: &[VertexSet],
    spec: &MultipartiteSpec,
    mus: &[Rational],
    seed: u64,
    budget: Budget,
) -> Result<Vec<SweepRow>> {
    mus.iter()
        .enumerate()
        .map(|(i, &mu)| {
            let f = random_bounded_system(g, mu, seed.wrapping_add(i as u64))?;
            let report = counting_experiment(g, &f, parts, spec, budget)?;
            Ok(SweepRow { mu, achieved_bound: f.bound_report().delta, report })
        })
        .collect()
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("mu,achieved_bound,total,compatible,c_observed\n");
    for r in rows {
        writeln!(out, "{},{},{},{},{}", r.mu, r.achieved_bound, r.report.total, r.report.compatible, r.report.c_observed).unwrap();
    }
    out
}

/// Shape of a candidate regular partition `V_0 ∪ V_1 ∪ ... ∪ V_k`.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionShape {
    pub exceptional_ok: bool,
    pub equal_sizes: bool,
    pub size_cap_ok: bool,
    pub irregular_pairs: usize,
    pub irregular_allowance: Rational,
    pub pairs_ok: bool,
}

impl PartitionShape {
    pub fn holds(&self) -> bool {
        self.exceptional_ok && self.equal_sizes && self.size_cap_ok && self.pairs_ok
    }
}

/// Checks the three clauses of an `(ε, d)`-regular partition. Pair
/// regularity is tested exhaustively, so clusters are capped in size.
pub fn validate_regular_partition(
    g: &Graph,
    exceptional: &[usize],
    clusters: &[Vec<usize>],
    eps: Rational,
    d: Rational,
) -> Result<PartitionShape> {
    let mut blocks: Vec<Vec<usize>> = clusters.to_vec();
    if !exceptional.is_empty() {
        blocks.push(exceptional.to_vec());
    }
    VertexPartition::new(g.n(), blocks)?;
    let n = g.n() as i64;
    let k = clusters.len();
    let exceptional_ok = eps.times(n) >= Rational::int(exceptional.len() as i64);
    let equal_sizes = clusters.windows(2).all(|w| w[0].len() == w[1].len());
    let cap = eps.times(n).ceil();
    let size_cap_ok = clusters.iter().all(|c| c.len() as i64 <= cap);
    let mut irregular_pairs = 0;
    for i in 0..k {
        for j in i + 1..k {
            if !is_eps_regular_exhaustive(g, &clusters[i], &clusters[j], eps, Some(d))?.holds() {
                irregular_pairs += 1;
            }
        }
    }
    let irregular_allowance = eps.times((k * k) as i64);
    let pairs_ok = irregular_allowance >= Rational::int(irregular_pairs as i64);
    Ok(PartitionShape { exceptional_ok, equal_sizes, size_cap_ok, irregular_pairs, irregular_allowance, pairs_ok })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_multipartite;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn matching(k: usize) -> (Graph, Vec<usize>, Vec<usize>) {
        let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, k + i)).collect();
        (Graph::from_edges(2 * k, &edges).unwrap(), (0..k).collect(), (k..2 * k).collect())
    }

    #[test]
    fn densities() {
        let (g, p) = complete_multipartite(&MultipartiteSpec::new(vec![2, 3]).unwrap());
        assert_eq!(density(&g, p.block(0), p.block(1)).unwrap(), Rational::int(1));
        let e = Graph::empty(4).unwrap();
        assert_eq!(density(&e, &[0, 1], &[2, 3]).unwrap(), Rational::zero());
        let c4 = Graph::cycle(4);
        assert_eq!(density(&c4, &[0, 2], &[1, 3]).unwrap(), Rational::int(1));
        assert!(density(&c4, &[], &[1]).is_err());
        assert!(density(&c4, &[0, 1], &[1]).is_err());
    }

    #[test]
    fn regularity_examples() {
        let (g, p) = complete_multipartite(&MultipartiteSpec::new(vec![4, 5]).unwrap());
        assert!(is_eps_regular_exhaustive(&g, p.block(0), p.block(1), r(1, 10), None).unwrap().regular);
        let (m, x, y) = matching(8);
        let reg = is_eps_regular_exhaustive(&m, &x, &y, r(1, 4), None).unwrap();
        assert!(!reg.regular);
        let w = reg.witness.unwrap();
        assert_eq!(density(&m, &w.a, &w.b).unwrap(), w.density);
        assert!(w.a.len() * 4 >= 8 && w.b.len() * 4 >= 8);
        assert!(is_eps_regular_exhaustive(&m, &x, &y, Rational::int(1), None).unwrap().regular);
        let (big, bx, by) = matching(15);
        assert!(matches!(is_eps_regular_exhaustive(&big, &bx, &by, r(1, 4), None), Err(Error::CapExceeded(_))));
        assert!(sampled_irregularity(&big, &bx, &by, r(1, 15), 50, 1).unwrap().is_some());
        let (kb, kp) = complete_multipartite(&MultipartiteSpec::new(vec![15, 15]).unwrap());
        assert!(sampled_irregularity(&kb, kp.block(0), kp.block(1), r(1, 4), 50, 1).unwrap().is_none());
    }

    #[test]
    fn density_floor() {
        let (m, x, y) = matching(3);
        let reg = is_eps_regular_exhaustive(&m, &x, &y, Rational::int(1), Some(r(1, 2))).unwrap();
        assert!(reg.regular && reg.dense_enough == Some(false) && !reg.holds());
    }

    #[test]
    fn reduced_graphs() {
        let (g, p) = complete_multipartite(&MultipartiteSpec::new(vec![3, 3, 3]).unwrap());
        let rg = reduced_graph(&g, &p, r(1, 3), r(1, 2)).unwrap();
        assert_eq!(rg.edges, vec![(0, 1), (0, 2), (1, 2)]);
        let mut g2 = g.clone();
        for a in 0..3 {
            for b in 3..6 {
                g2.remove_edge(a, b);
            }
        }
        let rg2 = reduced_graph(&g2, &p, r(1, 3), r(1, 2)).unwrap();
        assert_eq!(rg2.edges, vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn blown_up_pentagon() {
        let mut g = Graph::empty(15).unwrap();
        for i in 0..5 {
            let j = (i + 1) % 5;
            for a in 0..3 {
                for b in 0..3 {
                    g.add_edge(3 * i + a, 3 * j + b).unwrap();
                }
            }
        }
        let p = VertexPartition::consecutive(&[3; 5]).unwrap();
        let rg = reduced_graph(&g, &p, r(1, 3), r(1, 2)).unwrap();
        for i in 0..5 {
            let (a, b) = (i.min((i + 1) % 5), i.max((i + 1) % 5));
            assert!(rg.graph.has_edge(a, b));
        }
    }

    #[test]
    fn slicing_and_degree_facts() {
        let (g, p) = complete_multipartite(&MultipartiteSpec::new(vec![4, 4]).unwrap());
        let (x, y) = (p.block(0), p.block(1));
        assert!(check_slicing(&g, x, y, x, y, r(1, 4), r(1, 2)).unwrap().holds());
        assert!(check_slicing(&g, x, y, &x[..2], &y[..2], r(1, 4), r(1, 2)).unwrap().holds());
        let (m, mx, my) = matching(8);
        assert!(matches!(check_slicing(&m, &mx, &my, &mx[..4], &my[..4], r(1, 4), r(1, 2)).unwrap(), FactCheck::NotApplicable { .. }));
        assert!(check_slicing(&g, x, y, &x[..1], y, r(1, 4), r(1, 2)).is_err());
        assert!(check_degree_fact(&g, x, y, y, r(1, 4), r(1, 2)).unwrap().holds());
        assert!(check_degree_fact(&g, x, y, &y[..2], r(1, 4), r(1, 2)).unwrap().holds());
        assert!(matches!(check_degree_fact(&m, &mx, &my, &my, r(1, 4), r(1, 2)).unwrap(), FactCheck::NotApplicable { .. }));
    }

    #[test]
    fn counting() {
        let spec = MultipartiteSpec::new(vec![1, 1, 1]).unwrap();
        let (g, p) = complete_multipartite(&MultipartiteSpec::new(vec![3, 3, 3]).unwrap());
        let parts: Vec<VertexSet> = (0..3).map(|i| p.block_set(i, 9)).collect();
        let f = IncompatibilitySystem::empty(&g);
        let c = counting_experiment(&g, &f, &parts, &spec, Budget::UNLIMITED).unwrap();
        assert_eq!((c.total, c.compatible, c.product), (27, 27, 27));
        assert_eq!(c.c_observed, 1.0);
        let f = IncompatibilitySystem::from_triples(&g, &[(0, 3, 6)]).unwrap();
        let c = counting_experiment(&g, &f, &parts, &spec, Budget::UNLIMITED).unwrap();
        assert_eq!((c.total, c.compatible), (27, 26));
        let rows = counting_sweep(&g, &parts, &spec, &[Rational::zero(), r(1, 9)], 7, Budget::UNLIMITED).unwrap();
        assert_eq!(rows[0].report.compatible, 27);
        assert!(rows[1].achieved_bound <= 1);
        assert!(sweep_csv(&rows).starts_with("mu,achieved_bound"));
    }

    #[test]
    fn partition_shape() {
        let (g, p) = complete_multipartite(&MultipartiteSpec::new(vec![2, 2, 2]).unwrap());
        let clusters: Vec<Vec<usize>> = p.blocks().to_vec();
        let s = validate_regular_partition(&g, &[], &clusters, r(1, 3), r(1, 2)).unwrap();
        assert!(s.holds());
        let s = validate_regular_partition(&g, &[], &clusters, r(1, 6), r(1, 2)).unwrap();
        assert!(!s.size_cap_ok);
        assert!(validate_regular_partition(&g, &[0], &clusters, r(1, 3), r(1, 2)).is_err());
    }
}
