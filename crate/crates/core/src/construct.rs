//! Extremal instances without a compatible factor: a complete `r`-partite
//! base graph, a sparse bipartite graph added inside every part, and the
//! incompatibility system that forbids using those internal edges in a
//! triangle.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::absorb::index_vector;
use crate::chromatic::{self, ChromaticProfile};
use crate::error::{precondition, Result};
use crate::graph::{as_complete_multipartite, complete_multipartite, Graph, MultipartiteSpec, VertexPartition};
use crate::incompat::IncompatibilitySystem;
use crate::rational::Rational;
use crate::solver::{enumerate_compatible_copies, Budget, Embedding};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Base {
    Komlos,
    #[serde(rename = "ko")]
    KuhnOsthus,
}

impl FromStr for Base {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "komlos" => Ok(Base::Komlos),
            "ko" | "kuhn-osthus" => Ok(Base::KuhnOsthus),
            _ => Err(format!("unknown base {s:?} (expected komlos or ko)")),
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::Komlos => "komlos",
            Base::KuhnOsthus => "ko",
        })
    }
}

/// Allowed part-size range `lower <= |V_i| <= upper` for the Komlós base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartWindow {
    pub lower: Rational,
    pub upper: usize,
    /// Indices of parts outside the window.
    pub outside: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseReport {
    pub base: Base,
    pub n: usize,
    pub part_sizes: Vec<usize>,
    pub min_degree: usize,
    /// `(1 - 1/χ_cr) n - 1` for Komlós, `⌈(1 - 1/χ) n⌉ - 1` for Kühn–Osthus.
    pub min_degree_target: Rational,
    pub min_degree_ok: bool,
    pub window: Option<PartWindow>,
}

#[derive(Clone, Debug)]
pub struct BaseGraph {
    pub graph: Graph,
    pub parts: VertexPartition,
    pub report: BaseReport,
}

fn order_multiple(h: &Graph, n: usize) -> Result<usize> {
    if n == 0 || !n.is_multiple_of(h.n()) {
        return Err(precondition(format!("n = {n} is not a positive multiple of |H| = {}", h.n())));
    }
    Ok(n / h.n())
}

/// `total` split into `k` near-equal parts, larger first.
fn balanced(total: usize, k: usize) -> Vec<usize> {
    (0..k).map(|i| total / k + usize::from(i < total % k)).collect()
}

fn build_base(base: Base, sizes: Vec<usize>, target: Rational, window: Option<PartWindow>) -> Result<BaseGraph> {
    let spec = MultipartiteSpec::new(sizes.clone())?;
    let (graph, parts) = complete_multipartite(&spec);
    let min_degree = graph.min_degree();
    let report = BaseReport {
        base,
        n: graph.n(),
        part_sizes: sizes,
        min_degree,
        min_degree_target: target,
        min_degree_ok: Rational::int(min_degree as i64) >= target,
        window,
    };
    Ok(BaseGraph { graph, parts, report })
}

/// Complete `χ(H)`-partite graph with one part of size `σ n/|H| - 1` (so no
/// `H`-factor: every copy puts at least σ vertices in each part) and the
/// rest split evenly. Parts are listed by decreasing size.
pub fn komlos_base(h: &Graph, n: usize) -> Result<BaseGraph> {
    let k = order_multiple(h, n)?;
    let p = chromatic::chi_star(h)?;
    let r = p.chi;
    let small = (p.sigma * k)
        .checked_sub(1)
        .filter(|&s| s >= 1)
        .ok_or_else(|| precondition(format!("σ·n/|H| - 1 = {} leaves an empty part", p.sigma * k - 1)))?;
    let rest = n - small;
    if rest < r - 1 {
        return Err(precondition(format!("{rest} vertices cannot fill {} parts", r - 1)));
    }
    let mut sizes = balanced(rest, r - 1);
    sizes.push(small);
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let n_r = Rational::int(n as i64);
    let over_chi_cr = Rational(n_r.0 / p.chi_cr.0);
    let target = Rational(n_r.0 - over_chi_cr.0 - 1);
    let lower = Rational((p.chi_cr.0 + 1 - r as i64) / r as i64 * n as i64);
    let upper = over_chi_cr.ceil() as usize + 1;
    let outside = sizes
        .iter()
        .enumerate()
        .filter(|&(_, &s)| Rational::int(s as i64) < lower || s > upper)
        .map(|(i, _)| i)
        .collect();
    build_base(Base::Komlos, sizes, target, Some(PartWindow { lower, upper, outside }))
}

/// Complete `χ(H)`-partite graph with `|V_1| = ⌊n/r⌋ + 1`,
/// `|V_2| = ⌈n/r⌉ - 1` and the other parts balanced.
pub fn kuhn_osthus_base(h: &Graph, n: usize) -> Result<BaseGraph> {
    order_multiple(h, n)?;
    let p = chromatic::chi_star(h)?;
    let r = p.chi;
    if r < 3 {
        return Err(precondition(format!("χ(H) = {r}, need at least 3")));
    }
    if p.hcf_is_one {
        return Err(precondition("hcf(H) = 1, need hcf(H) ≠ 1"));
    }
    let v1 = n / r + 1;
    let v2 = n.div_ceil(r) - 1;
    if v2 == 0 {
        return Err(precondition(format!("n = {n} gives an empty second part")));
    }
    let mut sizes = vec![v1, v2];
    sizes.extend(balanced(n - v1 - v2, r - 2));
    let target = Rational::int(((r - 1) * n).div_ceil(r) as i64 - 1);
    build_base(Base::KuhnOsthus, sizes, target, None)
}

pub fn base_graph(base: Base, h: &Graph, n: usize) -> Result<BaseGraph> {
    match base {
        Base::Komlos => komlos_base(h, n),
        Base::KuhnOsthus => kuhn_osthus_base(h, n),
    }
}

/// Internal degree window `μn/2 + 1 <= deg <= μn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeWindow {
    pub min: Rational,
    pub max: Rational,
}

impl DegreeWindow {
    pub fn new(mu: Rational, n: usize) -> DegreeWindow {
        let mu_n = mu.times(n as i64);
        DegreeWindow { min: Rational(mu_n.0 / 2 + 1), max: mu_n }
    }

    pub fn min_int(&self) -> usize {
        self.min.ceil().max(0) as usize
    }

    pub fn max_int(&self) -> usize {
        self.max.floor().max(0) as usize
    }
}

/// Supplies the bipartite graph added inside one part.
pub trait Augmentation {
    fn name(&self) -> &'static str;

    /// Edges inside `part` (sorted vertex ids).
    fn edges(&self, part: &[usize], window: &DegreeWindow) -> Result<Vec<(usize, usize)>>;
}

/// Splits `part` into halves (the first one larger by at most one) and joins
/// the i-th vertex of the first half to `d` cyclically consecutive vertices
/// of the second.
pub fn circulant(part: &[usize], d: usize) -> Vec<(usize, usize)> {
    let (a, b) = part.split_at(part.len().div_ceil(2));
    if b.is_empty() {
        return Vec::new();
    }
    let d = d.min(b.len());
    let mut edges = Vec::with_capacity(a.len() * d);
    for (i, &x) in a.iter().enumerate() {
        for j in 0..d {
            let y = b[(i + j) % b.len()];
            edges.push((x.min(y), x.max(y)));
        }
    }
    edges
}

fn degree_range(part: &[usize], edges: &[(usize, usize)]) -> (usize, usize) {
    let mut deg = std::collections::HashMap::new();
    for &(u, v) in edges {
        *deg.entry(u).or_insert(0usize) += 1;
        *deg.entry(v).or_insert(0usize) += 1;
    }
    let ds: Vec<usize> = part.iter().map(|v| deg.get(v).copied().unwrap_or(0)).collect();
    (ds.iter().copied().min().unwrap_or(0), ds.iter().copied().max().unwrap_or(0))
}

/// Circulant with `d = ⌈μn/2⌉ + 1`; errors when the part or the window
/// cannot accommodate it.
#[derive(Clone, Copy, Debug, Default)]
pub struct Circulant;

impl Augmentation for Circulant {
    fn name(&self) -> &'static str {
        "circulant"
    }

    fn edges(&self, part: &[usize], window: &DegreeWindow) -> Result<Vec<(usize, usize)>> {
        let d = window.min_int();
        if d > window.max_int() {
            return Err(precondition(format!(
                "degree window [{}, {}] contains no integer",
                window.min, window.max
            )));
        }
        if part.len() < 2 * d {
            return Err(precondition(format!(
                "part of size {} is too small for internal degree {d} (needs {})",
                part.len(),
                2 * d
            )));
        }
        let edges = circulant(part, d);
        let (lo, hi) = degree_range(part, &edges);
        if Rational::int(lo as i64) < window.min || Rational::int(hi as i64) > window.max {
            return Err(precondition(format!(
                "circulant degrees [{lo}, {hi}] leave the window [{}, {}]",
                window.min, window.max
            )));
        }
        Ok(edges)
    }
}

/// Circulant with the largest `d <= ⌈μn/2⌉ + 1` that keeps every internal
/// degree at most `⌊μn⌋`. Never fails; the certificates record whether the
/// lower degree bound was met.
#[derive(Clone, Copy, Debug, Default)]
pub struct CappedCirculant;

impl Augmentation for CappedCirculant {
    fn name(&self) -> &'static str {
        "capped-circulant"
    }

    fn edges(&self, part: &[usize], window: &DegreeWindow) -> Result<Vec<(usize, usize)>> {
        for d in (1..=window.min_int()).rev() {
            let edges = circulant(part, d);
            if degree_range(part, &edges).1 <= window.max_int() {
                return Ok(edges);
            }
        }
        Ok(Vec::new())
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionSpec {
    pub pattern: Graph,
    pub n: usize,
    pub mu: Rational,
    pub base: Base,
    /// Echoed into reports; the construction itself is deterministic.
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartCertificate {
    pub size: usize,
    pub bipartite: bool,
    pub min_internal_degree: usize,
    pub max_internal_degree: usize,
    pub min_ok: bool,
    pub max_ok: bool,
}

/// The four inequalities an extremal instance must satisfy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificates {
    pub min_degree: usize,
    /// `(1 - 1/χ* + μ/2) n`.
    pub min_degree_target: Rational,
    pub min_degree_ok: bool,
    pub window: DegreeWindow,
    pub parts: Vec<PartCertificate>,
    pub internal_min_ok: bool,
    pub internal_max_ok: bool,
    pub delta: usize,
    pub delta_ok: bool,
}

impl Certificates {
    pub fn all_ok(&self) -> bool {
        self.min_degree_ok
            && self.internal_min_ok
            && self.internal_max_ok
            && self.delta_ok
            && self.parts.iter().all(|p| p.bipartite)
    }
}

#[derive(Clone, Debug)]
pub struct ExtremalInstance {
    pub graph: Graph,
    pub parts: VertexPartition,
    pub system: IncompatibilitySystem,
    pub base: BaseGraph,
    pub profile: ChromaticProfile,
    pub mu: Rational,
    pub seed: u64,
    pub strategy: &'static str,
    pub certificates: Certificates,
}

/// Serializable summary of an instance.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport<'a> {
    pub n: usize,
    pub mu: Rational,
    pub seed: u64,
    pub strategy: &'a str,
    pub base: &'a BaseReport,
    pub profile: &'a ChromaticProfile,
    pub edges: usize,
    pub incompatible_pairs: usize,
    pub certificates: &'a Certificates,
    pub all_certificates_ok: bool,
}

impl ExtremalInstance {
    pub fn report(&self) -> InstanceReport<'_> {
        InstanceReport {
            n: self.graph.n(),
            mu: self.mu,
            seed: self.seed,
            strategy: self.strategy,
            base: &self.base.report,
            profile: &self.profile,
            edges: self.graph.edge_count(),
            incompatible_pairs: self.system.pair_count(),
            certificates: &self.certificates,
            all_certificates_ok: self.certificates.all_ok(),
        }
    }

    /// The graph with every edge inside a part removed.
    pub fn strip_augmentation(&self) -> Graph {
        let mut g = self.graph.clone();
        for (u, v) in self.graph.edges() {
            if self.parts.block_of(u) == self.parts.block_of(v) {
                g.remove_edge(u, v);
            }
        }
        g
    }
}

fn is_bipartite(g: &Graph, vs: &[usize]) -> bool {
    let mut side = vec![None; g.n()];
    for &s in vs {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let su = side[u].unwrap();
            for w in vs.iter().copied().filter(|&w| g.has_edge(u, w)) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        stack.push(w);
                    }
                    Some(sw) if sw == su => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Builds the instance with the strict [`Circulant`] augmentation.
pub fn augment_and_incompat(spec: &ConstructionSpec) -> Result<ExtremalInstance> {
    augment_with(spec, &Circulant)
}

pub fn augment_with(spec: &ConstructionSpec, strategy: &dyn Augmentation) -> Result<ExtremalInstance> {
    let profile = chromatic::chi_star(&spec.pattern)?;
    let r = profile.chi as i64;
    let mu_upper = Rational((profile.chi_cr.0 + 1 - r) / r);
    if spec.mu <= Rational::zero() || spec.mu >= mu_upper {
        return Err(precondition(format!("μ = {} must lie strictly between 0 and {mu_upper}", spec.mu)));
    }
    let base = base_graph(spec.base, &spec.pattern, spec.n)?;
    let window = DegreeWindow::new(spec.mu, spec.n);
    let mut graph = base.graph.clone();
    let mut internal = Vec::new();
    for part in base.parts.blocks() {
        let edges = strategy.edges(part, &window)?;
        for &(u, v) in &edges {
            if base.parts.block_of(u) != base.parts.block_of(v) || !part.contains(&u) {
                return Err(precondition(format!("augmentation edge {u} {v} leaves its part")));
            }
            graph.add_edge(u, v)?;
        }
        internal.push(edges);
    }
    let mut system = IncompatibilitySystem::empty(&graph);
    for (j, edges) in internal.iter().enumerate() {
        for &(u, w) in edges {
            for v in 0..graph.n() {
                if base.parts.block_of(v) != Some(j) {
                    system.add(v, u, w)?;
                }
            }
        }
    }
    let certificates = certify(&graph, &base.parts, &system, &profile, spec.mu, &window);
    Ok(ExtremalInstance {
        graph,
        parts: base.parts.clone(),
        system,
        base,
        profile,
        mu: spec.mu,
        seed: spec.seed,
        strategy: strategy.name(),
        certificates,
    })
}

fn certify(
    g: &Graph,
    parts: &VertexPartition,
    f: &IncompatibilitySystem,
    profile: &ChromaticProfile,
    mu: Rational,
    window: &DegreeWindow,
) -> Certificates {
    let n = g.n() as i64;
    let min_degree = g.min_degree();
    let target = Rational((Ratio::from_integer(1) - profile.chi_star.0.recip() + mu.0 / 2) * n);
    let parts_cert: Vec<PartCertificate> = parts
        .blocks()
        .iter()
        .map(|b| {
            let inner: Vec<usize> = b
                .iter()
                .map(|&v| b.iter().filter(|&&w| g.has_edge(v, w)).count())
                .collect();
            let lo = inner.iter().copied().min().unwrap_or(0);
            let hi = inner.iter().copied().max().unwrap_or(0);
            PartCertificate {
                size: b.len(),
                bipartite: is_bipartite(g, b),
                min_internal_degree: lo,
                max_internal_degree: hi,
                min_ok: Rational::int(lo as i64) >= window.min,
                max_ok: Rational::int(hi as i64) <= window.max,
            }
        })
        .collect();
    let delta = f.bound_report().delta;
    Certificates {
        min_degree,
        min_degree_target: target,
        min_degree_ok: Rational::int(min_degree as i64) >= target,
        window: *window,
        internal_min_ok: parts_cert.iter().all(|p| p.min_ok),
        internal_max_ok: parts_cert.iter().all(|p| p.max_ok),
        parts: parts_cert,
        delta,
        delta_ok: Rational::int(delta as i64) <= window.max,
    }
}

/// Outcome of checking that every compatible copy of a complete
/// multipartite pattern meets each part in one of its part sizes.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum IndexClaim {
    Holds { copies: usize, nodes: u64 },
    Violated { witness: Embedding, index: Vec<usize> },
    Indeterminate { nodes: u64 },
}

impl IndexClaim {
    pub fn holds(&self) -> bool {
        matches!(self, IndexClaim::Holds { .. })
    }
}

pub fn verify_index_vector_claim(inst: &ExtremalInstance, h: &Graph, budget: Budget) -> Result<IndexClaim> {
    index_vector_claim(&inst.graph, &inst.parts, &inst.system, h, budget)
}

/// Enumerates all compatible copies of `h` (complete `r`-partite, `r >= 3`)
/// and checks that each index vector is a permutation of the part sizes.
pub fn index_vector_claim(
    g: &Graph,
    parts: &VertexPartition,
    f: &IncompatibilitySystem,
    h: &Graph,
    budget: Budget,
) -> Result<IndexClaim> {
    let (spec, _) = as_complete_multipartite(h).ok_or_else(|| precondition("pattern is not complete multipartite"))?;
    if spec.r() < 3 {
        return Err(precondition(format!("pattern has {} parts, the claim needs at least 3", spec.r())));
    }
    if parts.len() != spec.r() {
        return Err(precondition(format!("partition has {} blocks, pattern has {} parts", parts.len(), spec.r())));
    }
    let en = enumerate_compatible_copies(h, g, f, budget)?;
    if en.truncated {
        return Ok(IndexClaim::Indeterminate { nodes: en.nodes });
    }
    let mut want = spec.parts().to_vec();
    want.sort_unstable();
    for c in &en.copies {
        let index = index_vector(&c.vertices, parts)?;
        let mut sorted: Vec<usize> = index.iter().map(|&x| x as usize).collect();
        sorted.sort_unstable();
        if sorted != want {
            let index = index.iter().map(|&x| x as usize).collect();
            return Ok(IndexClaim::Violated { witness: c.clone(), index });
        }
    }
    Ok(IndexClaim::Holds { copies: en.copies.len(), nodes: en.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::find_compatible_factor;

    fn k3() -> Graph {
        Graph::complete(3)
    }

    fn k112() -> Graph {
        complete_multipartite(&MultipartiteSpec::new(vec![1, 1, 2]).unwrap()).0
    }

    fn no_factor(h: &Graph, g: &Graph) -> bool {
        let f = IncompatibilitySystem::empty(g);
        find_compatible_factor(h, g, &f, Budget::UNLIMITED).unwrap().is_none()
    }

    #[test]
    fn komlos_examples() {
        let b = komlos_base(&k3(), 6).unwrap();
        assert_eq!(b.report.part_sizes, vec![3, 2, 1]);
        assert!(b.report.min_degree_ok);
        assert!(no_factor(&k3(), &b.graph));

        let k2 = Graph::complete(2);
        let b = komlos_base(&k2, 4).unwrap();
        assert_eq!(b.report.part_sizes, vec![3, 1]);
        assert_eq!(b.report.min_degree, 1);
        assert_eq!(b.report.min_degree_target, Rational::int(1));
        assert!(no_factor(&k2, &b.graph));

        let b = komlos_base(&k112(), 8).unwrap();
        assert_eq!(b.report.part_sizes, vec![4, 3, 1]);
        assert_eq!(b.report.window.as_ref().unwrap().upper, 4);
        assert!(no_factor(&k112(), &b.graph));
    }

    #[test]
    fn komlos_rejects_degenerate_sizes() {
        assert!(komlos_base(&k3(), 3).is_err());
        assert!(komlos_base(&k3(), 7).is_err());
    }

    #[test]
    fn kuhn_osthus_examples() {
        let b = kuhn_osthus_base(&k3(), 6).unwrap();
        assert_eq!(b.report.part_sizes, vec![3, 1, 2]);
        assert!(no_factor(&k3(), &b.graph));
        let b = kuhn_osthus_base(&k3(), 9).unwrap();
        assert_eq!(b.report.part_sizes, vec![4, 2, 3]);
        assert_eq!(b.report.min_degree, 5);
        assert!(b.report.min_degree_ok);
        let b = kuhn_osthus_base(&Graph::complete(4), 8).unwrap();
        assert_eq!(b.report.part_sizes, vec![3, 1, 2, 2]);
        assert!(kuhn_osthus_base(&Graph::complete(2), 4).is_err());
        assert!(kuhn_osthus_base(&k112(), 8).is_err());
    }

    #[test]
    fn circulant_degrees() {
        let part: Vec<usize> = (0..8).collect();
        let e = circulant(&part, 2);
        assert_eq!(degree_range(&part, &e), (2, 2));
        let part: Vec<usize> = (0..7).collect();
        let e = circulant(&part, 2);
        let (lo, hi) = degree_range(&part, &e);
        assert!(lo >= 2 && hi <= 3);
    }

    #[test]
    fn strict_strategy_reports_infeasible_parts() {
        let spec = ConstructionSpec { pattern: k3(), n: 12, mu: Rational::new(1, 6), base: Base::KuhnOsthus, seed: 0 };
        assert!(augment_and_incompat(&spec).is_err());
        let zero = ConstructionSpec { mu: Rational::zero(), ..spec.clone() };
        assert!(augment_with(&zero, &CappedCirculant).is_err());
        let big = ConstructionSpec { mu: Rational::new(1, 3), ..spec };
        assert!(augment_with(&big, &CappedCirculant).is_err());
    }

    #[test]
    fn capped_instance_properties() {
        let spec = ConstructionSpec { pattern: k3(), n: 12, mu: Rational::new(1, 6), base: Base::KuhnOsthus, seed: 0 };
        let inst = augment_with(&spec, &CappedCirculant).unwrap();
        let c = &inst.certificates;
        assert!(c.parts.iter().all(|p| p.bipartite));
        assert!(c.internal_max_ok);
        assert!(c.delta_ok && c.delta <= 2);
        assert_eq!(inst.strip_augmentation(), inst.base.graph);
        assert!(verify_index_vector_claim(&inst, &k3(), Budget::UNLIMITED).unwrap().holds());
        let r = find_compatible_factor(&k3(), &inst.graph, &inst.system, Budget::UNLIMITED).unwrap();
        assert!(r.is_none());
    }

    #[test]
    fn index_claim_fails_without_incompatibilities() {
        let spec = ConstructionSpec { pattern: k3(), n: 12, mu: Rational::new(1, 6), base: Base::KuhnOsthus, seed: 0 };
        let inst = augment_with(&spec, &CappedCirculant).unwrap();
        let empty = IncompatibilitySystem::empty(&inst.graph);
        let claim = index_vector_claim(&inst.graph, &inst.parts, &empty, &k3(), Budget::UNLIMITED).unwrap();
        match claim {
            IndexClaim::Violated { index, .. } => assert!(index.iter().any(|&x| x >= 2)),
            other => panic!("expected a violation, got {other:?}"),
        }
    }

    #[test]
    fn strict_circulant_meets_every_certificate() {
        // μn = 4 leaves room for the extra degree on odd parts.
        let spec = ConstructionSpec { pattern: k3(), n: 30, mu: Rational::new(2, 15), base: Base::KuhnOsthus, seed: 0 };
        let inst = augment_and_incompat(&spec).unwrap();
        assert!(inst.certificates.all_ok(), "{:?}", inst.certificates);
        assert_eq!(inst.certificates.min_degree, 22);
        let tight = ConstructionSpec { n: 24, mu: Rational::new(1, 12), ..spec };
        assert!(augment_and_incompat(&tight).is_err());
    }

    #[test]
    fn claim_preconditions() {
        let spec = ConstructionSpec { pattern: k3(), n: 12, mu: Rational::new(1, 6), base: Base::KuhnOsthus, seed: 0 };
        let inst = augment_with(&spec, &CappedCirculant).unwrap();
        assert!(verify_index_vector_claim(&inst, &Graph::complete(2), Budget::UNLIMITED).is_err());
        assert!(verify_index_vector_claim(&inst, &Graph::path(3), Budget::UNLIMITED).is_err());
    }
}
