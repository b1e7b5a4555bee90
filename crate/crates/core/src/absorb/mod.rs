//! Absorbers, connectors, reachability and the index-vector lattice.
//!
//! Every constructed [`Absorber`] or [`Connector`] has been re-verified with
//! the exact factor solver; the certificates are the witness tilings. Claims
//! that quantify over forbidden sets `W` are exact only when all such sets
//! were enumerated; otherwise they carry a sampled label.

mod lattice;
mod merge;
mod robust;

use rand::seq::index::sample;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{precondition, Error, Result};
use crate::graph::Graph;
use crate::incompat::IncompatibilitySystem;
use crate::solver::{find_factor_within, Budget, FactorOutcome, Meter, Tiling};

pub use lattice::{
    find_transferral, index_vector, lattice_membership, parse_vector, parse_vectors, split_pos_neg,
    split_transferral, transferral_vector, GeneratedLattice, IndexVector, Membership, Split, Transferral,
};
pub use merge::{merge_via_transferral, ConnectorSource, MergedConnector, Piece, TransferralPlan};
pub use robust::{robust_vectors, RobustStatus, RobustVector, RobustVectors};

/// Pattern, host, incompatibility system and a per-search node budget.
#[derive(Clone, Copy, Debug)]
pub struct Problem<'a> {
    pub h: &'a Graph,
    pub g: &'a Graph,
    pub f: &'a IncompatibilitySystem,
    pub budget: Budget,
}

impl<'a> Problem<'a> {
    pub fn new(h: &'a Graph, g: &'a Graph, f: &'a IncompatibilitySystem) -> Problem<'a> {
        Problem { h, g, f, budget: Budget::DEFAULT }
    }

    pub fn with_budget(self, budget: Budget) -> Problem<'a> {
        Problem { budget, ..self }
    }

    pub fn order(&self) -> usize {
        self.h.n()
    }

    fn set(&self, vs: &[usize]) -> Result<VertexSet> {
        self.g.set_of(vs)
    }

    fn factor(&self, target: &VertexSet) -> Result<FactorOutcome> {
        find_factor_within(self.h, self.g, self.f, target, self.budget)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum Verdict {
    Valid,
    Invalid(String),
    Indeterminate,
}

/// Outcome of a definition check together with the witness factors found.
#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub label: String,
    pub tiling: Tiling,
}

impl Verification {
    fn invalid(reason: impl Into<String>) -> Verification {
        Verification { verdict: Verdict::Invalid(reason.into()), witnesses: Vec::new() }
    }

    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }

    /// Checks that each `(label, set)` induces a graph with a compatible
    /// factor, stopping at the first failure.
    fn factors(p: &Problem, targets: Vec<(String, VertexSet)>) -> Result<Verification> {
        let mut witnesses = Vec::new();
        for (label, set) in targets {
            match p.factor(&set)? {
                FactorOutcome::Found { tiling, .. } => witnesses.push(Witness { label, tiling }),
                FactorOutcome::None { .. } => {
                    return Ok(Verification { verdict: Verdict::Invalid(format!("G[{label}] has no compatible factor")), witnesses });
                }
                FactorOutcome::Indeterminate { .. } => {
                    return Ok(Verification { verdict: Verdict::Indeterminate, witnesses });
                }
            }
        }
        Ok(Verification { verdict: Verdict::Valid, witnesses })
    }
}

fn sorted_distinct(vs: &[usize], what: &str) -> Result<Vec<usize>> {
    let mut out = vs.to_vec();
    out.sort_unstable();
    if out.windows(2).any(|w| w[0] == w[1]) {
        return Err(precondition(format!("{what} lists a vertex twice")));
    }
    Ok(out)
}

/// Checks `A` against the absorber definition for the `h`-set `S`.
pub fn verify_absorber(s: &[usize], a: &[usize], t: usize, p: &Problem) -> Result<Verification> {
    let sset = p.set(s)?;
    let aset = p.set(a)?;
    if !sset.is_disjoint(&aset) {
        return Err(precondition("absorber meets the absorbed set"));
    }
    let h = p.order();
    if sset.len() != h {
        return Ok(Verification::invalid(format!("|S| = {} but |H| = {h}", sset.len())));
    }
    if aset.len() > h * h * t {
        return Ok(Verification::invalid(format!("|A| = {} exceeds h²t = {}", aset.len(), h * h * t)));
    }
    Verification::factors(p, vec![("A".into(), aset.clone()), ("A ∪ S".into(), aset.union(&sset))])
}

/// Checks `S` against the connector definition for `u, v`.
pub fn verify_connector(s: &[usize], u: usize, v: usize, t: usize, p: &Problem) -> Result<Verification> {
    let set = p.set(s)?;
    p.g.check_vertex(u)?;
    p.g.check_vertex(v)?;
    if set.contains(u) || set.contains(v) {
        return Err(precondition("connector contains one of its endpoints"));
    }
    let h = p.order();
    if set.len() + 1 > h * t {
        return Ok(Verification::invalid(format!("|S| = {} exceeds ht - 1 = {}", set.len(), h * t - 1)));
    }
    if (set.len() + 1) % h != 0 {
        return Ok(Verification::invalid(format!("|S| + 1 = {} is not a multiple of {h}", set.len() + 1)));
    }
    let mut su = set.clone();
    su.insert(u);
    let mut sv = set;
    sv.insert(v);
    Verification::factors(p, vec![("S ∪ {u}".into(), su), ("S ∪ {v}".into(), sv)])
}

/// Verified `H`-connector for `u, v`.
#[derive(Clone, Debug, Serialize)]
pub struct Connector {
    pub u: usize,
    pub v: usize,
    pub set: Vec<usize>,
    pub t: usize,
    pub witnesses: Vec<Witness>,
}

impl Connector {
    /// Verifies the definition; invalid input is a precondition error and an
    /// exhausted budget is reported as such.
    pub fn new(u: usize, v: usize, set: &[usize], t: usize, p: &Problem) -> Result<Connector> {
        let set = sorted_distinct(set, "connector")?;
        let check = verify_connector(&set, u, v, t, p)?;
        match check.verdict {
            Verdict::Valid => Ok(Connector { u, v, set, t, witnesses: check.witnesses }),
            Verdict::Invalid(r) => Err(precondition(format!("not a connector for {u}, {v}: {r}"))),
            Verdict::Indeterminate => Err(Error::BudgetExhausted(p.budget.0)),
        }
    }

    pub fn recheck(&self, p: &Problem) -> Result<Verification> {
        verify_connector(&self.set, self.u, self.v, self.t, p)
    }
}

/// Verified `(H, t)`-absorber for `S`.
#[derive(Clone, Debug, Serialize)]
pub struct Absorber {
    pub target: Vec<usize>,
    pub set: Vec<usize>,
    pub t: usize,
    pub witnesses: Vec<Witness>,
}

impl Absorber {
    pub fn new(target: &[usize], set: &[usize], t: usize, p: &Problem) -> Result<Absorber> {
        let target = sorted_distinct(target, "absorbed set")?;
        let set = sorted_distinct(set, "absorber")?;
        let check = verify_absorber(&target, &set, t, p)?;
        match check.verdict {
            Verdict::Valid => Ok(Absorber { target, set, t, witnesses: check.witnesses }),
            Verdict::Invalid(r) => Err(precondition(format!("not an absorber: {r}"))),
            Verdict::Indeterminate => Err(Error::BudgetExhausted(p.budget.0)),
        }
    }

    pub fn recheck(&self, p: &Problem) -> Result<Verification> {
        verify_absorber(&self.target, &self.set, self.t, p)
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ConnectorSearch {
    Found { connector: Connector, nodes: u64 },
    None { nodes: u64 },
    Indeterminate { nodes: u64 },
}

impl ConnectorSearch {
    pub fn connector(self) -> Option<Connector> {
        match self {
            ConnectorSearch::Found { connector, .. } => Some(connector),
            _ => None,
        }
    }
}

/// Calls `visit` on every `k`-subset of `pool` in lexicographic order until
/// it returns `Some`.
fn first_subset<T>(pool: &[usize], k: usize, visit: &mut dyn FnMut(&[usize]) -> Option<T>) -> Option<T> {
    fn go<T>(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> Option<T>) -> Option<T> {
        if cur.len() == k {
            return visit(cur);
        }
        let need = k - cur.len();
        for i in start..=pool.len().saturating_sub(need) {
            if pool.len() < need {
                break;
            }
            cur.push(pool[i]);
            let r = go(pool, k, i + 1, cur, visit);
            cur.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
    go(pool, k, 0, &mut Vec::with_capacity(k), visit)
}

/// Smallest connector for `u, v` avoiding `w`: sizes `h-1, 2h-1, ...` up to
/// `ht-1`, subsets in lexicographic order within a size.
pub fn find_connector(u: usize, v: usize, w: &[usize], t: usize, p: &Problem) -> Result<ConnectorSearch> {
    p.g.check_vertex(u)?;
    p.g.check_vertex(v)?;
    let h = p.order();
    let mut excluded = p.set(w)?;
    excluded.insert(u);
    excluded.insert(v);
    let pool: Vec<usize> = p.g.vertex_set().difference(&excluded).to_vec();
    let mut meter = Meter::new(p.budget);
    let mut size = h - 1;
    while size < h * t && size <= pool.len() {
        let mut outcome = None;
        let found = first_subset(&pool, size, &mut |s| {
            if !meter.tick() {
                outcome = Some(false);
                return Some(None);
            }
            let inner = Problem { budget: meter.remaining(), ..*p };
            let set = VertexSet::from_slice(p.g.n(), s);
            for end in [u, v] {
                let mut target = set.clone();
                target.insert(end);
                match inner.factor(&target) {
                    Ok(r) => {
                        meter.absorb(r.nodes(), r.is_indeterminate());
                        match r {
                            FactorOutcome::Found { .. } => {}
                            FactorOutcome::None { .. } => return None,
                            FactorOutcome::Indeterminate { .. } => {
                                outcome = Some(false);
                                return Some(None);
                            }
                        }
                    }
                    Err(e) => return Some(Some(Err(e))),
                }
            }
            Some(Some(Ok(s.to_vec())))
        });
        if outcome == Some(false) {
            return Ok(ConnectorSearch::Indeterminate { nodes: meter.used() });
        }
        if let Some(Some(r)) = found {
            let set = r?;
            let connector = Connector::new(u, v, &set, t, p)?;
            return Ok(ConnectorSearch::Found { connector, nodes: meter.used() });
        }
        size += h;
    }
    Ok(ConnectorSearch::None { nodes: meter.used() })
}

/// Verdict ladder for statements quantified over forbidden sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Quantified {
    /// Every set was checked.
    Proven { checked: u64 },
    /// Every sampled set passed; not a proof.
    Supported { passed: u64, samples: u64 },
    Refuted { witness: Vec<usize> },
    /// A check ran out of budget.
    Indeterminate { witness: Vec<usize> },
}

/// `C(n, k)` saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

fn all_subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _: Option<()> = first_subset(pool, k, &mut |s| {
        out.push(s.to_vec());
        None
    });
    out
}

/// How forbidden sets are drawn.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SetSampling {
    /// Enumerate every set when there are at most this many.
    pub exhaustive_limit: u64,
    pub samples: u64,
    pub seed: u64,
}

impl Default for SetSampling {
    fn default() -> Self {
        SetSampling { exhaustive_limit: 20_000, samples: 200, seed: 0 }
    }
}

/// Tests `(H, m, t)`-reachability of `u, v`. Connectors already found are
/// reused for every `W` they avoid.
pub fn reachability_estimate(u: usize, v: usize, m: usize, t: usize, sampling: SetSampling, p: &Problem) -> Result<Quantified> {
    let pool: Vec<usize> = (0..p.g.n()).filter(|&x| x != u && x != v).collect();
    let total = binomial(pool.len(), m);
    let exhaustive = total <= sampling.exhaustive_limit;
    let sets: Vec<Vec<usize>> = if exhaustive {
        all_subsets(&pool, m)
    } else {
        (0..sampling.samples)
            .map(|i| {
                let mut rng = crate::rng::stream(sampling.seed, i);
                let mut w: Vec<usize> = sample(&mut rng, pool.len(), m).into_iter().map(|j| pool[j]).collect();
                w.sort_unstable();
                w
            })
            .collect()
    };
    let mut found: Vec<VertexSet> = Vec::new();
    for w in &sets {
        let wset = p.set(w)?;
        if found.iter().any(|s| s.is_disjoint(&wset)) {
            continue;
        }
        match find_connector(u, v, w, t, p)? {
            ConnectorSearch::Found { connector, .. } => found.push(p.set(&connector.set)?),
            ConnectorSearch::None { .. } => return Ok(Quantified::Refuted { witness: w.clone() }),
            ConnectorSearch::Indeterminate { .. } => return Ok(Quantified::Indeterminate { witness: w.clone() }),
        }
    }
    let n = sets.len() as u64;
    Ok(if exhaustive { Quantified::Proven { checked: n } } else { Quantified::Supported { passed: n, samples: n } })
}

/// Checks the absorbing-set property of `A`: every `R ⊆ V \ A` with
/// `|R| <= ⌊ξn⌋` and `|A ∪ R| ∈ hℕ` leaves `G[A ∪ R]` with a compatible
/// factor.
pub fn verify_absorbing_set(a: &[usize], xi: crate::rational::Rational, sampling: SetSampling, p: &Problem) -> Result<Quantified> {
    let aset = p.set(a)?;
    let n = p.g.n();
    let h = p.order();
    let cap = xi.times(n as i64).floor().max(0) as usize;
    let pool: Vec<usize> = p.g.vertex_set().difference(&aset).to_vec();
    let sizes: Vec<usize> = (0..=cap.min(pool.len())).filter(|s| (aset.len() + s) % h == 0).collect();
    let total = sizes.iter().fold(0u64, |acc, &s| acc.saturating_add(binomial(pool.len(), s)));
    let exhaustive = total <= sampling.exhaustive_limit;
    let sets: Vec<Vec<usize>> = if exhaustive {
        sizes.iter().flat_map(|&s| all_subsets(&pool, s)).collect()
    } else {
        (0..sampling.samples)
            .map(|i| {
                let mut rng = crate::rng::stream(sampling.seed, i);
                let s = sizes[rand::Rng::gen_range(&mut rng, 0..sizes.len())];
                let mut r: Vec<usize> = sample(&mut rng, pool.len(), s).into_iter().map(|j| pool[j]).collect();
                r.sort_unstable();
                r
            })
            .collect()
    };
    for r in &sets {
        let target = aset.union(&p.set(r)?);
        match p.factor(&target)? {
            FactorOutcome::Found { .. } => {}
            FactorOutcome::None { .. } => return Ok(Quantified::Refuted { witness: r.clone() }),
            FactorOutcome::Indeterminate { .. } => return Ok(Quantified::Indeterminate { witness: r.clone() }),
        }
    }
    let k = sets.len() as u64;
    Ok(if exhaustive { Quantified::Proven { checked: k } } else { Quantified::Supported { passed: k, samples: k } })
}

/// Joins connectors for `u, u1` and `u1, v` into one for `u, v` with
/// `S = S_1 ∪ S_2 ∪ {u1}` and `t = t_1 + t_2`.
pub fn concatenate_connectors(c1: &Connector, c2: &Connector, p: &Problem) -> Result<Connector> {
    let u1 = c1.v;
    if c2.u != u1 {
        return Err(precondition(format!("first connector ends at {u1}, second starts at {}", c2.u)));
    }
    let (u, v) = (c1.u, c2.v);
    let s1 = p.set(&c1.set)?;
    let s2 = p.set(&c2.set)?;
    if !s1.is_disjoint(&s2) || s1.contains(u1) || s2.contains(u1) {
        return Err(precondition("connectors must be disjoint apart from the shared endpoint"));
    }
    let mut s = s1.union(&s2);
    s.insert(u1);
    if u == v || s.contains(u) || s.contains(v) {
        return Err(precondition("endpoints must be distinct and outside both connectors"));
    }
    let t = c1.t + c2.t;
    let h = p.order();
    if s.len() + 1 > h * t {
        return Err(Error::Consistency(format!("|S| = {} exceeds h(t1 + t2) - 1 = {}", s.len(), h * t - 1)));
    }
    Connector::new(u, v, &s.to_vec(), t, p).map_err(|e| match e {
        Error::BudgetExhausted(b) => Error::BudgetExhausted(b),
        other => Error::Consistency(format!("concatenated connector failed verification: {other}")),
    })
}

/// Builds the absorber `⋃ S_i ∪ T` for `S = {s_1, ..., s_h}` from a copy on
/// `T = {t_1, ..., t_h}` and connectors `S_i` for `s_i, t_i`.
pub fn assemble_absorber(s: &[usize], copy: &[usize], connectors: &[Connector], p: &Problem) -> Result<Absorber> {
    let h = p.order();
    if s.len() != h || copy.len() != h || connectors.len() != h {
        return Err(precondition(format!(
            "need {h} targets, copy vertices and connectors; got {}, {}, {}",
            s.len(),
            copy.len(),
            connectors.len()
        )));
    }
    let mut used = p.set(s)?;
    if used.len() != h {
        return Err(precondition("absorbed set lists a vertex twice"));
    }
    let tset = p.set(copy)?;
    if !used.is_disjoint(&tset) || tset.len() != h {
        return Err(precondition("copy must be disjoint from the absorbed set"));
    }
    used.union_with(&tset);
    let mut t = 0;
    let mut a = tset.clone();
    for (i, c) in connectors.iter().enumerate() {
        if c.u != s[i] || c.v != copy[i] {
            return Err(precondition(format!("connector {i} joins {}, {} instead of {}, {}", c.u, c.v, s[i], copy[i])));
        }
        let set = p.set(&c.set)?;
        if !set.is_disjoint(&used) {
            return Err(precondition(format!("connector {i} overlaps earlier pieces")));
        }
        used.union_with(&set);
        a.union_with(&set);
        t = t.max(c.t);
    }
    match p.factor(&tset)? {
        FactorOutcome::Found { .. } => {}
        FactorOutcome::None { .. } => return Err(precondition("T does not span a compatible copy")),
        FactorOutcome::Indeterminate { .. } => return Err(Error::BudgetExhausted(p.budget.0)),
    }
    if a.len() > h * h * t {
        return Err(Error::Consistency(format!("|A| = {} exceeds h²t = {}", a.len(), h * h * t)));
    }
    Absorber::new(s, &a.to_vec(), t, p).map_err(|e| match e {
        Error::BudgetExhausted(b) => Error::BudgetExhausted(b),
        other => Error::Consistency(format!("assembled absorber failed verification: {other}")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn path_gadget() -> (Graph, Graph) {
        // 0 - 1 - 2 - 3: K_2-connector {1} for 0, 2.
        (Graph::complete(2), Graph::path(4))
    }

    #[test]
    fn connector_examples() {
        let (h, g) = path_gadget();
        let f = IncompatibilitySystem::empty(&g);
        let p = Problem::new(&h, &g, &f);
        assert!(verify_connector(&[1], 0, 2, 1, &p).unwrap().is_valid());
        assert!(!verify_connector(&[1, 3], 0, 2, 1, &p).unwrap().is_valid());
        assert!(!verify_connector(&[1, 3], 0, 2, 2, &p).unwrap().is_valid());
        assert!(verify_connector(&[0], 0, 2, 1, &p).is_err());
    }

    #[test]
    fn absorber_examples() {
        // S = {0, 1}, A = {2, 3}: G[A] is the edge 23, G[A ∪ S] has 02, 13.
        let g = Graph::from_edges(4, &[(2, 3), (0, 2), (1, 3)]).unwrap();
        let h = Graph::complete(2);
        let f = IncompatibilitySystem::empty(&g);
        let p = Problem::new(&h, &g, &f);
        let v = verify_absorber(&[0, 1], &[2, 3], 1, &p).unwrap();
        assert!(v.is_valid());
        assert_eq!(v.witnesses.len(), 2);
        assert!(!verify_absorber(&[0, 1], &[2, 3], 0, &p).unwrap().is_valid());
        let g2 = Graph::complete(2);
        let f2 = IncompatibilitySystem::empty(&g2);
        let p2 = Problem::new(&h, &g2, &f2);
        assert!(verify_absorber(&[0, 1], &[], 1, &p2).unwrap().is_valid());
    }

    #[test]
    fn find_connector_examples() {
        let h = Graph::complete(2);
        let g = Graph::complete(4);
        let f = IncompatibilitySystem::empty(&g);
        let p = Problem::new(&h, &g, &f);
        let c = find_connector(0, 1, &[], 1, &p).unwrap().connector().unwrap();
        assert_eq!(c.set, vec![2]);
        assert!(matches!(find_connector(0, 1, &[2, 3], 1, &p).unwrap(), ConnectorSearch::None { .. }));
        let p0 = p.with_budget(Budget(0));
        assert!(matches!(find_connector(0, 1, &[], 1, &p0).unwrap(), ConnectorSearch::Indeterminate { .. }));
    }

    #[test]
    fn reachability_examples() {
        let h = Graph::complete(2);
        let g = Graph::complete(6);
        let f = IncompatibilitySystem::empty(&g);
        let p = Problem::new(&h, &g, &f);
        let s = SetSampling::default();
        assert_eq!(reachability_estimate(0, 1, 0, 1, s, &p).unwrap(), Quantified::Proven { checked: 1 });
        assert_eq!(reachability_estimate(0, 1, 3, 1, s, &p).unwrap(), Quantified::Proven { checked: 4 });
        // Removing all four other vertices kills every connector.
        assert!(matches!(reachability_estimate(0, 1, 4, 1, s, &p).unwrap(), Quantified::Refuted { .. }));
        let sampled = SetSampling { exhaustive_limit: 0, samples: 5, seed: 3 };
        assert_eq!(reachability_estimate(0, 1, 2, 1, sampled, &p).unwrap(), Quantified::Supported { passed: 5, samples: 5 });
    }

    #[test]
    fn concatenation_and_assembly() {
        // Path 0 - 1 - 2 - 3 - 4: connectors {1} for 0, 2 and {3} for 2, 4.
        let h = Graph::complete(2);
        let g = Graph::path(5);
        let f = IncompatibilitySystem::empty(&g);
        let p = Problem::new(&h, &g, &f);
        let c1 = Connector::new(0, 2, &[1], 1, &p).unwrap();
        let c2 = Connector::new(2, 4, &[3], 1, &p).unwrap();
        let c = concatenate_connectors(&c1, &c2, &p).unwrap();
        assert_eq!((c.u, c.v, c.set.clone(), c.t), (0, 4, vec![1, 2, 3], 2));
        assert!(c.recheck(&p).unwrap().is_valid());
        assert!(concatenate_connectors(&c1, &c1, &p).is_err());
    }

    #[test]
    fn absorber_assembly_on_gadget() {
        // S = {0, 1}; T = {2, 3} an edge; connectors {4} for 0, 2 and {5} for 1, 3.
        let g = Graph::from_edges(6, &[(2, 3), (0, 4), (4, 2), (1, 5), (5, 3)]).unwrap();
        let h = Graph::complete(2);
        let f = IncompatibilitySystem::empty(&g);
        let p = Problem::new(&h, &g, &f);
        let cs = [Connector::new(0, 2, &[4], 1, &p).unwrap(), Connector::new(1, 3, &[5], 1, &p).unwrap()];
        let a = assemble_absorber(&[0, 1], &[2, 3], &cs, &p).unwrap();
        assert_eq!(a.set, vec![2, 3, 4, 5]);
        assert!(a.set.len() <= 4);
        assert!(assemble_absorber(&[0, 1], &[2, 3], &cs[..1], &p).is_err());
    }

    #[test]
    fn absorbing_set_check() {
        let h = Graph::complete(2);
        let g = Graph::complete(6);
        let f = IncompatibilitySystem::empty(&g);
        let p = Problem::new(&h, &g, &f);
        let r = verify_absorbing_set(&[0, 1], Rational::new(1, 2), SetSampling::default(), &p).unwrap();
        assert!(matches!(r, Quantified::Proven { .. }));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let f = IncompatibilitySystem::empty(&star);
        let p = Problem::new(&h, &star, &f);
        let r = verify_absorbing_set(&[0, 1], Rational::new(1, 2), SetSampling::default(), &p).unwrap();
        assert_eq!(r, Quantified::Refuted { witness: vec![2, 3] });
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(200, 100), u64::MAX);
    }
}
