//! The acceptance battery A1–A10. Every criterion runs with fixed seeds and
//! produces a JSON record without timings, so two runs with the same seed
//! serialize identically.

pub mod oracle;

use std::time::{Duration, Instant};

use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::absorb::{
    assemble_absorber, concatenate_connectors, find_transferral, verify_absorber, verify_connector, Connector, GeneratedLattice,
    Problem,
};
use crate::chromatic;
use crate::construct::{kuhn_osthus_base, CappedCirculant, ConstructionSpec, Base, augment_with, verify_index_vector_claim};
use crate::error::{precondition, Result};
use crate::graph::{complete_multipartite, gnp, min_degree_graph, Graph, MultipartiteSpec};
use crate::incompat::{random_bounded_system, IncompatibilitySystem};
use crate::rational::Rational;
use crate::rng;
use crate::solver::{enumerate_compatible_copies, find_compatible_factor, greedy_almost_tiling, Budget, FactorOutcome};

pub const SCHEMA_VERSION: u32 = 1;

pub const CRITERIA: [&str; 10] = ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10"];

/// Outcome of one criterion. `passed` is the semantic verdict; the time
/// limit is checked separately and kept out of the JSON.
#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub summary: String,
    pub details: Value,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub limit: Option<Duration>,
}

impl Criterion {
    pub fn within_time(&self) -> bool {
        self.limit.is_none_or(|l| self.elapsed <= l)
    }

    pub fn ok(&self) -> bool {
        self.passed && self.within_time()
    }

    /// One human-readable line.
    pub fn line(&self) -> String {
        let verdict = if self.ok() { "PASS" } else { "FAIL" };
        let time = match self.limit {
            Some(l) => format!("{:.2}s of {}s", self.elapsed.as_secs_f64(), l.as_secs()),
            None => format!("{:.2}s", self.elapsed.as_secs_f64()),
        };
        format!("{verdict} {} {}: {} [{time}]", self.id, self.title, self.summary)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AcceptanceReport {
    pub schema_version: u32,
    pub seed: u64,
    pub criteria: Vec<Criterion>,
}

impl AcceptanceReport {
    pub fn all_ok(&self) -> bool {
        self.criteria.iter().all(Criterion::ok)
    }
}

/// Runs the selected criteria (all when `selector` is empty).
pub fn run(selector: &[String], seed: u64) -> Result<AcceptanceReport> {
    let ids: Vec<&str> = if selector.is_empty() {
        CRITERIA.to_vec()
    } else {
        selector
            .iter()
            .map(|s| {
                CRITERIA
                    .iter()
                    .copied()
                    .find(|c| c.eq_ignore_ascii_case(s))
                    .ok_or_else(|| precondition(format!("unknown criterion {s:?}; expected one of A1..A10")))
            })
            .collect::<Result<_>>()?
    };
    let criteria = ids.into_iter().map(|id| run_one(id, seed)).collect::<Result<_>>()?;
    Ok(AcceptanceReport { schema_version: SCHEMA_VERSION, seed, criteria })
}

pub fn run_one(id: &str, seed: u64) -> Result<Criterion> {
    let start = Instant::now();
    let (title, limit, (passed, summary, details)) = match id {
        "A1" => ("chi* dichotomy battery", Some(5), a1()?),
        "A2" => ("Kuhn-Osthus base for K_3", Some(90), a2()?),
        "A3" => ("full extremal instance, K_3, n = 12, mu = 1/6", Some(60), a3()?),
        "A4" => ("index-vector claim on the A3 instance", Some(10), a4()?),
        "A5" => ("counting robustness on K_n", None, a5(seed)?),
        "A6" => ("lattice oracle equivalence", None, a6(seed)?),
        "A7" => ("greedy almost-cover", Some(60), a7(seed)?),
        "A8" => ("assembly round-trips", None, a8(seed)?),
        "A9" => ("solver oracle equivalence", None, a9(seed)?),
        "A10" => ("determinism across worker counts", None, a10(seed)?),
        other => return Err(precondition(format!("unknown criterion {other:?}"))),
    };
    Ok(Criterion {
        id: id.into(),
        title: title.into(),
        passed,
        summary,
        details,
        elapsed: start.elapsed(),
        limit: limit.map(Duration::from_secs),
    })
}

type Outcome = (bool, String, Value);

/// The χ* corpus with display names.
pub fn chromatic_corpus() -> Vec<(&'static str, Graph)> {
    let k112 = complete_multipartite(&MultipartiteSpec::new(vec![1, 1, 2]).unwrap()).0;
    vec![
        ("K_2", Graph::complete(2)),
        ("K_3", Graph::complete(3)),
        ("K_4", Graph::complete(4)),
        ("P_3", Graph::path(3)),
        ("P_4", Graph::path(4)),
        ("C_4", Graph::cycle(4)),
        ("C_5", Graph::cycle(5)),
        ("K_3(1,1,2)", k112),
        ("K_2 + K_3", Graph::complete(2).disjoint_union(&Graph::complete(3))),
        ("2K_2", Graph::complete(2).disjoint_union(&Graph::complete(2))),
    ]
}

fn a1() -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut mismatches = 0;
    for (name, h) in chromatic_corpus() {
        let p = chromatic::chi_star(&h)?;
        let (chi, sigma, chi_cr, star) = oracle::raw_chi_star(&h);
        let agree = (p.chi, p.sigma, p.chi_cr, p.chi_star) == (chi, sigma, chi_cr, star);
        mismatches += usize::from(!agree);
        rows.push(json!({"pattern": name, "chi_cr": p.chi_cr, "chi_star": p.chi_star, "oracle_chi_star": star, "agree": agree}));
    }
    let spot = |name: &str| rows.iter().find(|r| r["pattern"] == name).map(|r| r["chi_star"].clone()).unwrap();
    let k112_cr = rows.iter().find(|r| r["pattern"] == "K_3(1,1,2)").unwrap()["chi_cr"].clone();
    let spots_ok = k112_cr == json!("8/3") && spot("K_3(1,1,2)") == json!("8/3") && spot("K_3") == json!("3/1") && spot("P_3") == json!("2/1");
    let passed = mismatches == 0 && spots_ok;
    Ok((passed, format!("{} patterns, {mismatches} oracle mismatches, spot values {}", rows.len(), ok_word(spots_ok)), json!({"rows": rows})))
}

fn ok_word(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "wrong"
    }
}

fn a2() -> Result<Outcome> {
    let h = Graph::complete(3);
    let mut rows = Vec::new();
    let mut passed = true;
    for n in [6usize, 9, 12] {
        let base = kuhn_osthus_base(&h, n)?;
        let r = 3;
        let rest = n - (n / r + 1) - (n.div_ceil(r) - 1);
        let mut expected = vec![n / r + 1, n.div_ceil(r) - 1, rest];
        expected.sort_unstable_by(|a, b| b.cmp(a));
        let mut sizes = base.parts.block_sizes();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let delta = (2 * n).div_ceil(3) - 1;
        let f = IncompatibilitySystem::empty(&base.graph);
        let outcome = find_compatible_factor(&h, &base.graph, &f, Budget::DEFAULT)?;
        let ok = sizes == expected && base.graph.min_degree() == delta && outcome.is_none();
        passed &= ok;
        rows.push(json!({"n": n, "part_sizes": base.parts.block_sizes(), "expected_sizes": expected,
            "min_degree": base.graph.min_degree(), "expected_min_degree": delta, "factor": outcome, "ok": ok}));
    }
    Ok((passed, format!("n = 6, 9, 12: sizes, δ and factor-freeness {}", ok_word(passed)), json!({"rows": rows})))
}

/// The A3 instance. The strict circulant cannot meet the degree window at
/// `μn = 2` on these part sizes, so the capped variant is used.
pub fn a3_instance() -> Result<crate::construct::ExtremalInstance> {
    let spec = ConstructionSpec { pattern: Graph::complete(3), n: 12, mu: Rational::new(1, 6), base: Base::KuhnOsthus, seed: 0 };
    augment_with(&spec, &CappedCirculant)
}

fn a3() -> Result<Outcome> {
    let inst = a3_instance()?;
    let h = Graph::complete(3);
    let c = &inst.certificates;
    let outcome = find_compatible_factor(&h, &inst.graph, &inst.system, Budget::DEFAULT)?;
    let bound_ok = c.delta <= 2;
    let passed = c.all_ok() && bound_ok && outcome.is_none();
    let summary = format!(
        "certificates {} (δ {}, internal min {}, internal max {}), Δ = {} {}, solver {}",
        ok_word(c.all_ok()),
        ok_word(c.min_degree_ok),
        ok_word(c.internal_min_ok),
        ok_word(c.internal_max_ok),
        c.delta,
        ok_word(bound_ok),
        if outcome.is_none() { "proves no factor" } else { "does not prove no factor" }
    );
    Ok((passed, summary, json!({"instance": inst.report(), "factor": outcome})))
}

fn a4() -> Result<Outcome> {
    let inst = a3_instance()?;
    let claim = verify_index_vector_claim(&inst, &Graph::complete(3), Budget::DEFAULT)?;
    let passed = claim.holds();
    Ok((passed, format!("every compatible triangle transversal: {passed}"), json!({"claim": claim})))
}

fn compatible_triangles(f: &IncompatibilitySystem, n: usize) -> u64 {
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let bad = f.incompatible_at(a, b, c) || f.incompatible_at(b, a, c) || f.incompatible_at(c, a, b);
                count += u64::from(!bad);
            }
        }
    }
    count
}

fn a5(seed: u64) -> Result<Outcome> {
    let mut jobs = Vec::new();
    for n in [20usize, 30, 40] {
        for mu in [Rational::new(1, 50), Rational::new(1, 20)] {
            for s in 0..20u64 {
                jobs.push((n, mu, s));
            }
        }
    }
    let runs: Vec<Value> = jobs
        .par_iter()
        .map(|&(n, mu, s)| -> Result<Value> {
            let g = Graph::complete(n);
            let f = random_bounded_system(&g, mu, rng::derive(seed, &[5, n as u64, mu.denom() as u64, s]))?;
            let total = (n * (n - 1) * (n - 2) / 6) as u64;
            let compatible = enumerate_compatible_copies(&Graph::complete(3), &g, &f, Budget::UNLIMITED)?.copies.len() as u64;
            let raw = compatible_triangles(&f, n);
            let lost_ok = Rational::int((total - compatible) as i64) <= mu.times((n * n * n) as i64);
            let max_bad = (0..n).map(|v| f.count_bad_pairs_at(v)).max().unwrap_or(0);
            let bad_ok = Rational::int(max_bad as i64) <= mu.times(2 * (n * n) as i64);
            Ok(json!({"n": n, "mu": mu, "seed": s, "delta": f.bound_report().delta, "total": total,
                "compatible": compatible, "oracle_compatible": raw, "max_bad_pairs": max_bad,
                "ok": lost_ok && bad_ok && raw == compatible}))
        })
        .collect::<Result<_>>()?;
    let failures = runs.iter().filter(|r| r["ok"] != json!(true)).count();
    Ok((failures == 0, format!("{} runs, {failures} violations", runs.len()), json!({"runs": runs})))
}

fn random_generators(rng: &mut rng::Rng) -> (usize, Vec<Vec<i64>>) {
    let dim = rng.gen_range(1..=4);
    let m = rng.gen_range(0..=5);
    (dim, (0..m).map(|_| (0..dim).map(|_| rng.gen_range(-3..=3)).collect()).collect())
}

fn combination(gens: &[Vec<i64>], a: &[i64], dim: usize) -> Vec<i64> {
    (0..dim).map(|d| gens.iter().zip(a).map(|(g, &k)| k * g[d]).sum()).collect()
}

/// Mismatches are split into members the bounded oracle cannot reach
/// (exact coefficients re-checked here) and oracle members the lattice
/// rejects; only the latter would be a fault of the lattice code.
fn a6(seed: u64) -> Result<Outcome> {
    let mut beyond_bound = Vec::new();
    let mut missed = Vec::new();
    let mut transferral_mismatches = 0;
    let mut members = 0;
    for inst in 0..200u64 {
        let mut rng = rng::stream(rng::derive(seed, &[6]), inst);
        let (dim, gens) = random_generators(&mut rng);
        let target: Vec<i64> = if gens.is_empty() || rng.gen_bool(0.5) {
            (0..dim).map(|_| rng.gen_range(-3..=3)).collect()
        } else {
            let coeffs: Vec<i64> = gens.iter().map(|_| rng.gen_range(-2..=2)).collect();
            combination(&gens, &coeffs, dim)
        };
        let l = GeneratedLattice::new(dim, gens.clone())?;
        let fast = l.membership(&target)?;
        let brute = oracle::brute_membership(&gens, &target, 4);
        members += usize::from(fast.member);
        match (fast.member, brute.is_some()) {
            (true, false) => {
                let a = fast.coefficients.clone().unwrap_or_default();
                let reproduces = combination(&gens, &a, dim) == target;
                beyond_bound.push(json!({"instance": inst, "generators": gens, "target": target,
                    "coefficients": a, "coefficients_reproduce_target": reproduces}));
            }
            (false, true) => missed.push(json!({"instance": inst, "generators": gens, "target": target, "oracle": brute})),
            _ => {}
        }
        let mut first = None;
        for i in 0..dim {
            for j in (0..dim).filter(|&j| j != i) {
                let x = crate::absorb::transferral_vector(dim, i, j);
                if first.is_none() && l.membership(&x)?.member {
                    first = Some((i, j));
                }
            }
        }
        if find_transferral(&l)?.map(|t| (t.i, t.j)) != first {
            transferral_mismatches += 1;
        }
    }
    let mismatches = beyond_bound.len() + missed.len();
    let passed = mismatches == 0 && transferral_mismatches == 0;
    Ok((
        passed,
        format!(
            "200 instances ({members} members): {mismatches} membership mismatches ({} certified members needing a coefficient beyond ±4, {} oracle members rejected), {transferral_mismatches} transferral mismatches",
            beyond_bound.len(),
            missed.len()
        ),
        json!({"beyond_bound": beyond_bound, "missed": missed, "transferral_mismatches": transferral_mismatches}),
    ))
}

fn a7(seed: u64) -> Result<Outcome> {
    let n = 60usize;
    let h = Graph::complete(3);
    let chi_cr = chromatic::chi_star(&h)?.chi_cr;
    // δ >= (1 - 1/χ_cr + 0.2) n
    let target = Rational((num_rational::Ratio::from_integer(1) - chi_cr.0.recip() + num_rational::Ratio::new(1, 5)) * n as i64);
    let delta = target.ceil() as usize;
    let runs: Vec<Value> = (0..10u64)
        .into_par_iter()
        .map(|s| -> Result<Value> {
            let mut rng = rng::stream(rng::derive(seed, &[7]), s);
            let g = min_degree_graph(n, delta, 0.5, &mut rng)?;
            let f = random_bounded_system(&g, Rational::new(1, 50), rng::derive(seed, &[7, 1, s]))?;
            let t = greedy_almost_tiling(&h, &g, &f, rng::derive(seed, &[7, 2, s]))?;
            let uncovered = t.uncovered;
            Ok(json!({"seed": s, "min_degree": g.min_degree(), "copies": t.tiling.len(), "uncovered": uncovered, "ok": uncovered * 10 <= n}))
        })
        .collect::<Result<_>>()?;
    let good = runs.iter().filter(|r| r["ok"] == json!(true)).count();
    Ok((good >= 9, format!("{good}/10 seeds leave at most 6 of 60 vertices uncovered (δ >= {delta})"), json!({"runs": runs})))
}

/// Random relabelling, noise edges, and incompatibilities touching only
/// noise edges, on top of a fixed set of planted cliques.
struct Gadget {
    g: Graph,
    f: IncompatibilitySystem,
    label: Vec<usize>,
}

fn gadget(n: usize, cliques: &[Vec<usize>], rng: &mut rng::Rng) -> Result<Gadget> {
    use rand::seq::SliceRandom;
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut planted = std::collections::BTreeSet::new();
    let mut g = Graph::empty(n)?;
    for c in cliques {
        for (i, &a) in c.iter().enumerate() {
            for &b in &c[i + 1..] {
                let (x, y) = (label[a], label[b]);
                g.add_edge(x, y)?;
                planted.insert((x.min(y), x.max(y)));
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.2) {
                g.add_edge(u, v)?;
            }
        }
    }
    let mut f = IncompatibilitySystem::empty(&g);
    for v in 0..n {
        let nb = g.neighbors(v).to_vec();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                let noisy = !planted.contains(&(v.min(a), v.max(a))) || !planted.contains(&(v.min(b), v.max(b)));
                if noisy && rng.gen_bool(0.3) {
                    f.add(v, a, b)?;
                }
            }
        }
    }
    Ok(Gadget { g, f, label })
}

fn a8(seed: u64) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut failures = 0;
    for case in 0..50u64 {
        let mut rng = rng::stream(rng::derive(seed, &[8]), case);
        let h = if case % 2 == 0 { 2 } else { 3 };
        let pattern = Graph::complete(h);
        let ok = if case < 25 {
            // u = 0, u1 = 1, v = 2, S1 = 3.., S2 after S1.
            let s1: Vec<usize> = (3..3 + h - 1).collect();
            let s2: Vec<usize> = (2 + h..2 + 2 * h - 1).collect();
            let n = 2 + 2 * h - 1 + 2;
            let with = |x: usize, s: &[usize]| -> Vec<usize> { std::iter::once(x).chain(s.iter().copied()).collect() };
            let gd = gadget(n, &[with(0, &s1), with(1, &s1), with(1, &s2), with(2, &s2)], &mut rng)?;
            let p = Problem::new(&pattern, &gd.g, &gd.f);
            let l = |v: &[usize]| -> Vec<usize> { v.iter().map(|&x| gd.label[x]).collect() };
            let c1 = Connector::new(gd.label[0], gd.label[1], &l(&s1), 1, &p)?;
            let c2 = Connector::new(gd.label[1], gd.label[2], &l(&s2), 1, &p)?;
            let c = concatenate_connectors(&c1, &c2, &p)?;
            let valid = verify_connector(&c.set, c.u, c.v, c.t, &p)?.is_valid();
            let size_ok = c.set.len() == c1.set.len() + c2.set.len() + 1 && c.set.len() < h * (c1.t + c2.t);
            rows.push(json!({"case": case, "kind": "concatenate", "h": h, "set": c.set, "t": c.t, "valid": valid, "size_ok": size_ok}));
            valid && size_ok
        } else {
            // S = 0..h, T = h..2h, connector S_i after that.
            let s: Vec<usize> = (0..h).collect();
            let t: Vec<usize> = (h..2 * h).collect();
            let conn: Vec<Vec<usize>> = (0..h).map(|i| (2 * h + i * (h - 1)..2 * h + (i + 1) * (h - 1)).collect()).collect();
            let n = 2 * h + h * (h - 1) + 2;
            let mut cliques = vec![t.clone()];
            for i in 0..h {
                cliques.push(std::iter::once(s[i]).chain(conn[i].iter().copied()).collect());
                cliques.push(std::iter::once(t[i]).chain(conn[i].iter().copied()).collect());
            }
            let gd = gadget(n, &cliques, &mut rng)?;
            let p = Problem::new(&pattern, &gd.g, &gd.f);
            let l = |v: &[usize]| -> Vec<usize> { v.iter().map(|&x| gd.label[x]).collect() };
            let connectors =
                (0..h).map(|i| Connector::new(gd.label[s[i]], gd.label[t[i]], &l(&conn[i]), 1, &p)).collect::<Result<Vec<_>>>()?;
            let a = assemble_absorber(&l(&s), &l(&t), &connectors, &p)?;
            let valid = verify_absorber(&a.target, &a.set, a.t, &p)?.is_valid();
            let size_ok = a.set.len() <= h * h * a.t;
            rows.push(json!({"case": case, "kind": "absorber", "h": h, "set": a.set, "t": a.t, "valid": valid, "size_ok": size_ok}));
            valid && size_ok
        };
        failures += usize::from(!ok);
    }
    Ok((failures == 0, format!("50 gadgets, {failures} failures"), json!({"rows": rows})))
}

fn random_system(g: &Graph, p: f64, rng: &mut rng::Rng) -> Result<IncompatibilitySystem> {
    let mut f = IncompatibilitySystem::empty(g);
    for v in 0..g.n() {
        let nb = g.neighbors(v).to_vec();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if rng.gen_bool(p) {
                    f.add(v, a, b)?;
                }
            }
        }
    }
    Ok(f)
}

fn solver_agrees(h: &Graph, g: &Graph, f: &IncompatibilitySystem) -> Result<(bool, usize)> {
    let raw = oracle::raw_copies(h, g, f);
    let en = enumerate_compatible_copies(h, g, f, Budget::UNLIMITED)?;
    let got: std::collections::BTreeSet<oracle::RawCopy> = en.copies.iter().map(|c| (c.vertices.clone(), c.edges.clone())).collect();
    let copies_ok = !en.truncated && got == raw && got.len() == en.copies.len();
    let factor = find_compatible_factor(h, g, f, Budget::UNLIMITED)?;
    let expect = g.n().is_multiple_of(h.n()) && oracle::raw_factor_exists(&raw, g.n());
    let factor_ok = match &factor {
        FactorOutcome::Found { tiling, .. } => expect && tiling.verify(h, g, f, None).is_ok(),
        FactorOutcome::None { .. } => !expect,
        FactorOutcome::Indeterminate { .. } => false,
    };
    Ok((copies_ok && factor_ok, raw.len()))
}

fn a9(seed: u64) -> Result<Outcome> {
    let mut pairs: Vec<(String, Graph, Graph, IncompatibilitySystem)> = Vec::new();
    let hosts = [
        ("C_8", Graph::cycle(8)),
        ("K_8", Graph::complete(8)),
        ("K_4,4", complete_multipartite(&MultipartiteSpec::new(vec![4, 4]).unwrap()).0),
        ("P_8", Graph::path(8)),
    ];
    let mut rng = rng::stream(rng::derive(seed, &[9]), 0);
    for (pname, h) in chromatic_corpus().into_iter().filter(|(_, h)| h.n() <= 4) {
        for (gname, g) in &hosts {
            pairs.push((format!("{pname} in {gname}"), h.clone(), g.clone(), IncompatibilitySystem::empty(g)));
            let f = random_system(g, 0.2, &mut rng)?;
            pairs.push((format!("{pname} in {gname}, random F"), h.clone(), g.clone(), f));
        }
    }
    for i in 0..300u64 {
        let mut rng = rng::stream(rng::derive(seed, &[9, 1]), i);
        let hn = rng.gen_range(1..=4);
        let gn = rng.gen_range(hn..=8);
        let h = gnp(hn, 0.6, &mut rng)?;
        let g = gnp(gn, 0.6, &mut rng)?;
        let f = random_system(&g, 0.25, &mut rng)?;
        pairs.push((format!("random {i}"), h, g, f));
    }
    let results: Vec<(String, bool, usize)> = pairs
        .par_iter()
        .map(|(name, h, g, f)| solver_agrees(h, g, f).map(|(ok, c)| (name.clone(), ok, c)))
        .collect::<Result<_>>()?;
    let mismatches: Vec<&String> = results.iter().filter(|r| !r.1).map(|r| &r.0).collect();
    let copies: usize = results.iter().map(|r| r.2).sum();
    Ok((
        mismatches.is_empty(),
        format!("{} pairs, {copies} copies compared, {} mismatches", results.len(), mismatches.len()),
        json!({"pairs": results.len(), "copies": copies, "mismatches": mismatches}),
    ))
}

fn a10(seed: u64) -> Result<Outcome> {
    let ids: Vec<String> = CRITERIA[..9].iter().map(|s| s.to_string()).collect();
    let mut outputs = Vec::new();
    for jobs in [1usize, 4] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| crate::error::Error::Consistency(format!("cannot build a pool of {jobs} workers: {e}")))?;
        let report = pool.install(|| run(&ids, seed))?;
        outputs.push(serde_json::to_string(&report).expect("reports serialize"));
    }
    let same = outputs[0] == outputs[1];
    Ok((same, format!("A1-A9 JSON with 1 and 4 workers {}", if same { "identical" } else { "differs" }), json!({"bytes": outputs[0].len()})))
}
