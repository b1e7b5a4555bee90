//! Connector for `x ∈ V_i`, `y ∈ V_j` built from a transferral `u_i - u_j`.
//!
//! The families `F^p` and `F^q` realize the positive and negative parts of
//! the transferral coefficients. Their vertex sets are paired as
//! `x_1, ..., x_{hC}` and `y_1, ..., y_{hC}` with `x_1 ∈ V_i`, `y_1 ∈ V_j` and
//! `x_l, y_l` in a common block for `l >= 2`; connectors for `x, x_1`,
//! `y, y_1` and each `x_l, y_l` then close the gap.

use serde::Serialize;

use super::{index_vector, split_transferral, Connector, Problem};
use crate::bitset::VertexSet;
use crate::error::{precondition, Error, Result};
use crate::graph::VertexPartition;
use crate::solver::FactorOutcome;

/// Inputs of the merge. `generators` and `coefficients` are optional; when
/// given, the family multiplicities are checked against them.
#[derive(Clone, Debug)]
pub struct TransferralPlan<'a> {
    pub partition: &'a VertexPartition,
    pub i: usize,
    pub j: usize,
    pub x: usize,
    pub y: usize,
    pub family_p: Vec<Vec<usize>>,
    pub family_q: Vec<Vec<usize>>,
    pub coefficients: Option<(Vec<Vec<i64>>, Vec<i64>)>,
    /// Closedness parameter of the blocks: every piece connector has
    /// `|S| <= ht - 1`.
    pub t: usize,
    /// Forbidden set `W`.
    pub avoid: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Piece {
    pub label: String,
    pub u: usize,
    pub v: usize,
    pub set: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MergedConnector {
    pub connector: Connector,
    /// `C = Σp = Σq`.
    pub c: usize,
    pub pairs: Vec<(usize, usize)>,
    pub pieces: Vec<Piece>,
}

fn family_vertices(p: &Problem, fam: &[Vec<usize>], name: &str) -> Result<VertexSet> {
    let h = p.order();
    let mut all = p.g.empty_set();
    for (k, copy) in fam.iter().enumerate() {
        let set = p.g.set_of(copy)?;
        if set.len() != h || copy.len() != h {
            return Err(precondition(format!("{name}[{k}] has {} distinct vertices, expected {h}", set.len())));
        }
        if !all.is_disjoint(&set) {
            return Err(precondition(format!("{name}[{k}] overlaps an earlier copy")));
        }
        match p.factor(&set)? {
            FactorOutcome::Found { .. } => {}
            FactorOutcome::None { .. } => return Err(precondition(format!("{name}[{k}] does not span a compatible copy"))),
            FactorOutcome::Indeterminate { .. } => return Err(Error::BudgetExhausted(p.budget.0)),
        }
        all.union_with(&set);
    }
    Ok(all)
}

fn check_multiplicities(plan: &TransferralPlan, gens: &[Vec<i64>], coeffs: &[i64]) -> Result<()> {
    if gens.len() != coeffs.len() {
        return Err(precondition(format!("{} generators but {} coefficients", gens.len(), coeffs.len())));
    }
    let split = split_transferral(coeffs)?;
    for (name, fam, mult) in [("F^p", &plan.family_p, &split.p), ("F^q", &plan.family_q, &split.q)] {
        let mut vecs = Vec::new();
        for copy in fam.iter() {
            vecs.push(index_vector(copy, plan.partition)?);
        }
        for (g, &want) in gens.iter().zip(mult) {
            let got = vecs.iter().filter(|v| *v == g).count() as i64;
            if got != want {
                return Err(precondition(format!("{name} has {got} copies with index vector {g:?}, expected {want}")));
            }
        }
        if vecs.iter().any(|v| !gens.contains(v)) {
            return Err(precondition(format!("{name} contains a copy whose index vector is not a generator")));
        }
    }
    Ok(())
}

/// Pairs `X = V(F^p)` with `Y = V(F^q)` block by block after fixing the
/// smallest `x_1 ∈ X ∩ V_i` and `y_1 ∈ Y ∩ V_j`.
fn pair_up(part: &VertexPartition, i: usize, j: usize, xs: &[usize], ys: &[usize]) -> Result<Vec<(usize, usize)>> {
    let x1 = xs.iter().copied().find(|&v| part.block_of(v) == Some(i));
    let y1 = ys.iter().copied().find(|&v| part.block_of(v) == Some(j));
    let (Some(x1), Some(y1)) = (x1, y1) else {
        return Err(precondition("families do not satisfy i(V(F^q)) + u_i = i(V(F^p)) + u_j"));
    };
    let mut pairs = vec![(x1, y1)];
    for b in 0..part.len() {
        let bx: Vec<usize> = xs.iter().copied().filter(|&v| v != x1 && part.block_of(v) == Some(b)).collect();
        let by: Vec<usize> = ys.iter().copied().filter(|&v| v != y1 && part.block_of(v) == Some(b)).collect();
        if bx.len() != by.len() {
            return Err(precondition("families do not satisfy i(V(F^q)) + u_i = i(V(F^p)) + u_j"));
        }
        pairs.extend(bx.into_iter().zip(by));
    }
    Ok(pairs)
}

/// Supplies a connector for `u, v` avoiding a set, or `None`.
pub type ConnectorSource<'a> = dyn FnMut(usize, usize, &VertexSet) -> Result<Option<Connector>> + 'a;

/// Assembles and verifies the merged connector for `x, y` with
/// `t' = t + C + thC`. `provide(u, v, avoid)` must return a connector for
/// `u, v` disjoint from `avoid`, or `None`.
pub fn merge_via_transferral(
    plan: &TransferralPlan,
    p: &Problem,
    provide: &mut ConnectorSource,
) -> Result<MergedConnector> {
    let part = plan.partition;
    let (x, y) = (plan.x, plan.y);
    if plan.i == plan.j {
        return Err(precondition("a transferral needs distinct blocks"));
    }
    if !part.covers(p.g.n()) {
        return Err(precondition("partition does not cover the host"));
    }
    if part.block_of(x) != Some(plan.i) || part.block_of(y) != Some(plan.j) {
        return Err(precondition(format!("x = {x} must lie in block {} and y = {y} in block {}", plan.i, plan.j)));
    }
    let h = p.order();
    let xset = family_vertices(p, &plan.family_p, "F^p")?;
    let yset = family_vertices(p, &plan.family_q, "F^q")?;
    if !xset.is_disjoint(&yset) {
        return Err(precondition("F^p and F^q share a vertex"));
    }
    if let Some((gens, coeffs)) = &plan.coefficients {
        check_multiplicities(plan, gens, coeffs)?;
    }
    if plan.family_p.len() != plan.family_q.len() {
        return Err(precondition("F^p and F^q must have the same number of copies"));
    }
    let c = plan.family_p.len();
    let mut used = xset.union(&yset);
    used.union_with(&p.g.set_of(&plan.avoid)?);
    for end in [x, y] {
        if used.contains(end) {
            return Err(precondition(format!("endpoint {end} lies in W or in a family")));
        }
        used.insert(end);
    }
    let pairs = if c == 0 { Vec::new() } else { pair_up(part, plan.i, plan.j, &xset.to_vec(), &yset.to_vec())? };
    let mut wanted: Vec<(String, usize, usize)> =
        pairs.iter().enumerate().skip(1).map(|(l, &(a, b))| (format!("S_{}", l + 1), a, b)).collect();
    if let Some(&(x1, y1)) = pairs.first() {
        wanted.push(("S_0".into(), x, x1));
        wanted.push(("S_1".into(), y, y1));
    } else {
        wanted.push(("S".into(), x, y));
    }
    let mut pieces = Vec::new();
    let mut s_hat = xset.union(&yset);
    for (label, u, v) in wanted {
        let conn = provide(u, v, &used)?.ok_or_else(|| precondition(format!("no connector {label} for {u}, {v}")))?;
        let set = p.g.set_of(&conn.set)?;
        if (conn.u, conn.v) != (u, v) && (conn.u, conn.v) != (v, u) {
            return Err(precondition(format!("connector {label} joins {}, {} instead of {u}, {v}", conn.u, conn.v)));
        }
        if !set.is_disjoint(&used) {
            return Err(precondition(format!("connector {label} meets W or an earlier piece")));
        }
        if set.len() + 1 > h * plan.t {
            return Err(precondition(format!("connector {label} has {} vertices, more than ht - 1", set.len())));
        }
        if !conn.recheck(p)?.is_valid() {
            return Err(Error::Consistency(format!("connector {label} failed verification")));
        }
        used.union_with(&set);
        s_hat.union_with(&set);
        pieces.push(Piece { label, u, v, set: conn.set });
    }
    let t_prime = if c == 0 { plan.t } else { plan.t + c + plan.t * h * c };
    if s_hat.len() + 1 > h * t_prime {
        return Err(Error::Consistency(format!("|Ŝ| = {} exceeds h t' - 1 = {}", s_hat.len(), h * t_prime - 1)));
    }
    let connector = Connector::new(x, y, &s_hat.to_vec(), t_prime, p).map_err(|e| match e {
        Error::BudgetExhausted(b) => Error::BudgetExhausted(b),
        other => Error::Consistency(format!("merged connector failed verification: {other}")),
    })?;
    Ok(MergedConnector { connector, c, pairs, pieces })
}
