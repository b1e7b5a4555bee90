//! Index vectors and integer lattices generated by them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::graph::VertexPartition;

/// Block-intersection counts of a vertex set.
pub type IndexVector = Vec<i64>;

/// `i_P(S)`: coordinate `i` is `|S ∩ V_i|`.
pub fn index_vector(s: &[usize], p: &VertexPartition) -> Result<IndexVector> {
    let mut out = vec![0i64; p.len()];
    for &v in s {
        let b = p
            .block_of(v)
            .ok_or_else(|| precondition(format!("vertex {v} is not covered by the partition")))?;
        out[b] += 1;
    }
    Ok(out)
}

/// Unit vector `u_i - u_j` in dimension `k`.
pub fn transferral_vector(k: usize, i: usize, j: usize) -> Vec<i64> {
    let mut x = vec![0; k];
    x[i] += 1;
    x[j] -= 1;
    x
}

/// Integer span of a list of generators, with a Hermite normal form basis
/// `H = U A` (rows of `A` are the generators, `U` unimodular).
#[derive(Clone, Debug)]
pub struct GeneratedLattice {
    dim: usize,
    generators: Vec<Vec<i64>>,
    hnf: Vec<Vec<BigInt>>,
    transform: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// `x ∈ L` with coefficients `a` such that `Σ a_v v = x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    pub coefficients: Option<Vec<i64>>,
}

fn sub_multiple(row: &mut [BigInt], other: &[BigInt], q: &BigInt) {
    for (a, b) in row.iter_mut().zip(other) {
        *a -= q * b;
    }
}

impl GeneratedLattice {
    pub fn new(dim: usize, generators: Vec<Vec<i64>>) -> Result<GeneratedLattice> {
        if let Some(g) = generators.iter().find(|g| g.len() != dim) {
            return Err(precondition(format!("generator of length {} in dimension {dim}", g.len())));
        }
        let m = generators.len();
        let mut a: Vec<Vec<BigInt>> =
            generators.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let mut u: Vec<Vec<BigInt>> = (0..m)
            .map(|i| (0..m).map(|j| BigInt::from(u8::from(i == j))).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..dim {
            if r == m {
                break;
            }
            loop {
                let nonzero: Vec<usize> = (r..m).filter(|&i| !a[i][col].is_zero()).collect();
                let Some(&best) = nonzero.iter().min_by_key(|&&i| a[i][col].abs()) else {
                    break;
                };
                a.swap(r, best);
                u.swap(r, best);
                if nonzero.len() == 1 {
                    break;
                }
                for i in r + 1..m {
                    if a[i][col].is_zero() {
                        continue;
                    }
                    let q = a[i][col].div_floor(&a[r][col]);
                    let (ar, ur) = (a[r].clone(), u[r].clone());
                    sub_multiple(&mut a[i], &ar, &q);
                    sub_multiple(&mut u[i], &ur, &q);
                }
            }
            if a[r][col].is_zero() {
                continue;
            }
            if a[r][col].is_negative() {
                a[r].iter_mut().for_each(|x| *x = -&*x);
                u[r].iter_mut().for_each(|x| *x = -&*x);
            }
            for i in 0..r {
                let q = a[i][col].div_floor(&a[r][col]);
                if !q.is_zero() {
                    let (ar, ur) = (a[r].clone(), u[r].clone());
                    sub_multiple(&mut a[i], &ar, &q);
                    sub_multiple(&mut u[i], &ur, &q);
                }
            }
            pivots.push(col);
            r += 1;
        }
        a.truncate(r);
        u.truncate(r);
        Ok(GeneratedLattice { dim, generators, hnf: a, transform: u, pivots })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Hermite normal form rows as decimal strings.
    pub fn basis(&self) -> Vec<Vec<String>> {
        self.hnf.iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect()
    }

    pub fn membership(&self, x: &[i64]) -> Result<Membership> {
        if x.len() != self.dim {
            return Err(precondition(format!("vector of length {} in dimension {}", x.len(), self.dim)));
        }
        let mut residual: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        let mut c = Vec::with_capacity(self.hnf.len());
        for (row, &col) in self.hnf.iter().zip(&self.pivots) {
            let (q, rem) = residual[col].div_rem(&row[col]);
            if !rem.is_zero() {
                return Ok(Membership { member: false, coefficients: None });
            }
            sub_multiple(&mut residual, row, &q);
            c.push(q);
        }
        if residual.iter().any(|v| !v.is_zero()) {
            return Ok(Membership { member: false, coefficients: None });
        }
        let m = self.generators.len();
        let mut a = vec![BigInt::zero(); m];
        for (ci, urow) in c.iter().zip(&self.transform) {
            for (aj, uij) in a.iter_mut().zip(urow) {
                *aj += ci * uij;
            }
        }
        let coefficients = a
            .iter()
            .map(|v| v.to_i64().ok_or_else(|| Error::CapExceeded(format!("coefficient {v} exceeds 64 bits"))))
            .collect::<Result<Vec<i64>>>()?;
        let mut check = vec![0i128; self.dim];
        for (g, &k) in self.generators.iter().zip(&coefficients) {
            for (s, &e) in check.iter_mut().zip(g) {
                *s += k as i128 * e as i128;
            }
        }
        if check.iter().zip(x).any(|(&s, &e)| s != e as i128) {
            return Err(Error::Consistency("lattice coefficients do not reproduce the target".into()));
        }
        Ok(Membership { member: true, coefficients: Some(coefficients) })
    }
}

/// Decides `x ∈ L`, returning coefficients on membership.
pub fn lattice_membership(l: &GeneratedLattice, x: &[i64]) -> Result<Membership> {
    l.membership(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transferral {
    pub i: usize,
    pub j: usize,
    pub coefficients: Vec<i64>,
}

/// First ordered pair `(i, j)`, `i != j`, with `u_i - u_j ∈ L`.
pub fn find_transferral(l: &GeneratedLattice) -> Result<Option<Transferral>> {
    let k = l.dim();
    for i in 0..k {
        for j in (0..k).filter(|&j| j != i) {
            if let Some(coefficients) = l.membership(&transferral_vector(k, i, j))?.coefficients {
                return Ok(Some(Transferral { i, j, coefficients }));
            }
        }
    }
    Ok(None)
}

/// Positive and negative parts of a coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Split {
    pub p: Vec<i64>,
    pub q: Vec<i64>,
    /// `Σp`, equal to `Σq` when balanced.
    pub c: i64,
    pub balanced: bool,
}

pub fn split_pos_neg(a: &[i64]) -> Split {
    let p: Vec<i64> = a.iter().map(|&x| x.max(0)).collect();
    let q: Vec<i64> = a.iter().map(|&x| (-x).max(0)).collect();
    let (sp, sq) = (p.iter().sum::<i64>(), q.iter().sum::<i64>());
    Split { p, q, c: sp, balanced: sp == sq }
}

/// Split of transferral coefficients, where `Σp = Σq` must hold.
pub fn split_transferral(a: &[i64]) -> Result<Split> {
    let s = split_pos_neg(a);
    if !s.balanced {
        return Err(Error::Consistency(format!(
            "positive part sums to {} but negative part to {}",
            s.c,
            s.q.iter().sum::<i64>()
        )));
    }
    Ok(s)
}

/// Parses one vector per non-empty line, comma-separated.
pub fn parse_vectors(text: &str) -> Result<Vec<Vec<i64>>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| parse_vector(l).map_err(|e| crate::error::parse_error(i + 1, e)))
        .collect()
}

pub fn parse_vector(s: &str) -> std::result::Result<Vec<i64>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("expected an integer, found {:?}", t.trim())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(gens: &[&[i64]]) -> GeneratedLattice {
        let dim = gens.first().map_or(0, |g| g.len());
        GeneratedLattice::new(dim, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let l = lattice(&[&[1, 2], &[2, 1]]);
        let m = l.membership(&[1, -1]).unwrap();
        assert!(m.member);
        let a = m.coefficients.unwrap();
        assert_eq!([a[0] + 2 * a[1], 2 * a[0] + a[1]], [1, -1]);
        assert!(!lattice(&[&[2, 0]]).membership(&[1, 0]).unwrap().member);
        assert!(l.membership(&[2, 1]).unwrap().member);
        assert!(l.membership(&[1, 0, 0]).is_err());
    }

    #[test]
    fn transferrals() {
        let t = find_transferral(&lattice(&[&[1, -1, 0]])).unwrap().unwrap();
        assert_eq!((t.i, t.j, t.coefficients), (0, 1, vec![1]));
        assert!(find_transferral(&lattice(&[&[2, -2, 0]])).unwrap().is_none());
        let empty = GeneratedLattice::new(3, vec![]).unwrap();
        assert!(find_transferral(&empty).unwrap().is_none());
    }

    #[test]
    fn hnf_is_order_invariant() {
        let a = lattice(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let b = lattice(&[&[10, -4, -16], &[2, 4, 4], &[-6, 6, 12]]);
        assert_eq!(a.basis(), b.basis());
        assert_eq!(a.rank(), 3);
    }

    #[test]
    fn splits() {
        assert_eq!(split_pos_neg(&[1, -1]), Split { p: vec![1, 0], q: vec![0, 1], c: 1, balanced: true });
        assert_eq!(split_pos_neg(&[0, 0]).c, 0);
        let s = split_transferral(&[2, -1, -1]).unwrap();
        assert_eq!((s.p, s.q, s.c), (vec![2, 0, 0], vec![0, 1, 1], 2));
        assert!(split_transferral(&[1, 0]).is_err());
    }

    #[test]
    fn index_vectors() {
        let p = VertexPartition::consecutive(&[2, 2, 2]).unwrap();
        assert_eq!(index_vector(&[], &p).unwrap(), vec![0, 0, 0]);
        assert_eq!(index_vector(&[0, 1], &p).unwrap(), vec![2, 0, 0]);
        assert_eq!(index_vector(&[0, 2, 4], &p).unwrap(), vec![1, 1, 1]);
        assert!(index_vector(&[6], &p).is_err());
    }

    #[test]
    fn vector_parsing() {
        assert_eq!(parse_vectors("1,2\n# c\n\n-3, 4\n").unwrap(), vec![vec![1, 2], vec![-3, 4]]);
        assert!(parse_vectors("1,x\n").is_err());
    }
}
