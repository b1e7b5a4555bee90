//! Brute-force references used to cross-check the exact algorithms. None of
//! these share code with the routines they check.

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::incompat::IncompatibilitySystem;
use crate::rational::Rational;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Sorted class sizes of every proper colouring with exactly `k` colours,
/// found by trying all `k^n` assignments.
fn colourings(h: &Graph, k: usize) -> BTreeSet<Vec<usize>> {
    let n = h.n();
    let edges = h.edges();
    let mut out = BTreeSet::new();
    let mut colour = vec![0usize; n];
    let total = k.checked_pow(n as u32).expect("pattern too large for the colouring oracle");
    for code in 0..total {
        let mut c = code;
        for slot in colour.iter_mut() {
            *slot = c % k;
            c /= k;
        }
        if edges.iter().any(|&(u, v)| colour[u] == colour[v]) {
            continue;
        }
        let mut sizes = vec![0; k];
        colour.iter().for_each(|&c| sizes[c] += 1);
        if sizes.contains(&0) {
            continue;
        }
        sizes.sort_unstable();
        out.insert(sizes);
    }
    out
}

fn component_orders(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for (w, mark) in seen.iter_mut().enumerate() {
                if !*mark && h.has_edge(u, w) {
                    *mark = true;
                    stack.push(w);
                }
            }
        }
        out.push(size);
    }
    out
}

/// `(χ, σ, χ_cr, χ*)` straight from the definitions.
pub fn raw_chi_star(h: &Graph) -> (usize, usize, Rational, Rational) {
    let n = h.n();
    let (chi, profiles) = (1..=n).map(|k| (k, colourings(h, k))).find(|(_, p)| !p.is_empty()).expect("every graph is n-colourable");
    let sigma = profiles.iter().map(|p| p[0]).min().unwrap();
    let gaps: BTreeSet<usize> = profiles.iter().flat_map(|p| p.windows(2).map(|w| w[1] - w[0]).collect::<Vec<_>>()).collect();
    let hcf_chi = gaps.iter().fold(0, |a, &b| gcd(a, b));
    let hcf_c = component_orders(h).into_iter().fold(0, gcd);
    // hcf_chi = 0 stands for infinity (all gaps zero).
    let one = match chi {
        2 => hcf_c == 1 && hcf_chi != 0 && hcf_chi <= 2,
        c if c > 2 => hcf_chi == 1,
        _ => false,
    };
    let chi_cr = Rational::new(((chi - 1) * n) as i64, (n - sigma) as i64);
    (chi, sigma, chi_cr, if one { chi_cr } else { Rational::int(chi as i64) })
}

/// A copy as (sorted vertices, sorted edges).
pub type RawCopy = (Vec<usize>, Vec<(usize, usize)>);

/// Every compatible copy, from all injective maps of `h` into `g`.
pub fn raw_copies(h: &Graph, g: &Graph, f: &IncompatibilitySystem) -> BTreeSet<RawCopy> {
    let (k, n) = (h.n(), g.n());
    let hedges = h.edges();
    let mut out = BTreeSet::new();
    let mut map = vec![0usize; k];
    let total = n.checked_pow(k as u32).expect("too many maps for the copy oracle");
    for code in 0..total {
        let mut c = code;
        for slot in map.iter_mut() {
            *slot = c % n;
            c /= n;
        }
        let distinct: BTreeSet<usize> = map.iter().copied().collect();
        if distinct.len() != k {
            continue;
        }
        if !hedges.iter().all(|&(a, b)| g.has_edge(map[a], map[b])) {
            continue;
        }
        let mut edges: Vec<(usize, usize)> = hedges.iter().map(|&(a, b)| (map[a].min(map[b]), map[a].max(map[b]))).collect();
        edges.sort_unstable();
        let compatible = edges.iter().enumerate().all(|(i, &(a, b))| {
            edges[i + 1..].iter().all(|&(c, d)| {
                let shared = [a, b].into_iter().find(|&x| x == c || x == d);
                match shared {
                    None => true,
                    Some(v) => {
                        let p = if a == v { b } else { a };
                        let q = if c == v { d } else { c };
                        !f.incompatible_at(v, p, q)
                    }
                }
            })
        });
        if compatible {
            out.insert((distinct.into_iter().collect(), edges));
        }
    }
    out
}

/// Whether some set of vertex-disjoint copies covers all `n` vertices.
pub fn raw_factor_exists(copies: &BTreeSet<RawCopy>, n: usize) -> bool {
    fn go(copies: &[Vec<usize>], covered: &mut Vec<bool>) -> bool {
        let Some(v) = covered.iter().position(|&c| !c) else {
            return true;
        };
        for c in copies.iter().filter(|c| c.contains(&v)) {
            if c.iter().any(|&u| covered[u]) {
                continue;
            }
            c.iter().for_each(|&u| covered[u] = true);
            if go(copies, covered) {
                return true;
            }
            c.iter().for_each(|&u| covered[u] = false);
        }
        false
    }
    let sets: Vec<Vec<usize>> = copies.iter().map(|(v, _)| v.clone()).collect();
    go(&sets, &mut vec![false; n])
}

/// Integer coefficients in `[-bound, bound]` with `Σ a_i g_i = x`.
pub fn brute_membership(gens: &[Vec<i64>], x: &[i64], bound: i64) -> Option<Vec<i64>> {
    let m = gens.len();
    let width = (2 * bound + 1) as u64;
    let mut a = vec![0i64; m];
    for code in 0..width.pow(m as u32) {
        let mut c = code;
        for slot in a.iter_mut() {
            *slot = (c % width) as i64 - bound;
            c /= width;
        }
        let hit = (0..x.len()).all(|d| gens.iter().zip(&a).map(|(g, &k)| k * g[d]).sum::<i64>() == x[d]);
        if hit {
            return Some(a);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_multipartite, MultipartiteSpec};

    #[test]
    fn oracle_spot_values() {
        let k112 = complete_multipartite(&MultipartiteSpec::new(vec![1, 1, 2]).unwrap()).0;
        assert_eq!(raw_chi_star(&k112).3, Rational::new(8, 3));
        assert_eq!(raw_chi_star(&Graph::complete(3)).3, Rational::int(3));
        assert_eq!(raw_chi_star(&Graph::path(3)).3, Rational::int(2));
        let g = Graph::complete(4);
        assert_eq!(raw_copies(&Graph::complete(3), &g, &IncompatibilitySystem::empty(&g)).len(), 4);
        assert_eq!(brute_membership(&[vec![1, 2], vec![2, 1]], &[1, -1], 4), Some(vec![-1, 1]));
    }
}
