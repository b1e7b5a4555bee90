//! Exact colouring invariants: χ, σ, the gap set D(H), the two highest
//! common factors, χ_cr and χ*.
//!
//! Everything is computed by exhaustive enumeration of proper χ-colourings,
//! so the pattern order is capped (12 by default).

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{precondition, Error};
use crate::graph::{components, Graph};
use crate::rational::Rational;

pub const DEFAULT_MAX_ORDER: usize = 12;

/// Sorted colour-class sizes `h_1 <= ... <= h_k` of one proper colouring.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ColoringClassSizes(Vec<usize>);

impl ColoringClassSizes {
    pub fn new(mut sizes: Vec<usize>) -> ColoringClassSizes {
        sizes.sort_unstable();
        ColoringClassSizes(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn smallest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Consecutive gaps `h_{i+1} - h_i`.
    pub fn gaps(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.windows(2).map(|w| w[1] - w[0])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProfileError {
    #[error("no proper {k}-colouring exists: chromatic number is {chi}")]
    BelowChromaticNumber { k: usize, chi: usize },
    #[error("profiles are defined at k = χ = {chi}, got k = {k}")]
    AboveChromaticNumber { k: usize, chi: usize },
    #[error("pattern of order {order} exceeds the colouring enumeration cap {cap}")]
    TooLarge { order: usize, cap: usize },
}

impl From<ProfileError> for Error {
    fn from(e: ProfileError) -> Self {
        match e {
            ProfileError::TooLarge { .. } => Error::CapExceeded(e.to_string()),
            _ => Error::Precondition(e.to_string()),
        }
    }
}

/// hcf_χ: a positive integer, or infinity when `D(H) = {0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcfChi {
    Finite(usize),
    Infinite,
}

impl HcfChi {
    pub fn at_most(self, bound: usize) -> bool {
        matches!(self, HcfChi::Finite(v) if v <= bound)
    }
}

impl Serialize for HcfChi {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            HcfChi::Finite(v) => s.serialize_u64(*v as u64),
            HcfChi::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Every invariant feeding the χ* dichotomy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticProfile {
    pub chi: usize,
    pub sigma: usize,
    pub d_set: BTreeSet<usize>,
    pub hcf_chi: HcfChi,
    pub hcf_c: usize,
    pub hcf_is_one: bool,
    pub chi_cr: Rational,
    pub chi_star: Rational,
}

fn is_k_colourable(g: &Graph, order: &[usize], k: usize) -> bool {
    fn go(g: &Graph, order: &[usize], k: usize, i: usize, colour: &mut [usize], used: usize) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        // Colours beyond `used` are interchangeable; try only the first fresh one.
        for c in 0..(used + 1).min(k) {
            if g.neighbors(v).iter().all(|w| colour[w] != c) {
                colour[v] = c;
                if go(g, order, k, i + 1, colour, used.max(c + 1)) {
                    return true;
                }
                colour[v] = usize::MAX;
            }
        }
        false
    }
    let mut colour = vec![usize::MAX; g.n()];
    go(g, order, k, 0, &mut colour, 0)
}

/// Greedy clique, used as a lower bound for χ.
fn greedy_clique(g: &Graph) -> usize {
    let mut best = 0;
    for s in 0..g.n() {
        let mut clique = vec![s];
        let mut cand = g.neighbors(s).clone();
        while let Some(v) = cand.iter().max_by_key(|&v| (g.neighbors(v).intersection_len(&cand), usize::MAX - v)) {
            clique.push(v);
            cand.intersect_with(g.neighbors(v));
        }
        best = best.max(clique.len());
    }
    best
}

/// Vertices by decreasing degree, ties by id.
fn colouring_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// χ(H); zero for the graph on no vertices.
pub fn chromatic_number(h: &Graph) -> usize {
    if h.n() == 0 {
        return 0;
    }
    let order = colouring_order(h);
    let mut k = greedy_clique(h).max(1);
    while !is_k_colourable(h, &order, k) {
        k += 1;
    }
    k
}

/// Distinct class-size profiles of proper `k`-colourings, `k = χ(H)`.
///
/// Colourings are enumerated as set partitions (the first vertex of every new
/// class opens the next colour), which removes colour permutations without
/// losing any size multiset.
pub fn enumerate_coloring_profiles(h: &Graph, k: usize) -> Result<BTreeSet<ColoringClassSizes>, ProfileError> {
    enumerate_profiles_capped(h, k, DEFAULT_MAX_ORDER)
}

pub fn enumerate_profiles_capped(
    h: &Graph,
    k: usize,
    cap: usize,
) -> Result<BTreeSet<ColoringClassSizes>, ProfileError> {
    if h.n() > cap {
        return Err(ProfileError::TooLarge { order: h.n(), cap });
    }
    let chi = chromatic_number(h);
    if k < chi {
        return Err(ProfileError::BelowChromaticNumber { k, chi });
    }
    if k > chi {
        return Err(ProfileError::AboveChromaticNumber { k, chi });
    }
    let mut out = BTreeSet::new();
    let mut colour = vec![usize::MAX; h.n()];
    let mut sizes = vec![0usize; k];
    partitions(h, k, 0, 0, &mut colour, &mut sizes, &mut out);
    Ok(out)
}

fn partitions(
    h: &Graph,
    k: usize,
    v: usize,
    used: usize,
    colour: &mut [usize],
    sizes: &mut [usize],
    out: &mut BTreeSet<ColoringClassSizes>,
) {
    let n = h.n();
    if v == n {
        if used == k {
            out.insert(ColoringClassSizes::new(sizes.to_vec()));
        }
        return;
    }
    // Not enough vertices left to open the missing colours.
    if k - used > n - v {
        return;
    }
    for c in 0..(used + 1).min(k) {
        if h.neighbors(v).iter().any(|w| w < v && colour[w] == c) {
            continue;
        }
        colour[v] = c;
        sizes[c] += 1;
        partitions(h, k, v + 1, used.max(c + 1), colour, sizes, out);
        sizes[c] -= 1;
        colour[v] = usize::MAX;
    }
}

fn profiles(h: &Graph, cap: usize) -> Result<(usize, BTreeSet<ColoringClassSizes>), ProfileError> {
    let chi = chromatic_number(h);
    Ok((chi, enumerate_profiles_capped(h, chi, cap)?))
}

/// σ(H): minimum smallest-class size over proper χ-colourings.
pub fn sigma(h: &Graph) -> Result<usize, ProfileError> {
    let (_, ps) = profiles(h, DEFAULT_MAX_ORDER)?;
    Ok(ps.iter().map(ColoringClassSizes::smallest).min().unwrap_or(0))
}

/// D(H): union of the consecutive-gap sets of all χ-colourings.
pub fn d_set(h: &Graph) -> Result<BTreeSet<usize>, ProfileError> {
    let (_, ps) = profiles(h, DEFAULT_MAX_ORDER)?;
    Ok(gap_set(&ps))
}

fn gap_set(ps: &BTreeSet<ColoringClassSizes>) -> BTreeSet<usize> {
    ps.iter().flat_map(|p| p.gaps().collect::<Vec<_>>()).collect()
}

/// gcd over a set with zeros ignored; `Infinite` for `{0}` (and for the
/// empty set, which arises only when χ = 1).
pub fn hcf_of_gaps(d: &BTreeSet<usize>) -> HcfChi {
    match d.iter().filter(|&&x| x != 0).fold(0usize, |acc, &x| acc.gcd(&x)) {
        0 => HcfChi::Infinite,
        g => HcfChi::Finite(g),
    }
}

/// `(hcf_χ, hcf_c, hcf(H) = 1)`.
pub fn hcf_profile(h: &Graph) -> Result<(HcfChi, usize, bool), ProfileError> {
    let (chi, ps) = profiles(h, DEFAULT_MAX_ORDER)?;
    let hcf_chi = hcf_of_gaps(&gap_set(&ps));
    let hcf_c = component_hcf(h);
    Ok((hcf_chi, hcf_c, hcf_is_one(chi, hcf_chi, hcf_c)))
}

fn component_hcf(h: &Graph) -> usize {
    components(h).iter().fold(0usize, |acc, c| acc.gcd(&c.len()))
}

fn hcf_is_one(chi: usize, hcf_chi: HcfChi, hcf_c: usize) -> bool {
    if chi > 2 {
        hcf_chi == HcfChi::Finite(1)
    } else if chi == 2 {
        hcf_c == 1 && hcf_chi.at_most(2)
    } else {
        false
    }
}

/// Fully populated profile, with the default order cap.
pub fn chi_star(h: &Graph) -> Result<ChromaticProfile, Error> {
    chi_star_capped(h, DEFAULT_MAX_ORDER)
}

pub fn chi_star_capped(h: &Graph, cap: usize) -> Result<ChromaticProfile, Error> {
    if h.n() == 0 {
        return Err(precondition("pattern has no vertices"));
    }
    let (chi, ps) = profiles(h, cap)?;
    if chi < 2 {
        return Err(precondition("χ_cr is undefined for edgeless patterns (χ = 1)"));
    }
    let sigma = ps.iter().map(ColoringClassSizes::smallest).min().unwrap_or(0);
    let d = gap_set(&ps);
    let hcf_chi = hcf_of_gaps(&d);
    let hcf_c = component_hcf(h);
    let one = hcf_is_one(chi, hcf_chi, hcf_c);
    let order = h.n() as i64;
    let chi_cr = Rational::new((chi as i64 - 1) * order, order - sigma as i64);
    let chi_star = if one { chi_cr } else { Rational::int(chi as i64) };
    Ok(ChromaticProfile { chi, sigma, d_set: d, hcf_chi, hcf_c, hcf_is_one: one, chi_cr, chi_star })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_multipartite, MultipartiteSpec};

    fn k112() -> Graph {
        complete_multipartite(&MultipartiteSpec::new(vec![1, 1, 2]).unwrap()).0
    }

    fn sizes(ps: &BTreeSet<ColoringClassSizes>) -> Vec<Vec<usize>> {
        ps.iter().map(|p| p.sizes().to_vec()).collect()
    }

    #[test]
    fn chromatic_number_examples() {
        assert_eq!(chromatic_number(&Graph::complete(3)), 3);
        assert_eq!(chromatic_number(&Graph::cycle(5)), 3);
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(chromatic_number(&two_k2), 2);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()), 1);
    }

    #[test]
    fn profile_examples() {
        assert_eq!(sizes(&enumerate_coloring_profiles(&Graph::path(3), 2).unwrap()), vec![vec![1, 2]]);
        assert_eq!(sizes(&enumerate_coloring_profiles(&Graph::complete(3), 3).unwrap()), vec![vec![1, 1, 1]]);
        assert_eq!(sizes(&enumerate_coloring_profiles(&Graph::cycle(4), 2).unwrap()), vec![vec![2, 2]]);
    }

    #[test]
    fn profile_k_below_chi_is_distinct() {
        assert_eq!(
            enumerate_coloring_profiles(&Graph::complete(3), 2),
            Err(ProfileError::BelowChromaticNumber { k: 2, chi: 3 })
        );
        assert!(matches!(
            enumerate_coloring_profiles(&Graph::complete(3), 4),
            Err(ProfileError::AboveChromaticNumber { .. })
        ));
        assert!(matches!(
            enumerate_coloring_profiles(&Graph::complete(13), 13),
            Err(ProfileError::TooLarge { .. })
        ));
    }

    #[test]
    fn sigma_and_d_examples() {
        assert_eq!(sigma(&Graph::complete(3)).unwrap(), 1);
        assert_eq!(sigma(&Graph::cycle(4)).unwrap(), 2);
        assert_eq!(sigma(&k112()).unwrap(), 1);
        assert_eq!(d_set(&Graph::complete(3)).unwrap(), BTreeSet::from([0]));
        assert_eq!(d_set(&Graph::path(3)).unwrap(), BTreeSet::from([1]));
        assert_eq!(d_set(&k112()).unwrap(), BTreeSet::from([0, 1]));
    }

    #[test]
    fn hcf_examples() {
        assert_eq!(hcf_profile(&Graph::complete(3)).unwrap(), (HcfChi::Infinite, 3, false));
        assert_eq!(hcf_profile(&Graph::path(3)).unwrap(), (HcfChi::Finite(1), 3, false));
        // K_2 + P_3: colourings give totals {2,3} only, so D = {1}.
        let g = Graph::complete(2).disjoint_union(&Graph::path(3));
        assert_eq!(hcf_profile(&g).unwrap(), (HcfChi::Finite(1), 1, true));
    }

    #[test]
    fn chi_star_examples() {
        let p = chi_star(&Graph::complete(3)).unwrap();
        assert_eq!((p.chi_star, p.hcf_is_one), (Rational::int(3), false));
        let p = chi_star(&Graph::complete(2)).unwrap();
        assert_eq!(p.chi_cr, Rational::int(2));
        assert_eq!(p.d_set, BTreeSet::from([0]));
        assert_eq!(p.chi_star, Rational::int(2));
        let p = chi_star(&k112()).unwrap();
        assert_eq!(p.chi_cr, Rational::new(8, 3));
        assert_eq!(p.hcf_chi, HcfChi::Finite(1));
        assert!(p.hcf_is_one);
        assert_eq!(p.chi_star, Rational::new(8, 3));
    }

    #[test]
    fn chi_star_json_shape() {
        let v = serde_json::to_value(chi_star(&Graph::complete(3)).unwrap()).unwrap();
        assert_eq!(v["chi_star"], "3/1");
        assert_eq!(v["hcf_chi"], "inf");
        assert_eq!(v["d_set"], serde_json::json!([0]));
    }

    #[test]
    fn edgeless_pattern_rejected() {
        assert!(chi_star(&Graph::empty(3).unwrap()).is_err());
        assert!(chi_star(&Graph::empty(0).unwrap()).is_err());
    }
}
