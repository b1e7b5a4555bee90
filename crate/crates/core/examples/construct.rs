//! Extremal instances: the base graph alone, then a circulant augmentation
//! with its incompatibility system and certificates.

use compat_tilings::construct::{augment_with, base_graph, Base, CappedCirculant, Circulant, ConstructionSpec};
use compat_tilings::solver::{find_compatible_factor, Budget};
use compat_tilings::{Graph, Rational};

fn main() -> compat_tilings::Result<()> {
    let k3 = Graph::complete(3);
    for n in [6, 9, 12] {
        let b = base_graph(Base::KuhnOsthus, &k3, n)?;
        let factor = find_compatible_factor(&k3, &b.graph, &compat_tilings::IncompatibilitySystem::empty(&b.graph), Budget::DEFAULT)?;
        println!("base n = {n}: parts {:?}, δ = {}, triangle factor: {}", b.report.part_sizes, b.report.min_degree, factor.is_found());
    }

    let spec = ConstructionSpec { pattern: k3.clone(), n: 30, mu: Rational::new(2, 15), base: Base::KuhnOsthus, seed: 0 };
    let strict = augment_with(&spec, &Circulant)?;
    let c = &strict.certificates;
    println!("strict n = 30, μ = 2/15: δ = {} ≥ {}: {}, Δ = {}, all certificates: {}", c.min_degree, c.min_degree_target, c.min_degree_ok, c.delta, c.all_ok());

    let spec = ConstructionSpec { n: 12, mu: Rational::new(1, 6), ..spec };
    let capped = augment_with(&spec, &CappedCirculant)?;
    let out = find_compatible_factor(&k3, &capped.graph, &capped.system, Budget::DEFAULT)?;
    println!("capped n = 12, μ = 1/6: all certificates: {}, compatible factor: {}", capped.certificates.all_ok(), out.is_found());
    Ok(())
}
