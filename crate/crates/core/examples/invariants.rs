//! Chromatic invariants of a few small patterns.

use compat_tilings::chromatic::chi_star;
use compat_tilings::graph::complete_multipartite;
use compat_tilings::{Graph, MultipartiteSpec};

fn main() -> compat_tilings::Result<()> {
    let patterns = [
        ("K_3", Graph::complete(3)),
        ("C_5", Graph::cycle(5)),
        ("P_4", Graph::path(4)),
        ("K_4", Graph::complete(4)),
        ("K(1,1,2)", complete_multipartite(&MultipartiteSpec::new(vec![1, 1, 2])?).0),
        ("K(1,2,2)", complete_multipartite(&MultipartiteSpec::new(vec![1, 2, 2])?).0),
    ];
    println!("{:<10} {:>3} {:>3} {:>7} {:>7} hcf=1", "pattern", "χ", "σ", "χ_cr", "χ*");
    for (name, h) in &patterns {
        let p = chi_star(h)?;
        println!("{name:<10} {:>3} {:>3} {:>7} {:>7} {}", p.chi, p.sigma, p.chi_cr.to_string(), p.chi_star.to_string(), p.hcf_is_one);
    }
    Ok(())
}
