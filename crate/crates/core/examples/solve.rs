//! Exact factor search, maximum tiling, greedy tiling and copy enumeration
//! on a random host with a random bounded incompatibility system.

use compat_tilings::graph::gnp;
use compat_tilings::incompat::random_bounded_system;
use compat_tilings::rng::stream;
use compat_tilings::solver::{enumerate_compatible_copies, find_compatible_factor, greedy_almost_tiling, max_compatible_tiling, Budget};
use compat_tilings::{Graph, Rational};

fn main() -> compat_tilings::Result<()> {
    let h = Graph::complete(3);
    let g = gnp(15, 0.7, &mut stream(1, 0))?;
    let f = random_bounded_system(&g, Rational::new(1, 15), 1)?;
    println!("host: {} vertices, {} edges, {} incompatible pairs", g.n(), g.edge_count(), f.pair_count());

    let copies = enumerate_compatible_copies(&h, &g, &f, Budget::DEFAULT)?;
    println!("compatible triangles: {}", copies.copies.len());

    match find_compatible_factor(&h, &g, &f, Budget::DEFAULT)?.tiling() {
        Some(t) => println!("factor: {:?}", t.copies.iter().map(|c| &c.vertices).collect::<Vec<_>>()),
        None => println!("no compatible factor"),
    }
    let m = max_compatible_tiling(&h, &g, &f, Budget::DEFAULT)?;
    println!("maximum tiling: {} copies (optimal: {})", m.tiling.len(), m.optimal);
    let greedy = greedy_almost_tiling(&h, &g, &f, 1)?;
    println!("greedy tiling: {} copies, {} uncovered", greedy.tiling.len(), greedy.uncovered);
    Ok(())
}
