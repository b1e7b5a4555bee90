//! Densities, exhaustive ε-regularity and the reduced graph of a random
//! three-cluster graph.

use compat_tilings::graph::random_multipartite;
use compat_tilings::regcount::{is_eps_regular_exhaustive, pair_stats, reduced_graph};
use compat_tilings::rng::stream;
use compat_tilings::Rational;

fn main() -> compat_tilings::Result<()> {
    let (g, part) = random_multipartite(&[6, 6, 6], 0.6, &mut stream(3, 0))?;
    let (x, y) = (part.block(0).to_vec(), part.block(1).to_vec());
    let s = pair_stats(&g, &x, &y)?;
    println!("d(V_1, V_2) = {} from {} edges", s.density, s.edges);
    for eps in [Rational::new(1, 10), Rational::new(1, 4), Rational::new(1, 2)] {
        let r = is_eps_regular_exhaustive(&g, &x, &y, eps, None)?;
        match &r.witness {
            None => println!("ε = {eps}: regular"),
            Some(w) => println!("ε = {eps}: irregular, A = {:?}, B = {:?}, d(A, B) = {}", w.a, w.b, w.density),
        }
    }
    let r = reduced_graph(&g, &part, Rational::new(1, 3), Rational::new(1, 4))?;
    println!("reduced graph at ε = 1/3, d = 1/4: edges {:?}", r.edges);
    Ok(())
}
