//! Transversal copies of K(1, 1, 1) between three clusters, with and without
//! random bounded incompatibility systems.

use compat_tilings::graph::random_multipartite;
use compat_tilings::regcount::{counting_sweep, sweep_csv};
use compat_tilings::rng::stream;
use compat_tilings::solver::Budget;
use compat_tilings::{MultipartiteSpec, Rational};

fn main() -> compat_tilings::Result<()> {
    let (g, part) = random_multipartite(&[8, 8, 8], 0.7, &mut stream(5, 0))?;
    let parts: Vec<_> = (0..part.len()).map(|i| part.block_set(i, g.n())).collect();
    let spec = MultipartiteSpec::new(vec![1, 1, 1])?;
    let mus: Vec<Rational> = [0, 1, 2, 4].iter().map(|&k| Rational::new(k, 24)).collect();
    let rows = counting_sweep(&g, &parts, &spec, &mus, 5, Budget::DEFAULT)?;
    print!("{}", sweep_csv(&rows));
    Ok(())
}
