//! Index vectors of copies and the lattice they generate.

use compat_tilings::absorb::{find_transferral, index_vector, split_transferral, GeneratedLattice};
use compat_tilings::graph::complete_multipartite;
use compat_tilings::solver::{enumerate_compatible_copies, Budget};
use compat_tilings::{Graph, IncompatibilitySystem, MultipartiteSpec};

fn main() -> compat_tilings::Result<()> {
    let (g, parts) = complete_multipartite(&MultipartiteSpec::new(vec![3, 3, 3])?);
    let h = Graph::path(3);
    let f = IncompatibilitySystem::empty(&g);
    let copies = enumerate_compatible_copies(&h, &g, &f, Budget::DEFAULT)?;
    let mut gens: Vec<Vec<i64>> = copies.copies.iter().map(|c| index_vector(&c.vertices, &parts)).collect::<Result<_, _>>()?;
    gens.sort();
    gens.dedup();
    println!("{} copies of P_3, distinct index vectors: {gens:?}", copies.copies.len());

    let l = GeneratedLattice::new(parts.len(), gens)?;
    println!("rank {}, HNF {:?}", l.rank(), l.basis());
    for x in [[1, 1, 1], [1, 0, 0], [2, -1, 2]] {
        println!("{x:?} ∈ L: {:?}", l.membership(&x)?.coefficients);
    }
    if let Some(t) = find_transferral(&l)? {
        let s = split_transferral(&t.coefficients)?;
        println!("u_{} - u_{} ∈ L with p = {:?}, q = {:?}, C = {}", t.i + 1, t.j + 1, s.p, s.q, s.c);
    }
    Ok(())
}
