//! Connectors, their concatenation and an absorber assembled from them.

use compat_tilings::absorb::{assemble_absorber, concatenate_connectors, find_connector, reachability_estimate, ConnectorSearch, Problem, SetSampling};
use compat_tilings::{Graph, IncompatibilitySystem};

fn main() -> compat_tilings::Result<()> {
    let h = Graph::complete(3);
    let g = Graph::complete(12);
    let f = IncompatibilitySystem::from_triples(&g, &[(0, 1, 2), (0, 1, 3)])?;
    let p = Problem::new(&h, &g, &f);

    let ConnectorSearch::Found { connector: c1, nodes } = find_connector(0, 1, &[], 1, &p)? else {
        unreachable!("K_12 connects every pair")
    };
    println!("connector for 0, 1: S = {:?} (t = {}, {nodes} nodes)", c1.set, c1.t);
    let used: Vec<usize> = c1.set.iter().copied().chain([0]).collect();
    let ConnectorSearch::Found { connector: c2, .. } = find_connector(1, 5, &used, 1, &p)? else {
        unreachable!()
    };
    let joined = concatenate_connectors(&c1, &c2, &p)?;
    println!("concatenated 0 ~ 5: S = {:?}, t = {}", joined.set, joined.t);

    let s = [0, 1, 2];
    let copy = [3, 4, 5];
    let mut avoid: Vec<usize> = s.iter().chain(&copy).copied().collect();
    let mut pieces = Vec::new();
    for (&a, &b) in s.iter().zip(&copy) {
        let ConnectorSearch::Found { connector, .. } = find_connector(a, b, &avoid, 1, &p)? else {
            unreachable!()
        };
        avoid.extend(&connector.set);
        pieces.push(connector);
    }
    let absorber = assemble_absorber(&s, &copy, &pieces, &p)?;
    println!("absorber for {s:?}: A = {:?}", absorber.set);

    let reach = reachability_estimate(0, 1, 2, 1, SetSampling::default(), &p)?;
    println!("(K_3, 2, 1)-reachability of 0, 1: {reach:?}");
    Ok(())
}
