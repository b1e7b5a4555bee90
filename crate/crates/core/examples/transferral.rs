//! Merging two blocks through a transferral: piece connectors between
//! matched vertices are chained into a single connector for x, y.

use compat_tilings::absorb::{find_connector, merge_via_transferral, Connector, ConnectorSearch, Problem, TransferralPlan};
use compat_tilings::{Graph, IncompatibilitySystem, VertexPartition, VertexSet};

fn main() -> compat_tilings::Result<()> {
    let g = Graph::from_edges(10, &[(2, 3), (4, 5), (0, 6), (6, 2), (1, 7), (7, 4), (3, 8), (8, 5)])?;
    let part = VertexPartition::new(10, vec![vec![0, 2, 6, 9], vec![1, 3, 4, 5, 7, 8]])?;
    let h = Graph::complete(2);
    let f = IncompatibilitySystem::empty(&g);
    let p = Problem::new(&h, &g, &f);

    let plan = TransferralPlan {
        partition: &part,
        i: 0,
        j: 1,
        x: 0,
        y: 1,
        family_p: vec![vec![2, 3]],
        family_q: vec![vec![4, 5]],
        coefficients: Some((vec![vec![1, 1], vec![0, 2]], vec![1, -1])),
        t: 1,
        avoid: vec![],
    };
    let mut provide = |u: usize, v: usize, avoid: &VertexSet| -> compat_tilings::Result<Option<Connector>> {
        Ok(match find_connector(u, v, &avoid.to_vec(), plan.t, &p)? {
            ConnectorSearch::Found { connector, .. } => Some(connector),
            _ => None,
        })
    };
    let m = merge_via_transferral(&plan, &p, &mut provide)?;
    for piece in &m.pieces {
        println!("{}: {} ~ {} via {:?}", piece.label, piece.u, piece.v, piece.set);
    }
    println!("C = {}, pairs {:?}", m.c, m.pairs);
    println!("merged connector for 0, 1: S = {:?}, t = {}", m.connector.set, m.connector.t);
    Ok(())
}
