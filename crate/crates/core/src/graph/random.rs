use rand::seq::SliceRandom;
use rand::Rng as _;

use super::{Graph, VertexPartition};
use crate::error::{precondition, Result};
use crate::rng::Rng;

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, rng: &mut Rng) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Random graph with `δ(G) >= min_degree`: starts from `K_n` and deletes a
/// random `fraction` of the edges, skipping any deletion that would push an
/// endpoint below the degree floor.
pub fn min_degree_graph(n: usize, min_degree: usize, fraction: f64, rng: &mut Rng) -> Result<Graph> {
    if n > 0 && min_degree > n - 1 {
        return Err(precondition(format!("min degree {min_degree} impossible on {n} vertices")));
    }
    let mut g = Graph::complete(n);
    let mut edges = g.edges();
    edges.shuffle(rng);
    let target = (edges.len() as f64 * fraction.clamp(0.0, 1.0)) as usize;
    let mut removed = 0;
    for (u, v) in edges {
        if removed >= target {
            break;
        }
        if g.degree(u) > min_degree && g.degree(v) > min_degree {
            g.remove_edge(u, v);
            removed += 1;
        }
    }
    Ok(g)
}

/// Random multipartite graph: each cross-part pair is an edge with
/// probability `p`; parts are consecutive blocks.
pub fn random_multipartite(sizes: &[usize], p: f64, rng: &mut Rng) -> Result<(Graph, VertexPartition)> {
    let part = VertexPartition::consecutive(sizes)?;
    let n = part.ground_len();
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if part.block_of(u) != part.block_of(v) && rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok((g, part))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream;

    #[test]
    fn min_degree_respected() {
        for seed in 0..5 {
            let g = min_degree_graph(30, 20, 0.5, &mut stream(seed, 0)).unwrap();
            assert!(g.min_degree() >= 20);
            assert!(g.edge_count() < 435);
            g.validate().unwrap();
        }
    }

    #[test]
    fn multipartite_has_no_inner_edges() {
        let (g, p) = random_multipartite(&[4, 5, 6], 0.7, &mut stream(1, 2)).unwrap();
        for (u, v) in g.edges() {
            assert_ne!(p.block_of(u), p.block_of(v));
        }
    }
}
