//! Simple undirected graphs over dense vertex ids, vertex partitions and the
//! standard constructors the rest of the crate builds on.

mod io;
mod random;

pub use io::{parse_graph, parse_partition, write_graph, write_partition};
pub use random::{gnp, min_degree_graph, random_multipartite};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::chromatic;
use crate::error::{precondition, Error, Result};

/// Undirected simple graph on vertices `0..n` with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    pub const MAX_VERTICES: usize = 1 << 16;

    pub fn empty(n: usize) -> Result<Graph> {
        if n > Self::MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::new(n); n], m: 0 })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("complete graph order within cap");
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Adds `uv`; returns false when the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Ok(false);
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        Ok(true)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u < self.n && v < self.n && self.adj[u].remove(v) {
            self.adj[v].remove(u);
            self.m -= 1;
            true
        } else {
            false
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn set_of(&self, vs: &[usize]) -> Result<VertexSet> {
        for &v in vs {
            self.check_vertex(v)?;
        }
        Ok(VertexSet::from_slice(self.n, vs))
    }

    /// Number of edges with one end in `x` and the other in `y`.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> usize {
        x.iter().map(|u| self.adj[u].intersection_len(y)).sum()
    }

    /// Induced subgraph on `keep`, relabelled to `0..|keep|` in increasing
    /// order; the returned vector maps new ids back to old ones.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Graph::empty(old.len()).unwrap();
        for (i, &u) in old.iter().enumerate() {
            for v in self.adj[u].iter() {
                let j = new_id[v];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        (g, old)
    }

    /// Checks the structural invariants: symmetric rows, no loops and an
    /// edge count equal to half the sum of degrees.
    pub fn validate(&self) -> Result<()> {
        let mut total = 0;
        for u in 0..self.n {
            if self.adj[u].contains(u) {
                return Err(Error::SelfLoop(u));
            }
            for v in self.adj[u].iter() {
                if v >= self.n || !self.adj[v].contains(u) {
                    return Err(Error::Consistency(format!("asymmetric adjacency at {u}-{v}")));
                }
            }
            total += self.adj[u].len();
        }
        if total != 2 * self.m {
            return Err(Error::Consistency("edge count mismatch".into()));
        }
        Ok(())
    }
}

/// Ordered list of pairwise disjoint, non-empty blocks covering a ground set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
    #[serde(skip)]
    block_of: Vec<Option<usize>>,
}

impl VertexPartition {
    /// Builds a partition of a subset of `0..n`. Blocks keep their given
    /// order; vertices inside a block are sorted.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<VertexPartition> {
        let mut block_of = vec![None; n];
        let mut sorted = Vec::with_capacity(blocks.len());
        for (i, mut b) in blocks.into_iter().enumerate() {
            if b.is_empty() {
                return Err(precondition(format!("block {i} is empty")));
            }
            b.sort_unstable();
            for &v in &b {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if let Some(j) = block_of[v] {
                    return Err(precondition(format!("vertex {v} lies in blocks {j} and {i}")));
                }
                block_of[v] = Some(i);
            }
            sorted.push(b);
        }
        Ok(VertexPartition { blocks: sorted, block_of })
    }

    /// Consecutive blocks of the given sizes over `0..Σ sizes`.
    pub fn consecutive(sizes: &[usize]) -> Result<VertexPartition> {
        let n = sizes.iter().sum();
        let mut next = 0;
        let blocks = sizes
            .iter()
            .map(|&s| {
                let b: Vec<usize> = (next..next + s).collect();
                next += s;
                b
            })
            .collect();
        VertexPartition::new(n, blocks)
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.block_of.get(v).copied().flatten()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Number of vertices covered.
    pub fn ground_len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn covers(&self, n: usize) -> bool {
        self.block_of.len() >= n && (0..n).all(|v| self.block_of[v].is_some())
    }

    pub fn block_set(&self, i: usize, n: usize) -> VertexSet {
        VertexSet::from_slice(n, &self.blocks[i])
    }
}

/// Part sizes `h_1, ..., h_r` of a complete multipartite graph `K_r(h_1, ..., h_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartiteSpec(Vec<usize>);

impl MultipartiteSpec {
    pub fn new(parts: Vec<usize>) -> Result<MultipartiteSpec> {
        if parts.is_empty() {
            return Err(precondition("multipartite spec needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(precondition("multipartite part sizes must be positive"));
        }
        Ok(MultipartiteSpec(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }
}

/// `K_r(h_1, ..., h_r)` on consecutive vertex ids, together with its parts.
pub fn complete_multipartite(spec: &MultipartiteSpec) -> (Graph, VertexPartition) {
    let part = VertexPartition::consecutive(spec.parts()).expect("positive part sizes");
    let n = spec.order();
    let mut g = Graph::empty(n).expect("multipartite order within cap");
    for u in 0..n {
        for v in u + 1..n {
            if part.block_of(u) != part.block_of(v) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    (g, part)
}

/// Recognizes a complete multipartite graph: non-adjacency must be an
/// equivalence relation. Parts are listed by minimum vertex.
pub fn as_complete_multipartite(g: &Graph) -> Option<(MultipartiteSpec, VertexPartition)> {
    if g.n() == 0 {
        return None;
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut assigned = g.empty_set();
    for v in 0..g.n() {
        if assigned.contains(v) {
            continue;
        }
        let block = g.vertex_set().difference(g.neighbors(v));
        if !block.is_disjoint(&assigned) {
            return None;
        }
        for u in block.iter() {
            let other = g.vertex_set().difference(g.neighbors(u));
            if other != block {
                return None;
            }
        }
        assigned.union_with(&block);
        blocks.push(block.to_vec());
    }
    let spec = MultipartiteSpec::new(blocks.iter().map(Vec::len).collect()).ok()?;
    let part = VertexPartition::new(g.n(), blocks).ok()?;
    Some((spec, part))
}

/// Bottle graph of `h`: complete `χ(h)`-partite graph with part sizes
/// `(r-1)σ, h-σ, ..., h-σ`.
pub fn bottle_graph(h: &Graph) -> Result<(Graph, VertexPartition)> {
    if h.n() == 0 {
        return Err(precondition("bottle graph of the empty pattern"));
    }
    let r = chromatic::chromatic_number(h);
    let sigma = chromatic::sigma(h)?;
    let order = h.n();
    let mut parts = vec![(r - 1) * sigma];
    parts.extend(std::iter::repeat_n(order - sigma, r - 1));
    // r = 1 leaves a single part of size zero; report it as a precondition.
    let spec = MultipartiteSpec::new(parts)
        .map_err(|_| precondition("bottle graph needs chromatic number at least 2"))?;
    Ok(complete_multipartite(&spec))
}

/// Connected components, each sorted, listed by minimum vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = g.empty_set();
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen.contains(s) {
            continue;
        }
        let mut comp = vec![s];
        seen.insert(s);
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            for w in g.neighbors(u).iter() {
                if seen.insert(w) {
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// `∩ N(v)` over the non-empty list `vs`.
pub fn common_neighborhood(g: &Graph, vs: &[usize]) -> Result<VertexSet> {
    let (&first, rest) = vs.split_first().ok_or_else(|| precondition("empty vertex list"))?;
    g.check_vertex(first)?;
    let mut acc = g.neighbors(first).clone();
    for &v in rest {
        g.check_vertex(v)?;
        acc.intersect_with(g.neighbors(v));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(p: &[usize]) -> MultipartiteSpec {
        MultipartiteSpec::new(p.to_vec()).unwrap()
    }

    #[test]
    fn multipartite_examples() {
        let (g, p) = complete_multipartite(&spec(&[1, 1, 1]));
        assert_eq!(g, Graph::complete(3));
        assert_eq!(p.len(), 3);
        let (g, _) = complete_multipartite(&spec(&[2, 2]));
        assert_eq!(g.edge_count(), 4);
        assert!(g.neighbors(0).to_vec() == vec![2, 3]);
        let (g, _) = complete_multipartite(&spec(&[1, 1, 2]));
        assert_eq!((g.n(), g.edge_count()), (4, 5));
    }

    #[test]
    fn recognizes_multipartite() {
        let (g, _) = complete_multipartite(&spec(&[1, 1, 2]));
        let (s, p) = as_complete_multipartite(&g).unwrap();
        assert_eq!(s.parts(), &[1, 1, 2]);
        assert_eq!(p.block(2), &[2, 3]);
        assert_eq!(as_complete_multipartite(&Graph::cycle(4)).unwrap().0.parts(), &[2, 2]);
        assert!(as_complete_multipartite(&Graph::path(4)).is_none());
        assert!(as_complete_multipartite(&Graph::cycle(5)).is_none());
    }

    #[test]
    fn bottle_graph_examples() {
        let (_, p) = bottle_graph(&Graph::complete(3)).unwrap();
        assert_eq!(p.block_sizes(), vec![2, 2, 2]);
        let (g, _) = bottle_graph(&Graph::complete(2)).unwrap();
        assert_eq!(g, Graph::complete(2));
        let (k112, _) = complete_multipartite(&spec(&[1, 1, 2]));
        let (_, p) = bottle_graph(&k112).unwrap();
        assert_eq!(p.block_sizes(), vec![2, 3, 3]);
    }

    #[test]
    fn bottle_graph_rejects_edgeless() {
        assert!(bottle_graph(&Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn component_examples() {
        assert_eq!(components(&Graph::complete(3)), vec![vec![0, 1, 2]]);
        let g = Graph::complete(2).disjoint_union(&Graph::complete(3));
        let orders: Vec<_> = components(&g).iter().map(Vec::len).collect();
        assert_eq!(orders, vec![2, 3]);
        let e = Graph::empty(4).unwrap();
        assert_eq!(components(&e), vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn common_neighborhood_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(common_neighborhood(&k4, &[0, 1]).unwrap().to_vec(), vec![2, 3]);
        let c5 = Graph::cycle(5);
        assert_eq!(common_neighborhood(&c5, &[0, 2]).unwrap().to_vec(), vec![1]);
        assert_eq!(common_neighborhood(&c5, &[3]).unwrap(), *c5.neighbors(3));
        assert!(common_neighborhood(&c5, &[]).is_err());
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(matches!(Graph::empty(Graph::MAX_VERTICES + 1), Err(Error::TooLarge(_))));
        assert!(VertexPartition::new(3, vec![vec![0], vec![0, 1]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![]]).is_err());
        assert!(MultipartiteSpec::new(vec![]).is_err());
        assert!(MultipartiteSpec::new(vec![1, 0]).is_err());
    }

    #[test]
    fn induced_relabels() {
        let c5 = Graph::cycle(5);
        let (g, map) = c5.induced(&VertexSet::from_slice(5, &[0, 1, 2]));
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }
}
