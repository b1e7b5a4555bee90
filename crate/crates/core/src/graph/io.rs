//! Plain-text graph and partition formats.
//!
//! Graph: first line `n m`, then `m` lines `u v` with `0 <= u < v < n`.
//! Partition: one line per block, space-separated vertex ids.

use std::fmt::Write as _;

use super::{Graph, VertexPartition};
use crate::error::{parse_error, Result};

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| parse_error(line, format!("expected a non-negative integer, found {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| parse_error(1, "missing header line \"n m\""))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_error(hl + 1, "header must be \"n m\""));
    }
    let n = parse_usize(toks[0], hl + 1)?;
    let m = parse_usize(toks[1], hl + 1)?;
    let mut g = Graph::empty(n).map_err(|e| parse_error(hl + 1, e.to_string()))?;
    let mut seen = 0;
    for (i, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_error(i + 1, "edge line must be \"u v\""));
        }
        let u = parse_usize(toks[0], i + 1)?;
        let v = parse_usize(toks[1], i + 1)?;
        if u >= v || v >= n {
            return Err(parse_error(i + 1, format!("edge {u} {v} violates 0 <= u < v < {n}")));
        }
        if !g.add_edge(u, v).map_err(|e| parse_error(i + 1, e.to_string()))? {
            return Err(parse_error(i + 1, format!("duplicate edge {u} {v}")));
        }
        seen += 1;
    }
    if seen != m {
        return Err(parse_error(hl + 1, format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses a partition of a subset of `0..n`.
pub fn parse_partition(text: &str, n: usize) -> Result<VertexPartition> {
    let mut blocks = Vec::new();
    let mut first_line = 1;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        if blocks.is_empty() {
            first_line = i + 1;
        }
        let block = line.split_whitespace().map(|t| parse_usize(t, i + 1)).collect::<Result<Vec<_>>>()?;
        blocks.push(block);
    }
    VertexPartition::new(n, blocks).map_err(|e| parse_error(first_line, e.to_string()))
}

pub fn write_partition(p: &VertexPartition) -> String {
    let mut out = String::new();
    for b in p.blocks() {
        let line: Vec<String> = b.iter().map(usize::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_c5() {
        let g = Graph::cycle(5);
        let text = write_graph(&g);
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("3 1\n1 0\n").is_err());
        assert!(parse_graph("3 2\n0 1\n").is_err());
        assert!(parse_graph("3 2\n0 1\n0 1\n").is_err());
        assert!(parse_graph("3 1\n0 x\n").is_err());
        assert!(parse_graph("2 1\n0 2\n").is_err());
    }

    #[test]
    fn partition_roundtrip() {
        let p = parse_partition("0 2\n1 3 4\n", 5).unwrap();
        assert_eq!(p.block_sizes(), vec![2, 3]);
        assert_eq!(p.block_of(3), Some(1));
        assert_eq!(write_partition(&p), "0 2\n1 3 4\n");
        assert!(parse_partition("0 1\n1\n", 3).is_err());
    }
}
