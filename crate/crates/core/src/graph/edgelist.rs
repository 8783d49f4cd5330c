//! Plain edge-list text: a header line `n m`, then `m` lines `u v`, 0-based.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::MalformedEdgeList("missing header".into()))?;
    let (n, m) = parse_pair(header, "header")?;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let line = lines.next().ok_or_else(|| Error::MalformedEdgeList(format!("expected {m} edges, found {i}")))?;
        edges.push(parse_pair(line, "edge")?);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::MalformedEdgeList(format!("unexpected trailing line {extra:?}")));
    }
    Graph::build(n, &edges)
}

fn parse_pair(line: &str, what: &str) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace().map(str::parse::<usize>);
    match (parts.next(), parts.next(), parts.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::MalformedEdgeList(format!("bad {what} line {line:?}"))),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}
