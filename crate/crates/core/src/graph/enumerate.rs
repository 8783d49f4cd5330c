//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Order `n` graphs are produced from the order `n-1` representatives by
//! adding one vertex with every possible neighbourhood and keeping one graph
//! per canonical code. Results are cached per order and sorted by
//! `(edge count, canonical code)`, so the sequence is the same on every run.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::iso::{canonical_code, canonical_form};
use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 8;

static ALL: [OnceLock<Vec<Graph>>; MAX_ENUMERATION_ORDER + 1] = [const { OnceLock::new() }; MAX_ENUMERATION_ORDER + 1];
static CONNECTED: [OnceLock<Vec<Graph>>; MAX_ENUMERATION_ORDER + 1] =
    [const { OnceLock::new() }; MAX_ENUMERATION_ORDER + 1];

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ENUMERATION_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange(n))
    }
}

/// One representative per isomorphism class of graphs of order `n`.
pub fn enumerate_all(n: usize) -> Result<&'static [Graph]> {
    check_order(n)?;
    Ok(ALL[n].get_or_init(|| build_order(n)))
}

/// One representative per isomorphism class of connected graphs of order `n`.
pub fn enumerate_connected(n: usize) -> Result<&'static [Graph]> {
    check_order(n)?;
    Ok(CONNECTED[n].get_or_init(|| {
        enumerate_all(n).expect("order checked").iter().filter(|g| g.is_connected()).cloned().collect()
    }))
}

fn build_order(n: usize) -> Vec<Graph> {
    if n == 1 {
        return vec![Graph::empty(1).expect("order 1")];
    }
    let parents = enumerate_all(n - 1).expect("order checked");
    let mut seen = HashMap::new();
    for parent in parents {
        let base: Vec<u64> = parent.rows().to_vec();
        for nbrs in 0u64..(1u64 << (n - 1)) {
            let mut rows = base.clone();
            rows.push(nbrs);
            for (u, row) in rows.iter_mut().enumerate().take(n - 1) {
                if nbrs >> u & 1 == 1 {
                    *row |= 1 << (n - 1);
                }
            }
            let g = Graph::from_rows(rows);
            let code = canonical_code(&g).expect("enumeration orders are within the iso limit");
            seen.entry(code).or_insert(g);
        }
    }
    let mut out: Vec<_> =
        seen.into_iter().map(|(code, g)| (g.edge_count(), code, canonical_form(&g).expect("iso limit"))).collect();
    out.sort_by_key(|a| (a.0, a.1));
    out.into_iter().map(|(_, _, g)| g).collect()
}
