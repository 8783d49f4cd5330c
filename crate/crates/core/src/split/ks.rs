//! Split recognition and KS-partitions.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, NamedPattern, VertexSet};
use crate::invariants::{clique_number, contains_induced, independence_number};

/// A partition of the vertex set into a clique `k` and an independent set `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KSPartition {
    pub k: VertexSet,
    pub s: VertexSet,
}

impl KSPartition {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if !self.k.intersection(self.s).is_empty() {
            return Err(Error::InvalidPartition(format!("K and S overlap in {}", self.k.intersection(self.s))));
        }
        if self.k.union(self.s) != g.vertices() {
            return Err(Error::InvalidPartition("K and S do not cover V".into()));
        }
        if !g.is_clique(self.k) {
            return Err(Error::InvalidPartition(format!("K = {} is not a clique", self.k)));
        }
        if !g.is_independent(self.s) {
            return Err(Error::InvalidPartition(format!("S = {} is not independent", self.s)));
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }
}

/// Size profile of a KS-partition relative to `(omega, alpha)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum KSCase {
    /// `|K| = omega`, `|S| = alpha`
    I,
    /// `|K| = omega - 1`, `|S| = alpha`
    II,
    /// `|K| = omega`, `|S| = alpha - 1`
    III,
}

impl fmt::Display for KSCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            KSCase::I => "I",
            KSCase::II => "II",
            KSCase::III => "III",
        };
        f.write_str(s)
    }
}

/// Split test by forbidden induced subgraphs 2K2, C4 and C5.
pub fn is_split_forbidden(g: &Graph) -> bool {
    [NamedPattern::TwoK2, NamedPattern::C4, NamedPattern::C5].into_iter().all(|p| !contains_induced(g, p))
}

/// Vertices by non-increasing degree (ties by label) and the threshold
/// `m = max { i : d_i >= i - 1 }` (1-based).
fn degree_threshold(g: &Graph) -> (Vec<usize>, usize) {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = order.iter().enumerate().filter(|&(i, &v)| g.degree(v) >= i).map(|(i, _)| i + 1).max().unwrap_or(0);
    (order, m)
}

/// Split test from the degree sequence:
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`.
pub fn is_split_degrees(g: &Graph) -> bool {
    let (order, m) = degree_threshold(g);
    let head: usize = order[..m].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = order[m..].iter().map(|&v| g.degree(v)).sum();
    head == m * (m - 1) + tail
}

/// Default split recognizer.
pub fn is_split(g: &Graph) -> bool {
    is_split_degrees(g)
}

/// A KS-partition with `|K|` as large as possible; among those, the one with
/// the lexicographically smallest `K`.
pub fn ks_partition(g: &Graph) -> Result<KSPartition> {
    if !is_split_degrees(g) {
        return Err(Error::NotSplit);
    }
    let (order, m) = degree_threshold(g);
    let head = VertexSet::from_vertices(order[..m].iter().copied());
    let mut p = repair(g, KSPartition { k: head, s: g.vertices().difference(head) }).ok_or(Error::NotSplit)?;

    // grow K to a maximum clique: any omega-clique has at most one S vertex
    if let Some(x) = p.s.iter().find(|&x| p.k.is_subset(g.neighbors(x))) {
        p.k.insert(x);
        p.s.remove(x);
    }

    // other maximum-K partitions differ from p by a single swap
    let mut best = p;
    for k in p.k.iter() {
        let rest = p.k.difference(VertexSet::singleton(k));
        for s in p.s.iter() {
            let cand = KSPartition {
                k: rest.union(VertexSet::singleton(s)),
                s: p.s.difference(VertexSet::singleton(s)).union(VertexSet::singleton(k)),
            };
            if lex_less(cand.k, best.k) && cand.is_valid(g) {
                best = cand;
            }
        }
    }
    best.validate(g)?;
    Ok(best)
}

fn repair(g: &Graph, p: KSPartition) -> Option<KSPartition> {
    if p.is_valid(g) {
        return Some(p);
    }
    let moves_out =
        p.k.iter()
            .map(|v| KSPartition { k: p.k.difference(VertexSet::singleton(v)), s: p.s.union(VertexSet::singleton(v)) });
    let moves_in =
        p.s.iter()
            .map(|v| KSPartition { k: p.k.union(VertexSet::singleton(v)), s: p.s.difference(VertexSet::singleton(v)) });
    moves_out.chain(moves_in).find(|q| q.is_valid(g))
}

/// Lexicographic order on ascending vertex lists.
pub(crate) fn lex_less(a: VertexSet, b: VertexSet) -> bool {
    a.iter().cmp(b.iter()) == std::cmp::Ordering::Less
}

pub fn classify_ks_case(g: &Graph, p: &KSPartition) -> Result<KSCase> {
    p.validate(g)?;
    let (omega, alpha) = (clique_number(g), independence_number(g));
    let (k, s) = (p.k.len(), p.s.len());
    if k == omega && s == alpha {
        Ok(KSCase::I)
    } else if k + 1 == omega && s == alpha {
        Ok(KSCase::II)
    } else if k == omega && s + 1 == alpha {
        Ok(KSCase::III)
    } else {
        Err(Error::UnclassifiablePartition { k, s, omega, alpha })
    }
}

/// Balanced iff `omega + alpha = n`.
pub fn is_balanced_split(g: &Graph) -> Result<bool> {
    if !is_split(g) {
        return Err(Error::NotSplit);
    }
    Ok(clique_number(g) + independence_number(g) == g.order())
}

/// `Some(m)` if `g` is the star `K_{1,m}`; `K1` counts as `m = 0`.
pub fn star_size(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n == 1 {
        return Some(0);
    }
    if g.edge_count() != n - 1 {
        return None;
    }
    (0..n).any(|c| g.degree(c) == n - 1).then_some(n - 1)
}

pub fn is_star(g: &Graph) -> bool {
    star_size(g).is_some()
}
