//! Isomorphism testing and canonical forms for small graphs.
//!
//! [`is_isomorphic`] is a direct backtracking search over vertex bijections,
//! pruned by degree. [`canonical_form`] uses individualization and
//! refinement: vertices are first split into cells by iterated neighbour
//! counts, then the search branches on members of the first non-singleton
//! cell. Every leaf yields a labelling; the lexicographically smallest
//! adjacency code over all leaves is the canonical code. Refinement only
//! depends on the graph's structure, so the leaf set and its minimum are
//! invariant under relabelling.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ISO_ORDER: usize = 12;

/// Upper-triangle adjacency bits of a labelled graph, `x(0,1)` most
/// significant, followed by the order. Equal codes mean equal graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: u8,
    bits: u128,
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > MAX_ISO_ORDER {
            return Err(Error::OrderTooLargeForIsomorphism(x.order()));
        }
    }
    Ok(isomorphic_unchecked(g, h))
}

pub(crate) fn isomorphic_unchecked(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    let (gdeg, hdeg) = (dg.clone(), dh.clone());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    // map high-degree vertices first; they constrain the most
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(gdeg[v]));
    let mut image = vec![usize::MAX; n];
    let mut used = 0u64;
    extend(g, h, &gdeg, &hdeg, &order, 0, &mut image, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    gdeg: &[usize],
    hdeg: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.order() {
        if *used >> w & 1 == 1 || hdeg[w] != gdeg[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&x| g.has_edge(v, x) == h.has_edge(w, image[x]));
        if !consistent {
            continue;
        }
        image[v] = w;
        *used |= 1 << w;
        if extend(g, h, gdeg, hdeg, order, depth + 1, image, used) {
            return true;
        }
        *used &= !(1 << w);
        image[v] = usize::MAX;
    }
    false
}

/// Canonical code of `g`; two graphs are isomorphic iff their codes match.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    Ok(canonical_labelling(g)?.0)
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, perm) = canonical_labelling(g)?;
    g.relabel(&perm)
}

/// Returns the canonical code and a labelling `perm` (vertex `v` goes to
/// `perm[v]`) that realises it.
fn canonical_labelling(g: &Graph) -> Result<(CanonicalCode, Vec<usize>)> {
    let n = g.order();
    if n > MAX_ISO_ORDER {
        return Err(Error::OrderTooLargeForIsomorphism(n));
    }
    let cells = refine(g, vec![(0..n).collect()]);
    let mut best: Option<(CanonicalCode, Vec<usize>)> = None;
    search(g, cells, &mut best);
    Ok(best.expect("search visits at least one leaf"))
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(CanonicalCode, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        // discrete: the i-th cell's vertex gets label i
        let mut perm = vec![0; g.order()];
        for (i, c) in cells.iter().enumerate() {
            perm[c[0]] = i;
        }
        let code = code_under(g, &perm);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, perm));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(g, refine(g, next), best);
    }
}

/// Splits cells by neighbour counts into every cell until stable. Within a
/// cell, vertices are regrouped in ascending signature order.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.rows()[v];
                    (masks.iter().map(|m| (row & m).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn code_under(g: &Graph, perm: &[usize]) -> CanonicalCode {
    let n = g.order();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut bits = 0u128;
    for j in 1..n {
        for i in 0..j {
            bits = (bits << 1) | g.has_edge(inv[i], inv[j]) as u128;
        }
    }
    CanonicalCode { n: n as u8, bits }
}
