//! Exact graph invariants and induced pattern search.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, NamedPattern, VertexSet};

pub const MAX_COLORING_ORDER: usize = 12;
pub const MAX_PERFECTION_ORDER: usize = 12;

/// An induced copy of a pattern in a host graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PatternWitness {
    pub pattern: NamedPattern,
    pub vertices: VertexSet,
}

/// Size of a maximum clique, by branch and bound with greedy-colouring
/// bounds.
pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    expand_clique(g, 0, g.vertices().0, &mut best);
    best
}

fn expand_clique(g: &Graph, size: usize, mut candidates: u64, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    let (order, bounds) = colour_bounds(g, candidates);
    for i in (0..order.len()).rev() {
        if size + bounds[i] <= *best {
            return;
        }
        let v = order[i];
        expand_clique(g, size + 1, candidates & g.neighbors(v).0, best);
        candidates &= !(1u64 << v);
    }
}

/// Greedy colour classes over `candidates`; `bounds[i]` is the colour of
/// `order[i]`, an upper bound on the clique size within `order[..=i]`.
fn colour_bounds(g: &Graph, candidates: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(candidates.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncoloured = candidates;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut available = uncoloured;
        while available != 0 {
            let v = available.trailing_zeros() as usize;
            available &= !(1u64 << v) & !g.neighbors(v).0;
            uncoloured &= !(1u64 << v);
            order.push(v);
            bounds.push(colour);
        }
    }
    (order, bounds)
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// Exact chromatic number for orders up to 12.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > MAX_COLORING_ORDER {
        return Err(Error::OrderTooLargeForColoring(n));
    }
    let lower = clique_number(g);
    let upper = greedy_colour_count(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for k in lower..upper {
        let mut colours = vec![usize::MAX; n];
        if colour_with(g, &order, 0, k, 0, &mut colours) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn greedy_colour_count(g: &Graph) -> usize {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colours = vec![usize::MAX; n];
    let mut used = 0;
    for &v in &order {
        let taken: u64 =
            g.neighbors(v).iter().filter(|&w| colours[w] != usize::MAX).fold(0, |m, w| m | 1 << colours[w]);
        let c = (!taken).trailing_zeros() as usize;
        colours[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn colour_with(g: &Graph, order: &[usize], depth: usize, k: usize, used: usize, colours: &mut [usize]) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    // a fresh colour is interchangeable with any other unused one
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().any(|w| colours[w] == c) {
            continue;
        }
        colours[v] = c;
        if colour_with(g, order, depth + 1, k, used.max(c + 1), colours) {
            return true;
        }
        colours[v] = usize::MAX;
    }
    false
}

/// First induced copy of `pattern`, scanning vertex subsets in
/// lexicographic order.
pub fn find_induced(g: &Graph, pattern: NamedPattern) -> Option<PatternWitness> {
    let template = pattern.template().ok()?;
    find_induced_template(g, &template).map(|vertices| PatternWitness { pattern, vertices })
}

pub(crate) fn find_induced_template(g: &Graph, template: &Graph) -> Option<VertexSet> {
    let k = template.order();
    if k > g.order() {
        return None;
    }
    let m = template.edge_count();
    let mut degrees = template.degrees();
    degrees.sort_unstable();
    (0..g.order()).combinations(k).find_map(|vs| {
        let s = VertexSet::from_vertices(vs.iter().copied());
        let mut local: Vec<usize> = vs.iter().map(|&v| g.neighbors(v).intersection(s).len()).collect();
        if local.iter().sum::<usize>() != 2 * m {
            return None;
        }
        local.sort_unstable();
        if local != degrees {
            return None;
        }
        crate::graph::iso_unchecked(&g.induced_unchecked(s), template).then_some(s)
    })
}

pub fn contains_induced(g: &Graph, pattern: NamedPattern) -> bool {
    find_induced(g, pattern).is_some()
}

/// True iff every vertex is in `c` or has a neighbour in `c`.
pub fn dominates(g: &Graph, c: VertexSet) -> bool {
    let c = c.intersection(g.vertices());
    c.union(g.neighborhood_of(c)) == g.vertices()
}

/// Perfection via odd holes and odd antiholes, by subset scan.
pub fn is_perfect(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n > MAX_PERFECTION_ORDER {
        return Err(Error::OrderTooLargeForPerfection(n));
    }
    Ok(find_odd_hole(g).is_none() && find_odd_hole(&g.complement()).is_none())
}

/// First vertex set of odd size at least 5 inducing a cycle.
pub fn find_odd_hole(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    (5..=n).step_by(2).find_map(|k| (0..n).combinations(k).map(VertexSet::from_vertices).find(|&s| induces_cycle(g, s)))
}

fn induces_cycle(g: &Graph, s: VertexSet) -> bool {
    if s.iter().any(|v| g.neighbors(v).intersection(s).len() != 2) {
        return false;
    }
    // 2-regular; a cycle iff connected
    let start = VertexSet::singleton(s.first().expect("nonempty"));
    let mut seen = start;
    let mut frontier = start;
    while !frontier.is_empty() {
        let next = g.neighborhood_of(frontier).intersection(s).difference(seen);
        seen = seen.union(next);
        frontier = next;
    }
    seen == s
}
