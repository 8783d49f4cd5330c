//! Pseudo-split graphs: (2K2, C4)-free graphs, decomposed as a clique `a`,
//! an independent set `b` and a set `c` that induces C5 or is empty, with
//! `a` complete to `c` and no edges between `b` and `c`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Graph, NamedPattern, VertexSet};
use crate::invariants::{contains_induced, find_induced};
use crate::split::ks::ks_partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PseudoSplitDecomposition {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

impl PseudoSplitDecomposition {
    /// Checks every structural requirement; the message names the first
    /// one that fails.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let PseudoSplitDecomposition { a, b, c } = *self;
        if !a.intersection(b).is_empty() || !a.intersection(c).is_empty() || !b.intersection(c).is_empty() {
            return Err("parts are not pairwise disjoint".into());
        }
        if a.union(b).union(c) != g.vertices() {
            return Err("parts do not cover V".into());
        }
        if !g.is_clique(a) {
            return Err(format!("A = {a} is not a clique"));
        }
        if !g.is_independent(b) {
            return Err(format!("B = {b} is not independent"));
        }
        if !c.is_empty() {
            let c5 = NamedPattern::C5.template().expect("C5");
            let induced = g.induced(c).map_err(|e| e.to_string())?;
            if !is_isomorphic(&induced, &c5).unwrap_or(false) {
                return Err(format!("C = {c} does not induce C5"));
            }
        }
        if let Some(x) = a.iter().find(|&x| !c.is_subset(g.neighbors(x))) {
            return Err(format!("A vertex {x} is not adjacent to all of C"));
        }
        if let Some(x) = b.iter().find(|&x| !g.neighbors(x).intersection(c).is_empty()) {
            return Err(format!("B vertex {x} has a neighbour in C"));
        }
        Ok(())
    }
}

pub fn is_pseudo_split(g: &Graph) -> bool {
    !contains_induced(g, NamedPattern::TwoK2) && !contains_induced(g, NamedPattern::C4)
}

/// Decomposes a pseudo-split graph. With an induced C5, `c` is the first
/// one found and `a` is everything complete to it; otherwise `c` is empty
/// and `(a, b)` is [`ks_partition`].
pub fn pseudo_split_decompose(g: &Graph) -> Result<PseudoSplitDecomposition> {
    if !is_pseudo_split(g) {
        return Err(Error::NotPseudoSplit);
    }
    let d = match find_induced(g, NamedPattern::C5) {
        Some(w) => {
            let c = w.vertices;
            let a: VertexSet = g.vertices().difference(c).iter().filter(|&x| c.is_subset(g.neighbors(x))).collect();
            PseudoSplitDecomposition { a, b: g.vertices().difference(a).difference(c), c }
        }
        None => {
            let p = ks_partition(g)?;
            PseudoSplitDecomposition { a: p.k, b: p.s, c: VertexSet::EMPTY }
        }
    };
    d.validate(g).map_err(Error::InvalidPartition)?;
    Ok(d)
}
