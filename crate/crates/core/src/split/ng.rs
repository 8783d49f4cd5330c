//! Nordhaus-Gaddum graphs: `chi(G) + chi(complement G) = n + 1`.

use crate::error::Result;
use crate::graph::Graph;
use crate::invariants::{chromatic_number, clique_number, independence_number};
use crate::split::ks::{is_split, star_size};
use crate::split::pseudo::{is_pseudo_split, pseudo_split_decompose};
use crate::split::witness::is_unbalanced_witness;

pub fn is_ng_by_definition(g: &Graph) -> Result<bool> {
    Ok(chromatic_number(g)? + chromatic_number(&g.complement())? == g.order() + 1)
}

/// Pseudo-split and not a balanced split graph.
pub fn is_ng_by_characterisation(g: &Graph) -> bool {
    is_pseudo_split(g) && !(is_split(g) && clique_number(g) + independence_number(g) == g.order())
}

/// Does `g` decompose around an induced C5, with a clique complete to it
/// and an independent set anticomplete to it?
pub fn has_c5_decomposition(g: &Graph) -> bool {
    pseudo_split_decompose(g).is_ok_and(|d| !d.c.is_empty())
}

/// The contraction form of the characterisation, for graphs that are not
/// stars `K_{1,m}` with `m >= 2`: some edge drops the clique number by one
/// and leaves an unbalanced split graph, or `g` has a C5 decomposition.
/// Returns `None` for the excluded stars. Edgeless graphs, `K1` included,
/// always fail the contraction disjunct even though they are NG.
pub fn is_ng_by_contraction(g: &Graph) -> Result<Option<bool>> {
    if star_size(g).is_some_and(|m| m >= 2) {
        return Ok(None);
    }
    for e in g.edges() {
        if is_unbalanced_witness(g, e)? {
            return Ok(Some(true));
        }
    }
    Ok(Some(has_c5_decomposition(g)))
}
