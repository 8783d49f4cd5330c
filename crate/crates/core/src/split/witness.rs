//! Edge searches whose contraction preserves a pattern or a property.
//! Every search scans edges in lexicographic order and returns the first hit.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, NamedPattern};
use crate::invariants::{clique_number, contains_induced};
use crate::split::ks::{is_balanced_split, is_split, star_size};

fn first_edge(g: &Graph, mut keep: impl FnMut(&Graph) -> bool) -> Option<Edge> {
    g.edges().find(|&e| keep(&g.contract(e).expect("edges of g are contractible")))
}

/// An edge whose contraction still has an induced C4.
pub fn find_c4_witness(g: &Graph) -> Result<Option<Edge>> {
    if !contains_induced(g, NamedPattern::C4) {
        return Err(Error::NoInducedC4);
    }
    Ok(first_edge(g, |h| contains_induced(h, NamedPattern::C4)))
}

/// An edge whose contraction has an induced 2K2 or C4.
pub fn find_2k2_witness(g: &Graph) -> Result<Option<Edge>> {
    if !contains_induced(g, NamedPattern::TwoK2) {
        return Err(Error::NoInduced2K2);
    }
    Ok(first_edge(g, |h| contains_induced(h, NamedPattern::TwoK2) || contains_induced(h, NamedPattern::C4)))
}

/// An edge whose contraction is not split.
pub fn find_nonsplit_witness(g: &Graph) -> Option<Edge> {
    first_edge(g, |h| !is_split(h))
}

/// Does contracting `e` drop the clique number by one and leave an
/// unbalanced split graph?
pub fn is_unbalanced_witness(g: &Graph, e: Edge) -> Result<bool> {
    let h = g.contract(e)?;
    Ok(clique_number(&h) + 1 == clique_number(g) && is_split(&h) && !is_balanced_split(&h)?)
}

/// An edge `e` with `omega(G/e) = omega(G) - 1` and `G/e` unbalanced split.
/// Stars `K_{1,m}` with `m >= 2` are rejected; `K1` and `K2` are accepted.
pub fn find_unbalanced_witness(g: &Graph) -> Result<Option<Edge>> {
    if !is_split(g) {
        return Err(Error::NotSplit);
    }
    if let Some(m) = star_size(g).filter(|&m| m >= 2) {
        return Err(Error::IsStar(m));
    }
    for e in g.edges() {
        if is_unbalanced_witness(g, e)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_connected, is_isomorphic};

    fn banner() -> Graph {
        // C4 0-1-2-3 with pendant 4 on 0
        Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap()
    }

    #[test]
    fn c4_witness_examples() {
        assert_eq!(find_c4_witness(&banner()).unwrap(), Some(Edge::new(0, 4)));
        assert_eq!(find_c4_witness(&NamedPattern::W4.template().unwrap()).unwrap(), None);
        assert_eq!(find_c4_witness(&Graph::complete_bipartite(2, 3).unwrap()).unwrap(), None);
        assert_eq!(find_c4_witness(&NamedPattern::Octahedron.template().unwrap()).unwrap(), None);
        assert_eq!(find_c4_witness(&Graph::path(4).unwrap()), Err(Error::NoInducedC4));
    }

    #[test]
    fn two_k2_witness_examples() {
        let p6 = Graph::path(6).unwrap();
        let e = find_2k2_witness(&p6).unwrap().unwrap();
        assert_eq!(e, Edge::new(0, 1));
        let h = p6.contract(e).unwrap();
        assert!(is_isomorphic(&h, &Graph::path(5).unwrap()).unwrap());
        assert!(contains_induced(&h, NamedPattern::TwoK2));

        for p in
            [NamedPattern::P5, NamedPattern::C6, NamedPattern::TwoK2, NamedPattern::Hammer, NamedPattern::Butterfly]
        {
            assert_eq!(find_2k2_witness(&p.template().unwrap()).unwrap(), None, "{p}");
        }
        assert_eq!(find_2k2_witness(&Graph::complete(3).unwrap()), Err(Error::NoInduced2K2));
    }

    #[test]
    fn nonsplit_witness_examples() {
        assert_eq!(find_nonsplit_witness(&Graph::cycle(6).unwrap()), Some(Edge::new(0, 1)));
        assert_eq!(find_nonsplit_witness(&NamedPattern::W4.template().unwrap()), None);
        assert_eq!(find_nonsplit_witness(&Graph::path(4).unwrap()), None);
        for g in enumerate_connected(6).unwrap().iter().filter(|g| is_split(g)) {
            assert_eq!(find_nonsplit_witness(g), None);
        }
    }

    #[test]
    fn unbalanced_witness_examples() {
        // paw: triangle a=0, b=1, c=2 with pendant d=3 on a
        let paw = Graph::build(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        // (a,b) precedes (b,c) in edge order; both qualify
        assert_eq!(find_unbalanced_witness(&paw).unwrap(), Some(Edge::new(0, 1)));
        assert!(is_unbalanced_witness(&paw, Edge::new(1, 2)).unwrap());
        let p3 = paw.contract(Edge::new(1, 2)).unwrap();
        assert!(is_isomorphic(&p3, &Graph::path(3).unwrap()).unwrap());

        assert_eq!(find_unbalanced_witness(&Graph::path(4).unwrap()).unwrap(), None);
        assert_eq!(find_unbalanced_witness(&Graph::complete(2).unwrap()).unwrap(), Some(Edge::new(0, 1)));
        assert_eq!(find_unbalanced_witness(&Graph::empty(1).unwrap()).unwrap(), None);
        assert_eq!(find_unbalanced_witness(&Graph::star(3).unwrap()), Err(Error::IsStar(3)));
        assert_eq!(find_unbalanced_witness(&Graph::cycle(4).unwrap()), Err(Error::NotSplit));
    }
}
