//! The seven exceptional families: non-split graphs every one of whose
//! single-edge contractions is split.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{is_isomorphic, Graph, NamedPattern, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionalFamily {
    /// `K_{2,l}`, `l >= 2`
    H1(usize),
    /// `W4`
    H2,
    /// octahedron, `C4` joined with `E2`
    H3,
    /// `2K2`
    H4,
    /// `P5`
    H5,
    /// hammer
    H6,
    /// butterfly
    H7,
}

impl ExceptionalFamily {
    pub fn pattern(self) -> NamedPattern {
        match self {
            ExceptionalFamily::H1(l) => NamedPattern::K2L(l),
            ExceptionalFamily::H2 => NamedPattern::W4,
            ExceptionalFamily::H3 => NamedPattern::Octahedron,
            ExceptionalFamily::H4 => NamedPattern::TwoK2,
            ExceptionalFamily::H5 => NamedPattern::P5,
            ExceptionalFamily::H6 => NamedPattern::Hammer,
            ExceptionalFamily::H7 => NamedPattern::Butterfly,
        }
    }

    pub fn template(self) -> Graph {
        self.pattern().template().expect("family templates are small")
    }

    /// Every family member of order at most `max_n`.
    pub fn members_up_to(max_n: usize) -> Vec<ExceptionalFamily> {
        let mut out: Vec<_> = (2..=max_n.saturating_sub(2)).map(ExceptionalFamily::H1).collect();
        out.extend(
            [
                ExceptionalFamily::H2,
                ExceptionalFamily::H3,
                ExceptionalFamily::H4,
                ExceptionalFamily::H5,
                ExceptionalFamily::H6,
                ExceptionalFamily::H7,
            ]
            .into_iter()
            .filter(|f| f.pattern().order() <= max_n),
        );
        out.sort();
        out
    }
}

impl fmt::Display for ExceptionalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionalFamily::H1(l) => write!(f, "H1(l={l})"),
            ExceptionalFamily::H2 => write!(f, "H2"),
            ExceptionalFamily::H3 => write!(f, "H3"),
            ExceptionalFamily::H4 => write!(f, "H4"),
            ExceptionalFamily::H5 => write!(f, "H5"),
            ExceptionalFamily::H6 => write!(f, "H6"),
            ExceptionalFamily::H7 => write!(f, "H7"),
        }
    }
}

impl Serialize for ExceptionalFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `Some(l)` if `g` is `K_{2,l}` for some `l >= 2`: two non-adjacent
/// vertices joined to every other vertex, the others independent.
pub fn k2l_parameter(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 4 || g.edge_count() != 2 * (n - 2) {
        return None;
    }
    let all = g.vertices();
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            let x = VertexSet::from_vertices([x1, x2]);
            let y = all.difference(x);
            if g.neighbors(x1) == y && g.neighbors(x2) == y && g.is_independent(y) {
                return Some(n - 2);
            }
        }
    }
    None
}

pub fn detect_exceptional(g: &Graph) -> Option<ExceptionalFamily> {
    if let Some(l) = k2l_parameter(g) {
        return Some(ExceptionalFamily::H1(l));
    }
    [
        ExceptionalFamily::H2,
        ExceptionalFamily::H3,
        ExceptionalFamily::H4,
        ExceptionalFamily::H5,
        ExceptionalFamily::H6,
        ExceptionalFamily::H7,
    ]
    .into_iter()
    .find(|f| {
        let t = f.template();
        t.order() == g.order() && is_isomorphic(g, &t).unwrap_or(false)
    })
}
