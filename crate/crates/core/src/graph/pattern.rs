use std::fmt;

use serde::Serialize;

use super::Graph;
use crate::error::Result;

/// Small named graphs used as forbidden patterns and exceptional families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NamedPattern {
    TwoK2,
    C4,
    C5,
    C6,
    P4,
    P5,
    Claw,
    /// `K_{2,l}`, `l >= 1`.
    K2L(usize),
    W4,
    Octahedron,
    /// Triangle `{c,d,e}` with the path `e-b-a` attached.
    Hammer,
    /// Two triangles sharing one vertex.
    Butterfly,
    /// `K_{1,m}`.
    Star(usize),
}

impl NamedPattern {
    pub fn template(self) -> Result<Graph> {
        match self {
            NamedPattern::TwoK2 => Graph::build(4, &[(0, 1), (2, 3)]),
            NamedPattern::C4 => Graph::cycle(4),
            NamedPattern::C5 => Graph::cycle(5),
            NamedPattern::C6 => Graph::cycle(6),
            NamedPattern::P4 => Graph::path(4),
            NamedPattern::P5 => Graph::path(5),
            NamedPattern::Claw => Graph::star(3),
            NamedPattern::K2L(l) => Graph::complete_bipartite(2, l),
            NamedPattern::W4 => Graph::empty(1)?.join(&Graph::cycle(4)?),
            NamedPattern::Octahedron => Graph::cycle(4)?.join(&Graph::empty(2)?),
            // a=0, b=1, c=2, d=3, e=4
            NamedPattern::Hammer => Graph::build(5, &[(0, 1), (1, 4), (2, 3), (2, 4), (3, 4)]),
            NamedPattern::Butterfly => Graph::build(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
            NamedPattern::Star(m) => Graph::star(m),
        }
    }

    pub fn order(self) -> usize {
        match self {
            NamedPattern::TwoK2 | NamedPattern::C4 | NamedPattern::P4 | NamedPattern::Claw => 4,
            NamedPattern::C5 | NamedPattern::P5 | NamedPattern::W4 => 5,
            NamedPattern::Hammer | NamedPattern::Butterfly => 5,
            NamedPattern::C6 | NamedPattern::Octahedron => 6,
            NamedPattern::K2L(l) => l + 2,
            NamedPattern::Star(m) => m + 1,
        }
    }
}

impl fmt::Display for NamedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedPattern::TwoK2 => write!(f, "2K2"),
            NamedPattern::C4 => write!(f, "C4"),
            NamedPattern::C5 => write!(f, "C5"),
            NamedPattern::C6 => write!(f, "C6"),
            NamedPattern::P4 => write!(f, "P4"),
            NamedPattern::P5 => write!(f, "P5"),
            NamedPattern::Claw => write!(f, "claw"),
            NamedPattern::K2L(l) => write!(f, "K2,{l}"),
            NamedPattern::W4 => write!(f, "W4"),
            NamedPattern::Octahedron => write!(f, "octahedron"),
            NamedPattern::Hammer => write!(f, "hammer"),
            NamedPattern::Butterfly => write!(f, "butterfly"),
            NamedPattern::Star(m) => write!(f, "S{m}"),
        }
    }
}
