use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// Every statement the harness verifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Prop1,
    Prop2,
    Prop3,
    Prop4,
    Prop5,
    Lemma1,
    Lemma2,
    ThmSplitForbidden,
    Thm2k2Claw,
    ThmContraction,
    ThmKsCases,
    ThmUnbalanced,
    ThmPseudo,
    ThmNg,
}

/// Which built-in graphs a checker sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinSource {
    AllGraphs,
    ConnectedGraphs,
    /// `C_4 .. C_max`
    Cycles,
    /// `K_1 .. K_max`
    Cliques,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::Prop1,
        TheoremId::Prop2,
        TheoremId::Prop3,
        TheoremId::Prop4,
        TheoremId::Prop5,
        TheoremId::Lemma1,
        TheoremId::Lemma2,
        TheoremId::ThmSplitForbidden,
        TheoremId::Thm2k2Claw,
        TheoremId::ThmContraction,
        TheoremId::ThmKsCases,
        TheoremId::ThmUnbalanced,
        TheoremId::ThmPseudo,
        TheoremId::ThmNg,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Prop1 => "PROP1",
            TheoremId::Prop2 => "PROP2",
            TheoremId::Prop3 => "PROP3",
            TheoremId::Prop4 => "PROP4",
            TheoremId::Prop5 => "PROP5",
            TheoremId::Lemma1 => "LEMMA1",
            TheoremId::Lemma2 => "LEMMA2",
            TheoremId::ThmSplitForbidden => "THM_SPLIT_FORBIDDEN",
            TheoremId::Thm2k2Claw => "THM_2K2_CLAW",
            TheoremId::ThmContraction => "THM_CONTRACTION",
            TheoremId::ThmKsCases => "THM_KS_CASES",
            TheoremId::ThmUnbalanced => "THM_UNBALANCED",
            TheoremId::ThmPseudo => "THM_PSEUDO",
            TheoremId::ThmNg => "THM_NG",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            TheoremId::Prop1 => "contracting uv with N_C(v)-u inside N_C(u) preserves G[C]",
            TheoremId::Prop2 => "contracting an edge outside C preserves G[C]",
            TheoremId::Prop3 => "a non-dominating C survives some contraction",
            TheoremId::Prop4 => "every contraction of C_n is C_{n-1}",
            TheoremId::Prop5 => "every contraction of K_n is K_{n-1}",
            TheoremId::Lemma1 => "induced C4 survives some contraction unless K_2,l, W4 or octahedron",
            TheoremId::Lemma2 => {
                "induced 2K2 leaves 2K2 or C4 after some contraction unless 2K2, P5, hammer, butterfly or C6"
            }
            TheoremId::ThmSplitForbidden => "(2K2, C4, C5)-free = degree test = KS-partition exists",
            TheoremId::Thm2k2Claw => "connected (2K2, claw)-free with alpha >= 3 is split (and perfect)",
            TheoremId::ThmContraction => "split iff every contraction split, outside the exceptional families",
            TheoremId::ThmKsCases => "every KS-partition is case I, II or III; case I is unique",
            TheoremId::ThmUnbalanced => {
                "non-star split graph is unbalanced iff an omega-dropping contraction is unbalanced split"
            }
            TheoremId::ThmPseudo => "pseudo-split iff (2K2, C4)-free iff A/B/C decomposition",
            TheoremId::ThmNg => "NG iff pseudo-split and not balanced split",
        }
    }

    /// Largest order the built-in sweep covers.
    pub fn max_builtin_order(self) -> usize {
        match self {
            TheoremId::Prop1 | TheoremId::Prop2 | TheoremId::Prop3 => 7,
            TheoremId::Prop4 | TheoremId::Prop5 => 10,
            TheoremId::ThmKsCases | TheoremId::ThmNg => 7,
            _ => 8,
        }
    }

    pub fn builtin_source(self) -> BuiltinSource {
        match self {
            TheoremId::Prop1 | TheoremId::Prop2 => BuiltinSource::AllGraphs,
            TheoremId::ThmSplitForbidden | TheoremId::ThmKsCases => BuiltinSource::AllGraphs,
            TheoremId::ThmPseudo | TheoremId::ThmNg => BuiltinSource::AllGraphs,
            TheoremId::Prop4 => BuiltinSource::Cycles,
            TheoremId::Prop5 => BuiltinSource::Cliques,
            _ => BuiltinSource::ConnectedGraphs,
        }
    }
}

/// Largest order accepted from an external corpus.
pub const MAX_CORPUS_ORDER: usize = 10;

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownTheorem(pub String);

impl fmt::Display for UnknownTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown theorem id {:?}", self.0)
    }
}

impl std::error::Error for UnknownTheorem {}

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}
