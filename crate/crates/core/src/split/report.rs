use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Edge, Graph, NamedPattern};
use crate::invariants::{chromatic_number, clique_number, contains_induced, independence_number};
use crate::split::exceptional::{detect_exceptional, ExceptionalFamily};
use crate::split::ks::{is_split, ks_partition, star_size, KSPartition};
use crate::split::ng::is_ng_by_definition;
use crate::split::pseudo::{pseudo_split_decompose, PseudoSplitDecomposition};
use crate::split::witness::{find_2k2_witness, find_c4_witness, find_nonsplit_witness, find_unbalanced_witness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: &'static str,
    pub edge: Edge,
}

/// Every recognizer's verdict on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub order: usize,
    pub is_split: bool,
    pub is_balanced_split: Option<bool>,
    pub ks: Option<KSPartition>,
    pub exceptional: Option<ExceptionalFamily>,
    pub is_pseudo_split: bool,
    pub psd: Option<PseudoSplitDecomposition>,
    pub is_ng: bool,
    /// `Some(m)` when the graph is `K_{1,m}` (or `K1`, `m = 0`).
    pub star: Option<usize>,
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
    pub chi_complement: usize,
    pub witnesses: Vec<Witness>,
}

pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    let split = is_split(g);
    let ks = if split { Some(ks_partition(g)?) } else { None };
    let omega = clique_number(g);
    let alpha = independence_number(g);
    let chi = chromatic_number(g)?;
    let chi_complement = chromatic_number(&g.complement())?;
    let psd = pseudo_split_decompose(g).ok();
    let star = star_size(g);

    let mut witnesses = Vec::new();
    if contains_induced(g, NamedPattern::C4) {
        if let Some(edge) = find_c4_witness(g)? {
            witnesses.push(Witness { label: "c4", edge });
        }
    }
    if contains_induced(g, NamedPattern::TwoK2) {
        if let Some(edge) = find_2k2_witness(g)? {
            witnesses.push(Witness { label: "2k2", edge });
        }
    }
    if let Some(edge) = find_nonsplit_witness(g) {
        witnesses.push(Witness { label: "nonsplit", edge });
    }
    if split && !star.is_some_and(|m| m >= 2) {
        if let Some(edge) = find_unbalanced_witness(g)? {
            witnesses.push(Witness { label: "unbalanced", edge });
        }
    }

    Ok(ClassificationReport {
        order: g.order(),
        is_split: split,
        is_balanced_split: split.then_some(omega + alpha == g.order()),
        ks,
        exceptional: detect_exceptional(g),
        is_pseudo_split: psd.is_some(),
        psd,
        is_ng: is_ng_by_definition(g)?,
        star,
        omega,
        alpha,
        chi,
        chi_complement,
        witnesses,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order: {}", self.order)?;
        writeln!(f, "split: {}", yes_no(self.is_split))?;
        match self.is_balanced_split {
            Some(b) => writeln!(f, "balanced: {}", yes_no(b))?,
            None => writeln!(f, "balanced: n/a")?,
        }
        if let Some(p) = &self.ks {
            writeln!(f, "ks: K={} S={}", p.k, p.s)?;
        }
        match self.exceptional {
            Some(x) => writeln!(f, "exceptional: {x}")?,
            None => writeln!(f, "exceptional: none")?,
        }
        writeln!(f, "pseudo_split: {}", yes_no(self.is_pseudo_split))?;
        if let Some(d) = &self.psd {
            writeln!(f, "psd: A={} B={} C={}", d.a, d.b, d.c)?;
        }
        writeln!(f, "ng: {}", yes_no(self.is_ng))?;
        if let Some(m) = self.star {
            writeln!(f, "star: K1,{m}")?;
        }
        writeln!(
            f,
            "omega: {}  alpha: {}  chi: {}  chi_complement: {}",
            self.omega, self.alpha, self.chi, self.chi_complement
        )?;
        for w in &self.witnesses {
            writeln!(f, "witness {}: {}", w.label, w.edge)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_report() {
        let r = classify(&Graph::cycle(5).unwrap()).unwrap();
        assert!(!r.is_split);
        assert_eq!(r.is_balanced_split, None);
        assert!(r.is_pseudo_split);
        assert!(r.is_ng);
        assert_eq!(r.exceptional, None);
        assert_eq!((r.omega, r.alpha, r.chi, r.chi_complement), (2, 2, 3, 3));
        assert!(r.witnesses.iter().any(|w| w.label == "nonsplit"));
    }

    #[test]
    fn p5_report() {
        let r = classify(&Graph::path(5).unwrap()).unwrap();
        assert!(!r.is_split);
        assert_eq!(r.exceptional, Some(ExceptionalFamily::H5));
        assert!(!r.is_pseudo_split);
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn k4_report() {
        let r = classify(&Graph::complete(4).unwrap()).unwrap();
        assert!(r.is_split);
        assert_eq!(r.is_balanced_split, Some(false));
        assert!(r.is_ng);
        assert_eq!(r.ks.unwrap().k, Graph::complete(4).unwrap().vertices());
        assert!(r.witnesses.iter().any(|w| w.label == "unbalanced"));
    }

    #[test]
    fn k3_report_text() {
        let r = classify(&Graph::complete(3).unwrap()).unwrap();
        let text = r.to_string();
        assert!(text.contains("split: true"));
        assert!(text.contains("balanced: false"));
        assert!(text.contains("ng: true"));
    }
}
