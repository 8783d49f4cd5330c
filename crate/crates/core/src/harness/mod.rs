//! Exhaustive verification over all small graphs.
//!
//! A sweep runs one per-graph check (see [`check_graph`]) over every graph
//! in a source, in parallel, then sorts the counterexamples by their graph6
//! line so reports do not depend on scheduling.

mod census;
mod checks;
mod theorem;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    enumerate_all, enumerate_connected, is_isomorphic, parse_graph6, write_graph6, Graph, MAX_ENUMERATION_ORDER,
};
use crate::split::{detect_exceptional, ExceptionalFamily};

pub use census::{census, CensusRow, CensusTable};
pub use checks::check_graph;
pub use theorem::{BuiltinSource, TheoremId, UnknownTheorem, MAX_CORPUS_ORDER};

/// Where a sweep draws its graphs from.
#[derive(Clone, Debug)]
pub enum Source {
    Builtin,
    Corpus(Vec<Graph>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrderRange {
    pub min: usize,
    pub max: usize,
    /// The order bound asked for, before clamping to the checker's limit.
    pub requested_max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub order_range: OrderRange,
    pub graphs_checked: usize,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u128,
    pub verdict: Verdict,
    /// Human-readable remarks for the text report only.
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        };
        writeln!(
            f,
            "{:<20} {verdict}  n={}..{}  graphs={}  counterexamples={}  {}ms",
            self.theorem.as_str(),
            self.order_range.min,
            self.order_range.max,
            self.graphs_checked,
            self.counterexamples.len(),
            self.elapsed_ms
        )?;
        for note in &self.notes {
            writeln!(f, "    note: {note}")?;
        }
        for c in &self.counterexamples {
            writeln!(f, "    counterexample {}  {}", c.graph6, c.detail)?;
        }
        Ok(())
    }
}

fn builtin_graphs(theorem: TheoremId, max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    match theorem.builtin_source() {
        BuiltinSource::AllGraphs => {
            for n in 1..=max_n {
                out.extend_from_slice(enumerate_all(n)?);
            }
        }
        BuiltinSource::ConnectedGraphs => {
            for n in 1..=max_n {
                out.extend_from_slice(enumerate_connected(n)?);
            }
        }
        BuiltinSource::Cycles => {
            for n in 4..=max_n {
                out.push(Graph::cycle(n)?);
            }
        }
        BuiltinSource::Cliques => {
            for n in 1..=max_n {
                out.push(Graph::complete(n)?);
            }
        }
    }
    Ok(out)
}

/// Verifies `theorem` over every graph of order at most `max_n` in
/// `source`. `max_n` is clamped to the checker's limit; the report notes
/// any clamping.
pub fn verify(theorem: TheoremId, max_n: usize, source: &Source) -> Result<TheoremReport> {
    if max_n == 0 {
        return Err(Error::OrderOutOfRange(0));
    }
    let start = Instant::now();
    let mut notes = Vec::new();
    let limit = match source {
        Source::Builtin => theorem.max_builtin_order(),
        Source::Corpus(_) => MAX_CORPUS_ORDER,
    };
    let effective = max_n.min(limit);
    if effective < max_n {
        notes.push(format!("capped n at {effective} (requested {max_n})"));
    }
    debug_assert!(
        theorem.max_builtin_order() <= MAX_ENUMERATION_ORDER || theorem.builtin_source() != BuiltinSource::AllGraphs
    );

    let graphs = match source {
        Source::Builtin => builtin_graphs(theorem, effective)?,
        Source::Corpus(all) => {
            let kept: Vec<Graph> = all.iter().filter(|g| g.order() <= effective).cloned().collect();
            if kept.len() < all.len() {
                notes.push(format!("skipped {} corpus graphs above order {effective}", all.len() - kept.len()));
            }
            kept
        }
    };

    let mut found = sweep(&graphs, |g| checks::check_graph(theorem, g));

    if theorem == TheoremId::ThmContraction {
        let (extra, note) = exceptional_set_diff(&graphs, effective, matches!(source, Source::Builtin));
        notes.push(note);
        found.extend(extra);
    }

    found.sort();
    found.dedup_by(|a, b| a.graph6 == b.graph6);
    let min = graphs.iter().map(Graph::order).min().unwrap_or(1);
    let max = graphs.iter().map(Graph::order).max().unwrap_or(effective);
    Ok(TheoremReport {
        theorem,
        order_range: OrderRange { min: min.min(max), max: max.max(min), requested_max: max_n },
        graphs_checked: graphs.len(),
        verdict: if found.is_empty() { Verdict::Pass } else { Verdict::Fail },
        counterexamples: found,
        elapsed_ms: start.elapsed().as_millis(),
        notes,
    })
}

/// Runs `check` over `graphs` in parallel and returns the violations sorted
/// by graph6 line.
pub fn sweep<F>(graphs: &[Graph], check: F) -> Vec<Counterexample>
where
    F: Fn(&Graph) -> Option<String> + Sync,
{
    let mut found: Vec<Counterexample> = graphs
        .par_iter()
        .filter_map(|g| check(g).map(|detail| Counterexample { graph6: write_graph6(g), detail }))
        .collect();
    found.sort();
    found
}

/// Computes the connected non-split graphs whose contractions are all split
/// and compares them with the exceptional family members that fit. Against
/// a corpus only extras are reported, since the corpus may omit members.
fn exceptional_set_diff(graphs: &[Graph], max_n: usize, expect_complete: bool) -> (Vec<Counterexample>, String) {
    let region: Vec<&Graph> = graphs.par_iter().filter(|g| checks::in_exceptional_region(g)).collect();
    let expected: Vec<ExceptionalFamily> =
        ExceptionalFamily::members_up_to(max_n).into_iter().filter(|f| *f != ExceptionalFamily::H4).collect();

    let mut out = Vec::new();
    let mut matched = BTreeMap::new();
    for g in &region {
        let hit = expected.iter().find(|f| {
            let t = f.template();
            t.order() == g.order() && is_isomorphic(g, &t).unwrap_or(false)
        });
        match hit {
            Some(f) => *matched.entry(*f).or_insert(0usize) += 1,
            None => out.push(Counterexample {
                graph6: write_graph6(g),
                detail: format!(
                    "non-split with all contractions split but not an exceptional family member (detector: {})",
                    detect_exceptional(g).map_or("none".to_string(), |x| x.to_string())
                ),
            }),
        }
    }
    if expect_complete {
        for f in &expected {
            if !matched.contains_key(f) {
                out.push(Counterexample {
                    graph6: write_graph6(&f.template()),
                    detail: format!("{f} expected in the exceptional set but not found"),
                });
            }
        }
    }
    let names: Vec<String> = matched.keys().map(|f| format!("{f}[{}]", f.pattern())).collect();
    (out, format!("exceptional set found: {{{}}}", names.join(", ")))
}

/// One report per theorem, in [`TheoremId::ALL`] order.
pub fn verify_all(max_n: usize, source: &Source) -> Result<Vec<TheoremReport>> {
    TheoremId::ALL.into_iter().map(|t| verify(t, max_n, source)).collect()
}

/// Re-parses a counterexample and checks whether the violation reproduces
/// in isolation.
pub fn replay(theorem: TheoremId, c: &Counterexample) -> Result<bool> {
    let g = parse_graph6(&c.graph6)?;
    Ok(checks::check_graph(theorem, &g).is_some())
}
