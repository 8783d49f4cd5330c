use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{enumerate_connected, MAX_ENUMERATION_ORDER};
use crate::invariants::{clique_number, independence_number};
use crate::split::{detect_exceptional, is_ng_by_definition, is_pseudo_split, is_split};

/// Counts over the connected graphs of one order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub connected: usize,
    pub split: usize,
    pub non_split: usize,
    pub balanced: usize,
    pub unbalanced: usize,
    /// Family label (e.g. `H1(l=2)`) to count.
    pub exceptional: BTreeMap<String, usize>,
    pub pseudo_split: usize,
    pub ng: usize,
}

impl CensusRow {
    pub fn exceptional_total(&self) -> usize {
        self.exceptional.values().sum()
    }

    fn merge(mut self, other: CensusRow) -> CensusRow {
        self.connected += other.connected;
        self.split += other.split;
        self.non_split += other.non_split;
        self.balanced += other.balanced;
        self.unbalanced += other.unbalanced;
        self.pseudo_split += other.pseudo_split;
        self.ng += other.ng;
        for (k, v) in other.exceptional {
            *self.exceptional.entry(k).or_default() += v;
        }
        self
    }
}

/// One row per order `1..=max_n`, over connected graphs only.
pub fn census(max_n: usize) -> Result<Vec<CensusRow>> {
    if max_n == 0 || max_n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderOutOfRange(max_n));
    }
    (1..=max_n)
        .map(|n| {
            let graphs = enumerate_connected(n)?;
            let row = graphs
                .par_iter()
                .map(|g| {
                    let mut r = CensusRow { connected: 1, ..Default::default() };
                    if is_split(g) {
                        r.split = 1;
                        if clique_number(g) + independence_number(g) == n {
                            r.balanced = 1;
                        } else {
                            r.unbalanced = 1;
                        }
                    } else {
                        r.non_split = 1;
                    }
                    if let Some(f) = detect_exceptional(g) {
                        r.exceptional.insert(f.to_string(), 1);
                    }
                    r.pseudo_split = is_pseudo_split(g) as usize;
                    r.ng = is_ng_by_definition(g).expect("order within colouring limit") as usize;
                    r
                })
                .reduce(CensusRow::default, CensusRow::merge);
            Ok(CensusRow { n, ..row })
        })
        .collect()
}

/// Renders rows as a fixed-width table.
pub struct CensusTable<'a>(pub &'a [CensusRow]);

impl fmt::Display for CensusTable<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>2} {:>9} {:>6} {:>9} {:>8} {:>10} {:>11} {:>12} {:>6}  families",
            "n", "connected", "split", "non_split", "balanced", "unbalanced", "exceptional", "pseudo_split", "ng"
        )?;
        for r in self.0 {
            let fams = r.exceptional.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ");
            writeln!(
                f,
                "{:>2} {:>9} {:>6} {:>9} {:>8} {:>10} {:>11} {:>12} {:>6}  {}",
                r.n,
                r.connected,
                r.split,
                r.non_split,
                r.balanced,
                r.unbalanced,
                r.exceptional_total(),
                r.pseudo_split,
                r.ng,
                fams
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        let rows = census(5).unwrap();
        assert_eq!((rows[0].connected, rows[0].split, rows[0].balanced), (1, 1, 0));
        let r4 = &rows[3];
        assert_eq!((r4.connected, r4.split, r4.non_split), (6, 5, 1));
        assert_eq!(r4.exceptional.get("H1(l=2)"), Some(&1));
        assert_eq!(r4.exceptional_total(), 1);
        assert_eq!(rows[4].connected, 21);
        for r in &rows {
            assert_eq!(r.split, r.balanced + r.unbalanced);
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(census(0).unwrap_err(), Error::OrderOutOfRange(0));
        assert_eq!(census(9).unwrap_err(), Error::OrderOutOfRange(9));
    }
}
