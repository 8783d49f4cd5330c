//! graph6 encoding for orders up to 64.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn bits_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("byte {b:#04x} outside 63..=126")));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(Error::UnsupportedOrder(usize::MAX));
        }
        if bytes.len() < 4 {
            return Err(Error::MalformedGraph6("truncated order field".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(Error::MalformedGraph6(format!("order {n} must use the short form")));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > super::MAX_ORDER {
        return Err(Error::UnsupportedOrder(n));
    }
    if n == 0 {
        return Err(Error::UnsupportedOrder(0));
    }
    let nbits = bits_len(n);
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!("order {n} needs {expected} data bytes, found {}", body.len())));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge_unchecked(u, v);
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if !nbits.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + bits_len(n).div_ceil(6));
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(63 + (acc << (6 - k % 6)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses a corpus of graph6 lines. Blank lines are skipped; errors report
/// the 1-based line number.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        let line = line.strip_prefix(HEADER).unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| Error::MalformedCorpus { line: i + 1, message: e.to_string() })?;
        out.push(g);
    }
    Ok(out)
}
