//! Dense graph6 encoding for graphs on at most 62 vertices.
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), six bits per byte,
//! most significant first, zero padded, each group offset by 63.

use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order expressible with the single-byte length header.
pub const MAX_GRAPH6_ORDER: usize = 62;

fn malformed(input: &str, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        input: input.to_string(),
        reason: reason.into(),
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_GRAPH6_ORDER, "graph6 dense format supports n <= 62");
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    out
}

pub fn decode(text: &str) -> Result<Graph> {
    let s = text.trim_end_matches(['\n', '\r']);
    if s.starts_with(">>graph6<<") {
        return Err(malformed(text, "headers are not supported"));
    }
    if s.starts_with(':') || s.starts_with('&') {
        return Err(malformed(text, "sparse6 and digraph6 are not supported"));
    }
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(malformed(text, "empty string"));
    };
    if !(63..=126).contains(&first) {
        return Err(malformed(text, "invalid length byte"));
    }
    let n = (first - 63) as usize;
    if n > MAX_GRAPH6_ORDER {
        return Err(malformed(text, "order out of range (long-length form unsupported)"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let body = &bytes[1..];
    if body.len() != bits.div_ceil(6) {
        return Err(malformed(
            text,
            format!("expected {} data bytes for n={n}, found {}", bits.div_ceil(6), body.len()),
        ));
    }
    let mut values = Vec::with_capacity(body.len());
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(malformed(text, format!("invalid data byte {:?}", b as char)));
        }
        values.push(b - 63);
    }
    let bit = |k: usize| values[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..values.len() * 6).any(bit) {
        return Err(malformed(text, "nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Parses a corpus: one graph6 string per line; blank lines and lines starting
/// with `#` are skipped. Errors carry 1-based line numbers.
pub fn read_corpus<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let g = decode(trimmed).map_err(|e| Error::Corpus {
            line: i + 1,
            source: Box::new(e),
        })?;
        out.push(g);
    }
    Ok(out)
}

pub fn read_corpus_file(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let f = std::fs::File::open(path)?;
    read_corpus(std::io::BufReader::new(f))
}
