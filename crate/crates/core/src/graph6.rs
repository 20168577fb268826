//! The graph6 text format.
//!
//! A graph6 line is `N(n) R(x)`: the vertex count followed by the upper
//! triangle of the adjacency matrix, column by column, packed big-endian into
//! six-bit groups, each offset by 63 into the printable range `?`..=`~`.

use crate::{Error, Graph, Result};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

/// Encodes a graph as a graph6 line (without trailing newline).
pub fn encode(graph: &Graph) -> String {
    let n = graph.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | graph.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + BIAS);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + BIAS));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + BIAS));
    }
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored. Byte offsets in errors refer to the
/// line as given.
pub fn decode(line: &str) -> Result<Graph> {
    let lead = line.len() - line.trim_start().len();
    let mut body = line.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    let malformed = |offset: usize, reason: &str| Error::MalformedGraph6 { offset: base + offset, reason: reason.to_string() };

    if let Some(pos) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(malformed(pos, "character outside '?'..='~'"));
    }
    let (n, start) = decode_size(bytes).ok_or_else(|| malformed(bytes.len(), "truncated vertex count"))?;

    let bits = n * n.saturating_sub(1) / 2;
    let expected = start + bits.div_ceil(6);
    if bytes.len() < expected {
        return Err(malformed(bytes.len(), "truncated adjacency payload"));
    }
    if bytes.len() > expected {
        return Err(malformed(expected, "trailing bytes after adjacency payload"));
    }

    let payload = &bytes[start..];
    let bit = |k: usize| (payload[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
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
    Graph::new(n, edges)
}

fn decode_size(bytes: &[u8]) -> Option<(usize, usize)> {
    let six = |range: std::ops::Range<usize>| -> Option<usize> {
        let chunk = bytes.get(range)?;
        Some(chunk.iter().fold(0, |acc, &b| (acc << 6) | (b - BIAS) as usize))
    };
    match bytes.first()? {
        126 if bytes.get(1) == Some(&126) => Some((six(2..8)?, 8)),
        126 => Some((six(1..4)?, 4)),
        &b => Some(((b - BIAS) as usize, 1)),
    }
}
