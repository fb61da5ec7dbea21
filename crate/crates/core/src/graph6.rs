//! The graph6 text format.
//!
//! Layout: a size header followed by the upper triangle of the adjacency
//! matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), six bits
//! per byte, most significant bit first, each byte offset by 63. The last
//! byte is padded with zero bits.

use crate::error::Graph6Error;
use crate::graph::{bit, Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const LONG_MARKER: u8 = 126;
const HEADER: &[u8] = b">>graph6<<";

/// Number of data bytes for the edge section of an `n`-vertex graph.
pub fn edge_bytes(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Canonical graph6 encoding (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + edge_bytes(n));
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(LONG_MARKER);
        out.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(OFFSET + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.adj(j).bits();
        for i in 0..j {
            acc = (acc << 1) | u8::from(col & bit(i) != 0);
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 line. A trailing `\n` or `\r\n` and the optional
/// `>>graph6<<` header are accepted.
pub fn from_graph6(text: impl AsRef<[u8]>) -> Result<Graph, Graph6Error> {
    let mut s = text.as_ref();
    if let Some(rest) = s.strip_suffix(b"\n") {
        s = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
    }
    match s.first() {
        None => return Err(Graph6Error::Empty),
        Some(b':') => return Err(Graph6Error::Sparse6),
        Some(b'&') => return Err(Graph6Error::Digraph6),
        _ => {}
    }
    if let Some((offset, &byte)) = s
        .iter()
        .enumerate()
        .find(|(_, &b)| !(OFFSET..=LONG_MARKER).contains(&b))
    {
        return Err(Graph6Error::InvalidByte { offset, byte });
    }

    let (n, body) = parse_size(s)?;
    let expected = edge_bytes(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData);
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    if total_bits % 6 != 0 {
        let last = body[expected - 1] - OFFSET;
        let pad = 6 - total_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }

    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - OFFSET;
            if byte & (0x20 >> (k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

fn parse_size(s: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    if s[0] != LONG_MARKER {
        return Ok(((s[0] - OFFSET) as usize, &s[1..]));
    }
    if s.get(1) == Some(&LONG_MARKER) {
        // 8-byte form, n >= 258048
        let n = s
            .get(2..8)
            .map(|b| {
                b.iter()
                    .fold(0usize, |acc, &x| (acc << 6) | (x - OFFSET) as usize)
            })
            .unwrap_or(usize::MAX);
        return Err(Graph6Error::TooLarge { n });
    }
    let head = s.get(1..4).ok_or(Graph6Error::Truncated {
        expected: 3,
        found: s.len() - 1,
    })?;
    let n = head
        .iter()
        .fold(0usize, |acc, &x| (acc << 6) | (x - OFFSET) as usize);
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n });
    }
    Ok((n, &s[4..]))
}
