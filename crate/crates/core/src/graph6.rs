//! graph6 codec, labeled (no canonical relabeling).
//!
//! Layout: a size header (`n + 63` for `n <= 62`, otherwise `126` followed by
//! three 6-bit groups of `n`), then the upper triangle `x(i, j)`, `i < j`,
//! ordered by column `j = 1..n` and row `i = 0..j`, packed big-endian into
//! 6-bit groups offset by 63 and zero-padded on the right.

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed header byte {0:#04x}")]
    BadHeader(u8),
    #[error("graph6 encodes {0} vertices; at most {MAX_VERTICES} are supported")]
    TooLarge(usize),
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated payload: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} trailing bytes after the payload")]
    TrailingGarbage(usize),
    #[error("nonzero padding bits in the final payload byte")]
    NonzeroPadding,
}

const OPTIONAL_HEADER: &[u8] = b">>graph6<<";

fn sextet(offset: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Graph6Error::BadByte { offset, byte })
    }
}

/// Number of payload bytes for a graph on `n` vertices.
pub fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decode one graph6 line. A trailing `\n` or `\r\n` is tolerated; anything
/// else after the payload is rejected.
pub fn decode(text: &[u8]) -> Result<Graph, Graph6Error> {
    let mut bytes = text;
    if let Some(rest) = bytes.strip_suffix(b"\n") {
        bytes = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    if let Some(rest) = bytes.strip_prefix(OPTIONAL_HEADER) {
        bytes = rest;
    }
    let Some(&first) = bytes.first() else {
        return Err(Graph6Error::Empty);
    };
    let (n, header_len) = match first {
        63..=125 => ((first - 63) as usize, 1),
        126 => {
            if bytes.get(1) == Some(&126) {
                // 8-byte form: only needed for n >= 258048
                return Err(Graph6Error::TooLarge(258_048));
            }
            if bytes.len() < 4 {
                return Err(Graph6Error::Truncated {
                    expected: 4,
                    found: bytes.len(),
                });
            }
            let mut n = 0usize;
            for (i, &b) in bytes[1..4].iter().enumerate() {
                n = n << 6 | sextet(i + 1, b)? as usize;
            }
            (n, 4)
        }
        _ => return Err(Graph6Error::BadHeader(first)),
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }

    let expected = payload_len(n);
    let payload = &bytes[header_len..];
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingGarbage(payload.len() - expected));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    let mut groups = payload
        .iter()
        .enumerate()
        .map(|(i, &b)| sextet(header_len + i, b));
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                current = groups.next().expect("length checked")?;
            }
            if current >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    debug_assert_eq!(k, total_bits);
    if k % 6 != 0 && current & ((1u8 << (6 - k % 6)) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }
    Ok(Graph::from_adjacency(adj))
}

pub fn decode_str(text: &str) -> Result<Graph, Graph6Error> {
    decode(text.as_bytes())
}

/// Encode without a trailing newline.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + payload_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
