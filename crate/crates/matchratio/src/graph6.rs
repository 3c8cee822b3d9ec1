//! graph6: compact ASCII encoding of undirected graphs.
//!
//! The first byte holds `n + 63` (orders up to 62 supported here; the
//! multi-byte extension for larger orders is rejected). The upper triangle of
//! the adjacency matrix is then read column by column — bit order
//! (0,1), (0,2), (1,2), (0,3), … — packed big-endian into 6-bit groups, each
//! stored as one printable byte offset by 63.

use crate::error::Graph6Error;
use crate::graph::Graph;

const OFFSET: u8 = 63;

/// Largest order the short graph6 form encodes.
pub const MAX_ORDER: usize = 62;

/// Number of payload bytes for a graph of order `n`.
fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Encode a graph as a graph6 string.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge { order: n });
    }
    let mut out = vec![OFFSET + n as u8];
    if n >= 2 {
        out.extend(std::iter::repeat_n(OFFSET, payload_len(n)));
        let mut pos = 0usize; // bit cursor over the upper triangle
        for j in 1..n {
            for i in 0..j {
                if g.has_edge(i, j) {
                    out[1 + pos / 6] += 1 << (5 - pos % 6);
                }
                pos += 1;
            }
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decode a graph6 string.
pub fn from_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    let &first = bytes.first().ok_or(Graph6Error::Empty)?;
    if first == b'~' {
        return Err(Graph6Error::UnsupportedExtended);
    }
    if !(OFFSET..=OFFSET + MAX_ORDER as u8).contains(&first) {
        return Err(Graph6Error::InvalidByte { pos: 0, byte: first });
    }
    let n = (first - OFFSET) as usize;
    let expected = if n >= 2 { payload_len(n) } else { 0 };
    match bytes.len() - 1 {
        found if found < expected => {
            return Err(Graph6Error::Truncated { expected, found });
        }
        found if found > expected => {
            return Err(Graph6Error::TrailingData {
                expected: expected + 1,
                found: found + 1,
            });
        }
        _ => {}
    }
    let mut edges = Vec::new();
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + pos / 6];
            if !(OFFSET..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte {
                    pos: 1 + pos / 6,
                    byte,
                });
            }
            if (byte - OFFSET) >> (5 - pos % 6) & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("decoded edges are in range by construction"))
}
