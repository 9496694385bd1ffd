//! The graph6 text format: offset-63 printable encoding of an undirected
//! graph's vertex count and upper adjacency triangle, six bits per byte.

use crate::graph::Graph;
use thiserror::Error;

/// Largest vertex count accepted when decoding or encoding. The format
/// itself scales further, but everything downstream works on dense
/// matrices, so gigantic inputs are rejected up front.
pub const MAX_GRAPH6_VERTICES: usize = 4096;

const OFFSET: u8 = 63;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte 0x{byte:02x} at offset {offset} is outside the graph6 alphabet")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("incomplete size prefix at offset {offset}")]
    SizePrefix { offset: usize },
    #[error("truncated graph6 string: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after offset {expected}")]
    TrailingData { expected: usize },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    Padding { offset: usize },
    #[error("vertex count {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },
    #[error("graph6 string encodes a graph with no vertices")]
    ZeroVertices,
}

/// Decodes one graph6 string (one line of a graph6 file). A leading
/// `>>graph6<<` marker and trailing newline characters are tolerated.
pub fn decode_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let stripped = line
        .strip_prefix(">>graph6<<")
        .unwrap_or(line)
        .trim_end_matches(['\r', '\n']);
    let bytes = stripped.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
    }

    let (n, prefix_len) = decode_size(bytes)?;
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    if n > MAX_GRAPH6_VERTICES {
        return Err(Graph6Error::TooLarge {
            n,
            max: MAX_GRAPH6_VERTICES,
        });
    }

    let bit_count = n * (n - 1) / 2;
    let payload_len = bit_count.div_ceil(6);
    let expected = prefix_len + payload_len;
    match bytes.len() {
        found if found < expected => {
            return Err(Graph6Error::Truncated { expected, found });
        }
        found if found > expected => {
            return Err(Graph6Error::TrailingData { expected });
        }
        _ => {}
    }

    let payload = &bytes[prefix_len..];
    let bit = |k: usize| (payload[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;

    // Padding bits beyond the triangle must be zero.
    for k in bit_count..payload_len * 6 {
        if bit(k) {
            return Err(Graph6Error::Padding {
                offset: prefix_len + payload_len - 1,
            });
        }
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
    Ok(Graph::from_edges(n, &edges).expect("triangle bits form a simple graph"))
}

/// Returns `(n, prefix length in bytes)`.
fn decode_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - OFFSET) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        // 36-bit size, bytes 2..8.
        if bytes.len() < 8 {
            return Err(Graph6Error::SizePrefix {
                offset: bytes.len(),
            });
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - OFFSET) as usize;
        }
        Ok((n, 8))
    } else {
        // 18-bit size, bytes 1..4.
        if bytes.len() < 4 {
            return Err(Graph6Error::SizePrefix {
                offset: bytes.len(),
            });
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = n << 6 | (b - OFFSET) as usize;
        }
        Ok((n, 4))
    }
}

/// Encodes a graph as a graph6 string; inverse of [`decode_graph6`].
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Graph6Error::TooLarge {
            n,
            max: MAX_GRAPH6_VERTICES,
        });
    }
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(126);
        out.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(OFFSET + (n & 0x3f) as u8);
    }

    let mut acc: u8 = 0;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    Ok(String::from_utf8(out).expect("offset-63 bytes are ASCII"))
}
