//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column ((0,1), (0,2), (1,2), (0,3), ..), packed
//! big-endian six bits per byte with 63 added to every byte.

use thiserror::Error;

use super::{Graph, VertexSet, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("malformed size header at offset {offset}")]
    MalformedHeader { offset: usize },
    #[error("graph6 line declares {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("edge data truncated at offset {offset}")]
    Truncated { offset: usize },
    #[error("trailing garbage at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in byte at offset {offset}")]
    NonZeroPadding { offset: usize },
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        None => Err(Graph6Error::Truncated { offset }),
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Graph6Error::ByteOutOfRange { offset, byte: b }),
    }
}

/// Parses one graph6 line. A trailing newline and an optional `>>graph6<<`
/// prefix are accepted; error offsets count bytes from the start of the line.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let base = if line.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let bytes = &line.as_bytes()[base..];
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let first = sextet(bytes, 0).map_err(|e| shift(e, base))?;
    let (n, mut pos) = if first < 63 {
        (first as usize, 1)
    } else {
        // 126 followed by three sextets (18-bit size) or by 126 and six sextets.
        if bytes.get(1) == Some(&126) {
            let mut n = 0usize;
            for k in 0..6 {
                n = (n << 6) | sextet(bytes, 2 + k).map_err(|e| shift(e, base))? as usize;
            }
            if n <= 258_047 {
                return Err(Graph6Error::MalformedHeader { offset: base });
            }
            (n, 8)
        } else {
            let mut n = 0usize;
            for k in 0..3 {
                n = (n << 6) | sextet(bytes, 1 + k).map_err(|e| shift(e, base))? as usize;
            }
            if n <= 62 {
                return Err(Graph6Error::MalformedHeader { offset: base });
            }
            (n, 4)
        }
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    let data_bytes = total_bits.div_ceil(6);
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut bit = 0usize;
    let (mut i, mut j) = (0usize, 1usize);
    for _ in 0..data_bytes {
        let x = sextet(bytes, pos).map_err(|e| shift(e, base))?;
        for k in (0..6).rev() {
            let set = (x >> k) & 1 == 1;
            if bit < total_bits {
                if set {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if set {
                return Err(Graph6Error::NonZeroPadding { offset: base + pos });
            }
            bit += 1;
        }
        pos += 1;
    }
    if pos < bytes.len() {
        return Err(Graph6Error::TrailingGarbage { offset: base + pos });
    }
    Ok(Graph::from_adjacency(adj).expect("graph6 decoding yields a simple graph"))
}

fn shift(e: Graph6Error, base: usize) -> Graph6Error {
    match e {
        Graph6Error::ByteOutOfRange { offset, byte } => Graph6Error::ByteOutOfRange {
            offset: offset + base,
            byte,
        },
        Graph6Error::Truncated { offset } => Graph6Error::Truncated {
            offset: offset + base,
        },
        other => other,
    }
}

/// Canonical graph6 encoding: shortest size header, zero padding.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for k in (0..3).rev() {
            out.push(63 + ((n >> (6 * k)) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | col.contains(i) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
