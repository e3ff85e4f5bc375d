//! graph6 encoding and decoding.
//!
//! graph6 packs a simple undirected graph into printable ASCII: every byte
//! carries a value in `0..64` offset by 63, the order comes first (one byte
//! up to order 62, `'~'` plus three bytes beyond), then the upper adjacency
//! triangle in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! six bits per byte, most significant bit first, zero-padded to a six-bit
//! boundary.
//!
//! Decoding is strict: every byte must be in the printable range, the bit
//! field must be exactly as long as the order requires, and padding bits
//! must be zero. Orders outside `1..=64` are rejected.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const LONG_ORDER_MARK: u8 = 126; // '~'

/// Errors from [`parse_graph6`]. Each malformation is reported distinctly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    /// Empty input line.
    Empty,
    /// Byte outside the printable graph6 range `63..=126`.
    MalformedChar { pos: usize, byte: u8 },
    /// The encoded order is zero.
    OrderZero,
    /// The encoded order exceeds the 64-vertex cap.
    OrderTooLarge(u64),
    /// The adjacency bit field stops short of `n(n-1)/2` bits.
    Truncated {
        expected_bytes: usize,
        found_bytes: usize,
    },
    /// Extra bytes after the adjacency bit field.
    TrailingData { pos: usize },
    /// Nonzero bits in the zero padding of the last byte.
    NonzeroPadding,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::MalformedChar { pos, byte } => {
                write!(f, "byte 0x{byte:02x} at position {pos} is not a graph6 character")
            }
            Graph6Error::OrderZero => write!(f, "graph6 order is zero"),
            Graph6Error::OrderTooLarge(n) => {
                write!(f, "graph6 order {n} exceeds the supported maximum of 64")
            }
            Graph6Error::Truncated { expected_bytes, found_bytes } => write!(
                f,
                "adjacency bits truncated: expected {expected_bytes} data bytes, found {found_bytes}"
            ),
            Graph6Error::TrailingData { pos } => {
                write!(f, "trailing data after adjacency bits at position {pos}")
            }
            Graph6Error::NonzeroPadding => write!(f, "nonzero padding bits"),
        }
    }
}

impl core::error::Error for Graph6Error {}

/// Decodes one graph6 line (no `>>graph6<<` header) into a [`Graph`].
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::MalformedChar { pos, byte: b });
        }
    }

    let (n, data_start) = decode_order(bytes)?;
    if n == 0 {
        return Err(Graph6Error::OrderZero);
    }
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let n = n as usize;

    let bit_count = n * (n - 1) / 2;
    let expected_bytes = bit_count.div_ceil(6);
    let data = &bytes[data_start..];
    if data.len() < expected_bytes {
        return Err(Graph6Error::Truncated {
            expected_bytes,
            found_bytes: data.len(),
        });
    }
    if data.len() > expected_bytes {
        return Err(Graph6Error::TrailingData {
            pos: data_start + expected_bytes,
        });
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // The remaining bits of the last byte are padding and must be zero.
    if !bit_count.is_multiple_of(6) {
        let last = data[expected_bytes - 1] - OFFSET;
        let pad_bits = 6 - bit_count % 6;
        if last & ((1 << pad_bits) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }

    Ok(Graph::from_edges(n, &edges).expect("decoded edges are in range"))
}

fn decode_order(bytes: &[u8]) -> Result<(u64, usize), Graph6Error> {
    if bytes[0] != LONG_ORDER_MARK {
        return Ok(((bytes[0] - OFFSET) as u64, 1));
    }
    if bytes.len() >= 2 && bytes[1] == LONG_ORDER_MARK {
        // Eight-byte form: orders from 258048 up, always out of range here.
        if bytes.len() < 8 {
            return Err(Graph6Error::Truncated {
                expected_bytes: 8,
                found_bytes: bytes.len(),
            });
        }
        let mut n = 0u64;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - OFFSET) as u64;
        }
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::Truncated {
            expected_bytes: 4,
            found_bytes: bytes.len(),
        });
    }
    let mut n = 0u64;
    for &b in &bytes[1..4] {
        n = n << 6 | (b - OFFSET) as u64;
    }
    Ok((n, 4))
}

/// Encodes a [`Graph`] as a canonical graph6 string.
///
/// `parse_graph6(to_graph6(g))` reproduces `g` bit-exactly.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(LONG_ORDER_MARK);
        out.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(OFFSET + (n & 0x3f) as u8);
    }

    let mut acc = 0u8;
    let mut filled = 0u8;
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

    // Every byte is 63..=126, printable ASCII.
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
