//! Bit-exact graph6 encoding and decoding (short form, order < 63).
//!
//! Layout: one header byte `63 + order`, then the upper-triangle edge bits in
//! column order (0,1), (0,2), (1,2), (0,3), ... packed big-endian into 6-bit
//! groups, each group offset by 63, with zero padding to a group boundary.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("record is not ASCII graph6 at byte {offset}")]
    NotAscii { offset: usize },
    #[error("malformed header byte {byte} at offset 0 (long-form and orders >= 63 unsupported)")]
    UnsupportedHeader { byte: u8 },
    #[error("invalid edge-data byte {byte} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("truncated edge-bit region: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage starting at byte {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in final data byte at offset {offset}")]
    NonzeroPadding { offset: usize },
}

fn data_byte_count(order: usize) -> usize {
    let bits = order * order.saturating_sub(1) / 2;
    bits.div_ceil(6)
}

/// Parses one graph6 record (no trailing newline).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let header = bytes[0];
    if !(63..126).contains(&header) {
        return Err(Graph6Error::UnsupportedHeader { byte: header });
    }
    let order = (header - 63) as usize;
    let expected = data_byte_count(order);
    let data = &bytes[1..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingGarbage { offset: 1 + expected });
    }
    let mut g = Graph::empty(order).expect("order < 63");
    let mut bit = 0usize;
    'cols: for v in 1..order {
        for u in 0..v {
            let byte = data[bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte {
                    byte,
                    offset: 1 + bit / 6,
                });
            }
            let group = byte - 63;
            if group >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
            if bit == order * (order - 1) / 2 {
                break 'cols;
            }
        }
    }
    // Validate the final group's padding and any byte the edge loop never
    // reached (order 0 and 1 have no data bytes at all).
    if expected > 0 {
        let last = data[expected - 1];
        if !(63..=126).contains(&last) {
            return Err(Graph6Error::InvalidByte {
                byte: last,
                offset: expected,
            });
        }
        let used = order * (order - 1) / 2 - 6 * (expected - 1);
        let pad_mask = (1u8 << (6 - used)) - 1;
        if (last - 63) & pad_mask != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: expected });
        }
    }
    Ok(g)
}

/// Encodes a graph as one graph6 record.
///
/// Always succeeds: [`Graph`] construction already enforces the short-form
/// order limit.
pub fn emit_graph6(g: &Graph) -> String {
    let order = g.order();
    let mut out = Vec::with_capacity(1 + data_byte_count(order));
    out.push(63 + order as u8);
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..order {
        for u in 0..v {
            group = group << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        emit_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
        parse_graph6(text)
    }
}

// Rebuilds a graph from packed upper-triangle bits (the memo-table key
// format used by the hereditary sweeps).
pub(crate) fn graph_from_triangle_bits(order: usize, bits: u64) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(order)?;
    let mut idx = 0;
    for v in 1..order {
        for u in 0..v {
            if bits >> idx & 1 == 1 {
                g.add_edge(u, v);
            }
            idx += 1;
        }
    }
    Ok(g)
}
