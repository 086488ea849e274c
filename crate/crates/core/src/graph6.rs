//! graph6 encoding and decoding.
//!
//! The order `n` is written as `N(n)`: one byte `n + 63` for `n <= 62`,
//! `'~'` plus three 6-bit groups for `n <= 258047`, and `"~~"` plus six
//! groups beyond that. The upper triangle follows in column order
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per byte, big-endian,
//! each byte offset by 63 and the last one zero-padded.
//!
//! The decoder accepts only canonical encodings (shortest `N(n)`, zero
//! padding), so `encode(decode(s)) == s` for every accepted `s`.

use thiserror::Error;

use crate::graph::Graph;

pub const HEADER: &[u8] = b">>graph6<<";

const SHORT_MAX: u64 = 62;
const MEDIUM_MAX: u64 = 258_047;
const LONG_MAX: u64 = 68_719_476_735;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated order field")]
    TruncatedOrder,
    #[error("order {0} is not written in its shortest form")]
    NonMinimalOrder(u64),
    #[error("order {0} is too large for this platform")]
    OrderTooLarge(u64),
    #[error("adjacency data has {found} bytes, expected {expected}")]
    Length { expected: u128, found: usize },
    #[error("padding bits in the last byte are not zero")]
    NonZeroPadding,
}

fn encode_order(n: u64, out: &mut Vec<u8>) {
    let groups = if n <= SHORT_MAX {
        out.push(n as u8 + 63);
        return;
    } else if n <= MEDIUM_MAX {
        out.push(126);
        3
    } else {
        assert!(n <= LONG_MAX, "graph6 cannot encode order {n}");
        out.extend_from_slice(&[126, 126]);
        6
    };
    for i in (0..groups).rev() {
        out.push(((n >> (6 * i)) & 63) as u8 + 63);
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n as u64, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn sextet(data: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    let byte = data[offset];
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Graph6Error::InvalidByte { offset, byte })
    }
}

/// Returns the order and the offset at which adjacency data begins.
fn decode_order(data: &[u8]) -> Result<(u64, usize), Graph6Error> {
    let first = *data.first().ok_or(Graph6Error::Empty)?;
    if first != 126 {
        return Ok((sextet(data, 0)? as u64, 1));
    }
    let (start, groups, min) = if data.get(1) == Some(&126) {
        (2, 6, MEDIUM_MAX + 1)
    } else {
        (1, 3, SHORT_MAX + 1)
    };
    if data.len() < start + groups {
        return Err(Graph6Error::TruncatedOrder);
    }
    let mut n = 0u64;
    for i in start..start + groups {
        n = (n << 6) | sextet(data, i)? as u64;
    }
    if n < min {
        return Err(Graph6Error::NonMinimalOrder(n));
    }
    Ok((n, start + groups))
}

/// Decodes one graph6 string, with or without the `>>graph6<<` header.
/// Line terminators are not accepted; strip them first.
pub fn decode(input: &[u8]) -> Result<Graph, Graph6Error> {
    let data = input.strip_prefix(HEADER).unwrap_or(input);
    let (n, start) = decode_order(data)?;
    let bits = n as u128 * n.saturating_sub(1) as u128 / 2;
    let expected = bits.div_ceil(6);
    let body = &data[start..];
    if body.len() as u128 != expected {
        return Err(Graph6Error::Length {
            expected,
            found: body.len(),
        });
    }
    let n = usize::try_from(n).map_err(|_| Graph6Error::OrderTooLarge(n))?;
    for offset in start..data.len() {
        sextet(data, offset)?;
    }
    let pad = (expected * 6 - bits) as u32;
    if pad > 0 && (data[data.len() - 1] - 63) & ((1u8 << pad) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding);
    }

    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v).expect("indices in range and distinct");
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn decode_str(s: &str) -> Result<Graph, Graph6Error> {
    decode(s.as_bytes())
}
