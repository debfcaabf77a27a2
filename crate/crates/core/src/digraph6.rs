//! digraph6 records: `&`, one order byte `n + 63`, then the full row-major
//! `n × n` adjacency matrix packed six bits per byte (most significant bit
//! first, value + 63), zero-padded.

use crate::digraph::{bit, Digraph};
use crate::error::{Error, Result};
use crate::MAX_ORDER;

/// Number of bytes after the header for a digraph of order `n`.
pub fn body_len(n: usize) -> usize {
    (n * n).div_ceil(6)
}

/// Encodes `d`, including the leading `&`.
pub fn encode(d: &Digraph) -> String {
    String::from_utf8(encode_masks(d.out_masks())).expect("digraph6 is ASCII")
}

/// Encodes out-neighbour rows directly (bit `w` of `rows[u]` is the arc
/// `u→w`).
pub(crate) fn encode_masks(rows: &[u64]) -> Vec<u8> {
    let n = rows.len();
    let mut buf = Vec::with_capacity(2 + body_len(n));
    buf.push(b'&');
    buf.push((n + 63) as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for row in rows {
        for w in 0..n {
            acc = (acc << 1) | ((row >> w) & 1) as u8;
            filled += 1;
            if filled == 6 {
                buf.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        buf.push((acc << (6 - filled)) + 63);
    }
    buf
}

/// Decodes one record; the leading `&` is optional and trailing whitespace
/// is ignored.
pub fn decode(line: &str) -> Result<Digraph> {
    let bytes = line.trim_end().as_bytes();
    let bytes = bytes.strip_prefix(b"&").unwrap_or(bytes);
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Digraph6("empty record".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::Digraph6(format!("invalid order byte {head}")));
    }
    let n = (head - 63) as usize;
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Digraph6(format!(
            "order {n} outside supported range 1..={MAX_ORDER}"
        )));
    }
    if body.len() != body_len(n) {
        return Err(Error::Digraph6(format!(
            "expected {} data bytes for order {n}, found {}",
            body_len(n),
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Digraph6(format!(
                "invalid data byte {b} at offset {i}"
            )));
        }
        let chunk = b - 63;
        for k in 0..6 {
            let idx = i * 6 + k;
            if (chunk >> (5 - k)) & 1 == 0 {
                continue;
            }
            if idx >= n * n {
                return Err(Error::Digraph6("nonzero padding bits".into()));
            }
            let (u, w) = (idx / n, idx % n);
            if u == w {
                return Err(Error::Digraph6(format!("self-loop at vertex {u}")));
            }
            rows[u] |= bit(w);
        }
    }
    Digraph::from_out_masks(rows)
}
