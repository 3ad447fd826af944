//! graph6 encoding, header-less variant.
//!
//! The order is written as `N(n)`: one byte `n + 63` for `n ≤ 62`, `~`
//! followed by three 6-bit groups for `n ≤ 258047`, or `~~` followed by six
//! groups beyond that. The upper triangle of the adjacency matrix follows,
//! column by column (`(0,1), (0,2), (1,2), (0,3), …`), packed six bits per
//! byte with zero padding.

use super::{Graph, GraphError};

const BIAS: u8 = 63;

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(b'~');
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 0x3f) as u8 + BIAS));
    } else {
        out.extend(b"~~");
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 0x3f) as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |offset: usize, message: &str| GraphError::Graph6 { offset, message: message.into() };
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(BIAS..=126).contains(&b)) {
        return Err(err(pos, "byte outside the graph6 range 63..=126"));
    }
    let group = |slice: &[u8]| slice.iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
    let (n, header) = if bytes[0] != b'~' {
        ((bytes[0] - BIAS) as usize, 1)
    } else if bytes.get(1) != Some(&b'~') {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated order field"));
        }
        let n = group(&bytes[1..4]);
        if n <= 62 {
            return Err(err(1, "order below 63 must use the one-byte form"));
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(err(bytes.len(), "truncated order field"));
        }
        let n = group(&bytes[2..8]);
        if n <= 258_047 {
            return Err(err(2, "order below 258048 must use the four-byte form"));
        }
        (n, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(err(
            bytes.len().min(expected),
            &format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }
    let body = &bytes[header..];
    let bit = |k: usize| ((body[k / 6] - BIAS) >> (5 - k % 6)) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(err(bytes.len() - 1, "nonzero padding bits"));
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
    Graph::from_edges(n, &edges)
}
