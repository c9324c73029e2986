//! graph6 interchange: `N(n)` header followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per byte (big-endian
//! within each group) and offset by 63.

use super::{bit, Graph, VertexSet, MAX_ORDER};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const OPTIONAL_HEADER: &str = ">>graph6<<";

fn push_size(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + OFFSET) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + OFFSET) as char);
        }
    }
}

/// Encode without a trailing newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + OFFSET) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + OFFSET) as char);
    }
    out
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - OFFSET),
        Some(&b) => Err(Error::Graph6 {
            offset,
            reason: format!("byte 0x{b:02x} outside the printable range 63..=126"),
        }),
        None => Err(Error::Graph6 { offset, reason: "unexpected end of input".into() }),
    }
}

/// Decode one graph6 line. A trailing newline and the optional `>>graph6<<`
/// prefix are accepted; byte offsets in errors refer to the trimmed line.
pub fn decode_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(OPTIONAL_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 { offset: 0, reason: "empty line".into() });
    }

    let (n, mut pos) = match sextet(bytes, 0)? {
        63 => {
            if bytes.get(1) == Some(&126) {
                return Err(Error::Graph6 {
                    offset: 1,
                    reason: "orders beyond 258047 are not supported".into(),
                });
            }
            let mut n = 0usize;
            for k in 1..=3 {
                n = (n << 6) | sextet(bytes, k)? as usize;
            }
            if n <= 62 {
                return Err(Error::Graph6 {
                    offset: 1,
                    reason: format!("long size form used for small order {n}"),
                });
            }
            (n, 4)
        }
        small => (small as usize, 1),
    };
    if n > MAX_ORDER {
        return Err(Error::OrderCap { order: n, cap: MAX_ORDER });
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    let expected = pos + total_bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Graph6 {
            offset: bytes.len().min(expected),
            reason: format!("expected {expected} bytes for order {n}, found {}", bytes.len()),
        });
    }

    let mut adj = vec![0 as VertexSet; n];
    let mut current = 0u8;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                current = sextet(bytes, pos)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if (current >> left) & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
        }
    }
    if left > 0 && current & ((1 << left) - 1) != 0 {
        return Err(Error::Graph6 { offset: pos - 1, reason: "nonzero padding bits".into() });
    }
    Graph::from_rows(adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_zero_is_question_mark() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(encode_graph6(&g), "?");
        assert_eq!(decode_graph6("?").unwrap(), g);
    }

    #[test]
    fn known_strings() {
        // petgraph's fixture: 5 vertices, edges 0-2 0-4 1-3 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(encode_graph6(&Graph::complete(4).unwrap()), "C~");
        let k4 = decode_graph6("C~\n").unwrap();
        assert_eq!(k4, Graph::complete(4).unwrap());
        assert_eq!(decode_graph6(">>graph6<<C~").unwrap(), k4);
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::complete_bipartite(40, 60).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert!(matches!(decode_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(decode_graph6("C"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(decode_graph6("C~~"), Err(Error::Graph6 { .. })));
        // order 3 has 3 bits; "B" + 'A'(=2) sets a padding bit
        assert!(matches!(decode_graph6("BA"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(decode_graph6("C "), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(decode_graph6("~??B"), Err(Error::Graph6 { offset: 1, .. })));
        // order 130 via the long form
        assert!(matches!(decode_graph6("~?AA"), Err(Error::OrderCap { order: 130, .. })));
    }
}
