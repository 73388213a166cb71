//! graph6 codec for graphs of order at most 62.
//!
//! Layout: byte 0 is `n + 63`; the upper-triangle adjacency bits follow
//! in column-major order (`j = 1..n-1`, `i = 0..j-1`), packed big-endian
//! into 6-bit groups, zero-padded, each group offset by 63 into the
//! printable ASCII range.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;

/// Encodes a labeled graph as its graph6 string.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_ORDER);
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut bytes = Vec::with_capacity(1 + bit_count.div_ceil(6));
    bytes.push(n as u8 + OFFSET);

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((group << (6 - filled)) + OFFSET);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string back into a labeled graph. Strict: byte
/// range, exact length, and zero padding are all enforced.
pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6Length {
            actual: 0,
            expected: 1,
        });
    }
    for (position, &byte) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Error::Graph6Byte { byte, position });
        }
    }
    let n = (bytes[0] - OFFSET) as usize;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = 1 + bit_count.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Graph6Length {
            actual: bytes.len(),
            expected,
        });
    }

    let mut adj = vec![0u64; n];
    let mut cursor = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = bytes[1 + cursor / 6] - OFFSET;
            let bit = group >> (5 - cursor % 6) & 1;
            if bit == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            cursor += 1;
        }
    }
    if !cursor.is_multiple_of(6) {
        let last = bytes[bytes.len() - 1] - OFFSET;
        let padding_bits = 6 - cursor % 6;
        if last & ((1 << padding_bits) - 1) != 0 {
            return Err(Error::Graph6Padding);
        }
    }
    Ok(Graph::from_adj_unchecked(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn k4_encodes_to_known_string() {
        assert_eq!(encode(&families::complete(4).unwrap()), "C~");
    }

    #[test]
    fn p4_encodes_to_known_string() {
        // Bits over pairs (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) are 101001.
        assert_eq!(encode(&families::path(4).unwrap()), "Ch");
    }

    #[test]
    fn p2_encodes_to_known_string() {
        assert_eq!(encode(&families::path(2).unwrap()), "A_");
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(encode(&Graph::build(0, &[]).unwrap()), "?");
        assert_eq!(encode(&Graph::build(1, &[]).unwrap()), "@");
        assert_eq!(decode("?").unwrap().order(), 0);
        assert_eq!(decode("@").unwrap().order(), 1);
    }

    #[test]
    fn decode_rejects_bad_byte() {
        assert!(matches!(decode("C\u{7f}~"), Err(Error::Graph6Byte { .. })));
        assert!(matches!(
            decode(" C"),
            Err(Error::Graph6Byte { position: 0, .. })
        ));
    }

    #[test]
    fn decode_rejects_wrong_length() {
        assert!(matches!(decode("C"), Err(Error::Graph6Length { .. })));
        assert!(matches!(decode("C~~"), Err(Error::Graph6Length { .. })));
    }

    #[test]
    fn decode_rejects_nonzero_padding() {
        // n=2 has one adjacency bit and five padding bits; 0b111111 + 63 = '~'.
        assert!(matches!(decode("A~"), Err(Error::Graph6Padding)));
    }

    #[test]
    fn round_trip_is_labeled_identity() {
        let g = Graph::build(7, &[(0, 3), (3, 5), (1, 2), (4, 6), (0, 6)]).unwrap();
        let back = decode(&encode(&g)).unwrap();
        assert_eq!(back, g);
    }
}
