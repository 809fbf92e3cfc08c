//! graph6 encoding (header-less), following McKay's format description.
//!
//! The order is written as one byte `n + 63` for `n <= 62`, otherwise as
//! `~` followed by three 6-bit groups. Adjacency bits follow in the order
//! `(0,1), (0,2), (1,2), (0,3), ..`, packed six to a byte, each byte offset
//! by 63, with zero padding in the last group.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        (bytes[0] as usize - 63, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Graph6("unsupported order prefix".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b as usize - 63));
        (n, &bytes[4..])
    };
    if n == 0 || n > super::MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = (6 - nbits % 6) as u32;
        let last = body[expected - 1] - 63;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    debug_assert!(adj.iter().all(|&r| VertexSet(r).is_subset(VertexSet::full(n))));
    Ok(Graph::from_rows_unchecked(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        // Petersen graph, outer 5-cycle 0..4 and inner pentagram 5..9.
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(encode(&petersen), "IheA@GUAo");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::complete(2)), "A_");
        assert_eq!(encode(&Graph::complete(4)), "C~");
        // a-c, a-e, b-d, d-e on five vertices.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn long_order_prefix() {
        let g = Graph::cycle(64);
        let s = encode(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(decode(&s).unwrap(), g);
        let h = Graph::path(63);
        assert_eq!(decode(&encode(&h)).unwrap(), h);
    }

    #[test]
    fn header_and_newline_tolerated() {
        assert_eq!(decode(">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode("").is_err());
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("C\x20").is_err());
        assert!(decode("?").is_err());
        // order 3 has 3 data bits; the low three padding bits must be zero
        assert!(decode("B@").is_err());
        assert!(decode("Bw").is_ok());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=64).prop_flat_map(|n| {
            proptest::collection::vec(any::<u64>(), n).prop_map(move |raw| {
                let mut adj = vec![0u64; n];
                for u in 0..n {
                    for v in u + 1..n {
                        if (raw[u] >> (v % 64)) & 1 == 1 {
                            adj[u] |= 1 << v;
                            adj[v] |= 1 << u;
                        }
                    }
                }
                Graph::from_rows_unchecked(adj)
            })
        })
    }

    proptest! {
        #[test]
        fn roundtrip(g in arb_graph()) {
            let s = encode(&g);
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(decode(&s).unwrap(), g);
        }
    }
}
