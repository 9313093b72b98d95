//! The graph6 interchange format, restricted to the single-byte order header.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order representable with a one-byte graph6 header.
pub const MAX_GRAPH6_ORDER: usize = 62;

const BIAS: u8 = 63;

/// Encodes `g` as graph6: the order as one byte, then the upper-triangle
/// adjacency bits in column-major order packed six per byte.
///
/// ```
/// use resolvedim::{Graph, to_graph6};
/// assert_eq!(to_graph6(&Graph::complete(3).unwrap()).unwrap(), "Bw");
/// ```
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::TooLarge {
            n,
            cap: MAX_GRAPH6_ORDER,
        });
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut bytes = vec![0u8; bit_count.div_ceil(6)];
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                bytes[bit / 6] |= 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    let mut out = String::with_capacity(bytes.len() + 1);
    out.push((n as u8 + BIAS) as char);
    out.extend(bytes.into_iter().map(|b| (b + BIAS) as char));
    Ok(out)
}

/// Decodes a graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` prefix are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (&header, body) = bytes
        .split_first()
        .ok_or_else(|| Error::MalformedHeader("empty input".into()))?;
    if !(BIAS..=BIAS + MAX_GRAPH6_ORDER as u8).contains(&header) {
        return Err(Error::MalformedHeader(format!(
            "header byte {header:#04x} does not encode an order in 0..={MAX_GRAPH6_ORDER}"
        )));
    }
    let n = (header - BIAS) as usize;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() < expected {
        return Err(Error::TruncatedBitstream {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Error::MalformedHeader(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut data = Vec::with_capacity(expected);
    for &b in body {
        if !(BIAS..=BIAS + 63).contains(&b) {
            return Err(Error::InvalidCharacter(b as char));
        }
        data.push(b - BIAS);
    }

    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if data[bit / 6] >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, edges)
}
