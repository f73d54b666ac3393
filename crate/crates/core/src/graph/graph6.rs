//! graph6 codec.
//!
//! Order header: one byte `n + 63` for `n ≤ 62`, otherwise `~` followed by
//! three 6-bit groups (18 bits). The 8-byte long form (`~~` + 36 bits) is
//! recognised but rejected above [`MAX_ORDER`]. The body packs the upper
//! triangle column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) into
//! 6-bit groups, zero padded, each offset by 63.

use super::{Graph, GraphBuilder, GraphError};

pub const MAX_ORDER: usize = 258_047;

const OPTIONAL_HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (skip, line) = match line.strip_prefix(OPTIONAL_HEADER) {
        Some(rest) => (OPTIONAL_HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::MalformedHeader("empty input".into()));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::InvalidByte { offset: skip + i, byte: b });
        }
    }
    let (n, header_len) = decode_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < expected {
        return Err(GraphError::TruncatedBitstream { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(GraphError::TrailingGarbage { offset: skip + header_len + expected });
    }

    let mut builder = GraphBuilder::with_vertices(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let group = body[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                builder.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(GraphError::TrailingGarbage { offset: skip + header_len + expected - 1 });
        }
    }
    Ok(builder.build())
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    let group = |i: usize| -> Result<usize, GraphError> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| GraphError::MalformedHeader("order field truncated".into()))
    };
    if bytes[0] != 126 {
        return Ok((bytes[0] as usize - 63, 1));
    }
    if bytes.get(1) == Some(&126) {
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | group(i)?;
        }
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge { n, limit: MAX_ORDER });
        }
        return Ok((n, 8));
    }
    let n = (group(1)? << 12) | (group(2)? << 6) | group(3)?;
    if n < 63 {
        return Err(GraphError::MalformedHeader(format!("non-canonical order field for n={n}")));
    }
    Ok((n, 4))
}

pub fn write_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge { n, limit: MAX_ORDER });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + bits.div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut body = vec![0u8; bits.div_ceil(6)];
    for (u, v) in g.edges() {
        // column-major upper-triangle position of (u, v), u < v
        let k = v * (v - 1) / 2 + u;
        body[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(body.into_iter().map(|b| b + 63));
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}
