//! The graph6 encoding of simple undirected graphs.
//!
//! A record is the size prefix `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column (`(0,1), (0,2), (1,2), (0,3), …`),
//! packed six bits per byte with 63 added. The optional `>>graph6<<` header
//! is accepted on input and never written.

use egr_core::Graph;

pub const HEADER: &[u8] = b">>graph6<<";

/// Largest order accepted on input or output.
pub const MAX_ORDER: usize = 1 << 18;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("graph6 byte offset {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6ErrorKind {
    #[error("byte {0:#04x} outside the printable range 63..=126")]
    BadByte(u8),
    #[error("record ends inside the size prefix")]
    TruncatedSize,
    #[error("order {0} exceeds the limit")]
    TooLarge(u64),
    #[error("adjacency bits truncated: {needed} bytes needed, {found} present")]
    TruncatedBits { needed: usize, found: usize },
    #[error("trailing data after the record")]
    TrailingGarbage,
    #[error("padding bits are not zero")]
    NonzeroPadding,
    #[error("empty input")]
    Empty,
}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

/// Encodes `g` as one graph6 record, without header or newline.
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    assert!(n <= MAX_ORDER, "order {n} exceeds the graph6 limit");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    out
}

/// Decodes one record. A header and a single trailing line break are
/// tolerated; anything else after the record is an error.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let start = if bytes.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut end = bytes.len();
    if bytes[start..end].ends_with(b"\n") {
        end -= 1;
        if bytes[start..end].ends_with(b"\r") {
            end -= 1;
        }
    }
    parse_record(&bytes[start..end], start)
}

/// Decodes a file holding one record per line. Blank lines are skipped and
/// error offsets are relative to the start of the input.
pub fn parse_graph6_lines(bytes: &[u8]) -> Result<Vec<Graph>, Graph6Error> {
    let mut graphs = Vec::new();
    let mut offset = 0;
    for (k, line) in bytes.split(|&b| b == b'\n').enumerate() {
        let line_start = offset;
        offset += line.len() + 1;
        let mut body = line.strip_suffix(b"\r").unwrap_or(line);
        let mut base = line_start;
        if k == 0 && body.starts_with(HEADER) {
            body = &body[HEADER.len()..];
            base += HEADER.len();
        }
        if body.is_empty() {
            continue;
        }
        graphs.push(parse_record(body, base)?);
    }
    if graphs.is_empty() {
        return Err(err(0, Graph6ErrorKind::Empty));
    }
    Ok(graphs)
}

fn parse_record(rec: &[u8], base: usize) -> Result<Graph, Graph6Error> {
    if rec.is_empty() {
        return Err(err(base, Graph6ErrorKind::Empty));
    }
    if let Some(i) = rec.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(base + i, Graph6ErrorKind::BadByte(rec[i])));
    }
    let digits = |from: usize, count: usize| -> Result<u64, Graph6Error> {
        let slice = rec
            .get(from..from + count)
            .ok_or_else(|| err(base + rec.len(), Graph6ErrorKind::TruncatedSize))?;
        Ok(slice.iter().fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63)))
    };
    let (n, mut pos) = match rec[0] {
        126 if rec.get(1) == Some(&126) => (digits(2, 6)?, 8),
        126 => (digits(1, 3)?, 4),
        b => (u64::from(b - 63), 1),
    };
    if n > MAX_ORDER as u64 {
        return Err(err(base, Graph6ErrorKind::TooLarge(n)));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let found = rec.len() - pos;
    if found < needed {
        return Err(err(
            base + rec.len(),
            Graph6ErrorKind::TruncatedBits { needed, found },
        ));
    }
    if found > needed {
        return Err(err(base + pos + needed, Graph6ErrorKind::TrailingGarbage));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            let byte = rec[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = rec[pos + needed - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(base + pos + needed - 1, Graph6ErrorKind::NonzeroPadding));
        }
    }
    pos += needed;
    debug_assert_eq!(pos, rec.len());
    Ok(Graph::from_edges(n, edges).expect("decoded edges are simple"))
}
