//! graph6 encoding (header-less), as produced by nauty's `geng`.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

/// Decodes one graph6 string. Byte offsets in errors are relative to `text`.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty input"));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(pos, format!("byte 0x{:02x} outside the graph6 range", bytes[pos])));
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(parse_err(bytes.len(), "truncated length prefix"));
        }
        if bytes[1] == 126 {
            return Err(parse_err(1, "eight-byte length prefix not supported"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 63 {
            return Err(parse_err(1, format!("long length prefix used for n = {n}")));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(parse_err(0, format!("{n} vertices exceeds the supported maximum of {MAX_VERTICES}")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = header_len + nbits.div_ceil(6);
    if bytes.len() < expected {
        return Err(parse_err(bytes.len(), format!("expected {expected} bytes, found {}", bytes.len())));
    }
    if bytes.len() > expected {
        return Err(parse_err(expected, "trailing bytes after the edge bitstream"));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[header_len + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Encodes a graph in graph6 form.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses one graph per non-blank line. Errors carry the 1-based line number.
pub fn parse_lines(text: &str) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| from_graph6(l.trim_end_matches('\r')).map_err(|e| (i + 1, e)))
        .collect()
}
