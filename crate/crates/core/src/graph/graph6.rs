use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};
use std::io::BufRead;

const HEADER: &str = ">>graph6<<";

/// Encodes `g` as a graph6 record without a trailing newline.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(2 + n * n / 12);
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
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ascii")
}

/// Decodes one graph6 record. A single trailing newline and the optional
/// `>>graph6<<` header are accepted; anything else after the payload is not.
pub fn graph6_decode(text: &str) -> Result<Graph> {
    let mut s = text.strip_suffix('\n').unwrap_or(text);
    s = s.strip_suffix('\r').unwrap_or(s);
    s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 record".into()));
    }
    if let Some(p) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Parse(format!("byte {p} outside the graph6 range")));
    }
    let (n, body) = if bytes[0] != 126 {
        (bytes[0] as usize - 63, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(Error::CapacityExceeded("graph6 order above 258047".into()));
    } else if bytes.len() >= 4 {
        let n = bytes[1..4].iter().fold(0usize, |a, &b| a << 6 | (b - 63) as usize);
        if n < 63 {
            return Err(Error::Parse("non-canonical long order field".into()));
        }
        (n, &bytes[4..])
    } else {
        return Err(Error::Parse("truncated order field".into()));
    };
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded(format!(
            "{n} vertices exceeds the limit of {MAX_VERTICES}"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Parse(format!("payload has {} bytes, need {need}", body.len())));
    }
    if body.len() > need {
        return Err(Error::Parse("trailing bytes after payload".into()));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = (body[k / 6] - 63) >> (5 - k % 6) & 1;
            if b == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[need - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Error::Parse("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Reads graph6 records, skipping blank lines and `#` comment lines.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = graph6_decode(&line).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))?;
        out.push(g);
    }
    Ok(out)
}
