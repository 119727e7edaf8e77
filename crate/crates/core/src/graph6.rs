//! graph6 encoding for graphs with at most 62 vertices.
//!
//! The upper triangle of the adjacency matrix is read column by column,
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per character
//! with each character stored as `bits + 63`. The final character is
//! zero-padded to a 6-bit boundary.

use std::io::BufRead;

use crate::error::{Error, Graph6Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_ORDER: usize = 62;
const HEADER: &str = ">>graph6<<";

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. Trailing whitespace and a leading `>>graph6<<`
/// header are ignored.
pub fn from_graph6(line: &str) -> std::result::Result<Graph, Graph6Error> {
    let line = line.trim_end();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&size) = bytes.first() else {
        return Err(Graph6Error::Empty);
    };
    for (position, ch) in line.chars().enumerate() {
        if !(63..=126).contains(&(ch as u32)) {
            return Err(Graph6Error::CharOutOfRange { position, found: ch });
        }
    }
    if size == 126 {
        return Err(Graph6Error::UnsupportedOrder);
    }
    let n = (size - OFFSET) as usize;
    let data = &bytes[1..];
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Graph6Error::BadLength { order: n, expected, found: data.len() });
    }

    let mut g_edges = Vec::new();
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                g_edges.push((u, v));
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = data[data.len() - 1] - OFFSET;
        let pad = 6 - k % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_edges(n, g_edges).expect("decoded upper triangle is a simple graph"))
}

/// Encodes `g` as a graph6 line (no header, no newline).
pub fn to_graph6(g: &Graph) -> std::result::Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder);
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// One non-blank line of a graph6 corpus.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    /// 1-based line number in the source.
    pub line_no: usize,
    pub text: String,
    pub graph: std::result::Result<Graph, Graph6Error>,
}

/// Splits a corpus into entries, skipping blank lines.
pub fn parse_corpus(text: &str) -> Vec<CorpusEntry> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let trimmed = raw.trim();
            let body = trimmed.strip_prefix(HEADER).unwrap_or(trimmed);
            (!body.is_empty()).then(|| CorpusEntry {
                line_no: i + 1,
                text: body.to_string(),
                graph: from_graph6(body),
            })
        })
        .collect()
}

/// Reads a corpus from any buffered reader.
pub fn read_corpus<R: BufRead>(mut reader: R) -> Result<Vec<CorpusEntry>> {
    let mut text = String::new();
    reader.read_to_string(&mut text).map_err(Error::from)?;
    Ok(parse_corpus(&text))
}

/// Reads a corpus file, returning only the graphs. Any malformed line is an error.
pub fn load_graphs(path: impl AsRef<std::path::Path>) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)?;
    parse_corpus(&text)
        .into_iter()
        .map(|e| e.graph.map_err(Error::from))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_lines() {
        assert_eq!(from_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(from_graph6("Ch").unwrap(), Graph::path(4));
        let empty = from_graph6("?").unwrap();
        assert_eq!(empty.n(), 0);
        assert_eq!(to_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(to_graph6(&Graph::path(4)).unwrap(), "Ch");
        assert_eq!(to_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(to_graph6(&Graph::empty(1)).unwrap(), "@");
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(from_graph6(">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn malformed_lines() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(from_graph6("C ~"), Err(Graph6Error::CharOutOfRange { position: 1, .. })));
        assert!(matches!(from_graph6("C~~"), Err(Graph6Error::BadLength { order: 4, .. })));
        assert!(matches!(from_graph6("C"), Err(Graph6Error::BadLength { .. })));
        // n = 3 uses 3 of the 6 bits; '@' is 000001, a set padding bit
        assert_eq!(from_graph6("B@"), Err(Graph6Error::NonzeroPadding));
        assert_eq!(from_graph6("~?@~"), Err(Graph6Error::UnsupportedOrder));
        assert_eq!(to_graph6(&Graph::empty(63)), Err(Graph6Error::UnsupportedOrder));
    }

    #[test]
    fn corpus_lines() {
        let entries = parse_corpus(">>graph6<<C~\n\nCh\nxx\n");
        assert_eq!(entries.len(), 3);
        assert_eq!(entries[0].line_no, 1);
        assert_eq!(entries[1].line_no, 3);
        assert!(entries[2].graph.is_err());
        assert_eq!(entries[2].line_no, 4);
    }
}
