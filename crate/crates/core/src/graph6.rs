//! graph6 encoding as produced by exhaustive graph generators.
//!
//! Only the forms needed for graphs on at most 128 vertices are emitted: a one
//! byte order for `n <= 62` and the `~` plus three bytes form above that.
//! The eight byte `~~` form is recognised when parsing and rejected as too
//! large.

use std::io::BufRead;

use crate::error::{Graph6Error, Result};
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

const HEADER: &[u8] = b">>graph6<<";

fn check_byte(offset: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Graph6Error::InvalidByte { offset, byte })
    }
}

/// Decodes one graph. An optional `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let text = text.trim_ascii();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    if text.is_empty() {
        return Err(Graph6Error::Empty.into());
    }
    let (n, body_start) = if text[0] != 126 {
        (check_byte(0, text[0])? as usize, 1)
    } else if text.get(1) == Some(&126) {
        if text.len() < 8 {
            return Err(Graph6Error::MalformedLength.into());
        }
        let mut n = 0usize;
        for (i, &b) in text[2..8].iter().enumerate() {
            n = (n << 6) | check_byte(i + 2, b)? as usize;
        }
        (n, 8)
    } else {
        if text.len() < 4 {
            return Err(Graph6Error::MalformedLength.into());
        }
        let mut n = 0usize;
        for (i, &b) in text[1..4].iter().enumerate() {
            n = (n << 6) | check_byte(i + 1, b)? as usize;
        }
        if n < 63 {
            return Err(Graph6Error::MalformedLength.into());
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n).into());
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &text[body_start..];
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: body.len(),
        }
        .into());
    }
    let mut values = Vec::with_capacity(body.len());
    for (i, &b) in body.iter().enumerate() {
        values.push(check_byte(body_start + i, b)?);
    }
    let bit = |k: usize| values[k / 6] >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding.into());
    }

    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` without a header or trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// One entry of a graph6 stream: the 1-based line number, the raw line and
/// the decoding result.
#[derive(Debug, Clone)]
pub struct StreamEntry {
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph>,
}

/// Reads one graph per line, skipping blank lines. Decoding failures are
/// yielded as entries, not dropped.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = std::io::Result<StreamEntry>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(e)),
            Ok(text) if text.trim().is_empty() => None,
            Ok(text) => {
                let trimmed = text.trim().to_owned();
                let graph = parse_graph6(trimmed.as_bytes());
                Some(Ok(StreamEntry {
                    line: i + 1,
                    text: trimmed,
                    graph,
                }))
            }
        })
}
