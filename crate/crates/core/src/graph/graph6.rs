//! graph6 encoding.
//!
//! Size header: `n + 63` for `n <= 62`, otherwise `~` followed by 18 bits
//! in three printable bytes. Body: the upper triangle of the adjacency
//! matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed
//! into 6-bit chunks with zero padding, each chunk offset by 63.

use std::io::BufRead;

use thiserror::Error;

use super::{Graph, GraphError};

const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("graph6 size not supported (only n <= {MAX_MEDIUM})")]
    UnsupportedSize,
    #[error("character {0:?} is outside the graph6 alphabet")]
    InvalidCharacter(char),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits at the end of the graph6 body")]
    TrailingBits,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn sextet(c: char) -> Result<u8, Graph6Error> {
    match c as u32 {
        63..=126 => Ok(c as u8 - 63),
        _ => Err(Graph6Error::InvalidCharacter(c)),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let chars: Vec<char> = text.chars().collect();
    let first = *chars.first().ok_or(Graph6Error::MalformedHeader)?;

    let (n, body) = if first == '~' {
        if chars.get(1) == Some(&'~') {
            return Err(Graph6Error::UnsupportedSize);
        }
        if chars.len() < 4 {
            return Err(Graph6Error::MalformedHeader);
        }
        let mut n = 0usize;
        for &c in &chars[1..4] {
            n = (n << 6) | sextet(c)? as usize;
        }
        if n <= MAX_SHORT {
            return Err(Graph6Error::MalformedHeader);
        }
        (n, &chars[4..])
    } else {
        (sextet(first)? as usize, &chars[1..])
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: body.len(),
        });
    }
    let values = body
        .iter()
        .map(|&c| sextet(c))
        .collect::<Result<Vec<_>, _>>()?;
    let bit = |k: usize| values[k / 6] >> (5 - k % 6) & 1 == 1;

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::TrailingBits);
    }
    Ok(Graph::new(n, edges)?)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_MEDIUM, "graph6 writer supports n <= {MAX_MEDIUM}");
    let mut out = String::new();
    if n <= MAX_SHORT {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut chunk = 0u8;
    let mut filled = 0;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            k += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    debug_assert_eq!(k, bits);
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

/// Reads one graph per non-empty line.
pub fn read_graph6_lines(reader: impl BufRead) -> Result<Vec<Graph>, Graph6Error> {
    reader
        .lines()
        .map_while(Result::ok)
        .filter(|line| !line.trim().is_empty())
        .map(|line| parse_graph6(&line))
        .collect()
}
