//! `.trn` text format and DOT export.
//!
//! ```text
//! trn 1
//! 3
//! 010
//! 001
//! 100
//! ```
//!
//! Line 1 is the format tag and version, line 2 the order `n`, then `n`
//! rows of `n` characters `0`/`1`; row `i` column `j` is `1` iff `i -> j`.
//! Every line, the last included, ends with `\n`. A missing final newline
//! is accepted on input.

use std::fmt::Write as _;
use std::path::Path;

use crate::criticality::IndecomposabilityGraph;
use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::vertex_set::{VertexSet, MAX_ORDER};

pub const TRN_HEADER: &str = "trn 1";

pub fn to_trn(t: &Tournament) -> String {
    let n = t.order();
    let mut s = String::with_capacity(8 + (n + 1) * (n + 1));
    s.push_str(TRN_HEADER);
    s.push('\n');
    let _ = writeln!(s, "{n}");
    for i in 0..n {
        for j in 0..n {
            s.push(if t.dominates(i, j) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_trn(text: &str) -> Result<Tournament> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    match lines.next() {
        Some(TRN_HEADER) => {}
        Some(other) => return Err(parse_err(1, format!("expected {TRN_HEADER:?}, found {other:?}"))),
        None => return Err(parse_err(1, "empty input")),
    }
    let n: usize = lines
        .next()
        .ok_or_else(|| parse_err(2, "missing order"))?
        .parse()
        .map_err(|e| parse_err(2, format!("bad order: {e}")))?;
    if n == 0 || n > MAX_ORDER {
        return Err(parse_err(2, format!("order must lie in 1..={MAX_ORDER}, got {n}")));
    }
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let line_no = i + 3;
        let line = lines.next().ok_or_else(|| parse_err(line_no, "missing row"))?;
        if line.len() != n {
            return Err(parse_err(line_no, format!("expected {n} characters, found {}", line.len())));
        }
        let mut row = 0u64;
        for (j, c) in line.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => row |= 1 << j,
                _ => return Err(parse_err(line_no, format!("unexpected character {:?}", c as char))),
            }
        }
        rows.push(row);
    }
    if let Some(extra) = lines.next() {
        return Err(parse_err(n + 3, format!("trailing content {extra:?}")));
    }
    Tournament::from_rows(rows).map_err(|e| match e {
        Error::NotATournament { i, .. } => parse_err(i + 3, e.to_string()),
        e => parse_err(3, e.to_string()),
    })
}

pub fn read_trn(path: impl AsRef<Path>) -> Result<Tournament> {
    parse_trn(&std::fs::read_to_string(path)?)
}

pub fn write_trn(path: impl AsRef<Path>, t: &Tournament) -> Result<()> {
    std::fs::write(path, to_trn(t))?;
    Ok(())
}

/// Directed DOT rendering with one edge per arc.
pub fn tournament_to_dot(t: &Tournament, name: &str) -> String {
    let mut s = format!("digraph \"{name}\" {{\n");
    for v in 0..t.order() {
        let _ = writeln!(s, "  {v};");
    }
    for i in 0..t.order() {
        for j in VertexSet::from_bits(t.row(i)) {
            let _ = writeln!(s, "  {i} -> {j};");
        }
    }
    s.push_str("}\n");
    s
}

/// Undirected DOT rendering of an indecomposability graph; vertices in
/// `highlight` (typically the non-critical ones) are drawn filled.
pub fn graph_to_dot(g: &IndecomposabilityGraph, highlight: VertexSet, name: &str) -> String {
    let mut s = format!("graph \"{name}\" {{\n");
    for v in 0..g.order() {
        if highlight.contains(v) {
            let _ = writeln!(s, "  {v} [style=filled, fillcolor=gold, label=\"{v}*\"];");
        } else {
            let _ = writeln!(s, "  {v};");
        }
    }
    for (x, y) in g.edges() {
        let _ = writeln!(s, "  {x} -- {y};");
    }
    s.push_str("}\n");
    s
}
