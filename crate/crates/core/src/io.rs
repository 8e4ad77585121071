//! Plain-text matrix and edge-list formats.
//!
//! Matrix files start with a `rows cols` line followed by `rows` lines of
//! whitespace-separated decimals. Edge lists start with `n m` followed by `m`
//! lines `i j` (1-based). In both, `#` starts a comment and blank lines are
//! ignored. Writers emit 17 significant digits so values re-parse exactly.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix;

/// `x` with 17 significant digits in scientific notation; parses back bit-exactly.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Non-comment, non-blank lines paired with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_header(line: usize, s: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(parse_err(line, format!("expected two counts, found {s:?}")));
    }
    let a = parts[0]
        .parse()
        .map_err(|_| parse_err(line, format!("bad count {:?}", parts[0])))?;
    let b = parts[1]
        .parse()
        .map_err(|_| parse_err(line, format!("bad count {:?}", parts[1])))?;
    Ok((a, b))
}

/// Parses a matrix from the lines of an iterator, consuming exactly `rows + 1` content lines.
pub(crate) fn parse_matrix_lines<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    eof_line: usize,
) -> Result<Matrix> {
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(eof_line, "missing matrix header"))?;
    let (rows, cols) = parse_header(hl, header)?;
    if rows == 0 || cols == 0 {
        return Err(parse_err(hl, "matrix dimensions must be positive"));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(eof_line, format!("expected {rows} rows, found {r}")))?;
        let before = data.len();
        for tok in line.split_whitespace() {
            let v: f64 = tok.parse().map_err(|_| parse_err(ln, format!("bad number {tok:?}")))?;
            if !v.is_finite() {
                return Err(parse_err(ln, format!("non-finite value {tok:?}")));
            }
            data.push(v);
        }
        if data.len() - before != cols {
            return Err(parse_err(
                ln,
                format!("expected {cols} values, found {}", data.len() - before),
            ));
        }
    }
    Matrix::new(rows, cols, data)
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let total = text.lines().count().max(1);
    let mut lines = content_lines(text);
    let m = parse_matrix_lines(&mut lines, total)?;
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "trailing content after matrix"));
    }
    Ok(m)
}

pub fn write_matrix(m: &Matrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|v| format_f64(*v)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub(crate) fn parse_graph_lines<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    eof_line: usize,
) -> Result<Graph> {
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(eof_line, "missing edge-list header"))?;
    let (n, m) = parse_header(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    for k in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(eof_line, format!("expected {m} edges, found {k}")))?;
        let (i, j) = parse_header(ln, line)?;
        edges.push((i, j));
    }
    Graph::new(n, &edges).map_err(|e| parse_err(hl, e.to_string()))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let total = text.lines().count().max(1);
    let mut lines = content_lines(text);
    let g = parse_graph_lines(&mut lines, total)?;
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "trailing content after edge list"));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<Matrix> {
    parse_matrix(&std::fs::read_to_string(path)?)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}
