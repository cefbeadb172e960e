//! Graph file formats.
//!
//! * DIMACS: `c` comment lines, one `p edge <n> <m>` line, then `e <u> <v>`
//!   lines with 1-based endpoints.
//! * Edge list: one `<u> <v>` pair per line, 0-based, `#` starts a comment.
//!   The writer emits a `# vertices: <n>` header so isolated vertices survive
//!   a round trip; without that header `n` is one past the largest endpoint.
//!
//! Both writers emit edges sorted, so output is byte-stable.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dimacs,
    EdgeList,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn number(line: usize, (col, tok): (usize, &str)) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| syntax(line, col, format!("expected a non-negative integer, found `{tok}`")))
}

/// Guesses the format from the first meaningful line.
pub fn detect(text: &str) -> Format {
    for line in text.lines() {
        let t = line.trim_start();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if t.starts_with("p ") || t.starts_with("c ") || t == "c" || t.starts_with("e ") {
            return Format::Dimacs;
        }
        return Format::EdgeList;
    }
    Format::EdgeList
}

pub fn parse(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Dimacs => parse_dimacs(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

pub fn parse_auto(text: &str) -> Result<Graph, ParseError> {
    parse(text, detect(text))
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let toks = tokens(raw);
        let Some(&(col, head)) = toks.first() else { continue };
        match head {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(syntax(ln, col, "duplicate problem line"));
                }
                if toks.len() != 4 {
                    return Err(syntax(ln, col, "expected `p edge <n> <m>`"));
                }
                if toks[1].1 != "edge" && toks[1].1 != "col" {
                    return Err(syntax(
                        ln,
                        toks[1].0,
                        format!("unsupported problem type `{}`", toks[1].1),
                    ));
                }
                header = Some((number(ln, toks[2])?, number(ln, toks[3])?));
            }
            "e" => {
                if header.is_none() {
                    return Err(syntax(ln, col, "edge line before the problem line"));
                }
                if toks.len() != 3 {
                    return Err(syntax(ln, col, "expected `e <u> <v>`"));
                }
                let mut ends = [0; 2];
                for (slot, tok) in ends.iter_mut().zip(&toks[1..]) {
                    let v = number(ln, *tok)?;
                    if v == 0 {
                        return Err(syntax(ln, tok.0, "DIMACS vertices are 1-based"));
                    }
                    *slot = v - 1;
                }
                edges.push((ends[0], ends[1]));
                edge_lines.push(ln);
            }
            other => return Err(syntax(ln, col, format!("unknown line type `{other}`"))),
        }
    }
    let (n, _m) = header.ok_or_else(|| syntax(1, 1, "missing `p edge <n> <m>` line"))?;
    build_reporting_line(n, &edges, &edge_lines)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let (body, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            if let Some(rest) = c.trim().strip_prefix("vertices:") {
                let col = raw.find("vertices:").unwrap_or(0) + "vertices:".len() + 1;
                declared = Some(number(ln, (col, rest.trim()))?);
            }
        }
        let toks = tokens(body);
        match toks.len() {
            0 => {}
            2 => {
                edges.push((number(ln, toks[0])?, number(ln, toks[1])?));
                edge_lines.push(ln);
            }
            _ => return Err(syntax(ln, toks[0].0, "expected `<u> <v>`")),
        }
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    build_reporting_line(n, &edges, &edge_lines)
}

fn build_reporting_line(n: usize, edges: &[(usize, usize)], lines: &[usize]) -> Result<Graph, ParseError> {
    Graph::new(n, edges).map_err(|source| {
        let line = match &source {
            GraphError::OutOfRange { u, v, .. } => edges.iter().position(|e| e == &(*u, *v)),
            GraphError::SelfLoop(v) => edges.iter().position(|e| e == &(*v, *v)),
            _ => None,
        }
        .map(|i| lines[i])
        .unwrap_or(0);
        ParseError::Graph { line, source }
    })
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# vertices: {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::Dimacs => write_dimacs(g),
        Format::EdgeList => write_edge_list(g),
    }
}

/// Reads a graph file, picking the format from the content.
pub fn read_path(path: &Path) -> Result<(Graph, String), ParseError> {
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok((parse_auto(&text)?, text))
}

/// Writer format chosen from the extension: `.dimacs`, `.col`, `.clq` get
/// DIMACS, anything else the edge list.
pub fn format_for_path(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("dimacs" | "col" | "clq") => Format::Dimacs,
        _ => Format::EdgeList,
    }
}
