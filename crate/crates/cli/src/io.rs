//! Text formats for graphs and layouts.
//!
//! Graphs:
//!
//! ```text
//! # a path on three vertices
//! graph 3
//! edge 0 1
//! edge 1 2
//! ```
//!
//! Layouts, one bar per line with exact rational coordinates:
//!
//! ```text
//! bar 0 0/1 0/1
//! bar 1 1/2 1/1
//! ```
//!
//! Everything from `#` to the end of a line is ignored.

use std::fmt::Write as _;

use thiserror::Error;
use ubv_core::layout::rat;
use ubv_core::{Graph, Layout, Rational};

/// A problem in a graph or layout file. Line and column are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
}

impl FormatError {
    fn syntax(token: &Token, message: impl Into<String>) -> Self {
        Self::Syntax { line: token.line, column: token.column, message: message.into() }
    }
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

/// Whitespace-separated tokens of the non-comment part of each line.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<Token<'_>>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut rest = content;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let len = rest[start..].find(char::is_whitespace).unwrap_or(rest.len() - start);
            tokens.push(Token { text: &rest[start..start + len], line: i + 1, column: offset + start + 1 });
            offset += start + len;
            rest = &rest[start + len..];
        }
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn expect_len(tokens: &[Token], want: usize, form: &str) -> Result<(), FormatError> {
    match tokens.get(want) {
        Some(extra) => Err(FormatError::syntax(extra, format!("unexpected token, expected `{form}`"))),
        None if tokens.len() < want => {
            let last = &tokens[tokens.len() - 1];
            Err(FormatError::Syntax {
                line: last.line,
                column: last.column + last.text.len(),
                message: format!("missing field, expected `{form}`"),
            })
        }
        None => Ok(()),
    }
}

fn number<T: std::str::FromStr>(token: &Token, what: &str) -> Result<T, FormatError> {
    token.text.parse().map_err(|_| FormatError::syntax(token, format!("expected {what}, found `{}`", token.text)))
}

fn fraction(token: &Token) -> Result<Rational, FormatError> {
    let Some((num, den)) = token.text.split_once('/') else {
        return Err(FormatError::syntax(token, format!("expected a fraction n/d, found `{}`", token.text)));
    };
    let bad = || FormatError::syntax(token, format!("expected a fraction n/d, found `{}`", token.text));
    let num: i64 = num.parse().map_err(|_| bad())?;
    let den: i64 = den.parse().map_err(|_| bad())?;
    if den == 0 {
        return Err(FormatError::syntax(token, "zero denominator"));
    }
    if num == i64::MIN || den == i64::MIN {
        return Err(FormatError::syntax(token, "value out of range"));
    }
    Ok(rat(num, den))
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut vertex_count = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (line, tokens) in lines(text) {
        last_line = line;
        let head = &tokens[0];
        match (head.text, vertex_count) {
            ("graph", None) => {
                expect_len(&tokens, 2, "graph <vertex_count>")?;
                vertex_count = Some(number::<usize>(&tokens[1], "a vertex count")?);
            }
            ("graph", Some(_)) => return Err(FormatError::syntax(head, "second `graph` header")),
            ("edge", None) => return Err(FormatError::syntax(head, "`edge` before the `graph` header")),
            ("edge", Some(n)) => {
                expect_len(&tokens, 3, "edge <u> <v>")?;
                let mut ends = [0usize; 2];
                for (end, token) in ends.iter_mut().zip(&tokens[1..]) {
                    *end = number(token, "a vertex id")?;
                    if *end >= n {
                        return Err(FormatError::syntax(
                            token,
                            format!("vertex {end} out of range for a graph on {n} vertices"),
                        ));
                    }
                }
                if ends[0] == ends[1] {
                    return Err(FormatError::syntax(&tokens[2], format!("self-loop at vertex {}", ends[0])));
                }
                edges.push((ends[0], ends[1]));
            }
            (other, _) => return Err(FormatError::syntax(head, format!("unknown keyword `{other}`"))),
        }
    }
    let Some(n) = vertex_count else {
        return Err(FormatError::Invalid { line: last_line.max(1), message: "missing `graph` header".into() });
    };
    Graph::new(n, edges).map_err(|e| FormatError::Invalid { line: last_line, message: e.to_string() })
}

/// Parses a layout and checks that no two bars overlap.
pub fn parse_layout(text: &str) -> Result<Layout, FormatError> {
    let mut layout = Layout::default();
    let mut line_of = Vec::new();
    for (line, tokens) in lines(text) {
        let head = &tokens[0];
        if head.text != "bar" {
            return Err(FormatError::syntax(head, format!("unknown keyword `{}`", head.text)));
        }
        expect_len(&tokens, 4, "bar <vertex> <x-num>/<x-den> <y-num>/<y-den>")?;
        let vertex = number(&tokens[1], "a vertex id")?;
        layout.push(vertex, fraction(&tokens[2])?, fraction(&tokens[3])?);
        line_of.push(line);
    }
    if let Err(ubv_core::Error::IntersectingBars { first, second }) = layout.validate() {
        return Err(FormatError::Invalid {
            line: line_of[second],
            message: format!("bar overlaps the bar on line {} at the same height", line_of[first]),
        });
    }
    Ok(layout)
}

pub fn write_graph(graph: &Graph) -> String {
    let mut out = format!("graph {}\n", graph.vertex_count());
    for &(u, v) in graph.edges() {
        writeln!(out, "edge {u} {v}").unwrap();
    }
    out
}

/// One `bar` line per bar, in layout order, fractions in lowest terms.
pub fn write_layout(layout: &Layout) -> String {
    let mut out = String::new();
    for bar in &layout.bars {
        writeln!(out, "bar {} {}/{} {}/{}", bar.vertex, bar.x.numer(), bar.x.denom(), bar.y.numer(), bar.y.denom())
            .unwrap();
    }
    out
}
