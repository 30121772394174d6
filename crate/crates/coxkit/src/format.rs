//! Line-based text formats for Coxeter diagrams (`.cox`) and multigraphs.
//!
//! ```text
//! # comment to end of line
//! vertex <name>
//! edge <name> <name> [<m>]    # m: integer >= 3 or inf; omitted means 3
//! ```
//!
//! Multigraph files use the same grammar without labels; repeating an
//! `edge` line adds a parallel edge. Vertices may be declared implicitly by
//! an edge line.

use std::fmt::Write as _;

use coxkit_core::diagram::{is_valid_name, DiagramBuilder};
use coxkit_core::{CoxeterDiagram, EdgeLabel, Error, MultiGraph, Word};

/// A syntax or validation error with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    /// Line number.
    pub line: usize,
    /// Column (in characters) of the offending token.
    pub column: usize,
    /// What went wrong.
    pub message: String,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, c)) in content.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((i, col)),
            (true, Some((s, sc))) => {
                out.push(Token { text: &content[s..i], column: sc + 1 });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((s, sc)) = start {
        out.push(Token { text: &content[s..], column: sc + 1 });
    }
    out
}

fn fail(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

fn name<'a>(line: usize, tok: &Token<'a>) -> Result<&'a str, ParseError> {
    if is_valid_name(tok.text) {
        Ok(tok.text)
    } else {
        Err(fail(line, tok.column, format!("invalid name {:?}", tok.text)))
    }
}

fn parse_label(line: usize, tok: &Token<'_>) -> Result<EdgeLabel, ParseError> {
    if tok.text == "inf" {
        return Ok(EdgeLabel::Infinite);
    }
    let m: u64 = tok
        .text
        .parse()
        .map_err(|_| fail(line, tok.column, format!("expected an integer >= 3 or inf, found {:?}", tok.text)))?;
    EdgeLabel::finite(m).map_err(|e| fail(line, tok.column, e.to_string()))
}

enum Statement<'a> {
    Vertex(&'a str),
    Edge(&'a str, &'a str, Option<EdgeLabel>),
}

fn statements(text: &str, labels: bool) -> impl Iterator<Item = Result<(usize, usize, Statement<'_>), ParseError>> {
    text.lines().enumerate().filter_map(move |(i, raw)| {
        let line = i + 1;
        let toks = tokens(raw);
        let first = toks.first()?;
        let result = (|| match first.text {
            "vertex" => match toks.as_slice() {
                [_, v] => Ok(Statement::Vertex(name(line, v)?)),
                [_] => Err(fail(line, first.column + first.text.len(), "expected a vertex name")),
                [_, _, extra, ..] => Err(fail(line, extra.column, "unexpected token after vertex name")),
                [] => unreachable!(),
            },
            "edge" => match toks.as_slice() {
                [_, a, b] => Ok(Statement::Edge(name(line, a)?, name(line, b)?, None)),
                [_, a, b, m] if labels => {
                    Ok(Statement::Edge(name(line, a)?, name(line, b)?, Some(parse_label(line, m)?)))
                }
                [_, _, _, extra, ..] => Err(fail(line, extra.column, "unexpected token after edge")),
                _ => Err(fail(line, first.column, "expected two vertex names")),
            },
            other => Err(fail(line, first.column, format!("unknown keyword {other:?}"))),
        })();
        Some(result.map(|s| (line, first.column, s)))
    })
}

fn located(line: usize, column: usize) -> impl Fn(Error) -> ParseError {
    move |e| fail(line, column, e.to_string())
}

/// Parses a `.cox` diagram.
pub fn parse_cox(text: &str) -> Result<CoxeterDiagram, ParseError> {
    let mut b: DiagramBuilder = CoxeterDiagram::builder();
    for stmt in statements(text, true) {
        let (line, column, stmt) = stmt?;
        match stmt {
            Statement::Vertex(v) => {
                b.vertex(v).map_err(located(line, column))?;
            }
            Statement::Edge(u, v, m) => {
                b.edge(u, v, m.unwrap_or(EdgeLabel::UNLABELED)).map_err(located(line, column))?;
            }
        }
    }
    let d = b.build();
    if d.is_empty() {
        return Err(fail(1, 1, Error::EmptyDiagram.to_string()));
    }
    Ok(d)
}

/// Parses a multigraph file.
pub fn parse_graph(text: &str) -> Result<MultiGraph, ParseError> {
    let mut g = MultiGraph::new();
    for stmt in statements(text, false) {
        let (line, column, stmt) = stmt?;
        match stmt {
            Statement::Vertex(v) => {
                g.add_vertex(v).map_err(located(line, column))?;
            }
            Statement::Edge(u, v, _) => {
                let (a, b) = (g.ensure_vertex(u), g.ensure_vertex(v));
                g.add_edge(a, b).map_err(located(line, column))?;
            }
        }
    }
    if g.vertex_count() == 0 {
        return Err(fail(1, 1, Error::EmptyDiagram.to_string()));
    }
    Ok(g)
}

/// Writes a diagram in `.cox` syntax; [`parse_cox`] reads it back unchanged.
pub fn write_cox(d: &CoxeterDiagram) -> String {
    let mut out = String::new();
    for g in d.generators() {
        let _ = writeln!(out, "vertex {g}");
    }
    for e in d.edges() {
        let _ = match e.label {
            EdgeLabel::Finite(3) => writeln!(out, "edge {} {}", d.name(e.u), d.name(e.v)),
            label => writeln!(out, "edge {} {} {label}", d.name(e.u), d.name(e.v)),
        };
    }
    out
}

/// Writes a multigraph; [`parse_graph`] reads it back unchanged.
pub fn write_graph(g: &MultiGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        let _ = writeln!(out, "vertex {v}");
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "edge {} {}", g.name(a), g.name(b));
    }
    out
}

/// Reads a word: space-separated generator names, or a concatenation of
/// single-character names when every generator name is one character.
pub fn parse_word(d: &CoxeterDiagram, text: &str) -> Result<Word, Error> {
    let text = text.trim();
    if text.contains(char::is_whitespace) {
        let names: Vec<&str> = text.split_whitespace().collect();
        return Word::from_names(d, &names);
    }
    if text.is_empty() || d.index_of(text).is_ok() {
        let names: Vec<&str> = if text.is_empty() { Vec::new() } else { vec![text] };
        return Word::from_names(d, &names);
    }
    let compact = d.generators().iter().all(|g| g.as_str().chars().count() == 1);
    if !compact {
        return Err(Error::UnknownGenerator(text.to_string()));
    }
    let letters = text
        .chars()
        .map(|c| d.index_of(c.encode_utf8(&mut [0; 4])))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Word::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cox_round_trip() {
        let text = "# example\nvertex x\nedge 1 2\nedge 2 3 4 # labeled\nedge 3 4 inf\n";
        let d = parse_cox(text).unwrap();
        assert_eq!(d.len(), 5);
        assert_eq!(d.name(0), "x");
        assert_eq!(d.bond(2, 3), Some(EdgeLabel::Finite(4)));
        assert_eq!(d.bond(3, 4), Some(EdgeLabel::Infinite));
        assert_eq!(parse_cox(&write_cox(&d)).unwrap(), d);
    }

    #[test]
    fn cox_errors_carry_positions() {
        let err = parse_cox("edge a b\nedge a c 2\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 10));
        let err = parse_cox("vertex a\n  vertex a\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        let err = parse_cox("edge a a\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_cox("edge a b x\n").unwrap_err();
        assert!(err.message.contains("integer"));
        let err = parse_cox("Edge a b\n").unwrap_err();
        assert!(err.message.contains("unknown keyword"));
        assert!(parse_cox("# nothing\n").is_err());
        assert!(parse_cox("edge a b 3 4\n").is_err());
    }

    #[test]
    fn graph_round_trip_with_parallel_edges() {
        let g = parse_graph("edge 1 2\nedge 2 3\nedge 2 3\nvertex 4\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 3));
        assert_eq!(g.multiplicity(1, 2), 2);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        assert!(parse_graph("edge a b 3\n").is_err());
        assert!(parse_graph("edge a a\n").is_err());
    }

    #[test]
    fn words_in_both_syntaxes() {
        let d = parse_cox("edge 1 2\nedge 2 3 4\n").unwrap();
        assert_eq!(parse_word(&d, "1232").unwrap().letters(), [0, 1, 2, 1]);
        assert_eq!(parse_word(&d, "1 2 3").unwrap().letters(), [0, 1, 2]);
        assert!(parse_word(&d, "").unwrap().is_empty());
        assert!(parse_word(&d, "14").is_err());

        let long = parse_cox("edge ab c\n").unwrap();
        assert_eq!(parse_word(&long, "ab c ab").unwrap().letters(), [0, 1, 0]);
        assert_eq!(parse_word(&long, "ab").unwrap().letters(), [0]);
        assert!(parse_word(&long, "abc").is_err());
    }
}
