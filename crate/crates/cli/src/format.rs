//! Line-oriented instance formats.
//!
//! All formats are ASCII digits and single spaces with LF newlines:
//!
//! - family: `family <n>` then n lines of ascending space-separated
//!   elements, an empty line meaning an empty set;
//! - graph: `bipartite <|A|> <|B|> <|E|>` then |E| lines `<a> <b>`;
//! - transversal: `transversal <n>` then n lines `<index> <element>`;
//! - matching: bare lines `<a> <b>`, no header.
//!
//! Serializers emit canonical order (elements ascending, edges and
//! pairs lexicographic), so parse ∘ serialize is the identity.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;
use transversal_core::{Assignment, BipartiteGraph, Matching, SetFamily, Transversal};

/// A format violation at a 1-based line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// Splits into lines, tolerating one trailing newline.
fn logical_lines(text: &str) -> Vec<&str> {
    let mut lines: Vec<&str> = text.split('\n').collect();
    if lines.last() == Some(&"") {
        lines.pop();
    }
    lines
}

fn parse_int<T: core::str::FromStr>(token: &str, line: usize) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::new(line, format!("expected a non-negative integer, got {token:?}")))
}

fn parse_header<'a>(
    lines: &[&'a str],
    keyword: &str,
    field_count: usize,
) -> Result<Vec<&'a str>, ParseError> {
    let header = *lines
        .first()
        .ok_or_else(|| ParseError::new(1, format!("missing {keyword} header")))?;
    let tokens: Vec<&str> = header.split_ascii_whitespace().collect();
    if tokens.first() != Some(&keyword) || tokens.len() != field_count + 1 {
        return Err(ParseError::new(
            1,
            format!("expected header {keyword:?} with {field_count} counts, got {header:?}"),
        ));
    }
    Ok(tokens[1..].to_vec())
}

fn expect_line_count(lines: &[&str], expected: usize, what: &str) -> Result<(), ParseError> {
    let found = lines.len() - 1;
    if found < expected {
        return Err(ParseError::new(
            lines.len() + 1,
            format!("expected {expected} {what} lines, found {found}"),
        ));
    }
    if found > expected {
        return Err(ParseError::new(expected + 2, "expected end of file".to_string()));
    }
    Ok(())
}

pub fn parse_family(text: &str) -> Result<SetFamily, ParseError> {
    let lines = logical_lines(text);
    let header = parse_header(&lines, "family", 1)?;
    let n: usize = parse_int(header[0], 1)?;
    expect_line_count(&lines, n, "set")?;
    let mut sets = Vec::with_capacity(n);
    for (offset, line) in lines[1..].iter().enumerate() {
        let line_no = offset + 2;
        let set = line
            .split_ascii_whitespace()
            .map(|t| parse_int::<u64>(t, line_no))
            .collect::<Result<Vec<u64>, _>>()?;
        sets.push(set);
    }
    Ok(SetFamily::new(sets))
}

pub fn serialize_family(family: &SetFamily) -> String {
    let mut out = format!("family {}\n", family.len());
    for set in family.sets() {
        let mut first = true;
        for x in set {
            if !first {
                out.push(' ');
            }
            let _ = write!(out, "{x}");
            first = false;
        }
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph, ParseError> {
    let lines = logical_lines(text);
    let header = parse_header(&lines, "bipartite", 3)?;
    let size_a: usize = parse_int(header[0], 1)?;
    let size_b: usize = parse_int(header[1], 1)?;
    let edge_count: usize = parse_int(header[2], 1)?;
    expect_line_count(&lines, edge_count, "edge")?;
    let mut seen = BTreeSet::new();
    let mut edges = Vec::with_capacity(edge_count);
    for (offset, line) in lines[1..].iter().enumerate() {
        let line_no = offset + 2;
        let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::new(line_no, format!("expected 2 integers, found {}", tokens.len())));
        }
        let a: usize = parse_int(tokens[0], line_no)?;
        let b: usize = parse_int(tokens[1], line_no)?;
        if a >= size_a || b >= size_b {
            return Err(ParseError::new(
                line_no,
                format!("edge ({a}, {b}) out of range for sides {size_a} and {size_b}"),
            ));
        }
        if !seen.insert((a, b)) {
            return Err(ParseError::new(line_no, format!("duplicate edge ({a}, {b})")));
        }
        edges.push((a, b));
    }
    Ok(BipartiteGraph::new(size_a, size_b, edges).expect("edges validated while parsing"))
}

pub fn serialize_graph(graph: &BipartiteGraph) -> String {
    let mut out = format!(
        "bipartite {} {} {}\n",
        graph.size_a(),
        graph.size_b(),
        graph.edge_count()
    );
    for &(a, b) in graph.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

/// Parses the transversal format into an unvalidated assignment: each
/// of the n lines binds one distinct index to its chosen element.
pub fn parse_assignment(text: &str) -> Result<Assignment, ParseError> {
    let lines = logical_lines(text);
    let header = parse_header(&lines, "transversal", 1)?;
    let n: usize = parse_int(header[0], 1)?;
    expect_line_count(&lines, n, "choice")?;
    let mut choices = vec![None; n];
    for (offset, line) in lines[1..].iter().enumerate() {
        let line_no = offset + 2;
        let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::new(line_no, format!("expected 2 integers, found {}", tokens.len())));
        }
        let index: usize = parse_int(tokens[0], line_no)?;
        let element: u64 = parse_int(tokens[1], line_no)?;
        if index >= n {
            return Err(ParseError::new(line_no, format!("index {index} out of range for {n} choices")));
        }
        if choices[index].is_some() {
            return Err(ParseError::new(line_no, format!("duplicate index {index}")));
        }
        choices[index] = Some(element);
    }
    Ok(Assignment::new(choices.into_iter().map(|c| c.expect("all indices bound")).collect()))
}

pub fn serialize_transversal(transversal: &Transversal) -> String {
    let mut out = format!("transversal {}\n", transversal.len());
    for (i, x) in transversal.choices().iter().enumerate() {
        let _ = writeln!(out, "{i} {x}");
    }
    out
}

pub fn parse_matching(text: &str) -> Result<Matching, ParseError> {
    let mut seen = BTreeSet::new();
    let mut pairs = Vec::new();
    for (offset, line) in logical_lines(text).iter().enumerate() {
        let line_no = offset + 1;
        let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::new(line_no, format!("expected 2 integers, found {}", tokens.len())));
        }
        let pair: (usize, usize) = (parse_int(tokens[0], line_no)?, parse_int(tokens[1], line_no)?);
        if !seen.insert(pair) {
            return Err(ParseError::new(line_no, format!("duplicate pair ({}, {})", pair.0, pair.1)));
        }
        pairs.push(pair);
    }
    Ok(Matching::new(pairs))
}

pub fn serialize_matching(matching: &Matching) -> String {
    let mut out = String::new();
    for &(a, b) in matching.pairs() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}
