//! Plain-text formats for posets, complexes and graphs.
//!
//! All formats use 1-based labels on disk and `#` line comments:
//!
//! ```text
//! # a 3-chain
//! p 3
//! 1 < 2
//! 2 < 3
//! ```
//!
//! Complexes list one facet per line after an `n <count>` header; the empty
//! facet is written `{}`. Graphs list one `u v` edge per line after `n`.

use std::fmt::Write as _;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graphs::SimpleGraph;
use crate::poset::Poset;
use crate::simplicial::SimplicialComplex;

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
) -> Result<usize> {
    let (line, text) = lines.next().ok_or_else(|| parse_err(0, format!("missing `{key} <count>` header")))?;
    let mut parts = text.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(v), None) if k == key => v
            .parse::<usize>()
            .map_err(|_| parse_err(line, format!("invalid count `{v}`"))),
        _ => Err(parse_err(line, format!("expected `{key} <count>`, found `{text}`"))),
    }
}

fn parse_label(line: usize, token: &str, size: usize) -> Result<usize> {
    let v: usize = token
        .trim()
        .parse()
        .map_err(|_| parse_err(line, format!("invalid label `{}`", token.trim())))?;
    if v == 0 || v > size {
        return Err(parse_err(line, format!("label {v} outside 1..={size}")));
    }
    Ok(v - 1)
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = content_lines(text);
    let p = parse_header(&mut lines, "p")?;
    let mut relations = Vec::new();
    for (line, content) in lines {
        let (a, b) = content
            .split_once('<')
            .ok_or_else(|| parse_err(line, format!("expected `a < b`, found `{content}`")))?;
        relations.push((parse_label(line, a, p)?, parse_label(line, b, p)?));
    }
    Poset::from_cover_relations(p, &relations)
}

/// Header plus the cover relations in sorted order.
pub fn write_poset(poset: &Poset) -> String {
    let mut out = format!("p {}\n", poset.len());
    for (a, b) in poset.covers() {
        let _ = writeln!(out, "{} < {}", a + 1, b + 1);
    }
    out
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, "n")?;
    let mut facets = Vec::new();
    for (line, content) in lines {
        if content == "{}" {
            facets.push(Bits::EMPTY);
            continue;
        }
        let mut facet = Bits::EMPTY;
        for token in content.split_whitespace() {
            facet.insert(parse_label(line, token, n)?);
        }
        facets.push(facet);
    }
    SimplicialComplex::from_facets(n, facets)
}

pub fn write_complex(complex: &SimplicialComplex) -> String {
    let mut out = format!("n {}\n", complex.ground_size());
    for facet in complex.facets() {
        if facet.is_empty() {
            out.push_str("{}\n");
            continue;
        }
        let labels: Vec<String> = facet.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, "n")?;
    let mut graph = SimpleGraph::empty(n)?;
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = tokens.as_slice() else {
            return Err(parse_err(line, format!("expected `u v`, found `{content}`")));
        };
        graph.add_edge(parse_label(line, u, n)?, parse_label(line, v, n)?)?;
    }
    Ok(graph)
}

pub fn write_graph(graph: &SimpleGraph) -> String {
    let mut out = format!("n {}\n", graph.vertex_count());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}
