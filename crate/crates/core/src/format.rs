//! Line-oriented text format.
//!
//! ```text
//! mng 1
//! m 1
//! n 0
//! vertices 3
//! # comment
//! v 0 source
//! a 1 0 1
//! a 1 1 2
//! e 1 0 2
//! ```
//!
//! The four header lines come first, in this order. `a <colour> <tail> <head>`
//! is an arc, `e <colour> <u> <v>` an edge, `v <id> <label>` names a vertex.
//! Everything after `#` is ignored. Canonical output lists labels by vertex,
//! then adjacencies sorted by kind, colour and endpoints.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::graph::{Adjacency, AdjacencyKind, GraphError, MixedGraph, Vertex};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {error}")]
    Io { path: PathBuf, error: std::io::Error },
    #[error("{path}: {error}")]
    Parse { path: PathBuf, error: ParseError },
}

fn fail(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn number<T: std::str::FromStr>(line: usize, what: &str, token: Option<&str>) -> Result<T, ParseError> {
    let token = token.ok_or_else(|| fail(line, format!("missing {what}")))?;
    token.parse().map_err(|_| fail(line, format!("invalid {what} `{token}`")))
}

pub fn parse(text: &str) -> Result<MixedGraph, ParseError> {
    let significant = text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        (!content.is_empty()).then_some((i + 1, content))
    });
    let mut header = [0usize; 4];
    let mut header_lines = [0usize; 4];
    let keys = ["mng", "m", "n", "vertices"];
    let mut seen = 0;
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut adjacencies = Vec::new();
    let mut adjacency_lines = Vec::new();
    let mut last_line = 0;
    for (line, content) in significant {
        last_line = line;
        let mut tokens = content.split_whitespace();
        let tag = tokens.next().expect("nonempty");
        if seen < keys.len() {
            if tag != keys[seen] {
                return Err(fail(line, format!("expected `{} <count>`, found `{tag}`", keys[seen])));
            }
            header[seen] = number(line, keys[seen], tokens.next())?;
            header_lines[seen] = line;
            if tokens.next().is_some() {
                return Err(fail(line, "trailing tokens"));
            }
            if seen == 0 && header[0] != FORMAT_VERSION as usize {
                return Err(fail(line, format!("unsupported format version {}", header[0])));
            }
            seen += 1;
            if seen == keys.len() {
                labels = vec![None; header[3]];
            }
            continue;
        }
        match tag {
            "v" => {
                let id: Vertex = number(line, "vertex", tokens.next())?;
                let label = tokens.collect::<Vec<_>>().join(" ");
                if id >= labels.len() {
                    return Err(fail(line, format!("vertex {id} out of range for a graph on {} vertices", labels.len())));
                }
                if label.is_empty() {
                    return Err(fail(line, "missing label"));
                }
                if labels[id].replace(label).is_some() {
                    return Err(fail(line, format!("vertex {id} labelled twice")));
                }
            }
            "a" | "e" => {
                let colour = number(line, "colour", tokens.next())?;
                let u = number(line, "vertex", tokens.next())?;
                let v = number(line, "vertex", tokens.next())?;
                if tokens.next().is_some() {
                    return Err(fail(line, "trailing tokens"));
                }
                adjacencies.push(if tag == "a" { Adjacency::arc(colour, u, v) } else { Adjacency::edge(colour, u, v) });
                adjacency_lines.push(line);
            }
            _ => return Err(fail(line, format!("unknown line type `{tag}`"))),
        }
    }
    if seen < keys.len() {
        return Err(fail(last_line + 1, format!("missing header line `{} <count>`", keys[seen])));
    }
    let colours = |i: usize| {
        u32::try_from(header[i]).map_err(|_| fail(header_lines[i], format!("colour count {} too large", header[i])))
    };
    let built = MixedGraph::build(colours(1)?, colours(2)?, header[3], adjacencies).map_err(|e| match e {
        GraphError::InvalidAdjacency { entry, violation, .. } => fail(adjacency_lines[entry], violation.to_string()),
        other => fail(header_lines[3], other.to_string()),
    })?;
    built.with_labels(labels).map_err(|e| fail(header_lines[3], e.to_string()))
}

pub fn parse_file(path: impl AsRef<Path>) -> Result<MixedGraph, FormatError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|error| FormatError::Io { path: path.to_owned(), error })?;
    parse(&text).map_err(|error| FormatError::Parse { path: path.to_owned(), error })
}

fn sort_key(a: &Adjacency) -> (u8, u32, Vertex, Vertex) {
    let kind = match a.kind {
        AdjacencyKind::Arc => 0,
        AdjacencyKind::Edge => 1,
    };
    (kind, a.colour, a.u.min(a.v), a.u.max(a.v))
}

/// Canonical text of `g`.
pub fn serialize(g: &MixedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "mng {FORMAT_VERSION}").unwrap();
    writeln!(out, "m {}", g.arc_colours()).unwrap();
    writeln!(out, "n {}", g.edge_colours()).unwrap();
    writeln!(out, "vertices {}", g.order()).unwrap();
    for v in g.vertices() {
        if let Some(label) = g.label(v) {
            writeln!(out, "v {v} {label}").unwrap();
        }
    }
    let mut adjacencies = g.adjacencies().to_vec();
    adjacencies.sort_by_key(sort_key);
    for a in adjacencies {
        writeln!(out, "{a}").unwrap();
    }
    out
}

/// `serialize(parse(text))`.
pub fn canonical(text: &str) -> Result<String, ParseError> {
    parse(text).map(|g| serialize(&g))
}

/// Graphviz rendering for debugging; edges are undirected, colours become labels.
pub fn to_dot(g: &MixedGraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in g.vertices() {
        match g.label(v) {
            Some(label) => writeln!(out, "  {v} [label={label:?}];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for a in g.adjacencies() {
        match a.kind {
            AdjacencyKind::Arc => writeln!(out, "  {} -> {} [label=\"a{}\"];", a.u, a.v, a.colour).unwrap(),
            AdjacencyKind::Edge => {
                writeln!(out, "  {} -> {} [label=\"e{}\", dir=none, style=dashed];", a.u, a.v, a.colour).unwrap()
            }
        }
    }
    out.push_str("}\n");
    out
}
