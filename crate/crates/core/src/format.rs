//! `.artin` text format and the structured JSON format.
//!
//! Text:
//!
//! ```text
//! # comment
//! vertices: a b c
//! edge a b 3
//! edge b c inf
//! ```
//!
//! JSON: `{"vertices": [...], "edges": [["a", "b", 3], ...], "cover": [[...], ...]}`
//! where a label is an integer `>= 2` or the string `"inf"`, and `cover` is
//! optional. Serialization never writes `∞` pairs.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphBuilder, GraphError, Label, PresentationGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("missing `vertices:` line")]
    MissingVertices,
    #[error("`vertices:` given more than once")]
    RepeatedVertices,
    #[error("edge before the `vertices:` line")]
    EdgeBeforeVertices,
    #[error("invalid label `{0}` (expected an integer >= 2 or `inf`)")]
    InvalidLabel(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// A parse failure. `line` is 1-based; JSON semantic errors carry the
/// offending element in the message instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: Option<usize>,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.kind),
            None => write!(f, "{}", self.kind),
        }
    }
}

fn at(line: usize) -> impl Fn(ParseErrorKind) -> ParseError {
    move |kind| ParseError {
        line: Some(line),
        kind,
    }
}

fn parse_label(token: &str) -> Result<Label, ParseErrorKind> {
    if token.eq_ignore_ascii_case("inf") || token == "∞" {
        return Ok(Label::Infinity);
    }
    token
        .parse::<u32>()
        .map(Label::Finite)
        .map_err(|_| ParseErrorKind::InvalidLabel(token.to_string()))
}

/// Parse the `.artin` text format.
pub fn parse_graph(source: &str) -> Result<PresentationGraph, ParseError> {
    let mut builder = GraphBuilder::new();
    let mut seen_vertices = false;
    for (idx, raw) in source.lines().enumerate() {
        let err = at(idx + 1);
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if seen_vertices {
                return Err(err(ParseErrorKind::RepeatedVertices));
            }
            seen_vertices = true;
            for name in rest.split_whitespace() {
                builder.add_vertex(name).map_err(|e| err(e.into()))?;
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["edge", u, v, m] => {
                if !seen_vertices {
                    return Err(err(ParseErrorKind::EdgeBeforeVertices));
                }
                let label = parse_label(m).map_err(&err)?;
                builder.set_label(u, v, label).map_err(|e| err(e.into()))?;
            }
            _ => return Err(err(ParseErrorKind::Malformed(line.to_string()))),
        }
    }
    if !seen_vertices {
        return Err(ParseError {
            line: None,
            kind: ParseErrorKind::MissingVertices,
        });
    }
    Ok(builder.build())
}

/// Serialize to the `.artin` text format. The output is a pure function of
/// the graph value.
pub fn to_text(graph: &PresentationGraph) -> String {
    let mut out = String::from("vertices:");
    for name in graph.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for (i, j, m) in graph.edges() {
        out.push_str(&format!("edge {} {} {}\n", graph.name(i), graph.name(j), m));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelDoc {
    Int(u64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc(pub String, pub String, pub LabelDoc);

/// The serde shape of the structured format, also embedded in certificate
/// documents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<Vec<Vec<String>>>,
}

impl GraphDoc {
    pub fn from_graph(graph: &PresentationGraph, cover: Option<Vec<Vec<String>>>) -> Self {
        GraphDoc {
            vertices: graph.names().to_vec(),
            edges: graph
                .edges()
                .map(|(i, j, m)| {
                    EdgeDoc(
                        graph.name(i).to_string(),
                        graph.name(j).to_string(),
                        LabelDoc::Int(m.into()),
                    )
                })
                .collect(),
            cover,
        }
    }

    /// Validate into a graph, reporting the offending element on failure.
    pub fn into_document(self) -> Result<GraphDocument, ParseError> {
        let mut builder = GraphBuilder::new();
        for (k, name) in self.vertices.iter().enumerate() {
            builder
                .add_vertex(name)
                .map_err(|e| element(format!("vertices[{k}]"), e.into()))?;
        }
        for (k, EdgeDoc(u, v, label)) in self.edges.iter().enumerate() {
            let ctx = || format!("edges[{k}]");
            let label = match label {
                LabelDoc::Int(m) => Label::Finite(u32::try_from(*m).map_err(|_| {
                    element(ctx(), ParseErrorKind::InvalidLabel(m.to_string()))
                })?),
                LabelDoc::Text(s) => parse_label(s).map_err(|e| element(ctx(), e))?,
            };
            builder
                .set_label(u, v, label)
                .map_err(|e| element(ctx(), e.into()))?;
        }
        Ok(GraphDocument {
            graph: builder.build(),
            cover: self.cover,
        })
    }
}

/// A parsed structured document: the graph plus an optional explicit cover
/// given as lists of vertex names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: PresentationGraph,
    pub cover: Option<Vec<Vec<String>>>,
}

fn element(name: String, kind: ParseErrorKind) -> ParseError {
    ParseError {
        line: None,
        kind: match kind {
            ParseErrorKind::Graph(e) => ParseErrorKind::Malformed(format!("{name}: {e}")),
            other => ParseErrorKind::Malformed(format!("{name}: {other}")),
        },
    }
}

/// Parse the structured JSON format, keeping the optional `cover` key.
pub fn parse_document(source: &str) -> Result<GraphDocument, ParseError> {
    let doc: GraphDoc = serde_json::from_str(source).map_err(|e| ParseError {
        line: Some(e.line()),
        kind: ParseErrorKind::Json(e.to_string()),
    })?;
    doc.into_document()
}

pub fn parse_graph_json(source: &str) -> Result<PresentationGraph, ParseError> {
    parse_document(source).map(|d| d.graph)
}

/// Serialize to pretty-printed JSON with a trailing newline.
pub fn to_json(graph: &PresentationGraph) -> String {
    document_to_json(graph, None)
}

pub fn document_to_json(graph: &PresentationGraph, cover: Option<Vec<Vec<String>>>) -> String {
    let doc = GraphDoc::from_graph(graph, cover);
    let mut out = serde_json::to_string_pretty(&doc).expect("graph documents always serialize");
    out.push('\n');
    out
}
