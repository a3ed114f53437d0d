//! Graph, face-graph and PD-code files.
//!
//! A graph file is JSON:
//!
//! ```json
//! {"vertices": [0, 1], "edges": [{"id": 1, "ends": [0, 1], "color": "+", "label": 3}]}
//! ```
//!
//! Color `"0"` marks a zero edge; `"0:name"` is a zero edge with secondary
//! color `name`. Labels are optional; when every label is missing, regular
//! edges are numbered `1..` in id order. A face-graph file adds `"writhe"`.
//!
//! A PD file has one crossing per line: `X a b c d s` (classical, `s` is
//! `+` or `-`), `V a b c d` (virtual) or `O` (a crossingless circle). Text
//! after `#` is ignored.

use std::fmt;
use std::path::{Path, PathBuf};

use reltutte_core::graph::Edge;
use reltutte_core::knot::{Crossing, FaceGraph, KnotError, VirtualDiagram};
use reltutte_core::{Color, ColoredMultigraph, EdgeColor, EdgeId, GraphError, VertexId};
use serde::{Deserialize, Serialize};

/// Where some text came from, for diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Origin(pub String);

impl Origin {
    pub fn path(p: &Path) -> Self {
        Origin(p.display().to_string())
    }
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Origin {
    fn from(s: &str) -> Self {
        Origin(s.to_string())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{origin}:{line}:{column}: {message}")]
    Json { origin: Origin, line: usize, column: usize, message: String },
    #[error("{origin}: edge {edge}: {message}")]
    Color { origin: Origin, edge: u32, message: String },
    #[error("{origin}: {source}")]
    Graph {
        origin: Origin,
        #[source]
        source: GraphError,
    },
    #[error("{origin}: no writhe given")]
    MissingWrithe { origin: Origin },
    #[error("{origin}: {source}")]
    Knot {
        origin: Origin,
        #[source]
        source: KnotError,
    },
    #[error("{origin}:{line}: {message}")]
    Pd { origin: Origin, line: usize, message: String },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    writhe: Option<i64>,
    vertices: Vec<u32>,
    edges: Vec<EdgeDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    id: u32,
    ends: [u32; 2],
    color: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<u32>,
}

pub fn parse_color(s: &str) -> Result<EdgeColor, String> {
    let named = |n: &str| Color::new(n).map_err(|e| e.to_string());
    match s {
        "0" => Ok(EdgeColor::zero()),
        _ => match s.strip_prefix("0:") {
            Some(secondary) => Ok(EdgeColor::Zero(Some(named(secondary)?))),
            None => Ok(EdgeColor::Regular(named(s)?)),
        },
    }
}

pub fn color_text(c: &EdgeColor) -> String {
    match c {
        EdgeColor::Regular(c) => c.name().to_string(),
        EdgeColor::Zero(None) => "0".to_string(),
        EdgeColor::Zero(Some(c)) => format!("0:{}", c.name()),
    }
}

fn read(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.to_path_buf(), source })
}

fn parse_doc(text: &str, origin: &Origin) -> Result<(ColoredMultigraph, Option<i64>), FormatError> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| FormatError::Json {
        origin: origin.clone(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let graph_err = |source| FormatError::Graph { origin: origin.clone(), source };
    let labelled = doc.edges.iter().filter(|e| e.label.is_some()).count();
    if labelled != 0 && labelled != doc.edges.len() {
        return Err(FormatError::Graph {
            origin: origin.clone(),
            source: GraphError::BadLabel { edge: EdgeId(doc.edges[0].id), reason: "labels must be given for all edges or none" },
        });
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in &doc.edges {
        let color = parse_color(&e.color)
            .map_err(|message| FormatError::Color { origin: origin.clone(), edge: e.id, message })?;
        edges.push(Edge {
            id: EdgeId(e.id),
            ends: (VertexId(e.ends[0]), VertexId(e.ends[1])),
            color,
            label: e.label.unwrap_or(0),
        });
    }
    let vertices = doc.vertices.iter().map(|v| VertexId(*v)).collect();
    let mut g = ColoredMultigraph::new(vertices, edges).map_err(graph_err)?;
    if labelled == 0 {
        let regular: Vec<EdgeId> = g.regular_edges().map(|e| e.id).collect();
        g = g.relabeled(|e| regular.binary_search(&e.id).map_or(0, |i| i as u32 + 1));
    }
    g.validate_labeling().map_err(graph_err)?;
    Ok((g, doc.writhe))
}

pub fn parse_graph(text: &str, origin: &Origin) -> Result<ColoredMultigraph, FormatError> {
    Ok(parse_doc(text, origin)?.0)
}

pub fn read_graph(path: &Path) -> Result<ColoredMultigraph, FormatError> {
    parse_graph(&read(path)?, &Origin::path(path))
}

/// A face graph; `writhe` overrides the value stored in the file.
pub fn parse_face_graph(text: &str, origin: &Origin, writhe: Option<i64>) -> Result<FaceGraph, FormatError> {
    let (g, stored) = parse_doc(text, origin)?;
    let w = writhe.or(stored).ok_or_else(|| FormatError::MissingWrithe { origin: origin.clone() })?;
    FaceGraph::new(g, w).map_err(|source| FormatError::Knot { origin: origin.clone(), source })
}

pub fn read_face_graph(path: &Path, writhe: Option<i64>) -> Result<FaceGraph, FormatError> {
    parse_face_graph(&read(path)?, &Origin::path(path), writhe)
}

/// Serializes a graph, with a writhe for face graphs.
pub fn graph_to_json(g: &ColoredMultigraph, writhe: Option<i64>) -> String {
    let doc = GraphDoc {
        writhe,
        vertices: g.vertices().iter().map(|v| v.0).collect(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeDoc { id: e.id.0, ends: [e.ends.0 .0, e.ends.1 .0], color: color_text(&e.color), label: Some(e.label) })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph documents always serialize")
}

pub fn parse_pd(text: &str, origin: &Origin) -> Result<VirtualDiagram, FormatError> {
    let mut crossings = Vec::new();
    let mut circles = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| FormatError::Pd { origin: origin.clone(), line, message };
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = content.split_whitespace().collect();
        let Some((&kind, rest)) = words.split_first() else { continue };
        let arcs = |args: &[&str]| -> Result<[u32; 4], FormatError> {
            let mut out = [0; 4];
            for (slot, w) in out.iter_mut().zip(args) {
                *slot = w.parse().map_err(|_| err(format!("bad arc id `{w}`")))?;
            }
            Ok(out)
        };
        match kind {
            "X" => {
                if rest.len() != 5 {
                    return Err(err(format!("`X` takes four arcs and a sign, got {} fields", rest.len())));
                }
                let sign = match rest[4] {
                    "+" => 1,
                    "-" => -1,
                    s => return Err(err(format!("bad sign `{s}`"))),
                };
                crossings.push(Crossing::Classical { arcs: arcs(&rest[..4])?, sign });
            }
            "V" => {
                if rest.len() != 4 {
                    return Err(err(format!("`V` takes four arcs, got {} fields", rest.len())));
                }
                crossings.push(Crossing::Virtual { arcs: arcs(rest)? });
            }
            "O" => {
                if !rest.is_empty() {
                    return Err(err("`O` takes no arguments".into()));
                }
                circles += 1;
            }
            k => return Err(err(format!("unknown line kind `{k}`"))),
        }
    }
    VirtualDiagram::new(crossings, circles).map_err(|source| FormatError::Knot { origin: origin.clone(), source })
}

pub fn read_pd(path: &Path) -> Result<VirtualDiagram, FormatError> {
    parse_pd(&read(path)?, &Origin::path(path))
}

/// Writes a diagram back in PD form.
pub fn pd_to_text(diag: &VirtualDiagram) -> String {
    let mut out = String::new();
    for c in diag.crossings() {
        let [a, b, cc, d] = c.arcs();
        match c {
            Crossing::Classical { sign, .. } => {
                out += &format!("X {a} {b} {cc} {d} {}\n", if *sign > 0 { '+' } else { '-' })
            }
            Crossing::Virtual { .. } => out += &format!("V {a} {b} {cc} {d}\n"),
        }
    }
    for _ in 0..diag.free_circles() {
        out += "O\n";
    }
    out
}
