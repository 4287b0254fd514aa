//! Reading and writing graphs as structured text.
//!
//! The on-disk form is JSON with rationals kept as `"p"` or `"p/q"` strings,
//! so weights survive a round trip bit-exactly. Edge ids are implied by
//! position in the edge array.

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeColor, EdgeMetadata, PackRole};
use crate::rational::{format_rational, parse_rational};
use crate::{Error, LinearWeight, ParametricGraph};

/// Caps on accepted input, to bound the damage a hostile file can do.
const MAX_VERTICES: usize = 1_000_000;
const MAX_EDGES: usize = 1_000_000;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    level: Option<usize>,
    edges: Vec<EdgeRecord>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeRecord {
    u: usize,
    v: usize,
    /// Weight slope.
    a: String,
    /// Weight intercept.
    b: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<MetadataRecord>,
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct MetadataRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    color: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    parent: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    triangle: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    apex: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    subgraph: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    role: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<usize>,
}

fn color_from_str(s: &str) -> Result<EdgeColor, Error> {
    match s {
        "green" => Ok(EdgeColor::Green),
        "red" => Ok(EdgeColor::Red),
        "blue" => Ok(EdgeColor::Blue),
        other => Err(Error::Parse(format!("unknown edge color {other:?}"))),
    }
}

fn role_from_str(s: &str) -> Result<PackRole, Error> {
    match s {
        "u-a" => Ok(PackRole::UA),
        "a-b" => Ok(PackRole::AB),
        "b-c" => Ok(PackRole::BC),
        "c-v" => Ok(PackRole::CV),
        "b-a-cross" => Ok(PackRole::BACross),
        "b-c-cross" => Ok(PackRole::BCCross),
        other => Err(Error::Parse(format!("unknown edge role {other:?}"))),
    }
}

impl MetadataRecord {
    fn from_metadata(m: &EdgeMetadata) -> Option<Self> {
        if m.is_empty() {
            return None;
        }
        Some(MetadataRecord {
            color: m.color.map(|c| c.as_str().to_string()),
            parent: m.parent,
            triangle: m.triangle,
            apex: m.apex,
            subgraph: m.subgraph,
            role: m.role.map(|r| r.as_str().to_string()),
            source: m.source,
        })
    }

    fn into_metadata(self) -> Result<EdgeMetadata, Error> {
        Ok(EdgeMetadata {
            color: self.color.as_deref().map(color_from_str).transpose()?,
            parent: self.parent,
            triangle: self.triangle,
            apex: self.apex,
            subgraph: self.subgraph,
            role: self.role.as_deref().map(role_from_str).transpose()?,
            source: self.source,
        })
    }
}

/// Serializes a graph. The output is deterministic and ends with a newline.
pub fn write_graph(g: &ParametricGraph) -> String {
    let file = GraphFile {
        vertices: g.vertex_count(),
        level: g.level,
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeRecord {
                u: e.u,
                v: e.v,
                a: format_rational(&e.weight.slope),
                b: format_rational(&e.weight.intercept),
                metadata: MetadataRecord::from_metadata(&e.metadata),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("graph serialization cannot fail");
    s.push('\n');
    s
}

/// Parses and validates a graph file.
pub fn read_graph(text: &str) -> Result<ParametricGraph, Error> {
    let file: GraphFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.vertices == 0 {
        return Err(Error::Parse("graph must have at least one vertex".into()));
    }
    if file.vertices > MAX_VERTICES {
        return Err(Error::Parse(format!(
            "vertex count {} exceeds the cap of {MAX_VERTICES}",
            file.vertices
        )));
    }
    if file.edges.len() > MAX_EDGES {
        return Err(Error::Parse(format!(
            "edge count {} exceeds the cap of {MAX_EDGES}",
            file.edges.len()
        )));
    }
    let mut g = ParametricGraph::new(file.vertices);
    g.level = file.level;
    for (i, rec) in file.edges.into_iter().enumerate() {
        if rec.u == rec.v {
            return Err(Error::Parse(format!("edge {i} is a self-loop on vertex {}", rec.u)));
        }
        if rec.u >= file.vertices || rec.v >= file.vertices {
            return Err(Error::Parse(format!(
                "edge {i} endpoint out of range for {} vertices",
                file.vertices
            )));
        }
        let weight = LinearWeight::new(parse_rational(&rec.a)?, parse_rational(&rec.b)?);
        let metadata = match rec.metadata {
            Some(m) => m.into_metadata()?,
            None => EdgeMetadata::default(),
        };
        g.add_edge_with(rec.u, rec.v, weight, metadata);
    }
    Ok(g)
}
