//! JSON and OBJ output for embedded graphs.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::graph::{v3, Edge, EmbeddedGraph};
use super::matrix_group::{rotation, Vec3};
use super::ribbon::{transport_normal, vertex_normals};
use super::ConstructionError;

pub const SCHEMA: &str = "maxsym-graph/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub ends: [usize; 2],
    pub polyline: Vec<[f64; 3]>,
    pub twist: u8,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub schema: String,
    pub vertices: Vec<[f64; 3]>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default)]
    pub meta: BTreeMap<String, serde_json::Value>,
}

pub fn to_json(graph: &EmbeddedGraph, meta: BTreeMap<String, serde_json::Value>) -> String {
    let file = GraphFile {
        schema: SCHEMA.to_string(),
        vertices: graph.vertices.clone(),
        edges: graph
            .edges
            .iter()
            .map(|e| EdgeRecord {
                ends: e.ends,
                polyline: e.polyline.clone(),
                twist: e.twist as u8,
            })
            .collect(),
        meta,
    };
    let mut s = serde_json::to_string_pretty(&file).expect("graph file serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<(EmbeddedGraph, BTreeMap<String, serde_json::Value>), ConstructionError> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| ConstructionError::Parse(e.to_string()))?;
    if file.schema != SCHEMA {
        return Err(ConstructionError::Parse(format!("unsupported schema {:?}", file.schema)));
    }
    let edges = file
        .edges
        .into_iter()
        .map(|e| match e.twist {
            0 | 1 => Ok(Edge {
                ends: e.ends,
                polyline: e.polyline,
                twist: e.twist == 1,
            }),
            t => Err(ConstructionError::Parse(format!("twist must be 0 or 1, got {t}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((EmbeddedGraph::new(file.vertices, edges)?, file.meta))
}

/// Band quads for OBJ output.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct BandOptions {
    /// Defaults to 0.05 times the shortest edge.
    pub width: Option<f64>,
}

fn push_point(out: &mut String, p: Vec3) {
    writeln!(out, "v {} {} {}", p.x, p.y, p.z).expect("write to string");
}

/// Vertices and polyline edges as `v`/`l` records; with `bands`, each edge
/// also gets a strip of quads (`f` records), half-twisted where the edge is.
pub fn to_obj(graph: &EmbeddedGraph, bands: Option<BandOptions>) -> Result<String, ConstructionError> {
    if graph.combinatorial_only {
        return Err(ConstructionError::CombinatorialOnly);
    }
    let mut out = String::from("# maxsym graph\n");
    for &p in &graph.vertices {
        push_point(&mut out, v3(p));
    }
    let mut next = graph.vertex_count() + 1;
    for e in &graph.edges {
        let mut ids = vec![e.ends[0] + 1];
        for &p in &e.polyline {
            push_point(&mut out, v3(p));
            ids.push(next);
            next += 1;
        }
        ids.push(e.ends[1] + 1);
        let line: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
        writeln!(out, "l {}", line.join(" ")).expect("write to string");
    }
    let Some(opts) = bands else {
        return Ok(out);
    };
    let width = opts.width.unwrap_or(0.05 * graph.shortest_edge_length());
    let normals = vertex_normals(graph);
    for (i, e) in graph.edges.iter().enumerate() {
        let pts = graph.edge_points(i);
        let k = pts.len();
        let mut first = None;
        for j in 0..k {
            let t = if j + 1 < k { pts[j + 1] - pts[j] } else { pts[j] - pts[j - 1] }.normalize();
            let n = transport_normal(&pts[..=j.max(1)], normals[e.ends[0]]);
            let mut side = t.cross(&n).normalize() * (width / 2.0);
            if e.twist {
                side = rotation(t, PI * j as f64 / (k - 1) as f64) * side;
            }
            push_point(&mut out, pts[j] + side);
            push_point(&mut out, pts[j] - side);
            if first.is_none() {
                first = Some(next);
            }
            next += 2;
        }
        let base = first.expect("edges have points");
        for j in 0..k - 1 {
            let a = base + 2 * j;
            writeln!(out, "f {} {} {} {}", a, a + 1, a + 3, a + 2).expect("write to string");
        }
    }
    Ok(out)
}
