//! The genus-21 graph: a dodecahedron `D`, the concentric copy `D' = 2D`,
//! and the 60 images of one arc from a vertex `v` of `D` to the vertex of
//! `D'` above a neighbour of `v`.
//!
//! The straight segment would meet its image under the half-turn swapping
//! `v` and its neighbour, so the arc is a 3-segment polyline whose middle
//! points are pushed off the plane through `0`, `v` and the neighbour.

use super::graph::{arr, v3, Edge, EmbeddedGraph};
use super::matrix_group::{MatrixGroup, Vec3};
use super::platonic::{build_platonic, solid_vertices, Solid};
use super::ConstructionError;

/// Seed known to pass the collision check. Found by [`find_genus21_seed`].
pub const GENUS21_SEED: u32 = 0;

/// Separation below which two arcs count as meeting.
const MIN_SEPARATION: f64 = 1e-3;

/// Off-plane push and along-arc shift for a seed.
fn displacement(seed: u32) -> (f64, f64) {
    let k = seed as f64;
    (0.15 + 0.05 * (k % 5.0), 0.05 * (k / 5.0).floor())
}

/// Closest distance between segments `[p0, p1]` and `[q0, q1]`.
pub fn segment_distance(p0: Vec3, p1: Vec3, q0: Vec3, q1: Vec3) -> f64 {
    let d1 = p1 - p0;
    let d2 = q1 - q0;
    let r = p0 - q0;
    let a = d1.dot(&d1);
    let e = d2.dot(&d2);
    let f = d2.dot(&r);
    let (s, t);
    if a <= f64::EPSILON && e <= f64::EPSILON {
        return r.norm();
    }
    if a <= f64::EPSILON {
        s = 0.0;
        t = (f / e).clamp(0.0, 1.0);
    } else {
        let c = d1.dot(&r);
        if e <= f64::EPSILON {
            t = 0.0;
            s = (-c / a).clamp(0.0, 1.0);
        } else {
            let b = d1.dot(&d2);
            let denom = a * e - b * b;
            let mut s0 = if denom > f64::EPSILON { ((b * f - c * e) / denom).clamp(0.0, 1.0) } else { 0.0 };
            let mut t0 = (b * s0 + f) / e;
            if t0 < 0.0 {
                t0 = 0.0;
                s0 = (-c / a).clamp(0.0, 1.0);
            } else if t0 > 1.0 {
                t0 = 1.0;
                s0 = ((b - c) / a).clamp(0.0, 1.0);
            }
            s = s0;
            t = t0;
        }
    }
    ((p0 + d1 * s) - (q0 + d2 * t)).norm()
}

pub struct Genus21 {
    pub graph: EmbeddedGraph,
    pub rotations: MatrixGroup,
    pub seed: u32,
}

/// Pairs of arcs (edge indices) that come closer than the separation
/// threshold anywhere other than at a shared endpoint.
pub fn arc_collisions(graph: &EmbeddedGraph) -> Vec<(usize, usize, f64)> {
    let paths: Vec<Vec<Vec3>> = (0..graph.edge_count()).map(|i| graph.edge_points(i)).collect();
    let mut out = Vec::new();
    for i in 0..paths.len() {
        for j in i + 1..paths.len() {
            let shared: Vec<usize> = graph.edges[i]
                .ends
                .iter()
                .copied()
                .filter(|v| graph.edges[j].ends.contains(v))
                .collect();
            let mut worst = f64::INFINITY;
            for (a, sa) in paths[i].windows(2).enumerate() {
                for (b, sb) in paths[j].windows(2).enumerate() {
                    let touches = |k: usize, seg: usize, len: usize| {
                        shared.iter().any(|&v| {
                            let end = graph.edges[k].ends;
                            (seg == 0 && end[0] == v) || (seg == len - 2 && end[1] == v)
                        })
                    };
                    if touches(i, a, paths[i].len()) && touches(j, b, paths[j].len()) {
                        // both segments leave the shared vertex: they must not run together
                        let pv = v3(graph.vertices[shared[0]]);
                        let out = |s: &[Vec3]| {
                            if (s[0] - pv).norm() < 1e-12 { s[1] - pv } else { s[0] - pv }
                        };
                        if out(sa).normalize().dot(&out(sb).normalize()) > 1.0 - 1e-9 {
                            worst = worst.min(0.0);
                        }
                        continue;
                    }
                    worst = worst.min(segment_distance(sa[0], sa[1], sb[0], sb[1]));
                }
            }
            if worst < MIN_SEPARATION {
                out.push((i, j, worst));
            }
        }
    }
    out
}

/// Builds the graph for one displacement seed, failing on the first collision.
pub fn build_genus21_with_seed(seed: u32, tol: f64) -> Result<Genus21, ConstructionError> {
    let rotations = build_platonic(Solid::Dodecahedron, tol)?.rotations;
    let inner = solid_vertices(Solid::Dodecahedron);
    let n = inner.len();
    let mut vertices = inner.clone();
    vertices.extend(inner.iter().map(|p| [2.0 * p[0], 2.0 * p[1], 2.0 * p[2]]));

    let edge_len = 2.0 / super::platonic::PHI;
    let v = v3(inner[0]);
    let w = inner
        .iter()
        .map(|&p| v3(p))
        .find(|p| ((p - v).norm() - edge_len).abs() < 1e-9)
        .expect("dodecahedron vertex has neighbours");
    let target = 2.0 * w;
    let normal = v.cross(&w).normalize();
    let (push, shift) = displacement(seed);
    let p1 = v + (target - v) * (1.0 / 3.0 + shift) + normal * push;
    let p2 = v + (target - v) * (2.0 / 3.0 + shift) + normal * push;
    let base = [p1, p2];

    let locate = |p: Vec3| vertices.iter().position(|&q| (v3(q) - p).norm() < 1e-6);
    let mut edges: Vec<Edge> = Vec::new();
    for m in rotations.elements() {
        let a = locate(m * v).ok_or_else(|| ConstructionError::InvalidGraph("arc start left D".into()))?;
        let b = locate(m * target).ok_or_else(|| ConstructionError::InvalidGraph("arc end left D'".into()))?;
        debug_assert!(a < n && b >= n);
        edges.push(Edge {
            ends: [a, b],
            polyline: base.iter().map(|&p| arr(m * p)).collect(),
            twist: false,
        });
    }
    let graph = EmbeddedGraph::new(vertices, edges)?;
    if let Some(&(a, b, d)) = arc_collisions(&graph).first() {
        return Err(ConstructionError::ArcCollision { a, b, distance: d });
    }
    Ok(Genus21 { graph, rotations, seed })
}

pub fn build_genus21(tol: f64) -> Result<Genus21, ConstructionError> {
    build_genus21_with_seed(GENUS21_SEED, tol)
}

/// First seed, in increasing order, whose arcs pass the collision check.
pub fn find_genus21_seed(tol: f64, max_seed: u32) -> Option<u32> {
    (0..max_seed).find(|&s| build_genus21_with_seed(s, tol).is_ok())
}
