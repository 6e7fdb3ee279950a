use serde::{Deserialize, Serialize};

use super::matrix_group::{Mat3, MatrixGroup, Vec3};
use super::ConstructionError;

/// An edge between two vertices. `polyline` holds the interior sample
/// points only; an empty polyline is a straight segment.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub ends: [usize; 2],
    pub polyline: Vec<[f64; 3]>,
    pub twist: bool,
}

impl Edge {
    pub fn straight(a: usize, b: usize) -> Self {
        Edge {
            ends: [a, b],
            polyline: Vec::new(),
            twist: false,
        }
    }

    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbeddedGraph {
    pub vertices: Vec<[f64; 3]>,
    pub edges: Vec<Edge>,
    /// Set when the coordinates are placeholders and carry no geometry.
    pub combinatorial_only: bool,
}

pub(crate) fn v3(p: [f64; 3]) -> Vec3 {
    Vec3::new(p[0], p[1], p[2])
}

pub(crate) fn arr(v: Vec3) -> [f64; 3] {
    [v.x, v.y, v.z]
}

impl EmbeddedGraph {
    /// Checks indices, connectivity and that no vertex is isolated.
    pub fn new(vertices: Vec<[f64; 3]>, edges: Vec<Edge>) -> Result<Self, ConstructionError> {
        let g = EmbeddedGraph {
            vertices,
            edges,
            combinatorial_only: false,
        };
        g.validate()?;
        Ok(g)
    }

    /// A graph without meaningful coordinates.
    pub fn combinatorial(n_vertices: usize, edges: Vec<[usize; 2]>) -> Result<Self, ConstructionError> {
        let mut g = EmbeddedGraph::new(
            vec![[0.0; 3]; n_vertices],
            edges.into_iter().map(|[a, b]| Edge::straight(a, b)).collect(),
        )?;
        g.combinatorial_only = true;
        Ok(g)
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        let n = self.vertices.len();
        if n == 0 {
            return Err(ConstructionError::InvalidGraph("no vertices".into()));
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.ends.iter().any(|&v| v >= n) {
                return Err(ConstructionError::InvalidGraph(format!("edge {i} has an endpoint out of range")));
            }
        }
        let deg = self.degrees();
        if let Some(v) = deg.iter().position(|&d| d == 0) {
            if n > 1 {
                return Err(ConstructionError::InvalidGraph(format!("vertex {v} is isolated")));
            }
        }
        if !self.is_connected() {
            return Err(ConstructionError::InvalidGraph("graph is disconnected".into()));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// First Betti number `E - V + 1`.
    pub fn genus(&self) -> u64 {
        (self.edges.len() + 1 - self.vertices.len()) as u64
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        for e in &self.edges {
            d[e.ends[0]] += 1;
            d[e.ends[1]] += 1;
        }
        d
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.ends[0]].push(e.ends[1]);
            adj[e.ends[1]].push(e.ends[0]);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Whether removing edge `i` disconnects the graph.
    pub fn is_bridge(&self, i: usize) -> bool {
        let rest: Vec<Edge> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, e)| e.clone())
            .collect();
        !EmbeddedGraph {
            vertices: self.vertices.clone(),
            edges: rest,
            combinatorial_only: self.combinatorial_only,
        }
        .is_connected()
    }

    /// Full point sequence of edge `i`, endpoints included.
    pub fn edge_points(&self, i: usize) -> Vec<Vec3> {
        let e = &self.edges[i];
        let mut pts = vec![v3(self.vertices[e.ends[0]])];
        pts.extend(e.polyline.iter().map(|&p| v3(p)));
        pts.push(v3(self.vertices[e.ends[1]]));
        pts
    }

    pub fn shortest_edge_length(&self) -> f64 {
        (0..self.edges.len())
            .map(|i| self.edge_points(i).windows(2).map(|w| (w[1] - w[0]).norm()).sum::<f64>())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn set_twists(&mut self, twisted: &[usize]) {
        for e in &mut self.edges {
            e.twist = false;
        }
        for &i in twisted {
            self.edges[i].twist = true;
        }
    }
}

/// Why a group fails to preserve a graph.
#[derive(Clone, Debug, PartialEq)]
pub struct InvarianceFailure {
    /// Index into the group's element list.
    pub element: usize,
    pub reason: String,
}

fn find_vertex(g: &EmbeddedGraph, p: Vec3, tol: f64) -> Option<usize> {
    g.vertices.iter().position(|&q| (v3(q) - p).norm() < tol)
}

fn polylines_match(a: &[Vec3], b: &[[f64; 3]], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(p, &q)| (p - v3(q)).norm() < tol)
}

/// Checks that every element maps vertices to vertices and each edge,
/// polyline included, onto an edge. Distances are compared against `tol`
/// times the radius of the graph.
pub fn check_invariance(group: &MatrixGroup, graph: &EmbeddedGraph, tol: f64) -> Result<(), InvarianceFailure> {
    let scale = graph.vertices.iter().map(|&p| v3(p).norm()).fold(1.0, f64::max);
    let tol = tol * scale;
    for (k, m) in group.elements().iter().enumerate() {
        let fail = |reason: String| InvarianceFailure { element: k, reason };
        let mut image = Vec::with_capacity(graph.vertices.len());
        for (i, &p) in graph.vertices.iter().enumerate() {
            match find_vertex(graph, m * v3(p), tol) {
                Some(j) => image.push(j),
                None => return Err(fail(format!("vertex {i} has no image vertex"))),
            }
        }
        let mut used = vec![false; graph.edges.len()];
        for (i, e) in graph.edges.iter().enumerate() {
            let (a, b) = (image[e.ends[0]], image[e.ends[1]]);
            let fwd: Vec<Vec3> = e.polyline.iter().map(|&p| m * v3(p)).collect();
            let rev: Vec<Vec3> = fwd.iter().rev().copied().collect();
            let hit = graph.edges.iter().enumerate().position(|(j, f)| {
                !used[j]
                    && ((f.ends == [a, b] && polylines_match(&fwd, &f.polyline, tol))
                        || (f.ends == [b, a] && polylines_match(&rev, &f.polyline, tol)))
            });
            match hit {
                Some(j) => used[j] = true,
                None => return Err(fail(format!("edge {i} has no image edge"))),
            }
        }
    }
    Ok(())
}

/// Applies `m` to every point of the graph.
pub fn transform(graph: &EmbeddedGraph, m: &Mat3) -> EmbeddedGraph {
    let map = |p: [f64; 3]| arr(m * v3(p));
    EmbeddedGraph {
        vertices: graph.vertices.iter().map(|&p| map(p)).collect(),
        edges: graph
            .edges
            .iter()
            .map(|e| Edge {
                ends: e.ends,
                polyline: e.polyline.iter().map(|&p| map(p)).collect(),
                twist: e.twist,
            })
            .collect(),
        combinatorial_only: graph.combinatorial_only,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_and_connectivity() {
        let theta = EmbeddedGraph::combinatorial(2, vec![[0, 1], [0, 1], [0, 1]]).unwrap();
        assert_eq!(theta.genus(), 2);
        assert!(!theta.is_bridge(0));
        let path = EmbeddedGraph::combinatorial(3, vec![[0, 1], [1, 2]]).unwrap();
        assert!(path.is_bridge(1));
        assert!(EmbeddedGraph::combinatorial(3, vec![[0, 1]]).is_err());
        assert!(EmbeddedGraph::combinatorial(2, vec![[0, 2]]).is_err());
    }
}
