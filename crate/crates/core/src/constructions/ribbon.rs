//! Ribbon graphs: a disk per vertex, a band per edge.
//!
//! Half-edge `2e` sits at `ends[0]` of edge `e` and `2e + 1` at `ends[1]`.
//! Each vertex lists its half-edges counterclockwise with respect to a
//! chosen local orientation; a twisted band reverses orientation between
//! its two ends.

use serde::{Deserialize, Serialize};

use super::graph::EmbeddedGraph;
use super::matrix_group::Vec3;
use super::ConstructionError;
use crate::orbifold::SurfaceType;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RibbonGraph {
    edges: Vec<[usize; 2]>,
    rotation: Vec<Vec<usize>>,
    twist: Vec<bool>,
}

impl RibbonGraph {
    pub fn new(edges: Vec<[usize; 2]>, rotation: Vec<Vec<usize>>, twist: Vec<bool>) -> Result<Self, ConstructionError> {
        let r = RibbonGraph { edges, rotation, twist };
        r.validate()?;
        Ok(r)
    }

    fn validate(&self) -> Result<(), ConstructionError> {
        let bad = |m: String| Err(ConstructionError::InvalidRibbon(m));
        if self.twist.len() != self.edges.len() {
            return bad("one twist bit per edge is required".into());
        }
        let mut seen = vec![false; 2 * self.edges.len()];
        for (v, rot) in self.rotation.iter().enumerate() {
            if rot.is_empty() {
                return bad(format!("vertex {v} has no half-edges"));
            }
            for &h in rot {
                if h >= seen.len() {
                    return bad(format!("half-edge {h} out of range"));
                }
                if std::mem::replace(&mut seen[h], true) {
                    return bad(format!("half-edge {h} appears twice"));
                }
                if self.edges[h / 2][h % 2] != v {
                    return bad(format!("half-edge {h} listed at vertex {v} but belongs elsewhere"));
                }
            }
        }
        if let Some(h) = seen.iter().position(|s| !s) {
            return bad(format!("half-edge {h} is not in any rotation"));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn twists(&self) -> &[bool] {
        &self.twist
    }

    pub fn with_twists(&self, twist: Vec<bool>) -> Result<Self, ConstructionError> {
        RibbonGraph::new(self.edges.clone(), self.rotation.clone(), twist)
    }

    /// Flips one twist bit.
    pub fn toggled(&self, edge: usize) -> Self {
        let mut r = self.clone();
        r.twist[edge] = !r.twist[edge];
        r
    }

    /// Reverses the local orientation at `v`: the rotation is reversed and
    /// every non-loop band at `v` changes its twist. The surface is unchanged.
    pub fn switched_at(&self, v: usize) -> Self {
        let mut r = self.clone();
        r.rotation[v].reverse();
        for (e, ends) in self.edges.iter().enumerate() {
            if (ends[0] == v) != (ends[1] == v) {
                r.twist[e] = !r.twist[e];
            }
        }
        r
    }

    /// `E - V + 1`.
    pub fn algebraic_genus(&self) -> u64 {
        (self.edges.len() + 1).saturating_sub(self.rotation.len()) as u64
    }

    /// Position of each half-edge inside its vertex rotation.
    fn slots(&self) -> Vec<(usize, usize)> {
        let mut s = vec![(0, 0); 2 * self.edges.len()];
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &h) in rot.iter().enumerate() {
                s[h] = (v, i);
            }
        }
        s
    }

    /// Number of boundary curves.
    ///
    /// The band sides are flags `(h, side)`; side 0 is the counterclockwise
    /// side of half-edge `h`. Two involutions pair them: the vertex corner
    /// between `h` and its successor, and the band, which keeps or swaps the
    /// side depending on the twist. Boundary curves are the orbits.
    pub fn boundary_count(&self) -> usize {
        let n = 4 * self.edges.len();
        let slots = self.slots();
        let corner = |f: usize| -> usize {
            let (h, side) = (f / 2, f % 2);
            let (v, i) = slots[h];
            let rot = &self.rotation[v];
            if side == 0 {
                2 * rot[(i + 1) % rot.len()] + 1
            } else {
                2 * rot[(i + rot.len() - 1) % rot.len()]
            }
        };
        let band = |f: usize| -> usize {
            let (h, side) = (f / 2, f % 2);
            let other = h ^ 1;
            let s = if self.twist[h / 2] { side } else { 1 - side };
            2 * other + s
        };
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut f = start;
            loop {
                seen[f] = true;
                let g = corner(f);
                seen[g] = true;
                f = band(g);
                if f == start {
                    break;
                }
            }
        }
        count
    }

    /// Orientable iff the twist signs are balanced: vertex orientations can
    /// be switched so that no band is twisted.
    pub fn is_orientable(&self) -> bool {
        let n = self.rotation.len();
        let mut adj = vec![Vec::new(); n];
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            adj[a].push((b, self.twist[e]));
            adj[b].push((a, self.twist[e]));
        }
        let mut flip: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if flip[root].is_some() {
                continue;
            }
            flip[root] = Some(false);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                let fv = flip[v].expect("visited");
                for &(w, t) in &adj[v] {
                    match flip[w] {
                        None => {
                            flip[w] = Some(fv ^ t);
                            stack.push(w);
                        }
                        Some(fw) if fw != fv ^ t => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn surface_type(&self) -> Result<SurfaceType, ConstructionError> {
        let alpha = self.algebraic_genus();
        let b = self.boundary_count() as u64;
        Ok(SurfaceType::from_algebraic_genus(alpha, b, self.is_orientable())?)
    }
}

/// Carries a normal along a polyline, turning it at each bend by the
/// minimal rotation taking one tangent to the next.
pub(crate) fn transport_normal(points: &[Vec3], start: Vec3) -> Vec3 {
    let tangents: Vec<Vec3> = points.windows(2).map(|w| (w[1] - w[0]).normalize()).collect();
    let mut n = start - tangents[0] * start.dot(&tangents[0]);
    for t in tangents.windows(2) {
        if let Some(rot) = nalgebra::Rotation3::rotation_between(&t[0], &t[1]) {
            n = rot * n;
        }
    }
    n
}

/// Vertex normal: the mean incident direction, or the normal of the plane
/// holding all incident directions when they are coplanar.
fn vertex_normal(dirs: &[Vec3]) -> Vec3 {
    let mean: Vec3 = dirs.iter().sum::<Vec3>() / dirs.len() as f64;
    let cov = dirs.iter().fold(nalgebra::Matrix3::zeros(), |m, d| m + d * d.transpose());
    let eig = cov.symmetric_eigen();
    let (k, &lambda) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("3 eigenvalues");
    let coplanar = dirs.len() <= 2 || lambda < 1e-9 * dirs.len() as f64;
    if !coplanar && mean.norm() > 1e-9 {
        return mean.normalize();
    }
    let mut n: Vec3 = eig.eigenvectors.column(k).into();
    if mean.norm() > 1e-9 && n.dot(&mean) < 0.0 {
        n = -n;
    }
    n
}

/// Outgoing unit direction of every half-edge, grouped by vertex.
fn incident_directions(graph: &EmbeddedGraph, paths: &[Vec<Vec3>]) -> Vec<Vec<(usize, Vec3)>> {
    let mut incident: Vec<Vec<(usize, Vec3)>> = vec![Vec::new(); graph.vertex_count()];
    for (e, pts) in paths.iter().enumerate() {
        let k = pts.len();
        incident[graph.edges[e].ends[0]].push((2 * e, (pts[1] - pts[0]).normalize()));
        incident[graph.edges[e].ends[1]].push((2 * e + 1, (pts[k - 2] - pts[k - 1]).normalize()));
    }
    incident
}

/// The normal used at each vertex to order its edges.
pub(crate) fn vertex_normals(graph: &EmbeddedGraph) -> Vec<Vec3> {
    let paths: Vec<Vec<Vec3>> = (0..graph.edge_count()).map(|i| graph.edge_points(i)).collect();
    incident_directions(graph, &paths)
        .iter()
        .map(|inc| match disk_frame(inc) {
            Some((nv, _)) => nv,
            None => vertex_normal(&inc.iter().map(|x| x.1).collect::<Vec<_>>()),
        })
        .collect()
}

/// Disk normal and rotation at a vertex. An edge running along the normal
/// has no angle, so the disk is then tilted slightly.
fn disk_frame(inc: &[(usize, Vec3)]) -> Option<(Vec3, Vec<usize>)> {
    let mean = vertex_normal(&inc.iter().map(|x| x.1).collect::<Vec<_>>());
    let tilted = (mean + 0.1 * perpendicular(mean)).normalize();
    [mean, tilted]
        .into_iter()
        .find_map(|nv| angular_order(inc, nv).map(|r| (nv, r)))
}

fn perpendicular(n: Vec3) -> Vec3 {
    let e = if n.x.abs() < 0.9 { Vec3::x() } else { Vec3::y() };
    (e - n * n.dot(&e)).normalize()
}

/// Half-edges ordered counterclockwise about `nv`, or `None` when two of
/// them are indistinguishable in the plane normal to `nv`.
fn angular_order(inc: &[(usize, Vec3)], nv: Vec3) -> Option<Vec<usize>> {
    let e1 = perpendicular(nv);
    let e2 = nv.cross(&e1);
    let mut angled: Vec<(f64, usize)> = Vec::new();
    for &(h, d) in inc {
        let p = d - nv * nv.dot(&d);
        if p.norm() < 1e-9 {
            return None;
        }
        angled.push((p.dot(&e2).atan2(p.dot(&e1)), h));
    }
    angled.sort_by(|a, b| a.0.total_cmp(&b.0));
    if angled.windows(2).any(|w| (w[1].0 - w[0].0).abs() < 1e-9) {
        return None;
    }
    Some(angled.into_iter().map(|x| x.1).collect())
}

/// Builds the ribbon structure of a regular neighbourhood of `graph`.
///
/// At each vertex the incident edges are ordered by angle around the vertex
/// normal. A band is recorded as twisted when the normal carried along the
/// edge arrives opposite to the normal at the far end, XOR the edge's own
/// `twist` bit (so `twist = false` everywhere means flat bands).
pub fn ribbon_from_embedding(graph: &EmbeddedGraph) -> Result<RibbonGraph, ConstructionError> {
    if graph.combinatorial_only {
        return Err(ConstructionError::CombinatorialOnly);
    }
    let n = graph.vertex_count();
    let paths: Vec<Vec<Vec3>> = (0..graph.edge_count()).map(|i| graph.edge_points(i)).collect();
    let incident = incident_directions(graph, &paths);
    let mut normals = Vec::with_capacity(n);
    let mut rotation = Vec::with_capacity(n);
    for (v, inc) in incident.iter().enumerate() {
        let (nv, rot) = disk_frame(inc).ok_or(ConstructionError::AmbiguousRotation { vertex: v })?;
        normals.push(nv);
        rotation.push(rot);
    }
    let mut twist = Vec::with_capacity(graph.edge_count());
    for (e, pts) in paths.iter().enumerate() {
        let [a, b] = graph.edges[e].ends;
        let arrived = transport_normal(pts, normals[a]);
        let k = pts.len();
        let t_end = (pts[k - 1] - pts[k - 2]).normalize();
        let target = normals[b] - t_end * normals[b].dot(&t_end);
        let d = arrived.dot(&target);
        if d.abs() < 1e-9 {
            return Err(ConstructionError::AmbiguousRotation { vertex: b });
        }
        twist.push((d < 0.0) ^ graph.edges[e].twist);
    }
    RibbonGraph::new(graph.edges.iter().map(|e| e.ends).collect(), rotation, twist)
}

/// Surface type of the ribbon neighbourhood of `graph`.
pub fn ribbon_surface_type(graph: &EmbeddedGraph) -> Result<SurfaceType, ConstructionError> {
    ribbon_from_embedding(graph)?.surface_type()
}
