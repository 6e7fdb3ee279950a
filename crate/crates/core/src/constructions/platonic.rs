use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::graph::{Edge, EmbeddedGraph};
use super::matrix_group::{generate_group, reflection, rotation, Mat3, MatrixGroup, Vec3};
use super::ConstructionError;

pub const PHI: f64 = 1.618_033_988_749_895;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Solid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl Solid {
    pub const ALL: [Solid; 5] = [
        Solid::Tetrahedron,
        Solid::Cube,
        Solid::Octahedron,
        Solid::Dodecahedron,
        Solid::Icosahedron,
    ];

    pub fn letter(self) -> char {
        match self {
            Solid::Tetrahedron => 'T',
            Solid::Cube => 'C',
            Solid::Octahedron => 'O',
            Solid::Dodecahedron => 'D',
            Solid::Icosahedron => 'I',
        }
    }

    pub fn face_count(self) -> u64 {
        match self {
            Solid::Tetrahedron => 4,
            Solid::Cube => 6,
            Solid::Octahedron => 8,
            Solid::Dodecahedron => 12,
            Solid::Icosahedron => 20,
        }
    }
}

impl fmt::Display for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Solid {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" => Ok(Solid::Tetrahedron),
            "C" => Ok(Solid::Cube),
            "O" => Ok(Solid::Octahedron),
            "D" => Ok(Solid::Dodecahedron),
            "I" => Ok(Solid::Icosahedron),
            _ => Err(ConstructionError::Parse(format!("unknown solid {s:?}, expected T, C, O, D or I"))),
        }
    }
}

fn cyclic_perms(p: [f64; 3]) -> [[f64; 3]; 3] {
    [p, [p[1], p[2], p[0]], [p[2], p[0], p[1]]]
}

fn signs(p: [f64; 3]) -> Vec<[f64; 3]> {
    let mut out: Vec<[f64; 3]> = Vec::new();
    for m in 0..8 {
        let q = [
            if m & 1 == 1 { -p[0] } else { p[0] },
            if m & 2 == 2 { -p[1] } else { p[1] },
            if m & 4 == 4 { -p[2] } else { p[2] },
        ];
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

pub fn solid_vertices(solid: Solid) -> Vec<[f64; 3]> {
    match solid {
        Solid::Tetrahedron => vec![[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]],
        Solid::Cube => signs([1.0, 1.0, 1.0]),
        Solid::Octahedron => cyclic_perms([1.0, 0.0, 0.0]).iter().flat_map(|&p| signs(p)).collect(),
        Solid::Dodecahedron => {
            let mut v = signs([1.0, 1.0, 1.0]);
            v.extend(cyclic_perms([0.0, PHI, 1.0 / PHI]).iter().flat_map(|&p| signs(p)));
            v
        }
        Solid::Icosahedron => cyclic_perms([0.0, 1.0, PHI]).iter().flat_map(|&p| signs(p)).collect(),
    }
}

fn dist(a: [f64; 3], b: [f64; 3]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
}

/// Edges are the vertex pairs at minimal distance.
fn nearest_pairs(vertices: &[[f64; 3]]) -> Vec<[usize; 2]> {
    let mut min = f64::INFINITY;
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            min = min.min(dist(vertices[i], vertices[j]));
        }
    }
    let mut out = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if dist(vertices[i], vertices[j]) < min * (1.0 + 1e-9) {
                out.push([i, j]);
            }
        }
    }
    out
}

pub fn skeleton(solid: Solid) -> Result<EmbeddedGraph, ConstructionError> {
    let v = solid_vertices(solid);
    let edges = nearest_pairs(&v).into_iter().map(|[a, b]| Edge::straight(a, b)).collect();
    EmbeddedGraph::new(v, edges)
}

/// Generators of the rotation group. A4 and S4 share the 3-fold axis
/// `(1,1,1)` with the `z` half-turn or quarter-turn; A5 adds the 5-fold axis
/// through the icosahedron vertex `(0,1,φ)`.
pub fn rotation_generators(solid: Solid) -> Vec<Mat3> {
    let three = rotation(Vec3::new(1.0, 1.0, 1.0), 2.0 * PI / 3.0);
    match solid {
        Solid::Tetrahedron => vec![three, rotation(Vec3::z(), PI)],
        Solid::Cube | Solid::Octahedron => vec![three, rotation(Vec3::z(), PI / 2.0)],
        Solid::Dodecahedron | Solid::Icosahedron => vec![three, rotation(Vec3::new(0.0, 1.0, PHI), 2.0 * PI / 5.0)],
    }
}

/// The orientation-reversing element added to get the full isometry group:
/// reflection after a quarter turn (T), a plain reflection (C, O), or
/// reflection after a `π/5` turn about a 5-fold axis (D, I).
pub fn reversing_generator(solid: Solid) -> Mat3 {
    match solid {
        Solid::Tetrahedron => reflection(Vec3::z()) * rotation(Vec3::z(), PI / 2.0),
        Solid::Cube | Solid::Octahedron => reflection(Vec3::z()),
        Solid::Dodecahedron | Solid::Icosahedron => {
            let axis = Vec3::new(0.0, 1.0, PHI);
            reflection(axis) * rotation(axis, PI / 5.0)
        }
    }
}

pub struct Platonic {
    pub solid: Solid,
    pub graph: EmbeddedGraph,
    pub rotations: MatrixGroup,
    pub full: MatrixGroup,
}

pub fn build_platonic(solid: Solid, tol: f64) -> Result<Platonic, ConstructionError> {
    let graph = skeleton(solid)?;
    let gens = rotation_generators(solid);
    let rotations = generate_group(&gens, tol, 120)?;
    let mut all = gens;
    all.push(reversing_generator(solid));
    let full = generate_group(&all, tol, 240)?;
    Ok(Platonic {
        solid,
        graph,
        rotations,
        full,
    })
}

/// Skeleton of the rhombic triacontahedron: the 12 icosahedron vertices and
/// the 20 dodecahedron vertices, each joined to the nearest vertices of the
/// other kind. `V = 32`, `E = 60`, 30 faces.
pub fn triacontahedron() -> Result<EmbeddedGraph, ConstructionError> {
    let ico = solid_vertices(Solid::Icosahedron);
    let dod: Vec<[f64; 3]> = solid_vertices(Solid::Dodecahedron)
        .into_iter()
        .map(|p| [p[0] * PHI / 1.5, p[1] * PHI / 1.5, p[2] * PHI / 1.5])
        .collect();
    let mut min = f64::INFINITY;
    for &a in &ico {
        for &b in &dod {
            min = min.min(dist(a, b));
        }
    }
    let mut edges = Vec::new();
    for (i, &a) in ico.iter().enumerate() {
        for (j, &b) in dod.iter().enumerate() {
            if dist(a, b) < min * (1.0 + 1e-9) {
                edges.push(Edge::straight(i, ico.len() + j));
            }
        }
    }
    let mut vertices = ico;
    vertices.extend(dod);
    EmbeddedGraph::new(vertices, edges)
}
