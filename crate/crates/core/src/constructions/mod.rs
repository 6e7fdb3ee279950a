//! Equivariant graphs in R³, the finite orthogonal groups preserving them,
//! and the ribbon surfaces obtained by thickening them.

mod dipole;
mod export;
mod fixtures;
mod genus21;
mod graph;
mod matrix_group;
mod platonic;
mod ribbon;
mod ribbon_oracle;

use thiserror::Error;

use crate::orbifold::OrbifoldError;

pub use dipole::{build_dipole, Dipole, DipoleAction};
pub use export::{from_json, to_json, to_obj, BandOptions, GraphFile, SCHEMA};
pub use fixtures::{fixture, rediscover, search_twists, FixtureModel, TwistFixture, FIXTURES};
pub use genus21::{
    arc_collisions, build_genus21, build_genus21_with_seed, find_genus21_seed, segment_distance, Genus21, GENUS21_SEED,
};
pub use graph::{check_invariance, transform, Edge, EmbeddedGraph, InvarianceFailure};
pub use matrix_group::{generate_group, reflection, rotation, Mat3, MatrixGroup, Vec3, DEFAULT_TOL};
pub use platonic::{
    build_platonic, reversing_generator, rotation_generators, skeleton, solid_vertices, triacontahedron, Platonic, Solid,
    PHI,
};
pub use ribbon::{ribbon_from_embedding, ribbon_surface_type, RibbonGraph};
pub use ribbon_oracle::{oracle_surface_type, polygon_oracle, ComplexSummary};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructionError {
    #[error("generator {index} is not orthogonal (error {error:e})")]
    NonOrthogonal { index: usize, error: f64 },
    #[error("group not finite within bound {bound}")]
    GroupNotFinite { bound: usize },
    #[error("ambiguous rotation at vertex {vertex}")]
    AmbiguousRotation { vertex: usize },
    #[error("arcs {a} and {b} collide (distance {distance:e})")]
    ArcCollision { a: usize, b: usize, distance: f64 },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("inconsistent ribbon: {0}")]
    InvalidRibbon(String),
    #[error("{0}")]
    Parity(String),
    #[error("graph has no geometry")]
    CombinatorialOnly,
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Surface(#[from] OrbifoldError),
}
