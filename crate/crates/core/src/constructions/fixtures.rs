//! Twist patterns reproducing the bordered surfaces of the α = 19 and
//! α = 29 rows on polyhedral skeleta.
//!
//! The patterns were found by [`search_twists`] with the seeds recorded
//! here; each is a list of twisted edge indices in the skeleton's
//! deterministic edge order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::graph::EmbeddedGraph;
use super::platonic::{skeleton, triacontahedron, Solid};
use super::ribbon::{ribbon_from_embedding, RibbonGraph};
use super::ConstructionError;
use crate::orbifold::SurfaceType;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureModel {
    Icosahedron,
    Triacontahedron,
}

impl FixtureModel {
    pub fn graph(self) -> Result<EmbeddedGraph, ConstructionError> {
        match self {
            FixtureModel::Icosahedron => skeleton(Solid::Icosahedron),
            FixtureModel::Triacontahedron => triacontahedron(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TwistFixture {
    pub name: &'static str,
    pub model: FixtureModel,
    /// `(orientable, genus, boundary)`.
    pub target: (bool, u64, u64),
    pub seed: u64,
    pub twisted: &'static [usize],
}

impl TwistFixture {
    pub fn target_surface(&self) -> SurfaceType {
        let (o, g, b) = self.target;
        SurfaceType { orientable: o, genus: g, boundary: b }
    }

    /// The skeleton with this fixture's twist bits set.
    pub fn graph(&self) -> Result<EmbeddedGraph, ConstructionError> {
        let mut g = self.model.graph()?;
        g.set_twists(self.twisted);
        Ok(g)
    }
}

pub const FIXTURES: &[TwistFixture] = &[
    TwistFixture {
        name: "icosa-S4-12",
        model: FixtureModel::Icosahedron,
        target: (true, 4, 12),
        seed: 0,
        twisted: &[3, 6, 7, 15, 19, 23, 24, 26, 27, 28],
    },
    TwistFixture {
        name: "icosa-N10-10",
        model: FixtureModel::Icosahedron,
        target: (false, 10, 10),
        seed: 0,
        twisted: &[1, 5, 16, 17, 19, 20, 21, 24, 26, 28],
    },
    TwistFixture {
        name: "triac-S0-30",
        model: FixtureModel::Triacontahedron,
        target: (true, 0, 30),
        seed: 0,
        twisted: &[],
    },
    TwistFixture {
        name: "triac-S5-20",
        model: FixtureModel::Triacontahedron,
        target: (true, 5, 20),
        seed: 0,
        twisted: &[2, 5, 10, 12, 17, 21, 22, 23, 27, 28, 30, 33, 38, 41, 50],
    },
    TwistFixture {
        name: "triac-S9-12",
        model: FixtureModel::Triacontahedron,
        target: (true, 9, 12),
        seed: 0,
        twisted: &[
            1, 2, 3, 5, 8, 10, 11, 12, 15, 17, 21, 22, 23, 25, 26, 27, 28, 32, 34, 38, 41, 44, 45, 50, 51, 55,
        ],
    },
    TwistFixture {
        name: "triac-S14-2",
        model: FixtureModel::Triacontahedron,
        target: (true, 14, 2),
        seed: 0,
        twisted: &[
            0, 1, 7, 8, 9, 10, 11, 12, 14, 15, 17, 19, 20, 21, 23, 24, 25, 26, 28, 29, 32, 35, 38, 40, 41, 42, 43,
            45, 46, 47, 50, 51, 52, 53, 55, 57, 59,
        ],
    },
];

pub fn fixture(name: &str) -> Result<&'static TwistFixture, ConstructionError> {
    FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| ConstructionError::UnknownFixture(name.to_string()))
}

fn score(r: &RibbonGraph, target: &SurfaceType) -> u64 {
    let b = r.boundary_count() as u64;
    let mut s = b.abs_diff(target.boundary);
    if r.is_orientable() != target.orientable {
        s += 1;
    }
    s
}

/// Randomized descent over twist patterns of `base` (whose own twist bits
/// describe flat bands) towards `target`. Orientable targets move by
/// twisting every band at one vertex, which keeps the signs balanced;
/// non-orientable targets move by single bands. Returns the twisted edges
/// relative to flat bands.
pub fn search_twists(base: &RibbonGraph, target: SurfaceType, seed: u64, max_steps: usize) -> Option<Vec<usize>> {
    if base.algebraic_genus() != target.algebraic_genus() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let flat = base.twists().to_vec();
    let mut cur = base.clone();
    let mut cur_score = score(&cur, &target);
    let nv = cur.vertex_count();
    let ne = cur.edge_count();
    for _ in 0..max_steps {
        if cur_score == 0 && cur.surface_type().ok() == Some(target) {
            let twisted = (0..ne).filter(|&e| cur.twists()[e] != flat[e]).collect();
            return Some(twisted);
        }
        let next = if target.orientable {
            let v = rng.random_range(0..nv);
            let mut r = cur.clone();
            for (e, ends) in cur.edges().iter().enumerate() {
                if (ends[0] == v) != (ends[1] == v) {
                    r = r.toggled(e);
                }
            }
            r
        } else {
            cur.toggled(rng.random_range(0..ne))
        };
        let s = score(&next, &target);
        if s <= cur_score || rng.random_bool(0.02) {
            cur = next;
            cur_score = s;
        }
    }
    None
}

/// Searches the fixture model from scratch with the fixture's seed.
pub fn rediscover(f: &TwistFixture, max_steps: usize) -> Result<Option<Vec<usize>>, ConstructionError> {
    let base = ribbon_from_embedding(&f.model.graph()?)?;
    Ok(search_twists(&base, f.target_surface(), f.seed, max_steps))
}
