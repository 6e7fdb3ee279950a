use maxsym::classify::{ea_o, Kind};
use maxsym::constructions::{
    build_dipole, build_genus21, oracle_surface_type, polygon_oracle, ribbon_from_embedding, ribbon_surface_type, skeleton,
    triacontahedron, RibbonGraph, Solid, DEFAULT_TOL,
};
use maxsym::orbifold::SurfaceType;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Connected ribbon graph on `v` vertices with `e >= v - 1` edges (loops and
/// multi-edges allowed) and shuffled rotations.
fn random_ribbon(v: usize, e: usize, seed: u64) -> RibbonGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(e);
    for w in 1..v {
        edges.push([rng.random_range(0..w), w]);
    }
    while edges.len() < e {
        edges.push([rng.random_range(0..v), rng.random_range(0..v)]);
    }
    let mut rotation = vec![Vec::new(); v];
    for (i, &[a, b]) in edges.iter().enumerate() {
        rotation[a].push(2 * i);
        rotation[b].push(2 * i + 1);
    }
    for r in &mut rotation {
        r.shuffle(&mut rng);
    }
    let twist = (0..e).map(|_| rng.random_bool(0.5)).collect();
    RibbonGraph::new(edges, rotation, twist).unwrap()
}

fn is_bridge(r: &RibbonGraph, edge: usize) -> bool {
    let n = r.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let root = find(p, p[x]);
            p[x] = root;
        }
        p[x]
    }
    for (i, &[a, b]) in r.edges().iter().enumerate() {
        if i != edge {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let [a, b] = r.edges()[edge];
    find(&mut parent, a) != find(&mut parent, b)
}

fn all_twistings(r: &RibbonGraph) -> impl Iterator<Item = RibbonGraph> + '_ {
    let e = r.edge_count();
    (0..1u32 << e).map(move |m| r.with_twists((0..e).map(|i| m >> i & 1 == 1).collect()).unwrap())
}

#[test]
fn untwisted_platonic_ribbons_are_planar() {
    for s in Solid::ALL {
        let g = skeleton(s).unwrap();
        let r = ribbon_from_embedding(&g).unwrap();
        assert_eq!(r.algebraic_genus(), g.genus());
        let st = r.surface_type().unwrap();
        assert_eq!(st, SurfaceType::orientable(0, s.face_count()), "{s}");
        assert!(ea_o(g.genus()).unwrap().surfaces.contains(&st), "{s}");
    }
}

#[test]
fn all_twisted_icosahedron() {
    let mut g = skeleton(Solid::Icosahedron).unwrap();
    g.set_twists(&(0..30).collect::<Vec<_>>());
    assert_eq!(ribbon_surface_type(&g).unwrap(), SurfaceType::non_orientable(14, 6).unwrap());
}

#[test]
fn triacontahedron_faces() {
    let g = triacontahedron().unwrap();
    assert_eq!(ribbon_surface_type(&g).unwrap(), SurfaceType::orientable(0, 30));
    assert!(ea_o(29).unwrap().surfaces.contains(&SurfaceType::orientable(0, 30)));
}

#[test]
fn genus21_ribbon_matches_the_alpha_21_row() {
    let g = build_genus21(DEFAULT_TOL).unwrap();
    let st = ribbon_surface_type(&g.graph).unwrap();
    assert_eq!(st, SurfaceType::orientable(5, 12));
    assert_eq!(ea_o(21).unwrap().surfaces, vec![st]);
}

#[test]
fn dipoles_are_planar() {
    for g in 2..12 {
        let d = build_dipole(g, 1, DEFAULT_TOL).unwrap();
        assert_eq!(ribbon_surface_type(&d.graph).unwrap(), SurfaceType::orientable(0, g + 1), "g={g}");
    }
    for g in [3, 5, 7, 9] {
        let d = build_dipole(g, 2, DEFAULT_TOL).unwrap();
        assert_eq!(ribbon_surface_type(&d.graph).unwrap(), SurfaceType::orientable(0, g + 1), "g={g}");
    }
    let d = build_dipole(4, 1, DEFAULT_TOL).unwrap();
    let kind_surfaces = maxsym::classify::max_action(Kind::CeaO, 4).unwrap().surfaces;
    assert!(kind_surfaces.contains(&ribbon_surface_type(&d.graph).unwrap()));
}

#[test]
fn oracle_agrees_on_every_twisting_of_small_graphs() {
    let mut graphs: Vec<RibbonGraph> = Solid::ALL[..1]
        .iter()
        .map(|&s| ribbon_from_embedding(&skeleton(s).unwrap()).unwrap())
        .collect();
    for g in 2..=5 {
        graphs.push(ribbon_from_embedding(&build_dipole(g, 1, DEFAULT_TOL).unwrap().graph).unwrap());
    }
    for seed in 0..40 {
        let v = 1 + (seed as usize % 4);
        let e = (v - 1).max(1) + seed as usize % (7 - v);
        graphs.push(random_ribbon(v, e.min(6), seed));
    }
    for base in &graphs {
        assert!(base.edge_count() <= 6);
        for r in all_twistings(base) {
            assert_eq!(oracle_surface_type(&r).unwrap(), r.surface_type().unwrap(), "{r:?}");
        }
    }
}

#[test]
fn oracle_agrees_on_fixture_sized_graphs() {
    for s in [Solid::Tetrahedron, Solid::Cube, Solid::Octahedron] {
        let r = ribbon_from_embedding(&skeleton(s).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..64 {
            let t = r.with_twists((0..r.edge_count()).map(|_| rng.random_bool(0.5)).collect()).unwrap();
            let summary = polygon_oracle(&t);
            assert_eq!(summary.boundary, t.boundary_count());
            assert_eq!(summary.orientable, t.is_orientable());
        }
    }
}

#[test]
fn twist_parity_exhaustive() {
    let mut bases = vec![ribbon_from_embedding(&skeleton(Solid::Tetrahedron).unwrap()).unwrap()];
    for seed in 0..24 {
        let v = 1 + seed as usize % 5;
        bases.push(random_ribbon(v, (v + 2 + seed as usize % 3).min(8), 100 + seed));
    }
    for base in &bases {
        for r in all_twistings(base) {
            let b = r.boundary_count();
            for e in 0..r.edge_count() {
                let f = r.toggled(e);
                assert!(f.boundary_count().abs_diff(b) <= 1);
                if is_bridge(&r, e) {
                    assert_eq!(f.surface_type().unwrap(), r.surface_type().unwrap());
                } else if r.is_orientable() {
                    assert!(!f.is_orientable());
                }
            }
        }
    }
}

#[test]
fn switching_keeps_the_surface() {
    let r = random_ribbon(4, 7, 3);
    for v in 0..4 {
        assert_eq!(r.switched_at(v).surface_type().unwrap(), r.surface_type().unwrap());
    }
}

proptest! {
    #[test]
    fn tracing_matches_oracle(v in 1usize..6, extra in 0usize..8, seed in any::<u64>()) {
        let e = (v - 1 + extra).clamp(1, 12);
        let r = random_ribbon(v, e, seed);
        prop_assert_eq!(oracle_surface_type(&r).unwrap(), r.surface_type().unwrap());
        prop_assert_eq!(r.algebraic_genus() as usize, e + 1 - v);
    }

    #[test]
    fn boundary_bounded_by_bands(v in 1usize..6, extra in 0usize..8, seed in any::<u64>()) {
        let r = random_ribbon(v, (v - 1 + extra).max(1), seed);
        let b = r.boundary_count();
        prop_assert!(b >= 1 && b <= 2 * r.edge_count());
        // the surface exists: b <= α + 1
        prop_assert!(b as u64 <= r.algebraic_genus() + 1);
    }
}
