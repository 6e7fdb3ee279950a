//! Acceptance criteria 1 to 10. Each criterion prints one PASS/FAIL line
//! with its runtime; the test fails if any criterion fails.

use std::io::Write;
use std::time::{Duration, Instant};

use maxsym::classify::{
    self, ce, ce_o, cea, cea_o, e, e_o, ea, ea_o, enumerate_bordered_cases, max_action, Kind, MaxActionResult, Note,
    Witness,
};
use maxsym::constructions::{
    build_dipole, build_genus21, build_platonic, check_invariance, from_json, oracle_surface_type,
    ribbon_from_embedding, skeleton, to_json, DipoleAction, RibbonGraph, Solid, DEFAULT_TOL, FIXTURES,
};
use maxsym::orbifold::{orbifold_euler_characteristic, QuotientCase, QuotientSignature, RhSolution, SurfaceType};
use maxsym::permgroup::{are_aut_equivalent, automorphisms, standard_group, GroupLabel};
use maxsym::verify::{check_fact, coset_index, COSET_INDICES, PAIR_FACTS};
use num_rational::Ratio;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;

fn s(g: u64, b: u64) -> SurfaceType {
    SurfaceType::orientable(g, b)
}

fn n(g: u64, b: u64) -> SurfaceType {
    SurfaceType::non_orientable(g, b).unwrap()
}

fn sorted(mut v: Vec<SurfaceType>) -> Vec<SurfaceType> {
    v.sort();
    v.dedup();
    v
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn get(r: Result<MaxActionResult, classify::ClassifyError>) -> Result<MaxActionResult, String> {
    r.map_err(|e| e.to_string())
}

fn criterion_1() -> Outcome {
    for g in 2..=500 {
        let want = if g % 2 == 0 { 2 * g + 2 } else { 2 * g };
        let (a, b) = (get(ce_o(g))?.order, get(ce(g))?.order);
        ensure(a == g + 1 && b == want, || format!("g={g}: CE°={a} CE={b}"))?;
    }
    Ok("CE° = g+1 and CE = 2g+2 / 2g for g in [2,500]".into())
}

fn criterion_2() -> Outcome {
    for g in 2..=500 {
        let want = match g {
            3 => 12,
            5 | 7 => 24,
            11 | 19 | 21 => 60,
            _ => 2 * g + 2,
        };
        let (a, b) = (get(e_o(g))?.order, get(e(g))?.order);
        let want_e = if g == 21 { 88 } else { 2 * want };
        ensure(a == want && b == want_e, || format!("g={g}: E°={a} E={b}, expected {want}/{want_e}"))?;
    }
    Ok("E° table and E = 2E° (E_21 = 88) for g in [2,500]".into())
}

fn criterion_3() -> Outcome {
    let mut counts = Vec::new();
    for f in &PAIR_FACTS {
        let o = check_fact(f).map_err(|e| e.to_string())?;
        ensure(o.passed(), || format!("{} {:?}: {o:?}", f.group, f.orders))?;
        // every enumerated class representative is equivalent to a listed pair
        let g = standard_group(f.group).map_err(|e| e.to_string())?;
        let auts = automorphisms(&g);
        let (r, t) = f.orders;
        let listed: Vec<_> = f
            .pairs
            .iter()
            .map(|(a, b)| (g.parse_element(a).unwrap(), g.parse_element(b).unwrap()))
            .collect();
        for c in classify::pair_classes(f.group, r, t).map_err(|e| e.to_string())?.iter() {
            ensure(listed.iter().any(|p| are_aut_equivalent(&g, &auts, p, &c.representative, r == t)), || {
                format!("{} {:?}: class {:?} matches no listed pair", f.group, f.orders, c.representative)
            })?;
        }
        counts.push(o.classes);
    }
    ensure(counts == [1, 1, 1, 1, 2, 1, 4], || format!("class counts {counts:?}"))?;
    let none = classify::pair_classes(GroupLabel::S4, 3, 3).map_err(|e| e.to_string())?;
    ensure(none.is_empty(), || format!("S4 (3,3) has {} classes", none.len()))?;
    Ok(format!("class counts {counts:?}, S4 (3,3) has no generating pairs"))
}

fn criterion_4() -> Outcome {
    for a in 2..=200u64 {
        let few = if a % 2 == 0 { s(a / 2, 1) } else { s((a - 1) / 2, 2) };
        let r = get(cea_o(a))?;
        ensure(r.order == a + 1 && r.surfaces == sorted(vec![s(0, a + 1), few]), || {
            format!("CEA° α={a}: {} {:?}", r.order, r.surfaces)
        })?;
        let r = get(cea(a, false))?;
        let want = if a % 2 == 0 { 2 * a + 2 } else { 2 * a };
        ensure(r.order == want && r.surfaces == vec![s(0, a + 1)], || {
            format!("CEA α={a}: {} {:?}", r.order, r.surfaces)
        })?;
        ensure(r.notes.contains(&Note::NonFaithful) == (a % 2 == 1), || format!("CEA α={a}: notes {:?}", r.notes))?;
        let f = get(cea(a, true))?;
        let want = if a % 2 == 0 { 2 * a + 2 } else { a + 1 };
        ensure(f.order == want && f.is_faithful(), || format!("CEA faithful α={a}: {}", f.order))?;
    }
    Ok("CEA° and CEA orders and surfaces, non-faithful odd α, faithful value α+1".into())
}

fn ea_o_row(a: u64) -> (u64, Vec<SurfaceType>) {
    let (order, v) = match a {
        3 => (12, vec![s(0, 4), n(1, 3)]),
        5 => (24, vec![s(0, 6), s(1, 4)]),
        7 => (24, vec![s(0, 8), n(4, 4)]),
        11 => (60, vec![s(0, 12), n(6, 6)]),
        19 => (60, vec![s(0, 20), s(4, 12), n(10, 10), n(14, 6)]),
        21 => (60, vec![s(5, 12)]),
        29 => (60, vec![s(0, 30), s(5, 20), s(9, 12), s(14, 2)]),
        _ if a.is_multiple_of(2) => (2 * a + 2, vec![s(0, a + 1), s(a / 2, 1)]),
        _ => (2 * a + 2, vec![s(0, a + 1), s((a - 1) / 2, 2)]),
    };
    (order, sorted(v))
}

fn criterion_5() -> Outcome {
    for a in 2..=200u64 {
        let r = get(ea_o(a))?;
        let (order, surfaces) = ea_o_row(a);
        ensure(r.order == order, || format!("EA° α={a}: {} expected {order}", r.order))?;
        if [3, 5, 7, 11, 19, 21, 29].contains(&a) {
            ensure(r.surfaces == surfaces, || format!("EA° α={a}: {:?} expected {surfaces:?}", r.surfaces))?;
        }
    }
    Ok("EA° orders for α in [2,200], surface rows at 3,5,7,11,19,21,29".into())
}

fn criterion_6() -> Outcome {
    for a in 2..=200u64 {
        let r = get(ea(a))?;
        let (order, surface) = match a {
            3 => (24, s(0, 4)),
            5 => (48, s(0, 6)),
            7 => (48, s(0, 8)),
            11 => (120, s(0, 12)),
            19 => (120, s(0, 20)),
            _ => (4 * a + 4, s(0, a + 1)),
        };
        ensure(r.order == order && r.surfaces == vec![surface], || {
            format!("EA α={a}: {} {:?}, expected {order} {surface}", r.order, r.surfaces)
        })?;
    }
    Ok("EA orders and punctured spheres for α in [2,200]".into())
}

fn criterion_7() -> Outcome {
    for (g, gens, want) in COSET_INDICES {
        let i = coset_index(g, gens).map_err(|e| e.to_string())?;
        ensure(i == want, || format!("[{g}:<{}>] = {i}, expected {want}", gens.join(",")))?;
    }
    Ok(format!("{} coset indices", COSET_INDICES.len()))
}

fn criterion_8() -> Outcome {
    let want = [(12, 24), (24, 48), (24, 48), (60, 120), (60, 120)];
    for (solid, (r, f)) in Solid::ALL.into_iter().zip(want) {
        let p = build_platonic(solid, DEFAULT_TOL).map_err(|e| e.to_string())?;
        let got = (p.rotations.order(), p.full.order());
        ensure(got == (r, f), || format!("{solid}: {got:?}"))?;
        check_invariance(&p.full, &p.graph, DEFAULT_TOL).map_err(|e| format!("{solid}: {e:?}"))?;
    }
    for g in 2..=30u64 {
        let d = build_dipole(g, 1, DEFAULT_TOL).map_err(|e| e.to_string())?;
        let mut exp = vec![(DipoleAction::Rotation, g + 1), (DipoleAction::Dihedral, 2 * g + 2), (DipoleAction::Full, 4 * g + 4)];
        if g % 2 == 0 {
            exp.push((DipoleAction::RotaryReflection, 2 * g + 2));
        }
        let mut dipoles = vec![(d, exp)];
        if g % 2 == 1 {
            let d2 = build_dipole(g, 2, DEFAULT_TOL).map_err(|e| e.to_string())?;
            dipoles.push((d2, vec![(DipoleAction::RotaryReflectionOdd, 2 * g)]));
        }
        for (d, exp) in dipoles {
            ensure(d.graph.genus() == g, || format!("dipole genus {} at g={g}", d.graph.genus()))?;
            for (a, order) in exp {
                let grp = d.group(a).ok_or(format!("g={g}: {a:?} missing"))?;
                ensure(grp.order() as u64 == order, || format!("g={g} {a:?}: order {}", grp.order()))?;
                check_invariance(grp, &d.graph, DEFAULT_TOL).map_err(|e| format!("g={g} {a:?}: {e:?}"))?;
            }
        }
    }
    let g21 = build_genus21(DEFAULT_TOL).map_err(|e| e.to_string())?;
    let counts = (g21.graph.vertex_count(), g21.graph.edge_count(), g21.rotations.order());
    ensure(counts == (40, 60, 60), || format!("genus-21 graph V, E, |G| = {counts:?}"))?;
    check_invariance(&g21.rotations, &g21.graph, DEFAULT_TOL).map_err(|e| format!("genus 21: {e:?}"))?;
    Ok("Platonic groups 12/24/24/60/60 and 24/48/48/120/120, dipoles g in [2,30], genus-21 graph".into())
}

fn all_twistings(r: &RibbonGraph) -> Vec<RibbonGraph> {
    let e = r.edge_count();
    (0..1u64 << e)
        .map(|m| r.with_twists((0..e).map(|i| m >> i & 1 == 1).collect()).unwrap())
        .collect()
}

fn criterion_9() -> Outcome {
    for solid in Solid::ALL {
        let g = skeleton(solid).map_err(|e| e.to_string())?;
        let r = ribbon_from_embedding(&g).map_err(|e| e.to_string())?;
        let st = r.surface_type().map_err(|e| e.to_string())?;
        ensure(st == s(0, solid.face_count()), || format!("{solid} untwisted: {st}"))?;
        ensure(r.algebraic_genus() == g.genus(), || format!("{solid}: algebraic genus {}", r.algebraic_genus()))?;
    }
    let mut ico = skeleton(Solid::Icosahedron).map_err(|e| e.to_string())?;
    ico.set_twists(&(0..30).collect::<Vec<_>>());
    let st = ribbon_from_embedding(&ico).and_then(|r| r.surface_type()).map_err(|e| e.to_string())?;
    ensure(st == n(14, 6), || format!("all-twisted icosahedron: {st}"))?;

    let required = [s(4, 12), n(10, 10), s(0, 30), s(9, 12), s(5, 20)];
    let mut hit = Vec::new();
    for f in FIXTURES {
        let g = f.graph().map_err(|e| e.to_string())?;
        let r = ribbon_from_embedding(&g).map_err(|e| e.to_string())?;
        let st = r.surface_type().map_err(|e| e.to_string())?;
        ensure(st == f.target_surface(), || format!("fixture {}: {st}", f.name))?;
        ensure(r.algebraic_genus() == g.genus(), || format!("fixture {}: algebraic genus", f.name))?;
        hit.push(st);
    }
    for want in required {
        ensure(hit.contains(&want), || format!("no fixture for {want}"))?;
    }

    let mut graphs: Vec<RibbonGraph> = Vec::new();
    for solid in [Solid::Tetrahedron, Solid::Cube, Solid::Octahedron] {
        graphs.push(ribbon_from_embedding(&skeleton(solid).unwrap()).map_err(|e| e.to_string())?);
    }
    for g in 2..=11 {
        graphs.push(ribbon_from_embedding(&build_dipole(g, 1, DEFAULT_TOL).unwrap().graph).map_err(|e| e.to_string())?);
    }
    let mut compared = 0usize;
    for r in &graphs {
        ensure(r.edge_count() <= 12, || "graph too large".into())?;
        for t in all_twistings(r) {
            let (a, b) = (t.surface_type().map_err(|e| e.to_string())?, oracle_surface_type(&t).map_err(|e| e.to_string())?);
            ensure(a == b, || format!("twists {:?}: tracing {a}, oracle {b}", t.twists()))?;
            compared += 1;
        }
    }
    Ok(format!("Platonic, all-twisted, {} fixtures, oracle agreed on {compared} ribbons", FIXTURES.len()))
}

fn every_result() -> Result<Vec<MaxActionResult>, String> {
    let mut out = Vec::new();
    for kind in Kind::ALL {
        for x in 2..=120 {
            out.push(get(max_action(kind, x))?);
        }
    }
    Ok(out)
}

fn witness_rh_exact(w: &Witness, input: u64) -> Result<(), String> {
    let rh = RhSolution::solve(w.group().order(), w.signature.clone()).map_err(|e| e.to_string())?;
    ensure(rh.identity_holds(), || format!("{w}: RH identity"))?;
    ensure(rh.covering_genus == input, || format!("{w}: covers genus {} not {input}", rh.covering_genus))
}

/// Surfaces of the case-(b) configurations of one group at `alpha`.
fn case_b(alpha: u64, group: GroupLabel) -> Result<Vec<SurfaceType>, String> {
    let cases = enumerate_bordered_cases(alpha).map_err(|e| e.to_string())?;
    Ok(sorted(
        cases
            .iter()
            .filter(|w| w.group() == group && w.signature.case == QuotientCase::DiskReflectorArcPlusCone)
            .filter_map(|w| w.surface)
            .collect(),
    ))
}

fn criterion_10() -> Outcome {
    // exact Riemann-Hurwitz arithmetic, on engine output and on random signatures
    let results = every_result()?;
    for r in &results {
        for w in &r.witnesses {
            ensure(w.is_sound(), || format!("{} at {}: unsound witness {w}", r.kind, r.input))?;
            let covers_input = !matches!(w.signature.case, QuotientCase::PlanarAnnulus) || r.kind == Kind::Cea;
            if covers_input {
                witness_rh_exact(w, r.input)?;
            }
        }
    }
    let mut runner = TestRunner::new(Config { cases: 2000, failure_persistence: None, ..Config::default() });
    runner
        .run(&(1u64..2_000_000, 0u64..4, prop::collection::vec(2u64..500, 0..5)), |(order, genus, cones)| {
            let sig = QuotientSignature::closed(GroupLabel::Cyclic(order), genus, cones.clone()).unwrap();
            let chi = orbifold_euler_characteristic(&sig) * Ratio::from_integer(order as i128);
            match RhSolution::solve(order, sig) {
                Ok(rh) => {
                    prop_assert!(rh.identity_holds());
                    prop_assert_eq!(Ratio::from_integer(2 - 2 * rh.covering_genus as i128), chi);
                }
                Err(_) => prop_assert!(!chi.is_integer() || chi.to_integer() % 2 != 0 || chi > Ratio::from_integer(2)),
            }
            Ok(())
        })
        .map_err(|e| format!("RH property: {e}"))?;

    // case (b) orientability, one conclusion per row of the bordered proof
    use GroupLabel::{Dihedral, A4, A5, S4};
    let rows: [(u64, GroupLabel, Vec<SurfaceType>); 10] = [
        (4, Dihedral(5), vec![s(2, 1)]),
        (9, Dihedral(10), vec![s(4, 2)]),
        (3, A4, vec![n(1, 3)]),
        (5, S4, vec![s(1, 4)]),
        (7, S4, vec![n(4, 4)]),
        (11, A5, vec![n(6, 6)]),
        (19, A5, vec![n(10, 10), n(14, 6)]),
        (21, A5, vec![]),
        (29, A5, vec![]),
        (29, Dihedral(30), vec![s(14, 2)]),
    ];
    for (a, group, want) in rows {
        let got = case_b(a, group)?;
        let want = sorted(want);
        ensure(got == want, || format!("case (b) for {group} at α={a}: {got:?}, expected {want:?}"))?;
    }

    // JSON round trips
    for r in &results {
        let text = serde_json::to_string(r).map_err(|e| e.to_string())?;
        let back: MaxActionResult = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        ensure(&back == r, || format!("{} at {}: JSON round trip", r.kind, r.input))?;
    }
    for solid in Solid::ALL {
        let mut g = skeleton(solid).unwrap();
        g.set_twists(&[0, 3]);
        let text = to_json(&g, Default::default());
        let (back, _) = from_json(&text).map_err(|e| e.to_string())?;
        ensure(back == g && to_json(&back, Default::default()) == text, || format!("{solid}: graph round trip"))?;
    }
    Ok(format!("{} engine results sound and exact, case-(b) rows of all eight cases, JSON identity", results.len()))
}

/// Written to the real stdout so the lines show up without `--nocapture`.
fn report(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome, Duration); 10] = [
        ("closed cyclic maxima", criterion_1, Duration::from_secs(1)),
        ("closed maxima table", criterion_2, Duration::from_secs(5)),
        ("generating pair facts", criterion_3, Duration::from_secs(10)),
        ("bordered cyclic maxima", criterion_4, Duration::from_secs(1)),
        ("bordered orientation-preserving table", criterion_5, Duration::from_secs(10)),
        ("bordered full table", criterion_6, Duration::from_secs(5)),
        ("coset indices", criterion_7, Duration::from_secs(1)),
        ("constructions", criterion_8, Duration::from_secs(30)),
        ("ribbon oracle", criterion_9, Duration::from_secs(60)),
        ("property suite", criterion_10, Duration::from_secs(120)),
    ];
    let mut failed = Vec::new();
    for (i, (name, f, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(d) if took > budget => Err(format!("{d}; took {took:.2?}, budget {budget:?}")),
            o => o,
        };
        match outcome {
            Ok(d) => report(format!("criterion {:>2} PASS {name} ({took:.2?}): {d}", i + 1)),
            Err(d) => {
                report(format!("criterion {:>2} FAIL {name} ({took:.2?}): {d}", i + 1));
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
