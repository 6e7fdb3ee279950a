//! Self-check suites shared by the command line and the test suite. Each
//! check carries a short detail line; failing checks name the first
//! counterexample found.

mod facts;
pub mod tables;

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::{self, max_action, Kind, MaxActionResult};
use crate::constructions::{
    build_dipole, build_genus21, build_platonic, check_invariance, oracle_surface_type, ribbon_from_embedding,
    ribbon_surface_type, skeleton, DipoleAction, RibbonGraph, Solid, FIXTURES,
};
use crate::orbifold::SurfaceType;
use crate::permgroup::GroupLabel;

pub use facts::{check_fact, coset_index, FactOutcome, PairFact, COSET_INDICES, PAIR_FACTS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Facts,
    Tables,
    Ribbon,
    Constructions,
    All,
}

impl Suite {
    pub const EACH: [Suite; 4] = [Suite::Facts, Suite::Tables, Suite::Ribbon, Suite::Constructions];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Facts => "facts",
            Suite::Tables => "tables",
            Suite::Ribbon => "ribbon",
            Suite::Constructions => "constructions",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "facts" => Ok(Suite::Facts),
            "tables" => Ok(Suite::Tables),
            "ribbon" => Ok(Suite::Ribbon),
            "constructions" => Ok(Suite::Constructions),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite {s:?}, expected facts, tables, ribbon, constructions or all")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark} [{}] {}: {}", self.suite, self.name, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Inputs (`g` or `α`) for the tables suite.
    pub range: RangeInclusive<u64>,
    pub tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { range: 2..=500, tol: crate::constructions::DEFAULT_TOL }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub fn run_verify(suite: Suite, opts: &VerifyOptions) -> Vec<Check> {
    match suite {
        Suite::Facts => facts_suite(),
        Suite::Tables => tables_suite(opts.range.clone()),
        Suite::Ribbon => ribbon_suite(),
        Suite::Constructions => constructions_suite(opts.tol),
        Suite::All => Suite::EACH.iter().flat_map(|&s| run_verify(s, opts)).collect(),
    }
}

fn check(suite: Suite, name: impl Into<String>, outcome: Result<String, String>) -> Check {
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check { suite, name: name.into(), passed, detail }
}

fn facts_suite() -> Vec<Check> {
    let mut out = Vec::new();
    for f in &PAIR_FACTS {
        let name = format!("{} ({},{})", f.group, f.orders.0, f.orders.1);
        let outcome = match check_fact(f) {
            Ok(o) if o.passed() => Ok(format!("{} class(es), listed pairs match", o.classes)),
            Ok(o) => Err(format!(
                "{} class(es), expected {}; invalid listed pairs {:?}; equivalent listed pairs {:?}",
                o.classes, o.expected, o.invalid, o.duplicates
            )),
            Err(e) => Err(e.to_string()),
        };
        out.push(check(Suite::Facts, name, outcome));
    }
    let none = match classify::pair_classes(GroupLabel::S4, 3, 3) {
        Ok(c) if c.is_empty() => Ok("no generating pairs".to_string()),
        Ok(c) => Err(format!("{} class(es), first {:?}", c.len(), c[0].representative)),
        Err(e) => Err(e.to_string()),
    };
    out.push(check(Suite::Facts, "S4 (3,3)", none));
    for (g, gens, want) in COSET_INDICES {
        let outcome = match coset_index(g, gens) {
            Ok(i) if i == want => Ok(format!("index {i}")),
            Ok(i) => Err(format!("index {i}, expected {want}")),
            Err(e) => Err(e.to_string()),
        };
        out.push(check(Suite::Facts, format!("[{g}:<{}>]", gens.join(",")), outcome));
    }
    out
}

type Expected = (u64, Option<Vec<SurfaceType>>);

fn expected(kind: Kind, x: u64) -> Expected {
    match kind {
        Kind::CeO | Kind::CegO => (tables::ce_o(x), None),
        Kind::Ce | Kind::Ceg => (tables::ce(x), None),
        Kind::EO => (tables::e_o(x), None),
        Kind::E => (tables::e(x), None),
        Kind::CeaO => {
            let (o, s) = tables::cea_o(x);
            (o, Some(s))
        }
        Kind::Cea => {
            let (o, s) = tables::cea(x);
            (o, Some(s))
        }
        Kind::CeaFaithful => (tables::cea_faithful(x), None),
        Kind::EaO | Kind::EgO => {
            let (o, s) = tables::ea_o(x);
            (o, Some(s))
        }
        Kind::Ea | Kind::Eg => {
            let (o, s) = tables::ea(x);
            (o, Some(s))
        }
    }
}

fn compare(kind: Kind, x: u64, r: &MaxActionResult) -> Result<(), String> {
    let (order, surfaces) = expected(kind, x);
    if r.order != order {
        return Err(format!("{kind} at {x}: engine {} expected {order}", r.order));
    }
    if let Some(want) = surfaces {
        if r.surfaces != want {
            let show = |v: &[SurfaceType]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ");
            return Err(format!("{kind} at {x}: engine [{}] expected [{}]", show(&r.surfaces), show(&want)));
        }
    }
    if let Some(w) = r.witnesses.iter().find(|w| !w.is_sound()) {
        return Err(format!("{kind} at {x}: unsound witness {w}"));
    }
    Ok(())
}

fn tables_suite(range: RangeInclusive<u64>) -> Vec<Check> {
    let lo = (*range.start()).max(2);
    let hi = *range.end();
    let kinds = [
        Kind::CeO,
        Kind::Ce,
        Kind::EO,
        Kind::E,
        Kind::CeaO,
        Kind::Cea,
        Kind::CeaFaithful,
        Kind::EaO,
        Kind::Ea,
    ];
    kinds
        .into_iter()
        .map(|kind| {
            let outcome = (lo..=hi)
                .try_for_each(|x| match max_action(kind, x) {
                    Ok(r) => compare(kind, x, &r),
                    Err(e) => Err(format!("{kind} at {x}: {e}")),
                })
                .map(|()| format!("{} inputs in [{lo},{hi}], 0 mismatches", (lo..=hi).count()));
            check(Suite::Tables, kind.to_string(), outcome)
        })
        .collect()
}

fn all_twistings(r: &RibbonGraph) -> impl Iterator<Item = RibbonGraph> + '_ {
    let e = r.edge_count();
    (0..1u64 << e).map(move |m| {
        r.with_twists((0..e).map(|i| m >> i & 1 == 1).collect())
            .expect("same edge count")
    })
}

fn oracle_agreement(r: &RibbonGraph) -> Result<usize, String> {
    let mut n = 0;
    for t in all_twistings(r) {
        let traced = t.surface_type().map_err(|e| e.to_string())?;
        let oracle = oracle_surface_type(&t).map_err(|e| e.to_string())?;
        if traced != oracle {
            return Err(format!("twists {:?}: tracing {traced}, oracle {oracle}", t.twists()));
        }
        n += 1;
    }
    Ok(n)
}

fn ribbon_suite() -> Vec<Check> {
    let mut out = Vec::new();
    for s in Solid::ALL {
        let outcome = skeleton(s).map_err(|e| e.to_string()).and_then(|g| {
            let r = ribbon_from_embedding(&g).map_err(|e| e.to_string())?;
            let got = r.surface_type().map_err(|e| e.to_string())?;
            let want = SurfaceType::orientable(0, s.face_count());
            if got != want || r.algebraic_genus() != g.genus() {
                return Err(format!("got {got}, expected {want}"));
            }
            Ok(format!("{got}"))
        });
        out.push(check(Suite::Ribbon, format!("{s} untwisted"), outcome));
    }
    let all_twisted = skeleton(Solid::Icosahedron).map_err(|e| e.to_string()).and_then(|mut g| {
        g.set_twists(&(0..g.edge_count()).collect::<Vec<_>>());
        let got = ribbon_surface_type(&g).map_err(|e| e.to_string())?;
        let want = SurfaceType { orientable: false, genus: 14, boundary: 6 };
        if got == want { Ok(got.to_string()) } else { Err(format!("got {got}, expected {want}")) }
    });
    out.push(check(Suite::Ribbon, "I all twisted", all_twisted));
    for f in FIXTURES {
        let outcome = f.graph().map_err(|e| e.to_string()).and_then(|g| {
            let got = ribbon_surface_type(&g).map_err(|e| e.to_string())?;
            let want = f.target_surface();
            if got == want { Ok(got.to_string()) } else { Err(format!("got {got}, expected {want}")) }
        });
        out.push(check(Suite::Ribbon, format!("fixture {}", f.name), outcome));
    }
    let mut small: Vec<(String, Result<RibbonGraph, String>)> = [Solid::Tetrahedron, Solid::Cube, Solid::Octahedron]
        .into_iter()
        .map(|s| {
            let r = skeleton(s).and_then(|g| ribbon_from_embedding(&g)).map_err(|e| e.to_string());
            (format!("{s}"), r)
        })
        .collect();
    for g in 2..=5 {
        let r = build_dipole(g, 1, crate::constructions::DEFAULT_TOL)
            .and_then(|d| ribbon_from_embedding(&d.graph))
            .map_err(|e| e.to_string());
        small.push((format!("dipole {g}"), r));
    }
    for (name, r) in small {
        let outcome = r.and_then(|r| oracle_agreement(&r).map(|n| format!("{n} twistings agree")));
        out.push(check(Suite::Ribbon, format!("oracle {name}"), outcome));
    }
    out
}

fn constructions_suite(tol: f64) -> Vec<Check> {
    let mut out = Vec::new();
    let want = [(12, 24), (24, 48), (24, 48), (60, 120), (60, 120)];
    for (s, (r, f)) in Solid::ALL.into_iter().zip(want) {
        let outcome = build_platonic(s, tol).map_err(|e| e.to_string()).and_then(|p| {
            let got = (p.rotations.order(), p.full.order());
            if got != (r, f) {
                return Err(format!("orders {got:?}, expected ({r}, {f})"));
            }
            check_invariance(&p.full, &p.graph, tol).map_err(|e| format!("{e:?}"))?;
            Ok(format!("orders {r}/{f}, invariant"))
        });
        out.push(check(Suite::Constructions, format!("platonic {s}"), outcome));
    }
    for g in 2..=24u64 {
        let mut expected = vec![(DipoleAction::Rotation, g + 1), (DipoleAction::Dihedral, 2 * (g + 1))];
        if g % 2 == 0 {
            expected.push((DipoleAction::RotaryReflection, 2 * g + 2));
        }
        expected.push((DipoleAction::Full, 4 * g + 4));
        let mut variants = vec![(1u8, expected)];
        if g % 2 == 1 {
            variants.push((2, vec![(DipoleAction::RotaryReflectionOdd, 2 * g)]));
        }
        for (v, exp) in variants {
            let outcome = build_dipole(g, v, tol).map_err(|e| e.to_string()).and_then(|d| {
                for (a, n) in &exp {
                    let grp = d.group(*a).ok_or(format!("{a:?} missing"))?;
                    if grp.order() as u64 != *n {
                        return Err(format!("{a:?} order {}, expected {n}", grp.order()));
                    }
                    check_invariance(grp, &d.graph, tol).map_err(|e| format!("{a:?}: {e:?}"))?;
                }
                Ok(format!("{} action(s) invariant with expected orders", exp.len()))
            });
            out.push(check(Suite::Constructions, format!("dipole {g}:{v}"), outcome));
        }
    }
    let g21 = build_genus21(tol).map_err(|e| e.to_string()).and_then(|g| {
        let counts = (g.graph.vertex_count(), g.graph.edge_count(), g.rotations.order());
        if counts != (40, 60, 60) {
            return Err(format!("V, E, |G| = {counts:?}"));
        }
        check_invariance(&g.rotations, &g.graph, tol).map_err(|e| format!("{e:?}"))?;
        Ok("V=40 E=60 genus 21, invariant under order 60".into())
    });
    out.push(check(Suite::Constructions, "genus21", g21));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in [Suite::Facts, Suite::Tables, Suite::Ribbon, Suite::Constructions, Suite::All] {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn facts_and_small_tables_pass() {
        let checks = run_verify(Suite::Facts, &VerifyOptions::default());
        assert!(all_passed(&checks), "{checks:#?}");
        assert_eq!(checks.len(), 14);
        let opts = VerifyOptions { range: 2..=40, ..Default::default() };
        let checks = run_verify(Suite::Tables, &opts);
        assert!(all_passed(&checks), "{checks:#?}");
    }

    #[test]
    fn mismatches_are_reported() {
        let mut r = max_action(Kind::EO, 19).unwrap();
        r.order = 61;
        let err = compare(Kind::EO, 19, &r).unwrap_err();
        assert!(err.contains("engine 61 expected 60"), "{err}");
    }
}
