//! Closed forms of the answer tables, written out independently of the
//! engines so the two can be compared.

use crate::orbifold::SurfaceType;

pub fn ce_o(g: u64) -> u64 {
    g + 1
}

pub fn ce(g: u64) -> u64 {
    if g.is_multiple_of(2) { 2 * g + 2 } else { 2 * g }
}

pub fn e_o(g: u64) -> u64 {
    match g {
        3 => 12,
        5 | 7 => 24,
        11 | 19 | 21 => 60,
        _ => 2 * g + 2,
    }
}

pub fn e(g: u64) -> u64 {
    if g == 21 { 88 } else { 2 * e_o(g) }
}

fn s(g: u64, b: u64) -> SurfaceType {
    SurfaceType::orientable(g, b)
}

fn n(g: u64, b: u64) -> SurfaceType {
    SurfaceType { orientable: false, genus: g, boundary: b }
}

/// `Σ_{0,α+1}` together with the one-or-two-boundary surface of the same
/// algebraic genus.
fn planar_and_few_boundaries(a: u64) -> Vec<SurfaceType> {
    let few = if a.is_multiple_of(2) { s(a / 2, 1) } else { s((a - 1) / 2, 2) };
    sorted(vec![s(0, a + 1), few])
}

fn sorted(mut v: Vec<SurfaceType>) -> Vec<SurfaceType> {
    v.sort();
    v.dedup();
    v
}

pub fn cea_o(a: u64) -> (u64, Vec<SurfaceType>) {
    (a + 1, planar_and_few_boundaries(a))
}

pub fn cea(a: u64) -> (u64, Vec<SurfaceType>) {
    (if a.is_multiple_of(2) { 2 * a + 2 } else { 2 * a }, vec![s(0, a + 1)])
}

/// Faithful actions only: the odd case drops to `α + 1`.
pub fn cea_faithful(a: u64) -> u64 {
    if a.is_multiple_of(2) { 2 * a + 2 } else { a + 1 }
}

pub fn ea_o(a: u64) -> (u64, Vec<SurfaceType>) {
    let (order, surfaces) = match a {
        3 => (12, vec![s(0, 4), n(1, 3)]),
        5 => (24, vec![s(0, 6), s(1, 4)]),
        7 => (24, vec![s(0, 8), n(4, 4)]),
        11 => (60, vec![s(0, 12), n(6, 6)]),
        19 => (60, vec![s(0, 20), s(4, 12), n(10, 10), n(14, 6)]),
        21 => (60, vec![s(5, 12)]),
        29 => (60, vec![s(0, 30), s(5, 20), s(9, 12), s(14, 2)]),
        _ => (2 * a + 2, planar_and_few_boundaries(a)),
    };
    (order, sorted(surfaces))
}

pub fn ea(a: u64) -> (u64, Vec<SurfaceType>) {
    match a {
        3 => (24, vec![s(0, 4)]),
        5 => (48, vec![s(0, 6)]),
        7 => (48, vec![s(0, 8)]),
        11 => (120, vec![s(0, 12)]),
        19 => (120, vec![s(0, 20)]),
        _ => (4 * a + 4, vec![s(0, a + 1)]),
    }
}
