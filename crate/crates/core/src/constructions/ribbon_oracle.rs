//! Brute-force cross-check for ribbon tracing: glue the vertex polygons and
//! band quadrilaterals into a cell complex and read off the boundary and
//! orientability directly from the cells.

use super::ribbon::RibbonGraph;
use super::ConstructionError;
use crate::orbifold::SurfaceType;

/// A 2-cell as a cyclic list of (point, side cell) with `side[i]` running
/// from `points[i]` to `points[i + 1]`.
struct Polygon {
    points: Vec<usize>,
    sides: Vec<usize>,
}

/// Data read off the assembled complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexSummary {
    pub euler_characteristic: i64,
    pub boundary: usize,
    pub orientable: bool,
}

fn build(r: &RibbonGraph) -> (usize, usize, Vec<Polygon>) {
    // corner point of half-edge h on side s (0 = counterclockwise side)
    let pt = |h: usize, s: usize| 2 * h + s;
    let n_points = 4 * r.edge_count();
    // side cells: attach side of each half-edge, then disk arcs, then band long sides
    let attach = |h: usize| h;
    let mut next_cell = 2 * r.edge_count();
    let mut polys = Vec::new();
    for rot in r.rotation() {
        let mut points = Vec::new();
        let mut sides = Vec::new();
        for (i, &h) in rot.iter().enumerate() {
            let succ = rot[(i + 1) % rot.len()];
            points.push(pt(h, 1));
            sides.push(attach(h));
            points.push(pt(h, 0));
            sides.push(next_cell);
            next_cell += 1;
            debug_assert!(succ < 2 * r.edge_count());
        }
        polys.push(Polygon { points, sides });
    }
    for (e, &tw) in r.twists().iter().enumerate() {
        let (a, b) = (2 * e, 2 * e + 1);
        let partner = |s: usize| if tw { s } else { 1 - s };
        let long0 = next_cell;
        let long1 = next_cell + 1;
        next_cell += 2;
        polys.push(Polygon {
            points: vec![pt(a, 0), pt(a, 1), pt(b, partner(1)), pt(b, partner(0))],
            sides: vec![attach(a), long0, attach(b), long1],
        });
    }
    (n_points, next_cell, polys)
}

/// Assembles the complex for `r` and measures it.
pub fn polygon_oracle(r: &RibbonGraph) -> ComplexSummary {
    let (n_points, n_cells, polys) = build(r);
    // (polygon, side index) incidences per side cell
    let mut uses: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_cells];
    for (p, poly) in polys.iter().enumerate() {
        for (i, &c) in poly.sides.iter().enumerate() {
            uses[c].push((p, i));
        }
    }
    let euler_characteristic = n_points as i64 - n_cells as i64 + polys.len() as i64;

    let ends = |p: usize, i: usize| {
        let poly = &polys[p];
        (poly.points[i], poly.points[(i + 1) % poly.points.len()])
    };

    // boundary: side cells used once, joined at shared points
    let mut parent: Vec<usize> = (0..n_points).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let mut on_boundary = vec![false; n_points];
    for u in &uses {
        if let [(p, i)] = u[..] {
            let (a, b) = ends(p, i);
            on_boundary[a] = true;
            on_boundary[b] = true;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let mut roots: Vec<usize> = (0..n_points)
        .filter(|&x| on_boundary[x])
        .map(|x| find(&mut parent, x))
        .collect();
    roots.sort_unstable();
    roots.dedup();

    // orientability: flip polygons so every shared side is traversed both ways
    let mut flip: Vec<Option<bool>> = vec![None; polys.len()];
    let mut orientable = true;
    'outer: for root in 0..polys.len() {
        if flip[root].is_some() {
            continue;
        }
        flip[root] = Some(false);
        let mut stack = vec![root];
        while let Some(p) = stack.pop() {
            let fp = flip[p].expect("visited");
            for (i, &c) in polys[p].sides.iter().enumerate() {
                for &(q, j) in &uses[c] {
                    if (q, j) == (p, i) {
                        continue;
                    }
                    let same_direction = ends(p, i) == ends(q, j);
                    // opposite traversal is compatible when neither is flipped
                    let want = fp ^ same_direction;
                    match flip[q] {
                        None => {
                            flip[q] = Some(want);
                            stack.push(q);
                        }
                        Some(fq) if fq != want => {
                            orientable = false;
                            break 'outer;
                        }
                        Some(_) => {}
                    }
                }
            }
        }
    }
    ComplexSummary {
        euler_characteristic,
        boundary: roots.len(),
        orientable,
    }
}

/// Surface type via the assembled complex: `g = (2 - χ - b)/2` or `2 - χ - b`.
pub fn oracle_surface_type(r: &RibbonGraph) -> Result<SurfaceType, ConstructionError> {
    let s = polygon_oracle(r);
    let rest = 2 - s.euler_characteristic - s.boundary as i64;
    if s.orientable {
        if rest < 0 || rest % 2 != 0 {
            return Err(ConstructionError::InvalidRibbon(format!("orientable complex with 2 - χ - b = {rest}")));
        }
        Ok(SurfaceType::orientable((rest / 2) as u64, s.boundary as u64))
    } else {
        Ok(SurfaceType::non_orientable(rest.max(0) as u64, s.boundary as u64)?)
    }
}
