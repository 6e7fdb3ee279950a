//! Dipole graphs: two vertices on the `z` axis joined by meridians.
//!
//! Symmetries used below, with `n` meridians:
//! - `τ`: rotation by `2π/n` about `z`,
//! - `ρ`: half-turn about `x`, which swaps the poles and the meridians at `±θ`,
//! - `r`: reflection in the plane `z = 0`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::graph::{arr, Edge, EmbeddedGraph};
use super::matrix_group::{generate_group, reflection, rotation, MatrixGroup, Vec3};
use super::ConstructionError;

/// Interior samples per meridian.
const SAMPLES: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DipoleAction {
    /// `<τ>`, cyclic of order `g+1`.
    Rotation,
    /// `<τ, ρ>`, dihedral of order `2(g+1)`.
    Dihedral,
    /// `<r∘τ>`, cyclic of order `2g+2` for even `g`.
    RotaryReflection,
    /// `<τ, ρ, r>`, order `4g+4`.
    Full,
    /// `<r∘τ_g>` on the second dipole, cyclic of order `2g` for odd `g`.
    RotaryReflectionOdd,
}

pub struct Dipole {
    pub graph: EmbeddedGraph,
    pub actions: Vec<(DipoleAction, MatrixGroup)>,
}

fn meridian(theta: f64) -> Vec<[f64; 3]> {
    (1..=SAMPLES)
        .map(|j| {
            let phi = PI * j as f64 / (SAMPLES + 1) as f64;
            [phi.sin() * theta.cos(), phi.sin() * theta.sin(), phi.cos()]
        })
        .collect()
}

/// `variant = 1`: `g+1` meridians. `variant = 2` (odd `g`): `g` meridians
/// plus the axis segment between the poles.
pub fn build_dipole(g: u64, variant: u8, tol: f64) -> Result<Dipole, ConstructionError> {
    if g < 2 {
        return Err(ConstructionError::Parity(format!("dipole needs g > 1, got {g}")));
    }
    let meridians = match variant {
        1 => g + 1,
        2 if g % 2 == 1 => g,
        2 => return Err(ConstructionError::Parity(format!("second dipole needs odd g, got {g}"))),
        _ => return Err(ConstructionError::Parity(format!("unknown dipole variant {variant}"))),
    };
    let vertices = vec![[0.0, 0.0, 1.0], [0.0, 0.0, -1.0]];
    let mut edges: Vec<Edge> = (0..meridians)
        .map(|k| Edge {
            ends: [0, 1],
            polyline: meridian(2.0 * PI * k as f64 / meridians as f64),
            twist: false,
        })
        .collect();
    if variant == 2 {
        let axis = (1..=SAMPLES)
            .map(|j| arr(Vec3::new(0.0, 0.0, 1.0 - 2.0 * j as f64 / (SAMPLES + 1) as f64)))
            .collect();
        edges.push(Edge {
            ends: [0, 1],
            polyline: axis,
            twist: false,
        });
    }
    let graph = EmbeddedGraph::new(vertices, edges)?;

    let tau = rotation(Vec3::z(), 2.0 * PI / meridians as f64);
    let rho = rotation(Vec3::x(), PI);
    let r = reflection(Vec3::z());
    let bound = 4 * meridians as usize + 4;
    let mut actions = Vec::new();
    if variant == 1 {
        actions.push((DipoleAction::Rotation, generate_group(&[tau], tol, bound)?));
        actions.push((DipoleAction::Dihedral, generate_group(&[tau, rho], tol, bound)?));
        if g.is_multiple_of(2) {
            actions.push((DipoleAction::RotaryReflection, generate_group(&[r * tau], tol, bound)?));
        }
        actions.push((DipoleAction::Full, generate_group(&[tau, rho, r], tol, bound)?));
    } else {
        actions.push((DipoleAction::RotaryReflectionOdd, generate_group(&[r * tau], tol, bound)?));
    }
    Ok(Dipole { graph, actions })
}

impl Dipole {
    pub fn group(&self, action: DipoleAction) -> Option<&MatrixGroup> {
        self.actions.iter().find(|(a, _)| *a == action).map(|(_, g)| g)
    }
}

#[cfg(test)]
mod tests {
    use super::super::graph::check_invariance;
    use super::super::matrix_group::DEFAULT_TOL;
    use super::*;

    #[test]
    fn orders_match_the_actions() {
        let d = build_dipole(2, 1, DEFAULT_TOL).unwrap();
        assert_eq!(d.graph.genus(), 2);
        assert_eq!(d.group(DipoleAction::Rotation).unwrap().order(), 3);
        assert_eq!(d.group(DipoleAction::Dihedral).unwrap().order(), 6);
        assert_eq!(d.group(DipoleAction::RotaryReflection).unwrap().order(), 6);
        assert_eq!(d.group(DipoleAction::Full).unwrap().order(), 12);
        let d = build_dipole(4, 1, DEFAULT_TOL).unwrap();
        assert_eq!(d.group(DipoleAction::RotaryReflection).unwrap().order(), 10);
        assert!(build_dipole(3, 1, DEFAULT_TOL).unwrap().group(DipoleAction::RotaryReflection).is_none());
        let d = build_dipole(3, 2, DEFAULT_TOL).unwrap();
        assert_eq!(d.graph.genus(), 3);
        assert_eq!(d.group(DipoleAction::RotaryReflectionOdd).unwrap().order(), 6);
    }

    #[test]
    fn actions_preserve_the_graph() {
        for (g, v) in [(2, 1), (5, 1), (6, 1), (3, 2), (7, 2)] {
            let d = build_dipole(g, v, DEFAULT_TOL).unwrap();
            for (a, grp) in &d.actions {
                assert_eq!(check_invariance(grp, &d.graph, DEFAULT_TOL), Ok(()), "g={g} {a:?}");
            }
        }
    }

    #[test]
    fn parity_errors() {
        assert!(build_dipole(4, 2, DEFAULT_TOL).is_err());
        assert!(build_dipole(1, 1, DEFAULT_TOL).is_err());
    }
}
