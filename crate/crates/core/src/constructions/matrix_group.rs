use nalgebra::{Matrix3, Rotation3, Unit, Vector3};

use super::ConstructionError;

pub type Mat3 = Matrix3<f64>;
pub type Vec3 = Vector3<f64>;

/// Default geometric tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Rotation by `angle` about `axis` (right-hand rule).
pub fn rotation(axis: Vec3, angle: f64) -> Mat3 {
    Rotation3::from_axis_angle(&Unit::new_normalize(axis), angle).into_inner()
}

/// Reflection in the plane through the origin with the given normal.
pub fn reflection(normal: Vec3) -> Mat3 {
    let n = normal.normalize();
    Mat3::identity() - 2.0 * n * n.transpose()
}

fn max_abs(m: &Mat3) -> f64 {
    m.iter().fold(0.0_f64, |a, x| a.max(x.abs()))
}

fn close(a: &Mat3, b: &Mat3, tol: f64) -> bool {
    max_abs(&(a - b)) < tol
}

/// A finite subgroup of `O(3)` stored as its full element list.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    elements: Vec<Mat3>,
    generators: Vec<Mat3>,
    tolerance: f64,
}

/// Closes `generators` under products, deduplicating within `tol`. Elements
/// come back sorted by their entries rounded to 6 decimals, identity first.
pub fn generate_group(generators: &[Mat3], tol: f64, max_order: usize) -> Result<MatrixGroup, ConstructionError> {
    for (i, g) in generators.iter().enumerate() {
        let err = max_abs(&(g.transpose() * g - Mat3::identity()));
        if err >= tol {
            return Err(ConstructionError::NonOrthogonal { index: i, error: err });
        }
    }
    let mut elements = vec![Mat3::identity()];
    let mut frontier = 0;
    while frontier < elements.len() {
        let e = elements[frontier];
        frontier += 1;
        for g in generators {
            let p = g * e;
            if !elements.iter().any(|x| close(x, &p, tol)) {
                elements.push(p);
                if elements.len() > max_order {
                    return Err(ConstructionError::GroupNotFinite { bound: max_order });
                }
            }
        }
    }
    let key = |m: &Mat3| -> Vec<i64> { m.iter().map(|x| (x * 1e6).round() as i64).collect() };
    elements[1..].sort_by_key(key);
    Ok(MatrixGroup {
        elements,
        generators: generators.to_vec(),
        tolerance: tol,
    })
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat3] {
        &self.elements
    }

    pub fn generators(&self) -> &[Mat3] {
        &self.generators
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn orientation_reversing_present(&self) -> bool {
        self.elements.iter().any(|m| m.determinant() < 0.0)
    }

    pub fn contains(&self, m: &Mat3) -> bool {
        self.elements.iter().any(|x| close(x, m, self.tolerance))
    }

    /// The determinant-one elements.
    pub fn rotation_subgroup(&self) -> MatrixGroup {
        MatrixGroup {
            elements: self.elements.iter().copied().filter(|m| m.determinant() > 0.0).collect(),
            generators: Vec::new(),
            tolerance: self.tolerance,
        }
    }

    /// Closure and orthogonality re-checked from the element list.
    pub fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|a| max_abs(&(a.transpose() * a - Mat3::identity())) < self.tolerance)
            && self
                .elements
                .iter()
                .all(|a| self.elements.iter().all(|b| self.contains(&(a * b))))
    }

    /// Whether the element is cyclic of the full order.
    pub fn is_cyclic_generated_by(&self, g: &Mat3) -> bool {
        let mut p = *g;
        let mut k = 1;
        while !close(&p, &Mat3::identity(), self.tolerance) {
            p = g * p;
            k += 1;
            if k > self.order() {
                return false;
            }
        }
        k == self.order()
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    #[test]
    fn cyclic_rotation() {
        let g = generate_group(&[rotation(Vec3::z(), 2.0 * PI / 5.0)], DEFAULT_TOL, 100).unwrap();
        assert_eq!(g.order(), 5);
        assert!(!g.orientation_reversing_present());
        assert!(g.is_closed());
    }

    #[test]
    fn reflection_and_rotation() {
        let g = generate_group(&[rotation(Vec3::z(), PI / 3.0), reflection(Vec3::x())], DEFAULT_TOL, 100).unwrap();
        assert_eq!(g.order(), 12);
        assert!(g.orientation_reversing_present());
        assert_eq!(g.rotation_subgroup().order(), 6);
    }

    #[test]
    fn irrational_rotation_blows_up() {
        let err = generate_group(&[rotation(Vec3::z(), 1.0)], DEFAULT_TOL, 50).unwrap_err();
        assert!(err.to_string().contains("group not finite within bound"));
    }

    #[test]
    fn non_orthogonal_rejected() {
        assert!(generate_group(&[Mat3::identity() * 2.0], DEFAULT_TOL, 10).is_err());
    }
}
