use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::OrbifoldError;
use crate::permgroup::GroupLabel;

type Q = Ratio<i128>;

/// Shape of the quotient orbifold `X = Σ/G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuotientCase {
    /// Closed underlying surface of genus `g'` with arbitrary cone points.
    Closed,
    /// Sphere with cone points `{r, r, s, s}`.
    ClosedSphere4Cones,
    /// Disk with two interior cone points `r, s`; the boundary is real.
    DiskTwoCones,
    /// Disk whose boundary is one real arc and one reflector arc of index 2,
    /// plus one interior cone point of index `s`.
    DiskReflectorArcPlusCone,
    /// Annulus with real boundary and interior cone points.
    PlanarAnnulus,
}

impl fmt::Display for QuotientCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QuotientCase::Closed => "closed",
            QuotientCase::ClosedSphere4Cones => "sphere-4-cones",
            QuotientCase::DiskTwoCones => "disk-2-cones",
            QuotientCase::DiskReflectorArcPlusCone => "disk-reflector-arc",
            QuotientCase::PlanarAnnulus => "annulus",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientSignature {
    pub group: GroupLabel,
    pub underlying_genus: u64,
    pub cone_indices: Vec<u64>,
    pub case: QuotientCase,
    /// `(r, s)` for the sphere and disk shapes.
    pub arc_indices: Option<(u64, u64)>,
}

impl QuotientSignature {
    pub fn closed(group: GroupLabel, underlying_genus: u64, cone_indices: Vec<u64>) -> Result<Self, OrbifoldError> {
        let sig = QuotientSignature {
            group,
            underlying_genus,
            cone_indices,
            case: QuotientCase::Closed,
            arc_indices: None,
        };
        sig.validate()?;
        Ok(sig)
    }

    pub fn sphere_four_cones(group: GroupLabel, r: u64, s: u64) -> Result<Self, OrbifoldError> {
        let sig = QuotientSignature {
            group,
            underlying_genus: 0,
            cone_indices: vec![r, r, s, s],
            case: QuotientCase::ClosedSphere4Cones,
            arc_indices: Some((r, s)),
        };
        sig.validate()?;
        Ok(sig)
    }

    pub fn disk_two_cones(group: GroupLabel, r: u64, s: u64) -> Result<Self, OrbifoldError> {
        let sig = QuotientSignature {
            group,
            underlying_genus: 0,
            cone_indices: vec![r, s],
            case: QuotientCase::DiskTwoCones,
            arc_indices: Some((r, s)),
        };
        sig.validate()?;
        Ok(sig)
    }

    /// Reflector arc of index 2 plus one interior cone of index `s`.
    pub fn disk_reflector_arc(group: GroupLabel, s: u64) -> Result<Self, OrbifoldError> {
        let sig = QuotientSignature {
            group,
            underlying_genus: 0,
            cone_indices: vec![s],
            case: QuotientCase::DiskReflectorArcPlusCone,
            arc_indices: Some((2, s)),
        };
        sig.validate()?;
        Ok(sig)
    }

    /// Annulus with the given interior cones.
    pub fn annulus(group: GroupLabel, cone_indices: Vec<u64>) -> Result<Self, OrbifoldError> {
        let sig = QuotientSignature {
            group,
            underlying_genus: 0,
            cone_indices,
            case: QuotientCase::PlanarAnnulus,
            arc_indices: None,
        };
        sig.validate()?;
        Ok(sig)
    }

    pub fn validate(&self) -> Result<(), OrbifoldError> {
        let bad = |m: String| Err(OrbifoldError::InvalidSignature(m));
        if let Some(&q) = self.cone_indices.iter().find(|&&q| q < 2) {
            return bad(format!("cone index {q} < 2"));
        }
        let arcs = self.arc_indices;
        match self.case {
            QuotientCase::Closed => Ok(()),
            QuotientCase::ClosedSphere4Cones => match arcs {
                Some((r, s)) if self.underlying_genus == 0 && sorted(&self.cone_indices) == sorted(&[r, r, s, s]) => Ok(()),
                _ => bad("sphere shape needs cone multiset {r,r,s,s}".into()),
            },
            QuotientCase::DiskTwoCones => match arcs {
                Some((r, s)) if self.underlying_genus == 0 && sorted(&self.cone_indices) == sorted(&[r, s]) => Ok(()),
                _ => bad("disk shape needs cone multiset {r,s}".into()),
            },
            QuotientCase::DiskReflectorArcPlusCone => match arcs {
                Some((2, s)) if self.underlying_genus == 0 && self.cone_indices == [s] => Ok(()),
                Some((r, _)) if r != 2 => bad(format!("reflector arc must have index 2, got {r}")),
                _ => bad("reflector shape needs one interior cone".into()),
            },
            QuotientCase::PlanarAnnulus if self.underlying_genus == 0 && arcs.is_none() => Ok(()),
            QuotientCase::PlanarAnnulus => bad("annulus shape takes only interior cones".into()),
        }
    }
}

fn sorted(v: &[u64]) -> Vec<u64> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

fn cone_defect(q: u64) -> Q {
    Q::from_integer(1) - Q::new(1, q as i128)
}

/// Orbifold Euler characteristic of the quotient.
pub fn orbifold_euler_characteristic(sig: &QuotientSignature) -> Q {
    let cones: Q = sig.cone_indices.iter().map(|&q| cone_defect(q)).sum();
    match sig.case {
        QuotientCase::Closed | QuotientCase::ClosedSphere4Cones => {
            Q::from_integer(2 - 2 * sig.underlying_genus as i128) - cones
        }
        QuotientCase::DiskTwoCones => Q::from_integer(1) - cones,
        // a reflector arc with free ends costs half of a cone of index 2
        QuotientCase::DiskReflectorArcPlusCone => Q::from_integer(1) - Q::new(1, 2) - cones,
        QuotientCase::PlanarAnnulus => -cones,
    }
}

/// A regular branched cover `Σ -> Σ/G` with exact covering data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhSolution {
    pub group_order: u64,
    pub signature: QuotientSignature,
    /// Geometric genus for closed quotients, algebraic genus for the bordered shapes.
    pub covering_genus: u64,
    pub covering_euler_characteristic: i64,
}

impl RhSolution {
    pub fn solve(group_order: u64, signature: QuotientSignature) -> Result<Self, OrbifoldError> {
        signature.validate()?;
        if group_order == 0 {
            return Err(OrbifoldError::Inadmissible("group order 0".into()));
        }
        let chi = orbifold_euler_characteristic(&signature) * Q::from_integer(group_order as i128);
        if !chi.is_integer() {
            return Err(OrbifoldError::Inadmissible(format!(
                "covering Euler characteristic {chi} is not an integer"
            )));
        }
        let chi = chi.to_integer();
        let covering_genus = match signature.case {
            QuotientCase::Closed | QuotientCase::ClosedSphere4Cones => {
                if chi % 2 != 0 || chi > 2 {
                    return Err(OrbifoldError::Inadmissible(format!(
                        "closed cover would have Euler characteristic {chi}"
                    )));
                }
                (2 - chi) / 2
            }
            QuotientCase::DiskTwoCones | QuotientCase::DiskReflectorArcPlusCone | QuotientCase::PlanarAnnulus => {
                if chi > 1 {
                    return Err(OrbifoldError::Inadmissible(format!(
                        "bordered cover would have Euler characteristic {chi}"
                    )));
                }
                1 - chi
            }
        };
        Ok(RhSolution {
            group_order,
            signature,
            covering_genus: covering_genus as u64,
            covering_euler_characteristic: chi as i64,
        })
    }

    /// Checks `2 - 2g = |G| (2 - 2g' - Σ(1 - 1/q))` (or its bordered analogue) exactly.
    pub fn identity_holds(&self) -> bool {
        let lhs = Q::from_integer(self.covering_euler_characteristic as i128);
        lhs == orbifold_euler_characteristic(&self.signature) * Q::from_integer(self.group_order as i128)
    }
}

/// Genus `g` of a closed surface covering a closed orbifold of genus `g'`
/// with the given cone points, via `2 - 2g = |G|(2 - 2g' - Σ(1 - 1/q_i))`.
pub fn rh_cover_genus(group_order: u64, base_genus: u64, cone_indices: &[u64]) -> Result<u64, OrbifoldError> {
    let label = GroupLabel::Cyclic(group_order);
    let sig = QuotientSignature::closed(label, base_genus, cone_indices.to_vec())?;
    Ok(RhSolution::solve(group_order, sig)?.covering_genus)
}

/// `g = 1 + |G|(1 - 1/r - 1/s)` for a sphere quotient with cones `{r, r, s, s}`.
pub fn sphere_4cone_genus(group_order: u64, r: u64, s: u64) -> Result<u64, OrbifoldError> {
    if !(1 < r && r <= s) {
        return Err(OrbifoldError::InvalidSignature(format!("need 1 < r <= s, got ({r}, {s})")));
    }
    rh_cover_genus(group_order, 0, &[r, r, s, s])
}

/// `α = 1 + |G|(1 - 1/r - 1/s)` for a disk quotient with cones `r, s`
/// (a reflector arc counts as `r = 2`).
pub fn bordered_algebraic_genus(group_order: u64, r: u64, s: u64) -> Result<u64, OrbifoldError> {
    if !(1 < r && r <= s) {
        return Err(OrbifoldError::InvalidSignature(format!("need 1 < r <= s, got ({r}, {s})")));
    }
    let sig = QuotientSignature::disk_two_cones(GroupLabel::Cyclic(group_order), r, s)?;
    Ok(RhSolution::solve(group_order, sig)?.covering_genus)
}

/// The alternatives for an orientation-preserving cyclic action `Z_n` on
/// `(R³, Σ_g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CyclicQuotientCase {
    /// `n = g + 1`, quotient a sphere with 4 cones of index `n`.
    Sphere4Cones { n: u64 },
    /// `n = g`, quotient a torus with 2 cones of index `n`.
    Torus2Cones { n: u64 },
    /// `n = g - 1`, quotient a closed surface of genus 2.
    Genus2 { n: u64 },
    /// Everything else: `n <= floor(g/2) + 1`.
    Bounded { max_n: u64 },
}

impl CyclicQuotientCase {
    /// Largest order this branch allows.
    pub fn max_order(&self) -> u64 {
        match *self {
            CyclicQuotientCase::Sphere4Cones { n }
            | CyclicQuotientCase::Torus2Cones { n }
            | CyclicQuotientCase::Genus2 { n } => n,
            CyclicQuotientCase::Bounded { max_n } => max_n,
        }
    }
}

impl fmt::Display for CyclicQuotientCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicQuotientCase::Sphere4Cones { n } => write!(f, "n={n}: sphere with 4 cones of index {n}"),
            CyclicQuotientCase::Torus2Cones { n } => write!(f, "n={n}: torus with 2 cones of index {n}"),
            CyclicQuotientCase::Genus2 { n } => write!(f, "n={n}: closed genus-2 quotient"),
            CyclicQuotientCase::Bounded { max_n } => write!(f, "n <= {max_n}"),
        }
    }
}

/// Cases for a cyclic rotation group acting on a closed genus-`g` surface.
/// Each exact case is included only if its Riemann–Hurwitz data is
/// admissible and reproduces `g`. Empty for `g < 2`.
pub fn cyclic_quotient_cases(g: u64) -> Vec<CyclicQuotientCase> {
    if g < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let n = g + 1;
    if rh_cover_genus(n, 0, &[n; 4]) == Ok(g) {
        out.push(CyclicQuotientCase::Sphere4Cones { n });
    }
    let n = g;
    if rh_cover_genus(n, 1, &[n; 2]) == Ok(g) {
        out.push(CyclicQuotientCase::Torus2Cones { n });
    }
    let n = g - 1;
    if n >= 2 && rh_cover_genus(n, 2, &[]) == Ok(g) {
        out.push(CyclicQuotientCase::Genus2 { n });
    }
    out.push(CyclicQuotientCase::Bounded { max_n: g / 2 + 1 });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rh_examples() {
        assert_eq!(rh_cover_genus(12, 0, &[2, 2, 3, 3]), Ok(3));
        for n in 2..40 {
            assert_eq!(rh_cover_genus(n, 0, &[n, n, n, n]), Ok(n - 1));
        }
        assert_eq!(rh_cover_genus(1, 2, &[]), Ok(2));
        assert_eq!(rh_cover_genus(60, 0, &[2, 3, 5]), Ok(0));
    }

    #[test]
    fn inadmissible_signatures_are_rejected() {
        // 5 * (2 - 1/2 * 3) = 5/2
        assert!(matches!(rh_cover_genus(5, 0, &[2, 2, 2]), Err(OrbifoldError::Inadmissible(_))));
        // would need negative genus
        assert!(matches!(rh_cover_genus(3, 0, &[3]), Err(OrbifoldError::Inadmissible(_))));
        assert!(rh_cover_genus(4, 0, &[1]).is_err());
    }

    #[test]
    fn sphere_genus_examples() {
        assert_eq!(sphere_4cone_genus(60, 2, 5), Ok(19));
        assert_eq!(sphere_4cone_genus(60, 3, 3), Ok(21));
        assert_eq!(sphere_4cone_genus(24, 3, 4), Ok(11));
        assert!(sphere_4cone_genus(24, 4, 3).is_err());
        assert!(sphere_4cone_genus(24, 1, 3).is_err());
    }

    #[test]
    fn reflector_arc_counts_like_an_index_two_cone() {
        for (order, s) in [(12u64, 3u64), (24, 3), (24, 4), (60, 3), (60, 5), (14, 7)] {
            let refl = RhSolution::solve(order, QuotientSignature::disk_reflector_arc(GroupLabel::A5, s).unwrap()).unwrap();
            assert_eq!(refl.covering_genus, bordered_algebraic_genus(order, 2, s).unwrap());
            assert!(refl.identity_holds());
        }
    }

    #[test]
    fn annulus_cover() {
        // Z_n on an annulus with one cone of index n: chi = 1 - n
        for n in 2..20 {
            let sol = RhSolution::solve(n, QuotientSignature::annulus(GroupLabel::Cyclic(n), vec![n]).unwrap()).unwrap();
            assert_eq!(sol.covering_genus, n);
        }
    }

    #[test]
    fn signature_validation() {
        assert!(QuotientSignature::disk_reflector_arc(GroupLabel::A4, 3).is_ok());
        let mut sig = QuotientSignature::disk_reflector_arc(GroupLabel::A4, 3).unwrap();
        sig.arc_indices = Some((3, 3));
        assert!(sig.validate().is_err());
        let mut sig = QuotientSignature::sphere_four_cones(GroupLabel::A5, 2, 5).unwrap();
        sig.cone_indices = vec![2, 5, 5, 5];
        assert!(sig.validate().is_err());
    }

    #[test]
    fn cyclic_cases() {
        let c2 = cyclic_quotient_cases(2);
        assert!(c2.contains(&CyclicQuotientCase::Sphere4Cones { n: 3 }));
        assert!(c2.contains(&CyclicQuotientCase::Torus2Cones { n: 2 }));
        assert!(cyclic_quotient_cases(3).contains(&CyclicQuotientCase::Bounded { max_n: 2 }));
        assert!(cyclic_quotient_cases(5).contains(&CyclicQuotientCase::Genus2 { n: 4 }));
        assert!(cyclic_quotient_cases(1).is_empty());
        for g in 2..200 {
            let max = cyclic_quotient_cases(g).iter().map(|c| c.max_order()).max();
            assert_eq!(max, Some(g + 1));
        }
    }
}
