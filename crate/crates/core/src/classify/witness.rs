use std::fmt;

use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::orbifold::{QuotientCase, QuotientSignature, RhSolution, SurfaceType};
use crate::permgroup::{
    standard_group, CyclicElement, CyclicGroup, DihedralElement, DihedralGroup, GroupLabel, GroupModel, Permutation,
};

/// Images in `G°` of the generators of `π₁` of the quotient, in the model
/// matching the group label.
///
/// For the disk shapes the two entries are the loops around the two cone
/// points (case a) or the reflector arc and the interior cone (case b). For
/// the planar annulus they are the images of the two boundary circles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupElements {
    None,
    Permutations(Vec<Permutation>),
    Dihedral(Vec<DihedralElement>),
    Cyclic(Vec<CyclicElement>),
}

impl GroupElements {
    pub fn len(&self) -> usize {
        match self {
            GroupElements::None => 0,
            GroupElements::Permutations(v) => v.len(),
            GroupElements::Dihedral(v) => v.len(),
            GroupElements::Cyclic(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rendered(&self) -> Vec<String> {
        match self {
            GroupElements::None => Vec::new(),
            GroupElements::Permutations(v) => v.iter().map(|p| p.to_string()).collect(),
            GroupElements::Dihedral(v) => v.iter().map(|p| p.to_string()).collect(),
            GroupElements::Cyclic(v) => v.iter().map(|p| p.to_string()).collect(),
        }
    }
}

/// Which way the quotient meets the singular line of `R³/Z_n` (cyclic case).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Crossing {
    /// The line passes the two cone points in opposite directions.
    Opposite,
    /// Both cone points are passed in the same direction.
    Same,
}

/// One realizing configuration: the orientation-preserving group `G°`, the
/// quotient signature, the `π₁` images and the resulting surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Order of the whole acting group (`2|G°|` when orientation-reversing).
    pub order: u64,
    pub orientation_reversing: bool,
    pub signature: QuotientSignature,
    pub elements: GroupElements,
    pub crossing: Option<Crossing>,
    /// Boundary component count for bordered surfaces.
    pub boundary: Option<u64>,
    pub surface: Option<SurfaceType>,
    /// False when some element acts trivially on the surface.
    pub faithful: bool,
}

/// Candidate configurations share the witness layout.
pub type CandidateCase = Witness;

/// Data recomputed from a witness without trusting its stored outputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recomputed {
    pub order: u64,
    pub covering_genus: u64,
    pub boundary: Option<u64>,
    pub surface: Option<SurfaceType>,
}

impl Witness {
    pub fn group(&self) -> GroupLabel {
        self.signature.group
    }

    pub fn cones(&self) -> Option<(u64, u64)> {
        self.signature.arc_indices
    }

    pub fn rotation_order(&self) -> u64 {
        self.signature.group.order()
    }

    /// Rebuilds the group from its label and recomputes the covering genus,
    /// boundary count and surface type from the signature and the stored
    /// elements.
    pub fn recompute(&self) -> Result<Recomputed, ClassifyError> {
        let label = self.signature.group;
        let rh = RhSolution::solve(label.order(), self.signature.clone())?;
        let order = if self.orientation_reversing { 2 * label.order() } else { label.order() };
        let (boundary, surface) = match (&self.elements, label) {
            (GroupElements::None, _) => (None, None),
            (GroupElements::Permutations(v), GroupLabel::A4 | GroupLabel::S4 | GroupLabel::A5) => {
                let g = standard_group(label)?;
                bordered_data(&g, &self.signature, v, rh.covering_genus)?
            }
            (GroupElements::Dihedral(v), GroupLabel::Dihedral(n)) => {
                bordered_data(&DihedralGroup::new(n), &self.signature, v, rh.covering_genus)?
            }
            (GroupElements::Cyclic(v), GroupLabel::Cyclic(n)) => {
                bordered_data(&CyclicGroup::new(n), &self.signature, v, rh.covering_genus)?
            }
            _ => {
                return Err(ClassifyError::Contradiction(format!(
                    "element model does not match group {label}"
                )))
            }
        };
        Ok(Recomputed {
            order,
            covering_genus: rh.covering_genus,
            boundary,
            surface,
        })
    }

    /// Whether [`Witness::recompute`] reproduces the stored order, boundary and surface.
    pub fn is_sound(&self) -> bool {
        match self.recompute() {
            Ok(r) => r.order == self.order && r.boundary == self.boundary && r.surface == self.surface,
            Err(_) => false,
        }
    }
}

/// Boundary count and surface type from the quotient data.
///
/// Case (a): `b = [G : <xy>]`, always orientable. Case (b): `b = [G : <x, y⁻¹xy>]`,
/// orientable iff an index-2 subgroup contains `y` but not `x`. Planar
/// annulus: one boundary component per coset of each boundary image.
/// Closed sphere shapes only check that the elements generate `G`.
fn bordered_data<G: GroupModel>(
    group: &G,
    sig: &QuotientSignature,
    elems: &[G::Element],
    covering_genus: u64,
) -> Result<(Option<u64>, Option<SurfaceType>), ClassifyError> {
    let pair = || -> Result<(&G::Element, &G::Element), ClassifyError> {
        match elems {
            [x, y] => Ok((x, y)),
            _ => Err(ClassifyError::Contradiction("expected a pair of elements".into())),
        }
    };
    let check_orders = |x: &G::Element, y: &G::Element| -> Result<(), ClassifyError> {
        let (r, s) = sig.arc_indices.expect("disk and sphere shapes carry (r, s)");
        if group.element_order(x) != r || group.element_order(y) != s {
            return Err(ClassifyError::Contradiction(format!("orders of {x}, {y} do not match ({r}, {s})")));
        }
        if !group.generates(&[x.clone(), y.clone()])? {
            return Err(ClassifyError::Contradiction(format!(
                "{x}, {y} do not generate the group, so the preimage is disconnected"
            )));
        }
        Ok(())
    };
    let alpha = covering_genus;
    match sig.case {
        QuotientCase::Closed => Ok((None, None)),
        QuotientCase::ClosedSphere4Cones => {
            let (x, y) = pair()?;
            check_orders(x, y)?;
            Ok((None, None))
        }
        QuotientCase::DiskTwoCones => {
            let (x, y) = pair()?;
            check_orders(x, y)?;
            let b = group.subgroup_index(&[group.multiply(x, y)])?;
            Ok((Some(b), Some(SurfaceType::from_algebraic_genus(alpha, b, true)?)))
        }
        QuotientCase::DiskReflectorArcPlusCone => {
            let (x, y) = pair()?;
            check_orders(x, y)?;
            let conj = group.multiply(&group.multiply(&group.inverse(y), x), y);
            let b = group.subgroup_index(&[x.clone(), conj])?;
            let orientable = group.index2_subgroup_containing(y, x)?;
            Ok((Some(b), Some(SurfaceType::from_algebraic_genus(alpha, b, orientable)?)))
        }
        QuotientCase::PlanarAnnulus => {
            let mut b = 0;
            for c in elems {
                b += group.subgroup_index(std::slice::from_ref(c))?;
            }
            Ok((Some(b), Some(SurfaceType::from_algebraic_genus(alpha, b, true)?)))
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = self.signature.group;
        if self.orientation_reversing {
            write!(f, "{label}x2 (order {})", self.order)?;
        } else {
            write!(f, "{label} (order {})", self.order)?;
        }
        write!(f, " {}", self.signature.case)?;
        if let Some((r, s)) = self.cones() {
            write!(f, " ({r},{s})")?;
        }
        let elems = self.elements.rendered();
        if !elems.is_empty() {
            write!(f, " [{}]", elems.join(", "))?;
        }
        if let Some(s) = self.surface {
            write!(f, " -> {s}")?;
        }
        if !self.faithful {
            write!(f, " non-faithful")?;
        }
        Ok(())
    }
}
