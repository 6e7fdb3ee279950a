//! Bordered surfaces `Σ` with algebraic genus `α`, and graphs of genus `α`.

use super::lines::{cone_pairs, pair_classes, remaining_line};
use super::{
    max_action, require_above_one, surfaces_of, top, ClassifyError, Crossing, GroupElements, Kind, MaxActionResult,
    Note, Witness,
};
use crate::orbifold::{bordered_algebraic_genus, QuotientCase, QuotientSignature};
use crate::permgroup::{CyclicElement, DihedralElement, DihedralGroup, GroupLabel, GroupModel};

/// Builds a witness and fills in its boundary count and surface by recomputation.
fn realize(
    alpha: u64,
    orientation_reversing: bool,
    signature: QuotientSignature,
    elements: GroupElements,
    crossing: Option<Crossing>,
) -> Result<Witness, ClassifyError> {
    let rotations = signature.group.order();
    let mut w = Witness {
        order: if orientation_reversing { 2 * rotations } else { rotations },
        orientation_reversing,
        signature,
        elements,
        crossing,
        boundary: None,
        surface: None,
        faithful: true,
    };
    let rc = w.recompute()?;
    if rc.covering_genus != alpha {
        return Err(ClassifyError::Contradiction(format!(
            "{w} covers a surface of algebraic genus {}, expected {alpha}",
            rc.covering_genus
        )));
    }
    w.boundary = rc.boundary;
    w.surface = rc.surface;
    Ok(w)
}

fn bordered_result(kind: Kind, alpha: u64, witnesses: Vec<Witness>, notes: Vec<Note>) -> MaxActionResult {
    let (order, witnesses) = top(witnesses);
    MaxActionResult {
        kind,
        input: alpha,
        order,
        surfaces: surfaces_of(&witnesses),
        witnesses,
        notes,
    }
}

/// `Z_{α+1}` with the quotient a disk with two cones of index `α+1`. The
/// singular line crosses the disk twice, in opposite or equal directions.
fn cyclic_disk_witnesses(alpha: u64, doubled: bool) -> Result<Vec<Witness>, ClassifyError> {
    let n = alpha + 1;
    let t = CyclicElement(1);
    let patterns = [
        (Crossing::Opposite, CyclicElement(n - 1)),
        (Crossing::Same, CyclicElement(1)),
    ];
    let mut out = Vec::new();
    for (crossing, y) in patterns {
        // a reflection reverses the line, so only the opposite pattern extends
        if doubled && crossing == Crossing::Same {
            continue;
        }
        let sig = QuotientSignature::disk_two_cones(GroupLabel::Cyclic(n), n, n)?;
        out.push(realize(alpha, doubled, sig, GroupElements::Cyclic(vec![t, y]), Some(crossing))?);
    }
    Ok(out)
}

pub fn cea_o(alpha: u64) -> Result<MaxActionResult, ClassifyError> {
    require_above_one("alpha", alpha)?;
    Ok(bordered_result(Kind::CeaO, alpha, cyclic_disk_witnesses(alpha, false)?, Vec::new()))
}

/// Orientation-reversing cyclic maximum.
///
/// Even `α`: `Z_{2α+2}` doubling the opposite-crossing `Z_{α+1}`. Odd `α`:
/// `Z_{2α}` fixing a planar surface in the reflection plane, so the
/// reflection acts trivially on it. With `faithful` set and `α` odd, that
/// action is ruled out and the answer drops to `α+1`.
pub fn cea(alpha: u64, faithful: bool) -> Result<MaxActionResult, ClassifyError> {
    require_above_one("alpha", alpha)?;
    let kind = if faithful { Kind::CeaFaithful } else { Kind::Cea };
    if alpha.is_multiple_of(2) {
        return Ok(bordered_result(kind, alpha, cyclic_disk_witnesses(alpha, true)?, Vec::new()));
    }
    if !faithful {
        let sig = QuotientSignature::annulus(GroupLabel::Cyclic(alpha), vec![alpha])?;
        let elems = GroupElements::Cyclic(vec![CyclicElement(1), CyclicElement(0)]);
        let mut w = realize(alpha, true, sig, elems, None)?;
        w.faithful = false;
        return Ok(bordered_result(kind, alpha, vec![w], vec![Note::NonFaithful]));
    }
    // Z_{2α+2} and Z_{2α-2} cannot act for odd α, Z_{2α} is non-faithful,
    // and the remaining orientation-reversing Z_{2n} have n <= floor(α/2) + 1.
    let reversing_bound = 2 * (alpha / 2 + 1);
    let preserving = cea_o(alpha)?;
    let order = preserving.order.max(reversing_bound);
    let witnesses = if preserving.order == order { preserving.witnesses } else { Vec::new() };
    Ok(MaxActionResult {
        kind,
        input: alpha,
        order,
        surfaces: Vec::new(),
        witnesses,
        notes: vec![Note::SurfacesNotDetermined],
    })
}

/// All orientation-preserving configurations for algebraic genus `α`.
///
/// The dihedral group `D_{α+1}` always contributes with cones `(2, α+1)`.
/// An exceptional group contributes for each `(r, s)` with
/// `α - 1 = |G|(1 - 1/r - 1/s)` and each class of generating pairs: once as a
/// disk with two cones (case a) and, when `r = 2`, once with the index-2
/// cone opened into a reflector arc (case b).
pub fn enumerate_bordered_cases(alpha: u64) -> Result<Vec<Witness>, ClassifyError> {
    require_above_one("alpha", alpha)?;
    let n = alpha + 1;
    let d = GroupLabel::Dihedral(n);
    let pair = || GroupElements::Dihedral(vec![DihedralElement::reflection(0), DihedralElement::rotation(1)]);
    let mut out = vec![
        realize(alpha, false, QuotientSignature::disk_two_cones(d, 2, n)?, pair(), None)?,
        realize(alpha, false, QuotientSignature::disk_reflector_arc(d, n)?, pair(), None)?,
    ];
    for label in GroupLabel::EXCEPTIONAL {
        for (r, s) in cone_pairs(label) {
            if bordered_algebraic_genus(label.order(), r, s) != Ok(alpha) {
                continue;
            }
            for class in pair_classes(label, r, s)?.iter() {
                let (x, y) = class.representative.clone();
                let elems = GroupElements::Permutations(vec![x, y]);
                out.push(realize(alpha, false, QuotientSignature::disk_two_cones(label, r, s)?, elems.clone(), None)?);
                if r == 2 {
                    out.push(realize(alpha, false, QuotientSignature::disk_reflector_arc(label, s)?, elems, None)?);
                }
            }
        }
    }
    Ok(out)
}

pub fn ea_o(alpha: u64) -> Result<MaxActionResult, ClassifyError> {
    Ok(bordered_result(Kind::EaO, alpha, enumerate_bordered_cases(alpha)?, Vec::new()))
}

fn product_order(w: &Witness) -> Result<u64, ClassifyError> {
    match &w.elements {
        GroupElements::Permutations(v) if v.len() == 2 => Ok(v[0].compose(&v[1])?.order()),
        GroupElements::Dihedral(v) if v.len() == 2 => {
            let g = DihedralGroup::new(w.signature.group.order() / 2);
            Ok(g.element_order(&g.multiply(&v[0], &v[1])))
        }
        _ => Err(ClassifyError::Contradiction(format!("{w} has no cone pair"))),
    }
}

/// Doubles the case (a) configurations that a reflection can preserve: the
/// two cone points sit on distinct singular lines and the boundary loop `xy`
/// winds around the third one. The surface is then a punctured sphere.
pub fn ea(alpha: u64) -> Result<MaxActionResult, ClassifyError> {
    let mut ws = Vec::new();
    let mut notes = Vec::new();
    for w in enumerate_bordered_cases(alpha)? {
        if w.signature.case != QuotientCase::DiskTwoCones {
            continue;
        }
        let (r, s) = w.cones().expect("disk quotients carry cones");
        let Some(third) = remaining_line(w.group(), r, s) else {
            let note = Note::SameLineExcluded { group: w.group(), cones: (r, s) };
            if !notes.contains(&note) {
                notes.push(note);
            }
            continue;
        };
        if product_order(&w)? != third {
            continue;
        }
        let doubled = realize(alpha, true, w.signature, w.elements, None)?;
        match doubled.surface {
            Some(s) if s.orientable && s.genus == 0 && s.boundary == alpha + 1 => ws.push(doubled),
            other => {
                return Err(ClassifyError::Contradiction(format!(
                    "reflection-compatible case gives {other:?}, expected a sphere with {} holes",
                    alpha + 1
                )))
            }
        }
    }
    Ok(bordered_result(Kind::Ea, alpha, ws, notes))
}

/// Graph kinds share their maxima with the bordered kinds: a graph and
/// its regular neighbourhood carry the same extendable actions.
pub fn graph_variant(kind: Kind, alpha: u64) -> Result<MaxActionResult, ClassifyError> {
    let delegate = match kind {
        Kind::CegO => Kind::CeaO,
        Kind::Ceg => Kind::Cea,
        Kind::EgO => Kind::EaO,
        Kind::Eg => Kind::Ea,
        other => return max_action(other, alpha),
    };
    let mut res = max_action(delegate, alpha)?;
    res.kind = kind;
    res.notes.push(Note::GraphVariant { delegate });
    Ok(res)
}
