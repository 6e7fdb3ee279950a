//! Closed surfaces `Σ_g`.

use super::lines::{cone_pairs, pair_classes, remaining_line};
use super::{require_above_one, top, ClassifyError, GroupElements, Kind, MaxActionResult, Note, Witness};
use crate::orbifold::{cyclic_quotient_cases, sphere_4cone_genus, CyclicQuotientCase, QuotientSignature};
use crate::permgroup::{DihedralElement, GroupLabel};

fn cyclic_witness(case: CyclicQuotientCase, doubled: bool) -> Result<Option<Witness>, ClassifyError> {
    let (n, genus, cones) = match case {
        CyclicQuotientCase::Sphere4Cones { n } => (n, 0, vec![n; 4]),
        CyclicQuotientCase::Torus2Cones { n } => (n, 1, vec![n; 2]),
        CyclicQuotientCase::Genus2 { n } => (n, 2, vec![]),
        CyclicQuotientCase::Bounded { .. } => return Ok(None),
    };
    Ok(Some(Witness {
        order: if doubled { 2 * n } else { n },
        orientation_reversing: doubled,
        signature: QuotientSignature::closed(GroupLabel::Cyclic(n), genus, cones)?,
        elements: GroupElements::None,
        crossing: None,
        boundary: None,
        surface: None,
        faithful: true,
    }))
}

fn closed_result(kind: Kind, g: u64, witnesses: Vec<Witness>, notes: Vec<Note>) -> MaxActionResult {
    let (order, witnesses) = top(witnesses);
    MaxActionResult {
        kind,
        input: g,
        order,
        surfaces: Vec::new(),
        witnesses,
        notes,
    }
}

pub fn ce_o(g: u64) -> Result<MaxActionResult, ClassifyError> {
    require_above_one("genus", g)?;
    let cases = cyclic_quotient_cases(g);
    let bound = cases.iter().map(|c| c.max_order()).max().unwrap_or(0);
    let mut ws = Vec::new();
    for c in cases {
        ws.extend(cyclic_witness(c, false)?);
    }
    let res = closed_result(Kind::CeO, g, ws, Vec::new());
    if res.order != bound {
        return Err(ClassifyError::Contradiction(format!("cyclic bound {bound} not realized for g={g}")));
    }
    Ok(res)
}

/// Doubles each cyclic case. For odd `g` neither `Z_{2g+2}` nor `Z_{2g-2}`
/// can act, which drops the sphere and genus-2 quotients.
pub fn ce(g: u64) -> Result<MaxActionResult, ClassifyError> {
    require_above_one("genus", g)?;
    let mut ws = Vec::new();
    let mut bounded = 0;
    for c in cyclic_quotient_cases(g) {
        let excluded = g % 2 == 1
            && matches!(c, CyclicQuotientCase::Sphere4Cones { .. } | CyclicQuotientCase::Genus2 { .. });
        if excluded {
            continue;
        }
        match c {
            CyclicQuotientCase::Bounded { max_n } => bounded = 2 * max_n,
            _ => ws.extend(cyclic_witness(c, true)?),
        }
    }
    let res = closed_result(Kind::Ce, g, ws, Vec::new());
    if bounded > res.order {
        return Err(ClassifyError::Contradiction(format!(
            "bounded cyclic branch {bounded} exceeds every realized case for g={g}"
        )));
    }
    Ok(res)
}

/// Every orientation-preserving candidate for `Σ_g`: the dihedral group
/// `D_{g+1}` with cones `(2, g+1)` and each exceptional group whose sphere
/// quotient with cones `{r,r,s,s}` has genus `g` and a generating pair.
pub fn closed_rotation_candidates(g: u64) -> Result<Vec<Witness>, ClassifyError> {
    require_above_one("genus", g)?;
    let n = g + 1;
    let mut out = vec![Witness {
        order: 2 * n,
        orientation_reversing: false,
        signature: QuotientSignature::sphere_four_cones(GroupLabel::Dihedral(n), 2, n)?,
        elements: GroupElements::Dihedral(vec![DihedralElement::reflection(0), DihedralElement::rotation(1)]),
        crossing: None,
        boundary: None,
        surface: None,
        faithful: true,
    }];
    for label in GroupLabel::EXCEPTIONAL {
        for (r, s) in cone_pairs(label) {
            if sphere_4cone_genus(label.order(), r, s) != Ok(g) {
                continue;
            }
            for class in pair_classes(label, r, s)?.iter() {
                let (x, y) = class.representative.clone();
                out.push(Witness {
                    order: label.order(),
                    orientation_reversing: false,
                    signature: QuotientSignature::sphere_four_cones(label, r, s)?,
                    elements: GroupElements::Permutations(vec![x, y]),
                    crossing: None,
                    boundary: None,
                    surface: None,
                    faithful: true,
                });
            }
        }
    }
    Ok(out)
}

pub fn e_o(g: u64) -> Result<MaxActionResult, ClassifyError> {
    let ws = closed_rotation_candidates(g)?;
    let res = closed_result(Kind::EO, g, ws, vec![Note::VertexBranchBound { bound: 2 * g }]);
    debug_assert!(res.order > 2 * g);
    Ok(res)
}

/// Doubles every candidate except those whose two cone pairs lie on a
/// single singular line: a reflection would swap the two sides of the
/// quotient and the preimage could not be connected.
pub fn e(g: u64) -> Result<MaxActionResult, ClassifyError> {
    let mut ws = Vec::new();
    let mut notes = Vec::new();
    for w in closed_rotation_candidates(g)? {
        let (r, s) = w.cones().expect("sphere quotients carry cones");
        if remaining_line(w.group(), r, s).is_none() {
            let note = Note::SameLineExcluded { group: w.group(), cones: (r, s) };
            if !notes.contains(&note) {
                notes.push(note);
            }
            continue;
        }
        ws.push(Witness {
            order: 2 * w.order,
            orientation_reversing: true,
            ..w
        });
    }
    Ok(closed_result(Kind::E, g, ws, notes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_values() {
        assert_eq!(ce_o(2).unwrap().order, 3);
        assert_eq!(ce_o(100).unwrap().order, 101);
        assert_eq!(ce_o(3).unwrap().order, 4);
        assert_eq!(ce(2).unwrap().order, 6);
        assert_eq!(ce(3).unwrap().order, 6);
        assert_eq!(ce(4).unwrap().order, 10);
    }

    #[test]
    fn general_values() {
        assert_eq!(e_o(3).unwrap().order, 12);
        assert_eq!(e_o(21).unwrap().order, 60);
        assert_eq!(e_o(9).unwrap().order, 20);
        assert_eq!(e_o(29).unwrap().order, 60);
        assert_eq!(e(3).unwrap().order, 24);
        assert_eq!(e(21).unwrap().order, 88);
        assert_eq!(e(11).unwrap().order, 120);
    }

    #[test]
    fn genus_29_is_a_tie() {
        let r = e_o(29).unwrap();
        let groups: Vec<_> = r.witnesses.iter().map(|w| w.group()).collect();
        assert!(groups.contains(&GroupLabel::Dihedral(30)));
        assert!(groups.contains(&GroupLabel::A5));
    }

    #[test]
    fn genus_21_records_the_exclusion() {
        let r = e(21).unwrap();
        assert!(r.notes.contains(&Note::SameLineExcluded {
            group: GroupLabel::A5,
            cones: (3, 3)
        }));
        assert!(r.witnesses.iter().all(|w| w.group() == GroupLabel::Dihedral(22)));
    }

    #[test]
    fn witnesses_recompute() {
        for g in 2..40 {
            for res in [ce_o(g).unwrap(), ce(g).unwrap(), e_o(g).unwrap(), e(g).unwrap()] {
                for w in &res.witnesses {
                    let rc = w.recompute().unwrap();
                    assert_eq!(rc.covering_genus, g, "{w}");
                    assert_eq!(rc.order, res.order, "{w}");
                    assert!(w.is_sound());
                }
            }
        }
    }
}
