//! Generating pairs of the exceptional rotation groups, up to automorphism.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{closure_with_bound, FiniteGroup, GroupLabel, PermError, Permutation};

/// An automorphism as a table on element indices of its group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    table: Vec<usize>,
}

impl Automorphism {
    pub fn apply(&self, group: &FiniteGroup, p: &Permutation) -> Permutation {
        let i = group.index_of(p).expect("automorphism applied to a foreign element");
        group.elements()[self.table[i]].clone()
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// Every automorphism of `group`, found by sending its generators to
/// elements of matching order and keeping the assignments that extend to
/// bijective homomorphisms.
pub fn automorphisms(group: &FiniteGroup) -> Vec<Automorphism> {
    let gens = group.generators();
    let candidates: Vec<Vec<Permutation>> = gens.iter().map(|g| group.elements_of_order(g.order())).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    if candidates.iter().any(|c| c.is_empty()) {
        return out;
    }
    loop {
        let images: Vec<Permutation> = choice.iter().zip(&candidates).map(|(&k, c)| c[k].clone()).collect();
        if let Some(map) = group.extend_homomorphism(&images, group.identity().clone(), |a, b| a.compose_unchecked(b)) {
            let table: Vec<usize> = map.iter().map(|p| group.index_of(p).expect("image in group")).collect();
            let mut hit = vec![false; table.len()];
            table.iter().for_each(|&j| hit[j] = true);
            if hit.iter().all(|&h| h) {
                out.push(Automorphism { table });
            }
        }
        // odometer over generator images
        let mut k = 0;
        loop {
            if k == choice.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn expected_automorphism_count(label: GroupLabel) -> Option<usize> {
    match label {
        GroupLabel::A4 | GroupLabel::S4 => Some(24),
        GroupLabel::A5 => Some(120),
        _ => None,
    }
}

/// All ordered pairs `(x, y)` with `ord(x) = r`, `ord(y) = s` and `<x, y> = G`.
pub fn generating_pairs(group: &FiniteGroup, r: u64, s: u64) -> Vec<(Permutation, Permutation)> {
    let xs = group.elements_of_order(r);
    let ys = group.elements_of_order(s);
    let mut out = Vec::new();
    for x in &xs {
        for y in &ys {
            let sub = closure_with_bound(group.degree(), &[x.clone(), y.clone()], usize::MAX)
                .expect("elements share the group's degree");
            if sub.order() == group.order() {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}

/// One orbit of generating pairs under `Aut(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratingPairClass {
    /// Lexicographically least pair in the orbit.
    pub representative: (Permutation, Permutation),
    pub orders: (u64, u64),
    /// Number of ordered pairs in the orbit (both orders when `r = s`).
    pub class_size: usize,
}

fn orbit_key(
    group: &FiniteGroup,
    auts: &[Automorphism],
    pair: &(Permutation, Permutation),
    allow_swap: bool,
) -> (Permutation, Permutation) {
    let mut best: Option<(Permutation, Permutation)> = None;
    for a in auts {
        let (x, y) = (a.apply(group, &pair.0), a.apply(group, &pair.1));
        let mut images = vec![(x.clone(), y.clone())];
        if allow_swap {
            images.push((y, x));
        }
        for im in images {
            if best.as_ref().is_none_or(|b| im < *b) {
                best = Some(im);
            }
        }
    }
    best.expect("automorphism group contains the identity")
}

/// Whether two pairs lie in the same `Aut(G)` orbit (optionally allowing the swap `(x,y) -> (y,x)`).
pub fn are_aut_equivalent(
    group: &FiniteGroup,
    auts: &[Automorphism],
    a: &(Permutation, Permutation),
    b: &(Permutation, Permutation),
    allow_swap: bool,
) -> bool {
    orbit_key(group, auts, a, allow_swap) == orbit_key(group, auts, b, allow_swap)
}

/// Partitions the generating pairs of orders `(r, s)` into `Aut(G)` orbits.
///
/// Pairs are ordered; when `r = s` the swap is also quotiented out so the
/// pair is effectively unordered. `G` must carry one of the labels A4, S4,
/// A5. An empty result means no such generating pair exists.
pub fn classify_generating_pairs(group: &FiniteGroup, r: u64, s: u64) -> Result<Vec<GeneratingPairClass>, PermError> {
    let label = group
        .label()
        .ok_or_else(|| PermError::Unsupported("unlabelled group".into()))?;
    let expected = expected_automorphism_count(label).ok_or_else(|| PermError::Unsupported(label.to_string()))?;
    let auts = automorphisms(group);
    if auts.len() != expected {
        return Err(PermError::AutomorphismSanity {
            label,
            found: auts.len(),
            expected,
        });
    }
    let mut orbits: BTreeMap<(Permutation, Permutation), usize> = BTreeMap::new();
    for pair in generating_pairs(group, r, s) {
        *orbits.entry(orbit_key(group, &auts, &pair, r == s)).or_default() += 1;
    }
    Ok(orbits
        .into_iter()
        .map(|(representative, class_size)| GeneratingPairClass {
            representative,
            orders: (r, s),
            class_size,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::super::standard_group;
    use super::*;

    #[test]
    fn automorphism_group_orders() {
        for (label, n) in [(GroupLabel::A4, 24), (GroupLabel::S4, 24), (GroupLabel::A5, 120)] {
            let g = standard_group(label).unwrap();
            let auts = automorphisms(&g);
            assert_eq!(auts.len(), n, "{label}");
            assert!(auts.iter().any(|a| a.is_identity()));
        }
        assert_eq!(automorphisms(&standard_group(GroupLabel::Cyclic(7)).unwrap()).len(), 6);
    }

    #[test]
    fn class_counts() {
        let a4 = standard_group(GroupLabel::A4).unwrap();
        let classes = classify_generating_pairs(&a4, 2, 3).unwrap();
        assert_eq!(classes.len(), 1);
        let a5 = standard_group(GroupLabel::A5).unwrap();
        assert_eq!(classify_generating_pairs(&a5, 2, 5).unwrap().len(), 2);
        assert_eq!(classify_generating_pairs(&a5, 3, 5).unwrap().len(), 4);
        let s4 = standard_group(GroupLabel::S4).unwrap();
        assert!(classify_generating_pairs(&s4, 3, 3).unwrap().is_empty());
    }

    #[test]
    fn unsupported_groups_are_rejected() {
        let d5 = standard_group(GroupLabel::Dihedral(5)).unwrap();
        assert!(matches!(classify_generating_pairs(&d5, 2, 5), Err(PermError::Unsupported(_))));
        let bare = closure_with_bound(4, &[Permutation::parse(4, "(123)").unwrap()], 16).unwrap();
        assert!(classify_generating_pairs(&bare, 3, 3).is_err());
    }

    #[test]
    fn representatives_are_orbit_minima() {
        let a5 = standard_group(GroupLabel::A5).unwrap();
        let auts = automorphisms(&a5);
        for class in classify_generating_pairs(&a5, 3, 5).unwrap() {
            assert_eq!(orbit_key(&a5, &auts, &class.representative, false), class.representative);
        }
    }
}
