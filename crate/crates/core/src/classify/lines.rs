//! The singular set of `R³/G°` and cached generating-pair classes.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::permgroup::{classify_generating_pairs, standard_group, GeneratingPairClass, GroupLabel, PermError};

/// Indices of the singular lines of `R³/G°`, a cone over the triangle
/// orbifold `S²/G°` (one line for a cyclic group).
pub fn singular_line_indices(label: GroupLabel) -> Vec<u64> {
    match label {
        GroupLabel::Cyclic(n) => vec![n],
        GroupLabel::Dihedral(n) => vec![2, 2, n],
        GroupLabel::A4 => vec![2, 3, 3],
        GroupLabel::S4 => vec![2, 3, 4],
        GroupLabel::A5 => vec![2, 3, 5],
    }
}

/// Ordered cone pairs `r <= s` drawn from the singular line indices with
/// `1/r + 1/s > 1/2`, so the triangle `(r, s, s')` closing the lines stays
/// spherical. Both points may sit on the same line.
pub fn cone_pairs(label: GroupLabel) -> Vec<(u64, u64)> {
    let mut idx = singular_line_indices(label);
    idx.sort_unstable();
    idx.dedup();
    let mut out = Vec::new();
    for (i, &r) in idx.iter().enumerate() {
        for &s in &idx[i..] {
            if 2 * (r + s) > r * s {
                out.push((r, s));
            }
        }
    }
    out
}

/// The line index left over once cones of index `r` and `s` sit on two
/// distinct lines, or `None` when the lines do not have those indices.
pub fn remaining_line(label: GroupLabel, r: u64, s: u64) -> Option<u64> {
    let mut idx = singular_line_indices(label);
    if idx.len() != 3 {
        return None;
    }
    for q in [r, s] {
        let pos = idx.iter().position(|&x| x == q)?;
        idx.remove(pos);
    }
    idx.pop()
}

type ClassCache = Mutex<HashMap<(GroupLabel, u64, u64), Arc<Vec<GeneratingPairClass>>>>;

/// `Aut(G)` classes of generating pairs of orders `(r, s)` for the
/// exceptional groups. Computed once per process.
pub fn pair_classes(label: GroupLabel, r: u64, s: u64) -> Result<Arc<Vec<GeneratingPairClass>>, PermError> {
    static CACHE: OnceLock<ClassCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&(label, r, s)) {
        return Ok(hit.clone());
    }
    let group = standard_group(label)?;
    let classes = Arc::new(classify_generating_pairs(&group, r, s)?);
    cache.lock().expect("cache lock").insert((label, r, s), classes.clone());
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_cone_pairs() {
        assert_eq!(cone_pairs(GroupLabel::A4), vec![(2, 2), (2, 3), (3, 3)]);
        assert_eq!(cone_pairs(GroupLabel::S4), vec![(2, 2), (2, 3), (2, 4), (3, 3), (3, 4)]);
        assert_eq!(cone_pairs(GroupLabel::A5), vec![(2, 2), (2, 3), (2, 5), (3, 3), (3, 5)]);
    }

    #[test]
    fn leftover_line() {
        assert_eq!(remaining_line(GroupLabel::A5, 2, 5), Some(3));
        assert_eq!(remaining_line(GroupLabel::A4, 3, 3), Some(2));
        assert_eq!(remaining_line(GroupLabel::A5, 3, 3), None);
        assert_eq!(remaining_line(GroupLabel::Dihedral(7), 2, 7), Some(2));
        assert_eq!(remaining_line(GroupLabel::Cyclic(7), 7, 7), None);
    }

    #[test]
    fn cache_returns_same_classes() {
        let a = pair_classes(GroupLabel::A5, 3, 5).unwrap();
        let b = pair_classes(GroupLabel::A5, 3, 5).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.len(), 4);
    }
}
