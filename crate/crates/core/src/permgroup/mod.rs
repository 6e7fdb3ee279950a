//! Exact arithmetic for the small finite groups that occur as orientation
//! preserving symmetry groups of R³: cyclic, dihedral, A4, S4 and A5.
//!
//! Permutation groups are closed explicitly (degrees stay tiny). Cyclic and
//! dihedral groups also have a symbolic model so arbitrarily large orders
//! can be handled in closed form.

mod group;
mod pairs;
mod permutation;
mod symbolic;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use group::{closure, closure_with_bound, standard_group, standard_group_with_bound, FiniteGroup, DEFAULT_DEGREE_BOUND};
pub use pairs::{are_aut_equivalent, automorphisms, classify_generating_pairs, generating_pairs, Automorphism, GeneratingPairClass};
pub use permutation::Permutation;
pub use symbolic::{CyclicElement, CyclicGroup, DihedralElement, DihedralGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error("element {0} is not in the group")]
    NotInGroup(String),
    #[error("unsupported group: {0}")]
    Unsupported(String),
    #[error("automorphism group of {label} has order {found}, expected {expected}")]
    AutomorphismSanity { label: GroupLabel, found: usize, expected: usize },
}

/// Isomorphism-type tag for the groups the classification works with.
///
/// `Dihedral(n)` is the dihedral group of order `2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupLabel {
    Cyclic(u64),
    Dihedral(u64),
    A4,
    S4,
    A5,
}

impl GroupLabel {
    pub fn order(self) -> u64 {
        match self {
            GroupLabel::Cyclic(n) => n,
            GroupLabel::Dihedral(n) => 2 * n,
            GroupLabel::A4 => 12,
            GroupLabel::S4 => 24,
            GroupLabel::A5 => 60,
        }
    }

    /// The three exceptional rotation groups, in increasing order.
    pub const EXCEPTIONAL: [GroupLabel; 3] = [GroupLabel::A4, GroupLabel::S4, GroupLabel::A5];
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Cyclic(n) => write!(f, "Z{n}"),
            GroupLabel::Dihedral(n) => write!(f, "D{n}"),
            GroupLabel::A4 => write!(f, "A4"),
            GroupLabel::S4 => write!(f, "S4"),
            GroupLabel::A5 => write!(f, "A5"),
        }
    }
}

impl std::str::FromStr for GroupLabel {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PermError::Parse(format!("unknown group label {s:?}"));
        match s {
            "A4" => Ok(GroupLabel::A4),
            "S4" => Ok(GroupLabel::S4),
            "A5" => Ok(GroupLabel::A5),
            _ => {
                let (head, tail) = s.split_at(1.min(s.len()));
                let n: u64 = tail.parse().map_err(|_| bad())?;
                match head {
                    "Z" => Ok(GroupLabel::Cyclic(n)),
                    "D" => Ok(GroupLabel::Dihedral(n)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

/// The operations the classification needs from a concrete group model.
pub trait GroupModel {
    type Element: Clone + Eq + fmt::Debug + fmt::Display;

    fn label(&self) -> Option<GroupLabel>;
    fn order(&self) -> u64;
    fn contains(&self, e: &Self::Element) -> bool;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inverse(&self, a: &Self::Element) -> Self::Element;
    fn element_order(&self, e: &Self::Element) -> u64;

    /// Order of the subgroup generated by `gens`.
    fn subgroup_order(&self, gens: &[Self::Element]) -> Result<u64, PermError>;

    /// `[G : <gens>]`.
    fn subgroup_index(&self, gens: &[Self::Element]) -> Result<u64, PermError> {
        Ok(self.order() / self.subgroup_order(gens)?)
    }

    /// Whether some index-2 subgroup contains `must_contain` but not `must_exclude`.
    fn index2_subgroup_containing(
        &self,
        must_contain: &Self::Element,
        must_exclude: &Self::Element,
    ) -> Result<bool, PermError>;

    fn generates(&self, gens: &[Self::Element]) -> Result<bool, PermError> {
        Ok(self.subgroup_order(gens)? == self.order())
    }
}
