//! Generating pairs of A4, S4 and A5 as listed by hand, and the coset
//! indices used when reading off boundary counts.

use crate::classify::pair_classes;
use crate::permgroup::{are_aut_equivalent, automorphisms, standard_group, GroupLabel, PermError, Permutation};

#[derive(Clone, Copy, Debug)]
pub struct PairFact {
    pub group: GroupLabel,
    pub orders: (u64, u64),
    /// One pair per `Aut(G)` class.
    pub pairs: &'static [(&'static str, &'static str)],
}

pub const PAIR_FACTS: [PairFact; 7] = [
    PairFact { group: GroupLabel::A4, orders: (2, 3), pairs: &[("(12)(34)", "(123)")] },
    PairFact { group: GroupLabel::S4, orders: (2, 3), pairs: &[("(12)", "(134)")] },
    PairFact { group: GroupLabel::S4, orders: (2, 4), pairs: &[("(12)", "(1234)")] },
    PairFact { group: GroupLabel::A5, orders: (2, 3), pairs: &[("(12)(34)", "(135)")] },
    PairFact {
        group: GroupLabel::A5,
        orders: (2, 5),
        pairs: &[("(12)(34)", "(12345)"), ("(13)(24)", "(12345)")],
    },
    PairFact { group: GroupLabel::A5, orders: (3, 3), pairs: &[("(123)", "(145)")] },
    PairFact {
        group: GroupLabel::A5,
        orders: (3, 5),
        pairs: &[("(123)", "(12345)"), ("(132)", "(12345)"), ("(124)", "(12345)"), ("(142)", "(12345)")],
    },
];

/// `[G : <gens>]`.
pub const COSET_INDICES: [(GroupLabel, &[&str], usize); 6] = [
    (GroupLabel::A5, &["(12345)"], 12),
    (GroupLabel::A4, &["(134)"], 4),
    (GroupLabel::S4, &["(1234)"], 6),
    (GroupLabel::A5, &["(135)"], 20),
    (GroupLabel::A5, &["(12)(34)", "(23)(45)"], 6),
    (GroupLabel::A5, &["(13)(24)", "(24)(35)"], 10),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactOutcome {
    pub classes: usize,
    pub expected: usize,
    /// Listed pairs that fail to generate with the right orders.
    pub invalid: Vec<usize>,
    /// Listed pairs falling into the same class as an earlier one.
    pub duplicates: Vec<usize>,
}

impl FactOutcome {
    pub fn passed(&self) -> bool {
        self.classes == self.expected && self.invalid.is_empty() && self.duplicates.is_empty()
    }
}

/// Compares a listed fact against exhaustive enumeration. With the class
/// count matching and the listed pairs valid and pairwise inequivalent,
/// every class contains exactly one listed pair.
pub fn check_fact(fact: &PairFact) -> Result<FactOutcome, PermError> {
    let g = standard_group(fact.group)?;
    let auts = automorphisms(&g);
    let (r, s) = fact.orders;
    let classes = pair_classes(fact.group, r, s)?.len();
    let mut parsed: Vec<(Permutation, Permutation)> = Vec::new();
    let mut invalid = Vec::new();
    let mut duplicates = Vec::new();
    for (i, (a, b)) in fact.pairs.iter().enumerate() {
        let pair = (g.parse_element(a)?, g.parse_element(b)?);
        let generates = g.subgroup_index(&[pair.0.clone(), pair.1.clone()])? == 1;
        if !generates || pair.0.order() != r || pair.1.order() != s {
            invalid.push(i);
        }
        if parsed.iter().any(|p| are_aut_equivalent(&g, &auts, p, &pair, r == s)) {
            duplicates.push(i);
        }
        parsed.push(pair);
    }
    Ok(FactOutcome { classes, expected: fact.pairs.len(), invalid, duplicates })
}

pub fn coset_index(group: GroupLabel, gens: &[&str]) -> Result<usize, PermError> {
    let g = standard_group(group)?;
    let gens = gens.iter().map(|t| g.parse_element(t)).collect::<Result<Vec<_>, _>>()?;
    g.subgroup_index(&gens)
}
