//! Closed-form models of cyclic and dihedral groups of any order.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{GroupLabel, GroupModel, PermError};

/// `Z_n = <t | t^n>`, elements stored as exponents of `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicGroup {
    n: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicElement(pub u64);

impl fmt::Display for CyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "e"),
            1 => write!(f, "t"),
            k => write!(f, "t^{k}"),
        }
    }
}

impl CyclicGroup {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        CyclicGroup { n }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn generator(&self) -> CyclicElement {
        CyclicElement(1 % self.n)
    }

    pub fn power(&self, k: u64) -> CyclicElement {
        CyclicElement(k % self.n)
    }
}

impl GroupModel for CyclicGroup {
    type Element = CyclicElement;

    fn label(&self) -> Option<GroupLabel> {
        Some(GroupLabel::Cyclic(self.n))
    }

    fn order(&self) -> u64 {
        self.n
    }

    fn contains(&self, e: &CyclicElement) -> bool {
        e.0 < self.n
    }

    fn multiply(&self, a: &CyclicElement, b: &CyclicElement) -> CyclicElement {
        CyclicElement(((a.0 as u128 + b.0 as u128) % self.n as u128) as u64)
    }

    fn inverse(&self, a: &CyclicElement) -> CyclicElement {
        CyclicElement((self.n - a.0) % self.n)
    }

    fn element_order(&self, e: &CyclicElement) -> u64 {
        self.n / self.n.gcd(&e.0)
    }

    fn subgroup_order(&self, gens: &[CyclicElement]) -> Result<u64, PermError> {
        let mut d = self.n;
        for g in gens {
            if !self.contains(g) {
                return Err(PermError::NotInGroup(g.to_string()));
            }
            d = d.gcd(&g.0);
        }
        Ok(self.n / d)
    }

    fn index2_subgroup_containing(&self, c: &CyclicElement, x: &CyclicElement) -> Result<bool, PermError> {
        if !self.contains(c) || !self.contains(x) {
            return Err(PermError::NotInGroup(format!("{c} / {x}")));
        }
        Ok(self.n.is_multiple_of(2) && c.0.is_multiple_of(2) && x.0 % 2 == 1)
    }
}

/// `D_n = <r, s | r^n, s^2, (sr)^2>` of order `2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihedralGroup {
    n: u64,
}

/// The element `r^rotation s^flip`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DihedralElement {
    pub rotation: u64,
    pub flip: bool,
}

impl DihedralElement {
    pub fn rotation(k: u64) -> Self {
        DihedralElement { rotation: k, flip: false }
    }

    pub fn reflection(k: u64) -> Self {
        DihedralElement { rotation: k, flip: true }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rotation, self.flip) {
            (0, false) => write!(f, "e"),
            (0, true) => write!(f, "s"),
            (1, false) => write!(f, "r"),
            (1, true) => write!(f, "rs"),
            (k, false) => write!(f, "r^{k}"),
            (k, true) => write!(f, "r^{k}s"),
        }
    }
}

impl DihedralGroup {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1, "dihedral parameter must be positive");
        DihedralGroup { n }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// All `2n` elements, rotations first. Only sensible for small `n`.
    pub fn elements(&self) -> Vec<DihedralElement> {
        let rot = (0..self.n).map(DihedralElement::rotation);
        let refl = (0..self.n).map(DihedralElement::reflection);
        rot.chain(refl).collect()
    }

    fn check(&self, e: &DihedralElement) -> Result<(), PermError> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(PermError::NotInGroup(e.to_string()))
        }
    }
}

impl GroupModel for DihedralGroup {
    type Element = DihedralElement;

    fn label(&self) -> Option<GroupLabel> {
        Some(GroupLabel::Dihedral(self.n))
    }

    fn order(&self) -> u64 {
        2 * self.n
    }

    fn contains(&self, e: &DihedralElement) -> bool {
        e.rotation < self.n
    }

    fn multiply(&self, a: &DihedralElement, b: &DihedralElement) -> DihedralElement {
        // r^a s^f r^b s^g = r^(a + (-1)^f b) s^(f+g)
        let n = self.n as u128;
        let b_rot = if a.flip { (n - b.rotation as u128) % n } else { b.rotation as u128 };
        DihedralElement {
            rotation: ((a.rotation as u128 + b_rot) % n) as u64,
            flip: a.flip ^ b.flip,
        }
    }

    fn inverse(&self, a: &DihedralElement) -> DihedralElement {
        if a.flip {
            *a
        } else {
            DihedralElement::rotation((self.n - a.rotation) % self.n)
        }
    }

    fn element_order(&self, e: &DihedralElement) -> u64 {
        if e.flip {
            2
        } else {
            self.n / self.n.gcd(&e.rotation)
        }
    }

    fn subgroup_order(&self, gens: &[DihedralElement]) -> Result<u64, PermError> {
        let mut d = self.n;
        let mut first_flip: Option<u64> = None;
        for g in gens {
            self.check(g)?;
            if g.flip {
                match first_flip {
                    None => first_flip = Some(g.rotation),
                    Some(a0) => {
                        let diff = (g.rotation + self.n - a0) % self.n;
                        d = d.gcd(&diff);
                    }
                }
            } else {
                d = d.gcd(&g.rotation);
            }
        }
        let rotations = self.n / d;
        Ok(if first_flip.is_some() { 2 * rotations } else { rotations })
    }

    fn index2_subgroup_containing(&self, c: &DihedralElement, x: &DihedralElement) -> Result<bool, PermError> {
        self.check(c)?;
        self.check(x)?;
        let mut characters: Vec<Box<dyn Fn(&DihedralElement) -> bool>> = vec![Box::new(|e| e.flip)];
        if self.n.is_multiple_of(2) {
            characters.push(Box::new(|e| e.rotation % 2 == 1));
            characters.push(Box::new(|e| (e.rotation % 2 == 1) ^ e.flip));
        }
        Ok(characters.iter().any(|chi| !chi(c) && chi(x)))
    }
}
