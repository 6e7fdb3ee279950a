use std::collections::{HashMap, HashSet, VecDeque};

use super::{GroupLabel, GroupModel, PermError, Permutation};

/// Largest degree `closure` accepts unless a different bound is passed.
pub const DEFAULT_DEGREE_BOUND: usize = 16;

/// A permutation group with all of its elements listed.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    /// Sorted lexicographically on images; `elements[0]` is the identity.
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    label: Option<GroupLabel>,
}

pub fn closure(degree: usize, generators: &[Permutation]) -> Result<FiniteGroup, PermError> {
    closure_with_bound(degree, generators, DEFAULT_DEGREE_BOUND)
}

pub fn closure_with_bound(
    degree: usize,
    generators: &[Permutation],
    bound: usize,
) -> Result<FiniteGroup, PermError> {
    if degree > bound {
        return Err(PermError::DegreeTooLarge { degree, bound });
    }
    for g in generators {
        if g.degree() != degree {
            return Err(PermError::DegreeMismatch(degree, g.degree()));
        }
    }
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(e) = queue.pop_front() {
        for g in generators {
            let next = e.compose_unchecked(g);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    Ok(FiniteGroup {
        degree,
        generators: generators.to_vec(),
        elements,
        index,
        label: None,
    })
}

/// Canonical permutation realization of a labelled group.
pub fn standard_group(label: GroupLabel) -> Result<FiniteGroup, PermError> {
    standard_group_with_bound(label, DEFAULT_DEGREE_BOUND)
}

pub fn standard_group_with_bound(label: GroupLabel, bound: usize) -> Result<FiniteGroup, PermError> {
    let (degree, gens): (usize, Vec<Permutation>) = match label {
        GroupLabel::A4 => (4, vec![Permutation::parse(4, "(12)(34)")?, Permutation::parse(4, "(123)")?]),
        GroupLabel::S4 => (4, vec![Permutation::parse(4, "(12)")?, Permutation::parse(4, "(1234)")?]),
        GroupLabel::A5 => (5, vec![Permutation::parse(5, "(123)")?, Permutation::parse(5, "(12345)")?]),
        GroupLabel::Cyclic(n) => {
            let n = checked_degree(n, bound)?;
            (n.max(1), vec![n_cycle(n.max(1))])
        }
        GroupLabel::Dihedral(n) => match n {
            0 => return Err(PermError::Unsupported("D0".into())),
            1 => (2, vec![Permutation::parse(2, "(12)")?]),
            2 => (4, vec![Permutation::parse(4, "(12)(34)")?, Permutation::parse(4, "(13)(24)")?]),
            _ => {
                let n = checked_degree(n, bound)?;
                // reflection i -> n - i (mod n), fixing the point n
                let flip: Vec<usize> = (1..=n).map(|i| if i == n { n } else { n - i }).collect();
                (n, vec![n_cycle(n), Permutation::from_images(&flip)?])
            }
        },
    };
    let mut g = closure_with_bound(degree, &gens, bound)?;
    debug_assert_eq!(g.order() as u64, label.order());
    g.label = Some(label);
    Ok(g)
}

fn checked_degree(n: u64, bound: usize) -> Result<usize, PermError> {
    if n as usize > bound || n == 0 {
        return Err(PermError::DegreeTooLarge { degree: n as usize, bound });
    }
    Ok(n as usize)
}

fn n_cycle(n: usize) -> Permutation {
    let images: Vec<usize> = (1..=n).map(|i| i % n + 1).collect();
    Permutation::from_images(&images).expect("n-cycle is a bijection")
}

impl FiniteGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn label(&self) -> Option<GroupLabel> {
        self.label
    }

    pub fn with_label(mut self, label: GroupLabel) -> Self {
        self.label = Some(label);
        self
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    fn require(&self, p: &Permutation) -> Result<usize, PermError> {
        self.index_of(p).ok_or_else(|| PermError::NotInGroup(p.to_string()))
    }

    pub fn elements_of_order(&self, k: u64) -> Vec<Permutation> {
        self.elements.iter().filter(|e| e.order() == k).cloned().collect()
    }

    /// Parses an element in cycle notation at this group's degree.
    pub fn parse_element(&self, text: &str) -> Result<Permutation, PermError> {
        let p = Permutation::parse(self.degree, text)?;
        self.require(&p)?;
        Ok(p)
    }

    /// `[G : <sub_generators>]`.
    pub fn subgroup_index(&self, sub_generators: &[Permutation]) -> Result<usize, PermError> {
        for s in sub_generators {
            self.require(s)?;
        }
        let sub = closure_with_bound(self.degree, sub_generators, usize::MAX)?;
        Ok(self.order() / sub.order())
    }

    /// Extends `generators[i] -> gen_images[i]` to a map on all of `G`,
    /// indexed like `elements()`. Returns `None` when the assignment does not
    /// define a homomorphism.
    pub fn extend_homomorphism<T, F>(&self, gen_images: &[T], identity: T, op: F) -> Option<Vec<T>>
    where
        T: Clone + PartialEq,
        F: Fn(&T, &T) -> T,
    {
        assert_eq!(gen_images.len(), self.generators.len());
        let mut map: Vec<Option<T>> = vec![None; self.order()];
        map[0] = Some(identity);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let image = map[i].clone().expect("queued elements are mapped");
            for (g, g_img) in self.generators.iter().zip(gen_images) {
                let j = self.index[&self.elements[i].compose_unchecked(g)];
                let value = op(&image, g_img);
                match &map[j] {
                    Some(existing) if *existing != value => return None,
                    Some(_) => {}
                    None => {
                        map[j] = Some(value);
                        queue.push_back(j);
                    }
                }
            }
        }
        map.into_iter().collect()
    }

    /// All surjections onto Z/2, as parity vectors indexed like `elements()`.
    fn parity_characters(&self) -> Vec<Vec<bool>> {
        let k = self.generators.len();
        assert!(k < 20, "too many generators for character search");
        let mut out = Vec::new();
        for mask in 1u32..(1 << k) {
            let bits: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
            if let Some(chi) = self.extend_homomorphism(&bits, false, |a, b| a ^ b) {
                if chi.iter().any(|&b| b) && !out.contains(&chi) {
                    out.push(chi);
                }
            }
        }
        out
    }

    /// Index-2 subgroups, each as a sorted element list.
    pub fn index2_subgroups(&self) -> Vec<Vec<Permutation>> {
        self.parity_characters()
            .into_iter()
            .map(|chi| {
                self.elements
                    .iter()
                    .zip(&chi)
                    .filter(|(_, &odd)| !odd)
                    .map(|(e, _)| e.clone())
                    .collect()
            })
            .collect()
    }

    /// True iff some subgroup `H` with `[G:H] = 2` has `must_contain ∈ H` and `must_exclude ∉ H`.
    pub fn index2_subgroup_containing(
        &self,
        must_contain: &Permutation,
        must_exclude: &Permutation,
    ) -> Result<bool, PermError> {
        let c = self.require(must_contain)?;
        let x = self.require(must_exclude)?;
        Ok(self.parity_characters().iter().any(|chi| !chi[c] && chi[x]))
    }

    /// Conjugacy class of `p` inside this group.
    pub fn conjugacy_class(&self, p: &Permutation) -> Vec<Permutation> {
        let mut class: Vec<Permutation> = self.elements.iter().map(|c| p.conjugate_by(c)).collect();
        class.sort();
        class.dedup();
        class
    }

    pub fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|a| self.contains(&a.inverse()) && self.generators.iter().all(|g| self.contains(&a.compose_unchecked(g))))
    }
}

impl GroupModel for FiniteGroup {
    type Element = Permutation;

    fn label(&self) -> Option<GroupLabel> {
        self.label
    }

    fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    fn contains(&self, e: &Permutation) -> bool {
        FiniteGroup::contains(self, e)
    }

    fn multiply(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.compose_unchecked(b)
    }

    fn inverse(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }

    fn element_order(&self, e: &Permutation) -> u64 {
        e.order()
    }

    fn subgroup_order(&self, gens: &[Permutation]) -> Result<u64, PermError> {
        Ok((FiniteGroup::order(self) / FiniteGroup::subgroup_index(self, gens)?) as u64)
    }

    fn index2_subgroup_containing(&self, c: &Permutation, x: &Permutation) -> Result<bool, PermError> {
        FiniteGroup::index2_subgroup_containing(self, c, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn closure_examples() {
        let a4 = closure(4, &[perm(4, "(12)(34)"), perm(4, "(123)")]).unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(closure(4, &[Permutation::identity(4)]).unwrap().order(), 1);
        assert_eq!(closure(4, &[]).unwrap().order(), 1);
        let d5 = closure(5, &[perm(5, "(14)(23)"), perm(5, "(12345)")]).unwrap();
        assert_eq!(d5.order(), 10);
    }

    #[test]
    fn closure_respects_degree_bound() {
        let gens = [Permutation::identity(20)];
        assert!(matches!(closure(20, &gens), Err(PermError::DegreeTooLarge { .. })));
        assert!(closure_with_bound(20, &gens, 24).is_ok());
    }

    #[test]
    fn standard_groups_have_expected_orders() {
        for (label, order) in [
            (GroupLabel::A4, 12),
            (GroupLabel::S4, 24),
            (GroupLabel::A5, 60),
            (GroupLabel::Cyclic(1), 1),
            (GroupLabel::Cyclic(7), 7),
            (GroupLabel::Dihedral(1), 2),
            (GroupLabel::Dihedral(2), 4),
            (GroupLabel::Dihedral(4), 8),
            (GroupLabel::Dihedral(9), 18),
        ] {
            let g = standard_group(label).unwrap();
            assert_eq!(g.order(), order, "{label}");
            assert!(g.is_closed());
            assert_eq!(g.identity(), &Permutation::identity(g.degree()));
        }
        assert!(standard_group(GroupLabel::Dihedral(17)).is_err());
    }

    #[test]
    fn dihedral_four_is_generated_by_square_symmetries() {
        let d4 = closure(4, &[perm(4, "(1234)"), perm(4, "(13)")]).unwrap();
        assert_eq!(d4.order(), 8);
        let std = standard_group(GroupLabel::Dihedral(4)).unwrap();
        assert_eq!(d4.elements(), std.elements());
    }

    #[test]
    fn coset_indices() {
        let a5 = standard_group(GroupLabel::A5).unwrap();
        let a4 = standard_group(GroupLabel::A4).unwrap();
        assert_eq!(a5.subgroup_index(&[perm(5, "(12345)")]).unwrap(), 12);
        assert_eq!(a4.subgroup_index(&[perm(4, "(134)")]).unwrap(), 4);
        assert_eq!(a5.subgroup_index(a5.generators()).unwrap(), 1);
        assert!(matches!(
            a4.subgroup_index(&[perm(4, "(12)")]),
            Err(PermError::NotInGroup(_))
        ));
    }

    #[test]
    fn index_two_subgroups() {
        let s4 = standard_group(GroupLabel::S4).unwrap();
        assert!(s4.index2_subgroup_containing(&perm(4, "(134)"), &perm(4, "(12)")).unwrap());
        assert!(!s4.index2_subgroup_containing(&perm(4, "(1234)"), &perm(4, "(12)")).unwrap());
        assert_eq!(s4.index2_subgroups().len(), 1);

        for label in [GroupLabel::A4, GroupLabel::A5] {
            let g = standard_group(label).unwrap();
            assert!(g.index2_subgroups().is_empty());
            for a in g.elements() {
                for b in g.elements().iter().step_by(7) {
                    assert!(!g.index2_subgroup_containing(a, b).unwrap());
                }
            }
        }
        // D4 has three index-2 subgroups.
        assert_eq!(standard_group(GroupLabel::Dihedral(4)).unwrap().index2_subgroups().len(), 3);
        assert!(s4.index2_subgroup_containing(&perm(3, "(12)"), &perm(4, "(12)")).is_err());
    }

    #[test]
    fn conjugacy_classes_of_a4_split_three_cycles() {
        let a4 = standard_group(GroupLabel::A4).unwrap();
        let class = a4.conjugacy_class(&perm(4, "(123)"));
        assert_eq!(class.len(), 4);
        assert!(!class.contains(&perm(4, "(132)")));
        let a5 = standard_group(GroupLabel::A5).unwrap();
        assert_eq!(a5.conjugacy_class(&perm(5, "(123)")).len(), 20);
    }
}
