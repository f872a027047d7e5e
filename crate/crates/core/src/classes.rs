//! Conjugacy classes by a conjugation-orbit sweep over the element list.

use crate::error::Result;
use crate::group::{ElementIndex, PermGroup};
use crate::perm::Permutation;

/// Classes of an enumerated group. Class 0 is the identity; the other
/// classes are ordered by the least rank among their members.
#[derive(Clone, Debug)]
pub struct ConjugacyClassSet {
    reps: Vec<Permutation>,
    sizes: Vec<u64>,
    rep_orders: Vec<u64>,
    class_of: Vec<u32>,
    members: Vec<Vec<u32>>,
    power_map: Vec<Vec<u32>>,
}

/// A group together with its element list and conjugacy classes.
#[derive(Clone, Debug)]
pub struct ClassedGroup {
    pub group: PermGroup,
    pub elements: ElementIndex,
    pub classes: ConjugacyClassSet,
}

impl ClassedGroup {
    pub fn new(group: PermGroup, cap: u64) -> Result<Self> {
        let elements = group.enumerate(cap)?;
        let classes = ConjugacyClassSet::compute(&group, &elements);
        Ok(ClassedGroup {
            group,
            elements,
            classes,
        })
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// Class index of a member, `None` for non-members.
    pub fn class_of(&self, p: &Permutation) -> Option<usize> {
        self.group.rank(p).map(|r| self.classes.class_of_id(r))
    }
}

impl ConjugacyClassSet {
    pub fn compute(group: &PermGroup, elements: &ElementIndex) -> Self {
        let n = elements.len();
        let mut class_of = vec![u32::MAX; n];
        let mut members: Vec<Vec<u32>> = Vec::new();
        let gens = group.generators();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = members.len() as u32;
            class_of[start] = c;
            let mut orbit = vec![start as u32];
            let mut head = 0;
            while head < orbit.len() {
                let g = elements.get(orbit[head] as usize);
                head += 1;
                for x in gens {
                    let h = g.conjugate_by(x);
                    let r = group.rank(&h).expect("conjugate of a member is a member");
                    if class_of[r] == u32::MAX {
                        class_of[r] = c;
                        orbit.push(r as u32);
                    }
                }
            }
            orbit.sort_unstable();
            members.push(orbit);
        }

        let reps: Vec<Permutation> = members
            .iter()
            .map(|m| elements.get(m[0] as usize).clone())
            .collect();
        let sizes = members.iter().map(|m| m.len() as u64).collect();
        let rep_orders: Vec<u64> = reps.iter().map(|r| r.order()).collect();
        let power_map = reps
            .iter()
            .zip(&rep_orders)
            .map(|(r, &m)| {
                let mut row = Vec::with_capacity(m as usize);
                let mut acc = group.identity();
                for _ in 0..m {
                    row.push(class_of[group.rank(&acc).expect("power of a member")]);
                    acc = acc.compose(r);
                }
                row
            })
            .collect();
        ConjugacyClassSet {
            reps,
            sizes,
            rep_orders,
            class_of,
            members,
            power_map,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn rep(&self, i: usize) -> &Permutation {
        &self.reps[i]
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn size(&self, i: usize) -> u64 {
        self.sizes[i]
    }

    /// Order of the elements of class `i`.
    pub fn element_order(&self, i: usize) -> u64 {
        self.rep_orders[i]
    }

    /// Class of the element with the given rank.
    pub fn class_of_id(&self, id: usize) -> usize {
        self.class_of[id] as usize
    }

    /// Element ranks in class `i`, ascending.
    pub fn members(&self, i: usize) -> &[u32] {
        &self.members[i]
    }

    /// Class containing the `exp`-th power of the elements of class `i`.
    pub fn power(&self, i: usize, exp: u64) -> usize {
        let row = &self.power_map[i];
        row[(exp % row.len() as u64) as usize] as usize
    }

    /// Class of inverses.
    pub fn inverse_class(&self, i: usize) -> usize {
        let m = self.rep_orders[i];
        self.power(i, m - 1)
    }

    /// Exponent of the group: lcm of element orders.
    pub fn exponent(&self) -> u64 {
        self.rep_orders
            .iter()
            .fold(1, |acc, &m| crate::primes::lcm(acc, m))
    }

    pub fn is_abelian(&self) -> bool {
        self.sizes.iter().all(|&s| s == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ENUM_CAP;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn group(n: usize, gens: &[&str]) -> ClassedGroup {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse(s, n).unwrap())
            .collect();
        ClassedGroup::new(PermGroup::new(n, gens).unwrap(), DEFAULT_ENUM_CAP).unwrap()
    }

    /// Class sizes by brute force: the set of all conjugates of each element.
    fn brute_force_sizes(g: &ClassedGroup) -> Vec<u64> {
        let all = g.elements.elements();
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut sizes = Vec::new();
        for x in all {
            if seen.contains(x) {
                continue;
            }
            let class: HashSet<Permutation> = all.iter().map(|y| x.conjugate_by(y)).collect();
            sizes.push(class.len() as u64);
            seen.extend(class);
        }
        sizes.sort();
        sizes
    }

    fn sorted(v: &[u64]) -> Vec<u64> {
        let mut v = v.to_vec();
        v.sort();
        v
    }

    #[test]
    fn s3_classes() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(sorted(g.classes.sizes()), vec![1, 2, 3]);
        assert_eq!(sorted(g.classes.sizes()), brute_force_sizes(&g));
        assert_eq!(g.classes.size(0), 1);
        assert!(g.classes.rep(0).is_identity());
    }

    #[test]
    fn a5_classes() {
        let g = group(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        assert_eq!(sorted(g.classes.sizes()), vec![1, 12, 12, 15, 20]);
        assert_eq!(sorted(g.classes.sizes()), brute_force_sizes(&g));
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = group(7, &["(1 2 3 4)", "(5 6 7)"]);
        assert_eq!(g.classes.len(), 12);
        assert!(g.classes.is_abelian());
    }

    #[test]
    fn class_equation_and_power_map() {
        let g = group(6, &["(1 2 3 4 5 6)", "(1 2)"]);
        let c = &g.classes;
        assert_eq!(c.sizes().iter().sum::<u64>(), 720);
        for i in 0..c.len() {
            assert_eq!(720 % c.size(i), 0);
            assert_eq!(g.class_of(c.rep(i)), Some(i));
            assert_eq!(c.power(i, 1), i);
            assert_eq!(c.power(i, 0), 0);
            let m = c.element_order(i);
            for e in 0..m {
                assert_eq!(g.class_of(&c.rep(i).pow(e)), Some(c.power(i, e)));
            }
        }
    }

    #[test]
    fn class_map_is_conjugation_invariant() {
        let g = group(
            8,
            &["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)", "(1 8)(2 7)(3 6)(4 5)"],
        );
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = g.elements.len();
        for _ in 0..100 {
            let x = g.elements.get(rng.gen_range(0..n));
            let h = g.elements.get(rng.gen_range(0..n));
            assert_eq!(g.class_of(x), g.class_of(&x.conjugate_by(h)));
        }
    }
}
