//! Normal subgroups, quotients and the solvability predicates.
//!
//! Every normal subgroup is a union of conjugacy classes, so subgroups of an
//! enumerated group are compared through the set of classes they contain.

use serde::Serialize;

use crate::classes::ClassedGroup;
use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};
use crate::perm::Permutation;
use crate::primes::{gcd, is_power_of, prime_divisors};

/// A normal subgroup of an enumerated group.
#[derive(Clone, Debug)]
pub struct NormalSubgroup {
    group: PermGroup,
    classes: Vec<usize>,
}

impl NormalSubgroup {
    fn new(ambient: &ClassedGroup, group: PermGroup) -> Self {
        let classes = (0..ambient.classes.len())
            .filter(|&i| group.contains_unchecked(ambient.classes.rep(i)))
            .collect();
        NormalSubgroup { group, classes }
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn generators(&self) -> &[Permutation] {
        self.group.generators()
    }

    /// Indices of the ambient classes contained in the subgroup, ascending.
    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.group.contains_unchecked(p)
    }

    pub fn contains_class(&self, i: usize) -> bool {
        self.classes.binary_search(&i).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.group.is_abelian()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Proper-or-equal containment.
    pub fn is_contained_in(&self, other: &NormalSubgroup) -> bool {
        self.classes.iter().all(|&c| other.contains_class(c))
    }
}

impl PartialEq for NormalSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.classes == other.classes
    }
}

impl Eq for NormalSubgroup {}

/// Smallest subgroup of `ambient` containing `seeds` and normalized by the
/// generators of `ambient`. Seeds are assumed to be members.
pub fn normal_closure_in(ambient: &PermGroup, seeds: &[Permutation]) -> PermGroup {
    let degree = ambient.degree();
    let mut gens: Vec<Permutation> = Vec::new();
    for s in seeds {
        if !s.is_identity() && !gens.contains(s) {
            gens.push(s.clone());
        }
    }
    let mut sub = PermGroup::new(degree, gens.clone()).expect("degrees checked");
    loop {
        let mut grew = false;
        'scan: for h in sub.generators().to_vec() {
            for x in ambient.generators() {
                let c = h.conjugate_by(x);
                if !sub.contains_unchecked(&c) {
                    gens.push(c);
                    sub = PermGroup::new(degree, gens.clone()).expect("degrees checked");
                    grew = true;
                    break 'scan;
                }
            }
        }
        if !grew {
            return sub;
        }
    }
}

/// Normal closure of `seeds` in `g`.
pub fn normal_closure(g: &ClassedGroup, seeds: &[Permutation]) -> Result<NormalSubgroup> {
    for s in seeds {
        if !g.group.contains(s)? {
            return Err(Error::NotAMember);
        }
    }
    Ok(NormalSubgroup::new(g, normal_closure_in(&g.group, seeds)))
}

pub fn center(g: &ClassedGroup) -> NormalSubgroup {
    let gens: Vec<Permutation> = (0..g.classes.len())
        .filter(|&i| g.classes.size(i) == 1)
        .map(|i| g.classes.rep(i).clone())
        .collect();
    let sub = PermGroup::new(g.group.degree(), gens).expect("degrees checked");
    NormalSubgroup::new(g, sub)
}

/// The normal closures of every class representative of an enumerated
/// group, computed once and shared by the structural queries.
#[derive(Clone, Debug)]
pub struct ClassClosures {
    closures: Vec<NormalSubgroup>,
}

impl ClassClosures {
    pub fn new(g: &ClassedGroup) -> Self {
        let closures = g
            .classes
            .reps()
            .iter()
            .map(|r| NormalSubgroup::new(g, normal_closure_in(&g.group, std::slice::from_ref(r))))
            .collect();
        ClassClosures { closures }
    }

    /// `<x^G>` for a representative `x` of class `i`.
    pub fn of_class(&self, i: usize) -> &NormalSubgroup {
        &self.closures[i]
    }

    /// Inclusion-minimal nontrivial class closures, which are exactly the
    /// minimal normal subgroups. Sorted by order, then by class set.
    pub fn minimal_normal_subgroups(&self) -> Vec<NormalSubgroup> {
        let nontrivial: Vec<&NormalSubgroup> =
            self.closures.iter().filter(|n| !n.is_trivial()).collect();
        let mut out: Vec<NormalSubgroup> = Vec::new();
        for n in &nontrivial {
            let minimal = nontrivial
                .iter()
                .all(|m| !(m.is_contained_in(n) && m.classes.len() < n.classes.len()));
            if minimal && !out.contains(n) {
                out.push((*n).clone());
            }
        }
        out.sort_by(|a, b| a.order().cmp(&b.order()).then(a.classes.cmp(&b.classes)));
        out
    }

    /// Largest normal `p`-subgroup `O_p(G)`.
    pub fn p_core(&self, g: &ClassedGroup, p: u64) -> NormalSubgroup {
        let gens: Vec<Permutation> = (1..g.classes.len())
            .filter(|&i| {
                is_power_of(g.classes.element_order(i), p)
                    && is_power_of(self.closures[i].order(), p)
            })
            .map(|i| g.classes.rep(i).clone())
            .collect();
        NormalSubgroup::new(g, normal_closure_in(&g.group, &gens))
    }

    /// Fitting subgroup as the join of the `p`-cores.
    pub fn fitting_subgroup(&self, g: &ClassedGroup) -> NormalSubgroup {
        let mut gens = Vec::new();
        for p in prime_divisors(g.order()) {
            gens.extend(self.p_core(g, p).generators().iter().cloned());
        }
        NormalSubgroup::new(g, normal_closure_in(&g.group, &gens))
    }
}

pub fn minimal_normal_subgroups(g: &ClassedGroup) -> Vec<NormalSubgroup> {
    ClassClosures::new(g).minimal_normal_subgroups()
}

pub fn fitting_subgroup(g: &ClassedGroup) -> NormalSubgroup {
    ClassClosures::new(g).fitting_subgroup(g)
}

pub fn is_normal(g: &PermGroup, n: &PermGroup) -> bool {
    n.generators().iter().all(|h| {
        g.generators()
            .iter()
            .all(|x| n.contains_unchecked(&h.conjugate_by(x)))
    })
}

/// `G/N` acting faithfully on the right cosets of `N`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: PermGroup,
    coset_of: Vec<u32>,
    coset_reps: Vec<Permutation>,
}

impl Quotient {
    pub fn index(&self) -> usize {
        self.coset_reps.len()
    }

    /// Coset (a point of the quotient action) containing the element of
    /// the given rank.
    pub fn coset_of_id(&self, id: usize) -> usize {
        self.coset_of[id] as usize
    }

    /// Image of a member of `G` in the quotient.
    pub fn project(&self, g: &ClassedGroup, x: &Permutation) -> Permutation {
        let images = self
            .coset_reps
            .iter()
            .map(|r| {
                let id = g.group.rank(&r.compose(x)).expect("member");
                self.coset_of[id]
            })
            .collect();
        Permutation::from_images_unchecked(images)
    }
}

pub fn quotient_group(g: &ClassedGroup, n: &NormalSubgroup, limits: &Limits) -> Result<Quotient> {
    if !is_normal(&g.group, &n.group) {
        return Err(Error::NotNormal);
    }
    let index = g.order() / n.order();
    if index > limits.quotient_cap {
        return Err(Error::QuotientCap {
            index,
            cap: limits.quotient_cap,
        });
    }
    let n_elements = n.group.enumerate(limits.enum_cap)?;
    let mut coset_of = vec![u32::MAX; g.elements.len()];
    let mut coset_reps = Vec::with_capacity(index as usize);
    for id in 0..g.elements.len() {
        if coset_of[id] != u32::MAX {
            continue;
        }
        let c = coset_reps.len() as u32;
        let x = g.elements.get(id);
        for h in n_elements.elements() {
            let r = g.group.rank(&h.compose(x)).expect("member");
            coset_of[r] = c;
        }
        coset_reps.push(x.clone());
    }
    debug_assert_eq!(coset_reps.len() as u64, index);
    let mut q = Quotient {
        group: PermGroup::trivial(index as usize),
        coset_of,
        coset_reps,
    };
    let gens = g
        .group
        .generators()
        .iter()
        .map(|x| q.project(g, x))
        .filter(|p| !p.is_identity())
        .collect();
    q.group = PermGroup::new(index as usize, gens)?;
    debug_assert_eq!(q.group.order(), index);
    Ok(q)
}

/// Outcome of the `p`-nilpotency test.
#[derive(Clone, Debug)]
pub struct PNilpotency {
    pub is_p_nilpotent: bool,
    /// Normal closure of the `p'`-elements; the normal `p`-complement when
    /// `is_p_nilpotent` holds.
    pub complement: NormalSubgroup,
}

pub fn p_nilpotency(g: &ClassedGroup, p: u64) -> PNilpotency {
    let gens: Vec<Permutation> = (0..g.classes.len())
        .filter(|&i| gcd(g.classes.element_order(i), p) == 1)
        .map(|i| g.classes.rep(i).clone())
        .collect();
    let complement = NormalSubgroup::new(g, normal_closure_in(&g.group, &gens));
    PNilpotency {
        is_p_nilpotent: complement.order() % p != 0,
        complement,
    }
}

pub fn is_p_nilpotent(g: &ClassedGroup, p: u64) -> bool {
    p_nilpotency(g, p).is_p_nilpotent
}

/// When `G` is `p`-nilpotent with complement `K`, a Sylow `p`-subgroup is
/// isomorphic to `G/K`; it is abelian exactly when `G' <= K`.
pub fn has_abelian_sylow_via_complement(g: &ClassedGroup, complement: &NormalSubgroup) -> bool {
    let gens = g.group.generators();
    gens.iter().enumerate().all(|(i, a)| {
        gens[i + 1..]
            .iter()
            .all(|b| complement.contains(&a.commutator(b)))
    })
}

/// A factor `N` of the chief series traced by repeatedly quotienting out a
/// minimal normal subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChiefFactor {
    pub order: u64,
    pub is_abelian: bool,
}

/// Chief factors, bottom up. Fails when a quotient or an enumeration
/// exceeds the limits; callers report that as indeterminate.
pub fn chief_factors(g: &ClassedGroup, limits: &Limits) -> Result<Vec<ChiefFactor>> {
    let mut out = Vec::new();
    let mut current = g.clone();
    while current.order() > 1 {
        let minimal = minimal_normal_subgroups(&current);
        let n = &minimal[0];
        out.push(ChiefFactor {
            order: n.order(),
            is_abelian: n.is_abelian(),
        });
        let q = quotient_group(&current, n, limits)?;
        current = ClassedGroup::new(q.group, limits.enum_cap)?;
    }
    Ok(out)
}

/// Every chief factor is a `p`-group or a `p'`-group.
pub fn is_p_solvable(g: &ClassedGroup, p: u64, limits: &Limits) -> Result<bool> {
    if g.order() % p != 0 {
        return Ok(true);
    }
    let mut current = g.clone();
    while current.order() > 1 {
        let minimal = minimal_normal_subgroups(&current);
        let n = &minimal[0];
        if !n.is_abelian() && n.order() % p == 0 {
            return Ok(false);
        }
        let q = quotient_group(&current, n, limits)?;
        current = ClassedGroup::new(q.group, limits.enum_cap)?;
    }
    Ok(true)
}

pub fn p_solvable_from_factors(factors: &[ChiefFactor], p: u64) -> bool {
    factors.iter().all(|f| f.is_abelian || f.order % p != 0)
}

/// Orders of `G >= G' >= G'' >= ...`, ending at the first repeated order
/// (a perfect term) or at 1.
pub fn derived_series(g: &PermGroup) -> Vec<u64> {
    let mut orders = vec![g.order()];
    let mut current = g.clone();
    while current.order() > 1 {
        let gens = current.generators();
        let mut commutators = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                commutators.push(a.commutator(b));
            }
        }
        let next = normal_closure_in(&current, &commutators);
        let done = next.order() == current.order();
        orders.push(next.order());
        if done {
            break;
        }
        current = next;
    }
    orders
}

pub fn is_solvable(g: &PermGroup) -> bool {
    derived_series(g).last() == Some(&1)
}

/// Per-prime structural flags. `None` marks an outcome the limits did not
/// allow to be decided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeFlags {
    pub prime: u64,
    pub p_nilpotent: bool,
    pub p_solvable: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalNormalSummary {
    pub order: u64,
    pub is_abelian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub fitting_order: u64,
    pub center_order: u64,
    pub minimal_normals: Vec<MinimalNormalSummary>,
    pub derived_series: Vec<u64>,
    pub is_solvable: bool,
    pub chief_factors: Option<Vec<ChiefFactor>>,
    pub primes: Vec<PrimeFlags>,
}

pub fn structure_report(
    g: &ClassedGroup,
    closures: &ClassClosures,
    limits: &Limits,
) -> StructureReport {
    let minimal = closures.minimal_normal_subgroups();
    let derived = derived_series(&g.group);
    let factors = chief_factors(g, limits).ok();
    let primes = prime_divisors(g.order())
        .into_iter()
        .map(|p| PrimeFlags {
            prime: p,
            p_nilpotent: is_p_nilpotent(g, p),
            p_solvable: factors.as_ref().map(|f| p_solvable_from_factors(f, p)),
        })
        .collect();
    StructureReport {
        fitting_order: closures.fitting_subgroup(g).order(),
        center_order: center(g).order(),
        minimal_normals: minimal
            .iter()
            .map(|n| MinimalNormalSummary {
                order: n.order(),
                is_abelian: n.is_abelian(),
            })
            .collect(),
        is_solvable: derived.last() == Some(&1),
        derived_series: derived,
        chief_factors: factors,
        primes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ENUM_CAP;

    fn group(n: usize, gens: &[&str]) -> ClassedGroup {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse(s, n).unwrap())
            .collect();
        ClassedGroup::new(PermGroup::new(n, gens).unwrap(), DEFAULT_ENUM_CAP).unwrap()
    }

    fn s3() -> ClassedGroup {
        group(3, &["(1 2)", "(1 2 3)"])
    }
    fn s4() -> ClassedGroup {
        group(4, &["(1 2 3 4)", "(1 2)"])
    }
    fn a5() -> ClassedGroup {
        group(5, &["(1 2 3 4 5)", "(3 4 5)"])
    }
    fn d8() -> ClassedGroup {
        group(4, &["(1 2 3 4)", "(1 3)"])
    }
    fn s3_x_a5() -> ClassedGroup {
        group(8, &["(1 2)", "(1 2 3)", "(4 5 6 7 8)", "(6 7 8)"])
    }

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn centers() {
        assert_eq!(center(&s3()).order(), 1);
        assert_eq!(center(&group(6, &["(1 2 3 4 5 6)"])).order(), 6);
        assert_eq!(center(&d8()).order(), 2);
    }

    #[test]
    fn normal_closures() {
        let g = s3();
        assert_eq!(
            normal_closure(&g, &[perm("(1 2 3)", 3)]).unwrap().order(),
            3
        );
        assert_eq!(normal_closure(&g, &[perm("(1 2)", 3)]).unwrap().order(), 6);
        assert_eq!(normal_closure(&g, &[]).unwrap().order(), 1);
        let a = a5();
        assert!(matches!(
            normal_closure(&a, &[perm("(1 2)", 5)]),
            Err(Error::NotAMember)
        ));
    }

    #[test]
    fn minimal_normals() {
        let m = minimal_normal_subgroups(&s3_x_a5());
        let summary: Vec<(u64, bool)> = m.iter().map(|n| (n.order(), n.is_abelian())).collect();
        assert_eq!(summary, vec![(3, true), (60, false)]);

        let m = minimal_normal_subgroups(&a5());
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 60);

        let m = minimal_normal_subgroups(&group(4, &["(1 2)", "(3 4)"]));
        assert_eq!(
            m.iter().map(|n| n.order()).collect::<Vec<_>>(),
            vec![2, 2, 2]
        );
    }

    #[test]
    fn minimal_normals_are_minimal() {
        for g in [
            s4(),
            s3_x_a5(),
            d8(),
            group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]),
        ] {
            let closures = ClassClosures::new(&g);
            let m = closures.minimal_normal_subgroups();
            for n in &m {
                for other in &m {
                    if other != n {
                        assert!(!other.is_contained_in(n));
                    }
                }
                for &c in n.classes() {
                    if c != 0 {
                        assert_eq!(closures.of_class(c), n);
                    }
                }
            }
        }
    }

    #[test]
    fn fitting() {
        assert_eq!(fitting_subgroup(&a5()).order(), 1);
        assert_eq!(fitting_subgroup(&s4()).order(), 4);
        assert_eq!(fitting_subgroup(&d8()).order(), 8);
        assert_eq!(fitting_subgroup(&s3_x_a5()).order(), 3);
    }

    #[test]
    fn fitting_is_nilpotent_and_normal() {
        for g in [
            s4(),
            s3_x_a5(),
            d8(),
            group(6, &["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"]),
        ] {
            let f = fitting_subgroup(&g);
            assert!(is_normal(&g.group, f.group()));
            assert!(is_solvable(f.group()));
            let fg = ClassedGroup::new(f.group().clone(), DEFAULT_ENUM_CAP).unwrap();
            let inner = fitting_subgroup(&fg);
            assert_eq!(inner.order(), f.order());
            assert_eq!(f.order() % center(&g).order(), 0);
        }
    }

    #[test]
    fn quotients() {
        let limits = Limits::default();
        let g = s4();
        let klein = normal_closure(&g, &[perm("(1 2)(3 4)", 4)]).unwrap();
        assert_eq!(klein.order(), 4);
        let q = quotient_group(&g, &klein, &limits).unwrap();
        assert_eq!(q.group.order(), 6);
        assert_eq!(q.group.degree(), 6);
        assert!(!q.group.is_abelian());

        let whole = normal_closure(&g, &[perm("(1 2)", 4)]).unwrap();
        assert_eq!(
            quotient_group(&g, &whole, &limits).unwrap().group.order(),
            1
        );

        let g = s3_x_a5();
        let a5 = &minimal_normal_subgroups(&g)[1];
        assert_eq!(quotient_group(&g, a5, &limits).unwrap().group.order(), 6);

        let tight = Limits {
            quotient_cap: 5,
            ..limits
        };
        assert!(matches!(
            quotient_group(&g, a5, &tight),
            Err(Error::QuotientCap { index: 6, cap: 5 })
        ));
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = s4();
        let sub = PermGroup::new(4, vec![perm("(1 2)", 4)]).unwrap();
        let n = NormalSubgroup::new(&g, sub);
        assert!(matches!(
            quotient_group(&g, &n, &Limits::default()),
            Err(Error::NotNormal)
        ));
    }

    #[test]
    fn quotient_class_sizes_divide_preimage_sizes() {
        let limits = Limits::default();
        let g = s3_x_a5();
        for n in minimal_normal_subgroups(&g) {
            let q = quotient_group(&g, &n, &limits).unwrap();
            let qg = ClassedGroup::new(q.group.clone(), limits.enum_cap).unwrap();
            for i in 0..g.classes.len() {
                let image = q.project(&g, g.classes.rep(i));
                let j = qg.class_of(&image).unwrap();
                assert_eq!(g.classes.size(i) % qg.classes.size(j), 0);
            }
        }
    }

    #[test]
    fn p_nilpotency_examples() {
        let g = s3();
        let r = p_nilpotency(&g, 2);
        assert!(r.is_p_nilpotent);
        assert_eq!(r.complement.order(), 3);
        assert!(!is_p_nilpotent(&g, 3));
        assert!(!is_p_nilpotent(&a5(), 2));
        let c = group(6, &["(1 2 3 4 5 6)"]);
        for p in [2, 3, 5] {
            assert!(is_p_nilpotent(&c, p));
        }
    }

    #[test]
    fn p_solvability() {
        let limits = Limits::default();
        assert!(is_p_solvable(&s4(), 2, &limits).unwrap());
        assert!(!is_p_solvable(&a5(), 5, &limits).unwrap());
        assert!(is_p_solvable(&a5(), 7, &limits).unwrap());
        let g = s3_x_a5();
        let factors = chief_factors(&g, &limits).unwrap();
        assert_eq!(factors.iter().map(|f| f.order).product::<u64>(), 360);
        for p in [2, 3, 5, 7] {
            assert_eq!(
                is_p_solvable(&g, p, &limits).unwrap(),
                p_solvable_from_factors(&factors, p)
            );
        }
    }

    #[test]
    fn derived_series_examples() {
        assert_eq!(derived_series(&s4().group), vec![24, 12, 4, 1]);
        assert_eq!(derived_series(&a5().group), vec![60, 60]);
        assert!(!is_solvable(&a5().group));
        assert_eq!(
            derived_series(&group(6, &["(1 2 3 4 5 6)"]).group),
            vec![6, 1]
        );
    }

    #[test]
    fn solvable_iff_p_solvable_for_all_primes() {
        let limits = Limits::default();
        for g in [s3(), s4(), a5(), d8(), s3_x_a5()] {
            let all = prime_divisors(g.order())
                .into_iter()
                .all(|p| is_p_solvable(&g, p, &limits).unwrap());
            assert_eq!(all, is_solvable(&g.group));
        }
    }

    #[test]
    fn coprime_primes_are_trivially_fine() {
        let limits = Limits::default();
        for g in [s3(), a5(), s4()] {
            for p in [7u64, 11, 13] {
                assert!(is_p_nilpotent(&g, p));
                assert!(is_p_solvable(&g, p, &limits).unwrap());
            }
        }
    }
}
