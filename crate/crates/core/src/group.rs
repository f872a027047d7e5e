//! Permutation groups given by generators, backed by a deterministic
//! Schreier–Sims base and strong generating set.

use std::collections::VecDeque;

use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the number of elements a group may have before
/// operations that need the full element list refuse to run.
pub const DEFAULT_ENUM_CAP: u64 = 200_000;

/// Default cap on the index of a normal subgroup whose quotient is built.
pub const DEFAULT_QUOTIENT_CAP: u64 = 10_000;

/// Size limits shared by all operations that enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub enum_cap: u64,
    pub quotient_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enum_cap: DEFAULT_ENUM_CAP,
            quotient_cap: DEFAULT_QUOTIENT_CAP,
        }
    }
}

impl Limits {
    /// Defaults, with the enumeration cap overridden by `VG_ENUM_CAP`.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(v) = std::env::var("VG_ENUM_CAP") {
            limits.enum_cap = v
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("VG_ENUM_CAP: not an integer: {v:?}")))?;
        }
        Ok(limits)
    }
}

const NOT_IN_ORBIT: u32 = u32::MAX;

/// Explicit transversal representatives are cached only below this size
/// (degree times orbit length); larger levels trace their Schreier vector.
const EXPLICIT_REP_BUDGET: usize = 1 << 16;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Permutation>,
    gens_inv: Vec<Permutation>,
    orbit: Vec<u32>,
    pos: Vec<u32>,
    // for each orbit point other than `point`: (generator index, parent point)
    edge: Vec<(u32, u32)>,
    reps_inv: Option<Vec<Permutation>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        Level {
            point,
            gens: Vec::new(),
            gens_inv: Vec::new(),
            orbit: Vec::new(),
            pos: vec![NOT_IN_ORBIT; degree],
            edge: vec![(0, 0); degree],
            reps_inv: None,
        }
    }

    fn push_gen(&mut self, g: Permutation) {
        self.gens_inv.push(g.inverse());
        self.gens.push(g);
    }

    fn rebuild_orbit(&mut self) {
        self.orbit.clear();
        self.pos.iter_mut().for_each(|p| *p = NOT_IN_ORBIT);
        self.reps_inv = None;
        self.orbit.push(self.point as u32);
        self.pos[self.point] = 0;
        let mut head = 0;
        while head < self.orbit.len() {
            let b = self.orbit[head] as usize;
            head += 1;
            for (k, g) in self.gens.iter().enumerate() {
                let c = g.apply(b);
                if self.pos[c] == NOT_IN_ORBIT {
                    self.pos[c] = self.orbit.len() as u32;
                    self.orbit.push(c as u32);
                    self.edge[c] = (k as u32, b as u32);
                }
            }
        }
    }

    fn in_orbit(&self, b: usize) -> bool {
        self.pos[b] != NOT_IN_ORBIT
    }

    /// `g * u_b^-1`, where `u_b` maps the level's base point to `b`.
    fn strip(&self, g: &Permutation, b: usize) -> Permutation {
        if let Some(reps) = &self.reps_inv {
            return g.compose(&reps[self.pos[b] as usize]);
        }
        let mut h = g.clone();
        let mut c = b;
        while c != self.point {
            let (k, parent) = self.edge[c];
            h = h.compose(&self.gens_inv[k as usize]);
            c = parent as usize;
        }
        h
    }

    /// `u_b`, mapping the base point to `b`.
    fn rep(&self, b: usize, degree: usize) -> Permutation {
        if let Some(reps) = &self.reps_inv {
            return reps[self.pos[b] as usize].inverse();
        }
        let mut path = Vec::new();
        let mut c = b;
        while c != self.point {
            let (k, parent) = self.edge[c];
            path.push(k as usize);
            c = parent as usize;
        }
        let mut u = Permutation::identity(degree);
        for &k in path.iter().rev() {
            u = u.compose(&self.gens[k]);
        }
        u
    }

    fn cache_reps(&mut self, degree: usize) {
        if degree * self.orbit.len() <= EXPLICIT_REP_BUDGET {
            let reps = self
                .orbit
                .iter()
                .map(|&b| self.rep(b as usize, degree).inverse())
                .collect();
            self.reps_inv = Some(reps);
        }
    }
}

/// A permutation group on `{1..degree}` together with its stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
    order: u64,
}

impl PermGroup {
    /// Builds the group generated by `generators` on `degree` points.
    ///
    /// An empty generator list gives the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let levels = schreier_sims(degree, &generators);
        let mut order: u64 = 1;
        for l in &levels {
            order = order
                .checked_mul(l.orbit.len() as u64)
                .ok_or_else(|| Error::Invalid("group order does not fit in 64 bits".into()))?;
        }
        Ok(PermGroup {
            degree,
            generators,
            levels,
            order,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Base points, 0-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Lengths of the fundamental orbits; their product is the order.
    pub fn fundamental_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Sifts `g`, returning the residue and the level where sifting stopped.
    fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        sift_from(&self.levels, g, 0)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(self.contains_unchecked(p))
    }

    pub(crate) fn contains_unchecked(&self, p: &Permutation) -> bool {
        let (h, j) = self.sift(p);
        j == self.levels.len() && h.is_identity()
    }

    /// Dense index of a member in `0..order`, or `None` for non-members.
    /// The identity has rank 0.
    pub fn rank(&self, p: &Permutation) -> Option<usize> {
        let mut g = p.clone();
        let mut rank = 0usize;
        let mut stride = 1usize;
        for level in &self.levels {
            let b = g.apply(level.point);
            if !level.in_orbit(b) {
                return None;
            }
            rank += level.pos[b] as usize * stride;
            stride *= level.orbit.len();
            g = level.strip(&g, b);
        }
        g.is_identity().then_some(rank)
    }

    /// Inverse of [`PermGroup::rank`].
    pub fn unrank(&self, mut rank: usize) -> Permutation {
        let mut factors = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            let len = level.orbit.len();
            factors.push(level.orbit[rank % len] as usize);
            rank /= len;
        }
        let mut g = self.identity();
        for (level, &b) in self.levels.iter().zip(&factors).rev() {
            g = g.compose(&level.rep(b, self.degree));
        }
        g
    }

    /// Uniformly random member.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let r = rng.gen_range(0..self.order.max(1)) as usize;
        self.unrank(r)
    }

    /// Lists all elements, indexed by rank.
    pub fn enumerate(&self, cap: u64) -> Result<ElementIndex> {
        if self.order > cap {
            return Err(Error::EnumerationCap {
                order: self.order,
                cap,
            });
        }
        let elements = (0..self.order as usize).map(|r| self.unrank(r)).collect();
        Ok(ElementIndex { elements })
    }

    /// Orbit of a 0-based point under the generators, in discovery order.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut out = vec![point];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        while let Some(b) = queue.pop_front() {
            for g in &self.generators {
                let c = g.apply(b);
                if !seen[c] {
                    seen[c] = true;
                    out.push(c);
                    queue.push_back(c);
                }
            }
        }
        out
    }

    /// All orbits, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if seen[p] {
                continue;
            }
            let mut o = self.orbit(p);
            o.sort_unstable();
            for &q in &o {
                seen[q] = true;
            }
            out.push(o);
        }
        out
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && other.order % self.order == 0
            && self.generators.iter().all(|g| other.contains_unchecked(g))
    }

    /// Equality as subgroups of the same symmetric group.
    pub fn same_subgroup(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }
}

/// All elements of a group, indexed by their rank in the stabilizer chain.
#[derive(Clone, Debug)]
pub struct ElementIndex {
    elements: Vec<Permutation>,
}

impl ElementIndex {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, id: usize) -> &Permutation {
        &self.elements[id]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }
}

fn sift_from(levels: &[Level], g: &Permutation, start: usize) -> (Permutation, usize) {
    let mut h = g.clone();
    for (j, level) in levels.iter().enumerate().skip(start) {
        let b = h.apply(level.point);
        if !level.in_orbit(b) {
            return (h, j);
        }
        h = level.strip(&h, b);
    }
    (h, levels.len())
}

fn schreier_sims(degree: usize, generators: &[Permutation]) -> Vec<Level> {
    let mut levels: Vec<Level> = Vec::new();
    let mut strong: Vec<Permutation> = Vec::new();
    for g in generators {
        if !g.is_identity() && !strong.contains(g) {
            strong.push(g.clone());
        }
    }
    for g in &strong {
        if levels.iter().all(|l| g.apply(l.point) == l.point) {
            levels.push(Level::new(g.first_moved().expect("non-identity"), degree));
        }
    }
    let base_points: Vec<usize> = levels.iter().map(|l| l.point).collect();
    for (i, level) in levels.iter_mut().enumerate() {
        for g in &strong {
            if base_points[..i].iter().all(|&b| g.apply(b) == b) {
                level.push_gen(g.clone());
            }
        }
        level.rebuild_orbit();
    }

    let mut i = levels.len();
    while i > 0 {
        let lvl = i - 1;
        let mut restart = None;
        'search: for oi in 0..levels[lvl].orbit.len() {
            let beta = levels[lvl].orbit[oi] as usize;
            for k in 0..levels[lvl].gens.len() {
                let level = &levels[lvl];
                let image = level.gens[k].apply(beta);
                // tree edges give trivial Schreier generators
                if level.edge[image] == (k as u32, beta as u32) && image != level.point {
                    continue;
                }
                let u_beta = level.rep(beta, degree);
                let s = level.strip(&u_beta.compose(&level.gens[k]), image);
                if s.is_identity() {
                    continue;
                }
                let (h, j) = sift_from(&levels, &s, lvl + 1);
                if j < levels.len() || !h.is_identity() {
                    if j == levels.len() {
                        levels.push(Level::new(h.first_moved().expect("non-identity"), degree));
                    }
                    for level in levels.iter_mut().take(j + 1).skip(lvl + 1) {
                        level.push_gen(h.clone());
                        level.rebuild_orbit();
                    }
                    restart = Some(j + 1);
                    break 'search;
                }
            }
        }
        match restart {
            Some(next) => i = next,
            None => i -= 1,
        }
    }
    for level in &mut levels {
        level.cache_reps(degree);
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    /// Brute-force closure under right multiplication by generators.
    fn closure_size(degree: usize, gens: &[Permutation]) -> usize {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let id = Permutation::identity(degree);
        seen.insert(id.clone());
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = x.compose(g);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn orders_match_closure() {
        let s3 = vec![p("(1 2)", 3), p("(1 2 3)", 3)];
        assert_eq!(closure_size(3, &s3), 6);
        assert_eq!(PermGroup::new(3, s3).unwrap().order(), 6);

        let a5 = vec![p("(1 2 3 4 5)", 5), p("(3 4 5)", 5)];
        assert_eq!(closure_size(5, &a5), 60);
        assert_eq!(PermGroup::new(5, a5).unwrap().order(), 60);

        assert_eq!(PermGroup::new(4, vec![]).unwrap().order(), 1);
    }

    #[test]
    fn larger_groups_match_closure() {
        let cases: Vec<(usize, Vec<&str>)> = vec![
            (7, vec!["(1 2 3 4 5 6 7)", "(1 2)"]),
            (8, vec!["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"]),
            (9, vec!["(1 2 3)(4 5 6)", "(1 4 7)(2 5 8)(3 6 9)", "(1 2)"]),
            (
                10,
                vec!["(1 2 3 4 5)", "(3 4 5)", "(6 7 8 9 10)", "(8 9 10)"],
            ),
        ];
        for (n, gens) in cases {
            let gens: Vec<_> = gens.iter().map(|s| p(s, n)).collect();
            let g = PermGroup::new(n, gens.clone()).unwrap();
            assert_eq!(g.order() as usize, closure_size(n, &gens), "{gens:?}");
        }
    }

    #[test]
    fn degree_mismatch() {
        assert!(matches!(
            PermGroup::new(4, vec![p("(1 2)", 3)]),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn membership() {
        let a5 = PermGroup::new(5, vec![p("(1 2 3 4 5)", 5), p("(3 4 5)", 5)]).unwrap();
        assert!(a5.contains(&p("(1 2 3)", 5)).unwrap());
        assert!(!a5.contains(&p("(1 2)", 5)).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let mut w = a5.identity();
            for _ in 0..rng.gen_range(1..20) {
                let k = rng.gen_range(0..a5.generators().len());
                w = w.compose(&a5.generators()[k]);
            }
            assert!(a5.contains(&w).unwrap());
        }
    }

    #[test]
    fn rank_unrank_are_inverse() {
        let g = PermGroup::new(6, vec![p("(1 2 3 4 5 6)", 6), p("(1 2)", 6)]).unwrap();
        let all = g.enumerate(DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(all.len(), 720);
        assert!(all.get(0).is_identity());
        let distinct: HashSet<_> = all.elements().iter().cloned().collect();
        assert_eq!(distinct.len(), 720);
        for (r, e) in all.elements().iter().enumerate() {
            assert_eq!(g.rank(e), Some(r));
        }
        let h = PermGroup::new(6, vec![p("(1 2 3)", 6)]).unwrap();
        assert_eq!(h.rank(&p("(1 2)", 6)), None);
    }

    #[test]
    fn enumeration_cap() {
        let s4 = PermGroup::new(4, vec![p("(1 2 3 4)", 4), p("(1 2)", 4)]).unwrap();
        assert_eq!(s4.enumerate(DEFAULT_ENUM_CAP).unwrap().len(), 24);
        assert!(matches!(
            s4.enumerate(10),
            Err(Error::EnumerationCap { order: 24, cap: 10 })
        ));
    }

    #[test]
    fn orbits() {
        let s4 = PermGroup::new(4, vec![p("(1 2 3 4)", 4), p("(1 2)", 4)]).unwrap();
        let mut o = s4.orbit(0);
        o.sort();
        assert_eq!(o, vec![0, 1, 2, 3]);
        let c2 = PermGroup::new(4, vec![p("(1 2)", 4)]).unwrap();
        assert_eq!(c2.orbit(2), vec![2]);
        let g = PermGroup::new(5, vec![p("(1 2 3)", 5), p("(4 5)", 5)]).unwrap();
        let mut o = g.orbit(3);
        o.sort();
        assert_eq!(o, vec![3, 4]);
        assert_eq!(g.orbits(), vec![vec![0, 1, 2], vec![3, 4]]);
    }

    #[test]
    fn lagrange_on_random_members() {
        let g = PermGroup::new(
            8,
            vec![
                p("(1 2 3 4 5 6 7)", 8),
                p("(2 3 5)(4 7 6)", 8),
                p("(1 8)(2 7)(3 6)(4 5)", 8),
            ],
        )
        .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let x = g.random_element(&mut rng);
            assert!(g.contains(&x).unwrap());
            assert_eq!(g.order() % x.order(), 0);
        }
    }

    #[test]
    fn order_divides_factorial_and_orbit_product() {
        let g = PermGroup::new(7, vec![p("(1 2 3 4 5 6 7)", 7), p("(1 2 3)", 7)]).unwrap();
        assert_eq!(g.order(), 2520);
        let prod: u64 = g
            .fundamental_orbit_lengths()
            .iter()
            .map(|&l| l as u64)
            .product();
        assert_eq!(prod, g.order());
        assert_eq!(5040 % g.order(), 0);
    }
}
