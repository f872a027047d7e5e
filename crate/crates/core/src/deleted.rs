//! The deleted permutation module of `A_n` over `F_q` (`q > n` prime),
//! acted on by `F_q^× × A_n`: scalars multiply, permutations move
//! coordinates.
//!
//! Vectors are rank-encoded as a mixed-radix integer over their first
//! `n - 1` coordinates (the last one is forced by the zero-sum condition),
//! so the orbit census runs over a flat array.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::primes::{is_prime, pow_mod, primitive_root};

/// Largest acting group the stabilizer enumeration accepts.
pub const STABILIZER_BOUND: u64 = 1_000_000;
/// Largest module the orbit census sweeps.
pub const CENSUS_BOUND: u64 = 20_000_000;

/// The module `{ v ∈ F_q^n : Σ v_i = 0 }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeletedModule {
    n: usize,
    q: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ModuleVector {
    coords: Vec<u64>,
}

impl ModuleVector {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

/// `(λ, x)` with `λ ∈ F_q^×` and `x` an even permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScalarPermPair {
    pub scalar: u64,
    pub perm: Permutation,
}

impl DeletedModule {
    pub fn new(n: usize, q: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!("need n >= 2, got {n}")));
        }
        if !is_prime(q) {
            return Err(Error::Invalid(format!("{q} is not prime")));
        }
        if q <= n as u64 {
            return Err(Error::Invalid(format!(
                "characteristic {q} must exceed n = {n}"
            )));
        }
        Ok(DeletedModule { n, q })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `q^(n-1)`.
    pub fn size(&self) -> u64 {
        self.q.pow(self.n as u32 - 1)
    }

    /// `(q - 1) · n!/2`.
    pub fn group_order(&self) -> u64 {
        let half_factorial: u64 = (3..=self.n as u64).product();
        (self.q - 1) * half_factorial.max(1)
    }

    pub fn vector(&self, coords: &[i64]) -> Result<ModuleVector> {
        if coords.len() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: coords.len(),
            });
        }
        let coords: Vec<u64> = coords
            .iter()
            .map(|&c| c.rem_euclid(self.q as i64) as u64)
            .collect();
        if coords.iter().sum::<u64>() % self.q != 0 {
            return Err(Error::Invalid("coordinates do not sum to zero".into()));
        }
        Ok(ModuleVector { coords })
    }

    pub fn zero(&self) -> ModuleVector {
        ModuleVector {
            coords: vec![0; self.n],
        }
    }

    pub fn pair(&self, scalar: u64, perm: Permutation) -> Result<ScalarPermPair> {
        if scalar == 0 || scalar >= self.q {
            return Err(Error::Invalid(format!(
                "scalar {scalar} not in 1..{}",
                self.q
            )));
        }
        if perm.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: perm.degree(),
            });
        }
        if !perm.is_even() {
            return Err(Error::Invalid(format!("{perm} is odd")));
        }
        Ok(ScalarPermPair { scalar, perm })
    }

    /// Coordinate `x(j)` of the result is `λ · v_j`.
    pub fn act(&self, v: &ModuleVector, g: &ScalarPermPair) -> ModuleVector {
        let mut coords = vec![0u64; self.n];
        for (j, &c) in v.coords.iter().enumerate() {
            coords[g.perm.apply(j)] = c * g.scalar % self.q;
        }
        ModuleVector { coords }
    }

    pub fn encode(&self, v: &ModuleVector) -> u64 {
        v.coords[..self.n - 1]
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.q + c)
    }

    pub fn decode(&self, mut index: u64) -> ModuleVector {
        let mut coords = Vec::with_capacity(self.n);
        let mut sum = 0;
        for _ in 0..self.n - 1 {
            let c = index % self.q;
            coords.push(c);
            sum += c;
            index /= self.q;
        }
        coords.push((self.q - sum % self.q) % self.q);
        ModuleVector { coords }
    }

    /// `d = (1, 2, ..., n-1, β)` with `β = -n(n-1)/2`.
    pub fn distinct_coordinate_vector(&self) -> Result<ModuleVector> {
        if self.q - 1 < self.n as u64 - 1 {
            return Err(Error::Invalid(format!(
                "F_{} has too few nonzero elements for {} distinct coordinates",
                self.q,
                self.n - 1
            )));
        }
        let mut coords: Vec<i64> = (1..self.n as i64).collect();
        coords.push(-((self.n * (self.n - 1) / 2) as i64));
        self.vector(&coords)
    }

    /// Every even permutation of `n` points, in lexicographic order of
    /// image lists.
    pub fn alternating_elements(&self) -> Vec<Permutation> {
        let mut images: Vec<u32> = (0..self.n as u32).collect();
        let mut out = Vec::new();
        loop {
            let p = Permutation::from_images_unchecked(images.clone());
            if p.is_even() {
                out.push(p);
            }
            if !next_permutation(&mut images) {
                break;
            }
        }
        out
    }

    /// All pairs fixing `v`, by exhaustive enumeration of the group.
    pub fn stabilizer(&self, v: &ModuleVector) -> Result<Vec<ScalarPermPair>> {
        self.stabilizer_within(v, &self.alternating_elements())
    }

    fn stabilizer_within(
        &self,
        v: &ModuleVector,
        alt: &[Permutation],
    ) -> Result<Vec<ScalarPermPair>> {
        if self.group_order() > STABILIZER_BOUND {
            return Err(Error::Bound(format!(
                "group order {} exceeds {STABILIZER_BOUND}",
                self.group_order()
            )));
        }
        let mut out = Vec::new();
        for scalar in 1..self.q {
            for x in alt {
                let g = ScalarPermPair {
                    scalar,
                    perm: x.clone(),
                };
                if self.act(v, &g) == *v {
                    out.push(g);
                }
            }
        }
        Ok(out)
    }

    /// Census generators: a generator of `F_q^×` and two generators of
    /// `A_n`, `(1 2 3)` with `(1 2 ... n)` for odd `n` or `(2 3 ... n)`
    /// for even `n`.
    pub fn census_generators(&self) -> Result<(u64, Vec<Permutation>)> {
        let n = self.n;
        let mut perms = Vec::new();
        if n >= 3 {
            perms.push(Permutation::from_cycles(n, &[vec![0, 1, 2]])?);
            let long: Vec<usize> = if n % 2 == 1 {
                (0..n).collect()
            } else {
                (1..n).collect()
            };
            if long.len() > 1 {
                perms.push(Permutation::from_cycles(n, &[long])?);
            }
        }
        let alt = PermGroup::new(n, perms.clone())?;
        let scalar = primitive_root(self.q);
        let scalar_order = (1..self.q)
            .find(|&e| pow_mod(scalar, e, self.q) == 1)
            .expect("finite order");
        if alt.order() * scalar_order != self.group_order() {
            return Err(Error::Invalid(format!(
                "census generators produce a group of order {}, expected {}",
                alt.order() * scalar_order,
                self.group_order()
            )));
        }
        Ok((scalar, perms))
    }

    /// Partitions the module into orbits of `F_q^× × A_n`.
    pub fn orbit_census(&self) -> Result<OrbitCensus> {
        let size = self.size();
        if size > CENSUS_BOUND {
            return Err(Error::Bound(format!(
                "{size} vectors exceed the census bound {CENSUS_BOUND}"
            )));
        }
        let (scalar, perms) = self.census_generators()?;
        let n = self.n;
        let q = self.q;
        let mut orbit_of = vec![u32::MAX; size as usize];
        let mut orbit_sizes: Vec<u64> = Vec::new();
        let mut stack: Vec<u64> = Vec::new();
        let mut coords = vec![0u64; n];
        let mut image = vec![0u64; n];
        let mut pow = vec![1u64; n];
        for i in 1..n {
            pow[i] = pow[i - 1] * q;
        }

        for start in 0..size {
            if orbit_of[start as usize] != u32::MAX {
                continue;
            }
            let id = orbit_sizes.len() as u32;
            orbit_of[start as usize] = id;
            let mut count = 1u64;
            stack.push(start);
            while let Some(idx) = stack.pop() {
                // decode
                let mut rest = idx;
                let mut sum = 0;
                for c in coords.iter_mut().take(n - 1) {
                    *c = rest % q;
                    sum += *c;
                    rest /= q;
                }
                coords[n - 1] = (q - sum % q) % q;

                let scaled: u64 = (0..n - 1).map(|i| coords[i] * scalar % q * pow[i]).sum();
                let mut neighbours = [scaled, 0, 0];
                for (slot, x) in neighbours[1..].iter_mut().zip(&perms) {
                    for (j, &c) in coords.iter().enumerate() {
                        image[x.apply(j)] = c;
                    }
                    *slot = (0..n - 1).map(|i| image[i] * pow[i]).sum();
                }
                for &next in &neighbours[..1 + perms.len()] {
                    if orbit_of[next as usize] == u32::MAX {
                        orbit_of[next as usize] = id;
                        count += 1;
                        stack.push(next);
                    }
                }
            }
            orbit_sizes.push(count);
        }

        let mut histogram = BTreeMap::new();
        for &s in &orbit_sizes {
            *histogram.entry(s).or_insert(0u64) += 1;
        }
        let group_order = self.group_order();
        Ok(OrbitCensus {
            module: *self,
            group_order,
            regular_orbit_exists: histogram.contains_key(&group_order),
            histogram,
            orbit_sizes,
            orbit_of,
        })
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[derive(Clone, Debug)]
pub struct OrbitCensus {
    pub module: DeletedModule,
    pub group_order: u64,
    /// Orbit size -> number of orbits of that size.
    pub histogram: BTreeMap<u64, u64>,
    pub regular_orbit_exists: bool,
    orbit_sizes: Vec<u64>,
    orbit_of: Vec<u32>,
}

impl OrbitCensus {
    pub fn orbit_count(&self) -> usize {
        self.orbit_sizes.len()
    }

    pub fn orbit_size_of(&self, v: &ModuleVector) -> u64 {
        self.orbit_sizes[self.orbit_of[self.module.encode(v) as usize] as usize]
    }

    /// `orbit_size,count` lines under a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("orbit_size,count\n");
        for (size, count) in &self.histogram {
            s.push_str(&format!("{size},{count}\n"));
        }
        s
    }

    pub fn verdict(&self) -> String {
        format!(
            "n={} q={}: {} orbits on {} vectors under a group of order {}; regular orbit {}",
            self.module.n,
            self.module.q,
            self.orbit_count(),
            self.module.size(),
            self.group_order,
            if self.regular_orbit_exists {
                "exists"
            } else {
                "does not exist"
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_vector(m: &DeletedModule, rng: &mut ChaCha8Rng) -> ModuleVector {
        m.decode(rng.gen_range(0..m.size()))
    }

    fn random_pair(m: &DeletedModule, alt: &[Permutation], rng: &mut ChaCha8Rng) -> ScalarPermPair {
        m.pair(
            rng.gen_range(1..m.q()),
            alt[rng.gen_range(0..alt.len())].clone(),
        )
        .unwrap()
    }

    #[test]
    fn rejects_small_characteristic() {
        assert!(DeletedModule::new(7, 7).is_err());
        assert!(DeletedModule::new(7, 5).is_err());
        assert!(DeletedModule::new(7, 12).is_err());
        assert!(DeletedModule::new(7, 11).is_ok());
    }

    #[test]
    fn trivial_actions() {
        let m = DeletedModule::new(5, 7).unwrap();
        let v = m.vector(&[1, 2, 3, 4, -10]).unwrap();
        let id = m.pair(1, Permutation::identity(5)).unwrap();
        assert_eq!(m.act(&v, &id), v);
        let neg = m.pair(6, Permutation::identity(5)).unwrap();
        let expected = m.vector(&[-1, -2, -3, -4, 10]).unwrap();
        assert_eq!(m.act(&v, &neg), expected);
        assert!(m.pair(1, Permutation::parse("(1 2)", 5).unwrap()).is_err());
        assert!(m.pair(0, Permutation::identity(5)).is_err());
        assert!(m.vector(&[1, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn action_law() {
        let m = DeletedModule::new(7, 11).unwrap();
        let alt = m.alternating_elements();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let v = random_vector(&m, &mut rng);
            let g = random_pair(&m, &alt, &mut rng);
            let h = random_pair(&m, &alt, &mut rng);
            let gh = ScalarPermPair {
                scalar: g.scalar * h.scalar % m.q(),
                perm: g.perm.compose(&h.perm),
            };
            assert_eq!(m.act(&m.act(&v, &g), &h), m.act(&v, &gh));
        }
    }

    #[test]
    fn encoding_round_trips() {
        let m = DeletedModule::new(4, 5).unwrap();
        for idx in 0..m.size() {
            let v = m.decode(idx);
            assert_eq!(v.coords().iter().sum::<u64>() % 5, 0);
            assert_eq!(m.encode(&v), idx);
        }
    }

    #[test]
    fn distinct_coordinate_vectors() {
        let m = DeletedModule::new(7, 11).unwrap();
        assert_eq!(
            m.distinct_coordinate_vector().unwrap().coords(),
            &[1, 2, 3, 4, 5, 6, 1]
        );
        let m = DeletedModule::new(3, 5).unwrap();
        assert_eq!(m.distinct_coordinate_vector().unwrap().coords(), &[1, 2, 2]);
    }

    #[test]
    fn stabilizers() {
        let m = DeletedModule::new(5, 7).unwrap();
        assert_eq!(
            m.stabilizer(&m.zero()).unwrap().len() as u64,
            m.group_order()
        );
        let v = m.vector(&[1, 2, 4, 5, 2]).unwrap();
        let stab = m.stabilizer(&v).unwrap();
        for g in &stab {
            assert_eq!(m.act(&v, g), v);
        }
        let alt = m.alternating_elements();
        assert_eq!(alt.len(), 60);
        let brute = (1..7u64)
            .flat_map(|s| alt.iter().map(move |x| (s, x)))
            .filter(|(s, x)| m.act(&v, &m.pair(*s, (*x).clone()).unwrap()) == v)
            .count();
        assert_eq!(stab.len(), brute);
    }

    #[test]
    fn small_census() {
        let m = DeletedModule::new(3, 5).unwrap();
        assert_eq!(m.group_order(), 12);
        let c = m.orbit_census().unwrap();
        let total: u64 = c.histogram.iter().map(|(s, k)| s * k).sum();
        assert_eq!(total, 25);
        assert_eq!(c.orbit_size_of(&m.zero()), 1);
        for s in c.histogram.keys() {
            assert_eq!(m.group_order() % s, 0);
        }
        for idx in 0..m.size() {
            let v = m.decode(idx);
            let stab = m.stabilizer(&v).unwrap().len() as u64;
            assert_eq!(stab * c.orbit_size_of(&v), m.group_order());
        }
        assert!(c.to_csv().starts_with("orbit_size,count\n1,1\n"));
    }

    #[test]
    fn census_generators_even_degree() {
        let m = DeletedModule::new(6, 7).unwrap();
        let (_, perms) = m.census_generators().unwrap();
        assert!(perms.iter().all(|p| p.is_even()));
        let c = m.orbit_census().unwrap();
        let total: u64 = c.histogram.iter().map(|(s, k)| s * k).sum();
        assert_eq!(total, 7u64.pow(5));
    }
}
