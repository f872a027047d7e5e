//! Exact character tables by the Dixon–Schneider method.
//!
//! Class matrices built from the class multiplication coefficients have
//! the central characters as common eigenvectors. These are split over a
//! prime field `F_l` with `l ≡ 1 (mod exponent)`, normalized into
//! characters mod `l`, and lifted to exact cyclotomic values by counting
//! eigenvalue multiplicities of each class representative.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classes::ClassedGroup;
use crate::cyclotomic::{Accumulator, Cyclotomic};
use crate::error::{Error, Result};
use crate::modp::Field;
use crate::primes::{is_prime, isqrt, lcm, primitive_root};

/// Largest class count accepted by [`dixon_character_table`].
pub const MAX_CLASSES: usize = 60;

const SPLIT_SEED: u64 = 0x5eed_d1c5;
const RANDOM_SPLIT_ATTEMPTS: usize = 32;

/// Class multiplication coefficients: `a[i][j][k]` counts pairs
/// `(x, y) ∈ C_i × C_j` with `x·y = z_k` for the fixed representative `z_k`.
#[derive(Clone, Debug)]
pub struct ClassConstants {
    k: usize,
    a: Vec<u64>,
}

impl ClassConstants {
    pub fn compute(g: &ClassedGroup) -> Self {
        let k = g.classes.len();
        let mut a = vec![0u64; k * k * k];
        let elements = g.elements.elements();
        let inverses: Vec<_> = elements.iter().map(|x| x.inverse()).collect();
        for kk in 0..k {
            let z = g.classes.rep(kk);
            for (id, x_inv) in inverses.iter().enumerate() {
                let i = g.classes.class_of_id(id);
                let y = x_inv.compose(z);
                let j = g.class_of(&y).expect("product of members");
                a[(i * k + j) * k + kk] += 1;
            }
        }
        ClassConstants { k, a }
    }

    pub fn class_count(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.a[(i * self.k + j) * self.k + k]
    }
}

/// Smallest prime `l ≡ 1 (mod exponent)` with `l > 2·sqrt(order)`.
pub fn dixon_prime(order: u64, exponent: u64) -> u64 {
    let mut l = exponent + 1;
    loop {
        // l > 2 sqrt(order)  <=>  l^2 > 4 order
        if (l as u128) * (l as u128) > 4 * order as u128 && is_prime(l) {
            return l;
        }
        l += exponent;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub group_order: u64,
    pub exponent: u64,
    /// The prime used for the modular eigenvector computation.
    pub prime: u64,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u64>,
    /// `inverse_class[k]` holds the class of the inverses of class `k`.
    pub inverse_class: Vec<usize>,
    pub degrees: Vec<u64>,
    /// `values[i][k] = χ_i(g_k)` at conductor `o(g_k)`.
    pub values: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn value(&self, character: usize, class: usize) -> &Cyclotomic {
        &self.values[character][class]
    }

    /// `Σ_k |C_k| χ_i(g_k) χ_j(g_k^-1)`.
    pub fn inner_product_times_order(&self, i: usize, j: usize) -> Cyclotomic {
        let mut acc = Accumulator::new(self.exponent as u32);
        for k in 0..self.class_sizes.len() {
            acc.add_product(
                &self.values[i][k],
                &self.values[j][self.inverse_class[k]],
                self.class_sizes[k] as i64,
            );
        }
        acc.finish()
    }

    /// `Σ_i χ_i(g_k) χ_i(g_l^-1)`.
    pub fn column_product(&self, k: usize, l: usize) -> Cyclotomic {
        let cond = lcm(self.class_orders[k], self.class_orders[l]) as u32;
        let mut acc = Accumulator::new(cond);
        let linv = self.inverse_class[l];
        for row in &self.values {
            acc.add_product(&row[k], &row[linv], 1);
        }
        acc.finish()
    }

    /// Exact first orthogonality relation for every pair of rows.
    pub fn rows_orthogonal(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let expected = if i == j { self.group_order as i64 } else { 0 };
                self.inner_product_times_order(i, j).as_integer() == Some(expected)
            })
        })
    }

    /// Exact second orthogonality relation for every pair of columns.
    pub fn columns_orthogonal(&self) -> bool {
        let k = self.class_sizes.len();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let expected = if a == b {
                    (self.group_order / self.class_sizes[a]) as i64
                } else {
                    0
                };
                self.column_product(a, b).as_integer() == Some(expected)
            })
        })
    }

    pub fn sum_of_squared_degrees(&self) -> u64 {
        self.degrees.iter().map(|d| d * d).sum()
    }

    /// Characters of `q`-defect zero: `q ∤ |G|/χ(1)`.
    pub fn defect_zero_characters(&self, q: u64) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (self.group_order / self.degrees[i]) % q != 0)
            .collect()
    }
}

/// Simple groups recorded in the literature as having no irreducible
/// character of `q`-defect zero, besides infinitely many alternating
/// groups. Reference data only: nothing here is computed or checked.
pub const DEFECT_ZERO_EXCEPTIONS: &[(u64, &[&str])] = &[
    (
        2,
        &[
            "M12", "M22", "M24", "J2", "HS", "Suz", "Ru", "Co1", "Co3", "BM",
        ],
    ),
    (3, &["Suz", "Co3"]),
];

/// Builds the exact character table of an enumerated group.
pub fn dixon_character_table(g: &ClassedGroup) -> Result<CharacterTable> {
    let k = g.classes.len();
    if k > MAX_CLASSES {
        return Err(Error::ClassCap {
            classes: k,
            cap: MAX_CLASSES,
        });
    }
    let order = g.order();
    let exponent = g.classes.exponent();
    let prime = dixon_prime(order, exponent);
    let field = Field::new(prime);
    let constants = ClassConstants::compute(g);
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);

    let eigenvectors = common_eigenvectors(&field, &constants, &mut rng)?;

    let sizes: Vec<u64> = g.classes.sizes().to_vec();
    let inverse_class: Vec<usize> = (0..k).map(|i| g.classes.inverse_class(i)).collect();
    let orders: Vec<u64> = (0..k).map(|i| g.classes.element_order(i)).collect();
    let root_e = field.pow(primitive_root(prime), (prime - 1) / exponent);

    let mut rows: Vec<(u64, Vec<Vec<i64>>)> = Vec::with_capacity(k);
    for w in eigenvectors {
        // w ∝ central character ω_k = |C_k| χ(g_k) / χ(1), with ω_0 = 1
        let w0_inv = field.inv(w[0]);
        let theta: Vec<u64> = (0..k)
            .map(|c| field.mul(field.mul(w[c], w0_inv), field.inv(sizes[c] % prime)))
            .collect();
        let mut norm = 0u64;
        for c in 0..k {
            let t = field.mul(theta[c], theta[inverse_class[c]]);
            norm = field.add(norm, field.mul(sizes[c] % prime, t));
        }
        let degree_sq = field.mul(order % prime, field.inv(norm));
        let degree = (1..=isqrt(order))
            .find(|&d| (d * d) % prime == degree_sq)
            .ok_or_else(|| Error::EigenSplit("no integral degree for a character".into()))?;
        let chi: Vec<u64> = theta
            .iter()
            .map(|&t| field.mul(t, degree % prime))
            .collect();

        let mut mults = Vec::with_capacity(k);
        for c in 0..k {
            let m = orders[c];
            let zeta_m = field.pow(root_e, exponent / m);
            let m_inv = field.inv(m % prime);
            let mut counts = Vec::with_capacity(m as usize);
            let mut total = 0u64;
            for t in 0..m {
                let mut s = 0u64;
                for j in 0..m {
                    let power_class = g.classes.power(c, j);
                    let z = field.pow(zeta_m, (m - (t * j) % m) % m);
                    s = field.add(s, field.mul(chi[power_class], z));
                }
                let mult = field.mul(s, m_inv);
                if mult > degree {
                    return Err(Error::EigenSplit(format!(
                        "eigenvalue multiplicity {mult} exceeds degree {degree}"
                    )));
                }
                total += mult;
                counts.push(mult as i64);
            }
            if total != degree {
                return Err(Error::EigenSplit(
                    "multiplicities do not sum to the degree".into(),
                ));
            }
            mults.push(counts);
        }
        rows.push((degree, mults));
    }

    rows.sort_by(|a, b| match a.0.cmp(&b.0) {
        Ordering::Equal => b.1.cmp(&a.1),
        o => o,
    });
    let degrees = rows.iter().map(|r| r.0).collect();
    let values = rows
        .iter()
        .map(|(_, mults)| {
            mults
                .iter()
                .enumerate()
                .map(|(c, m)| Cyclotomic::from_exponents(orders[c] as u32, m))
                .collect()
        })
        .collect();
    Ok(CharacterTable {
        group_order: order,
        exponent,
        prime,
        class_sizes: sizes,
        class_orders: orders,
        inverse_class,
        degrees,
        values,
    })
}

/// A subspace of `F_l^k` as RREF basis rows with their pivot columns.
struct Subspace {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_vectors(field: &Field, mut vectors: Vec<Vec<u64>>) -> Self {
        let pivots = field.rref(&mut vectors);
        Subspace {
            basis: vectors,
            pivots,
        }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn apply(field: &Field, m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
        })
        .collect()
}

/// Splits an `m`-invariant subspace into the eigenspaces of `m`.
fn split<R: Rng + ?Sized>(
    field: &Field,
    m: &[Vec<u64>],
    space: Subspace,
    rng: &mut R,
) -> Result<Vec<Subspace>> {
    let d = space.dim();
    let images: Vec<Vec<u64>> = space.basis.iter().map(|b| apply(field, m, b)).collect();
    // restricted[t][s] = coordinate t of M b_s
    let restricted: Vec<Vec<u64>> = (0..d)
        .map(|t| (0..d).map(|s| images[s][space.pivots[t]]).collect())
        .collect();
    let cp = field.charpoly(&restricted);
    let roots = field.roots(&cp, rng);
    let mut out = Vec::new();
    let mut total = 0;
    for r in roots {
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &v)| if i == j { field.sub(v, r) } else { v })
                    .collect()
            })
            .collect();
        let coords = field.nullspace(&shifted);
        let vectors: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                let mut v = vec![0u64; space.basis[0].len()];
                for (s, &cs) in c.iter().enumerate() {
                    if cs != 0 {
                        for (vi, &bi) in v.iter_mut().zip(&space.basis[s]) {
                            *vi = field.add(*vi, field.mul(cs, bi));
                        }
                    }
                }
                v
            })
            .collect();
        total += vectors.len();
        out.push(Subspace::from_vectors(field, vectors));
    }
    if total != d {
        return Err(Error::EigenSplit(
            "class matrix is not diagonalizable on an invariant subspace".into(),
        ));
    }
    Ok(out)
}

fn common_eigenvectors<R: Rng + ?Sized>(
    field: &Field,
    constants: &ClassConstants,
    rng: &mut R,
) -> Result<Vec<Vec<u64>>> {
    let k = constants.class_count();
    let class_matrix = |j: usize| -> Vec<Vec<u64>> {
        (0..k)
            .map(|i| (0..k).map(|c| constants.get(i, j, c) % field.p).collect())
            .collect()
    };
    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|c| u64::from(i == c)).collect())
        .collect();
    let mut spaces = vec![Subspace::from_vectors(field, identity)];
    let refine = |spaces: Vec<Subspace>, m: &[Vec<u64>], rng: &mut R| -> Result<Vec<Subspace>> {
        let mut next = Vec::new();
        for s in spaces {
            if s.dim() == 1 {
                next.push(s);
            } else {
                next.extend(split(field, m, s, rng)?);
            }
        }
        Ok(next)
    };
    for j in 1..k {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        spaces = refine(spaces, &class_matrix(j), rng)?;
    }
    let mut attempts = 0;
    while spaces.iter().any(|s| s.dim() > 1) {
        if attempts == RANDOM_SPLIT_ATTEMPTS {
            return Err(Error::EigenSplit(format!(
                "subspaces of dimension > 1 remain after {attempts} random combinations"
            )));
        }
        attempts += 1;
        let mut combo = vec![vec![0u64; k]; k];
        for j in 1..k {
            let coef = rng.gen_range(0..field.p);
            let m = class_matrix(j);
            for (row, mrow) in combo.iter_mut().zip(&m) {
                for (v, &x) in row.iter_mut().zip(mrow) {
                    *v = field.add(*v, field.mul(coef, x));
                }
            }
        }
        spaces = refine(spaces, &combo, rng)?;
    }
    if spaces.len() != k {
        return Err(Error::EigenSplit(format!(
            "found {} characters for {k} classes",
            spaces.len()
        )));
    }
    Ok(spaces
        .into_iter()
        .map(|s| s.basis.into_iter().next().expect("dim 1"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{PermGroup, DEFAULT_ENUM_CAP};
    use crate::perm::Permutation;

    fn group(n: usize, gens: &[&str]) -> ClassedGroup {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse(s, n).unwrap())
            .collect();
        ClassedGroup::new(PermGroup::new(n, gens).unwrap(), DEFAULT_ENUM_CAP).unwrap()
    }

    fn class_with(g: &ClassedGroup, s: &str) -> usize {
        g.class_of(&Permutation::parse(s, g.group.degree()).unwrap())
            .unwrap()
    }

    #[test]
    fn dixon_primes() {
        assert_eq!(dixon_prime(60, 30), 31);
        assert_eq!(dixon_prime(6, 6), 7);
        assert_eq!(dixon_prime(1, 1), 3);
    }

    #[test]
    fn s3_class_constants() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        let c = ClassConstants::compute(&g);
        let t = class_with(&g, "(1 2)");
        let r = class_with(&g, "(1 2 3)");
        assert_eq!(c.get(t, t, 0), 3);
        assert_eq!(c.get(t, r, t), 2);
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(c.get(0, j, k), u64::from(j == k));
            }
        }
    }

    #[test]
    fn class_constant_counting_identity() {
        let g = group(5, &["(1 2 3 4 5)", "(1 2)"]);
        let c = ClassConstants::compute(&g);
        let k = g.classes.len();
        for i in 0..k {
            for j in 0..k {
                let lhs: u64 = (0..k).map(|kk| c.get(i, j, kk) * g.classes.size(kk)).sum();
                assert_eq!(lhs, g.classes.size(i) * g.classes.size(j));
                for kk in 0..k {
                    let (ii, jj) = (g.classes.inverse_class(i), g.classes.inverse_class(j));
                    // (xy)^-1 = y^-1 x^-1
                    assert_eq!(c.get(i, j, kk), c.get(jj, ii, g.classes.inverse_class(kk)));
                }
            }
        }
    }

    /// Solves the 3x3 orthogonality system for S_3 by hand: the trivial and
    /// sign characters are known, and the third row is forced by column
    /// orthogonality against the identity column.
    #[test]
    fn s3_table() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        let t = dixon_character_table(&g).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2]);
        let tr = class_with(&g, "(1 2)");
        let rot = class_with(&g, "(1 2 3)");
        let row2: Vec<Option<i64>> = [0, tr, rot]
            .iter()
            .map(|&c| t.value(2, c).as_integer())
            .collect();
        assert_eq!(row2, vec![Some(2), Some(0), Some(-1)]);
        assert_eq!(t.value(0, tr).as_integer(), Some(1));
        assert_eq!(t.value(1, tr).as_integer(), Some(-1));
        assert!(t.rows_orthogonal() && t.columns_orthogonal());
    }

    #[test]
    fn c4_table_is_the_dual_group() {
        let g = group(4, &["(1 2 3 4)"]);
        let t = dixon_character_table(&g).unwrap();
        assert_eq!(t.degrees, vec![1; 4]);
        let gen = class_with(&g, "(1 2 3 4)");
        let mut values: Vec<Cyclotomic> = (0..4).map(|i| t.value(i, gen).clone()).collect();
        for k in 0..4 {
            let z = Cyclotomic::root_of_unity(4, k);
            let pos = values
                .iter()
                .position(|v| *v == z)
                .expect("each 4th root appears");
            values.remove(pos);
        }
        assert_eq!(t.value(0, gen).conductor(), 4);
    }

    #[test]
    fn a5_table() {
        let g = group(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        let t = dixon_character_table(&g).unwrap();
        assert_eq!(t.prime, 31);
        assert_eq!(t.degrees, vec![1, 3, 3, 4, 5]);
        assert_eq!(t.sum_of_squared_degrees(), 60);
        assert!(t.rows_orthogonal() && t.columns_orthogonal());
        let five = class_with(&g, "(1 2 3 4 5)");
        // degree-3 characters take (1 ± √5)/2 = -(ζ^2 + ζ^3) or -(ζ + ζ^4)
        let a = Cyclotomic::from_exponents(5, &[0, 0, -1, -1, 0]);
        let b = Cyclotomic::from_exponents(5, &[0, -1, 0, 0, -1]);
        let v1 = t.value(1, five);
        let v2 = t.value(2, five);
        assert!((*v1 == a && *v2 == b) || (*v1 == b && *v2 == a));
        assert!(v1.as_integer().is_none());
        assert_eq!(t.defect_zero_characters(5), vec![4]);
    }

    #[test]
    fn abelian_groups_have_no_defect_zero_characters() {
        let g = group(6, &["(1 2 3 4 5 6)"]);
        let t = dixon_character_table(&g).unwrap();
        assert!(t.defect_zero_characters(2).is_empty());
        assert!(t.defect_zero_characters(3).is_empty());
    }

    #[test]
    fn too_many_classes() {
        // C_2^6 has 64 classes
        let gens: Vec<String> = (0..6)
            .map(|i| format!("({} {})", 2 * i + 1, 2 * i + 2))
            .collect();
        let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        let g = group(12, &refs);
        assert!(matches!(
            dixon_character_table(&g),
            Err(Error::ClassCap { classes: 64, .. })
        ));
    }
}
