//! Arithmetic, polynomials and linear algebra over a prime field `F_p`
//! with `p < 2^32`.

use rand::Rng;

use crate::primes::{mul_mod, pow_mod};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 32));
        Field { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    // ---- polynomials, coefficients lowest degree first, no trailing zeros

    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn poly_sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        Self::trim(out)
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        Self::trim(out)
    }

    pub fn poly_divrem(&self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        assert!(!b.is_empty(), "division by the zero polynomial");
        let mut rem = Self::trim(a.to_vec());
        let db = b.len() - 1;
        if rem.len() <= db {
            return (Vec::new(), rem);
        }
        let lead_inv = self.inv(b[db]);
        let mut quot = vec![0u64; rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = self.mul(rem[k], lead_inv);
            if c == 0 {
                continue;
            }
            quot[k - db] = c;
            for (j, &bj) in b.iter().enumerate() {
                rem[k - db + j] = self.sub(rem[k - db + j], self.mul(c, bj));
            }
        }
        rem.truncate(db);
        (Self::trim(quot), Self::trim(rem))
    }

    pub fn poly_rem(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.poly_divrem(a, b).1
    }

    pub fn poly_monic(&self, a: &[u64]) -> Vec<u64> {
        match a.last() {
            None => Vec::new(),
            Some(&lead) => {
                let inv = self.inv(lead);
                a.iter().map(|&c| self.mul(c, inv)).collect()
            }
        }
    }

    pub fn poly_gcd(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut a = Self::trim(a.to_vec());
        let mut b = Self::trim(b.to_vec());
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        self.poly_monic(&a)
    }

    pub fn poly_powmod(&self, base: &[u64], mut e: u64, modulus: &[u64]) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = self.poly_rem(base, modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_rem(&self.poly_mul(&acc, &b), modulus);
            }
            b = self.poly_rem(&self.poly_mul(&b, &b), modulus);
            e >>= 1;
        }
        self.poly_rem(&acc, modulus)
    }

    pub fn poly_eval(&self, a: &[u64], x: u64) -> u64 {
        a.iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Distinct roots of `f` in `F_p`, ascending, by Cantor–Zassenhaus:
    /// `gcd(f, x^p - x)` isolates the linear factors, which random
    /// `gcd(g, (x + a)^((p-1)/2) - 1)` splits separate.
    pub fn roots<R: Rng + ?Sized>(&self, f: &[u64], rng: &mut R) -> Vec<u64> {
        let f = self.poly_monic(&Self::trim(f.to_vec()));
        if f.len() <= 1 {
            return Vec::new();
        }
        let x = vec![0, 1];
        let xp = self.poly_powmod(&x, self.p, &f);
        let g = self.poly_gcd(&f, &self.poly_sub(&xp, &x));
        let mut out = Vec::new();
        self.split_linear(g, rng, &mut out);
        out.sort_unstable();
        out
    }

    fn split_linear<R: Rng + ?Sized>(&self, g: Vec<u64>, rng: &mut R, out: &mut Vec<u64>) {
        match g.len() {
            0 | 1 => {}
            2 => out.push(self.neg(g[0])),
            _ if self.p == 2 => {
                // g divides x^2 - x
                for r in 0..2 {
                    if self.poly_eval(&g, r) == 0 {
                        out.push(r);
                    }
                }
            }
            _ => loop {
                let a = rng.gen_range(0..self.p);
                let h = self.poly_powmod(&[a, 1], (self.p - 1) / 2, &g);
                let d = self.poly_gcd(&g, &self.poly_sub(&h, &[1]));
                if d.len() > 1 && d.len() < g.len() {
                    let (q, _) = self.poly_divrem(&g, &d);
                    self.split_linear(d, rng, out);
                    self.split_linear(self.poly_monic(&q), rng, out);
                    return;
                }
            },
        }
    }

    // ---- dense matrices as rows

    /// Characteristic polynomial `det(xI - A)` via reduction to upper
    /// Hessenberg form.
    pub fn charpoly(&self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h: Vec<Vec<u64>> = a.to_vec();
        for j in 0..n.saturating_sub(2) {
            let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else {
                continue;
            };
            if piv != j + 1 {
                h.swap(piv, j + 1);
                for row in h.iter_mut() {
                    row.swap(piv, j + 1);
                }
            }
            let inv = self.inv(h[j + 1][j]);
            for k in j + 2..n {
                let u = self.mul(h[k][j], inv);
                if u == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = self.mul(u, h[j + 1][c]);
                    h[k][c] = self.sub(h[k][c], v);
                }
                for row in h.iter_mut() {
                    let v = self.mul(u, row[k]);
                    row[j + 1] = self.add(row[j + 1], v);
                }
            }
        }
        // p_m = (x - h_mm) p_{m-1} - Σ_{i<m} h_im (Π_{i<r<=m} h_{r,r-1}) p_{i-1}
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 0..n {
            let prev = &polys[m];
            let mut pm = self.poly_mul(prev, &[self.neg(h[m][m]), 1]);
            let mut t = 1u64;
            for i in (0..m).rev() {
                t = self.mul(t, h[i + 1][i]);
                if t == 0 {
                    break;
                }
                let c = self.mul(h[i][m], t);
                if c != 0 {
                    let term: Vec<u64> = polys[i].iter().map(|&v| self.mul(v, c)).collect();
                    pm = self.poly_sub(&pm, &term);
                }
            }
            polys.push(pm);
        }
        polys.pop().unwrap_or_else(|| vec![1])
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&self, m: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, piv);
            let inv = self.inv(m[r][c]);
            for v in m[r].iter_mut() {
                *v = self.mul(*v, inv);
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for k in 0..cols {
                        let v = self.mul(f, m[r][k]);
                        m[i][k] = self.sub(m[i][k], v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        pivots
    }

    /// Basis of `{ x : A x = 0 }`.
    pub fn nullspace(&self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let cols = a.first().map_or(0, |r| r.len());
        let mut m = a.to_vec();
        let pivots = self.rref(&mut m);
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.neg(m[r][f]);
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn field_ops() {
        let f = Field::new(31);
        assert_eq!(f.mul(f.inv(7), 7), 1);
        assert_eq!(f.from_i64(-1), 30);
        assert_eq!(f.sub(3, 5), 29);
    }

    #[test]
    fn roots_of_split_polynomial() {
        let f = Field::new(31);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        // (x-3)(x-5)(x-5)(x-30)(x^2+1), x^2+1 irreducible mod 31
        let mut p = vec![1u64];
        for r in [3u64, 5, 5, 30] {
            p = f.poly_mul(&p, &[f.neg(r), 1]);
        }
        p = f.poly_mul(&p, &[1, 0, 1]);
        assert_eq!(f.roots(&p, &mut rng), vec![3, 5, 30]);
        assert_eq!(f.roots(&[0, 1], &mut rng), vec![0]);
        assert!(f.roots(&[1, 0, 1], &mut rng).is_empty());
    }

    #[test]
    fn roots_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for p in [2u64, 3, 7, 151, 421] {
            let f = Field::new(p);
            for _ in 0..20 {
                let deg = rng.gen_range(1..7);
                let mut poly: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
                poly.push(1);
                let brute: Vec<u64> = (0..p).filter(|&x| f.poly_eval(&poly, x) == 0).collect();
                assert_eq!(f.roots(&poly, &mut rng), brute);
            }
        }
    }

    fn det(f: &Field, a: &[Vec<u64>]) -> u64 {
        // Gaussian elimination
        let mut m = a.to_vec();
        let n = m.len();
        let mut d = 1u64;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| m[i][c] != 0) else {
                return 0;
            };
            if p != c {
                m.swap(p, c);
                d = f.neg(d);
            }
            d = f.mul(d, m[c][c]);
            let inv = f.inv(m[c][c]);
            for i in c + 1..n {
                let u = f.mul(m[i][c], inv);
                for k in c..n {
                    let v = f.mul(u, m[c][k]);
                    m[i][k] = f.sub(m[i][k], v);
                }
            }
        }
        d
    }

    #[test]
    fn charpoly_matches_determinant() {
        let f = Field::new(151);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 1..7 {
            let a: Vec<Vec<u64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(0..151)).collect())
                .collect();
            let cp = f.charpoly(&a);
            assert_eq!(cp.len(), n + 1);
            for x in [0u64, 1, 17, 150] {
                let shifted: Vec<Vec<u64>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                let v = if i == j { x } else { 0 };
                                f.sub(v, a[i][j])
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(f.poly_eval(&cp, x), det(&f, &shifted));
            }
        }
    }

    #[test]
    fn nullspace_basis() {
        let f = Field::new(7);
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = f.nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &a {
                let s = row
                    .iter()
                    .zip(&v)
                    .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                assert_eq!(s, 0);
            }
        }
    }
}
