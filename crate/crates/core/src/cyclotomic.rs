//! Exact elements of `Z[ζ_m]`, stored in the power basis
//! `1, ζ_m, ..., ζ_m^(φ(m)-1)` after reduction modulo the cyclotomic
//! polynomial `Φ_m`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::primes::{divisors, gcd, lcm};

fn phi_cache() -> &'static Mutex<HashMap<u32, Vec<i64>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Φ_m`, lowest degree first, obtained by dividing
/// `x^m - 1` by `Φ_d` for every proper divisor `d` of `m`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    assert!(m >= 1);
    if let Some(p) = phi_cache().lock().expect("phi cache").get(&m) {
        return p.clone();
    }
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in divisors(m as u64) {
        let d = d as u32;
        if d == m {
            continue;
        }
        let (q, r) = divide_monic(&num, &cyclotomic_polynomial(d));
        debug_assert!(r.iter().all(|&c| c == 0));
        num = q;
    }
    phi_cache()
        .lock()
        .expect("phi cache")
        .insert(m, num.clone());
    num
}

/// Quotient and remainder of `num` by the monic polynomial `den`.
fn divide_monic(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        rem.resize(dd, 0);
        return (vec![0], rem);
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k];
        if c == 0 {
            continue;
        }
        quot[k - dd] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k - dd + j] -= c * dj;
        }
    }
    rem.truncate(dd);
    (quot, rem)
}

/// Euler's totient via the degree of `Φ_m`.
pub fn totient(m: u32) -> usize {
    cyclotomic_polynomial(m).len() - 1
}

#[derive(Clone, Debug, Serialize)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    /// `Σ c_k ζ_m^k` for `c` of any length (exponents taken mod `m`).
    pub fn from_exponents(conductor: u32, c: &[i64]) -> Self {
        let m = conductor as usize;
        let mut folded = vec![0i64; m];
        for (k, &v) in c.iter().enumerate() {
            folded[k % m] += v;
        }
        let (_, coeffs) = divide_monic(&folded, &cyclotomic_polynomial(conductor));
        Cyclotomic { conductor, coeffs }
    }

    pub fn integer(n: i64) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![n],
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    /// `ζ_m^k`.
    pub fn root_of_unity(conductor: u32, k: u32) -> Self {
        let mut c = vec![0i64; conductor as usize];
        c[(k % conductor) as usize] = 1;
        Self::from_exponents(conductor, &c)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coefficients after reduction modulo `Φ_m`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as an integer, when it is rational.
    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs.iter().skip(1).all(|&c| c == 0) {
            Some(self.coeffs.first().copied().unwrap_or(0))
        } else {
            None
        }
    }

    /// Exponent-indexed coefficients at conductor `target`, a multiple of
    /// the own conductor.
    pub fn embed(&self, target: u32) -> Vec<i64> {
        assert_eq!(target % self.conductor, 0);
        let step = (target / self.conductor) as usize;
        let mut out = vec![0i64; target as usize];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[k * step] += c;
        }
        out
    }

    /// Complex conjugate, `ζ -> ζ^-1`.
    pub fn conj(&self) -> Self {
        let m = self.conductor as usize;
        let mut c = vec![0i64; m];
        for (k, &v) in self.coeffs.iter().enumerate() {
            c[(m - k) % m] += v;
        }
        Self::from_exponents(self.conductor, &c)
    }

    /// Image under the Galois automorphism `ζ_m -> ζ_m^k`, `gcd(k, m) = 1`.
    pub fn galois(&self, k: u32) -> Self {
        assert_eq!(gcd(k as u64, self.conductor as u64), 1);
        let m = self.conductor as usize;
        let mut c = vec![0i64; m];
        for (j, &v) in self.coeffs.iter().enumerate() {
            c[(j * k as usize) % m] += v;
        }
        Self::from_exponents(self.conductor, &c)
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let l = lcm(self.conductor as u64, other.conductor as u64) as u32;
        let a = self.embed(l);
        let b = other.embed(l);
        let sum: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        Cyclotomic::from_exponents(l, &sum)
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let l = lcm(self.conductor as u64, other.conductor as u64) as u32;
        let mut acc = Accumulator::new(l);
        acc.add_product(self, other, 1);
        acc.finish()
    }

    pub fn scale(&self, k: i64) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        self.add(&other.neg()).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            match (k, mag) {
                (0, _) => write!(f, "{sign}{mag}")?,
                (_, 1) => write!(f, "{sign}z{}^{k}", self.conductor)?,
                _ => write!(f, "{sign}{mag}*z{}^{k}", self.conductor)?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Sums of products in `Z[x]/(x^L - 1)`, reduced modulo `Φ_L` once at the
/// end.
#[derive(Clone, Debug)]
pub struct Accumulator {
    conductor: u32,
    coeffs: Vec<i64>,
}

impl Accumulator {
    pub fn new(conductor: u32) -> Self {
        Accumulator {
            conductor,
            coeffs: vec![0; conductor as usize],
        }
    }

    pub fn add(&mut self, a: &Cyclotomic, scale: i64) {
        let step = (self.conductor / a.conductor) as usize;
        for (k, &c) in a.coeffs.iter().enumerate() {
            self.coeffs[k * step] += c * scale;
        }
    }

    /// Adds `scale * a * b`.
    pub fn add_product(&mut self, a: &Cyclotomic, b: &Cyclotomic, scale: i64) {
        let l = self.conductor as usize;
        let sa = l / a.conductor as usize;
        let sb = l / b.conductor as usize;
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if y != 0 {
                    self.coeffs[(i * sa + j * sb) % l] += x * y * scale;
                }
            }
        }
    }

    pub fn finish(self) -> Cyclotomic {
        Cyclotomic::from_exponents(self.conductor, &self.coeffs)
    }
}
