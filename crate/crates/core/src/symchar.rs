//! Characters of symmetric groups: partitions, hook lengths and the
//! Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// An integer partition with parts in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..width)
                .map(|c| self.0.iter().filter(|&&p| p > c).count())
                .collect(),
        )
    }

    pub fn is_self_associate(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.0[j] - i - 1);
            }
        }
        out
    }

    /// Degree of the irreducible character, `n! / Π hooks`.
    pub fn degree(&self) -> u128 {
        let n = self.size() as u128;
        let factorial: u128 = (1..=n).product();
        let hooks: u128 = self.hook_lengths().iter().map(|&h| h as u128).product();
        factorial / hooks
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Invalid(format!("bad part {p:?}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Partition::new(parse_list(s)?))
    }
}

/// Cycle lengths of a permutation, fixed points included, descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(lengths: Vec<usize>) -> Self {
        let Partition(parts) = Partition::new(lengths);
        CycleType(parts)
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Sign of the permutations of this type.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.0.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `(t, ..., t)` on `n` points, or `(t, ..., t, 1)` when
    /// `fixed_point` is set.
    pub fn uniform(n: usize, t: usize, fixed_point: bool) -> Self {
        let k = if fixed_point { (n - 1) / t } else { n / t };
        let mut v = vec![t; k];
        if fixed_point {
            v.push(1);
        }
        CycleType::new(v)
    }

    /// Every cycle type of `n`.
    pub fn all(n: usize) -> Vec<CycleType> {
        Partition::all(n)
            .into_iter()
            .map(|p| CycleType(p.0))
            .collect()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&Partition(self.0.clone()), f)
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(CycleType::new(parse_list(s)?))
    }
}

/// Memoized Murnaghan–Nakayama evaluation. A context is not meant to be
/// shared between threads; use one per thread.
#[derive(Default)]
pub struct MnContext {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl MnContext {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ_λ` at a permutation of cycle type `μ`.
    pub fn value(&mut self, lambda: &Partition, mu: &CycleType) -> Result<i64> {
        if lambda.size() != mu.size() {
            return Err(Error::SizeMismatch {
                partition: lambda.size(),
                cycle_type: mu.size(),
            });
        }
        Ok(self.eval(&lambda.0, &mu.0))
    }

    // μ descending; the largest remaining cycle is stripped first.
    fn eval(&mut self, lambda: &[usize], mu: &[usize]) -> i64 {
        if mu.is_empty() {
            return i64::from(lambda.is_empty());
        }
        let key = (lambda.to_vec(), mu.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let hook = mu[0];
        let rest = &mu[1..];
        // beta numbers: λ_i + (r - 1 - i), strictly decreasing
        let r = lambda.len();
        let beta: Vec<usize> = lambda
            .iter()
            .enumerate()
            .map(|(i, &p)| p + r - 1 - i)
            .collect();
        let mut total = 0i64;
        for (i, &b) in beta.iter().enumerate() {
            if b < hook {
                continue;
            }
            let target = b - hook;
            if beta.contains(&target) {
                continue;
            }
            let leg = beta.iter().filter(|&&c| c > target && c < b).count();
            let mut next = beta.clone();
            next[i] = target;
            next.sort_unstable_by(|x, y| y.cmp(x));
            let shape: Vec<usize> = next
                .iter()
                .enumerate()
                .map(|(j, &c)| c - (r - 1 - j))
                .filter(|&p| p > 0)
                .collect();
            let sign = if leg % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(&shape, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

pub fn mn_value(lambda: &Partition, mu: &CycleType) -> Result<i64> {
    MnContext::new().value(lambda, mu)
}

/// The partition whose character vanishes on permutations of type
/// `(t, ..., t)` or `(t, ..., t, 1)` in `A_n`, together with its value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlternatingWitness {
    pub partition: Partition,
    pub cycle_type: CycleType,
    pub value: i64,
    pub self_associate: bool,
}

/// Witness partition for a uniform cycle type on `n >= 7` points:
/// `(n-1, 1)` with a fixed point, `(n-t-1, t, 1)` when there are at least
/// three `t`-cycles, and `(n-3, 2, 1)` otherwise. The returned witness has
/// been checked to vanish and to be non-self-associate.
pub fn alternating_vanishing_witness(
    n: usize,
    t: usize,
    has_fixed_point: bool,
) -> Result<AlternatingWitness> {
    if n < 7 || t < 2 {
        return Err(Error::Invalid(format!(
            "need n >= 7 and t >= 2, got n={n}, t={t}"
        )));
    }
    let cycle_points = if has_fixed_point { n - 1 } else { n };
    if cycle_points % t != 0 {
        return Err(Error::Invalid(format!(
            "{t} does not divide {cycle_points}"
        )));
    }
    let k = cycle_points / t;
    let partition = if has_fixed_point {
        Partition::new(vec![n - 1, 1])
    } else if k >= 3 {
        Partition::new(vec![n - t - 1, t, 1])
    } else {
        Partition::new(vec![n - 3, 2, 1])
    };
    let cycle_type = CycleType::uniform(n, t, has_fixed_point);
    let value = mn_value(&partition, &cycle_type)?;
    let self_associate = partition.is_self_associate();
    if value != 0 || self_associate {
        return Err(Error::Invalid(format!(
            "{partition} does not vanish irreducibly on {cycle_type} (value {value})"
        )));
    }
    Ok(AlternatingWitness {
        partition,
        cycle_type,
        value,
        self_associate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }
    fn ct(v: &[usize]) -> CycleType {
        CycleType::new(v.to_vec())
    }

    #[test]
    fn conjugates() {
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert!(part(&[2, 1]).is_self_associate());
        for n in 4..10 {
            let p = part(&[n - 1, 1]);
            let mut expected = vec![2];
            expected.extend(vec![1; n - 2]);
            assert_eq!(p.conjugate(), part(&expected));
            assert!(!p.is_self_associate());
        }
    }

    #[test]
    fn degrees() {
        assert_eq!(part(&[2, 1]).hook_lengths().iter().product::<usize>(), 3);
        assert_eq!(part(&[2, 1]).degree(), 2);
        assert_eq!(part(&[5]).degree(), 1);
        assert_eq!(part(&[1, 1, 1]).degree(), 1);
    }

    #[test]
    fn values() {
        assert_eq!(mn_value(&part(&[2, 1]), &ct(&[3])), Ok(-1));
        assert_eq!(mn_value(&part(&[5, 2, 1]), &ct(&[2, 2, 2, 2])), Ok(0));
        for n in 4..10 {
            for t in 2..n {
                if (n - 1) % t == 0 {
                    let v = mn_value(&part(&[n - 1, 1]), &CycleType::uniform(n, t, true)).unwrap();
                    assert_eq!(v, 0);
                }
            }
        }
        assert!(matches!(
            mn_value(&part(&[2, 1]), &ct(&[2])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn degree_is_value_at_identity() {
        let mut ctx = MnContext::new();
        for n in 1..=10 {
            let id = CycleType::new(vec![1; n]);
            for lambda in Partition::all(n) {
                assert_eq!(ctx.value(&lambda, &id).unwrap() as u128, lambda.degree());
            }
        }
    }

    #[test]
    fn conjugate_partition_symmetry() {
        let mut ctx = MnContext::new();
        for n in 1..=8 {
            for lambda in Partition::all(n) {
                for mu in CycleType::all(n) {
                    let a = ctx.value(&lambda, &mu).unwrap();
                    let b = ctx.value(&lambda.conjugate(), &mu).unwrap();
                    assert_eq!(b, mu.sign() * a);
                }
            }
        }
    }

    fn centralizer_order(mu: &CycleType) -> i64 {
        let mut counts = HashMap::new();
        for &l in mu.lengths() {
            *counts.entry(l).or_insert(0i64) += 1;
        }
        counts
            .iter()
            .map(|(&l, &m)| (l as i64).pow(m as u32) * (1..=m).product::<i64>())
            .product()
    }

    #[test]
    fn column_orthogonality_gives_centralizer_orders() {
        let mut ctx = MnContext::new();
        for n in 1..=6 {
            let parts = Partition::all(n);
            let types = CycleType::all(n);
            for a in &types {
                for b in &types {
                    let s: i64 = parts
                        .iter()
                        .map(|l| ctx.value(l, a).unwrap() * ctx.value(l, b).unwrap())
                        .sum();
                    let expected = if a == b { centralizer_order(a) } else { 0 };
                    assert_eq!(s, expected, "n={n} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn witnesses() {
        let w = alternating_vanishing_witness(8, 2, false).unwrap();
        assert_eq!(w.partition, part(&[5, 2, 1]));
        let w = alternating_vanishing_witness(9, 2, true).unwrap();
        assert_eq!(w.partition, part(&[8, 1]));
        assert_eq!(w.cycle_type, ct(&[2, 2, 2, 2, 1]));
        let w = alternating_vanishing_witness(14, 7, false).unwrap();
        assert_eq!(w.partition, part(&[11, 2, 1]));
        assert_eq!(w.value, 0);
        assert!(alternating_vanishing_witness(8, 3, false).is_err());
        assert!(alternating_vanishing_witness(6, 2, false).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!("5,2,1".parse::<Partition>().unwrap(), part(&[5, 2, 1]));
        assert_eq!("(1, 2, 5)".parse::<Partition>().unwrap(), part(&[5, 2, 1]));
        assert_eq!("2,2,2,2".parse::<CycleType>().unwrap(), ct(&[2, 2, 2, 2]));
        assert!("2,x".parse::<Partition>().is_err());
    }
}
