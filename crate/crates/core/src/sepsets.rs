//! Exhaustive search for two disjoint point sets whose joint setwise
//! stabilizer has index divisible by the requested primes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};

/// Largest point set the exhaustive search accepts.
pub const MAX_POINTS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatingSubsets {
    /// 1-based points.
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    /// Index of the intersection of the two setwise stabilizers.
    pub index: u64,
}

fn mask_points(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

/// Finds disjoint nonempty `first`, `second` with every prime of
/// `{p, q}` that divides `|G|` also dividing `|G : G_first ∩ G_second|`.
///
/// Pairs are tried by total size, then lexicographically by the sorted
/// point lists of `first` and then `second`; the first witness is returned.
pub fn find_separating_subsets(
    g: &PermGroup,
    p: u64,
    q: u64,
    limits: &Limits,
) -> Result<SeparatingSubsets> {
    let n = g.degree();
    if n > MAX_POINTS {
        return Err(Error::Bound(format!(
            "{n} points exceed the exhaustive search bound {MAX_POINTS}"
        )));
    }
    let elements = g.enumerate(limits.enum_cap)?;
    let order = g.order();
    let wanted: Vec<u64> = [p, q].into_iter().filter(|&r| order % r == 0).collect();

    // point images as bit positions, per element
    let images: Vec<Vec<u32>> = elements
        .elements()
        .iter()
        .map(|e| (0..n).map(|i| 1u32 << e.apply(i)).collect())
        .collect();
    let image_of = |e: usize, mask: u32| -> u32 {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= images[e][i];
            m &= m - 1;
        }
        out
    };

    let mut pairs: Vec<(Vec<usize>, Vec<usize>, u32, u32)> = Vec::new();
    for total in 2..=n {
        pairs.clear();
        // each point: 0 = unused, 1 = first, 2 = second
        let states = 3usize.pow(n as u32);
        for code in 0..states {
            let (mut a, mut b, mut c) = (0u32, 0u32, code);
            for i in 0..n {
                match c % 3 {
                    1 => a |= 1 << i,
                    2 => b |= 1 << i,
                    _ => {}
                }
                c /= 3;
            }
            if a != 0 && b != 0 && (a | b).count_ones() as usize == total {
                pairs.push((mask_points(a), mask_points(b), a, b));
            }
        }
        pairs.sort();
        for (first, second, a, b) in &pairs {
            let stabilizer = (0..elements.len())
                .filter(|&e| image_of(e, *a) == *a && image_of(e, *b) == *b)
                .count() as u64;
            let index = order / stabilizer;
            if wanted.iter().all(|r| index % r == 0) {
                return Ok(SeparatingSubsets {
                    first: first.clone(),
                    second: second.clone(),
                    index,
                });
            }
        }
    }
    Err(Error::NoSeparatingSubsets { p, q })
}
