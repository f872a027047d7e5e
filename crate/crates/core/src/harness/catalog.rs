//! Group specs: `S<n>`, `A<n>`, `C<n>`, `D<m>` (dihedral of order `m`),
//! `PSL(2,<p>)` and `file:<path>`, joined by `x` for direct products on
//! disjoint point sets.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::primes::{gcd, is_prime};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    /// Order, not degree.
    Dihedral(usize),
    Psl2(u64),
    File(PathBuf),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Symmetric(n) => write!(f, "S{n}"),
            Atom::Alternating(n) => write!(f, "A{n}"),
            Atom::Cyclic(n) => write!(f, "C{n}"),
            Atom::Dihedral(m) => write!(f, "D{m}"),
            Atom::Psl2(p) => write!(f, "PSL(2,{p})"),
            Atom::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Spec(format!("unrecognised group atom {s:?}"));
        if let Some(path) = s.strip_prefix("file:") {
            if path.is_empty() {
                return Err(bad());
            }
            return Ok(Atom::File(PathBuf::from(path)));
        }
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(rest) = compact.strip_prefix("PSL(2,") {
            let p: u64 = rest
                .strip_suffix(')')
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?;
            if !is_prime(p) {
                return Err(Error::Spec(format!("PSL(2,{p}): {p} is not prime")));
            }
            return Ok(Atom::Psl2(p));
        }
        let (kind, digits) = compact.split_at(compact.chars().next().map_or(0, |c| c.len_utf8()));
        let n: usize = digits.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(Error::Spec(format!("{s}: degree must be positive")));
        }
        match kind {
            "S" => Ok(Atom::Symmetric(n)),
            "A" => Ok(Atom::Alternating(n)),
            "C" => Ok(Atom::Cyclic(n)),
            "D" if n >= 4 && n % 2 == 0 => Ok(Atom::Dihedral(n)),
            "D" => Err(Error::Spec(format!(
                "{s}: dihedral order must be even and at least 4"
            ))),
            _ => Err(bad()),
        }
    }
}

/// A parsed spec: one atom per direct factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub factors: Vec<Atom>,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut current: Vec<&str> = Vec::new();
        for token in s.split_whitespace() {
            if token == "x" {
                factors.push(current.join(" ").parse()?);
                current.clear();
            } else {
                current.push(token);
            }
        }
        factors.push(current.join(" ").parse::<Atom>()?);
        Ok(GroupSpec { factors })
    }
}

/// One direct factor, acting on points `offset..offset + group.degree()`.
#[derive(Clone, Debug)]
pub struct Factor {
    pub atom: Atom,
    pub offset: usize,
    pub group: PermGroup,
}

#[derive(Clone, Debug)]
pub struct CatalogGroup {
    pub spec: GroupSpec,
    pub group: PermGroup,
    pub factors: Vec<Factor>,
}

impl CatalogGroup {
    /// Restriction of `x` to the points of factor `i`.
    pub fn component(&self, x: &Permutation, i: usize) -> Permutation {
        let f = &self.factors[i];
        let images = (f.offset..f.offset + f.group.degree())
            .map(|j| (x.apply(j) - f.offset) as u32)
            .collect();
        Permutation::from_images(images).expect("factor blocks are invariant")
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Known order of an atom, `None` for files.
pub fn expected_order(atom: &Atom) -> Option<u64> {
    match *atom {
        Atom::Symmetric(n) => Some(factorial(n)),
        Atom::Alternating(n) => Some((factorial(n) / 2).max(1)),
        Atom::Cyclic(n) => Some(n as u64),
        Atom::Dihedral(m) => Some(m as u64),
        Atom::Psl2(p) => Some(p * (p * p - 1) / gcd(2, p - 1)),
        Atom::File(_) => None,
    }
}

fn cycle(points: impl IntoIterator<Item = usize>) -> Vec<usize> {
    points.into_iter().collect()
}

fn build_atom(atom: &Atom) -> Result<PermGroup> {
    let perms = |degree: usize, gens: Vec<Vec<Vec<usize>>>| -> Result<PermGroup> {
        let gens = gens
            .iter()
            .map(|c| Permutation::from_cycles(degree, c))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    };
    match atom {
        Atom::Symmetric(n) => {
            let n = *n;
            if n < 2 {
                return Ok(PermGroup::trivial(1));
            }
            perms(n, vec![vec![cycle(0..n)], vec![vec![0, 1]]])
        }
        Atom::Alternating(n) => {
            let n = *n;
            if n < 3 {
                return Ok(PermGroup::trivial(n));
            }
            let long = if n % 2 == 1 { cycle(0..n) } else { cycle(1..n) };
            perms(n, vec![vec![vec![0, 1, 2]], vec![long]])
        }
        Atom::Cyclic(n) => {
            if *n < 2 {
                return Ok(PermGroup::trivial(1));
            }
            perms(*n, vec![vec![cycle(0..*n)]])
        }
        Atom::Dihedral(4) => perms(
            4,
            vec![vec![vec![0, 1], vec![2, 3]], vec![vec![0, 2], vec![1, 3]]],
        ),
        Atom::Dihedral(m) => {
            let k = m / 2;
            let reflection: Vec<Vec<usize>> = (1..k)
                .filter(|&j| j < k - j)
                .map(|j| vec![j, k - j])
                .collect();
            perms(k, vec![vec![cycle(0..k)], reflection])
        }
        Atom::Psl2(p) => {
            // Points 0..p are field elements, p is infinity.
            let p = *p as usize;
            let translate: Vec<u32> = (0..=p)
                .map(|z| if z == p { p } else { (z + 1) % p } as u32)
                .collect();
            let invert: Vec<u32> = (0..=p)
                .map(|z| match z {
                    0 => p,
                    z if z == p => 0,
                    z => {
                        let inv = crate::primes::pow_mod(z as u64, p as u64 - 2, p as u64) as usize;
                        (p - inv) % p
                    }
                } as u32)
                .collect();
            PermGroup::new(
                p + 1,
                vec![
                    Permutation::from_images(translate)?,
                    Permutation::from_images(invert)?,
                ],
            )
        }
        Atom::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            parse_generator_file(&text)
        }
    }
}

/// `degree: n` on the first line, then one generator in cycle notation per
/// line. Blank lines and `#` comments are ignored.
pub fn parse_generator_file(text: &str) -> Result<PermGroup> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Spec("empty generator file".into()))?;
    let degree: usize = header
        .strip_prefix("degree:")
        .and_then(|d| d.trim().parse().ok())
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::Spec(format!("expected `degree: <n>`, found {header:?}")))?;
    let gens = lines
        .map(|l| Permutation::parse(l, degree))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(degree, gens)
}

pub fn catalog_group(spec: &GroupSpec) -> Result<CatalogGroup> {
    let mut factors = Vec::new();
    let mut offset = 0;
    for atom in &spec.factors {
        let group = build_atom(atom)?;
        if let Some(order) = expected_order(atom) {
            if group.order() != order {
                return Err(Error::Spec(format!(
                    "{atom} built with order {}, expected {order}",
                    group.order()
                )));
            }
        }
        let degree = group.degree();
        factors.push(Factor {
            atom: atom.clone(),
            offset,
            group,
        });
        offset += degree;
    }
    let total = offset;
    let gens: Vec<Permutation> = factors
        .iter()
        .flat_map(|f| {
            f.group
                .generators()
                .iter()
                .map(move |g| g.shifted(f.offset, total))
        })
        .collect();
    let group = PermGroup::new(total, gens)?;
    let product: Option<u64> = factors
        .iter()
        .try_fold(1u64, |acc, f| acc.checked_mul(f.group.order()));
    if product != Some(group.order()) {
        return Err(Error::Spec(format!("{spec}: product order mismatch")));
    }
    Ok(CatalogGroup {
        spec: spec.clone(),
        group,
        factors,
    })
}

/// Parses and builds in one step.
pub fn parse_group(text: &str) -> Result<CatalogGroup> {
    catalog_group(&text.parse()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_specs() {
        let s: GroupSpec = "S3 x A5".parse().unwrap();
        assert_eq!(s.factors, vec![Atom::Symmetric(3), Atom::Alternating(5)]);
        assert_eq!(s.to_string(), "S3 x A5");
        let s: GroupSpec = "PSL(2, 7)".parse().unwrap();
        assert_eq!(s.factors, vec![Atom::Psl2(7)]);
        for bad in [
            "", "S", "Q8", "D6x", "D5", "D2", "PSL(2,8)", "S0", "S3 x", "x A5",
        ] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn orders_and_degrees() {
        let cases: &[(&str, u64, usize)] = &[
            ("S3", 6, 3),
            ("S1", 1, 1),
            ("A4", 12, 4),
            ("A7", 2520, 7),
            ("A2", 1, 2),
            ("C1", 1, 1),
            ("C12", 12, 12),
            ("D4", 4, 4),
            ("D8", 8, 4),
            ("D12", 12, 6),
            ("PSL(2,5)", 60, 6),
            ("PSL(2,7)", 168, 8),
            ("PSL(2,2)", 6, 3),
            ("S3 x A5", 360, 8),
            ("A5 x A5", 3600, 10),
        ];
        for &(spec, order, degree) in cases {
            let g = parse_group(spec).unwrap();
            assert_eq!(
                (g.group.order(), g.group.degree()),
                (order, degree),
                "{spec}"
            );
        }
    }

    #[test]
    fn components_split_products() {
        let g = parse_group("C2 x S3").unwrap();
        let x = Permutation::parse("(1 2)(3 4 5)", 5).unwrap();
        assert_eq!(g.component(&x, 0).to_string(), "(1 2)");
        assert_eq!(g.component(&x, 1).to_string(), "(1 2 3)");
    }

    #[test]
    fn generator_files() {
        let g = parse_generator_file("# klein\ndegree: 4\n(1 2)(3 4)\n(1 3)(2 4)\n").unwrap();
        assert_eq!(g.order(), 4);
        assert!(parse_generator_file("(1 2)\n").is_err());
        assert!(parse_generator_file("degree: 2\n(1 3)\n").is_err());
        assert!(parse_group("file:/nonexistent/gens.txt").is_err());
    }
}
