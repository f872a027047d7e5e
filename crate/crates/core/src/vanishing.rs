//! Vanishing classes and prime graphs on class sizes.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chartab::{dixon_character_table, CharacterTable};
use crate::classes::ClassedGroup;
use crate::error::{Error, Result};
use crate::primes::prime_divisors;

/// Classes on which some irreducible character takes the value 0.
pub fn vanishing_classes(table: &CharacterTable) -> BTreeSet<usize> {
    let k = table.class_sizes.len();
    (0..k)
        .filter(|&c| table.values.iter().any(|row| row[c].is_zero()))
        .collect()
}

/// Prime graph on a multiset of positive integers: vertices are the primes
/// dividing some member, `{p, q}` is an edge when `pq` divides a single
/// member.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PrimeGraph {
    pub vertices: BTreeSet<u64>,
    /// Unordered pairs stored as `(smaller, larger)`.
    pub edges: BTreeSet<(u64, u64)>,
}

impl PrimeGraph {
    pub fn from_sizes(sizes: &[u64]) -> Self {
        let mut g = PrimeGraph::default();
        for &s in sizes {
            let primes = prime_divisors(s);
            for (i, &p) in primes.iter().enumerate() {
                g.vertices.insert(p);
                for &q in &primes[i + 1..] {
                    g.edges.insert((p, q));
                }
            }
        }
        g
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        self.edges.contains(&(p.min(q), p.max(q)))
    }

    pub fn is_subgraph_of(&self, other: &PrimeGraph) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.is_subset(&other.edges)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertices.len();
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    /// Whether `p` is adjacent to every other vertex. Errors when `p` is
    /// not a vertex at all.
    pub fn is_complete_vertex(&self, p: u64) -> Result<bool> {
        if !self.vertices.contains(&p) {
            return Err(Error::NotAVertex(p));
        }
        Ok(self.vertices.iter().all(|&q| q == p || self.has_edge(p, q)))
    }
}

pub fn build_prime_graph(sizes: &[u64]) -> PrimeGraph {
    PrimeGraph::from_sizes(sizes)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub vanishing_classes: BTreeSet<usize>,
    /// Class sizes in class order, one per class.
    pub all_sizes: Vec<u64>,
    /// Sizes of the vanishing classes, in class order.
    pub vanishing_sizes: Vec<u64>,
    /// Primes dividing some class size.
    pub v: BTreeSet<u64>,
    /// Primes dividing some vanishing class size.
    pub v_vanishing: BTreeSet<u64>,
    pub graph: PrimeGraph,
    pub vanishing_graph: PrimeGraph,
}

impl VanishingReport {
    pub fn from_table(table: &CharacterTable) -> Self {
        let vanishing = vanishing_classes(table);
        let all_sizes = table.class_sizes.clone();
        let vanishing_sizes: Vec<u64> = vanishing.iter().map(|&c| all_sizes[c]).collect();
        let graph = PrimeGraph::from_sizes(&all_sizes);
        let vanishing_graph = PrimeGraph::from_sizes(&vanishing_sizes);
        VanishingReport {
            vanishing_classes: vanishing,
            v: graph.vertices.clone(),
            v_vanishing: vanishing_graph.vertices.clone(),
            all_sizes,
            vanishing_sizes,
            graph,
            vanishing_graph,
        }
    }

    pub fn is_vanishing(&self, class: usize) -> bool {
        self.vanishing_classes.contains(&class)
    }
}

/// Character table and vanishing data for an enumerated group.
pub fn vanishing_report(g: &ClassedGroup) -> Result<(CharacterTable, VanishingReport)> {
    let table = dixon_character_table(g)?;
    let report = VanishingReport::from_table(&table);
    Ok((table, report))
}
