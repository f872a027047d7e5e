//! Structural checks relating vanishing classes, prime graphs and
//! solvability. Each check evaluates its hypothesis first; a false
//! hypothesis gives `VACUOUS`, never a silent pass.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::analysis::{Analysis, AnalysisData};
use crate::chartab::dixon_character_table;
use crate::classes::ClassedGroup;
use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};
use crate::perm::Permutation;
use crate::primes::{gcd, is_power_of};
use crate::structure::{
    has_abelian_sylow_via_complement, is_normal, is_p_solvable, normal_closure, normal_closure_in,
    p_nilpotency, NormalSubgroup,
};
use crate::vanishing::VanishingReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckId {
    #[serde(rename = "CHK-PROP")]
    VertexSets,
    #[serde(rename = "CHK-THMA")]
    NonAdjacent,
    #[serde(rename = "CHK-THMB")]
    TrivialFitting,
    #[serde(rename = "CHK-COR")]
    IncompleteVertex,
    #[serde(rename = "CHK-L32")]
    UniqueSocle,
    #[serde(rename = "CHK-P34")]
    AlmostSimple,
    #[serde(rename = "CHK-DOLFI")]
    PNilpotent,
    #[serde(rename = "CHK-CD-A")]
    DegreeDivisors,
    #[serde(rename = "CHK-CD-B")]
    ClassGraph,
    #[serde(rename = "CHK-C44")]
    CoprimeChief,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::VertexSets,
        CheckId::NonAdjacent,
        CheckId::TrivialFitting,
        CheckId::IncompleteVertex,
        CheckId::UniqueSocle,
        CheckId::AlmostSimple,
        CheckId::PNilpotent,
        CheckId::DegreeDivisors,
        CheckId::ClassGraph,
        CheckId::CoprimeChief,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::VertexSets => "CHK-PROP",
            CheckId::NonAdjacent => "CHK-THMA",
            CheckId::TrivialFitting => "CHK-THMB",
            CheckId::IncompleteVertex => "CHK-COR",
            CheckId::UniqueSocle => "CHK-L32",
            CheckId::AlmostSimple => "CHK-P34",
            CheckId::PNilpotent => "CHK-DOLFI",
            CheckId::DegreeDivisors => "CHK-CD-A",
            CheckId::ClassGraph => "CHK-CD-B",
            CheckId::CoprimeChief => "CHK-C44",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    Indeterminate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
            Status::Indeterminate => "INDETERMINATE",
        })
    }
}

/// Data pinpointing a failure, re-checkable with [`audit_witness`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub primes: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representative: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_size: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub check: CheckId,
    pub status: Status,
    /// Whether the hypothesis held; `None` when it could not be decided.
    pub hypothesis: Option<bool>,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl TheoremVerdict {
    fn new(
        check: CheckId,
        status: Status,
        hypothesis: Option<bool>,
        detail: impl Into<String>,
    ) -> Self {
        TheoremVerdict {
            check,
            status,
            hypothesis,
            detail: detail.into(),
            witness: None,
        }
    }

    fn vacuous(check: CheckId, detail: impl Into<String>) -> Self {
        Self::new(check, Status::Vacuous, Some(false), detail)
    }

    fn pass(check: CheckId, detail: impl Into<String>) -> Self {
        Self::new(check, Status::Pass, Some(true), detail)
    }

    fn indeterminate(check: CheckId, detail: impl Into<String>) -> Self {
        Self::new(check, Status::Indeterminate, None, detail)
    }

    fn fail(check: CheckId, detail: impl Into<String>, witness: Witness) -> Self {
        TheoremVerdict {
            witness: Some(witness),
            ..Self::new(check, Status::Fail, Some(true), detail)
        }
    }
}

/// An explicit `(G, A, M/N, q)` configuration: `A` an abelian minimal
/// normal `q`-subgroup, `M/N` a chief factor of order coprime to `|A|`
/// with `N = C_M(A)`. Generators are given in cycle notation on the
/// points of `group`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoprimeChiefConfig {
    pub group: String,
    pub a: Vec<String>,
    pub m: Vec<String>,
    pub n: Vec<String>,
    pub prime: u64,
}

fn set_string(set: impl IntoIterator<Item = u64>) -> String {
    let items: Vec<String> = set.into_iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn pairs(primes: &[u64]) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            out.push((p, q));
        }
    }
    out
}

fn class_witness(d: &AnalysisData, primes: Vec<u64>, class: Option<usize>) -> Witness {
    Witness {
        primes,
        class,
        representative: class.map(|c| d.group.classes.rep(c).to_string()),
        class_size: class.map(|c| d.group.classes.size(c)),
    }
}

/// Runs every requested check.
pub fn check_theorems(
    analysis: &Analysis,
    checks: &[CheckId],
    coprime_chief: &[CoprimeChiefConfig],
) -> Vec<TheoremVerdict> {
    let d = match &analysis.data {
        Ok(d) => d,
        Err(reason) => {
            return checks
                .iter()
                .map(|&c| {
                    TheoremVerdict::indeterminate(c, format!("analysis incomplete: {reason}"))
                })
                .collect()
        }
    };
    let spec = analysis.spec();
    checks
        .iter()
        .map(|&c| match c {
            CheckId::VertexSets => check_vertex_sets(d),
            CheckId::NonAdjacent => check_non_adjacent(d),
            CheckId::TrivialFitting => check_trivial_fitting(d),
            CheckId::IncompleteVertex => check_incomplete_vertex(d),
            CheckId::UniqueSocle => check_unique_socle(d),
            CheckId::AlmostSimple => check_almost_simple(d),
            CheckId::PNilpotent => check_p_nilpotent(d),
            CheckId::DegreeDivisors => check_degree_divisors(d),
            CheckId::ClassGraph => check_class_graph(d),
            CheckId::CoprimeChief => {
                let mine: Vec<&CoprimeChiefConfig> = coprime_chief
                    .iter()
                    .filter(|c| same_spec(&c.group, &spec))
                    .collect();
                check_coprime_chief(d, &mine)
            }
        })
        .collect()
}

fn same_spec(a: &str, b: &str) -> bool {
    match (
        a.parse::<super::catalog::GroupSpec>(),
        b.parse::<super::catalog::GroupSpec>(),
    ) {
        (Ok(x), Ok(y)) => x == y,
        _ => a == b,
    }
}

/// A nonabelian minimal normal subgroup forces `V(G) = V_v(G)`.
pub fn check_vertex_sets(d: &AnalysisData) -> TheoremVerdict {
    let id = CheckId::VertexSets;
    if !d.has_nonabelian_minimal_normal() {
        return TheoremVerdict::vacuous(id, "every minimal normal subgroup is abelian");
    }
    let v = &d.vanishing;
    let missing: Vec<u64> = v.v.difference(&v.v_vanishing).copied().collect();
    if missing.is_empty() {
        return TheoremVerdict::pass(id, format!("V = V_v = {}", set_string(v.v.iter().copied())));
    }
    let class = (0..d.group.classes.len()).find(|&c| d.group.classes.size(c) % missing[0] == 0);
    TheoremVerdict::fail(
        id,
        format!(
            "primes {} lie in V but not in V_v",
            set_string(missing.iter().copied())
        ),
        class_witness(d, missing, class),
    )
}

fn solvability_verdict(
    d: &AnalysisData,
    id: CheckId,
    groups: &[Vec<u64>],
    what: &str,
) -> TheoremVerdict {
    for primes in groups {
        for &p in primes {
            match d.p_solvable(p) {
                None => {
                    return TheoremVerdict::indeterminate(id, "chief series exceeded the limits")
                }
                Some(false) => {
                    return TheoremVerdict::fail(
                        id,
                        format!(
                            "{what} {}, yet G is not {p}-solvable",
                            set_string(primes.iter().copied())
                        ),
                        class_witness(d, primes.clone(), None),
                    )
                }
                Some(true) => {}
            }
        }
    }
    TheoremVerdict::pass(
        id,
        format!("checked {} {what}(s); all solvable", groups.len()),
    )
}

/// Vertices of `Γ(G)` not joined in `Γ_v(G)` give `{p,q}`-solvability.
pub fn check_non_adjacent(d: &AnalysisData) -> TheoremVerdict {
    let id = CheckId::NonAdjacent;
    if !d.has_nonabelian_minimal_normal() {
        return TheoremVerdict::vacuous(id, "every minimal normal subgroup is abelian");
    }
    let v: Vec<u64> = d.vanishing.v.iter().copied().collect();
    let missing: Vec<Vec<u64>> = pairs(&v)
        .into_iter()
        .filter(|&(p, q)| !d.vanishing.vanishing_graph.has_edge(p, q))
        .map(|(p, q)| vec![p, q])
        .collect();
    if missing.is_empty() {
        return TheoremVerdict::vacuous(
            id,
            "every pair of vertices is adjacent in the vanishing graph",
        );
    }
    solvability_verdict(d, id, &missing, "non-adjacent pair")
}

/// Trivial Fitting subgroup: `π(G) = V_v(G)` and `Γ_v(G)` complete.
pub fn check_trivial_fitting(d: &AnalysisData) -> TheoremVerdict {
    let id = CheckId::TrivialFitting;
    if d.group.order() == 1 || d.fitting_order != 1 {
        return TheoremVerdict::vacuous(id, format!("|F(G)| = {}", d.fitting_order));
    }
    let pi = d.pi();
    let v = &d.vanishing;
    let missing: Vec<u64> = pi
        .iter()
        .copied()
        .filter(|p| !v.v_vanishing.contains(p))
        .collect();
    if !missing.is_empty() {
        return TheoremVerdict::fail(
            id,
            format!(
                "primes {} divide |G| but no vanishing class size",
                set_string(missing.iter().copied())
            ),
            class_witness(d, missing, None),
        );
    }
    if let Some((p, q)) = pairs(&pi)
        .into_iter()
        .find(|&(p, q)| !v.vanishing_graph.has_edge(p, q))
    {
        return TheoremVerdict::fail(
            id,
            format!("{p} and {q} are not adjacent in the vanishing graph"),
            class_witness(d, vec![p, q], None),
        );
    }
    TheoremVerdict::pass(
        id,
        format!("F(G) = 1; vanishing graph complete on {}", set_string(pi)),
    )
}

/// A prime that is not a complete vertex of `Γ_v(G)` gives
/// `p`-solvability. Primes outside `V_v(G)` count as not complete.
pub fn check_incomplete_vertex(d: &AnalysisData) -> TheoremVerdict {
    let id = CheckId::IncompleteVertex;
    if !d.has_nonabelian_minimal_normal() {
        return TheoremVerdict::vacuous(id, "every minimal normal subgroup is abelian");
    }
    let incomplete: Vec<Vec<u64>> = d
        .pi()
        .into_iter()
        .filter(|&p| {
            !d.vanishing
                .vanishing_graph
                .is_complete_vertex(p)
                .unwrap_or(false)
        })
        .map(|p| vec![p])
        .collect();
    if incomplete.is_empty() {
        return TheoremVerdict::vacuous(id, "every prime is a complete vertex");
    }
    solvability_verdict(d, id, &incomplete, "incomplete vertex")
}

/// A unique, nonabelian minimal normal subgroup gives `π(G) = V_v(G)`.
pub fn check_unique_socle(d: &AnalysisData) -> TheoremVerdict {
    let id = CheckId::UniqueSocle;
    if d.minimal_normals.len() != 1 || d.minimal_normals[0].is_abelian() {
        return TheoremVerdict::vacuous(id, "no unique nonabelian minimal normal subgroup");
    }
    let missing: Vec<u64> = d
        .pi()
        .into_iter()
        .filter(|p| !d.vanishing.v_vanishing.contains(p))
        .collect();
    if missing.is_empty() {
        TheoremVerdict::pass(id, format!("π(G) = V_v = {}", set_string(d.pi())))
    } else {
        TheoremVerdict::fail(
            id,
            "primes of |G| missing from V_v",
            class_witness(d, missing, None),
        )
    }
}

/// The socle when `G` is almost simple.
pub fn almost_simple_socle(d: &AnalysisData) -> Option<&NormalSubgroup> {
    if d.minimal_normals.len() != 1 {
        return None;
    }
    let s = &d.minimal_normals[0];
    if s.is_abelian() {
        return None;
    }
    // A unique nonabelian minimal normal subgroup has trivial centralizer,
    // so only simplicity of the socle remains.
    let inner = ClassedGroup::new(s.group().clone(), u64::MAX).ok()?;
    let simple = inner
        .classes
        .reps()
        .iter()
        .skip(1)
        .all(|r| normal_closure_in(&inner.group, std::slice::from_ref(r)).order() == s.order());
    simple.then_some(s)
}

/// Almost simple groups: every pair of primes of `|G|` is joined through a
/// vanishing class inside the socle.
pub fn check_almost_simple(d: &AnalysisData) -> TheoremVerdict {
    let id = CheckId::AlmostSimple;
    let Some(socle) = almost_simple_socle(d) else {
        return TheoremVerdict::vacuous(id, "not almost simple");
    };
    let classes = &d.group.classes;
    for (p, q) in pairs(&d.pi()) {
        let found = (0..classes.len()).any(|c| {
            socle.contains_class(c) && d.vanishing.is_vanishing(c) && classes.size(c) % (p * q) == 0
        });
        if !found {
            return TheoremVerdict::fail(
                id,
                format!("no vanishing socle class of size divisible by {}", p * q),
                class_witness(d, vec![p, q], None),
            );
        }
    }
    TheoremVerdict::pass(
        id,
        format!(
            "almost simple with socle of order {}; all prime pairs joined",
            socle.order()
        ),
    )
}

/// Primes outside `V_v(G)` give `p`-nilpotency with abelian Sylow
/// `p`-subgroups.
pub fn check_p_nilpotent(d: &AnalysisData) -> TheoremVerdict {
    let id = CheckId::PNilpotent;
    let outside: Vec<u64> = d
        .pi()
        .into_iter()
        .filter(|p| !d.vanishing.v_vanishing.contains(p))
        .collect();
    if outside.is_empty() {
        return TheoremVerdict::vacuous(id, "every prime of |G| lies in V_v");
    }
    for &p in &outside {
        let pn = p_nilpotency(&d.group, p);
        if !pn.is_p_nilpotent || !has_abelian_sylow_via_complement(&d.group, &pn.complement) {
            return TheoremVerdict::fail(
                id,
                format!(
                    "{p} lies outside V_v but p-nilpotent = {}, abelian Sylow = {}",
                    pn.is_p_nilpotent,
                    pn.is_p_nilpotent && has_abelian_sylow_via_complement(&d.group, &pn.complement)
                ),
                class_witness(d, vec![p], None),
            );
        }
    }
    TheoremVerdict::pass(
        id,
        format!(
            "primes {} outside V_v: p-nilpotent, abelian Sylow",
            set_string(outside)
        ),
    )
}

/// `pq` dividing a character degree forces `pq` to divide a class size.
pub fn check_degree_divisors(d: &AnalysisData) -> TheoremVerdict {
    let id = CheckId::DegreeDivisors;
    let hits: Vec<(u64, u64)> = pairs(&d.pi())
        .into_iter()
        .filter(|&(p, q)| d.table.degrees.iter().any(|&deg| deg % (p * q) == 0))
        .collect();
    if hits.is_empty() {
        return TheoremVerdict::vacuous(id, "no character degree divisible by two primes");
    }
    for &(p, q) in &hits {
        if !d.group.classes.sizes().iter().any(|&s| s % (p * q) == 0) {
            return TheoremVerdict::fail(
                id,
                format!("{} divides a degree but no class size", p * q),
                class_witness(d, vec![p, q], None),
            );
        }
    }
    TheoremVerdict::pass(
        id,
        format!("{} prime pairs from degrees checked", hits.len()),
    )
}

/// Vertices of `Γ(G)` not adjacent in `Γ(G)` give `{p,q}`-solvability.
pub fn check_class_graph(d: &AnalysisData) -> TheoremVerdict {
    let id = CheckId::ClassGraph;
    let v: Vec<u64> = d.vanishing.v.iter().copied().collect();
    let missing: Vec<Vec<u64>> = pairs(&v)
        .into_iter()
        .filter(|&(p, q)| !d.vanishing.graph.has_edge(p, q))
        .map(|(p, q)| vec![p, q])
        .collect();
    if missing.is_empty() {
        return TheoremVerdict::vacuous(id, "the class-size graph is complete");
    }
    solvability_verdict(d, id, &missing, "non-adjacent pair")
}

struct CoprimeChiefSetting {
    m: NormalSubgroup,
    n: NormalSubgroup,
}

fn parse_gens(gens: &[String], degree: usize) -> Result<Vec<Permutation>> {
    gens.iter().map(|g| Permutation::parse(g, degree)).collect()
}

/// Validates the hypotheses of a configuration; `Err` carries the reason
/// it does not apply.
fn coprime_chief_setting(
    d: &AnalysisData,
    c: &CoprimeChiefConfig,
) -> std::result::Result<CoprimeChiefSetting, String> {
    let g = &d.group;
    let degree = g.group.degree();
    let normal = |gens: &[String], name: &str| -> std::result::Result<NormalSubgroup, String> {
        let gens = parse_gens(gens, degree).map_err(|e| format!("{name}: {e}"))?;
        let sub = PermGroup::new(degree, gens.clone()).map_err(|e| format!("{name}: {e}"))?;
        let closure = normal_closure(g, &gens).map_err(|e| format!("{name}: {e}"))?;
        if !is_normal(&g.group, &sub) || closure.order() != sub.order() {
            return Err(format!("{name} is not normal"));
        }
        Ok(closure)
    };
    let a = normal(&c.a, "A")?;
    let m = normal(&c.m, "M")?;
    let n = normal(&c.n, "N")?;
    if !a.is_abelian() || !d.minimal_normals.contains(&a) {
        return Err("A is not an abelian minimal normal subgroup".into());
    }
    if !is_power_of(a.order(), c.prime) || a.order() == 1 {
        return Err(format!("|A| = {} is not a power of {}", a.order(), c.prime));
    }
    if !n.is_contained_in(&m) || n.order() == m.order() {
        return Err("N is not a proper subgroup of M".into());
    }
    // M/N is chief when every class of M outside N regenerates M with N.
    for i in m
        .classes()
        .iter()
        .copied()
        .filter(|&i| !n.contains_class(i))
    {
        let mut seeds = n.generators().to_vec();
        seeds.push(g.classes.rep(i).clone());
        if normal_closure_in(&g.group, &seeds).order() != m.order() {
            return Err("M/N is not a chief factor".into());
        }
    }
    if gcd(a.order(), m.order() / n.order()) != 1 {
        return Err("|A| and |M/N| are not coprime".into());
    }
    let centralizer = m
        .classes()
        .iter()
        .flat_map(|&i| g.classes.members(i).iter())
        .filter(|&&id| {
            let x = g.elements.get(id as usize);
            a.generators().iter().all(|y| x.compose(y) == y.compose(x))
        })
        .count() as u64;
    let n_centralizes = n
        .generators()
        .iter()
        .all(|x| a.generators().iter().all(|y| x.compose(y) == y.compose(x)));
    if centralizer != n.order() || !n_centralizes {
        return Err("N is not the centralizer of A in M".into());
    }
    Ok(CoprimeChiefSetting { m, n })
}

/// Explicit configurations: every element of `M \ N` is vanishing.
pub fn check_coprime_chief(d: &AnalysisData, configs: &[&CoprimeChiefConfig]) -> TheoremVerdict {
    let id = CheckId::CoprimeChief;
    if configs.is_empty() {
        return TheoremVerdict::vacuous(id, "no configuration for this group");
    }
    let mut applied = 0;
    let mut skipped = Vec::new();
    for c in configs {
        let setting = match coprime_chief_setting(d, c) {
            Ok(s) => s,
            Err(reason) => {
                skipped.push(reason);
                continue;
            }
        };
        applied += 1;
        for &i in setting.m.classes() {
            if !setting.n.contains_class(i) && !d.vanishing.is_vanishing(i) {
                return TheoremVerdict::fail(
                    id,
                    "an element of M \\ N is not vanishing",
                    class_witness(d, vec![c.prime], Some(i)),
                );
            }
        }
    }
    if applied == 0 {
        return TheoremVerdict::vacuous(id, format!("hypotheses not met: {}", skipped.join("; ")));
    }
    TheoremVerdict::pass(id, format!("{applied} configurations: M \\ N vanishing"))
}

/// Re-derives the claim a `FAIL` witness makes from a freshly computed
/// character table and structure; `Ok(true)` when the witness stands.
pub fn audit_witness(d: &AnalysisData, verdict: &TheoremVerdict, limits: &Limits) -> Result<bool> {
    let Some(w) = &verdict.witness else {
        return Ok(false);
    };
    let g = &d.group;
    let table = dixon_character_table(g)?;
    let v = VanishingReport::from_table(&table);
    let primes = &w.primes;
    let solvable_all = |ps: &[u64]| -> Result<bool> {
        for &p in ps {
            if !is_p_solvable(g, p, limits)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let pq = primes.iter().product::<u64>();
    Ok(match verdict.check {
        CheckId::VertexSets => {
            !primes.is_empty()
                && primes
                    .iter()
                    .all(|p| v.v.contains(p) && !v.v_vanishing.contains(p))
        }
        CheckId::UniqueSocle => {
            !primes.is_empty()
                && primes
                    .iter()
                    .all(|p| g.order() % p == 0 && !v.v_vanishing.contains(p))
        }
        CheckId::TrivialFitting => match primes.as_slice() {
            [p, q] => !v.vanishing_graph.has_edge(*p, *q),
            ps => !ps.is_empty() && ps.iter().all(|p| !v.v_vanishing.contains(p)),
        },
        CheckId::NonAdjacent => {
            primes.len() == 2
                && primes.iter().all(|p| v.v.contains(p))
                && !v.vanishing_graph.has_edge(primes[0], primes[1])
                && !solvable_all(primes)?
        }
        CheckId::ClassGraph => {
            primes.len() == 2
                && primes.iter().all(|p| v.v.contains(p))
                && !v.graph.has_edge(primes[0], primes[1])
                && !solvable_all(primes)?
        }
        CheckId::IncompleteVertex => {
            primes.len() == 1
                && !v
                    .vanishing_graph
                    .is_complete_vertex(primes[0])
                    .unwrap_or(false)
                && !solvable_all(primes)?
        }
        CheckId::PNilpotent => {
            let [p] = primes.as_slice() else {
                return Ok(false);
            };
            let pn = p_nilpotency(g, *p);
            !v.v_vanishing.contains(p)
                && !(pn.is_p_nilpotent && has_abelian_sylow_via_complement(g, &pn.complement))
        }
        CheckId::DegreeDivisors => {
            primes.len() == 2
                && table.degrees.iter().any(|&deg| deg % pq == 0)
                && !g.classes.sizes().iter().any(|&s| s % pq == 0)
        }
        CheckId::AlmostSimple => {
            let Some(socle) = almost_simple_socle(d) else {
                return Ok(false);
            };
            primes.len() == 2
                && !(0..g.classes.len()).any(|c| {
                    socle.contains_class(c) && v.is_vanishing(c) && g.classes.size(c) % pq == 0
                })
        }
        CheckId::CoprimeChief => match w.class {
            Some(c) => c < g.classes.len() && !v.is_vanishing(c),
            None => false,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::super::catalog::parse_group;
    use super::*;

    fn analyse(spec: &str) -> Analysis {
        Analysis::new(parse_group(spec).unwrap(), &Limits::default())
    }

    fn verdicts(spec: &str) -> Vec<TheoremVerdict> {
        check_theorems(&analyse(spec), &CheckId::ALL, &[])
    }

    fn status(vs: &[TheoremVerdict], id: CheckId) -> Status {
        vs.iter().find(|v| v.check == id).unwrap().status
    }

    #[test]
    fn check_ids_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.name().parse::<CheckId>().unwrap(), c);
        }
        assert!("CHK-NOPE".parse::<CheckId>().is_err());
    }

    #[test]
    fn a5_verdicts() {
        let vs = verdicts("A5");
        assert_eq!(status(&vs, CheckId::TrivialFitting), Status::Pass);
        assert_eq!(status(&vs, CheckId::VertexSets), Status::Pass);
        assert_eq!(status(&vs, CheckId::NonAdjacent), Status::Vacuous);
        assert_eq!(status(&vs, CheckId::IncompleteVertex), Status::Vacuous);
        assert_eq!(status(&vs, CheckId::UniqueSocle), Status::Pass);
        assert_eq!(status(&vs, CheckId::AlmostSimple), Status::Pass);
        assert_eq!(status(&vs, CheckId::PNilpotent), Status::Vacuous);
        // degrees 1, 3, 3, 4, 5: no degree has two prime divisors
        assert_eq!(status(&vs, CheckId::DegreeDivisors), Status::Vacuous);
    }

    #[test]
    fn c6_is_vacuous() {
        let vs = verdicts("C6");
        for id in [
            CheckId::VertexSets,
            CheckId::NonAdjacent,
            CheckId::TrivialFitting,
            CheckId::IncompleteVertex,
            CheckId::UniqueSocle,
            CheckId::AlmostSimple,
        ] {
            assert_eq!(status(&vs, id), Status::Vacuous, "{id}");
        }
        assert_eq!(status(&vs, CheckId::PNilpotent), Status::Pass);
        assert!(vs.iter().all(|v| v.status != Status::Fail));
    }

    #[test]
    fn s3_x_a5() {
        let vs = verdicts("S3 x A5");
        assert_eq!(status(&vs, CheckId::VertexSets), Status::Pass);
        assert_eq!(status(&vs, CheckId::AlmostSimple), Status::Vacuous);
        assert!(vs.iter().all(|v| v.status != Status::Fail));
    }

    #[test]
    fn s5_is_almost_simple() {
        let a = analyse("S5");
        let d = a.data.as_ref().unwrap();
        assert_eq!(almost_simple_socle(d).unwrap().order(), 60);
        assert_eq!(check_almost_simple(d).status, Status::Pass);
        let a = analyse("A5 x A5");
        assert!(almost_simple_socle(a.data.as_ref().unwrap()).is_none());
    }

    fn cfg(group: &str, a: &[&str], m: &[&str], n: &[&str], prime: u64) -> CoprimeChiefConfig {
        let v = |s: &[&str]| s.iter().map(|x| x.to_string()).collect();
        CoprimeChiefConfig {
            group: group.into(),
            a: v(a),
            m: v(m),
            n: v(n),
            prime,
        }
    }

    #[test]
    fn coprime_chief_configurations() {
        let v4 = ["(1 2)(3 4)", "(1 3)(2 4)"];
        let a4 = ["(1 2 3)", "(1 2)(3 4)"];
        let good = cfg("S4", &v4, &a4, &v4, 2);
        let a = analyse("S4");
        let vs = check_theorems(&a, &[CheckId::CoprimeChief], &[good.clone()]);
        assert_eq!(vs[0].status, Status::Pass, "{}", vs[0].detail);

        // M = S4 over N = V4 is not a chief factor.
        let bad = cfg("S4", &v4, &["(1 2 3 4)", "(1 2)"], &v4, 2);
        let vs = check_theorems(&a, &[CheckId::CoprimeChief], &[bad]);
        assert_eq!(vs[0].status, Status::Vacuous, "{}", vs[0].detail);

        let vs = check_theorems(&analyse("A4"), &[CheckId::CoprimeChief], &[good]);
        assert_eq!(vs[0].status, Status::Vacuous);
    }

    #[test]
    fn witnesses_are_audited() {
        let a = analyse("S3");
        let d = a.data.as_ref().unwrap();
        let limits = Limits::default();
        let mut fake = TheoremVerdict::fail(
            CheckId::VertexSets,
            "fabricated",
            Witness {
                primes: vec![2],
                ..Witness::default()
            },
        );
        assert!(audit_witness(d, &fake, &limits).unwrap());
        fake.witness.as_mut().unwrap().primes = vec![3];
        assert!(!audit_witness(d, &fake, &limits).unwrap());
        let fake = TheoremVerdict::fail(
            CheckId::NonAdjacent,
            "fabricated",
            Witness {
                primes: vec![2, 3],
                ..Witness::default()
            },
        );
        assert!(!audit_witness(d, &fake, &limits).unwrap());
    }

    #[test]
    fn caps_give_indeterminate() {
        let limits = Limits {
            enum_cap: 10,
            ..Limits::default()
        };
        let a = Analysis::new(parse_group("S4").unwrap(), &limits);
        let vs = check_theorems(&a, &CheckId::ALL, &[]);
        assert!(vs
            .iter()
            .all(|v| v.status == Status::Indeterminate && v.hypothesis.is_none()));
        assert_eq!(a.report(vs).status, "indeterminate");
    }
}
