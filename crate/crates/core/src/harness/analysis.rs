//! Per-group analysis: everything the checks need, computed once, plus the
//! serializable report.

use serde::Serialize;

use super::catalog::CatalogGroup;
use super::checks::TheoremVerdict;
use crate::chartab::{dixon_character_table, CharacterTable};
use crate::classes::ClassedGroup;
use crate::error::Result;
use crate::group::Limits;
use crate::primes::prime_divisors;
use crate::structure::{structure_report, ClassClosures, NormalSubgroup, StructureReport};
use crate::vanishing::VanishingReport;

/// Fully computed data for one group.
pub struct AnalysisData {
    pub group: ClassedGroup,
    pub table: CharacterTable,
    pub vanishing: VanishingReport,
    pub closures: ClassClosures,
    pub minimal_normals: Vec<NormalSubgroup>,
    pub fitting_order: u64,
    pub structure: StructureReport,
}

impl AnalysisData {
    pub fn compute(catalog: &CatalogGroup, limits: &Limits) -> Result<Self> {
        let group = ClassedGroup::new(catalog.group.clone(), limits.enum_cap)?;
        let table = dixon_character_table(&group)?;
        let vanishing = VanishingReport::from_table(&table);
        let closures = ClassClosures::new(&group);
        let minimal_normals = closures.minimal_normal_subgroups();
        let structure = structure_report(&group, &closures, limits);
        Ok(AnalysisData {
            fitting_order: structure.fitting_order,
            group,
            table,
            vanishing,
            closures,
            minimal_normals,
            structure,
        })
    }

    pub fn has_nonabelian_minimal_normal(&self) -> bool {
        self.minimal_normals.iter().any(|n| !n.is_abelian())
    }

    /// Primes dividing `|G|`.
    pub fn pi(&self) -> Vec<u64> {
        prime_divisors(self.group.order())
    }

    /// `Some(p-solvable)`, or `None` when the chief series was not
    /// computable within the limits.
    pub fn p_solvable(&self, p: u64) -> Option<bool> {
        if self.group.order() % p != 0 {
            return Some(true);
        }
        self.structure
            .primes
            .iter()
            .find(|f| f.prime == p)
            .and_then(|f| f.p_solvable)
    }
}

pub struct Analysis {
    pub catalog: CatalogGroup,
    /// `Err` when a cap stopped the computation.
    pub data: std::result::Result<AnalysisData, String>,
}

impl Analysis {
    pub fn new(catalog: CatalogGroup, limits: &Limits) -> Self {
        let data = AnalysisData::compute(&catalog, limits).map_err(|e| e.to_string());
        Analysis { catalog, data }
    }

    pub fn spec(&self) -> String {
        self.catalog.spec.to_string()
    }

    pub fn report(&self, verdicts: Vec<TheoremVerdict>) -> AnalysisReport {
        let order = self.catalog.group.order();
        let mut report = AnalysisReport {
            spec: self.spec(),
            order,
            degree: self.catalog.group.degree(),
            primes: prime_divisors(order),
            status: "complete",
            reason: None,
            classes: None,
            character_degrees: None,
            character_table: None,
            vanishing: None,
            structure: None,
            verdicts,
        };
        match &self.data {
            Err(reason) => {
                report.status = "indeterminate";
                report.reason = Some(reason.clone());
            }
            Ok(d) => {
                let c = &d.group.classes;
                report.classes = Some(ClassData {
                    count: c.len(),
                    sizes: c.sizes().to_vec(),
                    element_orders: (0..c.len()).map(|i| c.element_order(i)).collect(),
                    representatives: c.reps().iter().map(|r| r.to_string()).collect(),
                });
                report.character_degrees = Some(d.table.degrees.clone());
                report.character_table = Some(d.table.clone());
                report.vanishing = Some(d.vanishing.clone());
                report.structure = Some(d.structure.clone());
            }
        }
        report
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassData {
    pub count: usize,
    pub sizes: Vec<u64>,
    pub element_orders: Vec<u64>,
    /// Cycle notation, 1-based points.
    pub representatives: Vec<String>,
}

/// Serialized per-group report. Fields that could not be computed within
/// the limits are `null` and `status` is `"indeterminate"`.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub spec: String,
    pub order: u64,
    pub degree: usize,
    pub primes: Vec<u64>,
    pub status: &'static str,
    pub reason: Option<String>,
    pub classes: Option<ClassData>,
    pub character_degrees: Option<Vec<u64>>,
    pub character_table: Option<CharacterTable>,
    pub vanishing: Option<VanishingReport>,
    pub structure: Option<StructureReport>,
    pub verdicts: Vec<TheoremVerdict>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Short human-readable summary.
    pub fn headline(&self) -> String {
        let mut s = format!(
            "{}: order {}, degree {}",
            self.spec, self.order, self.degree
        );
        match &self.vanishing {
            Some(v) => {
                let fmt = |set: &std::collections::BTreeSet<u64>| {
                    let items: Vec<String> = set.iter().map(u64::to_string).collect();
                    format!("{{{}}}", items.join(","))
                };
                s.push_str(&format!(
                    "; V = {}, V_v = {}",
                    fmt(&v.v),
                    fmt(&v.v_vanishing)
                ));
                if v.v_vanishing != v.v {
                    s.push_str(" (V_v strictly smaller)");
                }
            }
            None => s.push_str(&format!(
                "; indeterminate: {}",
                self.reason.as_deref().unwrap_or("unknown")
            )),
        }
        s
    }
}
