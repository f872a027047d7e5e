//! Group catalog, per-group reports, structural checks and corpus runs.

pub mod analysis;
pub mod catalog;
pub mod checks;
pub mod corpus;
pub mod dot;

pub use analysis::{Analysis, AnalysisData, AnalysisReport};
pub use catalog::{catalog_group, parse_group, Atom, CatalogGroup, GroupSpec};
pub use checks::{
    audit_witness, check_theorems, CheckId, CoprimeChiefConfig, Status, TheoremVerdict,
};
pub use corpus::{corpus_run, CorpusConfig, CorpusSummary};
pub use dot::{dot_export, to_dot};

use crate::error::Result;
use crate::group::Limits;

/// Builds, analyzes and checks one spec, applying any configurations from
/// the default corpus that name it.
pub fn analyze(spec: &str, limits: &Limits) -> Result<(Analysis, AnalysisReport)> {
    let analysis = Analysis::new(parse_group(spec)?, limits);
    let defaults = CorpusConfig::default_corpus();
    let verdicts = check_theorems(&analysis, &CheckId::ALL, &defaults.coprime_chief);
    let report = analysis.report(verdicts);
    Ok((analysis, report))
}
