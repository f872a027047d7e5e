//! Corpus runs: analyze and check every listed group, one JSON report per
//! line, with a status tally and the 0/1/2 exit-code contract.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Deserialize;

use super::analysis::{Analysis, AnalysisReport};
use super::catalog::{catalog_group, GroupSpec};
use super::checks::{check_theorems, CheckId, CoprimeChiefConfig, Status};
use crate::error::{Error, Result};
use crate::group::Limits;

pub const DEFAULT_CONFIG: &str = include_str!("../../corpus/default.toml");

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    groups: Vec<String>,
    #[serde(default)]
    checks: Option<Vec<String>>,
    #[serde(default)]
    coprime_chief: Vec<CoprimeChiefConfig>,
}

#[derive(Clone, Debug)]
pub struct CorpusConfig {
    pub groups: Vec<GroupSpec>,
    pub checks: Vec<CheckId>,
    pub coprime_chief: Vec<CoprimeChiefConfig>,
}

impl CorpusConfig {
    /// Parses and validates a TOML config: every spec and check name must
    /// parse.
    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let groups = raw
            .groups
            .iter()
            .map(|g| {
                g.parse()
                    .map_err(|e: Error| Error::Config(format!("{g:?}: {e}")))
            })
            .collect::<Result<Vec<GroupSpec>>>()?;
        let checks = match raw.checks {
            None => CheckId::ALL.to_vec(),
            Some(names) => names.iter().map(|n| n.parse()).collect::<Result<_>>()?,
        };
        for c in &raw.coprime_chief {
            c.group
                .parse::<GroupSpec>()
                .map_err(|e| Error::Config(format!("coprime_chief group {:?}: {e}", c.group)))?;
        }
        Ok(CorpusConfig {
            groups,
            checks,
            coprime_chief: raw.coprime_chief,
        })
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn default_corpus() -> Self {
        Self::from_toml(DEFAULT_CONFIG).expect("built-in corpus parses")
    }
}

#[derive(Clone, Debug, Default)]
pub struct CorpusSummary {
    pub groups: usize,
    /// Check -> status -> count.
    pub counts: BTreeMap<CheckId, BTreeMap<Status, usize>>,
    /// `(spec, check)` for every `FAIL`.
    pub failures: Vec<(String, CheckId)>,
    pub indeterminate_groups: Vec<String>,
}

impl CorpusSummary {
    pub fn count(&self, check: CheckId, status: Status) -> usize {
        self.counts
            .get(&check)
            .and_then(|m| m.get(&status))
            .copied()
            .unwrap_or(0)
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.failures.is_empty() {
            0
        } else {
            1
        }
    }

    /// One line per check: `CHK-... PASS=n FAIL=n VACUOUS=n INDETERMINATE=n`.
    pub fn table(&self) -> String {
        let mut s = format!("groups: {}\n", self.groups);
        for (check, m) in &self.counts {
            s.push_str(&format!("{:<10}", check.name()));
            for status in [
                Status::Pass,
                Status::Fail,
                Status::Vacuous,
                Status::Indeterminate,
            ] {
                s.push_str(&format!(
                    " {status}={}",
                    m.get(&status).copied().unwrap_or(0)
                ));
            }
            s.push('\n');
        }
        for (spec, check) in &self.failures {
            s.push_str(&format!("FAIL {check} on {spec}\n"));
        }
        for spec in &self.indeterminate_groups {
            s.push_str(&format!("indeterminate: {spec}\n"));
        }
        s
    }
}

/// Analyzes and checks one group.
pub fn run_group(
    spec: &GroupSpec,
    config: &CorpusConfig,
    limits: &Limits,
) -> Result<AnalysisReport> {
    let analysis = Analysis::new(catalog_group(spec)?, limits);
    let verdicts = check_theorems(&analysis, &config.checks, &config.coprime_chief);
    Ok(analysis.report(verdicts))
}

/// Runs the corpus on up to `jobs` threads. Reports are written as JSON
/// lines ordered by spec string, independent of `jobs`. Errors building a
/// group abort the run (exit code 2 at the CLI).
pub fn corpus_run(
    config: &CorpusConfig,
    limits: &Limits,
    jobs: usize,
    out: &mut dyn Write,
) -> Result<CorpusSummary> {
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(String, Result<AnalysisReport>)>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1).min(config.groups.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(spec) = config.groups.get(i) else {
                    break;
                };
                let report = run_group(spec, config, limits);
                results.lock().unwrap().push((spec.to_string(), report));
            });
        }
    });
    let mut results = results.into_inner().unwrap();
    results.sort_by(|a, b| a.0.cmp(&b.0));

    let mut summary = CorpusSummary::default();
    for (spec, report) in results {
        let report = report?;
        summary.groups += 1;
        if report.status != "complete" {
            summary.indeterminate_groups.push(spec.clone());
        }
        for v in &report.verdicts {
            *summary
                .counts
                .entry(v.check)
                .or_default()
                .entry(v.status)
                .or_default() += 1;
            if v.status == Status::Fail {
                summary.failures.push((spec.clone(), v.check));
            }
        }
        writeln!(out, "{}", report.to_json())?;
    }
    Ok(summary)
}
