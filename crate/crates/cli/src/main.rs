//! `vangraph` command line: exit 0 on success, 1 when a check fails, 2 on
//! bad input or I/O errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use vangraph::deleted::DeletedModule;
use vangraph::harness::{self, corpus_run, dot_export, CorpusConfig, Status};
use vangraph::sepsets::find_separating_subsets;
use vangraph::symchar::{mn_value, CycleType, Partition};
use vangraph::{Error, Limits};

#[derive(Parser)]
#[command(
    name = "vangraph",
    version,
    about = "Vanishing classes and prime graphs of permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one group.
    Analyze {
        spec: String,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write `<prefix>.gamma.dot` and `<prefix>.gamma_v.dot`.
        #[arg(long)]
        dot_prefix: Option<String>,
    },
    /// Run every check on one group.
    Check { spec: String },
    /// Run a corpus; JSON lines on stdout, summary on stderr.
    Corpus {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Symmetric group character value by the Murnaghan–Nakayama rule.
    Symchar {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Orbit census of the deleted permutation module.
    Modorbit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        /// Write the `orbit_size,count` table here.
        #[arg(long)]
        census: Option<PathBuf>,
    },
    /// Disjoint point sets whose joint stabilizer index is divisible by both primes.
    Sepsets {
        spec: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
}

fn write_text(path: &Path, text: &str) -> Result<(), Error> {
    if path == Path::new("-") {
        io::stdout().write_all(text.as_bytes())?;
    } else {
        fs::write(path, text)?;
    }
    Ok(())
}

fn verdict_lines(report: &harness::AnalysisReport) -> (String, bool) {
    let mut s = String::new();
    let mut failed = false;
    for v in &report.verdicts {
        failed |= v.status == Status::Fail;
        s.push_str(&format!(
            "{:<10} {:<13} {}\n",
            v.check.name(),
            v.status.to_string(),
            v.detail
        ));
    }
    (s, failed)
}

fn run(cli: Cli) -> Result<u8, Error> {
    let limits = Limits::from_env()?;
    match cli.command {
        Command::Analyze {
            spec,
            json,
            dot_prefix,
        } => {
            let (analysis, report) = harness::analyze(&spec, &limits)?;
            println!("{}", report.headline());
            let (lines, failed) = verdict_lines(&report);
            print!("{lines}");
            if let Some(path) = json {
                write_text(&path, &(report.to_json() + "\n"))?;
            }
            if let (Some(prefix), Ok(d)) = (dot_prefix, &analysis.data) {
                dot_export(
                    &d.vanishing.graph,
                    Path::new(&format!("{prefix}.gamma.dot")),
                )?;
                dot_export(
                    &d.vanishing.vanishing_graph,
                    Path::new(&format!("{prefix}.gamma_v.dot")),
                )?;
            }
            Ok(failed as u8)
        }
        Command::Check { spec } => {
            let (_, report) = harness::analyze(&spec, &limits)?;
            let (lines, failed) = verdict_lines(&report);
            print!("{lines}");
            Ok(failed as u8)
        }
        Command::Corpus { config, jobs } => {
            let config = match config {
                Some(path) => CorpusConfig::from_file(&path)?,
                None => CorpusConfig::default_corpus(),
            };
            let stdout = io::stdout();
            let mut out = stdout.lock();
            let summary = corpus_run(&config, &limits, jobs, &mut out)?;
            out.flush()?;
            eprint!("{}", summary.table());
            Ok(summary.exit_code() as u8)
        }
        Command::Symchar { lambda, mu } => {
            let lambda: Partition = lambda.parse()?;
            let mu: CycleType = mu.parse()?;
            println!("{}", mn_value(&lambda, &mu)?);
            Ok(0)
        }
        Command::Modorbit { n, q, census } => {
            let module = DeletedModule::new(n, q)?;
            let c = module.orbit_census()?;
            if let Some(path) = census {
                write_text(&path, &c.to_csv())?;
            } else {
                print!("{}", c.to_csv());
            }
            println!("{}", c.verdict());
            Ok(0)
        }
        Command::Sepsets { spec, p, q } => {
            let g = harness::parse_group(&spec)?;
            let s = find_separating_subsets(&g.group, p, q, &limits)?;
            let fmt = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            println!(
                "{{{}}} {{{}}} index {}",
                fmt(&s.first),
                fmt(&s.second),
                s.index
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
