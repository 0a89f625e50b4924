use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use schurweyl_core::ergodic::{run_experiment, ExperimentConfig, ExperimentOutcome, ExperimentReport, WordLog};
use schurweyl_core::graph::{build, GradedGraph};
use schurweyl_core::rsk::{rsk, rsk_mixed, rsk_mixed_star, rsk_star, RskPair};
use schurweyl_core::verify::{run_suite, SuiteResult, SUITES};
use schurweyl_core::Word;

/// RSK transforms, Schur-Weyl graphs, verification suites and ergodic experiments.
#[derive(Parser, Debug)]
#[command(name = "schurweyl", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for written files.
    #[arg(long, global = true, env = "SCHURWEYL_OUT_DIR")]
    out: Option<PathBuf>,
    /// Suppress summaries on stdout.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    Row,
    Star,
    Mixed,
    MixedStar,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Insertion and recording tableaux of a word such as "2,1,2" or "1,2*".
    Rsk {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value_t = Variant::Row)]
        variant: Variant,
    },
    /// Builds SW_{k,l} up to a depth.
    Graph {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        l: u32,
        #[arg(long)]
        depth: usize,
    },
    /// Runs a named suite, or all of them.
    Verify {
        #[arg(value_parser = suite_name)]
        suite: String,
    },
    /// Runs an experiment from a JSON config.
    Experiment {
        config: PathBuf,
        /// Comma-separated seeds replacing those in the config.
        #[arg(long, value_delimiter = ',')]
        seed_override: Option<Vec<u64>>,
        /// Replays words from a log written by an earlier run.
        #[arg(long)]
        resume: Option<PathBuf>,
    },
}

fn suite_name(s: &str) -> std::result::Result<String, String> {
    if s == "all" || SUITES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("unknown suite; expected one of {}, all", SUITES.join(", ")))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Rsk { word, variant } => cmd_rsk(cli, word, *variant),
        Command::Graph { k, l, depth } => cmd_graph(cli, *k, *l, *depth),
        Command::Verify { suite } => cmd_verify(cli, suite),
        Command::Experiment {
            config,
            seed_override,
            resume,
        } => cmd_experiment(cli, config, seed_override.as_deref(), resume.as_deref()),
    }
}

fn csv_line(fields: &[&str]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(fields).expect("in-memory csv write");
    String::from_utf8(w.into_inner().expect("flush in-memory csv")).expect("csv is utf-8")
}

fn cmd_rsk(cli: &Cli, text: &str, variant: Variant) -> Result<bool> {
    let w: Word = text.parse().with_context(|| format!("cannot parse word {text:?}"))?;
    let pair: RskPair = match variant {
        Variant::Row => rsk(&w)?,
        Variant::Star => rsk_star(&w)?,
        Variant::Mixed => rsk_mixed(&w),
        Variant::MixedStar => rsk_mixed_star(&w),
    };
    let out = match cli.format {
        Format::Text => format!("{} {}\n", pair.p, pair.q),
        Format::Json => {
            serde_json::to_string_pretty(&serde_json::json!({
                "word": w.to_string(),
                "p": pair.p.to_string(),
                "q": pair.q.to_string(),
                "shape": pair.shape().to_string(),
            }))? + "\n"
        }
        Format::Csv => {
            csv_line(&["word", "p", "q", "shape"])
                + &csv_line(&[
                    &w.to_string(),
                    &pair.p.to_string(),
                    &pair.q.to_string(),
                    &pair.shape().to_string(),
                ])
        }
    };
    print!("{out}");
    Ok(true)
}

fn graph_csv(g: &GradedGraph) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["level", "source", "label", "target", "source_tableau", "target_tableau"])
        .expect("in-memory csv write");
    for n in 0..g.depth() {
        for e in g.edges(n) {
            w.write_record([
                n.to_string(),
                e.source.to_string(),
                e.label.to_string(),
                e.target.to_string(),
                g.level(n)[e.source].to_string(),
                g.level(n + 1)[e.target].to_string(),
            ])
            .expect("in-memory csv write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush in-memory csv")).expect("csv is utf-8")
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(name);
    fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
    Ok(path)
}

fn cmd_graph(cli: &Cli, k: u32, l: u32, depth: usize) -> Result<bool> {
    let g = build(k, l, depth)?;
    let (body, ext) = match cli.format {
        Format::Json => (g.to_json(), "json"),
        Format::Text => (g.to_text(), "txt"),
        Format::Csv => (graph_csv(&g), "csv"),
    };
    match &cli.out {
        Some(dir) => {
            let path = write_file(dir, &format!("graph-k{k}-l{l}-d{depth}.{ext}"), &body)?;
            if !cli.quiet {
                println!("{} vertices written to {}", g.vertex_count(), path.display());
            }
        }
        None => print!("{body}"),
    }
    Ok(true)
}

fn cmd_verify(cli: &Cli, suite: &str) -> Result<bool> {
    let results = run_suite(suite)?;
    let pass = results.iter().all(SuiteResult::passed);
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&results)? + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "suite",
                "cases",
                "failures",
                "wall_time_ms",
                "first_input",
                "expected",
                "actual",
            ])?;
            for r in &results {
                let f = r.first_failure();
                w.write_record([
                    r.name.clone(),
                    r.cases.to_string(),
                    r.failure_count.to_string(),
                    r.wall_time_ms.to_string(),
                    f.map_or(String::new(), |f| f.input.clone()),
                    f.map_or(String::new(), |f| f.expected.clone()),
                    f.map_or(String::new(), |f| f.actual.clone()),
                ])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                s += &format!(
                    "{} {} cases={} failures={} time={}ms\n",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.name,
                    r.cases,
                    r.failure_count,
                    r.wall_time_ms
                );
                if let Some(f) = r.first_failure() {
                    s += &format!(
                        "  counterexample: {}\n  expected: {}\n  actual:   {}\n",
                        f.input, f.expected, f.actual
                    );
                }
                for n in &r.notes {
                    s += &format!("  note: {n}\n");
                }
            }
            s
        }
    };
    if let Some(dir) = &cli.out {
        let ext = match cli.format {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        };
        write_file(dir, &format!("verify-{suite}.{ext}"), &body)?;
    }
    if !cli.quiet {
        print!("{body}");
    }
    Ok(pass)
}

fn summary(report: &ExperimentReport) -> String {
    let verdict = if report.pass { "PASS" } else { "FAIL" };
    let c = &report.config;
    let kind = serde_json::to_value(c.experiment)
        .ok()
        .and_then(|v| v.as_str().map(String::from))
        .unwrap_or_default();
    let head = format!(
        "{verdict} {kind} k={} l={} n={} m={} seeds={:?}",
        c.k, c.l, c.n, c.m, c.seeds
    );
    let detail = match &report.outcome {
        ExperimentOutcome::Thoma { report, identity_exact } => {
            let mut s = format!(
                "max deviation {:.5} (tolerance {})",
                report.max_deviation, report.tolerance
            );
            if let Some(id) = identity_exact {
                s += &format!(", exact uniform identity {}", if *id { "holds" } else { "fails" });
            }
            for x in &report.shapes {
                s += &format!(
                    "\n  λ={} estimate={:.5} target={:.5}",
                    x.lambda, x.mean_estimate, x.target
                );
            }
            s
        }
        ExperimentOutcome::Density(r) => format!("max deviation {:.5} (tolerance {})", r.max_deviation, r.tolerance),
        ExperimentOutcome::Asymptotics(r) => format!(
            "max relative error {:.5} with p̂ = λ/n (tolerance {}), {:.5} with the sampling p",
            r.max_rel_err_empirical, r.tolerance, r.max_rel_err_true
        ),
        ExperimentOutcome::Degenerate { runs: rs } => rs
            .iter()
            .map(|r| {
                format!(
                    "shape {}: {} supported cylinders, zero off support: {}, uniform-path match: {}",
                    r.shape,
                    r.supported.len(),
                    r.zero_outside_support,
                    r.matches_uniform_paths
                )
            })
            .collect::<Vec<_>>()
            .join("\n  "),
        ExperimentOutcome::Oscillation { runs: rs } => rs
            .iter()
            .map(|r| format!("late spread of λ_1/n: {:.4}", r.spread))
            .collect::<Vec<_>>()
            .join("\n  "),
    };
    format!("{head}\n  {detail}\n")
}

fn cmd_experiment(cli: &Cli, path: &Path, seeds: Option<&[u64]>, resume: Option<&Path>) -> Result<bool> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut config =
        ExperimentConfig::from_json(&text).with_context(|| format!("invalid config {}", path.display()))?;
    if let Some(seeds) = seeds {
        if seeds.is_empty() {
            bail!("--seed-override needs at least one seed");
        }
        config.seeds = seeds.to_vec();
    }
    let log = match resume {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            WordLog::from_jsonl(&text)?
        }
        None => WordLog::record(&config.spec()?, &config.seeds, config.n),
    };
    let report = run_experiment(&config, Some(&log))?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("experiment");
    let dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
    let json = write_file(&dir, &format!("{stem}.json"), &report.to_json())?;
    let csv = write_file(&dir, &format!("{stem}.csv"), &report.to_csv())?;
    let words = if resume.is_none() {
        Some(write_file(&dir, &format!("{stem}.words.jsonl"), &log.to_jsonl())?)
    } else {
        None
    };
    if !cli.quiet {
        let mut out = std::io::stdout().lock();
        match cli.format {
            Format::Json => write!(out, "{}", report.to_json())?,
            Format::Csv => write!(out, "{}", report.to_csv())?,
            Format::Text => {
                write!(out, "{}", summary(&report))?;
                writeln!(out, "  wrote {} and {}", json.display(), csv.display())?;
                if let Some(w) = words {
                    writeln!(out, "  word log {}", w.display())?;
                }
            }
        }
    }
    Ok(report.pass)
}
