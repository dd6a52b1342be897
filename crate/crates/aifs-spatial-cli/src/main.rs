use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use aifs_spatial::axioms::{run_axioms, AxiomReport};
use aifs_spatial::baseline::{catalog, catalog_entry, MeasureId, MeasureParams, Partition};
use aifs_spatial::benchmarks::{self, BenchmarkReport};
use aifs_spatial::classify::{classify, ClassificationProblem, ClassificationReport, Decision};
use aifs_spatial::dataset;
use aifs_spatial::round::round4;

#[derive(Parser)]
#[command(
    name = "aifs-spatial",
    version,
    about = "Spatial similarity measures for intuitionistic fuzzy pattern classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the unknown patterns of a dataset against its known patterns.
    Classify(ClassifyArgs),
    /// Recompute a bundled reference case and diff it against the stored table.
    Compare(CompareArgs),
    /// Run the seeded property suites over randomly drawn patterns.
    Axioms(AxiomsArgs),
    /// List every measure with its parameters and source.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Dataset file, ".json" or ".csv".
    input: PathBuf,
    /// "ssm" for the three spatial branches, "all" for every measure, or a
    /// comma separated list of measure tokens.
    #[arg(long, default_value = "ssm")]
    measures: String,
    /// Measure tokens to drop from the selection.
    #[arg(long, value_delimiter = ',')]
    exclude: Vec<String>,
    /// Exponent for the parametric measures.
    #[arg(long, default_value_t = 1)]
    p: u32,
    /// Cross weight for s_bd.
    #[arg(long, default_value_t = 2)]
    z: u32,
    /// Comma separated 1-based feature indices compared through consecutive
    /// differences by s_az_p_h; the remaining indices are compared raw.
    #[arg(long, value_delimiter = ',')]
    partition: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the report to this file.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// Bundled case name, or "all".
    #[arg(default_value = "all")]
    case: String,
    /// List the bundled cases instead of running them.
    #[arg(long)]
    list: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the report to this file.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct AxiomsArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the report to this file.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Classify(args) => run_classify(args),
        Command::Compare(args) => run_compare(args),
        Command::Axioms(args) => run_axioms_cmd(args),
        Command::Catalog(args) => run_catalog(args),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), String> {
    print!("{text}");
    if let Some(path) = output {
        std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

fn parse_selection(measures: &str, exclude: &[String]) -> Result<Vec<MeasureId>, String> {
    let mut ids: Vec<MeasureId> = match measures.trim() {
        "all" => MeasureId::ALL.to_vec(),
        "ssm" => MeasureId::SSM.to_vec(),
        list => list
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| MeasureId::from_token(t).ok_or_else(|| format!("unknown measure: {t}")))
            .collect::<Result<_, _>>()?,
    };
    let mut seen = Vec::new();
    ids.retain(|&id| {
        let fresh = !seen.contains(&id);
        seen.push(id);
        fresh
    });
    for token in exclude {
        let id = MeasureId::from_token(token.trim())
            .ok_or_else(|| format!("unknown measure in --exclude: {token}"))?;
        ids.retain(|&m| m != id);
    }
    if ids.is_empty() {
        return Err("the selection excludes every measure".into());
    }
    Ok(ids)
}

fn run_classify(args: ClassifyArgs) -> Result<ExitCode, String> {
    let ids = parse_selection(&args.measures, &args.exclude)?;
    let problem = dataset::from_path(&args.input).map_err(|e| e.to_string())?;

    let partition = match &args.partition {
        Some(indices) => Some(
            Partition::from_delta(indices.iter().copied(), problem.k())
                .map_err(|e| e.to_string())?,
        ),
        None => None,
    };
    if ids.contains(&MeasureId::SAzPH) && partition.is_none() {
        return Err("s_az_p_h needs --partition; pass one or use --exclude s_az_p_h".into());
    }

    let params = MeasureParams {
        p: args.p,
        z: args.z,
        partition,
    };
    let selections: Vec<(MeasureId, MeasureParams)> =
        ids.into_iter().map(|id| (id, params.clone())).collect();
    let report = classify(&problem, &selections).map_err(|e| e.to_string())?;

    let text = match args.format {
        Format::Text => render_classify(&args.input, &problem, &report),
        Format::Structured => to_json(&ClassifyOutput {
            input: args.input.display().to_string(),
            features: problem.k(),
            report: &report,
        }),
    };
    emit(&text, args.output.as_ref())?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ClassifyOutput<'a> {
    input: String,
    features: usize,
    report: &'a ClassificationReport,
}

fn counted(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

fn decision_text(decision: &Decision) -> String {
    match decision {
        Decision::Label(label) => label.clone(),
        Decision::Unclassified(tied) => format!("Unclassified ({})", tied.join(", ")),
    }
}

fn render_classify(
    input: &std::path::Path,
    problem: &ClassificationProblem,
    report: &ClassificationReport,
) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}: {}, {}, {}",
        input.display(),
        counted(problem.k(), "feature", "features"),
        counted(problem.known().len(), "known pattern", "known patterns"),
        counted(problem.unknown().len(), "query", "queries")
    );
    for outcomes in &report.measures {
        let entry = catalog_entry(outcomes.measure);
        let mut shown = Vec::new();
        if entry.params.contains(&"p") {
            shown.push(format!("p={}", outcomes.params.p));
        }
        if entry.params.contains(&"z") {
            shown.push(format!("z={}", outcomes.params.z));
        }
        if let (true, Some(partition)) = (
            entry.params.contains(&"partition"),
            outcomes.params.partition.as_ref(),
        ) {
            let delta: Vec<String> = partition.delta().iter().map(|j| j.to_string()).collect();
            shown.push(format!("delta={{{}}}", delta.join(",")));
        }
        let _ = writeln!(out);
        if shown.is_empty() {
            let _ = writeln!(out, "{}", outcomes.display);
        } else {
            let _ = writeln!(out, "{} ({})", outcomes.display, shown.join(", "));
        }
        for query in &outcomes.queries {
            let scores: Vec<String> = query
                .scores
                .iter()
                .map(|s| format!("{}={:.4}", s.label, round4(s.value)))
                .collect();
            let mut line = format!(
                "  {}: {} -> {}",
                query.query,
                scores.join("  "),
                decision_text(&query.decision)
            );
            if !query.rounded_tie.is_empty() && query.decision.is_classified() {
                let _ = write!(
                    line,
                    " (printed values tie: {})",
                    query.rounded_tie.join(", ")
                );
            }
            let _ = writeln!(out, "{line}");
        }
    }
    if let Some(strong) = &report.strong {
        let _ = writeln!(out);
        let _ = writeln!(out, "spatial branch agreement");
        for entry in strong {
            let agreement = if entry.strong {
                "strong"
            } else {
                "branches disagree"
            };
            let _ = writeln!(
                out,
                "  {}: md {}, nmd {}, ed {} -> {} ({agreement})",
                entry.query,
                decision_text(&entry.md),
                decision_text(&entry.nmd),
                decision_text(&entry.ed),
                decision_text(&entry.decision)
            );
        }
    }
    out
}

fn run_compare(args: CompareArgs) -> Result<ExitCode, String> {
    if args.list {
        let summaries = benchmarks::list();
        let text = match args.format {
            Format::Text => {
                let mut out = String::new();
                for s in &summaries {
                    let _ = writeln!(
                        out,
                        "{}: {} ({}, {}, {})",
                        s.name,
                        s.title,
                        counted(s.features, "feature", "features"),
                        counted(s.classes, "class", "classes"),
                        counted(s.queries, "query", "queries")
                    );
                }
                out
            }
            Format::Structured => to_json(&summaries),
        };
        emit(&text, args.output.as_ref())?;
        return Ok(ExitCode::SUCCESS);
    }

    let reports: Vec<BenchmarkReport> = if args.case == "all" {
        benchmarks::run_all()
    } else {
        let case = benchmarks::case(&args.case)
            .ok_or_else(|| format!("unknown case: {} (try --list)", args.case))?;
        vec![benchmarks::run_benchmark(case)]
    };
    let all_passed = reports.iter().all(|r| r.passed);

    let text = match args.format {
        Format::Text => {
            let mut out = String::new();
            for report in &reports {
                render_benchmark(&mut out, report);
            }
            out
        }
        Format::Structured => to_json(&reports),
    };
    emit(&text, args.output.as_ref())?;
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn render_benchmark(out: &mut String, report: &BenchmarkReport) {
    let verdict = if report.passed { "ok" } else { "FAIL" };
    let _ = writeln!(out, "{}: {} [{verdict}]", report.case, report.title);
    let _ = writeln!(
        out,
        "  cells: {} asserted, {} mismatched, {} annotated; results: {} asserted, {} mismatched",
        report.asserted_cells,
        report.cell_mismatches,
        report.annotated_cells,
        report.asserted_results,
        report.result_mismatches
    );
    if let Some(note) = report.note {
        let _ = writeln!(out, "  note: {note}");
    }
    for row in &report.rows {
        if let Some(reason) = row.excluded {
            let _ = writeln!(out, "  {} skipped: {reason}", row.label);
            continue;
        }
        for cell in &row.cells {
            match (cell.matched, cell.rounded) {
                (Some(false), Some(rounded)) => {
                    let _ = writeln!(
                        out,
                        "  MISMATCH {}/{}/{}: reference {:.4}, computed {rounded:.4}",
                        row.label, cell.query, cell.class, cell.reference
                    );
                }
                (None, Some(rounded)) => {
                    let _ = writeln!(
                        out,
                        "  {}/{}/{}: reference {:.4} vs computed {rounded:.4} ({})",
                        row.label,
                        cell.query,
                        cell.class,
                        cell.reference,
                        cell.note.unwrap_or("annotated")
                    );
                }
                _ => {}
            }
        }
        for result in &row.results {
            match (result.matched, &result.computed) {
                (Some(false), Some(computed)) => {
                    let _ = writeln!(
                        out,
                        "  MISMATCH {}/{} result: reference {}, computed {computed}",
                        row.label, result.query, result.reference
                    );
                }
                (None, Some(computed)) => {
                    let _ = writeln!(
                        out,
                        "  {}/{} result: reference {} vs computed {computed} ({})",
                        row.label,
                        result.query,
                        result.reference,
                        result.note.unwrap_or("annotated")
                    );
                }
                _ => {}
            }
        }
    }
}

fn run_axioms_cmd(args: AxiomsArgs) -> Result<ExitCode, String> {
    if args.trials == 0 {
        return Err("--trials must be at least 1".into());
    }
    let report = run_axioms(args.trials, args.seed);
    let text = match args.format {
        Format::Text => render_axioms(&report),
        Format::Structured => to_json(&report),
    };
    emit(&text, args.output.as_ref())?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn render_axioms(report: &AxiomReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "seed {}, {} trials per suite",
        report.seed, report.trials
    );
    for suite in &report.suites {
        let status = if suite.advisory {
            "advisory"
        } else if suite.failures == 0 {
            "ok"
        } else {
            "FAIL"
        };
        let _ = writeln!(
            out,
            "  {:<28} {:>4} failing trial(s)  [{status}]",
            suite.name, suite.failures
        );
        if let Some(first) = &suite.first_counterexample {
            let _ = writeln!(out, "    first: {first}");
        }
    }
    let fatal = report.fatal_failures();
    if fatal == 0 {
        let _ = writeln!(out, "no failures outside the advisory suites");
    } else {
        let _ = writeln!(out, "{fatal} failing trial(s) outside the advisory suites");
    }
    out
}

fn run_catalog(args: CatalogArgs) -> Result<ExitCode, String> {
    let text = match args.format {
        Format::Text => {
            let mut out = String::new();
            for entry in catalog() {
                let params = if entry.params.is_empty() {
                    String::new()
                } else {
                    format!(" [{}]", entry.params.join(", "))
                };
                let _ = writeln!(
                    out,
                    "{:<10} {:<10} {}{params}: {}",
                    entry.token, entry.display, entry.source, entry.summary
                );
            }
            out
        }
        Format::Structured => to_json(&catalog().as_slice()),
    };
    emit(&text, None)?;
    Ok(ExitCode::SUCCESS)
}
