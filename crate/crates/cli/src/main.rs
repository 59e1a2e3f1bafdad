use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use stochrat::comparators::swap_index;
use stochrat::io::{
    analyze_named, render_report, run_analyze, write_output, AnalysisConfig, ChoiceDataset, DatasetFormat,
    FailureKind, ReportFormat, SubjectOutcome,
};
use stochrat::measure::{classify_transitivity, triangular_condition, PartialOrderSummary, Verdict};
use stochrat::models::ModelSpec;
use stochrat::rational::{format_rational, parse_rational, to_decimal};
use stochrat::scf::is_lambda_rational;
use stochrat::{Error, Limits, StochasticChoiceFunction};

#[derive(Parser)]
#[command(
    name = "stochrat",
    version,
    about = "Exact rationality measurement for stochastic choice data"
)]
struct Cli {
    /// Largest universe analysed exactly (full and pairwise domains).
    #[arg(long, global = true, value_name = "N")]
    max_universe: Option<usize>,
    /// Seed for random model specs.
    #[arg(long, global = true, value_name = "U64")]
    seed: Option<u64>,
    /// Cross-check results with slow exhaustive enumeration.
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plotdata,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
            Format::Plotdata => ReportFormat::Plotdata,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full per-subject analysis and cross-subject comparison.
    Analyze {
        data: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-subject verdict matrix, equivalence classes and Hasse diagram.
    Compare {
        data: PathBuf,
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Generate a choice function from a model spec and analyse it.
    Model {
        spec: PathBuf,
        /// Also write the generated function as a dataset (CSV, or JSON for
        /// a `.json` path).
        #[arg(long, value_name = "PATH")]
        emit_dataset: Option<PathBuf>,
        /// Print the full report in this format instead of the summary.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Print the threshold correspondence at one level and check its axioms.
    Lambda {
        data: PathBuf,
        #[arg(long)]
        subject: String,
        /// Threshold, as `p/q` or a finite decimal.
        #[arg(long, value_name = "P/Q")]
        lambda: String,
    },
    /// Transitivity flags and the triangular condition only.
    Check { data: PathBuf },
    /// Swap index per subject.
    Swap { data: PathBuf },
}

/// Failure with the process exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => 3,
            Error::Domain(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

type Outcome = Result<ExitCode, Failure>;

fn load(path: &Path) -> Result<ChoiceDataset, Failure> {
    Ok(ChoiceDataset::read(path, DatasetFormat::from_path(path))?)
}

fn config(cli: &Cli) -> AnalysisConfig {
    let limits = match cli.max_universe {
        Some(n) => Limits::default().with_max_universe(n),
        None => Limits::default(),
    };
    AnalysisConfig {
        limits,
        oracle: cli.oracle,
        ..AnalysisConfig::default()
    }
}

fn capacity_code(failed: bool) -> ExitCode {
    if failed {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

fn analyze(cli: &Cli, data: &Path, format: Format, out: Option<&Path>) -> Outcome {
    let config = config(cli);
    let report = run_analyze(&load(data)?, &config);
    write_output(out, &render_report(&report, format.into(), config.digits))?;
    Ok(capacity_code(report.has_capacity_failure()))
}

fn symbol(v: Verdict) -> &'static str {
    match v {
        Verdict::LeftMoreRational => ">",
        Verdict::RightMoreRational => "<",
        Verdict::Equivalent => "=",
        Verdict::Incomparable => "|",
    }
}

fn print_summary(s: &PartialOrderSummary) {
    println!("classes:");
    for (i, class) in s.classes.iter().enumerate() {
        println!("  [{i}] {}", class.join(", "));
    }
    println!("hasse (more rational > less rational):");
    if s.hasse.is_empty() {
        println!("  (none)");
    }
    for &(a, b) in &s.hasse {
        println!("  [{a}] > [{b}]");
    }
    let width = s.names.iter().map(String::len).max().unwrap_or(0).max(1);
    println!("matrix (row vs column; > more rational, < less, = equivalent, | incomparable):");
    print!("  {:width$}", "");
    for n in &s.names {
        print!(" {n:>width$}");
    }
    println!();
    for (name, row) in s.names.iter().zip(&s.matrix) {
        print!("  {name:width$}");
        for &v in row {
            print!(" {:>width$}", symbol(v));
        }
        println!();
    }
}

fn compare(cli: &Cli, data: &Path, json: bool) -> Outcome {
    let report = run_analyze(&load(data)?, &config(cli));
    for s in &report.subjects {
        if s.analysis().is_none() {
            eprintln!("skipped subject {}: analysis failed", s.subject);
        }
    }
    if json {
        let text = serde_json::to_string_pretty(&report.comparison).expect("serializable");
        println!("{text}");
    } else {
        print_summary(&report.comparison);
    }
    Ok(capacity_code(report.has_capacity_failure()))
}

fn model(cli: &Cli, spec_path: &Path, emit: Option<&Path>, format: Option<Format>) -> Outcome {
    let text = std::fs::read_to_string(spec_path).map_err(|e| Failure {
        code: 1,
        message: format!("{}: {e}", spec_path.display()),
    })?;
    let generated = ModelSpec::from_json(&text)?.generate(cli.seed)?;
    let name = spec_path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("model")
        .to_owned();
    if let Some(path) = emit {
        let dataset = ChoiceDataset::from_scfs([(name.as_str(), &generated.scf)]);
        let text = match DatasetFormat::from_path(path) {
            DatasetFormat::Json => dataset.to_json(),
            DatasetFormat::Csv => dataset.to_csv(),
        };
        write_output(Some(path), &text)?;
    }
    let config = config(cli);
    let report = analyze_named(&[(name.clone(), generated.scf.clone())], &config);
    if let Some(format) = format {
        write_output(None, &render_report(&report, format.into(), config.digits))?;
        return Ok(capacity_code(report.has_capacity_failure()));
    }
    let subject = report.subject(&name).expect("single subject");
    let a = match &subject.outcome {
        SubjectOutcome::Ok(a) => a,
        SubjectOutcome::Error { kind, message } => {
            return Err(Failure {
                code: if *kind == FailureKind::Capacity { 3 } else { 1 },
                message: message.clone(),
            })
        }
    };
    println!("alternatives: {}", a.alternatives.join(", "));
    println!("Λ = {}", a.lambda);
    println!("I_rat = {} ({})", format_rational(&a.index), a.index_decimal);
    if let Some(expected) = &generated.expected_lambda {
        let status = if *expected == a.lambda {
            "agrees"
        } else {
            "DISAGREES"
        };
        println!("closed-form Λ = {expected} ({status})");
    }
    if let Some(expected) = &generated.expected_index {
        let status = if *expected == a.index {
            "agrees"
        } else {
            "DISAGREES"
        };
        println!("closed-form I_rat = {} ({status})", format_rational(expected));
    }
    if let Some(proper) = generated.is_proper {
        println!("proper: {proper}");
    }
    Ok(ExitCode::SUCCESS)
}

fn subject_scf(data: &ChoiceDataset, subject: &str) -> Result<StochasticChoiceFunction, Failure> {
    if !data.contains_subject(subject) {
        return Err(usage(format!("unknown subject {subject}")));
    }
    Ok(data.subject_scf(subject)?)
}

fn lambda(data: &Path, subject: &str, lambda: &str) -> Outcome {
    let level = parse_rational(lambda).map_err(|e| usage(format!("--lambda: {e}")))?;
    let p = subject_scf(&load(data)?, subject)?;
    let check = is_lambda_rational(&p, &level)?;
    let u = p.universe();
    println!("C_λ at λ = {}:", format_rational(&level));
    for (menu, chosen) in check.correspondence.entries() {
        println!("  C({}) = {}", u.display_menu(menu), u.display_menu(chosen));
    }
    if check.is_rational() {
        println!("λ-rational");
    } else {
        println!("not λ-rational: {}", check.diagnostics().join("; "));
    }
    Ok(ExitCode::SUCCESS)
}

fn pass(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn check(data: &Path) -> Outcome {
    let data = load(data)?;
    let mut failed = false;
    for id in data.subjects() {
        println!("subject {id}");
        let p = match data.subject_scf(id) {
            Ok(p) => p,
            Err(e) => {
                println!("  error: {e}");
                failed = true;
                continue;
            }
        };
        let t = classify_transitivity(&p);
        for (name, holds) in [
            ("weak", t.weak),
            ("almost weak", t.almost_weak),
            ("moderate", t.moderate),
            ("almost moderate", t.almost_moderate),
            ("strong", t.strong),
        ] {
            println!("  {name} s-transitivity: {}", pass(holds));
        }
        match triangular_condition(&p) {
            Ok(()) => println!("  triangular condition: PASS"),
            Err((x, y, z)) => {
                let u = p.universe();
                println!(
                    "  triangular condition: FAIL ({},{},{})",
                    u.label(x),
                    u.label(y),
                    u.label(z)
                );
            }
        }
    }
    Ok(if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn swap(cli: &Cli, data: &Path) -> Outcome {
    let data = load(data)?;
    let limits = config(cli).limits;
    let mut code = ExitCode::SUCCESS;
    for id in data.subjects() {
        let result = data
            .subject_scf(id)
            .and_then(|p| swap_index(&p, limits.max_swap_universe).map(|r| (p, r)));
        match result {
            Ok((p, r)) => {
                let order: Vec<&str> = r
                    .minimizing_order
                    .iter()
                    .map(|&a| p.universe().label(a))
                    .collect();
                println!(
                    "{id}: I_swap = {} ({}), order {}, {} optimal order(s)",
                    format_rational(&r.value),
                    to_decimal(&r.value, 6),
                    order.join(" > "),
                    r.ties
                );
            }
            Err(e) => {
                println!("{id}: error: {e}");
                if e.is_capacity() {
                    code = ExitCode::from(3);
                } else if code == ExitCode::SUCCESS {
                    code = ExitCode::FAILURE;
                }
            }
        }
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Analyze { data, format, out } => analyze(&cli, data, *format, out.as_deref()),
        Command::Compare { data, json } => compare(&cli, data, *json),
        Command::Model {
            spec,
            emit_dataset,
            format,
        } => model(&cli, spec, emit_dataset.as_deref(), *format),
        Command::Lambda {
            data,
            subject,
            lambda: level,
        } => lambda(data, subject, level),
        Command::Check { data } => check(data),
        Command::Swap { data } => swap(&cli, data),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
