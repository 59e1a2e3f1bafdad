use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::IntervalUnion;
use crate::io::dataset::ChoiceDataset;
use crate::limits::Limits;
use crate::measure::{
    classify_transitivity, is_selective_contractions, is_selective_expansions, lambda_decomposition_with,
    triangular_condition, DecompositionOptions, PartialOrderSummary, TransitivityFlags,
};
use crate::rational::{format_rational, to_decimal, to_f64, Rational};
use crate::scf::{DomainKind, StochasticChoiceFunction};

pub const SCHEMA_VERSION: u32 = 1;

/// Settings that, together with the input data, determine a report.
#[derive(Debug, Clone)]
pub struct AnalysisConfig {
    pub limits: Limits,
    /// Cross-check the Chernoff set against exhaustive enumeration.
    pub oracle: bool,
    /// Digits after the point in decimal renderings.
    pub digits: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            limits: Limits::default(),
            oracle: false,
            digits: 6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportFormat {
    Json,
    Csv,
    Plotdata,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub maximally_rational: bool,
    pub minimally_rational: bool,
    pub transitivity: TransitivityFlags,
    pub triangular: bool,
    /// Only reported on the full domain; vacuous on doubletons.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub selective_contractions: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub selective_expansions: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub lo: String,
    pub hi: String,
    pub axiom: &'static str,
    pub tuple: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubjectAnalysis {
    pub alternatives: Vec<String>,
    pub domain: DomainKind,
    pub lambda: IntervalUnion,
    pub chernoff: IntervalUnion,
    pub condorcet: IntervalUnion,
    pub st: IntervalUnion,
    #[serde(with = "crate::rational::serde_str")]
    pub index: Rational,
    pub index_decimal: String,
    pub flags: Flags,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangular_witness: Option<[String; 3]>,
    pub witnesses: Vec<WitnessReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    Capacity,
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SubjectOutcome {
    Ok(Box<SubjectAnalysis>),
    Error { kind: FailureKind, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubjectReport {
    pub subject: String,
    #[serde(flatten)]
    pub outcome: SubjectOutcome,
}

impl SubjectReport {
    pub fn analysis(&self) -> Option<&SubjectAnalysis> {
        match &self.outcome {
            SubjectOutcome::Ok(a) => Some(a),
            SubjectOutcome::Error { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub subjects: Vec<SubjectReport>,
    /// Inclusion order of `Λ` over the successfully analysed subjects.
    pub comparison: PartialOrderSummary,
}

impl AnalysisReport {
    pub fn subject(&self, id: &str) -> Option<&SubjectReport> {
        self.subjects.iter().find(|s| s.subject == id)
    }

    pub fn has_capacity_failure(&self) -> bool {
        self.subjects.iter().any(|s| {
            matches!(
                s.outcome,
                SubjectOutcome::Error {
                    kind: FailureKind::Capacity,
                    ..
                }
            )
        })
    }
}

/// Full analysis of one function.
pub fn analyze_scf(p: &StochasticChoiceFunction, config: &AnalysisConfig) -> Result<SubjectAnalysis> {
    let options = DecompositionOptions {
        limits: config.limits.clone(),
        oracle: config.oracle,
    };
    let d = lambda_decomposition_with(p, &options)?;
    let u = p.universe();
    let triangle = triangular_condition(p).err();
    let full = p.kind() == DomainKind::Full;
    let index = d.index();
    Ok(SubjectAnalysis {
        alternatives: u.labels().to_vec(),
        domain: p.kind(),
        flags: Flags {
            maximally_rational: d.is_maximally_rational(),
            minimally_rational: d.is_minimally_rational(),
            transitivity: classify_transitivity(p),
            triangular: triangle.is_none(),
            selective_contractions: full.then(|| is_selective_contractions(p)),
            selective_expansions: full.then(|| is_selective_expansions(p)),
        },
        triangular_witness: triangle.map(|(x, y, z)| [x, y, z].map(|a| u.label(a).to_owned())),
        witnesses: d
            .witnesses
            .iter()
            .map(|w| WitnessReport {
                lo: format_rational(&w.lo),
                hi: format_rational(&w.hi),
                axiom: w.axiom().stochastic_name(),
                tuple: w.violation.describe(u),
            })
            .collect(),
        index_decimal: to_decimal(&index, config.digits),
        index,
        lambda: d.lambda_set,
        chernoff: d.chernoff,
        condorcet: d.condorcet,
        st: d.st,
    })
}

fn outcome(result: Result<SubjectAnalysis>) -> SubjectOutcome {
    match result {
        Ok(a) => SubjectOutcome::Ok(Box::new(a)),
        Err(e) => SubjectOutcome::Error {
            kind: if e.is_capacity() {
                FailureKind::Capacity
            } else {
                FailureKind::Invalid
            },
            message: e.to_string(),
        },
    }
}

fn assemble(subjects: Vec<SubjectReport>) -> AnalysisReport {
    let sets: Vec<(String, IntervalUnion)> = subjects
        .iter()
        .filter_map(|s| s.analysis().map(|a| (s.subject.clone(), a.lambda.clone())))
        .collect();
    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        subjects,
        comparison: PartialOrderSummary::from_sets(&sets),
    }
}

/// Analyses named functions; failures are recorded per entry. Names must be
/// distinct.
pub fn analyze_named(
    entries: &[(String, StochasticChoiceFunction)],
    config: &AnalysisConfig,
) -> AnalysisReport {
    let mut subjects: Vec<SubjectReport> = entries
        .iter()
        .map(|(name, p)| SubjectReport {
            subject: name.clone(),
            outcome: outcome(analyze_scf(p, config)),
        })
        .collect();
    subjects.sort_by(|a, b| a.subject.cmp(&b.subject));
    assemble(subjects)
}

/// Per-subject analysis of a dataset plus the cross-subject ordering. A
/// subject whose data cannot be turned into a function, or whose analysis
/// exceeds a cap, is reported as an error without affecting the others.
pub fn run_analyze(dataset: &ChoiceDataset, config: &AnalysisConfig) -> AnalysisReport {
    let subjects = dataset
        .subjects()
        .map(|id| SubjectReport {
            subject: id.to_owned(),
            outcome: outcome(dataset.subject_scf(id).and_then(|p| analyze_scf(&p, config))),
        })
        .collect();
    assemble(subjects)
}

#[derive(Serialize)]
struct IndexBar<'a> {
    subject: &'a str,
    i_rat: f64,
    i_rat_exact: String,
}

#[derive(Serialize)]
struct LambdaSegments<'a> {
    subject: &'a str,
    segments: Vec<[f64; 2]>,
    exact: &'a IntervalUnion,
}

#[derive(Serialize)]
struct PlotData<'a> {
    schema_version: u32,
    index_bars: Vec<IndexBar<'a>>,
    lambda_segments: Vec<LambdaSegments<'a>>,
}

fn render_plotdata(report: &AnalysisReport, digits: usize) -> String {
    let analysed: Vec<(&str, &SubjectAnalysis)> = report
        .subjects
        .iter()
        .filter_map(|s| s.analysis().map(|a| (s.subject.as_str(), a)))
        .collect();
    let mut bars: Vec<(&str, &SubjectAnalysis)> = analysed.clone();
    bars.sort_by(|a, b| a.1.index.cmp(&b.1.index).then(a.0.cmp(b.0)));
    let data = PlotData {
        schema_version: SCHEMA_VERSION,
        index_bars: bars
            .into_iter()
            .map(|(subject, a)| IndexBar {
                subject,
                i_rat: to_f64(&a.index, digits),
                i_rat_exact: format_rational(&a.index),
            })
            .collect(),
        lambda_segments: analysed
            .into_iter()
            .map(|(subject, a)| LambdaSegments {
                subject,
                segments: a
                    .lambda
                    .intervals()
                    .iter()
                    .map(|(lo, hi)| [to_f64(lo, digits), to_f64(hi, digits)])
                    .collect(),
                exact: &a.lambda,
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&data).expect("serializable");
    text.push('\n');
    text
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "",
    }
}

fn render_csv(report: &AnalysisReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "subject",
        "status",
        "i_rat",
        "i_rat_exact",
        "maximal",
        "minimal",
        "weak",
        "almost_weak",
        "moderate",
        "almost_moderate",
        "strong",
        "triangular",
        "selective_contractions",
        "selective_expansions",
        "lambda",
    ])
    .expect("in-memory write");
    for s in &report.subjects {
        let row: Vec<String> = match &s.outcome {
            SubjectOutcome::Ok(a) => {
                let f = &a.flags;
                let t = f.transitivity;
                [
                    s.subject.clone(),
                    "ok".into(),
                    a.index_decimal.clone(),
                    format_rational(&a.index),
                ]
                .into_iter()
                .chain(
                    [
                        Some(f.maximally_rational),
                        Some(f.minimally_rational),
                        Some(t.weak),
                        Some(t.almost_weak),
                        Some(t.moderate),
                        Some(t.almost_moderate),
                        Some(t.strong),
                        Some(f.triangular),
                        f.selective_contractions,
                        f.selective_expansions,
                    ]
                    .map(|b| flag(b).to_owned()),
                )
                .chain([a.lambda.to_string()])
                .collect()
            }
            SubjectOutcome::Error { .. } => {
                let mut row = vec![s.subject.clone(), "error".into()];
                row.resize(15, String::new());
                row
            }
        };
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// Renders a report. `digits` controls the float rendering in plot data.
pub fn render_report(report: &AnalysisReport, format: ReportFormat, digits: usize) -> String {
    match format {
        ReportFormat::Json => {
            let mut text = serde_json::to_string_pretty(report).expect("serializable");
            text.push('\n');
            text
        }
        ReportFormat::Csv => render_csv(report),
        ReportFormat::Plotdata => render_plotdata(report, digits),
    }
}

/// Writes `text` to `path`, or to standard output when `path` is `None`.
pub fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Error::Io {
                    path: "<stdout>".into(),
                    message: e.to_string(),
                })
        }
    }
}

pub fn emit_report(
    report: &AnalysisReport,
    format: ReportFormat,
    digits: usize,
    path: Option<&Path>,
) -> Result<()> {
    write_output(path, &render_report(report, format, digits))
}
