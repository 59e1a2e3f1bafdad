//! Dataset ingestion and report emission.

mod dataset;
mod report;

pub use dataset::{ChoiceDataset, DatasetFormat};
pub use report::{
    analyze_named, analyze_scf, emit_report, render_report, run_analyze, write_output, AnalysisConfig,
    AnalysisReport, FailureKind, Flags, ReportFormat, SubjectAnalysis, SubjectOutcome, SubjectReport,
    WitnessReport, SCHEMA_VERSION,
};
