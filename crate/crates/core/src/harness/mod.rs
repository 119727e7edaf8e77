//! Batch commands behind the command-line front end. Each command returns a
//! [`RunReport`]; rows keep input order regardless of how work is scheduled.

pub mod commands;
pub mod report;

pub use commands::{
    certify, extremal, lemmas, oracle, scan, spectra, CertifyConfig, ExtremalTableConfig, OracleCommandConfig,
    ScanSource,
};
pub use report::{MalformedLine, RunReport, Violation, SCHEMA_VERSION};
