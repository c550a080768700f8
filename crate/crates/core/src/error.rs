use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed input: {0}")]
    Structural(String),
    #[error("precondition failed ({law}): {witness}")]
    Precondition { law: String, witness: String },
}

impl Error {
    pub fn precondition(law: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Precondition {
            law: law.into(),
            witness: witness.into(),
        }
    }

    /// First failing entry of a report, as a precondition error.
    pub fn from_report(what: &str, report: &crate::report::LawReport) -> Self {
        if let Some(s) = report.structural.first() {
            return Error::Structural(format!("{what}: {s}"));
        }
        match report.findings.first() {
            Some(f) => Error::precondition(format!("{what}/{}", f.law), f.witness.clone()),
            None => Error::precondition(what, "report failed without witness"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
