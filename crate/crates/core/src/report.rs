//! Law-check reports shared by every checker in the crate.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Number of witnesses kept per law; further violations are only counted.
pub const WITNESS_LIMIT: usize = 16;

/// A single violated law instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub law: String,
    pub witness: String,
}

/// Per-law tally of checked instances and violations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawTally {
    pub checked: usize,
    pub violated: usize,
}

/// Outcome of a bounded law sweep.
///
/// `structural` holds malformed-input errors (dangling ids, boundary
/// mismatches of the data itself); `findings` holds law violations.
/// A report passes iff both are empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub structural: Vec<String>,
    pub findings: Vec<Finding>,
    pub tallies: BTreeMap<String, LawTally>,
    pub truncated: bool,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.structural.is_empty() && self.findings.is_empty() && self.violations() == 0
    }

    /// Total number of violated instances, including ones without a stored witness.
    pub fn violations(&self) -> usize {
        self.tallies.values().map(|t| t.violated).sum()
    }

    pub fn checked(&self) -> usize {
        self.tallies.values().map(|t| t.checked).sum()
    }

    /// Records one instance of `law`; the witness is rendered only on failure.
    pub fn check(&mut self, law: &str, ok: bool, witness: impl FnOnce() -> String) -> bool {
        let tally = self.tallies.entry(law.to_string()).or_default();
        tally.checked += 1;
        if !ok {
            tally.violated += 1;
            if tally.violated <= WITNESS_LIMIT {
                self.findings.push(Finding {
                    law: law.to_string(),
                    witness: witness(),
                });
            }
        }
        ok
    }

    pub fn structural(&mut self, msg: impl Into<String>) {
        self.structural.push(msg.into());
    }

    pub fn fail(&mut self, law: &str, witness: impl Into<String>) {
        let w = witness.into();
        self.check(law, false, || w);
    }

    /// Folds `other` into `self`, prefixing its law ids with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: LawReport) {
        let name = |law: &str| {
            if prefix.is_empty() {
                law.to_string()
            } else {
                format!("{prefix}/{law}")
            }
        };
        self.structural
            .extend(other.structural.into_iter().map(|s| format!("{prefix}: {s}")));
        for f in other.findings {
            self.findings.push(Finding {
                law: name(&f.law),
                witness: f.witness,
            });
        }
        for (law, t) in other.tallies {
            let e = self.tallies.entry(name(&law)).or_default();
            e.checked += t.checked;
            e.violated += t.violated;
        }
        self.truncated |= other.truncated;
    }

    /// Ids of laws with at least one violation.
    pub fn failed_laws(&self) -> Vec<&str> {
        self.tallies
            .iter()
            .filter(|(_, t)| t.violated > 0)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "fail" };
        writeln!(
            f,
            "{status}: {} instances checked, {} violations{}",
            self.checked(),
            self.violations(),
            if self.truncated { " (truncated)" } else { "" }
        )?;
        for s in &self.structural {
            writeln!(f, "  structural: {s}")?;
        }
        for x in &self.findings {
            writeln!(f, "  {}: {}", x.law, x.witness)?;
        }
        Ok(())
    }
}
