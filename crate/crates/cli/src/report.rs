//! The versioned JSON verification report: every numeric claim carries the
//! name of the module-level check that produced it, a compiled-in expected
//! value where the literature pins one, and a pass flag. Computed baselines
//! have no compiled expectation; they can be frozen via a lockfile and
//! checked on later runs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Pinned by the literature; compiled in.
    Literature,
    /// Computed baseline; expected comes from a lockfile if provided.
    Computed,
    /// Forced by definitions; compiled in.
    Definitional,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub check: String,
    pub claim: String,
    pub expected: Option<i64>,
    pub actual: i64,
    pub pass: bool,
    pub source: Source,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub suite: String,
    pub geometry: String,
    pub seed_point: usize,
    pub checks: Vec<Check>,
    pub pass: bool,
}

/// Lockfile format: check name -> frozen expected value.
pub type Lockfile = BTreeMap<String, i64>;

pub struct ReportBuilder {
    report: Report,
    lock: Lockfile,
}

impl ReportBuilder {
    pub fn new(suite: &str, geometry: &str, seed_point: usize, lock: Lockfile) -> ReportBuilder {
        ReportBuilder {
            report: Report {
                schema_version: SCHEMA_VERSION,
                suite: suite.to_string(),
                geometry: geometry.to_string(),
                seed_point,
                checks: Vec::new(),
                pass: true,
            },
            lock,
        }
    }

    fn push(&mut self, check: Check) {
        if !check.pass {
            self.report.pass = false;
        }
        self.report.checks.push(check);
    }

    /// A value the literature pins exactly.
    pub fn literature(&mut self, check: &str, claim: &str, expected: i64, actual: i64) {
        self.push(Check {
            check: check.to_string(),
            claim: claim.to_string(),
            expected: Some(expected),
            actual,
            pass: expected == actual,
            source: Source::Literature,
        });
    }

    /// A definitional value.
    pub fn definitional(&mut self, check: &str, claim: &str, expected: i64, actual: i64) {
        self.push(Check {
            check: check.to_string(),
            claim: claim.to_string(),
            expected: Some(expected),
            actual,
            pass: expected == actual,
            source: Source::Definitional,
        });
    }

    /// A computed baseline: expected is null unless the lockfile froze it.
    pub fn computed(&mut self, check: &str, claim: &str, actual: i64) {
        let expected = self.lock.get(check).copied();
        self.push(Check {
            check: check.to_string(),
            claim: claim.to_string(),
            expected,
            actual,
            pass: expected.is_none_or(|e| e == actual),
            source: Source::Computed,
        });
    }

    /// A boolean certificate (encoded 0/1 so the report stays all-integer).
    pub fn certificate(&mut self, check: &str, claim: &str, holds: bool) {
        self.push(Check {
            check: check.to_string(),
            claim: claim.to_string(),
            expected: Some(1),
            actual: i64::from(holds),
            pass: holds,
            source: Source::Definitional,
        });
    }

    /// Record a hard error from a verification routine as a failed check.
    pub fn fatal(&mut self, check: &str, error: &dyn std::fmt::Display) {
        self.push(Check {
            check: check.to_string(),
            claim: format!("verification aborted: {error}"),
            expected: Some(1),
            actual: 0,
            pass: false,
            source: Source::Definitional,
        });
    }

    pub fn finish(self) -> Report {
        self.report
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// The computed baselines of this report, as lockfile content.
    pub fn computed_values(&self) -> Lockfile {
        self.checks
            .iter()
            .filter(|c| c.source == Source::Computed)
            .map(|c| (c.check.clone(), c.actual))
            .collect()
    }
}

pub fn parse_lockfile(text: &str) -> Result<Lockfile, serde_json::Error> {
    #[derive(Deserialize)]
    struct Raw(BTreeMap<String, i64>);
    serde_json::from_str::<Raw>(text).map(|r| r.0)
}

pub fn lockfile_to_json(lock: &Lockfile) -> String {
    let mut out = serde_json::to_string_pretty(lock).expect("lockfile serializes");
    out.push('\n');
    out
}
