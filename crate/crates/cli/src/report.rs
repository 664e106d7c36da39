//! Verification reports: a named list of checks, each carrying the expected
//! and actual outcome as exact strings, plus free-form notes for conventions
//! that the checks depend on.

use serde::Serialize;

#[derive(Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub degree: usize,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl CheckEntry {
    pub fn compared(
        name: impl Into<String>,
        degree: usize,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        let pass = expected == actual;
        CheckEntry { name: name.into(), degree, expected, actual, pass }
    }

    /// A check that counts violations; zero is the only passing count.
    pub fn counted(name: impl Into<String>, degree: usize, violations: usize) -> Self {
        Self::compared(name, degree, "0 violations", format!("{violations} violations"))
    }
}

#[derive(Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub max_degree: usize,
    pub seed: u64,
    pub pass: bool,
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Raw per-check records where a module defines its own report shape
    /// (currently the exactness rank records).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<serde_json::Value>,
}

impl VerificationReport {
    pub fn new(
        suite: &str,
        max_degree: usize,
        seed: u64,
        checks: Vec<CheckEntry>,
        notes: Vec<String>,
        details: Vec<serde_json::Value>,
    ) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        VerificationReport { suite: suite.into(), max_degree, seed, pass, checks, notes, details }
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite       {}\n", self.suite));
        out.push_str(&format!("max degree  {}\n", self.max_degree));
        out.push_str(&format!("seed        {}\n", self.seed));
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            out.push_str(&format!(
                "{} {:width$}  degree {:2}  expected {:18}  actual {}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.degree,
                c.expected,
                c.actual,
            ));
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out.push_str(&format!("result      {}\n", if self.pass { "pass" } else { "fail" }));
        out
    }
}
