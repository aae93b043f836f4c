//! Verification reports: one labeled pass/fail claim per checked statement.

use std::io::{self, Write};
use std::time::Duration;

/// A single checked claim with a short witness string.
#[derive(Clone, Debug)]
pub struct ClaimResult {
    pub id: String,
    pub passed: bool,
    /// Witness data (vectors, counts); never contains spaces so the records
    /// format stays token-per-field.
    pub witness: String,
}

impl ClaimResult {
    pub fn new(id: &str, passed: bool, witness: impl Into<String>) -> ClaimResult {
        ClaimResult {
            id: id.to_string(),
            passed,
            witness: into_token(witness.into()),
        }
    }
}

fn into_token(s: String) -> String {
    s.replace(char::is_whitespace, "_")
}

/// All claims checked for one subject. The overall verdict is a pass exactly
/// when every claim passed. Rendering in records mode is byte-deterministic;
/// the wall-clock duration appears only in human mode.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub subject: String,
    pub claims: Vec<ClaimResult>,
    pub duration: Duration,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> VerificationReport {
        VerificationReport {
            subject: subject.into(),
            claims: Vec::new(),
            duration: Duration::ZERO,
        }
    }

    pub fn push(&mut self, claim: ClaimResult) {
        self.claims.push(claim);
    }

    pub fn check(&mut self, id: &str, passed: bool, witness: impl Into<String>) {
        self.push(ClaimResult::new(id, passed, witness));
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn failed_count(&self) -> usize {
        self.claims.iter().filter(|c| !c.passed).count()
    }

    pub fn render_records(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "report subject={}", self.subject)?;
        for c in &self.claims {
            write!(
                out,
                "claim id={} status={}",
                c.id,
                if c.passed { "pass" } else { "fail" }
            )?;
            if !c.witness.is_empty() {
                write!(out, " witness={}", c.witness)?;
            }
            writeln!(out)?;
        }
        writeln!(
            out,
            "verdict status={} claims={} failed={}",
            if self.passed() { "pass" } else { "fail" },
            self.claims.len(),
            self.failed_count()
        )
    }

    pub fn render_human(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "== {} ==", self.subject)?;
        for c in &self.claims {
            writeln!(
                out,
                "  [{}] {:<28} {}",
                if c.passed { "pass" } else { "FAIL" },
                c.id,
                c.witness
            )?;
        }
        writeln!(
            out,
            "  verdict: {} ({} claims, {} failed) in {:.1?}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.claims.len(),
            self.failed_count(),
            self.duration
        )
    }
}
