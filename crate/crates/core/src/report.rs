//! Validation reports: exhaustive, located lists of axiom violations.
//!
//! A report is empty exactly when every checked instance passed. Checks
//! count every instance they examine so that a passing report still
//! certifies how much work was done (an empty report over an empty
//! sweep proves nothing).

use serde::{Deserialize, Serialize};
use std::fmt;

/// A single located axiom violation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    /// Which law failed, e.g. `"associativity"` or `"pentagon"`.
    pub rule: String,
    /// Where it failed, as ids, e.g. `"h=f, g=g, f=e"`.
    pub at: String,
    /// What was expected vs found.
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] at {}: {}", self.rule, self.at, self.detail)
    }
}

/// The outcome of a bounded exhaustive law check.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    /// Number of instances examined.
    pub checks: u64,
    /// Every violated instance, in deterministic order.
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&mut self, n: u64) {
        self.checks += n;
    }

    pub fn fail(&mut self, rule: impl Into<String>, at: impl Into<String>, detail: impl Into<String>) {
        self.violations.push(Violation {
            rule: rule.into(),
            at: at.into(),
            detail: detail.into(),
        });
    }

    /// Record one checked instance, failing it if `ok` is false.
    pub fn check(
        &mut self,
        ok: bool,
        rule: &str,
        at: impl FnOnce() -> String,
        detail: impl FnOnce() -> String,
    ) {
        self.checks += 1;
        if !ok {
            self.fail(rule, at(), detail());
        }
    }

    /// Fold another report into this one.
    pub fn merge(&mut self, other: ValidationReport) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
    }

    /// Canonical order for deterministic output regardless of the
    /// (possibly parallel) order violations were produced in.
    pub fn canonicalize(&mut self) {
        self.violations.sort();
        self.violations.dedup();
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "ok ({} instances checked)", self.checks)
        } else {
            writeln!(
                f,
                "{} violation(s) over {} instances:",
                self.violations.len(),
                self.checks
            )?;
            for v in &self.violations {
                writeln!(f, "  {v}")?;
            }
            Ok(())
        }
    }
}
