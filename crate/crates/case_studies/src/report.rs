//! Check bookkeeping for the verification suites.

use std::fmt;

/// One expected-versus-actual comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    /// What is being compared.
    pub description: String,
    /// The published or derived expectation, rendered as text.
    pub expected: String,
    /// The computed value, rendered the same way.
    pub actual: String,
    /// Whether the two agree.
    pub pass: bool,
}

/// The outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Suite name (stable, usable as a command-line argument).
    pub suite: String,
    /// Every comparison performed, in execution order.
    pub checks: Vec<CheckResult>,
    /// True exactly when every check passed.
    pub pass: bool,
}

impl VerificationReport {
    /// Number of passing checks.
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "[{}] {} — {}/{} checks",
            if self.pass { "PASS" } else { "FAIL" },
            self.suite,
            self.passed(),
            self.checks.len()
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {}: expected {}, got {}",
                if c.pass { "ok" } else { "FAIL" },
                c.description,
                c.expected,
                c.actual
            )?;
        }
        Ok(())
    }
}

/// Incremental builder used by the suites.
pub(crate) struct SuiteBuilder {
    suite: String,
    checks: Vec<CheckResult>,
}

impl SuiteBuilder {
    pub(crate) fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    /// Record a comparison of two displayable values.
    pub(crate) fn check<T: fmt::Display + PartialEq>(
        &mut self,
        description: &str,
        expected: T,
        actual: T,
    ) {
        self.checks.push(CheckResult {
            description: description.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass: expected == actual,
        });
    }

    pub(crate) fn finish(self) -> VerificationReport {
        let pass = self.checks.iter().all(|c| c.pass);
        VerificationReport {
            suite: self.suite,
            checks: self.checks,
            pass,
        }
    }
}
