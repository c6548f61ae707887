use std::fmt;

/// One mismatch found by a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub params: String,
    pub expected: String,
    pub actual: String,
}

/// Pass/fail record for an identity or property checked over a parameter range.
///
/// `passed()` is derived from the failure list, so the two cannot disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    name: String,
    range: String,
    experimental: bool,
    checked: usize,
    failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>, range: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            range: range.into(),
            experimental: false,
            checked: 0,
            failures: Vec::new(),
        }
    }

    /// Marks the report as an unproven observation rather than a theorem check.
    pub fn experimental(mut self) -> Self {
        self.experimental = true;
        self
    }

    /// Records one comparison.
    pub fn check<T: PartialEq + fmt::Display>(&mut self, params: impl fmt::Display, expected: T, actual: T) -> bool {
        self.checked += 1;
        let ok = expected == actual;
        if !ok {
            self.failures.push(Failure {
                params: params.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
        ok
    }

    /// Records a predicate; `what` describes the property that should hold.
    pub fn check_that(&mut self, params: impl fmt::Display, what: &str, holds: bool) -> bool {
        self.checked += 1;
        if !holds {
            self.failures.push(Failure {
                params: params.to_string(),
                expected: what.to_string(),
                actual: "violated".to_string(),
            });
        }
        holds
    }

    pub fn fail(&mut self, params: impl fmt::Display, expected: impl fmt::Display, actual: impl fmt::Display) {
        self.checked += 1;
        self.failures.push(Failure {
            params: params.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn range(&self) -> &str {
        &self.range
    }

    pub fn is_experimental(&self) -> bool {
        self.experimental
    }

    pub fn checked(&self) -> usize {
        self.checked
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let tag = if self.experimental { " EXPERIMENTAL" } else { "" };
        write!(
            f,
            "[{status}]{tag} {} ({}; {} checks, {} failures)",
            self.name,
            self.range,
            self.checked,
            self.failures.len()
        )?;
        for fail in &self.failures {
            write!(f, "\n    {}: expected {}, got {}", fail.params, fail.expected, fail.actual)?;
        }
        Ok(())
    }
}
