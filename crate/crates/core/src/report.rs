//! Verification reports: named checks with pass/fail status and the first
//! failing witness.

use std::fmt;

use serde::Serialize;

/// Sampling parameters shared by every verification suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub samples: usize,
    pub seed: u64,
    /// Degree bound for exhaustive checks over monomials of infinite-dimensional algebras.
    pub degree_bound: u32,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            samples: 64,
            seed: 0,
            degree_bound: 3,
        }
    }
}

impl SuiteConfig {
    pub fn new(samples: usize, seed: u64) -> Self {
        SuiteConfig {
            samples,
            seed,
            ..Self::default()
        }
    }

    pub fn with_degree_bound(mut self, degree_bound: u32) -> Self {
        self.degree_bound = degree_bound;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reported for information; never affects the overall verdict.
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

/// Inputs and both sides of an identity that failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub inputs: Vec<NamedValue>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new<N: Into<String>, V: Into<String>>(
        inputs: impl IntoIterator<Item = (N, V)>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        Witness {
            inputs: inputs
                .into_iter()
                .map(|(n, v)| NamedValue {
                    name: n.into(),
                    value: v.into(),
                })
                .collect(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            cases: 0,
            failures: 0,
            witness: None,
            note: None,
        }
    }

    /// Marks the check informational: failures are recorded but not fatal.
    pub fn informational(mut self) -> Self {
        self.status = Status::Info;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Records one case. The witness is built only for the first failure.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.status == Status::Pass {
                self.status = Status::Fail;
            }
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    /// Records a comparison of two rendered sides.
    pub fn record_eq<N: Into<String>, V: Into<String>>(
        &mut self,
        equal: bool,
        inputs: impl FnOnce() -> Vec<(N, V)>,
        lhs: impl FnOnce() -> String,
        rhs: impl FnOnce() -> String,
    ) {
        self.record(equal, || Witness::new(inputs(), lhs(), rhs()));
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64, samples: usize) -> Self {
        Report {
            suite: suite.into(),
            seed,
            samples,
            checks: Vec::new(),
        }
    }

    pub fn for_config(suite: impl Into<String>, cfg: &SuiteConfig) -> Self {
        Self::new(suite, cfg.seed, cfg.samples)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Appends the checks of `other`, prefixing their names with its suite.
    pub fn absorb(&mut self, other: Report) {
        for mut c in other.checks {
            c.name = format!("{}/{}", other.suite, c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} (seed {}, samples {})",
            self.suite, self.seed, self.samples
        )?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info if c.failures == 0 => "INFO",
                Status::Info => "INFO*",
            };
            write!(f, "  [{tag}] {} ({} cases", c.name, c.cases)?;
            if c.failures > 0 {
                write!(f, ", {} failed", c.failures)?;
            }
            writeln!(f, ")")?;
            if let Some(note) = &c.note {
                writeln!(f, "      note: {note}")?;
            }
            if let Some(w) = &c.witness {
                for nv in &w.inputs {
                    writeln!(f, "      {} = {}", nv.name, nv.value)?;
                }
                writeln!(f, "      lhs: {}", w.lhs)?;
                writeln!(f, "      rhs: {}", w.rhs)?;
            }
        }
        write!(f, "result: {}", if self.passed() { "pass" } else { "fail" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_kept() {
        let mut c = Check::new("demo");
        c.record(true, || unreachable!());
        c.record(false, || Witness::new([("f", "x")], "1", "2"));
        c.record(false, || Witness::new([("f", "y")], "3", "4"));
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.failures, 2);
        assert_eq!(c.witness.as_ref().unwrap().lhs, "1");
    }

    #[test]
    fn informational_checks_never_fail_a_report() {
        let mut r = Report::new("s", 0, 1);
        let mut c = Check::new("side").informational();
        c.record(false, || Witness::new([("f", "x")], "1", "2"));
        r.push(c);
        assert!(r.passed());
        assert!(r.to_string().contains("INFO*"));
    }
}
