//! Structured verification reports.
//!
//! Axiom checks never panic on mathematical failure: they return a [`Report`]
//! listing each named check with a pass flag and, on failure, a [`Witness`]
//! naming a basis element where the two sides of the axiom differ, together
//! with both evaluations printed as linear combinations. Errors (type
//! mismatches, ill-posed inputs) stay in [`crate::error`].

use std::fmt;

/// A concrete counterexample: one basis element where an identity fails.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    /// Label of the basis element being evaluated.
    pub element: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report { subject: subject.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(Check { name: name.into(), pass, witness: None });
    }

    pub fn push_witnessed(&mut self, name: impl Into<String>, pass: bool, witness: Option<Witness>) {
        self.checks.push(Check { name: name.into(), pass, witness: if pass { None } else { witness } });
    }

    /// Append another report's checks under a name prefix.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut check in other.checks {
            check.name = format!("{prefix}: {}", check.name);
            self.checks.push(check);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> + '_ {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.passed() { "PASS" } else { "FAIL" })?;
        for check in &self.checks {
            writeln!(f, "  [{}] {}", if check.pass { "ok" } else { "FAIL" }, check.name)?;
            if let Some(w) = &check.witness {
                writeln!(f, "       at {}:", w.element)?;
                writeln!(f, "       lhs = {}", w.lhs)?;
                writeln!(f, "       rhs = {}", w.rhs)?;
            }
        }
        Ok(())
    }
}
