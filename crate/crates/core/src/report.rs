//! Check reports shared by the verification routines and the CLI.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

/// Named list of `lhs = rhs` comparisons. A check passes iff both sides render identically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub target: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(target: &str) -> Self {
        Report {
            target: target.to_string(),
            ..Default::default()
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn push(&mut self, name: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> bool {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let pass = lhs == rhs;
        self.checks.push(Check {
            name: name.into(),
            lhs,
            rhs,
            pass,
        });
        pass
    }

    /// A yes/no property rendered as `lhs = "true"` against the expected value.
    pub fn push_bool(&mut self, name: impl Into<String>, actual: bool, expected: bool) -> bool {
        self.push(name, actual.to_string(), expected.to_string())
    }

    /// Negative control: passes when `failed` is true, i.e. the corruption was noticed.
    pub fn push_detected(&mut self, name: impl Into<String>, failed: bool) -> bool {
        let lhs = if failed { "detected" } else { "missed" };
        self.push(name, lhs, "detected")
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.checks.push(Check {
                name: format!("{prefix}{}", c.name),
                ..c
            });
        }
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
