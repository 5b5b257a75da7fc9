//! Outcome of a verification routine.

use serde::Serialize;

/// Counts checked cases and keeps a description of every failure.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), checked: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one case; `describe` runs only on failure.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.checked += 1;
        self.failures.push(msg.into());
    }

    /// Folds another report's counts and failures into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        let prefix = other.name;
        self.failures.extend(other.failures.into_iter().map(|f| format!("{prefix}: {f}")));
    }

    pub fn summary(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!("{status} {} ({} checks", self.name, self.checked);
        if !self.passed() {
            s.push_str(&format!(", {} failures", self.failures.len()));
        }
        s.push(')');
        s
    }
}
