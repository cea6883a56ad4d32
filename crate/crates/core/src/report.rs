//! Pass/fail reports for machine-checked identities.
//!
//! A failure in any of these checks means an implementation bug, not a user
//! error, so the checks report rather than abort: each item carries a name,
//! a verdict, and on failure a counterexample description.

use serde_json::{json, Value};

#[derive(Debug, Clone)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub items: Vec<CheckItem>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Record a check that passes iff `counterexample` is `None`.
    pub fn push_counterexample(
        &mut self,
        name: impl Into<String>,
        counterexample: Option<String>,
    ) {
        match counterexample {
            None => self.push(name, true, ""),
            Some(detail) => self.push(name, false, detail),
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn merge_prefixed(&mut self, prefix: &str, other: VerificationReport) {
        for item in other.items {
            self.items.push(CheckItem {
                name: format!("{prefix}/{}", item.name),
                passed: item.passed,
                detail: item.detail,
            });
        }
    }

    pub fn to_json(&self) -> Value {
        let items: Vec<Value> = self
            .items
            .iter()
            .map(|i| {
                json!({
                    "name": i.name,
                    "passed": i.passed,
                    "detail": i.detail,
                })
            })
            .collect();
        json!({
            "passed": self.passed(),
            "checks": items,
        })
    }
}
