//! Structured check reports. Every verifier in the crate produces a list of
//! [`CheckRecord`]s: one per checked statement, counting the instances that
//! were exhausted and carrying a witness string for each failing instance.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    /// Stable identifier of the statement being checked.
    pub id: String,
    /// Stable tag naming the mathematical fact behind the check.
    pub paper_ref: String,
    /// Number of instances enumerated.
    pub instances: u64,
    /// One witness description per failing instance.
    pub failures: Vec<String>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<CheckRecord>,
    /// Informational remarks that are not failures (e.g. route comparisons
    /// run outside their hypotheses).
    pub notes: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// One line per check, `ok`/`FAIL` plus the first witness.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            if c.passed() {
                out.push_str(&format!("  ok   {} ({} instances)\n", c.id, c.instances));
            } else {
                out.push_str(&format!(
                    "  FAIL {} ({} instances, {} failures; first: {})\n",
                    c.id,
                    c.instances,
                    c.failures.len(),
                    c.failures.first().map(String::as_str).unwrap_or("-")
                ));
            }
        }
        out
    }
}

/// Incremental builder for a single check.
pub struct Checker {
    record: CheckRecord,
}

impl Checker {
    pub fn new(id: &str, paper_ref: &str) -> Self {
        Checker {
            record: CheckRecord {
                id: id.to_string(),
                paper_ref: paper_ref.to_string(),
                instances: 0,
                failures: Vec::new(),
            },
        }
    }

    /// Records one instance; `ok == false` stores the witness.
    pub fn instance(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.record.instances += 1;
        if !ok {
            self.record.failures.push(witness());
        }
    }

    pub fn fail(&mut self, witness: String) {
        self.record.instances += 1;
        self.record.failures.push(witness);
    }

    pub fn finish(self) -> CheckRecord {
        self.record
    }
}
