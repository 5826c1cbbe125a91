//! Pass/fail reports produced by the checker suites.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// Concrete evidence: the objects involved and the offending values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub objects: Vec<String>,
    pub detail: String,
}

impl Witness {
    pub fn new<I, S>(objects: I, detail: impl Into<String>) -> Self
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        Witness {
            objects: objects.into_iter().map(|s| s.to_string()).collect(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    /// Number of instances the check was evaluated on.
    pub evaluated: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub witnesses: Vec<Witness>,
}

impl Check {
    /// A check that fails iff any witness was collected.
    pub fn from_witnesses(id: impl Into<String>, evaluated: usize, witnesses: Vec<Witness>) -> Self {
        let status = if witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        Check {
            id: id.into(),
            status,
            evaluated,
            note: None,
            witnesses,
        }
    }

    pub fn skipped(id: impl Into<String>, note: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Skipped,
            evaluated: 0,
            note: Some(note.into()),
            witnesses: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    /// Assembles a report; checks are sorted by id so output is stable.
    pub fn new(suite: impl Into<String>, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        Report {
            suite: suite.into(),
            checks,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}
