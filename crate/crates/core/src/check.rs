//! Named verification outcomes shared by every suite.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A claim that exact evaluation contradicts but that is not an internal
    /// invariant of the algebra. Does not fail a run.
    Finding,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub input: String,
    pub got: String,
    pub expected: String,
}

impl Witness {
    pub fn new(input: impl Into<String>, got: impl ToString, expected: impl ToString) -> Self {
        Witness {
            input: input.into(),
            got: got.to_string(),
            expected: expected.to_string(),
        }
    }
}

/// Outcome of one named check. `fail` and `finding` always carry a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    /// The displayed claim this check mirrors.
    #[serde(rename = "paper_ref")]
    pub reference: String,
    pub status: Status,
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, reference: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            reference: reference.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, reference: impl Into<String>, witness: Witness) -> Self {
        CheckResult {
            name: name.into(),
            reference: reference.into(),
            status: Status::Fail,
            witness: Some(witness),
        }
    }

    pub fn finding(
        name: impl Into<String>,
        reference: impl Into<String>,
        witness: Witness,
    ) -> Self {
        CheckResult {
            name: name.into(),
            reference: reference.into(),
            status: Status::Finding,
            witness: Some(witness),
        }
    }

    /// Pass if `witness` is `None`, otherwise `on_violation`.
    pub fn decide(
        name: impl Into<String>,
        reference: impl Into<String>,
        witness: Option<Witness>,
        on_violation: Status,
    ) -> Self {
        match witness {
            None => CheckResult::pass(name, reference),
            Some(w) => CheckResult {
                name: name.into(),
                reference: reference.into(),
                status: on_violation,
                witness: Some(w),
            },
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Folds several results into one named result: pass iff all pass,
/// otherwise the first non-passing status and witness.
pub fn all_of(
    name: impl Into<String>,
    reference: impl Into<String>,
    results: impl IntoIterator<Item = CheckResult>,
) -> CheckResult {
    let first_bad = results.into_iter().find(|r| !r.is_pass());
    match first_bad {
        None => CheckResult::pass(name, reference),
        Some(bad) => CheckResult {
            name: name.into(),
            reference: reference.into(),
            status: bad.status,
            witness: bad.witness,
        },
    }
}
