use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::exact::{rational_string, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Why a check failed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Detail {
    /// First differing coefficient or grid cell, with both sides.
    Coefficient {
        at: BTreeMap<String, usize>,
        #[serde(with = "rational_string")]
        lhs: Rational,
        #[serde(with = "rational_string")]
        rhs: Rational,
    },
    Numeric {
        estimate: f64,
        target: f64,
        abs_error: f64,
        tolerance: f64,
    },
}

/// Outcome of one identity verification. `detail` is present exactly when
/// the status is `fail`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub detail: Option<Detail>,
}

impl CheckReport {
    pub fn pass(id: &str, params: BTreeMap<String, Value>) -> Self {
        CheckReport {
            id: id.to_string(),
            params,
            status: Status::Pass,
            detail: None,
        }
    }

    pub fn mismatch(
        id: &str,
        params: BTreeMap<String, Value>,
        at: &[(&str, usize)],
        lhs: &Rational,
        rhs: &Rational,
    ) -> Self {
        CheckReport {
            id: id.to_string(),
            params,
            status: Status::Fail,
            detail: Some(Detail::Coefficient {
                at: at.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            }),
        }
    }

    pub fn numeric_fail(
        id: &str,
        params: BTreeMap<String, Value>,
        estimate: f64,
        target: f64,
        abs_error: f64,
        tolerance: f64,
    ) -> Self {
        CheckReport {
            id: id.to_string(),
            params,
            status: Status::Fail,
            detail: Some(Detail::Numeric {
                estimate,
                target,
                abs_error,
                tolerance,
            }),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Location of the first difference, if this is a coefficient failure.
    pub fn failure_index(&self) -> Option<&BTreeMap<String, usize>> {
        match &self.detail {
            Some(Detail::Coefficient { at, .. }) => Some(at),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// `PASS id {params}` or `FAIL id {params}: detail`.
impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(f, "{tag} {} [{}]", self.id, params.join(" "))?;
        match &self.detail {
            None => Ok(()),
            Some(Detail::Coefficient { at, lhs, rhs }) => {
                let at: Vec<String> = at.iter().map(|(k, v)| format!("{k}={v}")).collect();
                write!(
                    f,
                    ": first difference at {}: lhs {lhs} rhs {rhs}",
                    at.join(" ")
                )
            }
            Some(Detail::Numeric {
                estimate,
                target,
                abs_error,
                tolerance,
            }) => write!(
                f,
                ": estimate {estimate} target {target} error {abs_error:e} > {tolerance:e}"
            ),
        }
    }
}
