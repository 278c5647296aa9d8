//! Verification reports shared by the library and the command-line tool.

use serde::Serialize;

use crate::series::{fraction_string, Rational, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One named comparison of an expected and an actual value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub equal: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let equal = expected == actual;
        Check {
            name: name.into(),
            expected,
            actual,
            equal,
        }
    }

    /// A check whose equality is decided by the caller rather than by
    /// comparing the rendered strings.
    pub fn with_outcome(
        name: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        equal: bool,
    ) -> Self {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            equal,
        }
    }

    pub fn rational(name: impl Into<String>, expected: &Rational, actual: &Rational) -> Self {
        Check::with_outcome(
            name,
            fraction_string(expected),
            fraction_string(actual),
            expected == actual,
        )
    }
}

/// A verification outcome; `status` is `pass` exactly when every check holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub runtime_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            status: Status::Pass,
            checks: Vec::new(),
            runtime_ms: 0,
        }
    }

    pub fn error(command: impl Into<String>, message: impl ToString) -> Self {
        let mut r = Report::new(command);
        r.checks
            .push(Check::with_outcome("error", "", message, false));
        r.status = Status::Error;
        r
    }

    pub fn push(&mut self, check: Check) {
        if !check.equal && self.status == Status::Pass {
            self.status = Status::Fail;
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        for c in other.checks {
            self.push(c);
        }
        if other.status == Status::Error {
            self.status = Status::Error;
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.equal)
    }

    /// Compares two series coefficient by coefficient, one check per
    /// exponent, plus a check on the offsets.
    pub fn compare_series(&mut self, label: &str, expected: &Series, actual: &Series) {
        self.push(Check::rational(
            format!("{label} offset"),
            expected.offset(),
            actual.offset(),
        ));
        let order = expected.order().max(actual.order());
        for k in 0..=order {
            let name = format!(
                "{label} x^{}",
                crate::series::exponent_string(&expected.exponent(k))
            );
            match (expected.coeffs().get(k), actual.coeffs().get(k)) {
                (Some(e), Some(a)) => self.push(Check::rational(name, e, a)),
                (e, a) => {
                    let show = |c: Option<&Rational>| {
                        c.map(fraction_string).unwrap_or_else(|| "unknown".into())
                    };
                    self.push(Check::with_outcome(name, show(e), show(a), false));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{integer, power_product};

    #[test]
    fn status_tracks_checks() {
        let mut r = Report::new("demo");
        assert!(r.passed());
        r.push(Check::new("a", 1, 1));
        assert!(r.passed());
        r.push(Check::new("b", 1, 2));
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.first_failure().unwrap().name, "b");
        assert_eq!(Report::error("x", "bad").status, Status::Error);
    }

    #[test]
    fn series_comparison() {
        let mut r = Report::new("s");
        r.compare_series("eta", &power_product(1, 5), &power_product(1, 5));
        assert!(r.passed());
        assert_eq!(r.checks.len(), 7);
        let mut r = Report::new("s");
        r.compare_series(
            "eta",
            &power_product(1, 5),
            &power_product(1, 5).scale(&integer(2)),
        );
        assert_eq!(r.first_failure().unwrap().name, "eta x^0");
    }
}
