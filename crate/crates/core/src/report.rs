//! Stable-ordered `name = value [status]` audit records.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    /// Observational value with no verdict.
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> Option<&'static str> {
        match self {
            Status::Pass => Some("pass"),
            Status::Fail => Some("fail"),
            Status::NotApplicable => Some("n/a"),
            Status::Info => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub value: String,
    pub status: Status,
}

impl Check {
    pub fn new(name: impl Into<String>, value: impl fmt::Display, status: Status) -> Self {
        Check { name: name.into(), value: value.to_string(), status }
    }

    pub fn info(name: impl Into<String>, value: impl fmt::Display) -> Self {
        Check::new(name, value, Status::Info)
    }

    pub fn na(name: impl Into<String>, reason: impl fmt::Display) -> Self {
        Check::new(name, reason, Status::NotApplicable)
    }

    /// `lhs rhs` with pass iff they are equal.
    pub fn identity<T: fmt::Display + PartialEq>(name: impl Into<String>, lhs: T, rhs: T) -> Self {
        let status = Status::from_bool(lhs == rhs);
        Check::new(name, format!("{lhs} {rhs}"), status)
    }

    /// `lhs rhs` with pass iff `lhs <= rhs`.
    pub fn bound<T: fmt::Display + PartialOrd>(name: impl Into<String>, lhs: T, rhs: T) -> Self {
        let status = Status::from_bool(lhs <= rhs);
        Check::new(name, format!("{lhs} {rhs}"), status)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.name, self.value)?;
        if let Some(s) = self.status.label() {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn status(&self, name: &str) -> Option<Status> {
        self.get(name).map(|c| c.status)
    }

    /// No check failed; n/a and info lines are not failures.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn any_not_applicable(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::NotApplicable)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let mut r = Report::new();
        r.push(Check::identity("a", 3, 3));
        r.push(Check::bound("b", 4, 3));
        r.push(Check::info("t", 7));
        r.push(Check::na("c", "shared sides present"));
        assert_eq!(r.render(), "a = 3 3 pass\nb = 4 3 fail\nt = 7\nc = shared sides present n/a\n");
        assert!(!r.all_pass());
        assert!(r.any_not_applicable());
        assert_eq!(r.status("a"), Some(Status::Pass));
    }
}
