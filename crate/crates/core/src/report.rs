//! Pass/fail reports produced by every checker.

use std::fmt;

use serde::Serialize;

use crate::linspace::{LinearMap, TensorSpace};

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First failing basis element and both sides there, when the check failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    /// Informational lines that are neither passes nor failures.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            witness: if passed { None } else { witness },
        });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, true, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(name, false, Some(witness.into()));
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    /// Records whether `lhs == rhs` as matrices, with the first differing
    /// source basis element as witness.
    pub fn check_maps(
        &mut self,
        name: impl Into<String>,
        lhs: &LinearMap,
        rhs: &LinearMap,
    ) -> bool {
        let name = name.into();
        match map_difference(lhs, rhs) {
            None => {
                self.pass(name);
                true
            }
            Some(w) => {
                self.fail(name, w);
                false
            }
        }
    }

    /// Runs a fallible comparison, recording an error as a failure.
    pub fn check_result(
        &mut self,
        name: impl Into<String>,
        maps: crate::error::Result<(LinearMap, LinearMap)>,
    ) -> bool {
        match maps {
            Ok((l, r)) => self.check_maps(name, &l, &r),
            Err(e) => {
                self.fail(name, e.to_string());
                false
            }
        }
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
        self.notes.extend(other.notes);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.find(name).is_some_and(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            match &c.witness {
                Some(w) => writeln!(f, "{status} {}  [{w}]", c.name)?,
                None => writeln!(f, "{status} {}", c.name)?,
            }
        }
        for n in &self.notes {
            writeln!(f, "NOTE {n}")?;
        }
        Ok(())
    }
}

/// Describes the first basis element where two maps differ, or `None` if equal.
pub fn map_difference(lhs: &LinearMap, rhs: &LinearMap) -> Option<String> {
    if lhs.source().dim() != rhs.source().dim() || lhs.target().dim() != rhs.target().dim() {
        return Some(format!(
            "shapes differ: {} -> {} vs {} -> {}",
            lhs.source(),
            lhs.target(),
            rhs.source(),
            rhs.target()
        ));
    }
    let j = lhs.first_difference(rhs)?;
    Some(format!(
        "at {}: {} vs {}",
        lhs.source().label(j),
        fmt_col(lhs.target(), lhs, j),
        fmt_col(rhs.target(), rhs, j)
    ))
}

fn fmt_col(space: &TensorSpace, m: &LinearMap, j: usize) -> String {
    crate::linspace::format_vector(space, m.column(j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linspace::BasedSpace;
    use crate::scalar::FieldSpec;

    #[test]
    fn witness_names_first_difference() {
        let v =
            TensorSpace::single(&BasedSpace::new("V", ["a", "b"], FieldSpec::Prime(3)).unwrap());
        let id = LinearMap::identity(&v);
        let s = LinearMap::swap(&TensorSpace::unit(FieldSpec::Prime(3)), &v);
        let mut r = Report::new("t");
        assert!(r.check_maps("same", &id, &s));
        let z = LinearMap::zero(v.clone(), v.clone());
        assert!(!r.check_maps("differs", &id, &z));
        let text = r.to_string();
        assert!(text.contains("PASS same"));
        assert!(text.contains("FAIL differs  [at a: a vs 0]"));
        assert!(!r.all_passed());
        assert!(r.to_json().contains("\"passed\": false"));
    }
}
