//! Pass/fail tallies for identities checked on basis tuples.

use std::fmt;

use crate::linalg::Vector;

/// A basis tuple on which an identity fails, with the nonzero defect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub defect: Vector,
}

/// Outcome of checking one identity on every relevant basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    /// The first failing tuple encountered.
    pub witness: Option<Witness>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            checked: 0,
            failures: 0,
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn record(&mut self, indices: &[usize], defect: Vector) {
        self.checked += 1;
        if !defect.is_zero() {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(Witness {
                    indices: indices.to_vec(),
                    defect,
                });
            }
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: pass ({} tuples)", self.name, self.checked),
            Some(w) => write!(
                f,
                "{}: FAIL on {} of {} tuples; witness {:?} defect {}",
                self.name, self.failures, self.checked, w.indices, w.defect
            ),
        }
    }
}
