//! Exact computer algebra for finite-dimensional Bol algebras given by
//! structure constants over the rationals.
//!
//! A Bol algebra carries an alternating binary product `x · y` and a ternary
//! product `(x, y, z)`, read as the inner map `D(x, y)` applied to `z`.
//! The crate verifies the defining identities, computes ideals, derived
//! series, radicals, Killing–Ricci forms and the universal enveloping Lie
//! algebra, and splits semisimple algebras into simple ideals.

pub mod algebra;
pub mod axioms;
pub mod catalog;
pub mod decompose;
pub mod envelope;
pub mod error;
pub mod forms;
pub mod ideals;
pub mod invariant;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod radical;
pub mod report;
pub mod series;

pub use algebra::BolAlgebra;
pub use error::{BolError, Result};
pub use linalg::{Matrix, Scalar, Subspace, Vector};

/// Outcome of a simplicity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    /// Certified: nonabelian with no proper nonzero ideal.
    Simple,
    /// A proper nonzero ideal.
    ProperIdeal(Subspace),
    /// Zero-dimensional, or one-dimensional with trivial products.
    Degenerate,
    /// The search neither found an ideal nor certified simplicity.
    Undecided,
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::Simple)
    }
}
