//! Exhaustive verification of the Bol-algebra identities on basis tuples.
//!
//! All five identities are multilinear, so checking them on basis tuples
//! is a complete test.

use std::fmt;

use crate::algebra::BolAlgebra;
use crate::linalg::Vector;
use crate::report::Check;
pub use crate::report::Witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `x · y = −y · x`
    A1,
    /// `(x, y, z) = −(y, x, z)`
    A2,
    /// `(x, y, z) + (y, z, x) + (z, x, y) = 0`
    A3,
    /// `(x,y,z)·w − (x,y,w)·z + (z,w,x·y) − (x,y,z·w) − (x·y)·(z·w) = 0`
    A4,
    /// `(x, y, (z, w, u)) = ((x,y,z), w, u) + (z, (x,y,w), u) + (z, w, (x,y,u))`
    A5,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5];

    pub fn description(self) -> &'static str {
        match self {
            Axiom::A1 => "binary product is alternating",
            Axiom::A2 => "ternary product is alternating in its first two slots",
            Axiom::A3 => "cyclic sum of the ternary product vanishes",
            Axiom::A4 => "mixed binary-ternary identity",
            Axiom::A5 => "inner maps are derivations of the ternary product",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub axiom: Axiom,
    pub checked: usize,
    pub failures: usize,
    pub witness: Option<Witness>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: pass ({} tuples)", self.axiom, self.checked),
            Some(w) => write!(
                f,
                "{}: FAIL on {} of {} tuples; witness {:?} defect {}",
                self.axiom, self.failures, self.checked, w.indices, w.defect
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<IdentityCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn get(&self, axiom: Axiom) -> &IdentityCheck {
        self.checks
            .iter()
            .find(|c| c.axiom == axiom)
            .expect("every axiom is checked")
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.passed())
    }
}

struct Tally {
    axiom: Axiom,
    check: Check,
}

impl Tally {
    fn new(axiom: Axiom) -> Self {
        Tally {
            axiom,
            check: Check::new(axiom.to_string()),
        }
    }

    fn record(&mut self, indices: &[usize], defect: Vector) {
        self.check.record(indices, defect);
    }

    fn finish(self) -> IdentityCheck {
        let Check {
            checked,
            failures,
            witness,
            ..
        } = self.check;
        IdentityCheck {
            axiom: self.axiom,
            checked,
            failures,
            witness,
        }
    }
}

pub(crate) fn check(b: &BolAlgebra) -> AxiomReport {
    let n = b.dim();
    let units: Vec<Vector> = (0..n).map(|i| Vector::unit(n, i)).collect();
    let e = |i: usize| units[i].coords();
    let bin = |i: usize, j: usize| Vector::from(b.binary_basis(i, j).to_vec());
    let ter = |i: usize, j: usize, k: usize| Vector::from(b.ternary_basis(i, j, k).to_vec());

    let mut a1 = Tally::new(Axiom::A1);
    let mut a2 = Tally::new(Axiom::A2);
    let mut a3 = Tally::new(Axiom::A3);
    let mut a4 = Tally::new(Axiom::A4);
    let mut a5 = Tally::new(Axiom::A5);

    for i in 0..n {
        for j in i..n {
            a1.record(&[i, j], &bin(i, j) + &bin(j, i));
            for k in 0..n {
                a2.record(&[i, j, k], &ter(i, j, k) + &ter(j, i, k));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = &(&ter(i, j, k) + &ter(j, k, i)) + &ter(k, i, j);
                a3.record(&[i, j, k], s);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let xy = bin(i, j);
            for k in 0..n {
                let xyz = ter(i, j, k);
                for l in 0..n {
                    let zw = bin(k, l);
                    let mut d = b.mul(xyz.coords(), e(l));
                    d = &d - &b.mul(b.ternary_basis(i, j, l), e(k));
                    d = &d + &b.tri(e(k), e(l), xy.coords());
                    d = &d - &b.tri(e(i), e(j), zw.coords());
                    d = &d - &b.mul(xy.coords(), zw.coords());
                    a4.record(&[i, j, k, l], d);
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let xyz = ter(i, j, k);
                for l in 0..n {
                    let xyw = ter(i, j, l);
                    for m in 0..n {
                        let mut d = b.tri(e(i), e(j), b.ternary_basis(k, l, m));
                        d = &d - &b.tri(xyz.coords(), e(l), e(m));
                        d = &d - &b.tri(e(k), xyw.coords(), e(m));
                        d = &d - &b.tri(e(k), e(l), b.ternary_basis(i, j, m));
                        a5.record(&[i, j, k, l, m], d);
                    }
                }
            }
        }
    }
    AxiomReport {
        checks: vec![
            a1.finish(),
            a2.finish(),
            a3.finish(),
            a4.finish(),
            a5.finish(),
        ],
    }
}
