//! Bol algebras presented by structure constants.
//!
//! Conventions: `e_i · e_j = Σ_k T[i][j][k] e_k` and
//! `(e_i, e_j, e_k) = Σ_l R[i][j][k][l] e_l`, where the ternary product is
//! read as `(x, y, z) = D(x, y) z`, the inner pseudo-derivation `D(x, y)`
//! applied to `z`. In the universal enveloping Lie algebra this is
//! `(x, y, z) = [z, [x, y]]`.

use num_traits::Zero;

use crate::axioms::AxiomReport;
use crate::error::{BolError, Result};
use crate::linalg::{Matrix, Scalar, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BolAlgebra {
    name: String,
    labels: Vec<String>,
    binary: Vec<Scalar>,
    ternary: Vec<Scalar>,
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

impl BolAlgebra {
    /// Builds an algebra from dense tensors (`n³` binary and `n⁴` ternary
    /// entries, row-major). No identities are checked; see [`Self::verified`].
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        binary: Vec<Scalar>,
        ternary: Vec<Scalar>,
    ) -> Result<Self> {
        let n = labels.len();
        if binary.len() != n * n * n {
            return Err(BolError::InvalidData(format!(
                "binary tensor has {} entries, expected {}",
                binary.len(),
                n * n * n
            )));
        }
        if ternary.len() != n * n * n * n {
            return Err(BolError::InvalidData(format!(
                "ternary tensor has {} entries, expected {}",
                ternary.len(),
                n * n * n * n
            )));
        }
        Ok(BolAlgebra {
            name: name.into(),
            labels,
            binary,
            ternary,
        })
    }

    /// The `n`-dimensional algebra with all products zero.
    pub fn zero(name: impl Into<String>, n: usize) -> Self {
        Self::with_labels(name, default_labels(n))
    }

    pub fn with_labels(name: impl Into<String>, labels: Vec<String>) -> Self {
        let n = labels.len();
        BolAlgebra {
            name: name.into(),
            labels,
            binary: vec![Scalar::zero(); n * n * n],
            ternary: vec![Scalar::zero(); n * n * n * n],
        }
    }

    /// Runs [`Self::check_axioms`] and rejects the algebra on any failure.
    pub fn verified(self) -> Result<Self> {
        let report = self.check_axioms();
        match report.first_failure() {
            None => Ok(self),
            Some(check) => Err(BolError::NotBol(check.to_string())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn bidx(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.dim();
        (i * n + j) * n + k
    }

    fn tidx(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        let n = self.dim();
        ((i * n + j) * n + k) * n + l
    }

    pub fn binary_coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.binary[self.bidx(i, j, k)]
    }

    pub fn ternary_coeff(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.ternary[self.tidx(i, j, k, l)]
    }

    /// Sets `T[i][j][k] = v` and `T[j][i][k] = −v`.
    pub fn set_binary(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let a = self.bidx(j, i, k);
        self.binary[a] = -v.clone();
        let b = self.bidx(i, j, k);
        self.binary[b] = v;
    }

    /// Sets `R[i][j][k][l] = v` and `R[j][i][k][l] = −v`.
    pub fn set_ternary(&mut self, i: usize, j: usize, k: usize, l: usize, v: Scalar) {
        let a = self.tidx(j, i, k, l);
        self.ternary[a] = -v.clone();
        let b = self.tidx(i, j, k, l);
        self.ternary[b] = v;
    }

    /// Sets a single binary entry without touching its antisymmetric partner.
    pub fn set_binary_raw(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let a = self.bidx(i, j, k);
        self.binary[a] = v;
    }

    pub fn set_ternary_raw(&mut self, i: usize, j: usize, k: usize, l: usize, v: Scalar) {
        let a = self.tidx(i, j, k, l);
        self.ternary[a] = v;
    }

    /// Coordinates of `e_i · e_j`.
    pub fn binary_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let s = self.bidx(i, j, 0);
        &self.binary[s..s + self.dim()]
    }

    /// Coordinates of `(e_i, e_j, e_k)`.
    pub fn ternary_basis(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let s = self.tidx(i, j, k, 0);
        &self.ternary[s..s + self.dim()]
    }

    pub fn has_zero_binary(&self) -> bool {
        self.binary.iter().all(Zero::is_zero)
    }

    pub fn has_zero_ternary(&self) -> bool {
        self.ternary.iter().all(Zero::is_zero)
    }

    /// Both products vanish identically.
    pub fn is_abelian(&self) -> bool {
        self.has_zero_binary() && self.has_zero_ternary()
    }

    fn check_len(&self, v: &Vector) -> Result<()> {
        if v.len() != self.dim() {
            return Err(BolError::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = Vector::zeros(n);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out.add_scaled(&(xi * yj), self.binary_basis(i, j));
            }
        }
        out
    }

    pub(crate) fn tri(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = Vector::zeros(n);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    out.add_scaled(&(&xy * zk), self.ternary_basis(i, j, k));
                }
            }
        }
        out
    }

    /// `x · y`
    pub fn binary(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.mul(x.coords(), y.coords()))
    }

    /// `(x, y, z)`
    pub fn ternary(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        self.check_len(z)?;
        Ok(self.tri(x.coords(), y.coords(), z.coords()))
    }

    /// Matrix of `z ↦ (x, y, z)`.
    pub fn left_op(&self, x: &Vector, y: &Vector) -> Result<Matrix> {
        self.check_len(x)?;
        self.check_len(y)?;
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|c| self.tri(x.coords(), y.coords(), Vector::unit(n, c).coords()))
            .collect();
        Ok(Matrix::from_columns(&cols, n))
    }

    /// Matrix of `z ↦ z · e_i`.
    pub fn right_mult(&self, i: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|c| Vector::from(self.binary_basis(c, i).to_vec()))
            .collect();
        Matrix::from_columns(&cols, n)
    }

    /// Matrix of `z ↦ (z, e_i, e_j)`.
    pub fn tri_op(&self, i: usize, j: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|c| Vector::from(self.ternary_basis(c, i, j).to_vec()))
            .collect();
        Matrix::from_columns(&cols, n)
    }

    /// Operators whose common invariant subspaces are the ideals:
    /// every right multiplication and every `z ↦ (z, e_i, e_j)`.
    pub fn ideal_family(&self) -> Vec<Matrix> {
        let n = self.dim();
        let mut ops: Vec<Matrix> = (0..n).map(|i| self.right_mult(i)).collect();
        for i in 0..n {
            for j in 0..n {
                ops.push(self.tri_op(i, j));
            }
        }
        ops.retain(|m| !m.is_zero());
        ops
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn check_axioms(&self) -> AxiomReport {
        crate::axioms::check(self)
    }

    /// Block-diagonal direct sum; the second summand's basis follows the first.
    pub fn direct_sum(&self, other: &BolAlgebra) -> BolAlgebra {
        let n1 = self.dim();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut out = BolAlgebra::with_labels(format!("{}+{}", self.name, other.name), labels);
        for (src, off) in [(self, 0), (other, n1)] {
            let m = src.dim();
            for i in 0..m {
                for j in 0..m {
                    for k in 0..m {
                        out.set_binary_raw(
                            i + off,
                            j + off,
                            k + off,
                            src.binary_coeff(i, j, k).clone(),
                        );
                        for l in 0..m {
                            out.set_ternary_raw(
                                i + off,
                                j + off,
                                k + off,
                                l + off,
                                src.ternary_coeff(i, j, k, l).clone(),
                            );
                        }
                    }
                }
            }
        }
        out
    }

    /// Re-expresses the tensors in the basis given by the columns of `basis`.
    pub fn change_basis(&self, basis: &Matrix) -> Result<BolAlgebra> {
        let n = self.dim();
        if basis.rows() != n || basis.cols() != n {
            return Err(BolError::DimensionMismatch {
                expected: n,
                found: basis.cols(),
            });
        }
        let inv = basis
            .inverse()
            .ok_or_else(|| BolError::InvalidData("change of basis matrix is singular".into()))?;
        let b: Vec<Vector> = (0..n).map(|j| basis.column(j)).collect();
        let mut out = BolAlgebra::with_labels(self.name.clone(), self.labels.clone());
        for i in 0..n {
            for j in 0..n {
                let xy = inv.apply(&self.mul(b[i].coords(), b[j].coords()));
                for k in 0..n {
                    out.set_binary_raw(i, j, k, xy[k].clone());
                }
                for k in 0..n {
                    let t = inv.apply(&self.tri(b[i].coords(), b[j].coords(), b[k].coords()));
                    for l in 0..n {
                        out.set_ternary_raw(i, j, k, l, t[l].clone());
                    }
                }
            }
        }
        Ok(out)
    }
}
