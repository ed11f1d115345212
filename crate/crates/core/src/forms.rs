//! Bilinear forms on Bol algebras: invariance, Killing–Ricci forms,
//! orthogonals and the center/derived-space duality check.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::algebra::BolAlgebra;
use crate::envelope::envelope;
use crate::error::{BolError, Result};
use crate::ideals::{center, derived_space, prod_span};
use crate::linalg::{Matrix, Scalar, Subspace, Vector};
use crate::report::Check;

/// Where a form came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Trace formula on ternary left multiplications.
    TraceFormula,
    /// Killing form of the enveloping Lie algebra restricted to `B`.
    EnvelopeRestriction,
    /// Killing form of a Lie algebra.
    Killing,
    User,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::TraceFormula => "trace",
            Provenance::EnvelopeRestriction => "envelope-restriction",
            Provenance::Killing => "killing",
            Provenance::User => "user",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
    symmetric: bool,
    provenance: Provenance,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        Self::with_provenance(gram, Provenance::User)
    }

    pub fn with_provenance(gram: Matrix, provenance: Provenance) -> Result<Self> {
        if !gram.is_square() {
            return Err(BolError::DimensionMismatch {
                expected: gram.rows(),
                found: gram.cols(),
            });
        }
        let symmetric = gram.is_symmetric();
        Ok(BilinearForm {
            gram,
            symmetric,
            provenance,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Matrix::identity(n)).expect("square")
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Scalar {
        x.dot(&self.gram.apply(y))
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.dim()
    }

    fn check(&self, s: &Subspace) -> Result<()> {
        if s.ambient() != self.dim() {
            return Err(BolError::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient(),
            });
        }
        Ok(())
    }

    /// `{x : b(x, s) = 0 for all s ∈ S}`
    pub fn left_perp(&self, s: &Subspace) -> Result<Subspace> {
        self.check(s)?;
        let rows: Vec<Vector> = s.basis().iter().map(|v| self.gram.apply(v)).collect();
        Ok(Subspace::span_unchecked(rows, self.dim()).annihilator())
    }

    /// `{x : b(s, x) = 0 for all s ∈ S}`
    pub fn right_perp(&self, s: &Subspace) -> Result<Subspace> {
        self.check(s)?;
        let gt = self.gram.transpose();
        let rows: Vec<Vector> = s.basis().iter().map(|v| gt.apply(v)).collect();
        Ok(Subspace::span_unchecked(rows, self.dim()).annihilator())
    }

    /// `b(U, V) = 0`
    pub fn orthogonal(&self, u: &Subspace, v: &Subspace) -> bool {
        u.basis()
            .iter()
            .all(|x| v.basis().iter().all(|y| self.eval(x, y).is_zero()))
    }

    /// Gram matrix of the pullback along the columns of `basis`.
    pub fn pullback(&self, basis: &Matrix) -> BilinearForm {
        let gram = basis.transpose().mul(&self.gram).mul(basis);
        BilinearForm::with_provenance(gram, self.provenance).expect("square")
    }

    /// Restriction to the span of the first `n` coordinates.
    pub fn leading_block(&self, n: usize, provenance: Provenance) -> BilinearForm {
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                gram[(i, j)] = self.gram[(i, j)].clone();
            }
        }
        BilinearForm::with_provenance(gram, provenance).expect("square")
    }
}

/// Sign convention for the ternary invariance identity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum InvarianceVariant {
    /// `b((x,y,z), t) = −b(z, (x,y,t))`, the sign obeyed by Killing forms.
    #[default]
    Skew,
    /// `b((x,y,z), t) = b(z, (x,y,t))`
    Symmetric,
}

impl FromStr for InvarianceVariant {
    type Err = BolError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "skew" => Ok(InvarianceVariant::Skew),
            "symmetric" => Ok(InvarianceVariant::Symmetric),
            other => Err(BolError::InvalidData(format!(
                "unknown invariance variant `{other}`"
            ))),
        }
    }
}

impl fmt::Display for InvarianceVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvarianceVariant::Skew => "skew",
            InvarianceVariant::Symmetric => "symmetric",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub variant: InvarianceVariant,
    /// `b(x·y, z) = b(x, y·z)`
    pub binary: Check,
    pub ternary: Check,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.binary.passed() && self.ternary.passed()
    }
}

pub fn invariance_check(
    b: &BolAlgebra,
    form: &BilinearForm,
    variant: InvarianceVariant,
) -> Result<InvarianceReport> {
    let n = b.dim();
    if form.dim() != n {
        return Err(BolError::DimensionMismatch {
            expected: n,
            found: form.dim(),
        });
    }
    let e: Vec<Vector> = (0..n).map(|i| Vector::unit(n, i)).collect();
    let mut binary = Check::new("b(x·y,z) = b(x,y·z)");
    let mut ternary = Check::new(match variant {
        InvarianceVariant::Skew => "b((x,y,z),t) = -b(z,(x,y,t))",
        InvarianceVariant::Symmetric => "b((x,y,z),t) = b(z,(x,y,t))",
    });
    for i in 0..n {
        for j in 0..n {
            let xy = Vector::from(b.binary_basis(i, j).to_vec());
            for k in 0..n {
                let yz = Vector::from(b.binary_basis(j, k).to_vec());
                let d = form.eval(&xy, &e[k]) - form.eval(&e[i], &yz);
                binary.record(&[i, j, k], Vector::from(vec![d]));
                let xyz = Vector::from(b.ternary_basis(i, j, k).to_vec());
                for t in 0..n {
                    let xyt = Vector::from(b.ternary_basis(i, j, t).to_vec());
                    let lhs = form.eval(&xyz, &e[t]);
                    let rhs = form.eval(&e[k], &xyt);
                    let d = match variant {
                        InvarianceVariant::Skew => lhs + rhs,
                        InvarianceVariant::Symmetric => lhs - rhs,
                    };
                    ternary.record(&[i, j, k, t], Vector::from(vec![d]));
                }
            }
        }
    }
    Ok(InvarianceReport {
        variant,
        binary,
        ternary,
    })
}

/// Symmetrized trace form of the ternary product:
/// `β(e_i, e_j) = tr(z ↦ (e_j, z, e_i)) + tr(z ↦ (e_i, z, e_j))`.
///
/// For a Lie triple system this is the Killing form of its standard
/// enveloping Lie algebra restricted to the triple system.
pub fn killing_ricci_trace(b: &BolAlgebra) -> BilinearForm {
    let n = b.dim();
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut s = Scalar::zero();
            for k in 0..n {
                s += b.ternary_coeff(j, k, i, k) + b.ternary_coeff(i, k, j, k);
            }
            gram[(i, j)] = s;
        }
    }
    BilinearForm::with_provenance(gram, Provenance::TraceFormula).expect("square")
}

/// Killing form of the enveloping Lie algebra restricted to `B`.
pub fn killing_ricci_env(b: &BolAlgebra) -> Result<BilinearForm> {
    let env = envelope(b)?;
    Ok(env
        .lie()
        .killing()
        .leading_block(b.dim(), Provenance::EnvelopeRestriction))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingRicciComparison {
    pub trace: BilinearForm,
    pub env: BilinearForm,
    /// `trace − env`
    pub difference: Matrix,
    pub equal: bool,
}

pub fn compare_killing_ricci(b: &BolAlgebra) -> Result<KillingRicciComparison> {
    let trace = killing_ricci_trace(b);
    let env = killing_ricci_env(b)?;
    let difference = trace.gram().sub(env.gram());
    let equal = difference.is_zero();
    Ok(KillingRicciComparison {
        trace,
        env,
        difference,
        equal,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterOrthogonalReport {
    pub variant: InvarianceVariant,
    pub center: Subspace,
    pub left_perp: Subspace,
    pub right_perp: Subspace,
    /// `B · B`
    pub product_space: Subspace,
    /// `B · B + (B, B, B)`
    pub derived_space: Subspace,
    /// Both orthogonals of the center equal `B · B`.
    pub equals_product_space: bool,
    /// Both orthogonals of the center equal `B · B + (B, B, B)`.
    pub equals_derived_space: bool,
}

/// Compares the orthogonals of the center with `B · B` and with
/// `B · B + (B, B, B)` under an invariant nondegenerate symmetric form.
pub fn center_orthogonal_check(
    b: &BolAlgebra,
    form: &BilinearForm,
    variant: InvarianceVariant,
) -> Result<CenterOrthogonalReport> {
    if form.dim() != b.dim() {
        return Err(BolError::DimensionMismatch {
            expected: b.dim(),
            found: form.dim(),
        });
    }
    if !form.is_symmetric() {
        return Err(BolError::Precondition("form is not symmetric".into()));
    }
    if !form.is_nondegenerate() {
        return Err(BolError::Precondition(format!(
            "form is degenerate (rank {} of {})",
            form.rank(),
            form.dim()
        )));
    }
    let inv = invariance_check(b, form, variant)?;
    if !inv.passed() {
        let failing = if inv.binary.passed() {
            &inv.ternary
        } else {
            &inv.binary
        };
        return Err(BolError::Precondition(format!(
            "form is not invariant: {failing}"
        )));
    }
    let c = center(b);
    let left = form.left_perp(&c)?;
    let right = form.right_perp(&c)?;
    let full = b.full();
    let product_space = prod_span(b, &full, &full)?;
    let derived = derived_space(b);
    Ok(CenterOrthogonalReport {
        variant,
        equals_product_space: left == product_space && right == product_space,
        equals_derived_space: left == derived && right == derived,
        center: c,
        left_perp: left,
        right_perp: right,
        product_space,
        derived_space: derived,
    })
}
