//! A small exact Lie-algebra toolkit: Jacobi check, Killing form, derived
//! series, radical and semisimplicity.

use num_traits::Zero;

use crate::algebra::default_labels;
use crate::error::{BolError, Result};
use crate::forms::{BilinearForm, Provenance};
use crate::invariant::{self, SearchConfig, SearchOutcome};
use crate::linalg::{int, Matrix, Scalar, Subspace, Vector};
use crate::report::Check;
use crate::series::{self, SeriesResult, SeriesVariant};
use crate::Simplicity;

/// Lie algebra with `[f_i, f_j] = Σ_k C[i][j][k] f_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    brackets: Vec<Scalar>,
}

impl LieAlgebra {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: Vec<Scalar>,
    ) -> Result<Self> {
        let m = labels.len();
        if brackets.len() != m * m * m {
            return Err(BolError::InvalidData(format!(
                "bracket tensor has {} entries, expected {}",
                brackets.len(),
                m * m * m
            )));
        }
        Ok(LieAlgebra {
            name: name.into(),
            labels,
            brackets,
        })
    }

    pub fn with_labels(name: impl Into<String>, labels: Vec<String>) -> Self {
        let m = labels.len();
        LieAlgebra {
            name: name.into(),
            labels,
            brackets: vec![Scalar::zero(); m * m * m],
        }
    }

    pub fn abelian(m: usize) -> Self {
        Self::with_labels(format!("abelian{m}"), default_labels(m))
    }

    /// Basis `e, f, h` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f`.
    pub fn sl2() -> Self {
        let mut l = Self::with_labels("sl2", vec!["e".into(), "f".into(), "h".into()]);
        l.set_bracket(0, 1, 2, int(1));
        l.set_bracket(2, 0, 0, int(2));
        l.set_bracket(2, 1, 1, int(-2));
        l
    }

    /// Basis `x, y, z` with `[x,y] = z`, `[y,z] = x`, `[z,x] = y`.
    pub fn so3() -> Self {
        let mut l = Self::with_labels("so3", vec!["x".into(), "y".into(), "z".into()]);
        l.set_bracket(0, 1, 2, int(1));
        l.set_bracket(1, 2, 0, int(1));
        l.set_bracket(2, 0, 1, int(1));
        l
    }

    /// Basis `x, y, z` with `[x,y] = z` and `z` central.
    pub fn heis3() -> Self {
        let mut l = Self::with_labels("heis3", vec!["x".into(), "y".into(), "z".into()]);
        l.set_bracket(0, 1, 2, int(1));
        l
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (m1, m2) = (self.dim(), other.dim());
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut out = LieAlgebra::with_labels(format!("{}+{}", self.name, other.name), labels);
        for i in 0..m1 {
            for j in 0..m1 {
                for k in 0..m1 {
                    out.set_bracket_raw(i, j, k, self.bracket_coeff(i, j, k).clone());
                }
            }
        }
        for i in 0..m2 {
            for j in 0..m2 {
                for k in 0..m2 {
                    out.set_bracket_raw(
                        m1 + i,
                        m1 + j,
                        m1 + k,
                        other.bracket_coeff(i, j, k).clone(),
                    );
                }
            }
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        let m = self.dim();
        (i * m + j) * m + k
    }

    pub fn bracket_coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.brackets[self.idx(i, j, k)]
    }

    /// Sets `C[i][j][k] = v` and `C[j][i][k] = −v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let a = self.idx(j, i, k);
        self.brackets[a] = -v.clone();
        let b = self.idx(i, j, k);
        self.brackets[b] = v;
    }

    pub fn set_bracket_raw(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let a = self.idx(i, j, k);
        self.brackets[a] = v;
    }

    /// Coordinates of `[f_i, f_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let s = self.idx(i, j, 0);
        &self.brackets[s..s + self.dim()]
    }

    pub(crate) fn br(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out.add_scaled(&(xi * yj), self.bracket_basis(i, j));
            }
        }
        out
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(BolError::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
        }
        Ok(self.br(x.coords(), y.coords()))
    }

    /// Matrix of `ad f_i = [f_i, ·]`.
    pub fn ad(&self, i: usize) -> Matrix {
        let m = self.dim();
        let cols: Vec<Vector> = (0..m)
            .map(|c| Vector::from(self.bracket_basis(i, c).to_vec()))
            .collect();
        Matrix::from_columns(&cols, m)
    }

    pub fn ad_family(&self) -> Vec<Matrix> {
        (0..self.dim())
            .map(|i| self.ad(i))
            .filter(|m| !m.is_zero())
            .collect()
    }

    pub fn jacobi_check(&self) -> Check {
        let m = self.dim();
        let mut check = Check::new("jacobi");
        let units: Vec<Vector> = (0..m).map(|i| Vector::unit(m, i)).collect();
        for i in 0..m {
            for j in 0..m {
                let skew = &Vector::from(self.bracket_basis(i, j).to_vec())
                    + &Vector::from(self.bracket_basis(j, i).to_vec());
                if !skew.is_zero() {
                    check.record(&[i, j], skew);
                }
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    let e = |a: usize| units[a].coords();
                    let xy = self.br(e(i), e(j));
                    let yz = self.br(e(j), e(k));
                    let zx = self.br(e(k), e(i));
                    let mut d = self.br(xy.coords(), e(k));
                    d = &d + &self.br(yz.coords(), e(i));
                    d = &d + &self.br(zx.coords(), e(j));
                    check.record(&[i, j, k], d);
                }
            }
        }
        check
    }

    /// `κ(x, y) = tr(ad x ∘ ad y)`.
    pub fn killing(&self) -> BilinearForm {
        let m = self.dim();
        let ads: Vec<Matrix> = (0..m).map(|i| self.ad(i)).collect();
        let mut gram = Matrix::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let t = ads[i].mul(&ads[j]).trace();
                gram[(i, j)] = t.clone();
                gram[(j, i)] = t;
            }
        }
        BilinearForm::with_provenance(gram, Provenance::Killing).expect("square gram")
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

    /// `span{[u, v]}` over basis vectors.
    pub fn bracket_span(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check(u)?;
        self.check(v)?;
        let mut out = Vec::new();
        for x in u.basis() {
            for y in v.basis() {
                out.push(self.br(x.coords(), y.coords()));
            }
        }
        Subspace::span(&out, self.dim())
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn derived_algebra(&self) -> Subspace {
        self.bracket_span(&self.full(), &self.full())
            .expect("same ambient")
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        self.bracket_span(&self.full(), s)?.is_subspace_of(s)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        self.bracket_span(s, s)?.is_subspace_of(s)
    }

    /// Smallest subalgebra containing `s`.
    pub fn generated_subalgebra(&self, s: &Subspace) -> Result<Subspace> {
        self.check(s)?;
        let mut cur = s.clone();
        loop {
            let next = cur.sum(&self.bracket_span(&cur, &cur)?)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Result<Subspace> {
        self.check(s)?;
        Ok(invariant::closure(&self.ad_family(), s))
    }

    pub fn lie_derived_series(&self, s: &Subspace) -> Result<SeriesResult> {
        if !self.is_ideal(s)? {
            return Err(BolError::NotAnIdeal(format!(
                "{s} is not an ideal of {}",
                self.name
            )));
        }
        Ok(self.derived_series_of_subalgebra(s))
    }

    /// Derived series of any subalgebra; its terms need not be ideals of the
    /// whole algebra.
    pub fn derived_series_of_subalgebra(&self, s: &Subspace) -> SeriesResult {
        series::run(SeriesVariant::Lie, s.clone(), |t| {
            self.bracket_span(t, t).expect("same ambient")
        })
    }

    pub fn lie_is_solvable(&self) -> bool {
        self.derived_series_of_subalgebra(&self.full()).solvable
    }

    /// Induced algebra on `L / I`, with coset representatives the unit
    /// vectors outside the pivots of `I`.
    pub fn quotient(&self, i: &Subspace) -> Result<LieAlgebra> {
        if !self.is_ideal(i)? {
            return Err(BolError::NotAnIdeal(format!(
                "{i} is not an ideal of {}",
                self.name
            )));
        }
        let comp = i.complement_indices();
        let labels = comp
            .iter()
            .map(|&c| format!("[{}]", self.labels[c]))
            .collect();
        let mut out = LieAlgebra::with_labels(format!("{}/I", self.name), labels);
        for (a, &ca) in comp.iter().enumerate() {
            for (b, &cb) in comp.iter().enumerate() {
                let v = crate::ideals::coset_coords(
                    i,
                    &comp,
                    &Vector::from(self.bracket_basis(ca, cb).to_vec()),
                );
                for (k, x) in v.into_coords().into_iter().enumerate() {
                    out.set_bracket_raw(a, b, k, x);
                }
            }
        }
        Ok(out)
    }

    /// Radical as the Killing-orthogonal of `[L, L]`, certified to be a
    /// solvable ideal with semisimple quotient.
    pub fn lie_radical(&self) -> Result<Subspace> {
        let r = self.killing().left_perp(&self.derived_algebra())?;
        if !self.is_ideal(&r)? {
            return Err(BolError::Inconsistency(format!(
                "Killing radical {r} is not an ideal"
            )));
        }
        if !self.derived_series_of_subalgebra(&r).solvable {
            return Err(BolError::Inconsistency(format!(
                "Killing radical {r} is not solvable"
            )));
        }
        if !self.quotient(&r)?.killing().is_nondegenerate() {
            return Err(BolError::Inconsistency(format!(
                "quotient by Killing radical {r} is not semisimple"
            )));
        }
        Ok(r)
    }

    /// Cartan's criterion.
    pub fn lie_is_semisimple(&self) -> bool {
        self.killing().is_nondegenerate()
    }

    /// Solvable iff `κ(L, [L, L]) = 0` (Cartan's solvability criterion).
    pub fn cartan_solvability_criterion(&self) -> bool {
        self.killing()
            .left_perp(&self.derived_algebra())
            .expect("same ambient")
            .is_full()
    }

    pub fn simplicity(&self, config: &SearchConfig) -> Simplicity {
        let m = self.dim();
        if m == 0 {
            return Simplicity::Degenerate;
        }
        match invariant::search(&self.ad_family(), m, config) {
            SearchOutcome::Reducible(s) => Simplicity::ProperIdeal(s),
            SearchOutcome::Irreducible if self.derived_algebra().is_zero() => {
                Simplicity::Degenerate
            }
            SearchOutcome::Irreducible => Simplicity::Simple,
            SearchOutcome::Undecided => Simplicity::Undecided,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_examples() {
        assert!(LieAlgebra::abelian(3).jacobi_check().passed());
        assert!(LieAlgebra::sl2().jacobi_check().passed());
        assert!(LieAlgebra::so3().jacobi_check().passed());
        let mut bad = LieAlgebra::sl2();
        bad.set_bracket(0, 1, 0, int(1));
        let c = bad.jacobi_check();
        assert!(!c.passed());
        assert_eq!(c.witness.unwrap().indices, vec![0, 1, 2]);
    }

    #[test]
    fn killing_of_sl2_by_hand() {
        let k = LieAlgebra::sl2().killing();
        let expected = Matrix::from_ints(&[&[0, 4, 0], &[4, 0, 0], &[0, 0, 8]]);
        assert_eq!(k.gram(), &expected);
        assert!(LieAlgebra::heis3().killing().gram().is_zero());
        assert!(LieAlgebra::abelian(2).killing().gram().is_zero());
    }

    #[test]
    fn solvability_examples() {
        assert!(LieAlgebra::abelian(2).lie_is_solvable());
        assert!(!LieAlgebra::sl2().lie_is_solvable());
        let h = LieAlgebra::heis3();
        assert_eq!(
            h.lie_derived_series(&h.full()).unwrap().dims(),
            vec![3, 1, 0]
        );
        for l in [
            LieAlgebra::sl2(),
            LieAlgebra::heis3(),
            LieAlgebra::abelian(2),
        ] {
            assert_eq!(l.lie_is_solvable(), l.cartan_solvability_criterion());
        }
    }

    #[test]
    fn radical_examples() {
        assert!(LieAlgebra::sl2().lie_radical().unwrap().is_zero());
        assert!(LieAlgebra::heis3().lie_radical().unwrap().is_full());
        let s = LieAlgebra::sl2().direct_sum(&LieAlgebra::sl2());
        assert!(s.lie_is_semisimple());
        let g = LieAlgebra::sl2().direct_sum(&LieAlgebra::heis3());
        let r = g.lie_radical().unwrap();
        assert_eq!(r.pivots(), &[3, 4, 5]);
    }

    #[test]
    fn simplicity_examples() {
        let c = SearchConfig::default();
        assert_eq!(LieAlgebra::sl2().simplicity(&c), Simplicity::Simple);
        assert_eq!(LieAlgebra::so3().simplicity(&c), Simplicity::Simple);
        assert!(matches!(
            LieAlgebra::sl2()
                .direct_sum(&LieAlgebra::so3())
                .simplicity(&c),
            Simplicity::ProperIdeal(_)
        ));
        assert_eq!(
            LieAlgebra::abelian(1).simplicity(&c),
            Simplicity::Degenerate
        );
    }
}
