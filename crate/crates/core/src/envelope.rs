//! Pseudo-derivations and the universal enveloping Lie algebra `G = B ⊕ h`.
//!
//! `h` is spanned by pairs `(Π, Z)` of an endomorphism of `B` and a vector of
//! `B`. It is the bracket closure of the inner pairs
//! `D(x, y) = (z ↦ (x, y, z), x · y)`. Pairs are stored as vectors of length
//! `n² + n`: the entries of `Π` row by row, followed by `Z`.
//!
//! Inside `G` the ternary product is recovered as `(x, y, z) = [z, [x, y]]`
//! and the binary product as the `B`-component of `[x, y]`.

use num_traits::Zero;

use crate::algebra::BolAlgebra;
use crate::error::{BolError, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Scalar, Subspace, Vector};
use crate::report::Check;
use crate::series::is_solvable;

/// An endomorphism `pi` of `B` together with a component vector `comp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairEndo {
    pub pi: Matrix,
    pub comp: Vector,
}

impl PairEndo {
    pub fn zero(n: usize) -> Self {
        PairEndo {
            pi: Matrix::zeros(n, n),
            comp: Vector::zeros(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.comp.len()
    }

    pub fn to_vector(&self) -> Vector {
        let mut v = self.pi.entries().to_vec();
        v.extend(self.comp.coords().iter().cloned());
        Vector::from(v)
    }

    pub fn from_vector(n: usize, v: &Vector) -> PairEndo {
        let rows: Vec<Vector> = (0..n).map(|r| v.slice(r * n, r * n + n)).collect();
        PairEndo {
            pi: Matrix::from_rows(&rows, n),
            comp: v.slice(n * n, n * n + n),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.pi.is_zero() && self.comp.is_zero()
    }

    fn sub(&self, other: &PairEndo) -> PairEndo {
        PairEndo {
            pi: self.pi.sub(&other.pi),
            comp: &self.comp - &other.comp,
        }
    }
}

/// `D(x, y) = (left_op(x, y), x · y)`.
pub fn inner_pair(b: &BolAlgebra, x: &Vector, y: &Vector) -> Result<PairEndo> {
    Ok(PairEndo {
        pi: b.left_op(x, y)?,
        comp: b.binary(x, y)?,
    })
}

fn check_pair(b: &BolAlgebra, p: &PairEndo) -> Result<()> {
    let n = b.dim();
    if p.pi.rows() != n || p.pi.cols() != n || p.comp.len() != n {
        return Err(BolError::DimensionMismatch {
            expected: n,
            found: p.comp.len(),
        });
    }
    Ok(())
}

/// Bracket of pseudo-derivations: `(PQ − QP, p·q + P q − Q p)` for pairs
/// `(P, p)` and `(Q, q)`.
pub fn pair_bracket(b: &BolAlgebra, p: &PairEndo, q: &PairEndo) -> Result<PairEndo> {
    check_pair(b, p)?;
    check_pair(b, q)?;
    let comp = &(&b.binary(&p.comp, &q.comp)? + &p.pi.apply(&q.comp)) - &q.pi.apply(&p.comp);
    Ok(PairEndo {
        pi: p.pi.commutator(&q.pi),
        comp,
    })
}

/// The bracket `h` carries inside `G`:
/// `[(P, p), (Q, q)] = (QP − PQ + L(p, q), Q p − P q)`.
///
/// It equals `D(p, q)` minus [`pair_bracket`], so both brackets close on
/// the same spans containing the inner pairs.
pub fn h_bracket(b: &BolAlgebra, p: &PairEndo, q: &PairEndo) -> Result<PairEndo> {
    let bracket = pair_bracket(b, p, q)?;
    Ok(inner_pair(b, &p.comp, &q.comp)?.sub(&bracket))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoDerivationReport {
    /// `Π(x·y) = Πx·y + x·Πy + (x,y,Z) + (x·y)·Z`
    pub binary: Check,
    /// `Π(x,y,z) = (Πx,y,z) + (x,Πy,z) + (x,y,Πz)`
    pub ternary: Check,
}

impl PseudoDerivationReport {
    pub fn passed(&self) -> bool {
        self.binary.passed() && self.ternary.passed()
    }
}

pub fn is_pseudo_derivation(b: &BolAlgebra, p: &PairEndo) -> Result<PseudoDerivationReport> {
    check_pair(b, p)?;
    let n = b.dim();
    let e: Vec<Vector> = (0..n).map(|i| Vector::unit(n, i)).collect();
    let pe: Vec<Vector> = (0..n).map(|i| p.pi.column(i)).collect();
    let z = p.comp.coords();
    let mut binary = Check::new("pseudo-derivation of the binary product");
    let mut ternary = Check::new("derivation of the ternary product");
    for i in 0..n {
        for j in 0..n {
            let xy = b.mul(e[i].coords(), e[j].coords());
            let mut d = p.pi.apply(&xy);
            d = &d - &b.mul(pe[i].coords(), e[j].coords());
            d = &d - &b.mul(e[i].coords(), pe[j].coords());
            d = &d - &b.tri(e[i].coords(), e[j].coords(), z);
            d = &d - &b.mul(xy.coords(), z);
            binary.record(&[i, j], d);
            for k in 0..n {
                let xyz = Vector::from(b.ternary_basis(i, j, k).to_vec());
                let mut d = p.pi.apply(&xyz);
                d = &d - &b.tri(pe[i].coords(), e[j].coords(), e[k].coords());
                d = &d - &b.tri(e[i].coords(), pe[j].coords(), e[k].coords());
                d = &d - &b.tri(e[i].coords(), e[j].coords(), pe[k].coords());
                ternary.record(&[i, j, k], d);
            }
        }
    }
    Ok(PseudoDerivationReport { binary, ternary })
}

/// Span of the inner pairs, closed under [`pair_bracket`], as a subspace of
/// the pair space.
fn h_span(b: &BolAlgebra) -> Subspace {
    let n = b.dim();
    let ambient = n * n + n;
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = inner_pair(b, &Vector::unit(n, i), &Vector::unit(n, j)).expect("in range");
            gens.push(p.to_vector());
        }
    }
    let mut span = Subspace::span(&gens, ambient).expect("pair-space vectors");
    loop {
        let basis: Vec<PairEndo> = span
            .basis()
            .iter()
            .map(|v| PairEndo::from_vector(n, v))
            .collect();
        let mut new = Vec::new();
        for (a, p) in basis.iter().enumerate() {
            for q in &basis[a + 1..] {
                let r = pair_bracket(b, p, q).expect("same dimension").to_vector();
                if !span.reduce(&r).is_zero() {
                    new.push(r);
                }
            }
        }
        if new.is_empty() {
            return span;
        }
        new.extend(span.basis().iter().cloned());
        span = Subspace::span(&new, ambient).expect("pair-space vectors");
    }
}

/// Canonical basis of the bracket closure of the inner pairs. Every element
/// is verified to be a pseudo-derivation.
pub fn h_closure(b: &BolAlgebra) -> Result<Vec<PairEndo>> {
    let n = b.dim();
    let basis: Vec<PairEndo> = h_span(b)
        .basis()
        .iter()
        .map(|v| PairEndo::from_vector(n, v))
        .collect();
    for (t, p) in basis.iter().enumerate() {
        let r = is_pseudo_derivation(b, p)?;
        if !r.passed() {
            let failing = if r.binary.passed() {
                &r.ternary
            } else {
                &r.binary
            };
            return Err(BolError::Envelope(format!(
                "h basis element {t} is not a pseudo-derivation: {failing}"
            )));
        }
    }
    Ok(basis)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeVerification {
    pub jacobi: Check,
    /// `proj_B [x, y] = x · y`
    pub projection: Check,
    /// `[z, [x, y]] = (x, y, z)`
    pub recovery: Check,
    /// `B ∩ h = 0` in the coordinates of `G`.
    pub direct: bool,
}

impl EnvelopeVerification {
    pub fn passed(&self) -> bool {
        self.jacobi.passed() && self.projection.passed() && self.recovery.passed() && self.direct
    }
}

/// The enveloping Lie algebra with coordinates `(B | h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopingLie {
    source: BolAlgebra,
    lie: LieAlgebra,
    h_basis: Vec<PairEndo>,
    h_span: Subspace,
    dtau: Vec<Scalar>,
    k: Vec<Scalar>,
    verification: EnvelopeVerification,
}

impl EnvelopingLie {
    pub fn source(&self) -> &BolAlgebra {
        &self.source
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn b_dim(&self) -> usize {
        self.source.dim()
    }

    pub fn h_dim(&self) -> usize {
        self.h_basis.len()
    }

    pub fn h_basis(&self) -> &[PairEndo] {
        &self.h_basis
    }

    pub fn verification(&self) -> &EnvelopeVerification {
        &self.verification
    }

    /// `h`-coordinate `τ` of the inner pair `D(e_i, e_j)`.
    pub fn dtau(&self, i: usize, j: usize, tau: usize) -> &Scalar {
        let (n, big_n) = (self.b_dim(), self.h_dim());
        &self.dtau[(i * n + j) * big_n + tau]
    }

    /// `B`-coordinate `j` of `[h_τ, e_i]`.
    pub fn k(&self, tau: usize, i: usize, j: usize) -> &Scalar {
        let n = self.b_dim();
        &self.k[(tau * n + i) * n + j]
    }

    /// `h`-coordinates of a pair in the span of the `h` basis.
    pub fn h_coords(&self, p: &PairEndo) -> Option<Vec<Scalar>> {
        self.h_span.coordinates(&p.to_vector()).ok().flatten()
    }

    /// The subspace of `G` occupied by `B`.
    pub fn b_subspace(&self) -> Subspace {
        let m = self.lie.dim();
        let vs: Vec<Vector> = (0..self.b_dim()).map(|i| Vector::unit(m, i)).collect();
        Subspace::span(&vs, m).expect("unit vectors")
    }

    pub fn embed(&self, v: &Vector) -> Vector {
        v.concat(&Vector::zeros(self.h_dim()))
    }

    /// Image of a subspace of `B` in `G`.
    pub fn embed_subspace(&self, s: &Subspace) -> Subspace {
        let vs: Vec<Vector> = s.basis().iter().map(|v| self.embed(v)).collect();
        Subspace::span(&vs, self.lie.dim()).expect("embedded vectors")
    }
}

/// Builds and verifies `G = B ⊕ h`. The input must satisfy the Bol identities.
pub fn envelope(b: &BolAlgebra) -> Result<EnvelopingLie> {
    let report = b.check_axioms();
    if let Some(f) = report.first_failure() {
        return Err(BolError::NotBol(f.to_string()));
    }
    let n = b.dim();
    let h_basis = h_closure(b)?;
    let big_n = h_basis.len();
    let h_span = Subspace::span(
        &h_basis.iter().map(PairEndo::to_vector).collect::<Vec<_>>(),
        n * n + n,
    )?;
    let hc = |p: &PairEndo| -> Result<Vec<Scalar>> {
        h_span
            .coordinates(&p.to_vector())?
            .ok_or_else(|| BolError::Envelope("pair outside the closure of h".into()))
    };
    let e: Vec<Vector> = (0..n).map(|i| Vector::unit(n, i)).collect();
    let m = n + big_n;
    let labels: Vec<String> = b
        .labels()
        .iter()
        .cloned()
        .chain((0..big_n).map(|t| format!("h{t}")))
        .collect();
    let mut g = LieAlgebra::with_labels(format!("env({})", b.name()), labels);
    let mut dtau = vec![Scalar::zero(); n * n * big_n];
    let mut k_tensor = vec![Scalar::zero(); big_n * n * n];

    for i in 0..n {
        for j in 0..n {
            let xy = b.mul(e[i].coords(), e[j].coords());
            let h = hc(&inner_pair(b, &e[i], &e[j])?)?;
            for k in 0..n {
                g.set_bracket_raw(i, j, k, xy[k].clone());
            }
            for (t, c) in h.into_iter().enumerate() {
                dtau[(i * n + j) * big_n + t] = c.clone();
                g.set_bracket_raw(i, j, n + t, c);
            }
        }
    }
    for i in 0..n {
        for (t, p) in h_basis.iter().enumerate() {
            // [e_i, (A, a)] = (A e_i − e_i · a) ⊕ −D(e_i, a)
            let bpart = &p.pi.apply(&e[i]) - &b.mul(e[i].coords(), p.comp.coords());
            let hpart = hc(&inner_pair(b, &e[i], &p.comp)?)?;
            for k in 0..n {
                g.set_bracket_raw(i, n + t, k, bpart[k].clone());
                g.set_bracket_raw(n + t, i, k, -bpart[k].clone());
                k_tensor[(t * n + i) * n + k] = -bpart[k].clone();
            }
            for (s, c) in hpart.into_iter().enumerate() {
                g.set_bracket_raw(i, n + t, n + s, -c.clone());
                g.set_bracket_raw(n + t, i, n + s, c);
            }
        }
    }
    for (t, p) in h_basis.iter().enumerate() {
        for (s, q) in h_basis.iter().enumerate() {
            for (u, c) in hc(&h_bracket(b, p, q)?)?.into_iter().enumerate() {
                g.set_bracket_raw(n + t, n + s, n + u, c);
            }
        }
    }

    let jacobi = g.jacobi_check();
    let mut projection = Check::new("proj_B [x,y] = x·y");
    let mut recovery = Check::new("[z,[x,y]] = (x,y,z)");
    let ge: Vec<Vector> = (0..m).map(|i| Vector::unit(m, i)).collect();
    for i in 0..n {
        for j in 0..n {
            let br = g.br(ge[i].coords(), ge[j].coords());
            let xy = b.mul(e[i].coords(), e[j].coords());
            projection.record(&[i, j], &br.slice(0, n) - &xy);
            for (k, gk) in ge.iter().enumerate().take(n) {
                let zxy = g.br(gk.coords(), br.coords());
                let t =
                    Vector::from(b.ternary_basis(i, j, k).to_vec()).concat(&Vector::zeros(big_n));
                recovery.record(&[i, j, k], &zxy - &t);
            }
        }
    }
    let b_part: Vec<Vector> = (0..n).map(|i| ge[i].clone()).collect();
    let h_part: Vec<Vector> = (n..m).map(|i| ge[i].clone()).collect();
    let direct = Subspace::span(&b_part, m)?
        .intersect(&Subspace::span(&h_part, m)?)?
        .is_zero();
    let verification = EnvelopeVerification {
        jacobi,
        projection,
        recovery,
        direct,
    };
    for c in [
        &verification.jacobi,
        &verification.projection,
        &verification.recovery,
    ] {
        if !c.passed() {
            return Err(BolError::Envelope(c.to_string()));
        }
    }
    if !verification.direct {
        return Err(BolError::Envelope("B and h intersect".into()));
    }
    Ok(EnvelopingLie {
        source: b.clone(),
        lie: g,
        h_basis,
        h_span,
        dtau,
        k: k_tensor,
        verification,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealExtensionReport {
    /// `V + [V, B]` inside `G`.
    pub w: Subspace,
    /// Subalgebra of `G` generated by `W`.
    pub generated: Subspace,
    pub w_is_subalgebra: bool,
    pub w_is_ideal_of_generated: bool,
    pub w_is_ideal_of_g: bool,
    pub bol_solvable: bool,
    /// Derived series of the generated subalgebra reaches zero.
    pub lie_solvable: bool,
    /// Bol-solvable implies Lie-solvable.
    pub implication_holds: bool,
}

/// Extends an ideal `V` of `B` to `W = V + [V, B]` in the envelope and
/// compares solvability.
pub fn ideal_extension(env: &EnvelopingLie, v: &Subspace) -> Result<IdealExtensionReport> {
    let b = env.source();
    if !crate::ideals::is_ideal(b, v, crate::ideals::IdealMode::Absorbing)? {
        return Err(BolError::NotAnIdeal(format!(
            "{v} is not an ideal of {}",
            b.name()
        )));
    }
    let g = env.lie();
    let ve = env.embed_subspace(v);
    let w = ve.sum(&g.bracket_span(&ve, &env.b_subspace())?)?;
    let generated = g.generated_subalgebra(&w)?;
    let w_is_subalgebra = g.is_subalgebra(&w)?;
    let w_is_ideal_of_generated = g.bracket_span(&generated, &w)?.is_subspace_of(&w)?;
    let w_is_ideal_of_g = g.is_ideal(&w)?;
    let bol_solvable = is_solvable(b, v)?;
    let lie_solvable = g.derived_series_of_subalgebra(&generated).solvable;
    Ok(IdealExtensionReport {
        w,
        generated,
        w_is_subalgebra,
        w_is_ideal_of_generated,
        w_is_ideal_of_g,
        bol_solvable,
        lie_solvable,
        implication_holds: !bol_solvable || lie_solvable,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtsEmbeddingReport {
    /// `[x, y] = D(x, y)`
    pub bracket_is_inner: Check,
    /// `[x, D(y, z)] = (y, z, x)`
    pub action: Check,
    /// `[D(x, y), D(u, v)] = D((u,v,x), y) + D(x, (u,v,y))`
    pub inner_bracket: Check,
}

impl LtsEmbeddingReport {
    pub fn passed(&self) -> bool {
        self.bracket_is_inner.passed() && self.action.passed() && self.inner_bracket.passed()
    }
}

/// Checks the standard-embedding relations of a Lie triple system inside
/// its envelope.
pub fn lts_embedding_check(env: &EnvelopingLie) -> Result<LtsEmbeddingReport> {
    let b = env.source();
    if !b.has_zero_binary() {
        return Err(BolError::NonzeroBinary);
    }
    let g = env.lie();
    let (n, m) = (b.dim(), g.dim());
    let e: Vec<Vector> = (0..n).map(|i| Vector::unit(n, i)).collect();
    let ge: Vec<Vector> = (0..m).map(|i| Vector::unit(m, i)).collect();
    // D(x, y) as an element of G
    let d = |x: &Vector, y: &Vector| -> Result<Vector> {
        let h = env
            .h_coords(&inner_pair(b, x, y)?)
            .ok_or_else(|| BolError::Envelope("inner pair outside h".into()))?;
        Ok(Vector::zeros(n).concat(&Vector::from(h)))
    };
    let mut bracket_is_inner = Check::new("[x,y] = D(x,y)");
    let mut action = Check::new("[x,D(y,z)] = (y,z,x)");
    let mut inner_bracket = Check::new("[D(x,y),D(u,v)] = D((u,v,x),y) + D(x,(u,v,y))");
    for i in 0..n {
        for j in 0..n {
            let dij = d(&e[i], &e[j])?;
            bracket_is_inner.record(&[i, j], &g.br(ge[i].coords(), ge[j].coords()) - &dij);
            for k in 0..n {
                let djk = d(&e[j], &e[k])?;
                let lhs = g.br(ge[i].coords(), djk.coords());
                let rhs = env.embed(&Vector::from(b.ternary_basis(j, k, i).to_vec()));
                action.record(&[i, j, k], &lhs - &rhs);
                for l in 0..n {
                    let dkl = d(&e[k], &e[l])?;
                    let lhs = g.br(dij.coords(), dkl.coords());
                    let uvx = Vector::from(b.ternary_basis(k, l, i).to_vec());
                    let uvy = Vector::from(b.ternary_basis(k, l, j).to_vec());
                    let rhs = &d(&uvx, &e[j])? + &d(&e[i], &uvy)?;
                    inner_bracket.record(&[i, j, k, l], &lhs - &rhs);
                }
            }
        }
    }
    Ok(LtsEmbeddingReport {
        bracket_is_inner,
        action,
        inner_bracket,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvabilityTransfer {
    pub bol_solvable: bool,
    pub lie_solvable: bool,
    pub implication_holds: bool,
}

/// Compares solvability of `B` with solvability of its envelope.
pub fn solvability_transfer_check(b: &BolAlgebra) -> Result<SolvabilityTransfer> {
    let bol_solvable = is_solvable(b, &b.full())?;
    let lie_solvable = envelope(b)?.lie().lie_is_solvable();
    Ok(SolvabilityTransfer {
        bol_solvable,
        lie_solvable,
        implication_holds: !bol_solvable || lie_solvable,
    })
}
