//! Orthogonal splitting of semisimple Bol algebras into simple ideals, and
//! the solvability/semisimplicity/splitting report on the envelope.

use crate::algebra::BolAlgebra;
use crate::envelope::envelope;
use crate::error::{BolError, Result};
use crate::forms::{invariance_check, killing_ricci_env, BilinearForm, InvarianceVariant};
use crate::ideals::{center, ideal_closure, is_ideal, prod_span, restrict, tri_span, IdealMode};
use crate::invariant::SearchConfig;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::radical::is_simple;
use crate::series::bol_series_unchecked;
use crate::Simplicity;

/// `I · I + (I, I, B)`
fn first_derived(b: &BolAlgebra, i: &Subspace) -> Subspace {
    let full = b.full();
    let p = prod_span(b, i, i).expect("same ambient");
    p.sum(&tri_span(b, i, i, &full).expect("same ambient"))
        .expect("same ambient")
}

/// Looks for a nonzero ideal `I` with `I · I + (I, I, B) = 0`. Probes the
/// center, the ideals generated by single basis vectors and by center
/// vectors, and the last nonzero term of the derived series of `B`.
pub fn trivial_ideal_probe(b: &BolAlgebra) -> Option<Subspace> {
    let n = b.dim();
    let mut probes = vec![center(b)];
    for v in center(b).basis() {
        probes.push(
            ideal_closure(
                b,
                &Subspace::span(std::slice::from_ref(v), n).expect("in range"),
            )
            .expect("in range"),
        );
    }
    for i in 0..n {
        let s = Subspace::span(&[Vector::unit(n, i)], n).expect("in range");
        probes.push(ideal_closure(b, &s).expect("in range"));
    }
    let series = bol_series_unchecked(b, &b.full());
    if series.solvable && series.chain.len() >= 2 {
        probes.push(series.chain[series.chain.len() - 2].clone());
    }
    probes
        .into_iter()
        .find(|i| !i.is_zero() && first_derived(b, i).is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperIdealSearch {
    pub ideal: Option<Subspace>,
    /// No ideal found because simplicity was certified (as opposed to an
    /// inconclusive search).
    pub certified_simple: bool,
}

pub fn find_proper_ideal(b: &BolAlgebra, config: &SearchConfig) -> ProperIdealSearch {
    match is_simple(b, config) {
        Simplicity::ProperIdeal(s) => ProperIdealSearch {
            ideal: Some(s),
            certified_simple: false,
        },
        Simplicity::Simple => ProperIdealSearch {
            ideal: None,
            certified_simple: true,
        },
        Simplicity::Degenerate | Simplicity::Undecided => ProperIdealSearch {
            ideal: None,
            certified_simple: false,
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub algebra: BolAlgebra,
    /// The component as a subspace of `B`.
    pub embedding: Subspace,
    pub certified_simple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<Component>,
    pub form_used: BilinearForm,
    pub variant: InvarianceVariant,
    /// `orthogonality[i][j]`: the form vanishes on `B_i × B_j`.
    pub orthogonality: Vec<Vec<bool>>,
    /// `B_i · B_j = 0` and `(B, B_i, B_j) = 0` for all `i ≠ j`.
    pub cross_products_vanish: bool,
    pub certified: bool,
}

impl Decomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.embedding.dim()).collect()
    }
}

/// Maps coordinates relative to the canonical basis of `s` back to `B`.
fn lift(s: &Subspace, inner: &Subspace) -> Subspace {
    let vs: Vec<Vector> = inner
        .basis()
        .iter()
        .map(|c| {
            let mut v = Vector::zeros(s.ambient());
            for (coef, basis) in c.coords().iter().zip(s.basis()) {
                v.add_scaled(coef, basis.coords());
            }
            v
        })
        .collect();
    Subspace::span(&vs, s.ambient()).expect("lifted vectors")
}

fn split(
    b: &BolAlgebra,
    s: Subspace,
    form: &BilinearForm,
    config: &SearchConfig,
    out: &mut Vec<(Subspace, bool)>,
) -> Result<()> {
    let piece = restrict(b, &s)?;
    let j = match find_proper_ideal(&piece, config) {
        ProperIdealSearch {
            certified_simple: true,
            ..
        } => {
            out.push((s, true));
            return Ok(());
        }
        ProperIdealSearch { ideal: None, .. } => {
            out.push((s, false));
            return Ok(());
        }
        ProperIdealSearch { ideal: Some(j), .. } => lift(&s, &j),
    };
    let k = s.intersect(&form.right_perp(&j)?)?;
    let sound = j.dim() + k.dim() == s.dim()
        && j.intersect(&k)?.is_zero()
        && is_ideal(b, &j, IdealMode::Absorbing)?
        && is_ideal(b, &k, IdealMode::Absorbing)?;
    if !sound {
        out.push((s, false));
        return Ok(());
    }
    split(b, j, form, config, out)?;
    split(b, k, form, config, out)
}

/// Splits `B` into pairwise orthogonal simple ideals.
///
/// Requires `form` symmetric, nondegenerate and invariant in the given
/// variant, and `B` free of nonzero ideals `I` with `I·I + (I,I,B) = 0`.
/// Pieces whose simplicity cannot be decided are kept whole and the result
/// is marked uncertified.
pub fn decompose_semisimple(
    b: &BolAlgebra,
    form: &BilinearForm,
    variant: InvarianceVariant,
    config: &SearchConfig,
) -> Result<Decomposition> {
    let n = b.dim();
    if form.dim() != n {
        return Err(BolError::DimensionMismatch {
            expected: n,
            found: form.dim(),
        });
    }
    if let Some(i) = trivial_ideal_probe(b) {
        return Err(BolError::Precondition(format!(
            "ideal {i} has trivial products"
        )));
    }
    if !form.is_symmetric() {
        return Err(BolError::Precondition("form is not symmetric".into()));
    }
    if !form.is_nondegenerate() {
        return Err(BolError::Precondition(format!(
            "form is degenerate (rank {} of {n})",
            form.rank()
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

    let mut pieces = Vec::new();
    if n > 0 {
        split(b, b.full(), form, config, &mut pieces)?;
    }
    pieces.sort_by(|a, c| a.0.pivots().cmp(c.0.pivots()));

    let mut components = Vec::new();
    for (s, certified_simple) in &pieces {
        components.push(Component {
            algebra: restrict(b, s)?,
            embedding: s.clone(),
            certified_simple: *certified_simple,
        });
    }
    let k = components.len();
    let mut orthogonality = vec![vec![false; k]; k];
    let mut cross_products_vanish = true;
    let full = b.full();
    for i in 0..k {
        for j in 0..k {
            let (si, sj) = (&components[i].embedding, &components[j].embedding);
            orthogonality[i][j] = form.orthogonal(si, sj);
            if i != j {
                cross_products_vanish &=
                    prod_span(b, si, sj)?.is_zero() && tri_span(b, &full, si, sj)?.is_zero();
            }
        }
    }
    let total: usize = components.iter().map(|c| c.embedding.dim()).sum();
    let certified = total == n
        && components.iter().all(|c| c.certified_simple)
        && (0..k).all(|i| (0..k).all(|j| i == j || orthogonality[i][j]))
        && cross_products_vanish;
    Ok(Decomposition {
        components,
        form_used: form.clone(),
        variant,
        orthogonality,
        cross_products_vanish,
        certified,
    })
}

/// Re-expresses `B` in the concatenated component bases and compares the
/// tensors with the direct sum of the components.
pub fn reassembles(b: &BolAlgebra, d: &Decomposition) -> Result<bool> {
    let n = b.dim();
    let cols: Vec<Vector> = d
        .components
        .iter()
        .flat_map(|c| c.embedding.basis().iter().cloned())
        .collect();
    if cols.len() != n {
        return Ok(false);
    }
    let p = Matrix::from_columns(&cols, n);
    let rebased = b.change_basis(&p)?;
    let mut sum = BolAlgebra::zero("", 0);
    for c in &d.components {
        sum = sum.direct_sum(&c.algebra);
    }
    Ok((0..n).all(|i| {
        (0..n).all(|j| {
            rebased.binary_basis(i, j) == sum.binary_basis(i, j)
                && (0..n).all(|k| rebased.ternary_basis(i, j, k) == sum.ternary_basis(i, j, k))
        })
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvabilityItem {
    pub lie_solvable: bool,
    /// `β(B, (B, B, B)) = 0`
    pub beta_orthogonal: bool,
    pub biconditional_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimplicityItem {
    /// Killing form of the envelope is nondegenerate.
    pub lie_semisimple: bool,
    pub lie_simplicity: Simplicity,
    pub beta_nondegenerate: bool,
    /// `lie_semisimple ⟺ beta_nondegenerate`
    pub biconditional_holds: bool,
    /// Whether "envelope simple ⟺ β nondegenerate" holds; `None` when the
    /// simplicity search was inconclusive.
    pub simple_biconditional_holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingItem {
    /// `None` when the decomposition preconditions fail; see `note`.
    pub component_dims: Option<Vec<usize>>,
    pub decomposition_certified: bool,
    pub envelope_dim: usize,
    pub component_envelope_dims: Vec<usize>,
    /// The envelope dimensions of the components add up to that of `B`'s.
    pub envelope_splits: bool,
    /// `B = (B, B, B)`
    pub b_equals_triple_span: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeCorrespondence {
    pub solvability: SolvabilityItem,
    pub semisimplicity: SemisimplicityItem,
    pub splitting: SplittingItem,
}

/// Relates solvability, semisimplicity and splitting of `B` to its envelope
/// and its Killing–Ricci form `β` (the restricted envelope Killing form).
pub fn envelope_correspondence(
    b: &BolAlgebra,
    config: &SearchConfig,
) -> Result<EnvelopeCorrespondence> {
    let env = envelope(b)?;
    let beta = killing_ricci_env(b)?;
    let full = b.full();
    let triple = tri_span(b, &full, &full, &full)?;

    let lie_solvable = env.lie().lie_is_solvable();
    let beta_orthogonal = beta.orthogonal(&full, &triple);
    let solvability = SolvabilityItem {
        lie_solvable,
        beta_orthogonal,
        biconditional_holds: lie_solvable == beta_orthogonal,
    };

    let lie_semisimple = env.lie().lie_is_semisimple();
    let lie_simplicity = env.lie().simplicity(config);
    let beta_nondegenerate = beta.is_nondegenerate();
    let simple_biconditional_holds = match &lie_simplicity {
        Simplicity::Undecided => None,
        s => Some(s.is_simple() == beta_nondegenerate),
    };
    let semisimplicity = SemisimplicityItem {
        lie_semisimple,
        lie_simplicity,
        beta_nondegenerate,
        biconditional_holds: lie_semisimple == beta_nondegenerate,
        simple_biconditional_holds,
    };

    let mut splitting = SplittingItem {
        component_dims: None,
        decomposition_certified: false,
        envelope_dim: env.lie().dim(),
        component_envelope_dims: Vec::new(),
        envelope_splits: false,
        b_equals_triple_span: triple == full,
        note: None,
    };
    match decompose_semisimple(b, &beta, InvarianceVariant::Skew, config) {
        Ok(d) => {
            splitting.component_dims = Some(d.dims());
            splitting.decomposition_certified = d.certified;
            for c in &d.components {
                splitting
                    .component_envelope_dims
                    .push(envelope(&c.algebra)?.lie().dim());
            }
            splitting.envelope_splits =
                splitting.component_envelope_dims.iter().sum::<usize>() == splitting.envelope_dim;
        }
        Err(e) => splitting.note = Some(e.to_string()),
    }
    Ok(EnvelopeCorrespondence {
        solvability,
        semisimplicity,
        splitting,
    })
}
