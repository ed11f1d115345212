//! Subsystems, ideals, center, quotients and restrictions.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::algebra::BolAlgebra;
use crate::error::{BolError, Result};
use crate::invariant;
use crate::linalg::{Matrix, Subspace, Vector};

/// Which ideal notion to test.
///
/// Absorbing: `V · B ⊆ V` and `(V, B, B) ⊆ V`. This is the notion used by every
/// algorithm in the crate. Weak: `V` is a subsystem and
/// `V · V + (V, V, B) ⊆ V`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum IdealMode {
    #[default]
    Absorbing,
    Weak,
}

impl FromStr for IdealMode {
    type Err = BolError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "absorbing" => Ok(IdealMode::Absorbing),
            "weak" => Ok(IdealMode::Weak),
            other => Err(BolError::InvalidData(format!(
                "unknown ideal mode `{other}`"
            ))),
        }
    }
}

impl fmt::Display for IdealMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealMode::Absorbing => "absorbing",
            IdealMode::Weak => "weak",
        })
    }
}

fn check(b: &BolAlgebra, s: &Subspace) -> Result<()> {
    if s.ambient() != b.dim() {
        return Err(BolError::DimensionMismatch {
            expected: b.dim(),
            found: s.ambient(),
        });
    }
    Ok(())
}

/// `span{u · v}` over basis vectors of `u` and `v`.
pub fn prod_span(b: &BolAlgebra, u: &Subspace, v: &Subspace) -> Result<Subspace> {
    check(b, u)?;
    check(b, v)?;
    let mut out = Vec::new();
    for x in u.basis() {
        for y in v.basis() {
            out.push(b.mul(x.coords(), y.coords()));
        }
    }
    Ok(Subspace::span_unchecked(out, b.dim()))
}

/// `span{(u, v, w)}` over basis vectors of the three subspaces.
pub fn tri_span(b: &BolAlgebra, u: &Subspace, v: &Subspace, w: &Subspace) -> Result<Subspace> {
    check(b, u)?;
    check(b, v)?;
    check(b, w)?;
    let mut out = Vec::new();
    for x in u.basis() {
        for y in v.basis() {
            for z in w.basis() {
                out.push(b.tri(x.coords(), y.coords(), z.coords()));
            }
        }
    }
    Ok(Subspace::span_unchecked(out, b.dim()))
}

/// `B · B + (B, B, B)`, the first term of the Bol derived series of `B`.
pub fn derived_space(b: &BolAlgebra) -> Subspace {
    let full = b.full();
    let p = prod_span(b, &full, &full).expect("same ambient");
    let t = tri_span(b, &full, &full, &full).expect("same ambient");
    p.sum(&t).expect("same ambient")
}

pub fn is_subsystem(b: &BolAlgebra, v: &Subspace) -> Result<bool> {
    Ok(prod_span(b, v, v)?.is_subspace_of(v)? && tri_span(b, v, v, v)?.is_subspace_of(v)?)
}

pub fn is_ideal(b: &BolAlgebra, v: &Subspace, mode: IdealMode) -> Result<bool> {
    check(b, v)?;
    let full = b.full();
    match mode {
        IdealMode::Absorbing => Ok(prod_span(b, v, &full)?.is_subspace_of(v)?
            && tri_span(b, v, &full, &full)?.is_subspace_of(v)?),
        IdealMode::Weak => Ok(is_subsystem(b, v)?
            && prod_span(b, v, v)?
                .sum(&tri_span(b, v, v, &full)?)?
                .is_subspace_of(v)?),
    }
}

/// Least absorbing ideal containing `s`.
pub fn ideal_closure(b: &BolAlgebra, s: &Subspace) -> Result<Subspace> {
    check(b, s)?;
    Ok(invariant::closure(&b.ideal_family(), s))
}

/// `{x : e_i · x = 0 and (e_i, e_j, x) = 0 for all i, j}`.
pub fn center(b: &BolAlgebra) -> Subspace {
    let n = b.dim();
    let mut blocks = Vec::new();
    for i in 0..n {
        let cols: Vec<Vector> = (0..n)
            .map(|c| Vector::from(b.binary_basis(i, c).to_vec()))
            .collect();
        blocks.push(Matrix::from_columns(&cols, n));
        for j in 0..n {
            let cols: Vec<Vector> = (0..n)
                .map(|c| Vector::from(b.ternary_basis(i, j, c).to_vec()))
                .collect();
            blocks.push(Matrix::from_columns(&cols, n));
        }
    }
    Matrix::vstack(&blocks, n).kernel()
}

/// Coordinates of `v` modulo `i`, relative to the complement basis given by
/// [`Subspace::complement_indices`].
pub(crate) fn coset_coords(i: &Subspace, comp: &[usize], v: &Vector) -> Vector {
    let r = i.reduce(v);
    Vector::from(comp.iter().map(|&c| r[c].clone()).collect::<Vec<_>>())
}

/// Induced algebra on `B / I`, using the standard unit vectors outside the
/// pivots of `I` as coset representatives.
pub fn quotient(b: &BolAlgebra, i: &Subspace) -> Result<BolAlgebra> {
    check(b, i)?;
    if !is_ideal(b, i, IdealMode::Absorbing)? {
        return Err(BolError::NotAnIdeal(format!(
            "{i} is not an ideal of {}",
            b.name()
        )));
    }
    let full = b.full();
    // Products with one argument in I must land in I for every slot.
    for (what, s) in [
        ("I·B", prod_span(b, i, &full)?),
        ("B·I", prod_span(b, &full, i)?),
        ("(B,I,B)", tri_span(b, &full, i, &full)?),
        ("(B,B,I)", tri_span(b, &full, &full, i)?),
    ] {
        if let Some(v) = s.basis().iter().find(|v| !i.reduce(v).is_zero()) {
            return Err(BolError::IllDefinedQuotient(format!(
                "{what} contains {v} outside the ideal"
            )));
        }
    }
    let comp = i.complement_indices();
    let n = b.dim();
    let labels = comp
        .iter()
        .map(|&c| format!("[{}]", b.labels()[c]))
        .collect();
    let mut out = BolAlgebra::with_labels(format!("{}/I", b.name()), labels);
    for (a, &ca) in comp.iter().enumerate() {
        for (bb, &cb) in comp.iter().enumerate() {
            let p = coset_coords(i, &comp, &Vector::from(b.binary_basis(ca, cb).to_vec()));
            for (k, x) in p.coords().iter().enumerate() {
                out.set_binary_raw(a, bb, k, x.clone());
            }
            for (c, &cc) in comp.iter().enumerate() {
                let t = coset_coords(
                    i,
                    &comp,
                    &Vector::from(b.ternary_basis(ca, cb, cc).to_vec()),
                );
                for (l, x) in t.coords().iter().enumerate() {
                    out.set_ternary_raw(a, bb, c, l, x.clone());
                }
            }
        }
    }
    debug_assert_eq!(out.dim(), n - i.dim());
    Ok(out)
}

/// The algebra structure on a subsystem, in its canonical basis.
pub fn restrict(b: &BolAlgebra, v: &Subspace) -> Result<BolAlgebra> {
    check(b, v)?;
    if !is_subsystem(b, v)? {
        return Err(BolError::NotASubsystem(format!(
            "{v} is not closed in {}",
            b.name()
        )));
    }
    let coords = |w: Vector| -> Result<Vec<_>> {
        v.coordinates(&w)?
            .ok_or_else(|| BolError::Inconsistency(format!("{w} escaped the subsystem")))
    };
    let labels = v
        .basis()
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let support: Vec<usize> = (0..x.len()).filter(|&c| !x[c].is_zero()).collect();
            match support.as_slice() {
                [c] => b.labels()[*c].clone(),
                _ => format!("v{k}"),
            }
        })
        .collect();
    let mut out = BolAlgebra::with_labels(format!("{}|V", b.name()), labels);
    let basis = v.basis();
    for (a, x) in basis.iter().enumerate() {
        for (bb, y) in basis.iter().enumerate() {
            for (k, c) in coords(b.mul(x.coords(), y.coords()))?
                .into_iter()
                .enumerate()
            {
                out.set_binary_raw(a, bb, k, c);
            }
            for (c, z) in basis.iter().enumerate() {
                let t = coords(b.tri(x.coords(), y.coords(), z.coords()))?;
                for (l, s) in t.into_iter().enumerate() {
                    out.set_ternary_raw(a, bb, c, l, s);
                }
            }
        }
    }
    Ok(out)
}

pub fn direct_sum(b1: &BolAlgebra, b2: &BolAlgebra) -> BolAlgebra {
    b1.direct_sum(b2)
}

/// Subspace of `B1 ⊕ B2` occupied by the first (`first = true`) or second summand.
pub fn summand(n1: usize, n2: usize, first: bool) -> Subspace {
    let range = if first { 0..n1 } else { n1..n1 + n2 };
    let vs: Vec<Vector> = range.map(|i| Vector::unit(n1 + n2, i)).collect();
    Subspace::span_unchecked(vs, n1 + n2)
}
