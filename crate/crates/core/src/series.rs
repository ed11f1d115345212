//! Derived series and solvability.

use std::fmt;

use crate::algebra::BolAlgebra;
use crate::error::{BolError, Result};
use crate::ideals::{is_ideal, prod_span, tri_span, IdealMode};
use crate::linalg::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesVariant {
    /// `V⁽ⁿ⁺¹⁾ = (V⁽ⁿ⁾, V⁽ⁿ⁾, B)`
    Lts,
    /// `W⁽ⁿ⁺¹⁾ = W⁽ⁿ⁾ · W⁽ⁿ⁾ + (W⁽ⁿ⁾, W⁽ⁿ⁾, B)`
    Bol,
    /// `L⁽ⁿ⁺¹⁾ = [L⁽ⁿ⁾, L⁽ⁿ⁾]`
    Lie,
}

impl fmt::Display for SeriesVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesVariant::Lts => "lts",
            SeriesVariant::Bol => "bol",
            SeriesVariant::Lie => "lie",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesResult {
    pub variant: SeriesVariant,
    /// Terms up to and including the first one that repeats.
    pub chain: Vec<Subspace>,
    /// Index of the last term of `chain`.
    pub stabilized_at: usize,
    pub solvable: bool,
}

impl SeriesResult {
    pub fn last(&self) -> &Subspace {
        self.chain.last().expect("chain is never empty")
    }

    pub fn dims(&self) -> Vec<usize> {
        self.chain.iter().map(Subspace::dim).collect()
    }
}

pub(crate) fn run(
    variant: SeriesVariant,
    start: Subspace,
    mut step: impl FnMut(&Subspace) -> Subspace,
) -> SeriesResult {
    let mut chain = vec![start];
    loop {
        let next = step(chain.last().unwrap());
        if &next == chain.last().unwrap() {
            break;
        }
        chain.push(next);
    }
    let solvable = chain.last().unwrap().is_zero();
    SeriesResult {
        variant,
        stabilized_at: chain.len() - 1,
        chain,
        solvable,
    }
}

fn require_ideal(b: &BolAlgebra, v: &Subspace) -> Result<()> {
    if !is_ideal(b, v, IdealMode::Absorbing)? {
        return Err(BolError::NotAnIdeal(format!(
            "{v} is not an ideal of {}",
            b.name()
        )));
    }
    Ok(())
}

pub fn lts_derived_series(b: &BolAlgebra, v: &Subspace) -> Result<SeriesResult> {
    require_ideal(b, v)?;
    let full = b.full();
    Ok(run(SeriesVariant::Lts, v.clone(), |s| {
        tri_span(b, s, s, &full).expect("same ambient")
    }))
}

pub fn bol_derived_series(b: &BolAlgebra, w: &Subspace) -> Result<SeriesResult> {
    require_ideal(b, w)?;
    Ok(bol_series_unchecked(b, w))
}

pub(crate) fn bol_series_unchecked(b: &BolAlgebra, w: &Subspace) -> SeriesResult {
    let full = b.full();
    run(SeriesVariant::Bol, w.clone(), |s| {
        let p = prod_span(b, s, s).expect("same ambient");
        let t = tri_span(b, s, s, &full).expect("same ambient");
        p.sum(&t).expect("same ambient")
    })
}

pub fn is_solvable(b: &BolAlgebra, w: &Subspace) -> Result<bool> {
    Ok(bol_derived_series(b, w)?.solvable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::Vector;

    #[test]
    fn lts_series_examples() {
        let a = catalog::abelian(3);
        let r = lts_derived_series(&a, &a.full()).unwrap();
        assert_eq!(r.dims(), vec![3, 0]);
        assert!(r.solvable);
        let s = catalog::sl2bol();
        let r = lts_derived_series(&s, &s.full()).unwrap();
        assert_eq!(r.dims(), vec![3]);
        assert!(!r.solvable);
        let h = catalog::heis3bol();
        assert_eq!(
            lts_derived_series(&h, &h.full()).unwrap().dims(),
            vec![3, 0]
        );
    }

    #[test]
    fn bol_series_examples() {
        let s = catalog::solv2();
        let r = bol_derived_series(&s, &s.full()).unwrap();
        assert_eq!(r.dims(), vec![2, 1, 0]);
        assert_eq!(r.chain[1].basis()[0], Vector::from_ints(&[1, 0]));
        assert_eq!(r.stabilized_at, 2);
        let sl = catalog::sl2bol();
        assert!(!bol_derived_series(&sl, &sl.full()).unwrap().solvable);
        let r = bol_derived_series(&sl, &Subspace::zero(3)).unwrap();
        assert_eq!(r.dims(), vec![0]);
        assert!(r.solvable);
    }

    #[test]
    fn solvability_examples() {
        let h = catalog::heis3bol();
        assert!(is_solvable(&h, &h.full()).unwrap());
        let m = catalog::mixed();
        assert!(is_solvable(&m, &crate::ideals::summand(3, 2, false)).unwrap());
        let sl = catalog::sl2bol();
        assert!(!is_solvable(&sl, &sl.full()).unwrap());
        let s = catalog::solv2();
        let bad = Subspace::span(&[Vector::from_ints(&[0, 1])], 2).unwrap();
        assert!(matches!(
            is_solvable(&s, &bad),
            Err(BolError::NotAnIdeal(_))
        ));
    }
}
