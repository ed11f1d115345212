//! The radical (largest solvable ideal) with certificates, semisimplicity
//! and simplicity.
//!
//! Two independent candidates are computed and each is certified on its
//! own: it must be an ideal, it must be solvable, and the same construction
//! applied to the quotient must give zero.

use std::fmt;
use std::str::FromStr;

use crate::algebra::BolAlgebra;
use crate::envelope::envelope;
use crate::error::{BolError, Result};
use crate::forms::{killing_ricci_env, killing_ricci_trace, BilinearForm};
use crate::ideals::{derived_space, is_ideal, quotient, IdealMode};
use crate::invariant::{self, SearchConfig, SearchOutcome};
use crate::linalg::{Subspace, Vector};
use crate::series::bol_derived_series;
use crate::Simplicity;

/// Which Killing–Ricci form drives the form-orthogonal strategy.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FormChoice {
    /// Killing form of the envelope restricted to `B`.
    #[default]
    Env,
    /// Symmetrized trace of ternary left multiplications.
    Trace,
}

impl FromStr for FormChoice {
    type Err = BolError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "env" => Ok(FormChoice::Env),
            "trace" => Ok(FormChoice::Trace),
            other => Err(BolError::InvalidData(format!("unknown form `{other}`"))),
        }
    }
}

impl fmt::Display for FormChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormChoice::Env => "env",
            FormChoice::Trace => "trace",
        })
    }
}

/// Computes the chosen Killing–Ricci form, honouring the envelope limit.
pub fn killing_ricci(
    b: &BolAlgebra,
    choice: FormChoice,
    opts: &RadicalOptions,
) -> Result<BilinearForm> {
    match choice {
        FormChoice::Trace => Ok(killing_ricci_trace(b)),
        FormChoice::Env => {
            opts.check_envelope_allowed(b)?;
            killing_ricci_env(b)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// `{x : β(x, y) = 0 for all y ∈ B·B + (B,B,B)}`
    FormOrthogonal,
    /// `B ∩ rad(G)` for the enveloping Lie algebra `G`.
    EnvelopeIntersection,
    /// Both candidates certified and equal.
    Agreement,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::FormOrthogonal => "form-orthogonal",
            Strategy::EnvelopeIntersection => "envelope-intersection",
            Strategy::Agreement => "agreement",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalOptions {
    pub form: FormChoice,
    /// Upper bound on `dim B + n² + n`, the size of the pair space an
    /// envelope may need. Strategies that need an envelope are skipped
    /// beyond it.
    pub envelope_limit: Option<usize>,
}

impl Default for RadicalOptions {
    fn default() -> Self {
        RadicalOptions {
            form: FormChoice::Env,
            envelope_limit: None,
        }
    }
}

impl RadicalOptions {
    fn check_envelope_allowed(&self, b: &BolAlgebra) -> Result<()> {
        let n = b.dim();
        match self.envelope_limit {
            Some(limit) if n + n * n > limit => Err(BolError::Precondition(format!(
                "envelope of a {n}-dimensional algebra may exceed the limit {limit}"
            ))),
            _ => Ok(()),
        }
    }
}

/// One strategy's candidate and the outcome of each certificate check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateCertificate {
    pub strategy: Strategy,
    /// `None` when the candidate could not be computed; see `note`.
    pub candidate: Option<Subspace>,
    pub is_ideal_ok: bool,
    pub solvable_ok: bool,
    pub quotient_semisimple_ok: bool,
    pub note: Option<String>,
}

impl CandidateCertificate {
    pub fn certified(&self) -> bool {
        self.candidate.is_some()
            && self.is_ideal_ok
            && self.solvable_ok
            && self.quotient_semisimple_ok
    }

    fn unavailable(strategy: Strategy, why: String) -> Self {
        CandidateCertificate {
            strategy,
            candidate: None,
            is_ideal_ok: false,
            solvable_ok: false,
            quotient_semisimple_ok: false,
            note: Some(why),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalCertificate {
    /// The certified radical; `None` when undecided.
    pub radical: Option<Subspace>,
    pub is_ideal_ok: bool,
    pub solvable_ok: bool,
    pub quotient_semisimple_ok: bool,
    pub strategy: Option<Strategy>,
    pub decided: bool,
    pub form: FormChoice,
    pub form_orthogonal: CandidateCertificate,
    pub envelope_intersection: CandidateCertificate,
}

fn candidate(b: &BolAlgebra, strategy: Strategy, opts: &RadicalOptions) -> Result<Subspace> {
    match strategy {
        Strategy::FormOrthogonal => {
            let form = killing_ricci(b, opts.form, opts)?;
            form.left_perp(&derived_space(b))
        }
        Strategy::EnvelopeIntersection => {
            opts.check_envelope_allowed(b)?;
            let env = envelope(b)?;
            let r = env.lie().lie_radical()?.intersect(&env.b_subspace())?;
            let n = b.dim();
            let vs: Vec<Vector> = r.basis().iter().map(|v| v.slice(0, n)).collect();
            Subspace::span(&vs, n)
        }
        Strategy::Agreement => unreachable!("agreement is not a construction"),
    }
}

fn certify(b: &BolAlgebra, strategy: Strategy, opts: &RadicalOptions) -> CandidateCertificate {
    let r = match candidate(b, strategy, opts) {
        Ok(r) => r,
        Err(e) => return CandidateCertificate::unavailable(strategy, e.to_string()),
    };
    let mut cert = CandidateCertificate {
        strategy,
        candidate: Some(r.clone()),
        is_ideal_ok: false,
        solvable_ok: false,
        quotient_semisimple_ok: false,
        note: None,
    };
    cert.is_ideal_ok = is_ideal(b, &r, IdealMode::Absorbing).unwrap_or(false);
    if !cert.is_ideal_ok {
        cert.note = Some("candidate is not an ideal".into());
        return cert;
    }
    cert.solvable_ok = bol_derived_series(b, &r)
        .map(|s| s.solvable)
        .unwrap_or(false);
    let q = match quotient(b, &r) {
        Ok(q) => q,
        Err(e) => {
            cert.note = Some(e.to_string());
            return cert;
        }
    };
    match candidate(&q, strategy, opts) {
        Ok(rq) => cert.quotient_semisimple_ok = rq.is_zero(),
        Err(e) => cert.note = Some(format!("quotient: {e}")),
    }
    if cert.note.is_none() && !cert.certified() {
        cert.note = Some(
            if !cert.solvable_ok {
                "candidate is not solvable"
            } else {
                "quotient has a nonzero candidate"
            }
            .into(),
        );
    }
    cert
}

/// Radical with the default options.
pub fn radical(b: &BolAlgebra) -> Result<RadicalCertificate> {
    radical_with(b, &RadicalOptions::default())
}

/// Computes and certifies both candidates. Two certified candidates that
/// differ are reported as [`BolError::StrategyDisagreement`].
pub fn radical_with(b: &BolAlgebra, opts: &RadicalOptions) -> Result<RadicalCertificate> {
    let s1 = certify(b, Strategy::FormOrthogonal, opts);
    let s2 = certify(b, Strategy::EnvelopeIntersection, opts);
    let chosen = match (s1.certified(), s2.certified()) {
        (true, true) => {
            if s1.candidate != s2.candidate {
                return Err(BolError::StrategyDisagreement(format!(
                    "form-orthogonal gives {}, envelope-intersection gives {}",
                    s1.candidate.as_ref().unwrap(),
                    s2.candidate.as_ref().unwrap()
                )));
            }
            Some((Strategy::Agreement, &s1))
        }
        (true, false) => Some((Strategy::FormOrthogonal, &s1)),
        (false, true) => Some((Strategy::EnvelopeIntersection, &s2)),
        (false, false) => None,
    };
    let out = match chosen {
        Some((strategy, c)) => RadicalCertificate {
            radical: c.candidate.clone(),
            is_ideal_ok: true,
            solvable_ok: true,
            quotient_semisimple_ok: true,
            strategy: Some(strategy),
            decided: true,
            form: opts.form,
            form_orthogonal: s1.clone(),
            envelope_intersection: s2.clone(),
        },
        None => RadicalCertificate {
            radical: None,
            is_ideal_ok: false,
            solvable_ok: false,
            quotient_semisimple_ok: false,
            strategy: None,
            decided: false,
            form: opts.form,
            form_orthogonal: s1,
            envelope_intersection: s2,
        },
    };
    Ok(out)
}

/// Radical decided and zero.
pub fn is_semisimple(b: &BolAlgebra) -> Result<bool> {
    let c = radical(b)?;
    Ok(c.decided && c.radical.as_ref().is_some_and(Subspace::is_zero))
}

/// Searches for a proper nonzero ideal; certifies simplicity when the
/// search proves none exists.
pub fn is_simple(b: &BolAlgebra, config: &SearchConfig) -> Simplicity {
    let n = b.dim();
    if n == 0 {
        return Simplicity::Degenerate;
    }
    match invariant::search(&b.ideal_family(), n, config) {
        SearchOutcome::Reducible(s) => Simplicity::ProperIdeal(s),
        SearchOutcome::Irreducible if b.is_abelian() => Simplicity::Degenerate,
        SearchOutcome::Irreducible => Simplicity::Simple,
        SearchOutcome::Undecided => Simplicity::Undecided,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ideals::{direct_sum, summand};

    #[test]
    fn radical_examples() {
        let a = radical(&catalog::abelian(3)).unwrap();
        assert!(a.decided && a.radical.unwrap().is_full());
        assert_eq!(a.strategy, Some(Strategy::Agreement));
        let s = radical(&catalog::sl2bol()).unwrap();
        assert!(s.decided && s.radical.unwrap().is_zero());
        let m = radical(&catalog::mixed()).unwrap();
        assert_eq!(m.radical.unwrap(), summand(3, 2, false));
        assert_eq!(m.strategy, Some(Strategy::Agreement));
    }

    #[test]
    fn envelope_limit_disables_envelope_strategy() {
        let opts = RadicalOptions {
            form: FormChoice::Trace,
            envelope_limit: Some(0),
        };
        let c = radical_with(&catalog::mixed(), &opts).unwrap();
        assert!(c.envelope_intersection.candidate.is_none());
        assert_eq!(c.strategy, Some(Strategy::FormOrthogonal));
    }

    #[test]
    fn semisimplicity_examples() {
        assert!(is_semisimple(&direct_sum(&catalog::sl2bol(), &catalog::so3bol())).unwrap());
        assert!(!is_semisimple(&catalog::mixed()).unwrap());
        assert!(!is_semisimple(&catalog::abelian(1)).unwrap());
    }

    #[test]
    fn simplicity_examples() {
        let c = SearchConfig::default();
        assert_eq!(is_simple(&catalog::sl2bol(), &c), Simplicity::Simple);
        assert_eq!(is_simple(&catalog::so3bol(), &c), Simplicity::Simple);
        match is_simple(&catalog::mixed(), &c) {
            Simplicity::ProperIdeal(s) => assert_eq!(s, summand(3, 2, true)),
            other => panic!("expected an ideal, got {other:?}"),
        }
        assert_eq!(is_simple(&catalog::abelian(1), &c), Simplicity::Degenerate);
        assert!(matches!(
            is_simple(&catalog::abelian(2), &c),
            Simplicity::ProperIdeal(_)
        ));
    }
}
