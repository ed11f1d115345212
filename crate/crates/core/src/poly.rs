//! Rational roots of rational polynomials (rational root theorem).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::Scalar;

/// Divisor enumeration is skipped for integers above this bound.
const DIVISOR_LIMIT: u64 = 1 << 32;

/// Evaluates `Σ coeffs[i] x^i`.
pub fn eval(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    coeffs
        .iter()
        .rev()
        .fold(Scalar::zero(), |acc, c| acc * x + c)
}

/// Distinct rational roots of the polynomial with coefficients `coeffs`
/// (low to high), in increasing order. Returns `None` when the constant or
/// leading coefficient is too large to enumerate divisors.
pub fn rational_roots(coeffs: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut coeffs: Vec<Scalar> = coeffs.to_vec();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Some(Vec::new());
    }
    let mut roots = Vec::new();
    let shift = coeffs.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(Scalar::zero());
        coeffs.drain(..shift);
    }
    if coeffs.len() > 1 {
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        let ps = divisors(&ints[0])?;
        let qs = divisors(ints.last().unwrap())?;
        for p in &ps {
            for q in &qs {
                for sign in [1i64, -1] {
                    let cand = Scalar::new(BigInt::from(sign) * p, q.clone());
                    if !roots.contains(&cand) && eval(&coeffs, &cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&n| n <= DIVISOR_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d != n / d {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};

    #[test]
    fn roots_of_products_of_linear_factors() {
        // (x - 1/2)(x + 3) x = x^3 + 5/2 x^2 - 3/2 x
        let c = vec![int(0), frac(-3, 2), frac(5, 2), int(1)];
        assert_eq!(
            rational_roots(&c).unwrap(),
            vec![int(-3), int(0), frac(1, 2)]
        );
    }

    #[test]
    fn irreducible_quadratic_has_none() {
        assert!(rational_roots(&[int(1), int(0), int(1)])
            .unwrap()
            .is_empty());
        assert!(rational_roots(&[int(-2), int(0), int(1)])
            .unwrap()
            .is_empty());
    }

    #[test]
    fn repeated_root_reported_once() {
        assert_eq!(
            rational_roots(&[int(4), int(-4), int(1)]).unwrap(),
            vec![int(2)]
        );
    }
}
