use bol_core::catalog;
use bol_core::forms::killing_ricci_trace;
use bol_core::linalg::{int, Matrix, Subspace, Vector};
use proptest::prelude::*;

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-3i64..=3, n).prop_map(|xs| Vector::from_ints(&xs))
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(vector(n), 0..=max)
}

fn matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(vector(c), r).prop_map(move |rows| Matrix::from_rows(&rows, c))
}

fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
    vectors(n, 3).prop_map(move |vs| Subspace::span(&vs, n).unwrap())
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix(4, 5)) {
        let r = m.rref();
        prop_assert_eq!(r.rref(), r.clone());
        prop_assert_eq!(r.rank(), m.rank());
    }

    #[test]
    fn kernel_is_annihilated(m in matrix(3, 5)) {
        let k = m.kernel();
        prop_assert_eq!(k.dim() + m.rank(), 5);
        for v in k.basis() {
            prop_assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn span_contains_its_generators(vs in vectors(4, 4)) {
        let s = Subspace::span(&vs, 4).unwrap();
        for v in &vs {
            prop_assert!(s.contains(v).unwrap());
        }
        let again = Subspace::span(s.basis(), 4).unwrap();
        prop_assert_eq!(again, s);
    }

    #[test]
    fn dimension_formula(u in subspace(4), v in subspace(4)) {
        let sum = u.sum(&v).unwrap();
        let meet = u.intersect(&v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(meet.is_subspace_of(&u).unwrap() && u.is_subspace_of(&sum).unwrap());
    }

    #[test]
    fn modular_law(u in subspace(4), v in subspace(4), w in subspace(4)) {
        // u ⊆ w  ⇒  u + (v ∩ w) = (u + v) ∩ w
        let u = u.intersect(&w).unwrap();
        let lhs = u.sum(&v.intersect(&w).unwrap()).unwrap();
        let rhs = u.sum(&v).unwrap().intersect(&w).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn annihilator_is_an_involution(u in subspace(5)) {
        prop_assert_eq!(u.annihilator().annihilator(), u.clone());
        prop_assert_eq!(u.annihilator().dim() + u.dim(), 5);
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(3, 3)) {
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(3));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(3));
            }
            None => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn trace_form_is_basis_covariant(p in matrix(3, 3)) {
        prop_assume!(p.rank() == 3);
        for b in [catalog::sl2bol(), catalog::heis3bol(), catalog::lts_sl2()] {
            let c = b.change_basis(&p).unwrap();
            prop_assert_eq!(killing_ricci_trace(&c).gram().clone(), killing_ricci_trace(&b).pullback(&p).gram().clone());
        }
    }

    #[test]
    fn char_poly_is_monic_with_trace_coefficient(m in matrix(3, 3)) {
        let cp = m.char_poly();
        prop_assert_eq!(cp.len(), 4);
        // monic with the trace in the next coefficient
        prop_assert_eq!(&cp[3], &int(1));
        prop_assert_eq!(cp[2].clone(), -m.trace());
    }
}
