use bol_core::catalog;
use bol_core::envelope::{
    envelope, ideal_extension, lts_embedding_check, solvability_transfer_check,
};
use bol_core::forms::{
    center_orthogonal_check, compare_killing_ricci, invariance_check, killing_ricci_env,
    killing_ricci_trace, BilinearForm, InvarianceVariant,
};
use bol_core::ideals::summand;
use bol_core::lie::LieAlgebra;
use bol_core::{Matrix, Vector};

#[test]
fn envelopes_satisfy_their_defining_relations() {
    for b in catalog::all() {
        let env = envelope(&b).unwrap();
        let v = env.verification();
        assert!(
            v.passed(),
            "{}: {} / {} / {}",
            b.name(),
            v.jacobi,
            v.projection,
            v.recovery
        );
        // recompute the relations through the public bracket
        let (n, g) = (b.dim(), env.lie());
        let e = |i: usize| Vector::unit(n, i);
        for i in 0..n {
            for j in 0..n {
                let xy = g.bracket(&env.embed(&e(i)), &env.embed(&e(j))).unwrap();
                assert_eq!(xy.slice(0, n), b.binary(&e(i), &e(j)).unwrap());
                for k in 0..n {
                    let lhs = g.bracket(&env.embed(&e(k)), &xy).unwrap();
                    assert_eq!(lhs, env.embed(&b.ternary(&e(i), &e(j), &e(k)).unwrap()));
                }
            }
        }
        assert!(g.jacobi_check().passed());
    }
}

#[test]
fn envelope_dimensions() {
    assert_eq!(envelope(&catalog::sl2bol()).unwrap().lie().dim(), 6);
    assert_eq!(envelope(&catalog::solv2()).unwrap().lie().dim(), 3);
    for n in 1..=4 {
        assert_eq!(envelope(&catalog::abelian(n)).unwrap().lie().dim(), n);
    }
}

#[test]
fn bol_solvable_implies_lie_solvable() {
    for b in catalog::all() {
        let r = solvability_transfer_check(&b).unwrap();
        assert!(r.implication_holds, "{}", b.name());
    }
    for name in ["solv2", "heis3bol", "abelian1", "abelian4"] {
        let r = solvability_transfer_check(&catalog::by_name(name).unwrap()).unwrap();
        assert!(r.bol_solvable && r.lie_solvable, "{name}");
    }
    for name in ["sl2bol", "so3bol", "lts_sl2"] {
        let r = solvability_transfer_check(&catalog::by_name(name).unwrap()).unwrap();
        assert!(!r.bol_solvable && !r.lie_solvable, "{name}");
    }
}

#[test]
fn ideal_extension_examples() {
    let mixed = catalog::mixed();
    let env = envelope(&mixed).unwrap();
    let r = ideal_extension(&env, &summand(3, 2, false)).unwrap();
    assert!(r.bol_solvable && r.lie_solvable && r.w_is_subalgebra);
    let sl2 = catalog::sl2bol();
    let env = envelope(&sl2).unwrap();
    let r = ideal_extension(&env, &sl2.full()).unwrap();
    assert!(!r.lie_solvable && !r.bol_solvable);
}

#[test]
fn lts_embedding() {
    let env = envelope(&catalog::lts_sl2()).unwrap();
    assert!(lts_embedding_check(&env).unwrap().passed());
}

#[test]
fn killing_ricci_forms_agree_without_binary_product() {
    for b in catalog::all() {
        let c = compare_killing_ricci(&b).unwrap();
        assert!(
            c.trace.is_symmetric() && c.env.is_symmetric(),
            "{}",
            b.name()
        );
        if b.has_zero_binary() {
            assert!(c.equal, "{}: {}", b.name(), c.difference);
        }
    }
}

fn covariance_basis() -> Matrix {
    Matrix::from_ints(&[&[1, 2, 0], &[0, 1, -1], &[1, 0, 1]])
}

#[test]
fn killing_ricci_forms_are_basis_covariant() {
    let p = covariance_basis();
    for b in [
        catalog::sl2bol(),
        catalog::so3bol(),
        catalog::lts_sl2(),
        catalog::heis3bol(),
    ] {
        let c = b.change_basis(&p).unwrap();
        assert_eq!(
            killing_ricci_trace(&c).gram(),
            killing_ricci_trace(&b).pullback(&p).gram()
        );
        assert_eq!(
            killing_ricci_env(&c).unwrap().gram(),
            killing_ricci_env(&b).unwrap().pullback(&p).gram(),
            "{}",
            b.name()
        );
    }
}

#[test]
fn sl2_killing_form_by_hand() {
    // basis e, f, h: ad-traces give κ(e,f) = 4, κ(h,h) = 8
    let hand = Matrix::from_ints(&[&[0, 4, 0], &[4, 0, 0], &[0, 0, 8]]);
    assert_eq!(LieAlgebra::sl2().killing().gram(), &hand);
    assert!(LieAlgebra::heis3().killing().gram().is_zero());
}

#[test]
fn cartan_criterion_on_envelopes() {
    for b in catalog::all() {
        let g = envelope(&b).unwrap();
        let g = g.lie();
        assert_eq!(
            g.cartan_solvability_criterion(),
            g.lie_is_solvable(),
            "{}",
            b.name()
        );
    }
}

#[test]
fn center_orthogonals() {
    let sl2 = catalog::sl2bol();
    let kappa = LieAlgebra::sl2().killing();
    assert!(invariance_check(&sl2, &kappa, InvarianceVariant::Skew)
        .unwrap()
        .passed());
    let r = center_orthogonal_check(&sl2, &kappa, InvarianceVariant::Skew).unwrap();
    assert!(r.equals_product_space && r.left_perp.is_full());
    let a2 = catalog::abelian(2);
    let r =
        center_orthogonal_check(&a2, &BilinearForm::identity(2), InvarianceVariant::Skew).unwrap();
    assert!(r.equals_product_space && r.left_perp.is_zero() && r.right_perp.is_zero());
}
