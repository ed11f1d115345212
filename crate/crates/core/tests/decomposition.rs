use bol_core::catalog;
use bol_core::decompose::{decompose_semisimple, envelope_correspondence, reassembles};
use bol_core::forms::{killing_ricci_env, InvarianceVariant};
use bol_core::ideals::{direct_sum, prod_span, tri_span};
use bol_core::invariant::SearchConfig;
use bol_core::BolError;

#[test]
fn sum_of_simple_algebras_splits_into_two() {
    let b = direct_sum(&catalog::sl2bol(), &catalog::so3bol());
    let beta = killing_ricci_env(&b).unwrap();
    let d =
        decompose_semisimple(&b, &beta, InvarianceVariant::Skew, &SearchConfig::default()).unwrap();
    assert_eq!(d.components.len(), 2);
    assert!(d.certified && d.components.iter().all(|c| c.certified_simple));
    assert!(d.orthogonality[0][1] && d.orthogonality[1][0]);
    let (u, v) = (&d.components[0].embedding, &d.components[1].embedding);
    assert!(prod_span(&b, u, v).unwrap().is_zero());
    assert!(tri_span(&b, &b.full(), u, v).unwrap().is_zero());
    assert!(tri_span(&b, &b.full(), v, u).unwrap().is_zero());
    assert!(reassembles(&b, &d).unwrap());
}

#[test]
fn three_summands() {
    let b = direct_sum(
        &direct_sum(&catalog::sl2bol(), &catalog::lts_sl2()),
        &catalog::so3bol(),
    );
    let beta = killing_ricci_env(&b).unwrap();
    let d =
        decompose_semisimple(&b, &beta, InvarianceVariant::Skew, &SearchConfig::default()).unwrap();
    assert_eq!(d.dims(), vec![3, 3, 3]);
    assert!(d.certified);
    assert!(reassembles(&b, &d).unwrap());
}

#[test]
fn degenerate_form_is_a_precondition_failure() {
    let b = catalog::mixed();
    let beta = killing_ricci_env(&b).unwrap();
    let r = decompose_semisimple(&b, &beta, InvarianceVariant::Skew, &SearchConfig::default());
    assert!(matches!(r, Err(BolError::Precondition(_))));
}

#[test]
fn solvability_biconditional_on_catalog() {
    let config = SearchConfig::default();
    for b in catalog::all() {
        let r = envelope_correspondence(&b, &config).unwrap();
        assert!(
            r.solvability.biconditional_holds,
            "{}: {:?}",
            b.name(),
            r.solvability
        );
        assert!(
            r.semisimplicity.biconditional_holds,
            "{}: {:?}",
            b.name(),
            r.semisimplicity
        );
    }
}

#[test]
fn semisimple_entries_equal_their_triple_span() {
    let config = SearchConfig::default();
    for name in ["sl2bol", "so3bol", "lts_sl2"] {
        let r = envelope_correspondence(&catalog::by_name(name).unwrap(), &config).unwrap();
        assert!(r.splitting.b_equals_triple_span, "{name}");
        assert_eq!(
            r.splitting.component_dims,
            Some(vec![3]),
            "{name}: {:?}",
            r.splitting.note
        );
        assert!(r.splitting.envelope_splits);
    }
}
