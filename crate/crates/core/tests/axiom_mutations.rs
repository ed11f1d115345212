use bol_core::axioms::{Axiom, AxiomReport};
use bol_core::catalog;
use bol_core::linalg::{int, Vector};
use bol_core::BolAlgebra;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    Vector::from(
        (0..n)
            .map(|_| int(rng.gen_range(-4..=4)))
            .collect::<Vec<_>>(),
    )
}

/// Defect of each identity at arbitrary vectors, through the public
/// product API only.
fn defects(b: &BolAlgebra, x: &Vector, y: &Vector, z: &Vector, w: &Vector) -> [Vector; 5] {
    let m = |p: &Vector, q: &Vector| b.binary(p, q).unwrap();
    let t = |p: &Vector, q: &Vector, r: &Vector| b.ternary(p, q, r).unwrap();
    let a1 = &m(x, y) + &m(y, x);
    let a2 = &t(x, y, z) + &t(y, x, z);
    let a3 = &(&t(x, y, z) + &t(y, z, x)) + &t(z, x, y);
    let xy = m(x, y);
    let zw = m(z, w);
    let a4 = &(&(&(&m(&t(x, y, z), w) - &m(&t(x, y, w), z)) + &t(z, w, &xy)) - &t(x, y, &zw))
        - &m(&xy, &zw);
    let u = &(x + w) - z;
    let a5 = &(&(&t(x, y, &t(z, w, &u)) - &t(&t(x, y, z), w, &u)) - &t(z, &t(x, y, w), &u))
        - &t(z, w, &t(x, y, &u));
    [a1, a2, a3, a4, a5]
}

fn oracle_is_bol(b: &BolAlgebra, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = b.dim();
    (0..4).all(|_| {
        let v: Vec<Vector> = (0..4).map(|_| random_vector(&mut rng, n)).collect();
        defects(b, &v[0], &v[1], &v[2], &v[3])
            .iter()
            .all(Vector::is_zero)
    })
}

/// Recomputes the defect at a witness tuple of basis indices.
fn witness_defect(b: &BolAlgebra, axiom: Axiom, idx: &[usize]) -> Vector {
    let n = b.dim();
    let e = |i: usize| Vector::unit(n, i);
    let m = |p: &Vector, q: &Vector| b.binary(p, q).unwrap();
    let t = |p: &Vector, q: &Vector, r: &Vector| b.ternary(p, q, r).unwrap();
    match axiom {
        Axiom::A1 => &m(&e(idx[0]), &e(idx[1])) + &m(&e(idx[1]), &e(idx[0])),
        Axiom::A2 => {
            &t(&e(idx[0]), &e(idx[1]), &e(idx[2])) + &t(&e(idx[1]), &e(idx[0]), &e(idx[2]))
        }
        Axiom::A3 => defects(b, &e(idx[0]), &e(idx[1]), &e(idx[2]), &e(0))[2].clone(),
        Axiom::A4 => defects(b, &e(idx[0]), &e(idx[1]), &e(idx[2]), &e(idx[3]))[3].clone(),
        Axiom::A5 => {
            let (x, y, z, w, u) = (e(idx[0]), e(idx[1]), e(idx[2]), e(idx[3]), e(idx[4]));
            &(&(&t(&x, &y, &t(&z, &w, &u)) - &t(&t(&x, &y, &z), &w, &u))
                - &t(&z, &t(&x, &y, &w), &u))
                - &t(&z, &w, &t(&x, &y, &u))
        }
    }
}

fn mutations(b: &BolAlgebra) -> Vec<BolAlgebra> {
    let n = b.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut c = b.clone();
                c.set_binary(i, j, k, b.binary_coeff(i, j, k) + int(1));
                out.push(c);
                for l in 0..n {
                    let mut c = b.clone();
                    c.set_ternary(i, j, k, l, b.ternary_coeff(i, j, k, l) + int(1));
                    out.push(c);
                }
            }
        }
    }
    out
}

fn assert_witness_is_real(b: &BolAlgebra, r: &AxiomReport) {
    let f = r.first_failure().expect("a failing identity");
    let w = f.witness.as_ref().expect("failures carry a witness");
    assert!(!w.defect.is_zero());
    assert_eq!(witness_defect(b, f.axiom, &w.indices), w.defect, "{}", f);
}

#[test]
fn catalog_passes_checker_and_oracle() {
    for b in catalog::all() {
        assert!(b.check_axioms().passed(), "{}", b.name());
        assert!(oracle_is_bol(&b, 7), "{}", b.name());
    }
}

#[test]
fn single_entry_mutations_fail_with_witnesses() {
    let mut failing = 0;
    let mut total = 0;
    for base in [catalog::sl2bol(), catalog::heis3bol()] {
        for (s, m) in mutations(&base).iter().enumerate() {
            total += 1;
            let r = m.check_axioms();
            assert_eq!(
                r.passed(),
                oracle_is_bol(m, s as u64),
                "checker and oracle disagree"
            );
            if !r.passed() {
                failing += 1;
                assert_witness_is_real(m, &r);
            }
        }
    }
    assert!(failing >= 50, "{failing} of {total} mutations fail");
}
