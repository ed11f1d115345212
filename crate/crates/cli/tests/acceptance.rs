//! Acceptance suite: one PASS/FAIL line per criterion.

use std::path::Path;
use std::process::Command;

use bol_cli::format::{emit_bol, parse_bol};
use bol_core::axioms::Axiom;
use bol_core::catalog;
use bol_core::decompose::{decompose_semisimple, envelope_correspondence};
use bol_core::envelope::{envelope, ideal_extension, solvability_transfer_check};
use bol_core::forms::{
    center_orthogonal_check, compare_killing_ricci, killing_ricci_env, killing_ricci_trace,
    BilinearForm, InvarianceVariant,
};
use bol_core::ideals::{center, direct_sum, ideal_closure, prod_span, summand, tri_span};
use bol_core::invariant::SearchConfig;
use bol_core::lie::LieAlgebra;
use bol_core::linalg::int;
use bol_core::radical::{radical, Strategy};
use bol_core::series::{bol_derived_series, is_solvable};
use bol_core::{BolAlgebra, Matrix, Subspace, Vector};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(n: usize, i: usize) -> Vector {
    Vector::unit(n, i)
}

/// Ideals generated by single basis vectors, the center, the whole algebra,
/// zero and the radical, with their pairwise sums.
fn some_ideals(b: &BolAlgebra) -> Vec<Subspace> {
    let n = b.dim();
    let mut base = vec![Subspace::zero(n), b.full(), center(b)];
    for i in 0..n {
        base.push(ideal_closure(b, &Subspace::span(&[e(n, i)], n).unwrap()).unwrap());
    }
    if let Some(r) = radical(b).unwrap().radical {
        base.push(r);
    }
    let mut out = base.clone();
    for u in &base {
        for v in &base {
            out.push(u.sum(v).unwrap());
        }
    }
    out.sort_by_key(|s| (s.dim(), s.pivots().to_vec()));
    out.dedup();
    out
}

fn axiom_defect(b: &BolAlgebra, axiom: Axiom, idx: &[usize]) -> Vector {
    let n = b.dim();
    let m = |p: &Vector, q: &Vector| b.binary(p, q).unwrap();
    let t = |p: &Vector, q: &Vector, r: &Vector| b.ternary(p, q, r).unwrap();
    let x: Vec<Vector> = idx.iter().map(|&i| e(n, i)).collect();
    match axiom {
        Axiom::A1 => &m(&x[0], &x[1]) + &m(&x[1], &x[0]),
        Axiom::A2 => &t(&x[0], &x[1], &x[2]) + &t(&x[1], &x[0], &x[2]),
        Axiom::A3 => &(&t(&x[0], &x[1], &x[2]) + &t(&x[1], &x[2], &x[0])) + &t(&x[2], &x[0], &x[1]),
        Axiom::A4 => {
            let (xy, zw) = (m(&x[0], &x[1]), m(&x[2], &x[3]));
            &(&(&(&m(&t(&x[0], &x[1], &x[2]), &x[3]) - &m(&t(&x[0], &x[1], &x[3]), &x[2]))
                + &t(&x[2], &x[3], &xy))
                - &t(&x[0], &x[1], &zw))
                - &m(&xy, &zw)
        }
        Axiom::A5 => {
            let (a, bb, z, w, u) = (&x[0], &x[1], &x[2], &x[3], &x[4]);
            &(&(&t(a, bb, &t(z, w, u)) - &t(&t(a, bb, z), w, u)) - &t(z, &t(a, bb, w), u))
                - &t(z, w, &t(a, bb, u))
        }
    }
}

fn criterion_1() -> Outcome {
    for b in catalog::all() {
        ensure(b.check_axioms().passed(), || {
            format!("{} fails the axioms", b.name())
        })?;
    }
    let mut failing = 0;
    for base in [catalog::sl2bol(), catalog::heis3bol()] {
        let n = base.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut m = base.clone();
                        m.set_ternary(i, j, k, l, base.ternary_coeff(i, j, k, l) + int(1));
                        let r = m.check_axioms();
                        let Some(f) = r.first_failure() else { continue };
                        let w = f.witness.as_ref().ok_or("failure without witness")?;
                        ensure(
                            !w.defect.is_zero()
                                && axiom_defect(&m, f.axiom, &w.indices) == w.defect,
                            || {
                                format!(
                                    "bad witness for {} mutation ({i},{j},{k},{l})",
                                    base.name()
                                )
                            },
                        )?;
                        failing += 1;
                    }
                    let mut m = base.clone();
                    m.set_binary(i, j, k, base.binary_coeff(i, j, k) + int(1));
                    if let Some(f) = m.check_axioms().first_failure() {
                        let w = f.witness.as_ref().ok_or("failure without witness")?;
                        ensure(axiom_defect(&m, f.axiom, &w.indices) == w.defect, || {
                            "bad binary witness".into()
                        })?;
                        failing += 1;
                    }
                }
            }
        }
    }
    ensure(failing >= 50, || format!("only {failing} mutations fail"))?;
    Ok(format!(
        "{failing} mutations rejected with verified witnesses"
    ))
}

fn criterion_2() -> Outcome {
    let mut steps = 0;
    for b in catalog::all() {
        for w in some_ideals(&b) {
            let s = bol_derived_series(&b, &w).map_err(|e| e.to_string())?;
            for pair in s.chain.windows(2) {
                let (prev, next) = (&pair[0], &pair[1]);
                let ok = next.is_subspace_of(prev).unwrap()
                    && prod_span(&b, prev, next)
                        .unwrap()
                        .is_subspace_of(next)
                        .unwrap()
                    && tri_span(&b, next, prev, prev)
                        .unwrap()
                        .is_subspace_of(next)
                        .unwrap()
                    && tri_span(&b, prev, prev, next)
                        .unwrap()
                        .is_subspace_of(next)
                        .unwrap();
                ensure(ok, || format!("{}: step {next} of {w}", b.name()))?;
                steps += 1;
            }
        }
    }
    Ok(format!("{steps} derived steps checked"))
}

fn criterion_3() -> Outcome {
    let mut pairs = 0;
    for b in catalog::all() {
        let solvable: Vec<Subspace> = some_ideals(&b)
            .into_iter()
            .filter(|s| is_solvable(&b, s).unwrap())
            .collect();
        for u in &solvable {
            for v in &solvable {
                ensure(is_solvable(&b, &u.sum(v).unwrap()).unwrap(), || {
                    format!("{}: {u} + {v}", b.name())
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs of solvable ideals"))
}

fn criterion_4() -> Outcome {
    for b in catalog::all() {
        let env = envelope(&b).map_err(|e| format!("{}: {e}", b.name()))?;
        let v = env.verification();
        ensure(v.passed(), || {
            format!("{}: {} {} {}", b.name(), v.jacobi, v.projection, v.recovery)
        })?;
    }
    let dim = |b: BolAlgebra| envelope(&b).unwrap().lie().dim();
    ensure(dim(catalog::sl2bol()) == 6, || {
        "dim env(sl2bol) != 6".into()
    })?;
    ensure(dim(catalog::solv2()) == 3, || "dim env(solv2) != 3".into())?;
    for n in 1..=4 {
        ensure(dim(catalog::abelian(n)) == n, || {
            format!("dim env(abelian{n}) != {n}")
        })?;
    }
    Ok("all envelopes verified; dims 6, 3, n".into())
}

fn criterion_5() -> Outcome {
    for b in catalog::all() {
        let r = solvability_transfer_check(&b).map_err(|e| e.to_string())?;
        ensure(r.implication_holds, || {
            format!("{}: bol solvable but envelope not", b.name())
        })?;
        let expect_solvable = !matches!(b.name(), "sl2bol" | "so3bol" | "lts_sl2" | "mixed");
        ensure(
            r.bol_solvable == expect_solvable && r.lie_solvable == expect_solvable,
            || {
                format!(
                    "{}: bol {} lie {}",
                    b.name(),
                    r.bol_solvable,
                    r.lie_solvable
                )
            },
        )?;
    }
    Ok("implication holds on every entry".into())
}

fn criterion_6() -> Outcome {
    let mixed = catalog::mixed();
    let r = ideal_extension(&envelope(&mixed).unwrap(), &summand(3, 2, false))
        .map_err(|e| e.to_string())?;
    ensure(r.bol_solvable && r.lie_solvable, || {
        format!("solv2 summand: {r:?}")
    })?;
    let sl2 = catalog::sl2bol();
    let r = ideal_extension(&envelope(&sl2).unwrap(), &sl2.full()).map_err(|e| e.to_string())?;
    ensure(!r.lie_solvable, || "extension of sl2bol is solvable".into())?;
    Ok("solv2 summand extends solvably; sl2bol does not".into())
}

fn criterion_7() -> Outcome {
    let p = Matrix::from_ints(&[&[1, 2, 0], &[0, 1, -1], &[1, 0, 1]]);
    let mut equal_elsewhere = Vec::new();
    for b in catalog::all() {
        let c = compare_killing_ricci(&b).map_err(|e| e.to_string())?;
        ensure(c.trace.is_symmetric() && c.env.is_symmetric(), || {
            format!("{}: asymmetric form", b.name())
        })?;
        if b.has_zero_binary() {
            ensure(c.equal, || {
                format!("{}: forms differ by {}", b.name(), c.difference)
            })?;
        } else if c.equal {
            equal_elsewhere.push(b.name().to_string());
        }
        if b.dim() == 3 {
            let q = b.change_basis(&p).unwrap();
            ensure(
                killing_ricci_trace(&q).gram() == killing_ricci_trace(&b).pullback(&p).gram(),
                || format!("{}: trace form not covariant", b.name()),
            )?;
            ensure(
                killing_ricci_env(&q).unwrap().gram()
                    == killing_ricci_env(&b).unwrap().pullback(&p).gram(),
                || format!("{}: envelope form not covariant", b.name()),
            )?;
        }
    }
    Ok(format!(
        "equal where binary is zero; also equal on {}",
        equal_elsewhere.join(", ")
    ))
}

fn criterion_8() -> Outcome {
    let sl2 = catalog::sl2bol();
    let r = center_orthogonal_check(&sl2, &LieAlgebra::sl2().killing(), InvarianceVariant::Skew)
        .map_err(|e| e.to_string())?;
    ensure(r.equals_product_space, || {
        "sl2bol: center orthogonals differ from B·B".into()
    })?;
    let r = center_orthogonal_check(
        &catalog::abelian(2),
        &BilinearForm::identity(2),
        InvarianceVariant::Skew,
    )
    .map_err(|e| e.to_string())?;
    ensure(r.equals_product_space, || {
        "abelian2: center orthogonals differ from B·B".into()
    })?;
    Ok("both orthogonals of the center equal B·B".into())
}

fn criterion_9() -> Outcome {
    let config = SearchConfig::default();
    let b = direct_sum(&catalog::sl2bol(), &catalog::so3bol());
    let beta = killing_ricci_env(&b).unwrap();
    let d = decompose_semisimple(&b, &beta, InvarianceVariant::Skew, &config)
        .map_err(|e| e.to_string())?;
    ensure(d.components.len() == 2 && d.certified, || {
        format!("components {:?}", d.dims())
    })?;
    ensure(
        d.orthogonality[0][1] && d.orthogonality[1][0] && d.cross_products_vanish,
        || "not orthogonal".into(),
    )?;
    for b in catalog::all() {
        let r = envelope_correspondence(&b, &config).map_err(|e| e.to_string())?;
        ensure(r.solvability.biconditional_holds, || {
            format!("{}: {:?}", b.name(), r.solvability)
        })?;
    }
    for name in ["sl2bol", "so3bol", "lts_sl2"] {
        let r = envelope_correspondence(&catalog::by_name(name).unwrap(), &config).unwrap();
        ensure(r.splitting.b_equals_triple_span, || {
            format!("{name}: B != (B,B,B)")
        })?;
    }
    Ok(
        "2 certified components; equivalence on all entries; B = (B,B,B) on semisimple entries"
            .into(),
    )
}

fn criterion_10() -> Outcome {
    let check = |b: BolAlgebra, expected: Subspace| -> Result<(), String> {
        let c = radical(&b).map_err(|e| e.to_string())?;
        ensure(c.decided && c.strategy == Some(Strategy::Agreement), || {
            format!("{}: {:?}", b.name(), c.strategy)
        })?;
        ensure(c.radical.as_ref() == Some(&expected), || {
            format!("{}: radical {:?}", b.name(), c.radical)
        })
    };
    for n in 1..=4 {
        check(catalog::abelian(n), Subspace::full(n))?;
    }
    check(catalog::sl2bol(), Subspace::zero(3))?;
    check(catalog::mixed(), summand(3, 2, false))?;
    Ok("abelian full, sl2bol zero, mixed the solv2 summand".into())
}

fn criterion_11() -> Outcome {
    let hand = Matrix::from_ints(&[&[0, 4, 0], &[4, 0, 0], &[0, 0, 8]]);
    ensure(LieAlgebra::sl2().killing().gram() == &hand, || {
        "killing(sl2) differs from the ad-trace matrix".into()
    })?;
    ensure(LieAlgebra::heis3().killing().gram().is_zero(), || {
        "killing(heis3) is nonzero".into()
    })?;
    let mut lies: Vec<LieAlgebra> = catalog::all()
        .iter()
        .map(|b| envelope(b).unwrap().lie().clone())
        .collect();
    lies.push(
        envelope(&direct_sum(&catalog::sl2bol(), &catalog::so3bol()))
            .unwrap()
            .lie()
            .clone(),
    );
    for g in &lies {
        ensure(
            g.cartan_solvability_criterion() == g.lie_is_solvable(),
            || format!("{}: criterion fails", g.name()),
        )?;
    }
    Ok(format!(
        "killing forms by hand; criterion on {} envelopes",
        lies.len()
    ))
}

fn bol(args: &[&str]) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_bol"))
        .args(args)
        .output()
        .expect("bol runs")
        .status
        .code()
        .unwrap_or(-1)
}

fn criterion_12() -> Outcome {
    let tests = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests");
    let path = |rel: &str| tests.join(rel).display().to_string();
    for name in catalog::NAMES {
        let text = std::fs::read_to_string(tests.join(format!("golden/{name}.json")))
            .map_err(|e| e.to_string())?;
        let b = parse_bol(&text).map_err(|e| format!("{name}: {e}"))?;
        ensure(emit_bol(&b) == text, || {
            format!("{name}: round trip differs")
        })?;
        ensure(emit_bol(&catalog::by_name(name).unwrap()) == text, || {
            format!("{name}: golden file stale")
        })?;
    }
    let table = [
        (vec!["check".to_string(), path("golden/sl2bol.json")], 0),
        (vec!["check".into(), path("fixtures/non_bol.json")], 1),
        (vec!["check".into(), path("fixtures/malformed.json")], 3),
        (vec!["check".into(), path("fixtures/bad_index.json")], 3),
        (vec!["radical".into(), path("golden/mixed.json")], 0),
        (
            vec![
                "radical".into(),
                path("fixtures/undecided_radical.json"),
                "--envelope-limit".into(),
                "20".into(),
            ],
            2,
        ),
        (vec!["decompose".into(), path("golden/sl2bol.json")], 0),
        (vec!["info".into(), path("fixtures/non_bol.json")], 1),
    ];
    for (args, expected) in &table {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let got = bol(&args);
        ensure(got == *expected, || {
            format!("`bol {}` exited {got}, expected {expected}", args.join(" "))
        })?;
    }
    Ok(format!(
        "{} golden files round-trip; {} exit codes as expected",
        catalog::NAMES.len(),
        table.len()
    ))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("axiom suite and mutations", criterion_1),
        ("derived steps are ideals of the previous step", criterion_2),
        ("sums of solvable ideals are solvable", criterion_3),
        ("envelope verification and dimensions", criterion_4),
        ("bol-solvable implies envelope solvable", criterion_5),
        ("ideal extension to the envelope", criterion_6),
        ("trace and envelope Killing–Ricci forms", criterion_7),
        ("orthogonals of the center", criterion_8),
        (
            "semisimple decomposition and envelope correspondence",
            criterion_9,
        ),
        ("radical certificates", criterion_10),
        ("Lie toolkit oracles", criterion_11),
        ("CLI golden files and exit codes", criterion_12),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
