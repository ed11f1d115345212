//! Command implementations. Each command returns its output and exit code
//! instead of printing, so tests can drive them in-process.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use bol_core::axioms::AxiomReport;
use bol_core::catalog;
use bol_core::decompose::{
    decompose_semisimple, envelope_correspondence, reassembles, EnvelopeCorrespondence,
};
use bol_core::envelope::envelope;
use bol_core::forms::{compare_killing_ricci, invariance_check, BilinearForm};
use bol_core::ideals::{center, derived_space, is_ideal, prod_span};
use bol_core::invariant::SearchConfig;
use bol_core::linalg::{render_scalar, Scalar};
use bol_core::radical::{killing_ricci, radical_with, CandidateCertificate, RadicalOptions};
use bol_core::report::Check;
use bol_core::series::{bol_derived_series, lts_derived_series, SeriesResult};
use bol_core::{BolAlgebra, BolError, Matrix, Simplicity, Subspace, Vector};
use clap::Parser;
use serde_json::{json, Value};

use crate::cli::{Cli, Command};
use crate::format::{emit_bol, emit_lie_document, envelope_document, parse_bol};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn with_code(stdout: String, code: i32) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn error(message: String, code: i32) -> Self {
        Output {
            stdout: String::new(),
            stderr: message + "\n",
            code,
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Output::ok(text)
            } else {
                Output::error(text.trim_end().to_string(), code)
            }
        }
    }
}

pub fn run(cli: &Cli) -> Output {
    match &cli.command {
        Command::Check { files } => check_files(cli, files),
        Command::Info { file } => with_algebra(file, |b| info(cli, b)),
        Command::Radical { file } => with_algebra(file, |b| radical(cli, b)),
        Command::Envelope { file, emit } => {
            with_algebra(file, |b| envelope_cmd(cli, b, emit.as_deref()))
        }
        Command::Decompose { file } => with_algebra(file, |b| decompose(cli, b)),
        Command::Examples { name, emit } => examples(cli, name.as_deref(), emit.as_deref()),
    }
}

fn load(path: &Path) -> Result<BolAlgebra, Output> {
    let text = fs::read_to_string(path)
        .map_err(|e| Output::error(format!("{}: {e}", path.display()), EXIT_INPUT))?;
    parse_bol(&text).map_err(|e| Output::error(format!("{}: {e}", path.display()), EXIT_INPUT))
}

fn not_bol(b: &BolAlgebra, report: &AxiomReport) -> Output {
    let f = report.first_failure().expect("a failing identity");
    Output::error(
        format!("{} is not a Bol algebra: {f}", b.name()),
        EXIT_FAILED,
    )
}

/// Loads and verifies the algebra before handing it to `f`.
fn with_algebra(path: &Path, f: impl FnOnce(&BolAlgebra) -> Output) -> Output {
    let b = match load(path) {
        Ok(b) => b,
        Err(out) => return out,
    };
    let report = b.check_axioms();
    if !report.passed() {
        return not_bol(&b, &report);
    }
    f(&b)
}

fn core_error(e: BolError) -> Output {
    let code = match e {
        BolError::InvalidData(_)
        | BolError::UnknownCatalog(_)
        | BolError::DimensionMismatch { .. } => EXIT_INPUT,
        _ => EXIT_FAILED,
    };
    Output::error(e.to_string(), code)
}

fn search_config(cli: &Cli) -> SearchConfig {
    SearchConfig {
        seed: cli.seed,
        ..SearchConfig::default()
    }
}

fn radical_options(cli: &Cli) -> RadicalOptions {
    RadicalOptions {
        form: cli.form,
        envelope_limit: cli.envelope_limit,
    }
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn scalar_json(s: &Scalar) -> Value {
    Value::String(render_scalar(s))
}

fn vector_json(v: &Vector) -> Value {
    Value::Array(v.coords().iter().map(scalar_json).collect())
}

fn subspace_json(s: &Subspace) -> Value {
    json!({ "dim": s.dim(), "basis": s.basis().iter().map(vector_json).collect::<Vec<_>>() })
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row_slice(i).iter().map(scalar_json).collect()))
            .collect(),
    )
}

fn form_json(f: &BilinearForm) -> Value {
    json!({
        "provenance": f.provenance().to_string(),
        "gram": matrix_json(f.gram()),
        "rank": f.rank(),
        "nondegenerate": f.is_nondegenerate(),
    })
}

fn check_json(c: &Check) -> Value {
    json!({
        "name": c.name,
        "checked": c.checked,
        "failures": c.failures,
        "witness": c.witness.as_ref().map(|w| json!({ "indices": w.indices, "defect": vector_json(&w.defect) })),
    })
}

fn series_json(s: &SeriesResult) -> Value {
    json!({ "dims": s.dims(), "length": s.chain.len(), "solvable": s.solvable })
}

fn simplicity_json(s: &Simplicity) -> Value {
    match s {
        Simplicity::Simple => json!({ "outcome": "simple" }),
        Simplicity::ProperIdeal(i) => {
            json!({ "outcome": "proper-ideal", "ideal": subspace_json(i) })
        }
        Simplicity::Degenerate => json!({ "outcome": "degenerate" }),
        Simplicity::Undecided => json!({ "outcome": "undecided" }),
    }
}

fn simplicity_text(s: &Simplicity) -> String {
    match s {
        Simplicity::Simple => "simple".into(),
        Simplicity::ProperIdeal(i) => format!("proper ideal {i}"),
        Simplicity::Degenerate => "degenerate".into(),
        Simplicity::Undecided => "undecided".into(),
    }
}

fn matrix_text(out: &mut String, indent: &str, m: &Matrix) {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row_slice(i).iter().map(render_scalar).collect();
        let _ = writeln!(out, "{indent}[{}]", row.join(", "));
    }
}

// check

fn axiom_report_json(path: &Path, b: &BolAlgebra, r: &AxiomReport) -> Value {
    json!({
        "file": path.display().to_string(),
        "name": b.name(),
        "dim": b.dim(),
        "bol": r.passed(),
        "identities": r.checks.iter().map(|c| json!({
            "axiom": c.axiom.to_string(),
            "description": c.axiom.description(),
            "checked": c.checked,
            "failures": c.failures,
            "witness": c.witness.as_ref().map(|w| json!({ "indices": w.indices, "defect": vector_json(&w.defect) })),
        })).collect::<Vec<_>>(),
    })
}

fn check_one(path: &Path, as_json: bool) -> (Output, Option<Value>) {
    let b = match load(path) {
        Ok(b) => b,
        Err(out) => return (out, None),
    };
    let r = b.check_axioms();
    let code = if r.passed() { EXIT_OK } else { EXIT_FAILED };
    if as_json {
        return (
            Output::with_code(String::new(), code),
            Some(axiom_report_json(path, &b, &r)),
        );
    }
    let mut s = String::new();
    let verdict = if r.passed() {
        "Bol algebra"
    } else {
        "NOT a Bol algebra"
    };
    let _ = writeln!(
        s,
        "{}: {} (dim {}): {verdict}",
        path.display(),
        b.name(),
        b.dim()
    );
    for c in &r.checks {
        let _ = writeln!(s, "  {c}  [{}]", c.axiom.description());
    }
    (Output::with_code(s, code), None)
}

fn check_files(cli: &Cli, files: &[PathBuf]) -> Output {
    let results: Vec<(Output, Option<Value>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = files
            .iter()
            .map(|p| scope.spawn(move || check_one(p, cli.json)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread"))
            .collect()
    });
    let mut out = Output::default();
    let mut docs = Vec::new();
    for (o, doc) in results {
        out.stdout.push_str(&o.stdout);
        out.stderr.push_str(&o.stderr);
        out.code = out.code.max(o.code);
        docs.extend(doc);
    }
    if cli.json {
        let v = if files.len() == 1 && docs.len() == 1 {
            docs.pop().unwrap()
        } else {
            Value::Array(docs)
        };
        out.stdout = json_text(&v);
    }
    out
}

// info

fn info(cli: &Cli, b: &BolAlgebra) -> Output {
    match info_inner(cli, b) {
        Ok(o) => o,
        Err(e) => core_error(e),
    }
}

fn info_inner(cli: &Cli, b: &BolAlgebra) -> bol_core::Result<Output> {
    let full = b.full();
    let c = center(b);
    let lts = lts_derived_series(b, &full)?;
    let bol = bol_derived_series(b, &full)?;
    let product = prod_span(b, &full, &full)?;
    let derived = derived_space(b);
    let cmp = compare_killing_ricci(b)?;
    let invariance = invariance_check(b, &cmp.env, cli.invariance)?;
    let mode = cli.ideal_mode;
    let ideals = [
        ("center", &c, is_ideal(b, &c, mode)?),
        ("product space", &product, is_ideal(b, &product, mode)?),
        ("derived space", &derived, is_ideal(b, &derived, mode)?),
    ];
    if cli.json {
        let v = json!({
            "name": b.name(),
            "dim": b.dim(),
            "basis": b.labels(),
            "center": subspace_json(&c),
            "lts_series": series_json(&lts),
            "bol_series": series_json(&bol),
            "solvable": bol.solvable,
            "killing_ricci": {
                "trace": form_json(&cmp.trace),
                "env": form_json(&cmp.env),
                "difference": matrix_json(&cmp.difference),
                "equal": cmp.equal,
            },
            "invariance": {
                "variant": invariance.variant.to_string(),
                "binary": check_json(&invariance.binary),
                "ternary": check_json(&invariance.ternary),
                "passed": invariance.passed(),
            },
            "ideal_mode": mode.to_string(),
            "ideals": ideals.iter().map(|(name, s, ok)| json!({ "name": name, "subspace": subspace_json(s), "is_ideal": ok })).collect::<Vec<_>>(),
        });
        return Ok(Output::ok(json_text(&v)));
    }
    let mut s = String::new();
    let _ = writeln!(s, "name: {}", b.name());
    let _ = writeln!(s, "dim: {}", b.dim());
    let _ = writeln!(s, "basis: {}", b.labels().join(", "));
    let _ = writeln!(s, "center: {c} (dim {})", c.dim());
    let _ = writeln!(
        s,
        "lts series dims: {:?} (length {})",
        lts.dims(),
        lts.chain.len()
    );
    let _ = writeln!(
        s,
        "bol series dims: {:?} (length {})",
        bol.dims(),
        bol.chain.len()
    );
    let _ = writeln!(s, "solvable: {}", bol.solvable);
    for f in [&cmp.trace, &cmp.env] {
        let _ = writeln!(
            s,
            "killing-ricci form ({}), rank {} of {}:",
            f.provenance(),
            f.rank(),
            f.dim()
        );
        matrix_text(&mut s, "  ", f.gram());
    }
    let _ = writeln!(s, "forms equal: {}", cmp.equal);
    let _ = writeln!(
        s,
        "invariance of env form ({}): {}",
        invariance.variant,
        if invariance.passed() { "pass" } else { "FAIL" }
    );
    let _ = writeln!(s, "  {}", invariance.binary);
    let _ = writeln!(s, "  {}", invariance.ternary);
    for (name, sub, ok) in ideals {
        let _ = writeln!(
            s,
            "{name} {sub}: {}ideal ({mode})",
            if ok { "" } else { "not an " }
        );
    }
    Ok(Output::ok(s))
}

// radical

fn candidate_json(c: &CandidateCertificate) -> Value {
    json!({
        "strategy": c.strategy.to_string(),
        "candidate": c.candidate.as_ref().map(subspace_json),
        "is_ideal": c.is_ideal_ok,
        "solvable": c.solvable_ok,
        "quotient_semisimple": c.quotient_semisimple_ok,
        "certified": c.certified(),
        "note": c.note,
    })
}

fn candidate_text(out: &mut String, c: &CandidateCertificate) {
    let cand = c.candidate.as_ref().map_or("unavailable".to_string(), |s| {
        format!("{s} (dim {})", s.dim())
    });
    let _ = writeln!(out, "  {}: {cand}", c.strategy);
    if c.candidate.is_some() {
        let _ = writeln!(
            out,
            "    ideal {}, solvable {}, quotient semisimple {}, certified {}",
            c.is_ideal_ok,
            c.solvable_ok,
            c.quotient_semisimple_ok,
            c.certified()
        );
    }
    if let Some(n) = &c.note {
        let _ = writeln!(out, "    note: {n}");
    }
}

fn radical(cli: &Cli, b: &BolAlgebra) -> Output {
    let cert = match radical_with(b, &radical_options(cli)) {
        Ok(c) => c,
        Err(e) => return core_error(e),
    };
    let code = if cert.decided {
        EXIT_OK
    } else {
        EXIT_UNDECIDED
    };
    if cli.json {
        let v = json!({
            "name": b.name(),
            "dim": b.dim(),
            "decided": cert.decided,
            "radical": cert.radical.as_ref().map(subspace_json),
            "strategy": cert.strategy.map(|s| s.to_string()),
            "form": cert.form.to_string(),
            "is_ideal": cert.is_ideal_ok,
            "solvable": cert.solvable_ok,
            "quotient_semisimple": cert.quotient_semisimple_ok,
            "envelope_limit": cli.envelope_limit,
            "candidates": [candidate_json(&cert.form_orthogonal), candidate_json(&cert.envelope_intersection)],
        });
        return Output::with_code(json_text(&v), code);
    }
    let mut s = String::new();
    let _ = writeln!(s, "name: {}", b.name());
    match (&cert.radical, cert.strategy) {
        (Some(r), Some(st)) => {
            let _ = writeln!(s, "radical: {r} (dim {})", r.dim());
            let _ = writeln!(s, "strategy: {st}");
            let _ = writeln!(s, "certificate: ideal, solvable, quotient semisimple");
        }
        _ => {
            let _ = writeln!(s, "radical: undecided");
        }
    }
    let _ = writeln!(s, "form: {}", cert.form);
    let _ = writeln!(s, "candidates:");
    candidate_text(&mut s, &cert.form_orthogonal);
    candidate_text(&mut s, &cert.envelope_intersection);
    Output::with_code(s, code)
}

// envelope

fn correspondence_json(r: &EnvelopeCorrespondence) -> Value {
    json!({
        "solvability": {
            "lie_solvable": r.solvability.lie_solvable,
            "beta_orthogonal_to_triple_span": r.solvability.beta_orthogonal,
            "biconditional_holds": r.solvability.biconditional_holds,
        },
        "semisimplicity": {
            "lie_semisimple": r.semisimplicity.lie_semisimple,
            "lie_simplicity": simplicity_json(&r.semisimplicity.lie_simplicity),
            "beta_nondegenerate": r.semisimplicity.beta_nondegenerate,
            "biconditional_holds": r.semisimplicity.biconditional_holds,
            "simple_biconditional_holds": r.semisimplicity.simple_biconditional_holds,
        },
        "splitting": {
            "component_dims": r.splitting.component_dims,
            "decomposition_certified": r.splitting.decomposition_certified,
            "envelope_dim": r.splitting.envelope_dim,
            "component_envelope_dims": r.splitting.component_envelope_dims,
            "envelope_splits": r.splitting.envelope_splits,
            "b_equals_triple_span": r.splitting.b_equals_triple_span,
            "note": r.splitting.note,
        },
    })
}

fn correspondence_text(out: &mut String, r: &EnvelopeCorrespondence) {
    let v = &r.solvability;
    let _ = writeln!(
        out,
        "solvability: lie solvable {}, beta(B, (B,B,B)) = 0 {}, equivalence holds {}",
        v.lie_solvable, v.beta_orthogonal, v.biconditional_holds
    );
    let v = &r.semisimplicity;
    let _ = writeln!(
        out,
        "semisimplicity: lie semisimple {}, beta nondegenerate {}, equivalence holds {}",
        v.lie_semisimple, v.beta_nondegenerate, v.biconditional_holds
    );
    let _ = writeln!(
        out,
        "  lie simplicity: {}",
        simplicity_text(&v.lie_simplicity)
    );
    let v = &r.splitting;
    match &v.component_dims {
        Some(d) => {
            let _ = writeln!(
                out,
                "splitting: components {d:?} (certified {}), envelope dims {:?} of {} (splits {})",
                v.decomposition_certified,
                v.component_envelope_dims,
                v.envelope_dim,
                v.envelope_splits
            );
        }
        None => {
            let _ = writeln!(
                out,
                "splitting: not applicable ({})",
                v.note.as_deref().unwrap_or("no decomposition")
            );
        }
    }
    let _ = writeln!(out, "  B = (B,B,B): {}", v.b_equals_triple_span);
}

fn envelope_cmd(cli: &Cli, b: &BolAlgebra, emit: Option<&Path>) -> Output {
    if let Some(limit) = cli.envelope_limit {
        let n = b.dim();
        if n + n * n > limit {
            return Output::error(
                format!("envelope of a {n}-dimensional algebra may exceed the limit {limit}"),
                EXIT_UNDECIDED,
            );
        }
    }
    let env = match envelope(b) {
        Ok(e) => e,
        Err(e) => return core_error(e),
    };
    let config = search_config(cli);
    let report = match envelope_correspondence(b, &config) {
        Ok(r) => r,
        Err(e) => return core_error(e),
    };
    let g = env.lie();
    let mut s = String::new();
    if let Some(path) = emit {
        if let Err(e) = fs::write(path, emit_lie_document(&envelope_document(&env))) {
            return Output::error(format!("{}: {e}", path.display()), EXIT_INPUT);
        }
    }
    let v = env.verification();
    if cli.json {
        let doc = json!({
            "name": g.name(),
            "dim": g.dim(),
            "b_dim": env.b_dim(),
            "h_dim": env.h_dim(),
            "seed": cli.seed,
            "verification": {
                "jacobi": check_json(&v.jacobi),
                "projection": check_json(&v.projection),
                "recovery": check_json(&v.recovery),
                "direct": v.direct,
                "passed": v.passed(),
            },
            "solvable": g.lie_is_solvable(),
            "semisimple": g.lie_is_semisimple(),
            "killing": form_json(&g.killing()),
            "correspondence": correspondence_json(&report),
            "emitted": emit.map(|p| p.display().to_string()),
        });
        return Output::ok(json_text(&doc));
    }
    let _ = writeln!(
        s,
        "envelope: {} (dim {} = {} + {})",
        g.name(),
        g.dim(),
        env.b_dim(),
        env.h_dim()
    );
    let _ = writeln!(s, "seed: {}", cli.seed);
    let _ = writeln!(s, "verification:");
    for c in [&v.jacobi, &v.projection, &v.recovery] {
        let _ = writeln!(s, "  {c}");
    }
    let _ = writeln!(s, "  B and h independent: {}", v.direct);
    let _ = writeln!(s, "solvable: {}", g.lie_is_solvable());
    let _ = writeln!(s, "semisimple: {}", g.lie_is_semisimple());
    correspondence_text(&mut s, &report);
    if let Some(p) = emit {
        let _ = writeln!(s, "wrote {}", p.display());
    }
    Output::ok(s)
}

// decompose

fn decompose(cli: &Cli, b: &BolAlgebra) -> Output {
    let form = match killing_ricci(b, cli.form, &radical_options(cli)) {
        Ok(f) => f,
        Err(BolError::Precondition(m)) => return Output::error(m, EXIT_UNDECIDED),
        Err(e) => return core_error(e),
    };
    let config = search_config(cli);
    let d = match decompose_semisimple(b, &form, cli.invariance, &config) {
        Ok(d) => d,
        Err(e) => return core_error(e),
    };
    let sound = match reassembles(b, &d) {
        Ok(s) => s,
        Err(e) => return core_error(e),
    };
    let code = if d.certified && sound {
        EXIT_OK
    } else {
        EXIT_UNDECIDED
    };
    if cli.json {
        let v = json!({
            "name": b.name(),
            "dim": b.dim(),
            "form": form_json(&d.form_used),
            "invariance": d.variant.to_string(),
            "seed": cli.seed,
            "components": d.components.iter().map(|c| json!({
                "name": c.algebra.name(),
                "basis": c.algebra.labels(),
                "embedding": subspace_json(&c.embedding),
                "certified_simple": c.certified_simple,
            })).collect::<Vec<_>>(),
            "orthogonality": d.orthogonality,
            "cross_products_vanish": d.cross_products_vanish,
            "reassembles": sound,
            "certified": d.certified,
        });
        return Output::with_code(json_text(&v), code);
    }
    let mut s = String::new();
    let _ = writeln!(s, "name: {}", b.name());
    let _ = writeln!(
        s,
        "form: {} ({} invariance)",
        d.form_used.provenance(),
        d.variant
    );
    let _ = writeln!(s, "seed: {}", cli.seed);
    let _ = writeln!(s, "components: {}", d.components.len());
    for (i, c) in d.components.iter().enumerate() {
        let status = if c.certified_simple {
            "simple"
        } else {
            "uncertified"
        };
        let _ = writeln!(
            s,
            "  [{i}] dim {} {status}: {}",
            c.embedding.dim(),
            c.embedding
        );
    }
    let _ = writeln!(s, "orthogonality:");
    for row in &d.orthogonality {
        let cells: Vec<&str> = row.iter().map(|&o| if o { "1" } else { "0" }).collect();
        let _ = writeln!(s, "  [{}]", cells.join(", "));
    }
    let _ = writeln!(s, "cross products vanish: {}", d.cross_products_vanish);
    let _ = writeln!(s, "reassembles: {sound}");
    let _ = writeln!(s, "certified: {}", d.certified);
    Output::with_code(s, code)
}

// examples

fn examples(cli: &Cli, name: Option<&str>, emit: Option<&Path>) -> Output {
    let Some(name) = name else {
        if cli.json {
            return Output::ok(json_text(&json!(catalog::NAMES)));
        }
        return Output::ok(catalog::NAMES.iter().map(|n| format!("{n}\n")).collect());
    };
    let b = match catalog::by_name(name) {
        Ok(b) => b,
        Err(e) => {
            return Output::error(
                format!("{e}; available: {}", catalog::NAMES.join(", ")),
                EXIT_INPUT,
            )
        }
    };
    let text = emit_bol(&b);
    match emit {
        None => Output::ok(text),
        Some(path) => match fs::write(path, text) {
            Ok(()) => Output::ok(format!("wrote {}\n", path.display())),
            Err(e) => Output::error(format!("{}: {e}", path.display()), EXIT_INPUT),
        },
    }
}
