use std::fmt::Write as _;

use cqg_core::algebra::{Kind, Letter, Presentation};
use cqg_core::arith::QMatrix;
use cqg_core::cocycle::{solve_cocycles, Cocycle};
use cqg_core::cohomology::{basis_orthogonal, basis_unitary, class_coordinates, defect, primitive, TwoCocycle};
use cqg_core::error::{Error, Result};
use cqg_core::functional::{admits_gf, default_word_pool, lk_decomposition, Functional};
use cqg_core::io::{parse_value, sniff, DocKind, JsonForm, PrimitiveDto};
use cqg_core::representation::Representation;
use cqg_core::reproduce::run_all;
use cqg_core::sampling::RunConfig;
use serde_json::{json, Value};

use crate::{CheckKind, Cli, Command};

pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, code: 0 }
    }

    fn verdict(pass: bool, text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            code: if pass { 0 } else { 1 },
        }
    }

    fn error(e: &Error) -> Self {
        let code = if e.is_input_error() { 2 } else { 1 };
        Outcome {
            text: format!("error: {e}\n"),
            json: json!({ "error": e.to_string(), "input_error": e.is_input_error() }),
            code,
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let cfg = RunConfig {
        max_word_len: cli.max_word_len,
        seed: cli.seed,
        threads: cli.threads,
    };
    cqg_core::par::with_threads(cfg.threads, || dispatch(cli, &cfg).unwrap_or_else(|e| Outcome::error(&e)))
}

fn read(path: &str) -> Result<Value> {
    let s = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(cqg_core::error::ParseError::Json(format!("{path}: {e}"))))?;
    parse_value(&s)
}

fn dispatch(cli: &Cli, cfg: &RunConfig) -> Result<Outcome> {
    match &cli.command {
        Command::Validate { input } => validate(read(input)?),
        Command::Check { what, input } => {
            let v = read(input)?;
            match what {
                CheckKind::Gf => check_gf(v),
                CheckKind::Lk => check_lk(v),
                CheckKind::Real => check_real(v),
                CheckKind::Defect => check_defect(v),
                CheckKind::H1 => check_h1(v),
                CheckKind::Psd => check_psd(v, cfg),
            }
        }
        Command::Basis { kind, d } => basis(kind, *d),
        Command::Primitive { input } => cmd_primitive(read(input)?),
        Command::ClassCoords { input } => class_coords(read(input)?),
        Command::SolveCocycles { input } => solve(read(input)?),
        Command::ReproducePaper => Ok(reproduce(cfg)),
    }
}

fn validate(v: Value) -> Result<Outcome> {
    let kind = sniff(&v)?;
    let (name, summary) = match kind {
        DocKind::Presentation => {
            let p = Presentation::from_value(v)?;
            ("presentation", format!("{p} with {} relations", p.relations().len()))
        }
        DocKind::Representation => {
            let r = Representation::from_value(v)?;
            ("representation", format!("n = {} over {}", r.n(), r.presentation()))
        }
        DocKind::Cocycle => {
            let c = Cocycle::from_value(v)?;
            ("cocycle", format!("n = {} over {}", c.n(), c.presentation()))
        }
        DocKind::Functional => {
            let f = Functional::from_value(v)?;
            ("functional", format!("over {}", f.cocycle().presentation()))
        }
        DocKind::TwoCocycle => {
            let c = TwoCocycle::from_value(v)?;
            ("two-cocycle", format!("{c} over {}", c.presentation()))
        }
    };
    Ok(Outcome::ok(
        format!("valid {name}: {summary}\n"),
        json!({ "valid": true, "kind": name, "summary": summary }),
    ))
}

/// A cocycle, taken from a functional document when one is given.
fn cocycle_of(v: Value) -> Result<Cocycle> {
    match sniff(&v)? {
        DocKind::Functional => Ok(Functional::from_value(v)?.cocycle().clone()),
        _ => Cocycle::from_value(v),
    }
}

fn check_gf(v: Value) -> Result<Outcome> {
    let eta = cocycle_of(v)?;
    let kind = eta.presentation().kind();
    let ok = admits_gf(&eta)?;
    let mut text = String::new();
    let mut report = json!({ "admits_generating_functional": ok });
    match kind {
        Kind::UPlus | Kind::OPlus => {
            let b = eta.b_matrices();
            let reason = match (kind, ok) {
                (Kind::UPlus, true) => "B̃ = Bᵗ",
                (Kind::UPlus, false) => "B̃ ≠ Bᵗ",
                (_, true) => "B symmetric",
                (_, false) => "B not symmetric",
            };
            writeln!(text, "{}, {reason}", ok).ok();
            writeln!(text, "B  = {}", b.b).ok();
            writeln!(text, "B̃ = {}", b.b_tilde).ok();
            report["B"] = b.b.to_value();
            report["B_tilde"] = b.b_tilde.to_value();
            report["reason"] = json!(reason);
        }
        _ => {
            writeln!(text, "{ok}").ok();
            if !ok {
                if let Err(Error::FunctionalRejected(bad)) = Functional::schurmann(&eta, None) {
                    writeln!(text, "Schürmann's formula fails on:").ok();
                    for x in &bad {
                        writeln!(text, "  {x}").ok();
                    }
                    report["violations"] = json!(bad.iter().map(|x| x.to_string()).collect::<Vec<_>>());
                }
            }
        }
    }
    Ok(Outcome::verdict(ok, text, report))
}

fn check_lk(v: Value) -> Result<Outcome> {
    let psi = match sniff(&v)? {
        DocKind::Functional => Functional::from_value(v)?,
        _ => Functional::schurmann(&Cocycle::from_value(v)?, None)?,
    };
    let r = lk_decomposition(&psi)?;
    let text = format!(
        "decomposable: {}\nGaussian subspace dimension: {}\nη_G admits a generating functional: {}\nη_N admits a generating functional: {}\n",
        r.decomposable, r.gaussian_dim, r.gf_exists_g, r.gf_exists_n
    );
    let report = json!({
        "decomposable": r.decomposable,
        "gaussian_dim": r.gaussian_dim,
        "gf_exists_g": r.gf_exists_g,
        "gf_exists_n": r.gf_exists_n,
        "eta_g": r.eta_g.to_value(),
        "eta_n": r.eta_n.to_value(),
    });
    Ok(Outcome::verdict(r.decomposable, text, report))
}

fn check_real(v: Value) -> Result<Outcome> {
    let eta = cocycle_of(v)?;
    let r = eta.reality(&[])?;
    let mut text = format!("real: {} ({} generator pairs)\n", r.real, r.pairs_checked);
    let mut report = json!({ "real": r.real, "pairs_checked": r.pairs_checked });
    if let Some(w) = &r.witness {
        writeln!(text, "witness: ⟨η({}), η({})⟩ = {} but ⟨η(S({})*), η(S({}*))⟩ = {}", w.a, w.b, w.lhs, w.a, w.b, w.rhs).ok();
        report["witness"] = json!({
            "a": w.a.to_string(),
            "b": w.b.to_string(),
            "lhs": w.lhs.to_value(),
            "rhs": w.rhs.to_value(),
        });
    }
    Ok(Outcome::verdict(r.real, text, report))
}

fn check_defect(v: Value) -> Result<Outcome> {
    let c = TwoCocycle::from_value(v)?;
    let m = defect(&c)?;
    let flavor = match m.flavor {
        cqg_core::cohomology::Flavor::Unitary => "trace zero",
        cqg_core::cohomology::Flavor::Orthogonal => "antisymmetric",
    };
    let text = format!("Δ = {}\n{flavor}: {}\ncoboundary: {}\n", m.entries, m.flavor_holds(), m.entries.is_zero());
    let mut report = m.to_value();
    report["coboundary"] = json!(m.entries.is_zero());
    Ok(Outcome::ok(text, report))
}

fn presentation_and_rep(v: Value) -> Result<(Presentation, Representation)> {
    match sniff(&v)? {
        DocKind::Presentation => {
            let p = Presentation::from_value(v)?;
            let r = Representation::counit(&p, 1);
            Ok((p, r))
        }
        _ => {
            let r = Representation::from_value(v)?;
            Ok((r.presentation().clone(), r))
        }
    }
}

fn check_h1(v: Value) -> Result<Outcome> {
    let (p, r) = presentation_and_rep(v)?;
    let basis = solve_cocycles(&p, &r)?;
    Ok(Outcome::ok(
        format!("dim H¹ = {} for {p}, n = {}\n", basis.len(), r.n()),
        json!({ "dimension": basis.len() }),
    ))
}

fn check_psd(v: Value, cfg: &RunConfig) -> Result<Outcome> {
    let psi = match sniff(&v)? {
        DocKind::Functional => Functional::from_value(v)?,
        _ => Functional::schurmann(&Cocycle::from_value(v)?, None)?,
    };
    let pool = default_word_pool(psi.d(), cfg.max_word_len);
    let ok = psi.gram_psd_check(&pool)?;
    Ok(Outcome::verdict(
        ok,
        format!("conditionally positive on {} words of length ≤ {}: {ok}\n", pool.len(), cfg.max_word_len),
        json!({ "psd": ok, "pool_size": pool.len(), "max_word_len": cfg.max_word_len }),
    ))
}

fn basis(kind: &str, d: usize) -> Result<Outcome> {
    let b = if kind == "u_plus" { basis_unitary(d)? } else { basis_orthogonal(d)? };
    let mut text = format!("{} basis elements\n", b.len());
    let mut items = Vec::new();
    for e in &b {
        let dm = defect(&e.cocycle)?;
        writeln!(text, "{}: Δ = {}", e.label, dm.entries).ok();
        items.push(json!({ "label": e.label, "defect": dm.entries.to_value(), "cocycle": e.cocycle.to_value() }));
    }
    Ok(Outcome::ok(text, json!({ "basis": items })))
}

fn cmd_primitive(v: Value) -> Result<Outcome> {
    let c = TwoCocycle::from_value(v)?;
    let phi = primitive(&c)?;
    let d = c.presentation().d();
    let mut text = String::from("primitive letter values:\n");
    for l in Letter::all(d) {
        writeln!(text, "  φ({l}) = {}", phi.letter(l)).ok();
    }
    let dto = PrimitiveDto::of(&phi);
    Ok(Outcome::ok(text, serde_json::to_value(dto).expect("primitive serializes")))
}

fn class_coords(v: Value) -> Result<Outcome> {
    let c = TwoCocycle::from_value(v)?;
    let cc = class_coordinates(&c)?;
    let mut text = format!("Δ = {}\n", cc.defect.entries);
    for (l, x) in cc.labels.iter().zip(cc.coords.iter()) {
        writeln!(text, "  [{l}]: {x}").ok();
    }
    let coords: Vec<Value> = cc
        .labels
        .iter()
        .zip(cc.coords.iter())
        .map(|(l, x)| json!({ "label": l, "coeff": x.to_value() }))
        .collect();
    Ok(Outcome::ok(text, json!({ "defect": cc.defect.to_value(), "coordinates": coords })))
}

fn solve(v: Value) -> Result<Outcome> {
    let (p, r) = presentation_and_rep(v)?;
    let basis = solve_cocycles(&p, &r)?;
    let mut text = format!("dimension {} over {p}, n = {}\n", basis.len(), r.n());
    for (i, eta) in basis.iter().enumerate() {
        let d = p.d();
        if r.n() == 1 {
            let v = QMatrix::from_fn(d, d, |j, k| eta.v(j, k)[0].clone());
            writeln!(text, "  η{}: V = {v}", i + 1).ok();
        } else {
            writeln!(text, "  η{}: V = {:?}", i + 1, eta.v_grid()).ok();
        }
    }
    let items: Vec<Value> = basis.iter().map(JsonForm::to_value).collect();
    Ok(Outcome::ok(text, json!({ "dimension": basis.len(), "basis": items })))
}

fn reproduce(cfg: &RunConfig) -> Outcome {
    let results = run_all(cfg);
    let all = results.iter().all(|r| r.pass);
    let width = results.iter().map(|r| r.id.len()).max().unwrap_or(0);
    let mut text = String::new();
    for r in &results {
        writeln!(text, "{} {:width$}  {}", if r.pass { "PASS" } else { "FAIL" }, r.id, r.claim).ok();
        if !r.pass {
            writeln!(text, "       expected: {}\n       computed: {}", r.expected, r.computed).ok();
        }
    }
    let passed = results.iter().filter(|r| r.pass).count();
    writeln!(text, "{passed}/{} scenarios pass", results.len()).ok();
    Outcome::verdict(all, text, json!({ "all_pass": all, "scenarios": results }))
}
