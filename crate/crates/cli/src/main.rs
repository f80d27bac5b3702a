use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use semiassoc::construct::{petit_algebra_left, semiassoc_check, split_certificate, SplitReport, SplitVerdict};
use semiassoc::exactfield::Field;
use semiassoc::exactla::Matrix;
use semiassoc::nalg::{
    atoms_commutative, is_division_exhaustive, primitive_idempotents, verify_isomorphism, AlgebraJson, AlgebraSC,
    Subalgebra,
};
use semiassoc::recipe::{Built, Construction, PetitData, Recipe, Side};
use semiassoc::suites::{run_suite, SuiteConfig, DEFAULT_CAP, SUITES};
use semiassoc::{with_construction, Error, Result};

/// Construct semiassociative algebras from recipes, analyse them, and run
/// verification suites.
///
/// Recipes are `kind:field:key=value:...`, for example `cyclic:F4/F2:d=w`,
/// `generalized_cyclic:M2(F4)/F2:d=w`, `menichetti:F4/F2:k=1;w`,
/// `skew_matrix:F4:n=2:lambda=w`, `petit:F4/F2:f=w;0;1` or
/// `differential:p=2:d=v`. A recipe may also be given as JSON.
#[derive(Parser)]
#[command(name = "semiassoc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Recipe in the mini-language, or a JSON object.
    #[arg(long, global = true)]
    recipe: Option<String>,
    /// File holding a JSON (or mini-language) recipe.
    #[arg(long, global = true)]
    recipe_file: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Enumeration budget for exhaustive searches.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    out: Output,
    /// Sample count for randomized suite checks.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Field `p^k` (or `q`) whose characteristic restricts the suites.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Characteristic for the suites.
    #[arg(long, global = true)]
    p: Option<u32>,
    /// Add wall-clock timings to the report (makes it run-dependent).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build the algebra and print its structure constants.
    Construct,
    /// Left, middle and right nuclei, nucleus and center.
    Nucleus,
    /// Exhaustive division test over a finite field.
    Division,
    /// Exhaustive irreducibility test of the defining skew polynomial.
    Irreducible,
    /// Semiassociativity over the recipe's étale subalgebra.
    Semiassoc,
    /// Splitting certificate.
    Split,
    /// Compare the opposite algebra with the left Petit algebra of psi(f).
    Opposite,
    /// Splitting certificate for a tensor power.
    Tensor {
        #[arg(long, default_value_t = 2)]
        power: u32,
    },
    /// Primitive idempotents and atoms of the nucleus.
    Idempotents,
    /// Run a verification suite, or `all`.
    Verify { suite: String },
}

#[derive(Serialize)]
struct Report {
    report_version: u32,
    command: String,
    inputs: Value,
    findings: Value,
    verdicts: BTreeMap<String, bool>,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings: Option<Value>,
}

struct Outcome {
    findings: Value,
    verdicts: BTreeMap<String, bool>,
}

fn outcome(findings: Value, verdicts: &[(&str, bool)]) -> Outcome {
    Outcome {
        findings,
        verdicts: verdicts.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
    }
}

fn load_recipe(cli: &Cli) -> Result<Recipe> {
    let text = match (&cli.recipe, &cli.recipe_file) {
        (Some(r), None) => r.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?,
        (Some(_), Some(_)) => return Err(Error::Parse("give --recipe or --recipe-file, not both".into())),
        (None, None) => return Err(Error::Parse("this command needs --recipe or --recipe-file".into())),
    };
    let text = text.trim();
    if text.starts_with('{') {
        Recipe::from_json(text)
    } else {
        Recipe::parse(text)
    }
}

/// The characteristic of `q`, `F<q>` or `p^k`.
fn characteristic(field: &str) -> Result<u32> {
    let s = field.trim().trim_start_matches('F');
    let bad = || Error::Parse(format!("expected a field size like 4 or 2^2, got {field:?}"));
    let q: u64 = match s.split_once('^') {
        Some((p, _)) => p.parse().map_err(|_| bad())?,
        None => s.parse().map_err(|_| bad())?,
    };
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).ok_or_else(bad)?;
    u32::try_from(p).map_err(|_| bad())
}

fn formatted<F: Field>(a: &AlgebraSC<F>, xs: &[Vec<F::Elem>]) -> Vec<String> {
    xs.iter().map(|x| a.format_elem(x)).collect()
}

fn need_etale<F: Field>(c: &Construction<F>) -> Result<&[Vec<F::Elem>]> {
    c.etale
        .as_deref()
        .ok_or_else(|| Error::Precondition("this recipe has no distinguished étale subalgebra".into()))
}

fn need_petit<F: Field>(c: &Construction<F>) -> Result<&PetitData<F>> {
    match &c.petit {
        Some(p) if p.side == Side::Right => Ok(p),
        Some(_) => Err(Error::Precondition("needs a right-division Petit algebra".into())),
        None => Err(Error::Precondition("this recipe is not a Petit algebra".into())),
    }
}

fn construct<F: Field>(c: &Construction<F>) -> Outcome {
    let a = &c.algebra;
    outcome(
        json!({
            "dim": a.dim(),
            "associative": a.is_associative(),
            "commutative": a.is_commutative(),
            "d_in_base": c.d_in_base,
            "algebra": serde_json::to_value(AlgebraJson::from_algebra(a)).expect("serializable"),
        }),
        &[],
    )
}

fn nucleus<F: Field>(c: &Construction<F>) -> Outcome {
    let a = &c.algebra;
    let right = a.nucleus_right();
    let nuc = a.nucleus();
    outcome(
        json!({
            "left_nucleus_dim": a.nucleus_left().dim(),
            "middle_nucleus_dim": a.nucleus_middle().dim(),
            "right_nucleus_dim": right.dim(),
            "nucleus_dim": nuc.dim(),
            "center_dim": a.center().dim(),
            "right_nucleus_basis": formatted(a, right.basis()),
            "nucleus_basis": formatted(a, nuc.basis()),
        }),
        &[],
    )
}

fn division<F: Field>(c: &Construction<F>, cap: u64) -> Result<Outcome> {
    let a = &c.algebra;
    let r = is_division_exhaustive(a, cap)?;
    if let Some((x, y)) = &r.witness {
        if !a.is_zero(&a.mul(x, y)) {
            return Err(Error::Validation("zero-divisor witness does not multiply to zero".into()));
        }
    }
    Ok(outcome(
        json!({
            "division": r.is_division,
            "checked": r.checked,
            "zero_divisors": r.witness.as_ref().map(|(x, y)| [a.format_elem(x), a.format_elem(y)]),
        }),
        &[("division", r.is_division)],
    ))
}

fn irreducible<F: Field>(c: &Construction<F>, cap: u64) -> Result<Outcome> {
    let p = need_petit(c)?;
    let r = p.ring.is_irreducible_exhaustive(&p.f, cap)?;
    if let Some(h) = &r.witness {
        if !p.ring.mod_r(&p.f, h)?.is_zero() {
            return Err(Error::Validation("divisor witness does not divide f".into()));
        }
    }
    let norm = match p.ring.norm_criterion(&p.f) {
        Ok(n) => Some(json!({"holds": n.holds, "characterizes_irreducibility": n.guaranteed})),
        Err(Error::Precondition(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(outcome(
        json!({
            "f": p.ring.format(&p.f),
            "irreducible": r.irreducible,
            "explored": r.explored,
            "right_divisor": r.witness.as_ref().map(|h| p.ring.format(h)),
            "norm_criterion": norm,
        }),
        &[("irreducible", r.irreducible)],
    ))
}

fn semiassoc<F: Field>(c: &Construction<F>) -> Result<Outcome> {
    let r = semiassoc_check(&c.algebra, need_etale(c)?)?;
    Ok(outcome(
        serde_json::to_value(&r).expect("serializable"),
        &[("semiassociative", r.semiassociative)],
    ))
}

fn split_outcome(r: &SplitReport, extra: Value) -> Outcome {
    let mut findings = serde_json::to_value(r).expect("serializable");
    if let (Value::Object(m), Value::Object(e)) = (&mut findings, extra) {
        m.extend(e);
    }
    let verdicts: &[(&str, bool)] = match r.verdict {
        SplitVerdict::SplitCertified => &[("split", true)],
        SplitVerdict::NotSplitCertified => &[("split", false)],
        SplitVerdict::Inconclusive => &[],
    };
    outcome(findings, verdicts)
}

fn split<F: Field>(c: &Construction<F>) -> Result<Outcome> {
    Ok(split_outcome(&split_certificate(&c.algebra, need_etale(c)?)?, json!({})))
}

fn opposite<F: Field>(c: &Construction<F>) -> Result<Outcome> {
    let p = need_petit(c)?;
    let a = &c.algebra;
    let m = p.f.degree().expect("monic of positive degree");
    let op_ring = p.ring.opposite_ring();
    let psi_f = p.ring.psi_into(&op_ring, &p.f);
    let left = petit_algebra_left(&op_ring, &psi_f)?;
    let cols: Vec<_> = (0..a.dim())
        .map(|i| op_ring.to_coords(&p.ring.psi_into(&op_ring, &p.ring.from_coords(&a.basis(i))), m))
        .collect();
    let map = Matrix::from_columns(a.field(), a.dim(), &cols)?;
    let op = a.opposite();
    let iso = verify_isomorphism(&op, &left, &map);
    Ok(outcome(
        json!({
            "psi_f": op_ring.format(&psi_f),
            "isomorphic_via_psi": iso,
            "opposite_left_nucleus_dim": op.nucleus_left().dim(),
            "opposite_middle_nucleus_dim": op.nucleus_middle().dim(),
            "opposite_right_nucleus_dim": op.nucleus_right().dim(),
        }),
        &[("isomorphic_via_psi", iso)],
    ))
}

fn kron<F: Field>(f: &F, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
    x.iter().flat_map(|a| y.iter().map(move |b| f.mul(a, b))).collect()
}

fn tensor<F: Field>(c: &Construction<F>, power: u32) -> Result<Outcome> {
    if power == 0 {
        return Err(Error::Parse("--power must be at least 1".into()));
    }
    let e = need_etale(c)?;
    let a = &c.algebra;
    let f = a.field();
    let mut alg = a.clone();
    let mut basis = e.to_vec();
    for _ in 1..power {
        basis = e.iter().flat_map(|x| basis.iter().map(move |y| kron(f, x, y))).collect();
        alg = a.tensor(&alg)?;
    }
    Ok(split_outcome(
        &split_certificate(&alg, &basis)?,
        json!({"power": power, "dim": alg.dim()}),
    ))
}

fn idempotents<F: Field>(c: &Construction<F>, cap: u64) -> Result<Outcome> {
    let a = &c.algebra;
    let nuc = a.nucleus();
    let (source, sub) = if nuc.algebra().is_commutative() {
        ("nucleus", nuc)
    } else {
        ("etale subalgebra", Subalgebra::new(a, need_etale(c)?)?)
    };
    let ids: Vec<_> = primitive_idempotents(sub.algebra(), cap)?
        .iter()
        .map(|e| sub.embed(e))
        .collect();
    let atoms = atoms_commutative(&sub, cap)?;
    Ok(outcome(
        json!({
            "source": source,
            "count": ids.len(),
            "idempotents": formatted(a, &ids),
            "atom_degrees": atoms.iter().map(|x| x.degree).collect::<Vec<_>>(),
        }),
        &[],
    ))
}

fn verify(cli: &Cli, suite: &str) -> Result<Outcome> {
    let p = match (cli.p, &cli.field) {
        (Some(p), _) => Some(p),
        (None, Some(f)) => Some(characteristic(f)?),
        (None, None) => None,
    };
    let cfg = SuiteConfig {
        seed: cli.seed,
        samples: cli.samples,
        cap: cli.cap,
        p,
    };
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut reports = Vec::new();
    let mut verdicts = BTreeMap::new();
    for name in names {
        let r = run_suite(name, &cfg)?;
        for c in &r.cases {
            verdicts.insert(format!("{name}: {}", c.name), c.pass);
        }
        reports.push(r);
    }
    Ok(Outcome {
        findings: json!({ "suites": reports }),
        verdicts,
    })
}

fn run(cli: &Cli) -> Result<Report> {
    let start = Instant::now();
    let mut inputs = json!({"seed": cli.seed, "cap": cli.cap});
    let (name, out) = if let Command::Verify { suite } = &cli.command {
        inputs["suite"] = json!(suite);
        inputs["samples"] = json!(cli.samples);
        inputs["p"] = json!(cli.p);
        inputs["field"] = json!(cli.field);
        ("verify", verify(cli, suite)?)
    } else {
        let recipe = load_recipe(cli)?;
        inputs["recipe"] = serde_json::to_value(&recipe).expect("serializable");
        inputs["recipe_text"] = json!(recipe.to_text());
        let built: Built = recipe.build()?;
        let cap = cli.cap;
        match &cli.command {
            Command::Construct => ("construct", with_construction!(&built, c => construct(c))),
            Command::Nucleus => ("nucleus", with_construction!(&built, c => nucleus(c))),
            Command::Division => ("division", with_construction!(&built, c => division(c, cap)?)),
            Command::Irreducible => ("irreducible", with_construction!(&built, c => irreducible(c, cap)?)),
            Command::Semiassoc => ("semiassoc", with_construction!(&built, c => semiassoc(c)?)),
            Command::Split => ("split", with_construction!(&built, c => split(c)?)),
            Command::Opposite => ("opposite", with_construction!(&built, c => opposite(c)?)),
            Command::Tensor { power } => {
                inputs["power"] = json!(power);
                ("tensor", with_construction!(&built, c => tensor(c, *power)?))
            }
            Command::Idempotents => ("idempotents", with_construction!(&built, c => idempotents(c, cap)?)),
            Command::Verify { .. } => unreachable!("handled above"),
        }
    };
    Ok(Report {
        report_version: 1,
        command: name.to_string(),
        inputs,
        findings: out.findings,
        verdicts: out.verdicts,
        seed: cli.seed,
        timings: cli
            .timings
            .then(|| json!({"total_ms": start.elapsed().as_secs_f64() * 1000.0})),
    })
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn print_text(r: &Report) {
    println!("command: {}", r.command);
    if let Some(text) = r.inputs.get("recipe_text") {
        println!("recipe: {}", text_value(text));
    }
    match r.findings.get("suites").and_then(Value::as_array) {
        Some(suites) => {
            for s in suites {
                println!("suite {}", text_value(&s["suite"]));
                for c in s["cases"].as_array().into_iter().flatten() {
                    let mark = if c["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
                    println!("  {mark} {}: {}", text_value(&c["name"]), text_value(&c["detail"]));
                }
            }
        }
        None => {
            if let Value::Object(m) = &r.findings {
                for (k, v) in m {
                    println!("{k}: {}", text_value(v));
                }
            }
            for (k, v) in &r.verdicts {
                println!("verdict {k}: {v}");
            }
        }
    }
    let failed = r.verdicts.values().filter(|v| !**v).count();
    if r.command == "verify" {
        println!("{} checks, {failed} failed", r.verdicts.len());
    }
    if let Some(t) = &r.timings {
        println!("timings: {t}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.out {
                Output::Text => print_text(&report),
                Output::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"))
                }
            }
            if report.verdicts.values().all(|v| *v) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
