//! Named verification suites. Each suite runs a fixed family of exact
//! checks and reports one line per case; case order is fixed, whatever
//! order worker threads finish in.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::construct::{
    cyclic_algebra, cyclic_ring, matrix_units_from_idempotents, menichetti_matrix_product, petit_algebra,
    petit_algebra_left, semiassoc_check, skew_matrix_algebra, split_certificate, tensor_csa_cyclic, SkewSet,
    SplitVerdict,
};
use crate::differential::{Derivation, DiffField};
use crate::error::{Error, Result};
use crate::etale::{make_cyclic_ext, make_split_etale, GaloisCnAlgebra};
use crate::exactfield::{Field, GaloisField, RatFun};
use crate::exactla::{span_rank, Matrix};
use crate::nalg::{
    find_isomorphism_exhaustive, is_division_exhaustive, matrix_algebra, primitive_idempotents, verify_isomorphism,
    AlgebraSC,
};
use crate::recipe::{Construction, Recipe, Side};
use crate::with_construction;

pub const DEFAULT_CAP: u64 = 10_000_000;

/// Suite names in the order `all` runs them.
pub const SUITES: [&str; 11] = [
    "nucleus-theorem",
    "opposite",
    "division-criteria",
    "split-quaternion",
    "semiassoc-all",
    "tensor-csa",
    "infinite-order",
    "menichetti",
    "differential",
    "associativity",
    "eigenspace",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides the per-suite sample count.
    pub samples: Option<usize>,
    pub cap: u64,
    /// Restricts characteristic-dependent suites to one prime.
    pub p: Option<u32>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            samples: None,
            cap: DEFAULT_CAP,
            p: None,
        }
    }
}

impl SuiteConfig {
    fn primes(&self, default: &[u32]) -> Vec<u32> {
        self.p.map_or_else(|| default.to_vec(), |p| vec![p])
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn case(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> CaseResult {
    CaseResult {
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.pass).count()
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let cases = match name {
        "nucleus-theorem" => nucleus_theorem(cfg)?,
        "opposite" => opposite()?,
        "division-criteria" => division_criteria(cfg)?,
        "split-quaternion" => split_quaternion(cfg)?,
        "semiassoc-all" => semiassoc_all()?,
        "tensor-csa" => tensor_csa()?,
        "infinite-order" => infinite_order()?,
        "menichetti" => menichetti_suite(cfg)?,
        "differential" => differential_suite(cfg)?,
        "associativity" => associativity()?,
        "eigenspace" => eigenspace()?,
        _ => {
            return Err(Error::Parse(format!(
                "unknown suite {name:?}; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        cases,
    })
}

/// Recipes shared by the structural suites: cyclic algebras over fields and
/// split algebras, generalized cyclic over `M_2(F_4)`, Menichetti with
/// `m ∈ {2, 3}`, skew matrix algebras, and differential extensions.
pub const CONSTRUCTIONS: &[&str] = &[
    "cyclic:F4/F2:d=w",
    "cyclic:F4/F2:d=1",
    "cyclic:F8/F2:d=w",
    "cyclic:F8/F2:d=1",
    "cyclic:F16/F2:d=w^5",
    "cyclic:F16/F2:d=w",
    "cyclic:F9/F3:d=w",
    "cyclic:F9/F3:d=2",
    "cyclic:F27/F3:d=w",
    "cyclic:F3^2/F3:d=[1,2]",
    "cyclic:F3^3/F3:d=[1,2,2]",
    "cyclic:F3^2/F3:d=[2,2]",
    "generalized_cyclic:M2(F4)/F2:d=w",
    "generalized_cyclic:M2(F4)/F2:d=1",
    "menichetti:F4/F2:k=1;w",
    "menichetti:F4/F2:k=1;1",
    "menichetti:F8/F2:k=1;w;w^2",
    "menichetti:F9/F3:k=2;w",
    "generalized_menichetti:M2(F4)/F2:k=1;w",
    "skew_matrix:F4:n=2:lambda=w",
    "skew_matrix:F5:n=2:lambda=2",
    "skew_matrix:F3:n=3",
    "petit:F4/F2:f=w;0;1",
    "petit:F4/F2:f=1;1;1",
    "petit:F8/F2:f=w;1;0;1",
    "petit:F4/F2:f=w;0;1:side=left",
    "differential:p=2:d=v",
    "differential:p=2:d=v^2+1",
    "differential:p=3:d=v",
    "differential:p=3:d=v^3",
    "differential:p=2:d=v:derivation=euler",
    "differential:p=2:d=1/v^2:derivation=euler",
];

fn build_all() -> Result<Vec<(&'static str, crate::recipe::Built)>> {
    CONSTRUCTIONS
        .par_iter()
        .map(|text| Ok((*text, Recipe::parse(text)?.build()?)))
        .collect()
}

fn basis_of<F: Field>(a: &AlgebraSC<F>, indices: impl IntoIterator<Item = usize>) -> Vec<Vec<F::Elem>> {
    indices.into_iter().map(|i| a.basis(i)).collect()
}

// Nucleus theorem ---------------------------------------------------------

/// Right nucleus of `(K/F,σ,d)` against the span formula
/// `span{K t^{js} : 0 ≤ j < n/s}` (with `s` the least period of `d` under
/// `σ`) and against the annihilator formula `⊕_j Ann_K(σ^j(d) - d) t^j`,
/// which follows from `f (a t^j) ≡ a (σ^j(d) - d) t^j mod_r f`. The two
/// agree when every `σ^j(d) - d` is zero or a unit, in particular for fields.
struct NucleusCheck {
    span_formula: bool,
    annihilator_formula: bool,
    /// `Nuc = K`; only evaluated for fields with `d ∉ F`.
    nucleus_is_k: Option<bool>,
}

fn nucleus_check(k: &GaloisCnAlgebra, d: &[u32]) -> Result<NucleusCheck> {
    let n = k.dim();
    let a = cyclic_algebra(k, d)?;
    let st = k.stabilizer(d);
    let right = a.nucleus_right();
    let span = basis_of(&a, (0..st.r).flat_map(|j| (0..n).map(move |i| j * st.s * n + i)));
    let mut annihilators = Vec::new();
    for j in 0..n {
        let diff = k.algebra().sub(&k.apply_sigma(d, j as i64), d);
        for v in k.algebra().left_mul_matrix(&diff).kernel() {
            let mut x = a.zero();
            x[j * n..(j + 1) * n].copy_from_slice(&v);
            annihilators.push(x);
        }
    }
    Ok(NucleusCheck {
        span_formula: right.same_subspace(&span),
        annihilator_formula: right.same_subspace(&annihilators),
        nucleus_is_k: (k.is_field() && !k.in_base(d)).then(|| a.nucleus().same_subspace(&basis_of(&a, 0..n))),
    })
}

fn nucleus_theorem(cfg: &SuiteConfig) -> Result<Vec<CaseResult>> {
    let samples = cfg.samples.unwrap_or(10);
    let mut rng = cfg.rng();
    let mut jobs = Vec::new();
    for q in cfg.primes(&[2, 3]) {
        for n in [2, 3, 4] {
            let k = make_cyclic_ext(q, n)?;
            let ds: Vec<_> = k.elements().filter(|d| !k.in_base(d)).collect();
            jobs.push((k, ds));
            let k = make_split_etale(q, n)?;
            let units = k.units();
            let outside: Vec<_> = units.iter().filter(|d| !k.in_base(d)).cloned().collect();
            // F_2^n has no units outside F; the formulas are then checked at d = 1.
            let pool = if outside.is_empty() { units } else { outside };
            let mut ds: Vec<_> = pool.choose_multiple(&mut rng, samples.min(pool.len())).cloned().collect();
            ds.sort();
            jobs.push((k, ds));
        }
    }
    let per_job: Vec<Vec<CaseResult>> = jobs
        .par_iter()
        .map(|(k, ds)| {
            let checks = ds.iter().map(|d| nucleus_check(k, d)).collect::<Result<Vec<_>>>()?;
            let failing = |pred: &dyn Fn(&NucleusCheck) -> bool| -> Vec<String> {
                ds.iter().zip(&checks).filter(|(_, c)| !pred(c)).map(|(d, _)| k.format(d)).collect()
            };
            let summary = |bad: Vec<String>, what: &str| {
                let detail = if bad.is_empty() {
                    format!("{} values of d, {what}", ds.len())
                } else {
                    format!("{} of {} values of d fail, e.g. d = {}", bad.len(), ds.len(), bad[0])
                };
                (bad.is_empty(), detail)
            };
            let (ok, detail) = summary(
                failing(&|c| c.span_formula && c.nucleus_is_k != Some(false)),
                if k.is_field() { "Nuc_r = span K t^(js), Nuc = K" } else { "Nuc_r = span K t^(js)" },
            );
            let mut out = vec![case(format!("{} span formula", k.name()), ok, detail)];
            let (ok, detail) = summary(failing(&|c| c.annihilator_formula), "Nuc_r = sum Ann(sigma^j(d) - d) t^j");
            out.push(case(format!("{} annihilator formula", k.name()), ok, detail));
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per_job.into_iter().flatten().collect())
}

// Opposite algebras ---------------------------------------------------------

fn opposite_isomorphism(k: &GaloisCnAlgebra, d: &[u32]) -> Result<CaseResult> {
    let n = k.dim();
    let ring = cyclic_ring(k);
    let f = ring.binomial(n, d);
    let a = petit_algebra(&ring, &f)?;
    let op_ring = ring.opposite_ring();
    let psi_f = ring.psi_into(&op_ring, &f);
    let expected = op_ring.binomial(n, &k.apply_sigma(d, -(n as i64)));
    let left = petit_algebra_left(&op_ring, &psi_f)?;
    let cols: Vec<Vec<u32>> = (0..a.dim())
        .map(|i| op_ring.to_coords(&ring.psi_into(&op_ring, &ring.from_coords(&a.basis(i))), n))
        .collect();
    let map = Matrix::from_columns(k.base(), a.dim(), &cols)?;
    let iso = verify_isomorphism(&a.opposite(), &left, &map);
    let detail = format!(
        "psi(f) = t^n - sigma^(-n)(d): {}, coefficient map isomorphism: {iso}",
        psi_f == expected
    );
    Ok(case(format!("{} d={}", k.name(), k.format(d)), iso && psi_f == expected, detail))
}

fn opposite() -> Result<Vec<CaseResult>> {
    let f4 = make_cyclic_ext(2, 2)?;
    let f8 = make_cyclic_ext(2, 3)?;
    let mut out = vec![
        opposite_isomorphism(&f4, &f4.parse("w")?)?,
        opposite_isomorphism(&f8, &f8.parse("w")?)?,
    ];
    let f16 = make_cyclic_ext(2, 4)?;
    let d = f16
        .fixed_space(2)
        .into_iter()
        .find(|x| !f16.in_base(x))
        .expect("F_4 inside F_16");
    let a = cyclic_algebra(&f16, &d)?;
    let nl = a.opposite().nucleus_left().dim();
    out.push(case(
        format!("{} d={} (s=2)", f16.name(), f16.format(&d)),
        nl == 8 && nl != f16.dim(),
        format!("Nuc_l of the opposite has dimension {nl}, dim K = {}", f16.dim()),
    ));
    Ok(out)
}

// Division criteria ---------------------------------------------------------

fn powers_independent(k: &GaloisCnAlgebra, d: &[u32]) -> bool {
    let mut pows = vec![k.one()];
    for _ in 1..k.dim() {
        pows.push(k.mul(pows.last().expect("nonempty"), d));
    }
    span_rank(k.base(), k.dim(), &pows) == k.dim()
}

fn division_criteria(cfg: &SuiteConfig) -> Result<Vec<CaseResult>> {
    [(2, 2), (3, 2), (2, 3)]
        .into_iter()
        .map(|(p, n)| {
            let k = make_cyclic_ext(p, n)?;
            let ring = cyclic_ring(&k);
            let rows: Vec<(bool, bool, bool, bool)> = k
                .units()
                .par_iter()
                .map(|d| {
                    let f = ring.binomial(n, d);
                    let irreducible = ring.is_irreducible_exhaustive(&f, cfg.cap)?.irreducible;
                    let division = is_division_exhaustive(&petit_algebra(&ring, &f)?, cfg.cap)?.is_division;
                    let norm = ring.norm_criterion(&f)?;
                    debug_assert!(norm.guaranteed);
                    // d ∉ F (n prime) and independent powers both force division.
                    let forced = (!k.in_base(d) && crate::exactfield::poly::is_prime(n as u64))
                        || powers_independent(&k, d);
                    Ok((irreducible, division, norm.holds, !forced || division))
                })
                .collect::<Result<_>>()?;
            let disagreements = rows.iter().filter(|(i, d, n, _)| i != d || d != n).count();
            let forced_fail = rows.iter().filter(|r| !r.3).count();
            let divisions = rows.iter().filter(|r| r.1).count();
            Ok(case(
                format!("{} n={n}", k.name()),
                disagreements == 0 && forced_fail == 0,
                format!(
                    "{} values of d, {divisions} division, {disagreements} disagreements, {forced_fail} forced-division failures",
                    rows.len()
                ),
            ))
        })
        .collect()
}

// Split quaternions ---------------------------------------------------------

fn split_quaternion(cfg: &SuiteConfig) -> Result<Vec<CaseResult>> {
    let p = cfg.p.unwrap_or(2);
    let k = make_cyclic_ext(p, 2)?;
    let w = k.parse("w")?;
    let a = cyclic_algebra(&k, &w)?;
    let l = GaloisField::new(p, 2)?;
    let al = a.map_field(&l, |x| l.from_int(*x as i64))?;
    let lambda = l.div(&k.apply_sigma(&w, 1), &w).expect("w is a unit");
    let skew = skew_matrix_algebra(&l, &SkewSet::quaternion(&l, lambda.clone())?);
    let iso = find_isomorphism_exhaustive(&al, &skew, cfg.cap)?;
    let iso_ok = iso.as_ref().is_some_and(|m| verify_isomorphism(&al, &skew, m));
    let name = format!("(F{}/F{p}, sigma, w) over F{}", p * p, p * p);
    let mut out = vec![case(
        format!("{name} isomorphism"),
        iso_ok,
        format!("target M_2(F{};c) with lambda = sigma(w)/w = {}", p * p, l.format(&lambda)),
    )];

    let nucleus = al.nucleus();
    let ids: Vec<_> = primitive_idempotents(nucleus.algebra(), cfg.cap)?
        .iter()
        .map(|e| nucleus.embed(e))
        .collect();
    let units = matrix_units_from_idempotents(&al, &ids)?;
    let found = units.c.get(1, 0, 1).clone();
    let lambda_inv = l.inv(&lambda).expect("unit");
    out.push(case(
        format!("{name} matrix units"),
        found == lambda || found == lambda_inv,
        format!("reduced skew set has lambda = {}", l.format(&found)),
    ));
    Ok(out)
}

// Semiassociativity ---------------------------------------------------------

fn semiassoc_case<F: Field>(name: &str, c: &Construction<F>) -> Result<Option<CaseResult>> {
    let Some(e) = &c.etale else {
        return Ok(None);
    };
    let r = semiassoc_check(&c.algebra, e)?;
    let k = e.len();
    Ok(Some(case(
        name,
        r.semiassociative && r.faithful_rank == k * k,
        format!(
            "etale {}, in nucleus {}, dim {}^2 = {}: {}, faithful rank {}",
            r.etale,
            r.in_nucleus,
            k,
            c.algebra.dim(),
            r.dim_match,
            r.faithful_rank
        ),
    )))
}

fn semiassoc_all() -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for (name, built) in build_all()? {
        if let Some(c) = with_construction!(&built, c => semiassoc_case(name, c)?) {
            out.push(c);
        }
    }
    Ok(out)
}

// Tensor products -----------------------------------------------------------

fn tensor_csa() -> Result<Vec<CaseResult>> {
    let k = make_cyclic_ext(2, 2)?;
    let m2 = matrix_algebra(k.base(), 2);
    let r = tensor_csa_cyclic(&m2, &k, &k.parse("w")?)?;
    Ok(vec![case(
        "M_2(F2) x (F4/F2, sigma, w)",
        r.isomorphism_verified
            && r.nucleus_dim == 8
            && r.nucleus_is_coefficient_ring == Some(true)
            && r.nucleus_center_dim == 2,
        format!(
            "dim {}, isomorphism {}, nucleus dim {}, nucleus = M_2(F4): {:?}, center of nucleus dim {}",
            r.dim, r.isomorphism_verified, r.nucleus_dim, r.nucleus_is_coefficient_ring, r.nucleus_center_dim
        ),
    )])
}

fn infinite_order() -> Result<Vec<CaseResult>> {
    let k = make_cyclic_ext(2, 2)?;
    let a = cyclic_algebra(&k, &k.parse("w")?)?;
    let n = k.dim();
    let mut power = a.clone();
    let mut e: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for exp in 2..=3u32 {
        let step = power.dim();
        e = (0..n).flat_map(|i| e.iter().map(move |j| i * step + j)).collect();
        power = a.tensor(&power)?;
        let r = split_certificate(&power, &basis_of(&power, e.iter().copied()))?;
        let expected = n.pow(exp - 1);
        out.push(case(
            format!("(F4/F2, sigma, w)^{exp}"),
            r.verdict == SplitVerdict::NotSplitCertified && r.idempotent_count == expected && r.degree == n.pow(exp),
            format!(
                "dim {}, degree {}, nucleus dim {}, {} primitive idempotents, {}",
                power.dim(),
                r.degree,
                r.nucleus_dim,
                r.idempotent_count,
                r.verdict.name()
            ),
        ));
    }
    Ok(out)
}

// Menichetti ----------------------------------------------------------------

fn menichetti_suite(cfg: &SuiteConfig) -> Result<Vec<CaseResult>> {
    let samples = cfg.samples.unwrap_or(200);
    let mut rng = cfg.rng();
    let mut out = Vec::new();

    for text in ["menichetti:F4/F2:k=1;w", "menichetti:F8/F2:k=1;w;w^2"] {
        let Recipe::Menichetti { field, k } = Recipe::parse(text)? else {
            unreachable!("menichetti recipe")
        };
        let crate::recipe::CoefficientSpec::Etale(kk) = crate::recipe::parse_coefficients(&field)? else {
            unreachable!("field extension")
        };
        let ks = k.iter().map(|x| kk.parse(x)).collect::<Result<Vec<_>>>()?;
        let data = crate::construct::menichetti(&kk, &ks)?;
        let (m, n) = (data.m, kk.dim());
        // z_i z_j = c_{j,i} z_{i+j}
        let mut rule = true;
        for i in 0..m {
            for j in 0..m {
                let mut expected = data.algebra.zero();
                let blk = (i + j) % m;
                expected[blk * n..(blk + 1) * n].copy_from_slice(&data.c[j][i]);
                rule &= data.algebra.mul(&data.algebra.basis(i * n), &data.algebra.basis(j * n)) == expected;
            }
        }
        let r = semiassoc_check(&data.algebra, &basis_of(&data.algebra, 0..n))?;
        out.push(case(
            text,
            rule && r.semiassociative && !data.algebra.is_associative(),
            format!("product rule {rule}, semiassociative {}, nonassociative", r.semiassociative),
        ));
    }

    for text in ["menichetti:F4/F2:k=1;1", "menichetti:F8/F2:k=1;1;1"] {
        let assoc = with_construction!(&Recipe::parse(text)?.build()?, c => c.algebra.is_associative());
        out.push(case(text, assoc, format!("all k_i = 1, associative {assoc}")));
    }

    for (field, ks) in [("F8/F2", ["1", "w", "w^2"].as_slice()), ("M2(F4)/F2", ["1", "w"].as_slice())] {
        let spec = crate::recipe::parse_coefficients(field)?;
        let ring = spec.ring();
        let ks = ks.iter().map(|x| spec.parse_elem(x)).collect::<Result<Vec<_>>>()?;
        let data = crate::construct::generalized_menichetti(&ring, &ks)?;
        let a = &data.algebra;
        let f = a.field();
        let mut agree = 0;
        for _ in 0..samples {
            let x: Vec<u32> = (0..a.dim()).map(|_| f.random(&mut rng)).collect();
            let y: Vec<u32> = (0..a.dim()).map(|_| f.random(&mut rng)).collect();
            if a.mul(&x, &y) == menichetti_matrix_product(&ring, &data, &x, &y) {
                agree += 1;
            }
        }
        out.push(case(
            format!("generalized_menichetti:{field} matrix form"),
            agree == samples,
            format!("{agree}/{samples} random products agree with the block matrix action"),
        ));
    }
    Ok(out)
}

// Differential extensions ---------------------------------------------------

fn differential_suite(cfg: &SuiteConfig) -> Result<Vec<CaseResult>> {
    let samples = cfg.samples.unwrap_or(50);
    let mut out = Vec::new();
    for p in cfg.primes(&[2, 3]) {
        let mut rng = cfg.rng();
        let df = DiffField::new(p, Derivation::Standard)?;
        let k = df.k_field();

        let bs: Vec<RatFun> = (0..samples).map(|_| df.random_element(&mut rng, 8)).collect();
        let ok = bs.iter().filter(|b| df.verify_vp_identity(b)).count();
        out.push(case(
            format!("p={p} (t-b)^p = t^p - V_p(b)"),
            ok == samples,
            format!("{ok}/{samples} random b of height <= 8"),
        ));

        let c = df.default_c();
        let mut ds = Vec::new();
        while ds.len() < 10 {
            let b = df.random_element(&mut rng, 2);
            let d = k.pow(&b, p as u64);
            if !k.is_zero(&d) {
                ds.push(d);
            }
        }
        while ds.len() < 20 {
            let d = df.random_element(&mut rng, 2);
            if !df.is_constant(&d) {
                ds.push(d);
            }
        }
        let rows: Vec<(bool, bool, bool)> = ds
            .par_iter()
            .map(|d| {
                let ext = df.diff_extension(&c, d)?;
                let constant = df.is_constant(d);
                let assoc_ok = ext.algebra.is_associative() == constant;
                let nuc_ok = constant || ext.algebra.nucleus_right().contains_all(&df.k_in_extension(&ext));
                Ok((constant, assoc_ok, nuc_ok))
            })
            .collect::<Result<_>>()?;
        let assoc_ok = rows.iter().filter(|r| r.1).count();
        out.push(case(
            format!("p={p} associative iff d in F"),
            assoc_ok == ds.len(),
            format!("{assoc_ok}/{} values of d (10 in F, 10 outside)", ds.len()),
        ));
        let nuc_ok = rows.iter().filter(|r| !r.0 && r.2).count();
        out.push(case(
            format!("p={p} K in Nuc_r for d not in F"),
            nuc_ok == 10,
            format!("{nuc_ok}/10"),
        ));

        let pairs = 100;
        let additive = (0..pairs)
            .filter(|_| {
                let a = df.random_element(&mut rng, 4);
                let b = df.random_element(&mut rng, 4);
                df.v_map(&k.add(&a, &b)) == k.add(&df.v_map(&a), &df.v_map(&b))
            })
            .count();
        out.push(case(
            format!("p={p} V additive"),
            additive == pairs,
            format!("{additive}/{pairs} random pairs"),
        ));

        if p == 3 {
            let d = k.parse("v")?;
            let zero = k.zero();
            let mut same = 0;
            for b in &bs {
                let r = df.char3_criterion_eval(b, &zero, &d)?;
                same += usize::from(r.cond1 == r.cond2);
            }
            out.push(case(
                "p=3 criterion predicates coincide for c in F",
                same == bs.len(),
                format!("{same}/{} random z, d = v, c = 0", bs.len()),
            ));
        }
    }
    Ok(out)
}

// Associativity and eigenspaces ---------------------------------------------

fn associativity_case<F: Field>(name: &str, c: &Construction<F>) -> Result<Option<CaseResult>> {
    let Some(petit) = &c.petit else {
        return Ok(None);
    };
    if petit.side == Side::Left {
        return Ok(None);
    }
    let assoc = c.algebra.is_associative();
    let invariant = petit.ring.is_right_invariant(&petit.f)?;
    let pass = assoc == invariant && c.d_in_base.is_none_or(|b| b == assoc);
    let d = c.d_in_base.map_or("-".to_string(), |b| b.to_string());
    Ok(Some(case(
        name,
        pass,
        format!("associative {assoc}, right-invariant {invariant}, d in F {d}"),
    )))
}

fn associativity() -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for (name, built) in build_all()? {
        if let Some(c) = with_construction!(&built, c => associativity_case(name, c)?) {
            out.push(c);
        }
    }
    Ok(out)
}

fn eigenspace_case<F: Field>(name: &str, c: &Construction<F>) -> Result<Option<CaseResult>> {
    let Some(petit) = &c.petit else {
        return Ok(None);
    };
    if petit.side == Side::Left {
        return Ok(None);
    }
    let eig = petit.ring.eigenspace(&petit.f)?;
    let right = c.algebra.nucleus_right();
    Ok(Some(case(
        name,
        right.same_subspace(&eig),
        format!("eigenspace dim {}, Nuc_r dim {}", eig.len(), right.dim()),
    )))
}

fn eigenspace() -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for (name, built) in build_all()? {
        if let Some(c) = with_construction!(&built, c => eigenspace_case(name, c)?) {
            out.push(c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", &SuiteConfig::default()).is_err());
    }

    #[test]
    fn tensor_suite_passes() {
        let r = run_suite("tensor-csa", &SuiteConfig::default()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.cases.len(), 1);
    }

    #[test]
    fn constructions_build() {
        assert_eq!(build_all().unwrap().len(), CONSTRUCTIONS.len());
    }
}
