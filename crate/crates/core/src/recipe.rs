//! Construction recipes: a serde-tagged JSON form and a compact text form
//! `kind:field:key=value:...`.
//!
//! ```text
//! cyclic:F4/F2:d=w
//! cyclic:F3^2/F3:d=[1,2]
//! generalized_cyclic:M2(F4)/F2:d=w
//! menichetti:F4/F2:k=1;w
//! generalized_menichetti:M2(F4)/F2:k=1;1
//! skew_matrix:F4:n=2:lambda=w
//! petit:F4/F2:f=w;0;1
//! petit:F4/F2:f=w;0;1:side=left
//! differential:p=2:d=v:derivation=euler
//! ```
//!
//! `F{q}/F{p}` is the cyclic extension with `σ = Frobenius`, `F{p}^{n}/F{p}`
//! the split algebra with the coordinate shift, `M{n}(F{q})/F{p}` matrices
//! with entrywise Frobenius. Elements are expressions in `w` or coordinate
//! lists; in `M{n}(F{q})` an expression stands for a scalar matrix. List
//! values are separated by `;`.

use serde::{Deserialize, Serialize};

use crate::construct::{
    cyclic_ring, generalized_cyclic, generalized_menichetti, matrix_ring_over_extension, menichetti,
    petit_algebra, petit_algebra_left, skew_matrix_algebra, SkewSet,
};
use crate::differential::{Derivation, DiffField};
use crate::error::{Error, Result};
use crate::etale::{make_cyclic_ext, make_split_etale, GaloisCnAlgebra};
use crate::exactfield::poly::is_prime;
use crate::exactfield::{Field, GaloisField, PrimeField, RatFunField};
use crate::nalg::AlgebraSC;
use crate::skewpoly::{CoefficientRing, SkewPolynomial};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    #[default]
    Right,
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Recipe {
    Cyclic {
        field: String,
        d: String,
    },
    GeneralizedCyclic {
        field: String,
        d: String,
    },
    Menichetti {
        field: String,
        k: Vec<String>,
    },
    GeneralizedMenichetti {
        field: String,
        k: Vec<String>,
    },
    SkewMatrix {
        field: String,
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lambda: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        c: Option<Vec<String>>,
    },
    Petit {
        field: String,
        /// Coefficients of `f`, lowest degree first.
        f: Vec<String>,
        #[serde(default)]
        side: Side,
    },
    Differential {
        p: u32,
        d: String,
        #[serde(default = "standard")]
        derivation: Derivation,
        /// `c` in `g = t^p - c t`, an expression in `w`; defaults to the
        /// minimum polynomial of the derivation.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        c: Option<String>,
    },
}

fn standard() -> Derivation {
    Derivation::Standard
}

fn parse_q(s: &str) -> Result<(u32, u32)> {
    let q: u64 = s
        .strip_prefix('F')
        .and_then(|r| r.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected a field like F4, got {s:?}")))?;
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).ok_or_else(|| Error::Parse(format!("bad field size {q}")))?;
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    if r != 1 || !is_prime(p) {
        return Err(Error::Parse(format!("{q} is not a prime power")));
    }
    Ok((p as u32, k))
}

/// The coefficient algebra named by a field spec.
pub enum CoefficientSpec {
    /// `F{q}/F{p}` or `F{p}^{n}/F{p}`.
    Etale(GaloisCnAlgebra),
    /// `M{n}(F{q})/F{p}`: matrix size `n`, extension degree `k`.
    Matrices { ring: CoefficientRing<PrimeField>, n: usize, k: usize },
}

pub fn parse_coefficients(spec: &str) -> Result<CoefficientSpec> {
    let (top, base) = spec
        .split_once('/')
        .ok_or_else(|| Error::Parse(format!("expected K/F, got {spec:?}")))?;
    let (p, kb) = parse_q(base)?;
    if kb != 1 {
        return Err(Error::Unsupported("base fields must be prime".into()));
    }
    if let Some(rest) = top.strip_prefix('M') {
        let (n, inner) = rest
            .split_once('(')
            .and_then(|(n, r)| Some((n.parse::<usize>().ok()?, r.strip_suffix(')')?)))
            .ok_or_else(|| Error::Parse(format!("expected M<n>(F<q>), got {top:?}")))?;
        let (p2, k) = parse_q(inner)?;
        if p2 != p {
            return Err(Error::Parse("characteristics differ".into()));
        }
        let ring = matrix_ring_over_extension(p, k as usize, n)?;
        return Ok(CoefficientSpec::Matrices { ring, n, k: k as usize });
    }
    if let Some((q, n)) = top.split_once('^') {
        let (p2, k) = parse_q(q)?;
        let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad exponent in {top:?}")))?;
        if p2 != p || k != 1 {
            return Err(Error::Parse(format!("expected F{p}^n, got {top:?}")));
        }
        return Ok(CoefficientSpec::Etale(make_split_etale(p, n)?));
    }
    let (p2, k) = parse_q(top)?;
    if p2 != p {
        return Err(Error::Parse("characteristics differ".into()));
    }
    Ok(CoefficientSpec::Etale(make_cyclic_ext(p, k as usize)?))
}

impl CoefficientSpec {
    pub fn ring(&self) -> CoefficientRing<PrimeField> {
        match self {
            CoefficientSpec::Etale(k) => cyclic_ring(k),
            CoefficientSpec::Matrices { ring, .. } => ring.clone(),
        }
    }

    /// Parses an element; in a matrix ring an expression in `w` is a scalar
    /// matrix.
    pub fn parse_elem(&self, s: &str) -> Result<Vec<u32>> {
        match self {
            CoefficientSpec::Etale(k) => k.parse(s),
            CoefficientSpec::Matrices { ring, n, k } => {
                let s = s.trim();
                let p = ring.field().p();
                if s.starts_with('[') {
                    let v = crate::exactfield::poly::parse_poly(s, "w", p)?;
                    let dim = ring.coeff_dim();
                    if v.len() > dim {
                        return Err(Error::Parse(format!("expected at most {dim} coordinates")));
                    }
                    let mut out = v;
                    out.resize(dim, 0);
                    return Ok(out);
                }
                let x = GaloisField::new(p, *k as u32)?.parse(s)?;
                let mut out = vec![0; ring.coeff_dim()];
                for i in 0..*n {
                    let blk = i * n + i;
                    out[blk * k..(blk + 1) * k].copy_from_slice(&x);
                }
                Ok(out)
            }
        }
    }

    /// A maximal étale subalgebra: `K` itself, or the diagonal over `F_q`.
    pub fn etale_basis(&self) -> Vec<Vec<u32>> {
        match self {
            CoefficientSpec::Etale(k) => (0..k.dim()).map(|i| k.algebra().basis(i)).collect(),
            CoefficientSpec::Matrices { ring, n, k } => {
                let mut out = Vec::new();
                for i in 0..*n {
                    for l in 0..*k {
                        out.push(ring.algebra().basis((i * n + i) * k + l));
                    }
                }
                out
            }
        }
    }
}

/// A Petit algebra's ring and modulus.
#[derive(Clone, Debug, PartialEq)]
pub struct PetitData<F: Field> {
    pub ring: CoefficientRing<F>,
    pub f: SkewPolynomial<F::Elem>,
    pub side: Side,
}

/// A built algebra with the extra data the analyses need.
#[derive(Clone, Debug, PartialEq)]
pub struct Construction<F: Field> {
    pub algebra: AlgebraSC<F>,
    /// The étale subalgebra the construction is semiassociative over.
    pub etale: Option<Vec<Vec<F::Elem>>>,
    pub petit: Option<PetitData<F>>,
    /// Whether the parameter `d` lies in the base field.
    pub d_in_base: Option<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Built {
    Prime(Construction<PrimeField>),
    Extension(Construction<GaloisField>),
    RationalFunction(Construction<RatFunField>),
}

/// Runs `$body` with `$c` bound to the [`Construction`] inside a [`Built`],
/// whatever its field.
#[macro_export]
macro_rules! with_construction {
    ($built:expr, $c:ident => $body:expr) => {
        match $built {
            $crate::recipe::Built::Prime($c) => $body,
            $crate::recipe::Built::Extension($c) => $body,
            $crate::recipe::Built::RationalFunction($c) => $body,
        }
    };
}

fn kv<'a>(parts: &[&'a str], key: &str) -> Option<&'a str> {
    parts.iter().find_map(|p| p.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
}

fn need<'a>(parts: &[&'a str], key: &str, kind: &str) -> Result<&'a str> {
    kv(parts, key).ok_or_else(|| Error::Parse(format!("{kind} recipe needs {key}=...")))
}

fn list(s: &str) -> Vec<String> {
    s.split(';').map(|x| x.trim().to_string()).collect()
}

impl Recipe {
    /// Parses the compact text form.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.trim().split(':').collect();
        let kind = parts[0];
        let field = || {
            parts
                .get(1)
                .map(|s| s.to_string())
                .ok_or_else(|| Error::Parse(format!("{kind} recipe needs a field")))
        };
        let rest = parts.get(2..).unwrap_or(&[]);
        Ok(match kind {
            "cyclic" => Recipe::Cyclic {
                field: field()?,
                d: need(rest, "d", kind)?.into(),
            },
            "generalized_cyclic" => Recipe::GeneralizedCyclic {
                field: field()?,
                d: need(rest, "d", kind)?.into(),
            },
            "menichetti" => Recipe::Menichetti {
                field: field()?,
                k: list(need(rest, "k", kind)?),
            },
            "generalized_menichetti" => Recipe::GeneralizedMenichetti {
                field: field()?,
                k: list(need(rest, "k", kind)?),
            },
            "skew_matrix" => Recipe::SkewMatrix {
                field: field()?,
                n: need(rest, "n", kind)?
                    .parse()
                    .map_err(|_| Error::Parse("n must be a positive integer".into()))?,
                lambda: kv(rest, "lambda").map(String::from),
                c: kv(rest, "c").map(list),
            },
            "petit" => Recipe::Petit {
                field: field()?,
                f: list(need(rest, "f", kind)?),
                side: match kv(rest, "side") {
                    None | Some("right") => Side::Right,
                    Some("left") => Side::Left,
                    Some(s) => return Err(Error::Parse(format!("side must be left or right, got {s:?}"))),
                },
            },
            "differential" => {
                let all = &parts[1..];
                Recipe::Differential {
                    p: need(all, "p", kind)?
                        .parse()
                        .map_err(|_| Error::Parse("p must be a prime".into()))?,
                    d: need(all, "d", kind)?.into(),
                    derivation: match kv(all, "derivation") {
                        None | Some("standard") => Derivation::Standard,
                        Some("euler") => Derivation::Euler,
                        Some(s) => return Err(Error::Parse(format!("unknown derivation {s:?}"))),
                    },
                    c: kv(all, "c").map(String::from),
                }
            }
            _ => return Err(Error::Parse(format!("unknown recipe kind {kind:?}"))),
        })
    }

    /// The compact text form; `Recipe::parse(r.to_text())` gives back `r`.
    pub fn to_text(&self) -> String {
        match self {
            Recipe::Cyclic { field, d } => format!("cyclic:{field}:d={d}"),
            Recipe::GeneralizedCyclic { field, d } => format!("generalized_cyclic:{field}:d={d}"),
            Recipe::Menichetti { field, k } => format!("menichetti:{field}:k={}", k.join(";")),
            Recipe::GeneralizedMenichetti { field, k } => {
                format!("generalized_menichetti:{field}:k={}", k.join(";"))
            }
            Recipe::SkewMatrix { field, n, lambda, c } => {
                let mut s = format!("skew_matrix:{field}:n={n}");
                if let Some(l) = lambda {
                    s += &format!(":lambda={l}");
                }
                if let Some(c) = c {
                    s += &format!(":c={}", c.join(";"));
                }
                s
            }
            Recipe::Petit { field, f, side } => {
                let mut s = format!("petit:{field}:f={}", f.join(";"));
                if *side == Side::Left {
                    s += ":side=left";
                }
                s
            }
            Recipe::Differential { p, d, derivation, c } => {
                let mut s = format!("differential:p={p}:d={d}");
                if *derivation == Derivation::Euler {
                    s += ":derivation=euler";
                }
                if let Some(c) = c {
                    s += &format!(":c={c}");
                }
                s
            }
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("recipe JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("recipes serialize")
    }

    pub fn build(&self) -> Result<Built> {
        match self {
            Recipe::Cyclic { field, d } => {
                let CoefficientSpec::Etale(k) = parse_coefficients(field)? else {
                    return Err(Error::Precondition("cyclic algebras need an étale K; use generalized_cyclic".into()));
                };
                let d = k.parse(d)?;
                let ring = cyclic_ring(&k);
                let algebra = crate::construct::cyclic_algebra(&k, &d)?;
                Ok(Built::Prime(Construction {
                    etale: Some(in_first_block(CoefficientSpec::Etale(k.clone()).etale_basis(), algebra.dim())),
                    algebra,
                    petit: Some(PetitData {
                        f: ring.binomial(k.dim(), &d),
                        ring,
                        side: Side::Right,
                    }),
                    d_in_base: Some(k.in_base(&d)),
                }))
            }
            Recipe::GeneralizedCyclic { field, d } => {
                let spec = parse_coefficients(field)?;
                let ring = spec.ring();
                let d = spec.parse_elem(d)?;
                let g = generalized_cyclic(&ring, &d)?;
                Ok(Built::Prime(Construction {
                    etale: Some(in_first_block(spec.etale_basis(), g.algebra.dim())),
                    algebra: g.algebra,
                    petit: Some(PetitData {
                        f: ring.binomial(g.m, &d),
                        ring,
                        side: Side::Right,
                    }),
                    d_in_base: Some(g.d_in_base),
                }))
            }
            Recipe::Menichetti { field, k } | Recipe::GeneralizedMenichetti { field, k } => {
                let spec = parse_coefficients(field)?;
                let ks = k.iter().map(|x| spec.parse_elem(x)).collect::<Result<Vec<_>>>()?;
                let data = match (&spec, self) {
                    (CoefficientSpec::Etale(kk), Recipe::Menichetti { .. }) => menichetti(kk, &ks)?,
                    (_, Recipe::GeneralizedMenichetti { .. }) => generalized_menichetti(&spec.ring(), &ks)?,
                    _ => return Err(Error::Precondition("menichetti needs an étale K; use generalized_menichetti".into())),
                };
                Ok(Built::Prime(Construction {
                    etale: Some(in_first_block(spec.etale_basis(), data.algebra.dim())),
                    algebra: data.algebra,
                    petit: None,
                    d_in_base: None,
                }))
            }
            Recipe::SkewMatrix { field, n, lambda, c } => {
                let (p, k) = parse_q(field)?;
                if k == 1 {
                    Ok(Built::Prime(skew_construction(&PrimeField::new(p)?, *n, lambda, c)?))
                } else {
                    Ok(Built::Extension(skew_construction(&GaloisField::new(p, k)?, *n, lambda, c)?))
                }
            }
            Recipe::Petit { field, f, side } => {
                let spec = parse_coefficients(field)?;
                let ring = spec.ring();
                let coeffs = f.iter().map(|x| spec.parse_elem(x)).collect::<Result<Vec<_>>>()?;
                let f = ring.poly(coeffs);
                let algebra = match side {
                    Side::Right => petit_algebra(&ring, &f)?,
                    Side::Left => petit_algebra_left(&ring, &f)?,
                };
                Ok(Built::Prime(Construction {
                    algebra,
                    etale: None,
                    petit: Some(PetitData { ring, f, side: *side }),
                    d_in_base: None,
                }))
            }
            Recipe::Differential { p, d, derivation, c } => {
                let df = DiffField::new(*p, *derivation)?;
                let d = df.k_field().parse(d)?;
                let c = match c {
                    Some(c) => df.base_field().parse(c)?,
                    None => df.default_c(),
                };
                let ext = df.diff_extension(&c, &d)?;
                Ok(Built::RationalFunction(Construction {
                    algebra: ext.algebra,
                    etale: None,
                    petit: Some(PetitData {
                        f: df.polynomial(&c, &d),
                        ring: df.ring().clone(),
                        side: Side::Right,
                    }),
                    d_in_base: Some(ext.d_in_base),
                }))
            }
        }
    }
}

/// Coefficient-ring vectors as elements of the first block (`t^0` or `z_0`).
fn in_first_block(vectors: Vec<Vec<u32>>, dim: usize) -> Vec<Vec<u32>> {
    vectors
        .into_iter()
        .map(|mut v| {
            v.resize(dim, 0);
            v
        })
        .collect()
}

fn skew_construction<F: Field>(
    field: &F,
    n: usize,
    lambda: &Option<String>,
    c: &Option<Vec<String>>,
) -> Result<Construction<F>> {
    let set = match (lambda, c) {
        (Some(_), Some(_)) => return Err(Error::Parse("give either lambda or c, not both".into())),
        (Some(l), None) if n == 2 => SkewSet::quaternion(field, field.parse(l)?)?,
        (Some(_), None) => return Err(Error::Parse("lambda needs n = 2".into())),
        (None, Some(c)) => SkewSet::new(field, n, c.iter().map(|x| field.parse(x)).collect::<Result<_>>()?)?,
        (None, None) => SkewSet::ones(field, n),
    };
    let algebra = skew_matrix_algebra(field, &set);
    let etale = (0..n).map(|i| algebra.basis(i * n + i)).collect();
    Ok(Construction {
        algebra,
        etale: Some(etale),
        petit: None,
        d_in_base: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_round_trip() {
        for text in [
            "cyclic:F4/F2:d=w",
            "cyclic:F3^2/F3:d=[1,2]",
            "generalized_cyclic:M2(F4)/F2:d=w",
            "menichetti:F4/F2:k=1;w",
            "generalized_menichetti:M2(F4)/F2:k=1;1",
            "skew_matrix:F4:n=2:lambda=w",
            "skew_matrix:F3:n=2",
            "petit:F4/F2:f=w;0;1:side=left",
            "differential:p=2:d=v:derivation=euler",
        ] {
            let r = Recipe::parse(text).unwrap();
            assert_eq!(r.to_text(), text);
            assert_eq!(Recipe::from_json(&r.to_json()).unwrap(), r);
            r.build().unwrap();
        }
    }

    #[test]
    fn json_is_tagged_by_kind() {
        let r = Recipe::parse("cyclic:F4/F2:d=w").unwrap();
        assert_eq!(r.to_json(), r#"{"kind":"cyclic","field":"F4/F2","d":"w"}"#);
        let r = Recipe::from_json(r#"{"kind":"differential","p":3,"d":"v"}"#).unwrap();
        assert!(matches!(r, Recipe::Differential { derivation: Derivation::Standard, .. }));
    }

    #[test]
    fn built_data() {
        let Built::Prime(c) = Recipe::parse("cyclic:F4/F2:d=w").unwrap().build().unwrap() else {
            panic!("prime field expected");
        };
        assert_eq!(c.algebra.dim(), 4);
        assert_eq!(c.d_in_base, Some(false));
        let Built::Prime(g) = Recipe::parse("generalized_cyclic:M2(F4)/F2:d=w").unwrap().build().unwrap() else {
            panic!("prime field expected");
        };
        let e = g.etale.unwrap();
        assert_eq!((g.algebra.dim(), e.len(), e[0].len()), (16, 4, 16));
        assert!(matches!(
            Recipe::parse("skew_matrix:F4:n=2:lambda=w").unwrap().build().unwrap(),
            Built::Extension(_)
        ));
    }

    #[test]
    fn bad_recipes() {
        for text in ["", "cyclic", "cyclic:F4/F2", "cyclic:F6/F2:d=1", "cyclic:F4/F2:d=0", "frob:F4/F2:d=w", "differential:p=2:d=v:c=1"] {
            let r = Recipe::parse(text).and_then(|r| r.build());
            assert!(r.is_err(), "{text} should fail");
        }
    }
}
