//! Differential extensions in characteristic `p`: `K = F_p(v)` with a
//! derivation `δ`, its constant field `F = F_p(w)`, `w = v^p`, and the
//! algebras `(K, δ, d) = K[t;δ] / K[t;δ](g - d)`.
//!
//! `K` is handled as the `p`-dimensional `F`-algebra with basis
//! `1, v, ..., v^{p-1}`; elements of `K` are rational functions in `v`,
//! elements of `F` rational functions in `w`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::construct::petit_algebra;
use crate::error::{Error, Result};
use crate::exactfield::poly;
use crate::exactfield::{Field, RatFun, RatFunField};
use crate::exactla::Matrix;
use crate::nalg::AlgebraSC;
use crate::skewpoly::{CoefficientRing, SkewPolynomial};

/// The derivation on `K = F_p(v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Derivation {
    /// `δ = d/dv`, minimum polynomial `t^p`.
    Standard,
    /// `δ = v d/dv`, minimum polynomial `t^p - t`.
    Euler,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiffField {
    p: u32,
    derivation: Derivation,
    k: RatFunField,
    f: RatFunField,
    ring: CoefficientRing<RatFunField>,
}

/// `(K, δ, d)` with `g = t^p - c t`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffExtension {
    pub algebra: AlgebraSC<RatFunField>,
    /// Coefficient `c ∈ F` of `g`, in `w`.
    pub c: RatFun,
    /// `d ∈ K`, in `v`.
    pub d: RatFun,
    pub d_in_base: bool,
}

/// The two predicates of the degree-3 irreducibility criterion at one `z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Char3Report {
    /// `V_3(z) - c z ≠ d`.
    pub cond1: bool,
    /// `V_3(z) - z c - d + δ(c) ≠ 0`.
    pub cond2: bool,
}

type Poly = SkewPolynomial<RatFun>;

impl DiffField {
    pub fn new(p: u32, derivation: Derivation) -> Result<Self> {
        if !poly::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let k = RatFunField::new(p, "v");
        let f = RatFunField::new(p, "w");
        let n = p as usize;
        let w = f.generator();
        let algebra = AlgebraSC::from_products(&f, n, unit_coords(&f, n), |i, j| {
            let mut out = vec![f.zero(); n];
            if i + j < n {
                out[i + j] = f.one();
            } else {
                out[i + j - n] = w.clone();
            }
            out
        })?;
        let mut delta = Matrix::zeros(&f, n, n);
        for i in 1..n {
            let c = f.from_int(i as i64);
            match derivation {
                Derivation::Standard => delta.set(i - 1, i, c),
                Derivation::Euler => delta.set(i, i, c),
            }
        }
        let ring = CoefficientRing::new(algebra, Matrix::identity(&f, n), delta)?;
        Ok(DiffField {
            p,
            derivation,
            k,
            f,
            ring,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn derivation(&self) -> Derivation {
        self.derivation
    }

    /// `K = F_p(v)`.
    pub fn k_field(&self) -> &RatFunField {
        &self.k
    }

    /// `F = F_p(w)`.
    pub fn base_field(&self) -> &RatFunField {
        &self.f
    }

    /// `K[t; δ]` over `F`.
    pub fn ring(&self) -> &CoefficientRing<RatFunField> {
        &self.ring
    }

    /// The `c` making `t^p - c t` the minimum polynomial of `δ`.
    pub fn default_c(&self) -> RatFun {
        match self.derivation {
            Derivation::Standard => self.f.zero(),
            Derivation::Euler => self.f.one(),
        }
    }

    pub fn delta(&self, x: &RatFun) -> RatFun {
        let d = self.k.derivative(x);
        match self.derivation {
            Derivation::Standard => d,
            Derivation::Euler => self.k.mul(&self.k.generator(), &d),
        }
    }

    /// `δ(x) = 0`, i.e. `x ∈ F_p(v^p)`.
    pub fn is_constant(&self, x: &RatFun) -> bool {
        self.k.is_zero(&self.k.derivative(x))
    }

    /// Coordinates of `x ∈ K` on `1, v, ..., v^{p-1}` over `F`, using
    /// `1/D(v) = D(v)^{p-1} / D(w)`.
    pub fn to_coords(&self, x: &RatFun) -> Vec<RatFun> {
        let p = self.p;
        let n = p as usize;
        let num = poly::mul(&x.num, &poly::pow(&x.den, (n - 1) as u64, p), p);
        (0..n)
            .map(|i| {
                let part: Vec<u32> = num.iter().skip(i).step_by(n).copied().collect();
                self.f.fraction(&part, &x.den).expect("nonzero denominator")
            })
            .collect()
    }

    pub fn from_coords(&self, c: &[RatFun]) -> RatFun {
        let n = self.p as usize;
        let mut v_pow = self.k.one();
        let mut acc = self.k.zero();
        for x in c {
            let x_v = self.k.compose_power(x, n);
            acc = self.k.add(&acc, &self.k.mul(&x_v, &v_pow));
            v_pow = self.k.mul(&v_pow, &self.k.generator());
        }
        acc
    }

    /// Embeds `c ∈ F` (in `w`) into `K` (in `v`).
    pub fn constant_to_k(&self, c: &RatFun) -> RatFun {
        self.k.compose_power(c, self.p as usize)
    }

    /// `V_p(b) = b^p + δ^{p-1}(b)`.
    pub fn vp(&self, b: &RatFun) -> RatFun {
        let mut d = b.clone();
        for _ in 1..self.p {
            d = self.delta(&d);
        }
        self.k.add(&self.k.pow(b, self.p as u64), &d)
    }

    /// `V(b) = V_p(b) - b`.
    pub fn v_map(&self, b: &RatFun) -> RatFun {
        self.k.sub(&self.vp(b), b)
    }

    fn constant_poly(&self, x: &RatFun) -> Poly {
        self.ring.constant(&self.to_coords(x))
    }

    /// `g - d` with `g = t^p - c t`; `c` in `w`, `d` in `v`.
    pub fn polynomial(&self, c: &RatFun, d: &RatFun) -> Poly {
        let n = self.p as usize;
        let r = &self.ring;
        let s = r.algebra();
        let mut coeffs = vec![s.zero(); n + 1];
        coeffs[n] = s.unit().to_vec();
        coeffs[1] = s.scalar(&self.f.neg(c));
        coeffs[0] = s.scale(&self.f.from_int(-1), &self.to_coords(d));
        r.poly(coeffs)
    }

    /// Expands `(t - b)^p` in `K[t;δ]` and compares it with `t^p - V_p(b)`.
    pub fn verify_vp_identity(&self, b: &RatFun) -> bool {
        let r = &self.ring;
        let lhs = r.pow(&r.sub(&r.t(), &self.constant_poly(b)), self.p);
        let rhs = r.sub(&r.monomial(r.algebra().unit(), self.p as usize), &self.constant_poly(&self.vp(b)));
        lhs == rhs
    }

    /// `(g - d) a = a (g - d)` in `K[t;δ]` for each sample `a ∈ K`.
    pub fn semi_invariance_check(&self, c: &RatFun, d: &RatFun, samples: &[RatFun]) -> Vec<bool> {
        let r = &self.ring;
        let f = self.polynomial(c, d);
        samples
            .iter()
            .map(|a| {
                let a = self.constant_poly(a);
                r.mul(&f, &a) == r.mul(&a, &f)
            })
            .collect()
    }

    /// `(K, δ, d)` for `g = t^p - c t`. `g` must commute with `K`, which
    /// pins `c` to the minimum polynomial of `δ`.
    pub fn diff_extension(&self, c: &RatFun, d: &RatFun) -> Result<DiffExtension> {
        let basis: Vec<RatFun> = (0..self.p as usize)
            .map(|i| self.k.pow(&self.k.generator(), i as u64))
            .collect();
        if let Some(i) = self.semi_invariance_check(c, d, &basis).iter().position(|ok| !ok) {
            return Err(Error::Precondition(format!(
                "g = t^{} - ({})t does not commute with v^{i}",
                self.p,
                self.f.format(c)
            )));
        }
        let algebra = petit_algebra(&self.ring, &self.polynomial(c, d))?;
        Ok(DiffExtension {
            algebra,
            c: c.clone(),
            d: d.clone(),
            d_in_base: self.is_constant(d),
        })
    }

    /// Evaluates both predicates at `z`; `c` must be a constant (in `v`).
    pub fn char3_criterion_eval(&self, z: &RatFun, c: &RatFun, d: &RatFun) -> Result<Char3Report> {
        if self.p != 3 {
            return Err(Error::Precondition("the degree-3 criterion needs p = 3".into()));
        }
        if !self.is_constant(c) {
            return Err(Error::Precondition("c must lie in F".into()));
        }
        let k = &self.k;
        let v3 = self.vp(z);
        let cz = k.mul(c, z);
        let cond1 = k.sub(&v3, &cz) != *d;
        let e = k.add(&k.sub(&k.sub(&v3, &cz), d), &self.delta(c));
        Ok(Char3Report {
            cond1,
            cond2: !k.is_zero(&e),
        })
    }

    /// Searches `samples` random `z` of height at most `height` for one
    /// violating either predicate. Finding none proves nothing.
    pub fn char3_falsify<R: Rng + ?Sized>(
        &self,
        c: &RatFun,
        d: &RatFun,
        height: usize,
        samples: usize,
        rng: &mut R,
    ) -> Result<Option<RatFun>> {
        for _ in 0..samples {
            let z = self.random_element(rng, height);
            let rep = self.char3_criterion_eval(&z, c, d)?;
            if !rep.cond1 || !rep.cond2 {
                return Ok(Some(z));
            }
        }
        Ok(None)
    }

    /// A random element of `K` with numerator and denominator degree at
    /// most `height`.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R, height: usize) -> RatFun {
        let p = self.p;
        let nd = rng.gen_range(0..=height);
        let num: Vec<u32> = (0..=nd).map(|_| rng.gen_range(0..p)).collect();
        let dd = rng.gen_range(0..=height);
        let mut den: Vec<u32> = (0..dd).map(|_| rng.gen_range(0..p)).collect();
        den.push(1);
        self.k.fraction(&num, &den).expect("monic denominator")
    }

    /// Coordinates over `F` of the subalgebra `K = K t^0` inside an extension.
    pub fn k_in_extension(&self, ext: &DiffExtension) -> Vec<Vec<RatFun>> {
        (0..self.p as usize).map(|i| ext.algebra.basis(i)).collect()
    }
}

fn unit_coords(f: &RatFunField, n: usize) -> Vec<RatFun> {
    let mut u = vec![f.zero(); n];
    u[0] = f.one();
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn vp_examples() {
        let k2 = DiffField::new(2, Derivation::Standard).unwrap();
        let v = k2.k_field().generator();
        assert_eq!(k2.vp(&v), k2.k_field().parse("v^2+1").unwrap());
        let inv = k2.k_field().parse("1/v").unwrap();
        assert!(k2.k_field().is_zero(&k2.vp(&inv)));
        assert!(k2.verify_vp_identity(&v));
        assert!(k2.verify_vp_identity(&inv));
        assert!(k2.verify_vp_identity(&k2.k_field().zero()));
        let k3 = DiffField::new(3, Derivation::Standard).unwrap();
        let v = k3.k_field().generator();
        assert_eq!(k3.vp(&v), k3.k_field().parse("v^3").unwrap());
        let b = k3.k_field().parse("v^6+2").unwrap();
        assert_eq!(k3.vp(&b), k3.k_field().pow(&b, 3));
    }

    #[test]
    fn coordinates_round_trip() {
        let k = DiffField::new(3, Derivation::Standard).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let x = k.random_element(&mut rng, 5);
            assert_eq!(k.from_coords(&k.to_coords(&x)), x);
        }
        let a = k.random_element(&mut rng, 4);
        let b = k.random_element(&mut rng, 4);
        let prod = k.ring().algebra().mul(&k.to_coords(&a), &k.to_coords(&b));
        assert_eq!(prod, k.to_coords(&k.k_field().mul(&a, &b)));
        let da = k.ring().apply_delta(&k.to_coords(&a));
        assert_eq!(da, k.to_coords(&k.delta(&a)));
    }

    #[test]
    fn extensions_and_associativity() {
        let k = DiffField::new(2, Derivation::Standard).unwrap();
        let v = k.k_field().generator();
        let ext = k.diff_extension(&k.default_c(), &v).unwrap();
        assert_eq!(ext.algebra.dim(), 4);
        assert!(!ext.algebra.is_associative() && !ext.d_in_base);
        assert!(ext.algebra.nucleus_right().contains_all(&k.k_in_extension(&ext)));
        let w = k.k_field().parse("v^2").unwrap();
        let assoc = k.diff_extension(&k.default_c(), &w).unwrap();
        assert!(assoc.algebra.is_associative() && assoc.d_in_base);
        // t^2 - t only commutes with K for the Euler derivation
        assert!(k.diff_extension(&k.base_field().one(), &v).is_err());
        let e = DiffField::new(2, Derivation::Euler).unwrap();
        let ext = e.diff_extension(&e.default_c(), &v).unwrap();
        assert!(!ext.algebra.is_associative());
        assert!(e.semi_invariance_check(&e.default_c(), &v, std::slice::from_ref(&v))[0]);
    }

    #[test]
    fn char3_predicates() {
        let k = DiffField::new(3, Derivation::Standard).unwrap();
        let kf = k.k_field();
        let v = kf.generator();
        let v3 = kf.parse("v^3").unwrap();
        let r = k.char3_criterion_eval(&v, &kf.zero(), &v3).unwrap();
        assert!(!r.cond1 && !r.cond2);
        let z = kf.parse("v^3+1").unwrap();
        let r = k.char3_criterion_eval(&z, &kf.zero(), &v).unwrap();
        assert!(r.cond1 && r.cond2);
        assert!(k.char3_criterion_eval(&z, &v, &v).is_err());
        let two = DiffField::new(2, Derivation::Standard).unwrap();
        assert!(two.char3_criterion_eval(&v, &kf.zero(), &v).is_err());
    }
}
