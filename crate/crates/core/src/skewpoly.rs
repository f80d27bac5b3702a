//! Skew polynomial rings `S[t; σ, δ]` over an associative algebra `S`, with
//! `t a = σ(a) t + δ(a)`.
//!
//! The ring is determined by its coefficient data, so polynomial arithmetic
//! lives on [`CoefficientRing`]. Polynomials are lists of coefficients in
//! `S` (coordinate vectors over the base field), lowest degree first.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::exactla::{is_zero_vec, unit_vec, Matrix};
use crate::nalg::{is_division_exhaustive, AlgebraSC};

/// `S` with a unital automorphism `σ` and a left `σ`-derivation `δ`,
/// `δ(ab) = σ(a)δ(b) + δ(a)b`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientRing<F: Field> {
    s: AlgebraSC<F>,
    sigma: Matrix<F>,
    sigma_inv: Matrix<F>,
    delta: Matrix<F>,
    delta_zero: bool,
}

/// `a_0 + a_1 t + ... + a_n t^n`, trailing zero coefficients removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewPolynomial<E> {
    coeffs: Vec<Vec<E>>,
}

impl<E: Clone> SkewPolynomial<E> {
    pub fn coeffs(&self) -> &[Vec<E>] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&[E]> {
        self.coeffs.last().map(|c| c.as_slice())
    }
}

/// The operators `Δ_{n,j}` with `t^n a = Σ_j Δ_{n,j}(a) t^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaOperator<F: Field> {
    table: Vec<Vec<Matrix<F>>>,
}

impl<F: Field> DeltaOperator<F> {
    /// `Δ_{n,j}`, zero for `j > n`.
    pub fn get(&self, n: usize, j: usize) -> &Matrix<F> {
        &self.table[n][j]
    }

    pub fn max_n(&self) -> usize {
        self.table.len() - 1
    }
}

/// Result of an exhaustive search for monic right divisors.
#[derive(Clone, Debug, PartialEq)]
pub struct IrreducibilityReport<E> {
    pub irreducible: bool,
    /// A monic right divisor of degree between 1 and `deg f - 1`.
    pub witness: Option<SkewPolynomial<E>>,
    pub explored: u64,
}

/// Result of the norm test for `t^m - d`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormCriterionReport<E> {
    /// No `z` has `σ^{m-1}(z) ⋯ σ(z) z = d`.
    pub holds: bool,
    pub witness: Option<Vec<E>>,
    /// Whether the criterion is known to characterize irreducibility for
    /// this `m`: always for `m = 2, 3`; for other primes `m` only when the
    /// base field has a primitive `m`-th root of unity.
    pub guaranteed: bool,
}

type Elem<F> = <F as Field>::Elem;
type Poly<F> = SkewPolynomial<Elem<F>>;

impl<F: Field> CoefficientRing<F> {
    /// Validates `S` associative, `σ` a unital ring automorphism and `δ` a
    /// `σ`-derivation, all checked on basis elements.
    pub fn new(s: AlgebraSC<F>, sigma: Matrix<F>, delta: Matrix<F>) -> Result<Self> {
        let n = s.dim();
        for m in [&sigma, &delta] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: m.rows(),
                });
            }
        }
        if !s.is_associative() {
            return Err(Error::Validation("coefficient algebra must be associative".into()));
        }
        let sigma_inv = sigma
            .inverse()?
            .ok_or_else(|| Error::Validation("sigma is not invertible".into()))?;
        let ap = |m: &Matrix<F>, x: &[Elem<F>]| m.mul_vec(x).expect("square");
        if ap(&sigma, s.unit()) != s.unit() {
            return Err(Error::Validation("sigma does not fix the unit".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (s.basis(i), s.basis(j));
                let ab = s.mul(&a, &b);
                if ap(&sigma, &ab) != s.mul(&ap(&sigma, &a), &ap(&sigma, &b)) {
                    return Err(Error::Validation(format!(
                        "sigma is not multiplicative on basis pair ({i}, {j})"
                    )));
                }
                let lhs = ap(&delta, &ab);
                let rhs = s.add(
                    &s.mul(&ap(&sigma, &a), &ap(&delta, &b)),
                    &s.mul(&ap(&delta, &a), &b),
                );
                if lhs != rhs {
                    return Err(Error::Validation(format!(
                        "delta violates the twisted Leibniz rule on basis pair ({i}, {j})"
                    )));
                }
            }
        }
        let delta_zero = delta.is_zero();
        Ok(CoefficientRing {
            s,
            sigma,
            sigma_inv,
            delta,
            delta_zero,
        })
    }

    /// `S[t; σ]` with `δ = 0`.
    pub fn twisted(s: AlgebraSC<F>, sigma: Matrix<F>) -> Result<Self> {
        let n = s.dim();
        let zero = Matrix::zeros(s.field(), n, n);
        Self::new(s, sigma, zero)
    }

    pub fn algebra(&self) -> &AlgebraSC<F> {
        &self.s
    }

    pub fn field(&self) -> &F {
        self.s.field()
    }

    pub fn sigma(&self) -> &Matrix<F> {
        &self.sigma
    }

    pub fn sigma_inverse(&self) -> &Matrix<F> {
        &self.sigma_inv
    }

    pub fn delta(&self) -> &Matrix<F> {
        &self.delta
    }

    pub fn has_derivation(&self) -> bool {
        !self.delta_zero
    }

    /// Dimension of `S` over the base field.
    pub fn coeff_dim(&self) -> usize {
        self.s.dim()
    }

    pub fn apply_sigma(&self, a: &[Elem<F>]) -> Vec<Elem<F>> {
        self.sigma.mul_vec(a).expect("square")
    }

    pub fn apply_sigma_inv(&self, a: &[Elem<F>]) -> Vec<Elem<F>> {
        self.sigma_inv.mul_vec(a).expect("square")
    }

    /// `σ^k(a)` for any integer `k`.
    pub fn apply_sigma_pow(&self, a: &[Elem<F>], k: i64) -> Vec<Elem<F>> {
        let mut x = a.to_vec();
        for _ in 0..k.unsigned_abs() {
            x = if k > 0 { self.apply_sigma(&x) } else { self.apply_sigma_inv(&x) };
        }
        x
    }

    pub fn apply_delta(&self, a: &[Elem<F>]) -> Vec<Elem<F>> {
        if self.delta_zero {
            return self.s.zero();
        }
        self.delta.mul_vec(a).expect("square")
    }

    /// Inverse of `a` in `S`, if any.
    pub fn inverse(&self, a: &[Elem<F>]) -> Option<Vec<Elem<F>>> {
        let l = self.s.left_mul_matrix(a);
        let b = l.solve(self.s.unit()).ok().flatten()?;
        (self.s.mul(&b, a) == self.s.unit()).then_some(b)
    }

    /// `S^op[t; σ^{-1}, -δσ^{-1}]`, the target of [`Self::psi`].
    pub fn opposite_ring(&self) -> Self {
        let delta = self.delta.mul(&self.sigma_inv).expect("square");
        let delta = delta.scale(&self.field().neg(&self.field().one()));
        Self::new(self.s.opposite(), self.sigma_inv.clone(), delta)
            .expect("the opposite of a valid ring is valid")
    }

    // Polynomial construction -------------------------------------------

    pub fn poly(&self, mut coeffs: Vec<Vec<Elem<F>>>) -> Poly<F> {
        let f = self.field();
        while coeffs.last().is_some_and(|c| is_zero_vec(f, c)) {
            coeffs.pop();
        }
        SkewPolynomial { coeffs }
    }

    pub fn zero(&self) -> Poly<F> {
        SkewPolynomial { coeffs: Vec::new() }
    }

    pub fn one(&self) -> Poly<F> {
        self.constant(self.s.unit())
    }

    pub fn constant(&self, a: &[Elem<F>]) -> Poly<F> {
        self.poly(vec![a.to_vec()])
    }

    /// `a t^k`.
    pub fn monomial(&self, a: &[Elem<F>], k: usize) -> Poly<F> {
        let mut coeffs = vec![self.s.zero(); k];
        coeffs.push(a.to_vec());
        self.poly(coeffs)
    }

    pub fn t(&self) -> Poly<F> {
        self.monomial(self.s.unit(), 1)
    }

    /// `t^m - d`.
    pub fn binomial(&self, m: usize, d: &[Elem<F>]) -> Poly<F> {
        let mut coeffs = vec![self.s.zero(); m + 1];
        coeffs[0] = self.s.scale(&self.field().neg(&self.field().one()), d);
        coeffs[m] = self.s.unit().to_vec();
        self.poly(coeffs)
    }

    pub fn is_monic(&self, f: &Poly<F>) -> bool {
        f.leading() == Some(self.s.unit())
    }

    // Arithmetic ------------------------------------------------------------

    pub fn add(&self, g: &Poly<F>, h: &Poly<F>) -> Poly<F> {
        let n = g.coeffs.len().max(h.coeffs.len());
        let zero = self.s.zero();
        let coeffs = (0..n)
            .map(|k| {
                let a = g.coeffs.get(k).unwrap_or(&zero);
                let b = h.coeffs.get(k).unwrap_or(&zero);
                self.s.add(a, b)
            })
            .collect();
        self.poly(coeffs)
    }

    pub fn neg(&self, g: &Poly<F>) -> Poly<F> {
        let m1 = self.field().neg(&self.field().one());
        SkewPolynomial {
            coeffs: g.coeffs.iter().map(|c| self.s.scale(&m1, c)).collect(),
        }
    }

    pub fn sub(&self, g: &Poly<F>, h: &Poly<F>) -> Poly<F> {
        self.add(g, &self.neg(h))
    }

    /// `a g` for `a ∈ S`.
    pub fn left_scale(&self, a: &[Elem<F>], g: &Poly<F>) -> Poly<F> {
        self.poly(g.coeffs.iter().map(|c| self.s.mul(a, c)).collect())
    }

    /// `t h`, using `t c = σ(c) t + δ(c)`.
    pub fn mul_t(&self, h: &Poly<F>) -> Poly<F> {
        let mut coeffs = vec![self.s.zero(); h.coeffs.len() + 1];
        for (k, c) in h.coeffs.iter().enumerate() {
            coeffs[k + 1] = self.s.add(&coeffs[k + 1], &self.apply_sigma(c));
            if !self.delta_zero {
                coeffs[k] = self.s.add(&coeffs[k], &self.apply_delta(c));
            }
        }
        self.poly(coeffs)
    }

    pub fn mul(&self, g: &Poly<F>, h: &Poly<F>) -> Poly<F> {
        let mut acc = self.zero();
        let mut cur = h.clone();
        for (i, a) in g.coeffs.iter().enumerate() {
            if i > 0 {
                cur = self.mul_t(&cur);
            }
            if !is_zero_vec(self.field(), a) {
                acc = self.add(&acc, &self.left_scale(a, &cur));
            }
        }
        acc
    }

    pub fn pow(&self, g: &Poly<F>, e: u32) -> Poly<F> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, g);
        }
        acc
    }

    fn leading_inverse(&self, f: &Poly<F>) -> Result<Vec<Elem<F>>> {
        let lead = f.leading().ok_or(Error::DivisionByZero)?;
        self.inverse(lead)
            .ok_or_else(|| Error::Precondition("leading coefficient is not invertible".into()))
    }

    /// `(q, r)` with `g = q f + r` and `deg r < deg f`.
    pub fn right_divide(&self, g: &Poly<F>, f: &Poly<F>) -> Result<(Poly<F>, Poly<F>)> {
        let lead_inv = self.leading_inverse(f)?;
        let m = f.degree().expect("nonzero");
        let mut q = self.zero();
        let mut r = g.clone();
        while let Some(l) = r.degree().filter(|&l| l >= m) {
            // (c t^{l-m}) f has leading coefficient c σ^{l-m}(f_m)
            let inv = self.apply_sigma_pow(&lead_inv, (l - m) as i64);
            let c = self.s.mul(&r.coeffs[l], &inv);
            let term = self.monomial(&c, l - m);
            r = self.sub(&r, &self.mul(&term, f));
            q = self.add(&q, &term);
            debug_assert!(r.degree().is_none_or(|d| d < l));
        }
        if self.add(&self.mul(&q, f), &r) != *g {
            return Err(Error::Validation("right division failed to reconstruct".into()));
        }
        Ok((q, r))
    }

    /// `(q, r)` with `g = f q + r` and `deg r < deg f`.
    pub fn left_divide(&self, g: &Poly<F>, f: &Poly<F>) -> Result<(Poly<F>, Poly<F>)> {
        let lead_inv = self.leading_inverse(f)?;
        let m = f.degree().expect("nonzero");
        let mut q = self.zero();
        let mut r = g.clone();
        while let Some(l) = r.degree().filter(|&l| l >= m) {
            // f (c t^{l-m}) has leading coefficient f_m σ^m(c)
            let c = self.apply_sigma_pow(&self.s.mul(&lead_inv, &r.coeffs[l]), -(m as i64));
            let term = self.monomial(&c, l - m);
            r = self.sub(&r, &self.mul(f, &term));
            q = self.add(&q, &term);
            debug_assert!(r.degree().is_none_or(|d| d < l));
        }
        if self.add(&self.mul(f, &q), &r) != *g {
            return Err(Error::Validation("left division failed to reconstruct".into()));
        }
        Ok((q, r))
    }

    pub fn mod_r(&self, g: &Poly<F>, f: &Poly<F>) -> Result<Poly<F>> {
        Ok(self.right_divide(g, f)?.1)
    }

    pub fn mod_l(&self, g: &Poly<F>, f: &Poly<F>) -> Result<Poly<F>> {
        Ok(self.left_divide(g, f)?.1)
    }

    // Δ operators and ψ -------------------------------------------------

    /// `Δ_{n,j}` for `n ≤ max_n` from `Δ_{n,j} = δ Δ_{n-1,j} + σ Δ_{n-1,j-1}`.
    pub fn delta_operators(&self, max_n: usize) -> DeltaOperator<F> {
        let f = self.field();
        let d = self.s.dim();
        let zero = Matrix::zeros(f, d, d);
        let mut table = vec![vec![Matrix::identity(f, d)]];
        for n in 1..=max_n {
            let prev = &table[n - 1];
            let row = (0..=n)
                .map(|j| {
                    let mut m = zero.clone();
                    if j < n && !self.delta_zero {
                        m = m.add(&self.delta.mul(&prev[j]).unwrap()).unwrap();
                    }
                    if j >= 1 {
                        m = m.add(&self.sigma.mul(&prev[j - 1]).unwrap()).unwrap();
                    }
                    m
                })
                .collect();
            table.push(row);
        }
        for row in table.iter_mut() {
            row.resize(max_n + 1, zero.clone());
        }
        DeltaOperator { table }
    }

    /// The anti-isomorphism `ψ: S[t;σ,δ] → S^op[t;σ^{-1},-δσ^{-1}]` fixing
    /// `S` and `t`: `ψ(Σ a_k t^k) = Σ_k Σ_j Δ'_{k,j}(a_k) t^j` with `Δ'` the
    /// operators of the target ring.
    pub fn psi(&self, g: &Poly<F>) -> Poly<F> {
        let target = self.opposite_ring();
        self.psi_into(&target, g)
    }

    /// [`Self::psi`] with a precomputed target ring.
    pub fn psi_into(&self, target: &Self, g: &Poly<F>) -> Poly<F> {
        let Some(deg) = g.degree() else {
            return self.zero();
        };
        let ops = target.delta_operators(deg);
        let mut coeffs = vec![self.s.zero(); deg + 1];
        for (k, a) in g.coeffs.iter().enumerate() {
            for (j, slot) in coeffs.iter_mut().enumerate().take(k + 1) {
                let img = ops.get(k, j).mul_vec(a).expect("square");
                *slot = self.s.add(slot, &img);
            }
        }
        target.poly(coeffs)
    }

    // Invariance and divisibility ---------------------------------------

    /// `f R ⊆ R f`, tested on the ring generators `t` and a basis of `S`:
    /// if `f x ∈ R f` for every generator `x` then `f x y = (r f) y =
    /// r (f y) ∈ R f`, so the condition propagates to all products.
    pub fn is_right_invariant(&self, f: &Poly<F>) -> Result<bool> {
        if !self.is_monic(f) {
            return Err(Error::Precondition("f must be monic".into()));
        }
        let mut generators = vec![self.t()];
        generators.extend((0..self.s.dim()).map(|i| self.constant(&self.s.basis(i))));
        for x in generators {
            if !self.mod_r(&self.mul(f, &x), f)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `g` (degree below `m`) on the basis `s_i t^j`, index
    /// `j * dim S + i`.
    pub fn to_coords(&self, g: &Poly<F>, m: usize) -> Vec<Elem<F>> {
        let d = self.s.dim();
        let mut v = vec![self.field().zero(); d * m];
        for (j, c) in g.coeffs.iter().enumerate() {
            assert!(j < m, "degree {j} does not fit below {m}");
            v[j * d..(j + 1) * d].clone_from_slice(c);
        }
        v
    }

    pub fn from_coords(&self, v: &[Elem<F>]) -> Poly<F> {
        let d = self.s.dim();
        self.poly(v.chunks(d).map(|c| c.to_vec()).collect())
    }

    /// `{g : deg g < m, f g ∈ R f}` as an echelon basis in the coordinates
    /// of [`Self::to_coords`]. For `m ≥ 2` this is the right nucleus of the
    /// Petit algebra; for `m = 1` it can be smaller.
    pub fn eigenspace(&self, f: &Poly<F>) -> Result<Vec<Vec<Elem<F>>>> {
        let m = f.degree().ok_or(Error::DivisionByZero)?;
        let d = self.s.dim();
        let n = d * m;
        let fld = self.field();
        let cols = (0..n)
            .map(|idx| {
                let g = self.from_coords(&unit_vec(fld, n, idx));
                Ok(self.to_coords(&self.mod_r(&self.mul(f, &g), f)?, m))
            })
            .collect::<Result<Vec<_>>>()?;
        let map = Matrix::from_columns(fld, n, &cols)?;
        Ok(crate::exactla::echelon_basis(fld, n, &map.kernel()))
    }

    fn require_finite_field_coefficients(&self) -> Result<Vec<Vec<Elem<F>>>> {
        let f = self.field();
        let q = f
            .size()
            .ok_or_else(|| Error::Unsupported("exhaustive search over an infinite field".into()))?;
        let d = self.s.dim();
        let total = q.checked_pow(d as u32).filter(|&t| t <= 1 << 20).ok_or_else(|| {
            Error::Unsupported("coefficient ring too large to enumerate".into())
        })?;
        if !self.s.is_commutative() || !is_division_exhaustive(&self.s, total)?.is_division {
            return Err(Error::Precondition("coefficient ring must be a finite field".into()));
        }
        let elems = f.elements().expect("finite");
        Ok((0..total)
            .map(|mut idx| {
                (0..d)
                    .map(|_| {
                        let e = elems[(idx % q) as usize].clone();
                        idx /= q;
                        e
                    })
                    .collect()
            })
            .collect())
    }

    /// Searches every monic `h` with `1 ≤ deg h < deg f` for a right divisor
    /// of `f`, degree by degree, stopping at the first hit in enumeration
    /// order. Requires `S` to be a finite field.
    pub fn is_irreducible_exhaustive(&self, f: &Poly<F>, cap: u64) -> Result<IrreducibilityReport<Elem<F>>> {
        if !self.is_monic(f) {
            return Err(Error::Precondition("f must be monic".into()));
        }
        let elems = self.require_finite_field_coefficients()?;
        let m = f.degree().expect("monic");
        let k_size = elems.len() as u64;
        let mut explored: u64 = 0;
        for deg in 1..m {
            let count = k_size.checked_pow(deg as u32).unwrap_or(u64::MAX);
            let budget = count.min(cap.saturating_sub(explored));
            let hit = (0..budget).into_par_iter().find_map_first(|mut idx| {
                let mut coeffs = Vec::with_capacity(deg + 1);
                for _ in 0..deg {
                    coeffs.push(elems[(idx % k_size) as usize].clone());
                    idx /= k_size;
                }
                coeffs.push(self.s.unit().to_vec());
                let h = self.poly(coeffs);
                let r = self.mod_r(f, &h).expect("monic divisor");
                r.is_zero().then_some(h)
            });
            if let Some(h) = hit {
                let pos = self.candidate_index(&h, &elems);
                return Ok(IrreducibilityReport {
                    irreducible: false,
                    witness: Some(h),
                    explored: explored + pos + 1,
                });
            }
            explored += budget;
            if budget < count {
                return Err(Error::CapExceeded {
                    cap,
                    explored,
                    context: format!("no right divisor among candidates up to degree {deg}"),
                });
            }
        }
        Ok(IrreducibilityReport {
            irreducible: true,
            witness: None,
            explored,
        })
    }

    fn candidate_index(&self, h: &Poly<F>, elems: &[Vec<Elem<F>>]) -> u64 {
        let q = elems.len() as u64;
        let deg = h.degree().unwrap();
        h.coeffs[..deg].iter().rev().fold(0, |acc, c| {
            acc * q + elems.iter().position(|e| e == c).unwrap() as u64
        })
    }

    /// `σ^{m-1}(z) ⋯ σ(z) z`.
    pub fn twisted_norm(&self, z: &[Elem<F>], m: usize) -> Vec<Elem<F>> {
        let mut acc = z.to_vec();
        let mut cur = z.to_vec();
        for _ in 1..m {
            cur = self.apply_sigma(&cur);
            acc = self.s.mul(&cur, &acc);
        }
        acc
    }

    /// For `f = t^m - d` over a finite field `S`: whether `d` avoids every
    /// twisted norm `σ^{m-1}(z) ⋯ σ(z) z`.
    pub fn norm_criterion(&self, f: &Poly<F>) -> Result<NormCriterionReport<Elem<F>>> {
        let m = f.degree().filter(|_| self.is_monic(f)).ok_or_else(|| {
            Error::Precondition("f must be monic".into())
        })?;
        if f.coeffs[1..m].iter().any(|c| !is_zero_vec(self.field(), c)) {
            return Err(Error::Precondition("f must have the form t^m - d".into()));
        }
        if self.has_derivation() {
            return Err(Error::Precondition("norm criterion needs δ = 0".into()));
        }
        let elems = self.require_finite_field_coefficients()?;
        let d = self.s.scale(&self.field().neg(&self.field().one()), &f.coeffs[0]);
        let witness = elems
            .par_iter()
            .find_first(|z| self.twisted_norm(z, m) == d)
            .cloned();
        let q = self.field().size().expect("finite");
        let guaranteed = m == 2 || m == 3 || (crate::exactfield::poly::is_prime(m as u64) && (q - 1).is_multiple_of(m as u64));
        Ok(NormCriterionReport {
            holds: witness.is_none(),
            witness,
            guaranteed,
        })
    }

    /// `a_0 + a_1*t + ...` with coefficients as coordinate lists.
    pub fn format(&self, g: &Poly<F>) -> String {
        if g.is_zero() {
            return "0".to_string();
        }
        let f = self.field();
        let terms: Vec<String> = g
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !is_zero_vec(f, c))
            .map(|(k, c)| {
                let parts: Vec<String> = c.iter().map(|x| f.format(x)).collect();
                let coef = format!("[{}]", parts.join(","));
                match k {
                    0 => coef,
                    1 => format!("{coef}*t"),
                    _ => format!("{coef}*t^{k}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::etale::make_cyclic_ext;
    use crate::exactfield::PrimeField;

    fn f4_ring() -> CoefficientRing<PrimeField> {
        let k = make_cyclic_ext(2, 2).unwrap();
        CoefficientRing::twisted(k.algebra().clone(), k.sigma_matrix().clone()).unwrap()
    }

    const W: [u32; 2] = [0, 1];
    const W2: [u32; 2] = [1, 1];

    #[test]
    fn commutation_rule() {
        let r = f4_ring();
        let tw = r.mul(&r.t(), &r.constant(&W));
        assert_eq!(tw, r.monomial(&W2, 1));
    }

    #[test]
    fn right_division_examples() {
        let r = f4_ring();
        let t2 = r.monomial(&[1, 0], 2);
        let f = r.add(&r.t(), &r.constant(&W)); // t - w = t + w in char 2
        let (q, rem) = r.right_divide(&t2, &f).unwrap();
        assert_eq!(q, r.add(&r.t(), &r.constant(&W2)));
        assert_eq!(rem, r.one());
        let (q, rem) = r.right_divide(&f, &f).unwrap();
        assert_eq!((q, rem), (r.one(), r.zero()));
        let (q, rem) = r.right_divide(&r.one(), &f).unwrap();
        assert_eq!((q, rem), (r.zero(), r.one()));
        let g = r.binomial(2, &W);
        assert_eq!(r.mod_r(&t2, &g).unwrap(), r.constant(&W));
        assert_eq!(r.mod_l(&t2, &g).unwrap(), r.constant(&W));
        let (ql, rl) = r.left_divide(&t2, &f).unwrap();
        assert_eq!(r.add(&r.mul(&f, &ql), &rl), t2);
    }

    #[test]
    fn right_invariance_examples() {
        let r = f4_ring();
        assert!(r.is_right_invariant(&r.binomial(2, &[1, 0])).unwrap());
        assert!(!r.is_right_invariant(&r.binomial(2, &W)).unwrap());
        assert!(r.is_right_invariant(&r.monomial(&[1, 0], 2)).unwrap());
    }

    #[test]
    fn irreducibility_examples() {
        let r = f4_ring();
        let rep = r.is_irreducible_exhaustive(&r.binomial(2, &W), 1000).unwrap();
        assert!(rep.irreducible);
        let rep = r.is_irreducible_exhaustive(&r.binomial(2, &[1, 0]), 1000).unwrap();
        assert!(!rep.irreducible);
        let h = rep.witness.unwrap();
        assert!(r.mod_r(&r.binomial(2, &[1, 0]), &h).unwrap().is_zero());
        assert!(r.is_irreducible_exhaustive(&r.t(), 10).unwrap().irreducible);
        let n = r.norm_criterion(&r.binomial(2, &W)).unwrap();
        assert!(n.holds && n.guaranteed);
        let n = r.norm_criterion(&r.binomial(2, &[1, 0])).unwrap();
        assert_eq!(n.witness, Some(vec![1, 0]));
    }

    #[test]
    fn psi_on_binomials_and_involution() {
        let r = f4_ring();
        let f = r.binomial(2, &W);
        let op = r.opposite_ring();
        let pf = r.psi(&f);
        // σ^{-2}(w) = w
        assert_eq!(pf, op.binomial(2, &W));
        assert_eq!(op.psi(&pf), f);
        let g = r.poly(vec![W.to_vec(), W2.to_vec(), vec![1, 0]]);
        assert_eq!(pf.coeffs().len(), 3);
        assert_eq!(op.psi(&r.psi(&g)), g);
        // δ = 0: coefficient-wise σ^{-k}
        let expected = op.poly(vec![W.to_vec(), r.apply_sigma_inv(&W2), vec![1, 0]]);
        assert_eq!(r.psi(&g), expected);
    }

    #[test]
    fn delta_table_collapses_without_derivation() {
        let r = f4_ring();
        let ops = r.delta_operators(3);
        assert!(ops.get(0, 0).is_identity());
        assert_eq!(ops.get(3, 3), &r.sigma().pow(3).unwrap());
        for j in 0..3 {
            assert!(ops.get(3, j).is_zero());
        }
    }

    #[test]
    fn validation_rejects_bad_data() {
        let k = make_cyclic_ext(2, 2).unwrap();
        let f = PrimeField::new(2).unwrap();
        let singular = Matrix::zeros(&f, 2, 2);
        assert!(CoefficientRing::twisted(k.algebra().clone(), singular).is_err());
        // invertible but moves the unit
        let m = Matrix::from_rows(&f, vec![vec![1, 0], vec![1, 1]]).unwrap();
        assert!(CoefficientRing::twisted(k.algebra().clone(), m).is_err());
        // identity with a nonzero constant "derivation"
        let id = Matrix::identity(&f, 2);
        assert!(CoefficientRing::new(k.algebra().clone(), id.clone(), id).is_err());
    }
}
