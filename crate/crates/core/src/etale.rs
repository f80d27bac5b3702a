//! Étale algebras over prime fields carrying a cyclic group of automorphisms:
//! cyclic field extensions `F_{p^n}/F_p` and split algebras `F_p^n` with the
//! coordinate shift.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldDescriptor, GaloisField, PrimeField};
use crate::exactla::{echelon_basis, unit_vec, Matrix};
use crate::nalg::{frobenius_fixed_space, AlgebraSC};

/// An étale `F_p`-algebra `K = K_0 × ... × K_{c-1}` of dimension `n` with an
/// automorphism `σ` of order `n` whose fixed algebra is `F_p`.
///
/// `σ` sends component `i` to component `perm[i]`, raising to the power
/// `p^frob[i]` on the way. Elements are coordinate vectors over `F_p`,
/// component blocks in order, each block in the power basis of its field.
#[derive(Clone, Debug, PartialEq)]
pub struct GaloisCnAlgebra {
    base: PrimeField,
    components: Vec<GaloisField>,
    perm: Vec<usize>,
    frob: Vec<u32>,
    offsets: Vec<usize>,
    algebra: AlgebraSC<PrimeField>,
    sigma: Matrix<PrimeField>,
}

/// Serialized form: component list, permutation and Frobenius powers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisCnJson {
    pub components: Vec<FieldDescriptor>,
    pub permutation: Vec<usize>,
    pub frobenius: Vec<u32>,
}

/// The stabilizer `⟨σ^s⟩` of an element `d` and the fixed algebra `E` of
/// `σ^s`; `n = s r`.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilizerData {
    pub s: usize,
    pub r: usize,
    /// Echelon basis of `E = Fix(σ^s)`.
    pub fixed_basis: Vec<Vec<u32>>,
}

impl GaloisCnAlgebra {
    pub fn from_components(
        base: PrimeField,
        components: Vec<GaloisField>,
        perm: Vec<usize>,
        frob: Vec<u32>,
    ) -> Result<Self> {
        let c = components.len();
        if c == 0 || perm.len() != c || frob.len() != c {
            return Err(Error::Validation(
                "components, permutation and Frobenius powers must have equal nonzero length".into(),
            ));
        }
        let mut seen = vec![false; c];
        for &j in &perm {
            if j >= c || std::mem::replace(&mut seen[j], true) {
                return Err(Error::Validation("sigma must permute the components".into()));
            }
        }
        for (i, k) in components.iter().enumerate() {
            if k.p() != base.p() {
                return Err(Error::Validation("component characteristic differs from base".into()));
            }
            if components[perm[i]] != *k {
                return Err(Error::Validation(format!(
                    "sigma maps component {i} to a different field"
                )));
            }
        }
        let mut offsets = Vec::with_capacity(c);
        let mut n = 0;
        for k in &components {
            offsets.push(n);
            n += k.degree();
        }
        let f = base;
        let mut unit = vec![0u32; n];
        for &o in &offsets {
            unit[o] = 1;
        }
        let comps = components.clone();
        let offs = offsets.clone();
        let block_of = move |idx: usize| offs.iter().rposition(|&o| o <= idx).unwrap();
        let algebra = AlgebraSC::from_products(&f, n, unit, |i, j| {
            let (bi, bj) = (block_of(i), block_of(j));
            let mut v = vec![0u32; n];
            if bi == bj {
                let k = &comps[bi];
                let o = offsets[bi];
                let wi = k.element_at((k.p() as u64).pow((i - o) as u32)).unwrap();
                let wj = k.element_at((k.p() as u64).pow((j - o) as u32)).unwrap();
                v[o..o + k.degree()].copy_from_slice(&k.mul(&wi, &wj));
            }
            v
        })?;
        let mut alg = GaloisCnAlgebra {
            base,
            components,
            perm,
            frob,
            offsets,
            algebra,
            sigma: Matrix::zeros(&f, n, n),
        };
        let cols: Vec<Vec<u32>> = (0..n).map(|i| alg.apply_sigma(&unit_vec(&f, n, i), 1)).collect();
        alg.sigma = Matrix::from_columns(&f, n, &cols)?;
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        let f = &self.base;
        let mut power = Matrix::identity(f, n);
        for j in 1..=n {
            power = power.mul(&self.sigma)?;
            if power.is_identity() != (j == n) {
                return Err(Error::Validation(format!(
                    "sigma has order {j}, expected {n}"
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (self.algebra.basis(i), self.algebra.basis(j));
                let lhs = self.apply_sigma(&self.algebra.mul(&x, &y), 1);
                let rhs = self.algebra.mul(&self.apply_sigma(&x, 1), &self.apply_sigma(&y, 1));
                if lhs != rhs {
                    return Err(Error::Validation("sigma is not multiplicative".into()));
                }
            }
        }
        if self.fixed_space(1).len() != 1 {
            return Err(Error::Validation("the fixed algebra of sigma is larger than F".into()));
        }
        Ok(())
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    /// `n = dim_F K`, also the order of `σ`.
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn components(&self) -> &[GaloisField] {
        &self.components
    }

    pub fn is_field(&self) -> bool {
        self.components.len() == 1
    }

    /// `K` as a commutative `F`-algebra.
    pub fn algebra(&self) -> &AlgebraSC<PrimeField> {
        &self.algebra
    }

    pub fn sigma_matrix(&self) -> &Matrix<PrimeField> {
        &self.sigma
    }

    /// Matrix of `σ^j` (`j` taken mod `n`, negative allowed).
    pub fn sigma_power_matrix(&self, j: i64) -> Matrix<PrimeField> {
        let n = self.dim() as i64;
        self.sigma.pow(j.rem_euclid(n) as u64).expect("square")
    }

    /// `σ^j(x)`, `j` taken mod `n`.
    pub fn apply_sigma(&self, x: &[u32], j: i64) -> Vec<u32> {
        let n = self.dim() as i64;
        let mut x = x.to_vec();
        for _ in 0..j.rem_euclid(n) {
            let mut y = vec![0u32; x.len()];
            for (i, k) in self.components.iter().enumerate() {
                let (o, d) = (self.offsets[i], k.degree());
                let t = self.offsets[self.perm[i]];
                let img = k.frobenius(&x[o..o + d], self.frob[i]);
                y[t..t + d].copy_from_slice(&img);
            }
            x = y;
        }
        x
    }

    pub fn one(&self) -> Vec<u32> {
        self.algebra.unit().to_vec()
    }

    /// `c · 1`.
    pub fn scalar(&self, c: u32) -> Vec<u32> {
        self.algebra.scalar(&c)
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.algebra.mul(x, y)
    }

    pub fn inverse(&self, x: &[u32]) -> Option<Vec<u32>> {
        let l = self.algebra.left_mul_matrix(x);
        l.solve(&self.one()).ok().flatten().filter(|y| self.mul(x, y) == self.one())
    }

    pub fn is_unit(&self, x: &[u32]) -> bool {
        self.inverse(x).is_some()
    }

    /// `Some(c)` when `x = c · 1`.
    pub fn as_scalar(&self, x: &[u32]) -> Option<u32> {
        let c = x[0];
        (self.scalar(c) == x).then_some(c)
    }

    pub fn in_base(&self, x: &[u32]) -> bool {
        self.as_scalar(x).is_some()
    }

    /// `N(x) = ∏_{j<n} σ^j(x)`.
    pub fn norm(&self, x: &[u32]) -> u32 {
        let mut acc = self.one();
        for j in 0..self.dim() {
            acc = self.mul(&acc, &self.apply_sigma(x, j as i64));
        }
        self.as_scalar(&acc).expect("norm lies in F")
    }

    /// `T(x) = Σ_{j<n} σ^j(x)`.
    pub fn trace(&self, x: &[u32]) -> u32 {
        let mut acc = vec![0u32; self.dim()];
        for j in 0..self.dim() {
            acc = self.algebra.add(&acc, &self.apply_sigma(x, j as i64));
        }
        self.as_scalar(&acc).expect("trace lies in F")
    }

    /// Echelon basis of `Fix(σ^s)`.
    pub fn fixed_space(&self, s: usize) -> Vec<Vec<u32>> {
        let f = &self.base;
        let m = self.sigma_power_matrix(s as i64).sub(&Matrix::identity(f, self.dim())).expect("square");
        echelon_basis(f, self.dim(), &m.kernel())
    }

    /// Smallest `s > 0` with `σ^s(d) = d`, and `E = Fix(σ^s)`.
    pub fn stabilizer(&self, d: &[u32]) -> StabilizerData {
        let n = self.dim();
        let s = (1..=n)
            .find(|&s| n.is_multiple_of(s) && self.apply_sigma(d, s as i64) == d)
            .expect("σ^n = id");
        StabilizerData {
            s,
            r: n / s,
            fixed_basis: self.fixed_space(s),
        }
    }

    /// Every element of `K` in base-`p` coordinate order.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        let p = self.base.p() as u64;
        let n = self.dim();
        (0..p.pow(n as u32)).map(move |mut idx| {
            (0..n)
                .map(|_| {
                    let c = (idx % p) as u32;
                    idx /= p;
                    c
                })
                .collect()
        })
    }

    pub fn units(&self) -> Vec<Vec<u32>> {
        self.elements().filter(|x| self.is_unit(x)).collect()
    }

    pub fn random_unit<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u32> {
        loop {
            let x: Vec<u32> = (0..self.dim()).map(|_| self.base.random(rng)).collect();
            if self.is_unit(&x) {
                return x;
            }
        }
    }

    /// Parses an element: a coordinate list `[c0,...]`, or for a field an
    /// expression in `w` such as `w^2+1`.
    pub fn parse(&self, s: &str) -> Result<Vec<u32>> {
        let s = s.trim();
        if self.is_field() {
            return self.components[0].parse(s);
        }
        let c = crate::exactfield::poly::parse_poly(s, "w", self.base.p())?;
        if !s.starts_with('[') || c.len() > self.dim() {
            return Err(Error::Parse(format!(
                "elements of a split algebra are coordinate lists of length {}",
                self.dim()
            )));
        }
        let mut v = c;
        v.resize(self.dim(), 0);
        Ok(v)
    }

    pub fn format(&self, x: &[u32]) -> String {
        let parts: Vec<String> = x.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    pub fn to_json(&self) -> GaloisCnJson {
        GaloisCnJson {
            components: self.components.iter().map(|k| k.descriptor()).collect(),
            permutation: self.perm.clone(),
            frobenius: self.frob.clone(),
        }
    }

    pub fn from_json(json: &GaloisCnJson) -> Result<Self> {
        let p = json.components.first().map(|c| c.p()).ok_or_else(|| {
            Error::Validation("at least one component required".into())
        })?;
        let comps = json
            .components
            .iter()
            .map(|d| d.galois().ok_or_else(|| Error::Validation("components must be finite fields".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_components(PrimeField::new(p)?, comps, json.permutation.clone(), json.frobenius.clone())
    }

    /// Short human-readable name, e.g. `F4/F2` or `F2^2/F2`.
    pub fn name(&self) -> String {
        let p = self.base.p();
        if self.is_field() {
            format!("F{}/F{}", (p as u64).pow(self.dim() as u32), p)
        } else if self.components.iter().all(|k| k.degree() == 1) {
            format!("F{}^{}/F{}", p, self.dim(), p)
        } else {
            let parts: Vec<String> = self
                .components
                .iter()
                .map(|k| format!("F{}", (p as u64).pow(k.degree() as u32)))
                .collect();
            format!("{}/F{}", parts.join("x"), p)
        }
    }
}

/// `F_{p^n}/F_p` with `σ(x) = x^p`.
pub fn make_cyclic_ext(p: u32, n: usize) -> Result<GaloisCnAlgebra> {
    let k = GaloisField::new(p, n as u32)?;
    GaloisCnAlgebra::from_components(PrimeField::new(p)?, vec![k], vec![0], vec![1])
}

/// `F_p^n` with `σ` the cyclic shift `(x_0, ..., x_{n-1}) -> (x_{n-1}, x_0, ...)`.
pub fn make_split_etale(p: u32, n: usize) -> Result<GaloisCnAlgebra> {
    if n == 0 {
        return Err(Error::Validation("n must be positive".into()));
    }
    let f = PrimeField::new(p)?;
    let comps = vec![GaloisField::prime(p); n];
    let perm = (0..n).map(|i| (i + 1) % n).collect();
    GaloisCnAlgebra::from_components(f, comps, perm, vec![0; n])
}

fn require_commutative_associative<F: Field>(a: &AlgebraSC<F>) -> Result<()> {
    if !a.is_commutative() {
        return Err(Error::Precondition("algebra is not commutative".into()));
    }
    if !a.is_associative() {
        return Err(Error::Precondition("algebra is not associative".into()));
    }
    Ok(())
}

/// Whether `(x, y) -> Tr(L_{xy})` is nondegenerate, which characterizes
/// étale algebras among commutative associative ones.
pub fn trace_form_nondegenerate<F: Field>(a: &AlgebraSC<F>) -> Result<bool> {
    require_commutative_associative(a)?;
    let f = a.field();
    let n = a.dim();
    let trace_of = |x: &[F::Elem]| {
        let l = a.left_mul_matrix(x);
        (0..n).fold(f.zero(), |acc, i| f.add(&acc, l.get(i, i)))
    };
    let traces: Vec<F::Elem> = (0..n).map(|k| trace_of(&a.basis(k))).collect();
    let mut gram = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let t = a
                .basis_product(i, j)
                .iter()
                .fold(f.zero(), |acc, (k, c)| f.add(&acc, &f.mul(c, &traces[*k])));
            gram.set(i, j, t);
        }
    }
    Ok(!f.is_zero(&gram.det()?))
}

/// Number of primitive idempotents of an étale algebra over a finite field,
/// the dimension of the fixed space of `x -> x^q`.
pub fn count_primitive_idempotents<F: Field>(a: &AlgebraSC<F>) -> Result<usize> {
    if !trace_form_nondegenerate(a)? {
        return Err(Error::Precondition("algebra is not étale".into()));
    }
    Ok(frobenius_fixed_space(a)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_extension_data() {
        let k = make_cyclic_ext(2, 2).unwrap();
        let w = k.parse("w").unwrap();
        assert_eq!(k.apply_sigma(&w, 1), vec![1, 1]);
        assert_eq!(k.norm(&w), 1);
        assert_eq!(k.trace(&w), 1);
        assert_eq!(k.norm(&k.one()), 1);
        assert_eq!(k.fixed_space(1), vec![vec![1, 0]]);
        let st = k.stabilizer(&w);
        assert_eq!((st.s, st.r, st.fixed_basis.len()), (2, 1, 2));
        let st = k.stabilizer(&k.one());
        assert_eq!((st.s, st.r, st.fixed_basis.len()), (1, 2, 1));
    }

    #[test]
    fn stabilizer_inside_f16() {
        let k = make_cyclic_ext(2, 4).unwrap();
        // an element of F_4 \ F_2 inside F_16: a cube root of unity
        let d = k
            .elements()
            .find(|x| !k.in_base(x) && k.apply_sigma(x, 2) == *x)
            .unwrap();
        let st = k.stabilizer(&d);
        assert_eq!((st.s, st.r, st.fixed_basis.len()), (2, 2, 2));
    }

    #[test]
    fn split_etale_data() {
        let k = make_split_etale(2, 2).unwrap();
        assert_eq!(k.apply_sigma(&[1, 0], 1), vec![0, 1]);
        let k3 = make_split_etale(3, 3).unwrap();
        assert_eq!(k3.fixed_space(1), vec![vec![1, 1, 1]]);
        assert_eq!(k3.norm(&[1, 2, 2]), 1);
        assert_eq!(k3.trace(&[1, 2, 2]), 2);
        assert!(!k3.is_unit(&[1, 0, 2]));
    }

    #[test]
    fn bad_sigma_is_rejected() {
        let f = PrimeField::new(2).unwrap();
        let k = GaloisField::new(2, 2).unwrap();
        // identity on F_4 has order 1 and fixes all of K
        assert!(GaloisCnAlgebra::from_components(f, vec![k], vec![0], vec![0]).is_err());
        // F_2 x F_2 with trivial permutation
        let k1 = GaloisField::prime(2);
        assert!(GaloisCnAlgebra::from_components(f, vec![k1.clone(), k1], vec![0, 1], vec![0, 0]).is_err());
    }

    #[test]
    fn trace_form_examples() {
        let k = make_cyclic_ext(2, 2).unwrap();
        assert!(trace_form_nondegenerate(k.algebra()).unwrap());
        let split = make_split_etale(2, 2).unwrap();
        assert!(trace_form_nondegenerate(split.algebra()).unwrap());
        let f = PrimeField::new(2).unwrap();
        let dual = AlgebraSC::from_products(&f, 2, vec![1, 0], |i, j| match i + j {
            0 => vec![1, 0],
            1 => vec![0, 1],
            _ => vec![0, 0],
        })
        .unwrap();
        assert!(!trace_form_nondegenerate(&dual).unwrap());
        assert!(count_primitive_idempotents(&dual).is_err());
        let m = crate::nalg::matrix_algebra(&f, 2);
        assert!(matches!(trace_form_nondegenerate(&m), Err(Error::Precondition(_))));
    }

    #[test]
    fn idempotent_counts() {
        let k = make_cyclic_ext(2, 2).unwrap();
        assert_eq!(count_primitive_idempotents(k.algebra()).unwrap(), 1);
        let kk = k.algebra().tensor(k.algebra()).unwrap();
        assert_eq!(count_primitive_idempotents(&kk).unwrap(), 2);
        let s = make_split_etale(3, 3).unwrap();
        assert_eq!(count_primitive_idempotents(s.algebra()).unwrap(), 3);
    }

    #[test]
    fn json_round_trip() {
        let k = make_split_etale(3, 2).unwrap();
        let json = k.to_json();
        assert_eq!(GaloisCnAlgebra::from_json(&json).unwrap(), k);
        let text = serde_json::to_string(&json).unwrap();
        assert_eq!(serde_json::from_str::<GaloisCnJson>(&text).unwrap(), json);
    }
}
