//! Finite-dimensional nonassociative algebras given by structure constants.

mod commutative;
mod division;
mod iso;
mod json;
mod nuclei;

pub use commutative::{atoms_commutative, frobenius_fixed_space, nilradical_dim, primitive_idempotents, Atom};
pub use division::{find_zero_divisor_pair, is_division_exhaustive, DivisionReport};
pub use iso::{find_isomorphism_exhaustive, verify_isomorphism};
pub use json::{AlgebraJson, AnyAlgebra};
pub use nuclei::{NucleusKind, Subalgebra};

use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::exactla::{axpy, is_zero_vec, unit_vec, Matrix};

/// An `N`-dimensional algebra with `b_i b_j = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSC<F: Field> {
    field: F,
    dim: usize,
    sc: Vec<F::Elem>,
    sparse: Vec<Vec<(usize, F::Elem)>>,
    unit: Vec<F::Elem>,
}

/// A witness that some identity fails on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisWitness {
    pub indices: Vec<usize>,
}

impl<F: Field> AlgebraSC<F> {
    /// Builds an algebra from a dense `N x N x N` table, verifying the unit.
    pub fn new(field: &F, dim: usize, sc: Vec<F::Elem>, unit: Vec<F::Elem>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Validation("algebra dimension must be positive".into()));
        }
        if sc.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: sc.len(),
            });
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: unit.len(),
            });
        }
        let sparse = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = &sc[ij * dim + k];
                        (!field.is_zero(c)).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        let alg = AlgebraSC {
            field: field.clone(),
            dim,
            sc,
            sparse,
            unit,
        };
        for i in 0..dim {
            let e = unit_vec(field, dim, i);
            if alg.mul(&alg.unit, &e) != e || alg.mul(&e, &alg.unit) != e {
                return Err(Error::Validation(format!(
                    "unit does not act as identity on basis element {i}"
                )));
            }
        }
        Ok(alg)
    }

    /// Builds an algebra from the products of basis elements.
    pub fn from_products(
        field: &F,
        dim: usize,
        unit: Vec<F::Elem>,
        mut product: impl FnMut(usize, usize) -> Vec<F::Elem>,
    ) -> Result<Self> {
        let mut sc = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: v.len(),
                    });
                }
                sc.extend(v);
            }
        }
        Self::new(field, dim, sc, unit)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    pub fn sc(&self, i: usize, j: usize, k: usize) -> &F::Elem {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero coordinates of `b_i b_j`.
    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.sparse[i * self.dim + j]
    }

    pub fn basis(&self, i: usize) -> Vec<F::Elem> {
        unit_vec(&self.field, self.dim, i)
    }

    pub fn zero(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim]
    }

    /// `x * y` with dimension checks.
    pub fn multiply(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: v.len(),
                });
            }
        }
        Ok(self.mul(x, y))
    }

    /// `x * y`; panics on wrong lengths.
    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim;
        assert!(x.len() == n && y.len() == n, "element length must be {n}");
        let mut out = vec![f.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, s) in &self.sparse[i * n + j] {
                    out[*k] = f.add(&out[*k], &f.mul(&c, s));
                }
            }
        }
        out
    }

    /// `x * b_j`.
    pub fn mul_basis_right(&self, x: &[F::Elem], j: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim;
        let mut out = vec![f.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (k, s) in &self.sparse[i * n + j] {
                out[*k] = f.add(&out[*k], &f.mul(xi, s));
            }
        }
        out
    }

    /// `b_i * y`.
    pub fn mul_basis_left(&self, i: usize, y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim;
        let mut out = vec![f.zero(); n];
        for (j, yj) in y.iter().enumerate() {
            if f.is_zero(yj) {
                continue;
            }
            for (k, s) in &self.sparse[i * n + j] {
                out[*k] = f.add(&out[*k], &f.mul(yj, s));
            }
        }
        out
    }

    /// Expands a sparse coordinate list into a vector.
    pub fn densify(&self, sparse: &[(usize, F::Elem)]) -> Vec<F::Elem> {
        let mut v = self.zero();
        for (k, c) in sparse {
            v[*k] = c.clone();
        }
        v
    }

    pub fn add(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().zip(y).map(|(a, b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, c: &F::Elem, x: &[F::Elem]) -> Vec<F::Elem> {
        x.iter().map(|a| self.field.mul(c, a)).collect()
    }

    /// `c * 1`.
    pub fn scalar(&self, c: &F::Elem) -> Vec<F::Elem> {
        self.scale(c, &self.unit)
    }

    /// `(xy)z - x(yz)`.
    pub fn associator(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> Vec<F::Elem> {
        self.sub(&self.mul(&self.mul(x, y), z), &self.mul(x, &self.mul(y, z)))
    }

    pub fn commutator(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        self.sub(&self.mul(x, y), &self.mul(y, x))
    }

    /// `x^e` by repeated left multiplication `x(x(...x))`.
    pub fn power_left(&self, x: &[F::Elem], e: u64) -> Vec<F::Elem> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(x, &acc);
        }
        acc
    }

    /// `x^e` by squaring; only meaningful when `x` generates an associative
    /// subalgebra (for example inside a commutative associative algebra).
    pub fn power(&self, x: &[F::Elem], mut e: u64) -> Vec<F::Elem> {
        let mut acc = self.unit.clone();
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Matrix of `y -> x y`.
    pub fn left_mul_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim).map(|j| self.mul_basis_right(x, j)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols).expect("square")
    }

    /// Matrix of `y -> y x`.
    pub fn right_mul_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim).map(|i| self.mul_basis_left(i, x)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols).expect("square")
    }

    /// First basis triple with nonzero associator, if any.
    pub fn associativity_witness(&self) -> Option<BasisWitness> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.densify(self.basis_product(i, j));
                for k in 0..n {
                    let left = self.mul_basis_right(&ij, k);
                    let jk = self.densify(self.basis_product(j, k));
                    let right = self.mul_basis_left(i, &jk);
                    if left != right {
                        return Some(BasisWitness {
                            indices: vec![i, j, k],
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn commutativity_witness(&self) -> Option<BasisWitness> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return Some(BasisWitness {
                        indices: vec![i, j],
                    });
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    /// The algebra with multiplication `x * y := y x`.
    pub fn opposite(&self) -> Self {
        let n = self.dim;
        let mut sc = Vec::with_capacity(self.sc.len());
        for i in 0..n {
            for j in 0..n {
                let base = (j * n + i) * n;
                sc.extend_from_slice(&self.sc[base..base + n]);
            }
        }
        Self::new(&self.field, n, sc, self.unit.clone()).expect("opposite keeps the unit")
    }

    /// `A ⊗ B` on the basis `a_i ⊗ b_k`, indexed `i * dim B + k`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.field.descriptor() != other.field.descriptor() {
            return Err(Error::Validation(
                "tensor factors must share the base field".into(),
            ));
        }
        let f = &self.field;
        let (na, nb) = (self.dim, other.dim);
        let n = na * nb;
        let mut sc = vec![f.zero(); n * n * n];
        for i in 0..na {
            for j in 0..na {
                for (m, c) in self.basis_product(i, j) {
                    for k in 0..nb {
                        for l in 0..nb {
                            for (r, d) in other.basis_product(k, l) {
                                let row = i * nb + k;
                                let col = j * nb + l;
                                let out = m * nb + r;
                                sc[(row * n + col) * n + out] = f.mul(c, d);
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![f.zero(); n];
        for (i, u) in self.unit.iter().enumerate() {
            for (k, v) in other.unit.iter().enumerate() {
                unit[i * nb + k] = f.mul(u, v);
            }
        }
        Self::new(f, n, sc, unit)
    }

    /// The same structure constants read in another field through `embed`.
    pub fn map_field<G: Field>(&self, target: &G, embed: impl Fn(&F::Elem) -> G::Elem) -> Result<AlgebraSC<G>> {
        let sc = self.sc.iter().map(&embed).collect();
        let unit = self.unit.iter().map(&embed).collect();
        AlgebraSC::new(target, self.dim, sc, unit)
    }

    /// Coordinates of all `N^3` structure constants, in `(i, j, k)` order.
    pub fn structure_constants(&self) -> &[F::Elem] {
        &self.sc
    }

    /// `F`-span of the given elements together with closure under products,
    /// as an echelon basis.
    pub fn generated_subalgebra(&self, generators: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let mut basis = crate::exactla::echelon_basis(f, self.dim, &[generators, std::slice::from_ref(&self.unit)].concat());
        loop {
            let mut vectors = basis.clone();
            for x in &basis {
                for y in &basis {
                    vectors.push(self.mul(x, y));
                }
            }
            let next = crate::exactla::echelon_basis(f, self.dim, &vectors);
            if next.len() == basis.len() {
                return next;
            }
            basis = next;
        }
    }

    /// `Σ c_i x_i`.
    pub fn combine(&self, coeffs: &[F::Elem], vectors: &[Vec<F::Elem>]) -> Vec<F::Elem> {
        let mut out = self.zero();
        for (c, v) in coeffs.iter().zip(vectors) {
            axpy(&self.field, &mut out, c, v);
        }
        out
    }

    pub fn is_zero(&self, x: &[F::Elem]) -> bool {
        is_zero_vec(&self.field, x)
    }

    /// Formats an element as a coordinate list of canonical strings.
    pub fn format_elem(&self, x: &[F::Elem]) -> String {
        let parts: Vec<String> = x.iter().map(|c| self.field.format(c)).collect();
        format!("({})", parts.join(", "))
    }
}

/// The field `F` as a one-dimensional algebra.
pub fn base_field_algebra<F: Field>(field: &F) -> AlgebraSC<F> {
    AlgebraSC::new(field, 1, vec![field.one()], vec![field.one()]).expect("valid")
}

/// The full matrix algebra `M_n(F)` on the units `e_{ij}`, indexed `i n + j`.
pub fn matrix_algebra<F: Field>(field: &F, n: usize) -> AlgebraSC<F> {
    let dim = n * n;
    let mut unit = vec![field.zero(); dim];
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    AlgebraSC::from_products(field, dim, unit, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        let mut v = vec![field.zero(); dim];
        if j == k {
            v[i * n + l] = field.one();
        }
        v
    })
    .expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{GaloisField, PrimeField};

    /// `F_4` as a two-dimensional `F_2`-algebra on `1, w`.
    fn f4() -> AlgebraSC<PrimeField> {
        let f = PrimeField::new(2).unwrap();
        let g = GaloisField::new(2, 2).unwrap();
        AlgebraSC::from_products(&f, 2, vec![1, 0], |i, j| {
            
            g.mul(&g.element_at(1 << i).unwrap(), &g.element_at(1 << j).unwrap())
        })
        .unwrap()
    }

    #[test]
    fn unit_is_verified() {
        let f = PrimeField::new(2).unwrap();
        let bad = AlgebraSC::new(&f, 1, vec![0], vec![1]);
        assert!(matches!(bad, Err(Error::Validation(_))));
    }

    #[test]
    fn field_as_algebra() {
        let a = f4();
        assert!(a.is_associative());
        assert!(a.is_commutative());
        let w = a.basis(1);
        assert_eq!(a.mul(&w, &w), vec![1, 1]);
        assert_eq!(a.opposite(), a);
    }

    #[test]
    fn matrix_algebra_is_associative_not_commutative() {
        let f = PrimeField::new(3).unwrap();
        let m = matrix_algebra(&f, 2);
        assert!(m.is_associative());
        assert_eq!(m.commutativity_witness(), Some(BasisWitness { indices: vec![0, 1] }));
        let op = m.opposite();
        assert_eq!(op.opposite(), m);
    }

    #[test]
    fn tensor_dimensions_and_unit() {
        let a = f4();
        let f = PrimeField::new(2).unwrap();
        let t = a.tensor(&a).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(t.is_associative() && t.is_commutative());
        let one = a.tensor(&base_field_algebra(&f)).unwrap();
        assert_eq!(one, a);
    }
}
