use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::exactla::{echelon_basis, is_zero_vec, Matrix};
use super::in_nucleus;
use crate::nalg::{verify_isomorphism, AlgebraSC};

/// A skew set `c_{ijl}` of degree `n`, indices from 0, stored `(i n + j) n + l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewSet<E> {
    n: usize,
    c: Vec<E>,
}

impl<E: Clone> SkewSet<E> {
    /// Validates that every entry is nonzero and `c_{iij} = c_{jii} = 1`.
    pub fn new<F: Field<Elem = E>>(field: &F, n: usize, c: Vec<E>) -> Result<Self> {
        if c.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                got: c.len(),
            });
        }
        let set = SkewSet { n, c };
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    if field.is_zero(set.get(i, j, l)) {
                        return Err(Error::Validation(format!("c[{i}][{j}][{l}] is zero")));
                    }
                }
                if !field.is_one(set.get(i, i, j)) || !field.is_one(set.get(j, i, i)) {
                    return Err(Error::Validation(format!(
                        "skew set is not reduced at indices ({i}, {j})"
                    )));
                }
            }
        }
        Ok(set)
    }

    /// `c ≡ 1`, giving `M_n(F)`.
    pub fn ones<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        SkewSet {
            n,
            c: vec![field.one(); n * n * n],
        }
    }

    /// Degree 2 with `c_{1,0,1} = λ` and all other entries 1.
    pub fn quaternion<F: Field<Elem = E>>(field: &F, lambda: E) -> Result<Self> {
        let mut c = vec![field.one(); 8];
        c[5] = lambda; // (i, j, l) = (1, 0, 1)
        Self::new(field, 2, c)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, l: usize) -> &E {
        &self.c[(i * self.n + j) * self.n + l]
    }

    pub fn entries(&self) -> &[E] {
        &self.c
    }
}

/// `M_n(F; c)`: `e_{ij} e_{kl} = δ_{jk} c_{ijl} e_{il}`, `e_{ij}` at `i n + j`.
pub fn skew_matrix_algebra<F: Field>(field: &F, c: &SkewSet<F::Elem>) -> AlgebraSC<F> {
    let n = c.degree();
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
            v[i * n + l] = c.get(i, j, l).clone();
        }
        v
    })
    .expect("a reduced skew set gives a unital algebra")
}

/// A skew matrix presentation of an algebra: `basis` has as column
/// `i n + j` the element playing `e_{ij}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixUnits<F: Field> {
    pub c: SkewSet<F::Elem>,
    pub basis: Matrix<F>,
}

/// Builds matrix units `x_{ij} ∈ e_i A e_j` from a complete set of
/// orthogonal nuclear idempotents with one-dimensional Peirce components.
/// `x_{ii} = e_i`; `x_{0j}` is the first Peirce basis vector and `x_{j0}` is
/// scaled so that `x_{0j} x_{j0} = e_0`. The resulting skew set is reduced,
/// and the presentation is checked with [`verify_isomorphism`].
pub fn matrix_units_from_idempotents<F: Field>(
    a: &AlgebraSC<F>,
    idempotents: &[Vec<F::Elem>],
) -> Result<MatrixUnits<F>> {
    let f = a.field();
    let n = idempotents.len();
    let dim = a.dim();
    if n * n != dim {
        return Err(Error::Precondition(format!("{n} idempotents cannot give matrix units for dimension {dim}")));
    }
    let mut sum = a.zero();
    for (i, e) in idempotents.iter().enumerate() {
        sum = a.add(&sum, e);
        if !in_nucleus(a, e) {
            return Err(Error::Precondition(format!("idempotent {i} is not in the nucleus")));
        }
        for (j, g) in idempotents.iter().enumerate() {
            let p = a.mul(e, g);
            let ok = if i == j { &p == e } else { a.is_zero(&p) };
            if !ok {
                return Err(Error::Precondition(format!("idempotents {i}, {j} are not orthogonal")));
            }
        }
    }
    if sum != a.unit() {
        return Err(Error::Precondition("idempotents do not sum to 1".into()));
    }
    let mut units: Vec<Vec<Vec<F::Elem>>> = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let component: Vec<_> = (0..dim)
                .map(|k| a.mul(&idempotents[i], &a.mul(&a.basis(k), &idempotents[j])))
                .collect();
            let basis = echelon_basis(f, dim, &component);
            if basis.len() != 1 {
                return Err(Error::Precondition(format!(
                    "Peirce component ({i}, {j}) has dimension {}",
                    basis.len()
                )));
            }
            units[i][j] = if i == j { idempotents[i].clone() } else { basis[0].clone() };
        }
    }
    // Scalar μ with x = μ y for nonzero y in the same line.
    let ratio = |x: &[F::Elem], y: &[F::Elem]| -> Option<F::Elem> {
        let k = y.iter().position(|c| !f.is_zero(c))?;
        let mu = f.div(&x[k], &y[k])?;
        (a.scale(&mu, y) == x).then_some(mu)
    };
    for j in 1..n {
        let prod = a.mul(&units[0][j], &units[j][0]);
        let mu = ratio(&prod, &idempotents[0])
            .filter(|m| !f.is_zero(m))
            .ok_or_else(|| Error::Validation(format!("x_0{j} x_{j}0 is not a nonzero multiple of e_0")))?;
        units[j][0] = a.scale(&f.inv(&mu).expect("nonzero"), &units[j][0]);
    }
    let mut c = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let prod = a.mul(&units[i][j], &units[j][l]);
                let mu = ratio(&prod, &units[i][l])
                    .filter(|m| !f.is_zero(m))
                    .ok_or_else(|| Error::Validation(format!("x_{i}{j} x_{j}{l} is not a nonzero multiple of x_{i}{l}")))?;
                c.push(mu);
            }
        }
    }
    let c = SkewSet::new(f, n, c)?;
    let columns: Vec<Vec<F::Elem>> = units.into_iter().flatten().collect();
    debug_assert!(columns.iter().all(|v| !is_zero_vec(f, v)));
    let basis = Matrix::from_columns(f, dim, &columns)?;
    let skew = skew_matrix_algebra(f, &c);
    if !verify_isomorphism(&skew, a, &basis) {
        return Err(Error::Validation("matrix units do not present the algebra".into()));
    }
    Ok(MatrixUnits { c, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::PrimeField;
    use crate::nalg::matrix_algebra;

    #[test]
    fn ones_give_matrices() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(skew_matrix_algebra(&f, &SkewSet::ones(&f, 3)), matrix_algebra(&f, 3));
    }

    #[test]
    fn quaternion_table() {
        let f = PrimeField::new(5).unwrap();
        let c = SkewSet::quaternion(&f, 3).unwrap();
        let a = skew_matrix_algebra(&f, &c);
        // e21 e12 = λ e22, e12 e21 = e11
        assert_eq!(a.mul(&a.basis(2), &a.basis(1)), vec![0, 0, 0, 3]);
        assert_eq!(a.mul(&a.basis(1), &a.basis(2)), vec![1, 0, 0, 0]);
        assert_eq!(a.unit(), &[1, 0, 0, 1]);
        assert!(!a.is_associative());
        assert!(SkewSet::quaternion(&f, 0).is_err());
        let mut bad = vec![1; 8];
        bad[0] = 2;
        assert!(SkewSet::new(&f, 2, bad).is_err());
    }

    #[test]
    fn matrix_units_recover_skew_sets() {
        let f = PrimeField::new(5).unwrap();
        let m = matrix_algebra(&f, 2);
        let ids = vec![m.basis(0), m.basis(3)];
        let mu = matrix_units_from_idempotents(&m, &ids).unwrap();
        assert_eq!(mu.c, SkewSet::ones(&f, 2));

        let a = skew_matrix_algebra(&f, &SkewSet::quaternion(&f, 2).unwrap());
        let mu = matrix_units_from_idempotents(&a, &[a.basis(0), a.basis(3)]).unwrap();
        assert_eq!(*mu.c.get(1, 0, 1), 2);
        let swapped = matrix_units_from_idempotents(&a, &[a.basis(3), a.basis(0)]).unwrap();
        // swapping the idempotents inverts λ after renormalizing
        assert_eq!(*swapped.c.get(1, 0, 1), 3);
        assert!(matrix_units_from_idempotents(&m, &[m.basis(0)]).is_err());
        assert!(matrix_units_from_idempotents(&m, &[m.basis(0), m.basis(0)]).is_err());
    }
}
