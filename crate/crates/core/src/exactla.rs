//! Dense exact linear algebra over any [`Field`].

use crate::error::{Error, Result};
use crate::exactfield::Field;

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            data: vec![field.zero(); rows * cols],
            field: field.clone(),
            rows,
            cols,
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data,
        })
    }

    /// The matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: &F, nrows: usize, columns: &[Vec<F::Elem>]) -> Result<Self> {
        let mut m = Self::zeros(field, nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != nrows {
                return Err(Error::DimensionMismatch {
                    expected: nrows,
                    got: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: F::Elem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| dot(f, self.row(i), v))
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| op(&self.field, a, b))
            .collect();
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Matrix {
            data: self.data.iter().map(|x| f.mul(c, x)).collect(),
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
        }
    }

    pub fn pow(&self, mut e: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Precondition("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    /// Reduced row echelon form and the pivot columns. Pivots are chosen as
    /// the first nonzero entry at or below the current row.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c)).expect("nonzero pivot");
            for j in c..self.cols {
                let idx = r * self.cols + j;
                self.data[idx] = f.mul(&self.data[idx], &inv);
            }
            let pivot_row: Vec<F::Elem> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for (off, pv) in pivot_row.iter().enumerate() {
                    if f.is_zero(pv) {
                        continue;
                    }
                    let idx = i * self.cols + c + off;
                    self.data[idx] = f.sub(&self.data[idx], &f.mul(&factor, pv));
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{x : Mx = 0}`, one vector per free column in increasing
    /// column order.
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `Mx = b`, taking free variables to be zero.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let f = &self.field;
        let mut aug = Self::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn det(&self) -> Result<F::Elem> {
        if !self.is_square() {
            return Err(Error::Precondition("determinant of a non-square matrix".into()));
        }
        let f = self.field.clone();
        let mut m = self.clone();
        let n = self.rows;
        let mut det = f.one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !f.is_zero(m.get(i, c))) else {
                return Ok(f.zero());
            };
            if pr != c {
                m.swap_rows(pr, c);
                det = f.neg(&det);
            }
            let pivot = m.get(c, c).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot).expect("nonzero pivot");
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..n {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// `None` when singular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return Err(Error::Precondition("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Self::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        let mut inv = Self::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(Some(inv))
    }
}

pub fn dot<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    let mut acc = f.zero();
    for (x, y) in a.iter().zip(b) {
        if f.is_zero(x) || f.is_zero(y) {
            continue;
        }
        acc = f.add(&acc, &f.mul(x, y));
    }
    acc
}

pub fn vec_add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vec_sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vec_scale<F: Field>(f: &F, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|x| f.mul(c, x)).collect()
}

/// `acc += c * a`.
pub fn axpy<F: Field>(f: &F, acc: &mut [F::Elem], c: &F::Elem, a: &[F::Elem]) {
    if f.is_zero(c) {
        return;
    }
    for (s, x) in acc.iter_mut().zip(a) {
        if !f.is_zero(x) {
            *s = f.add(s, &f.mul(c, x));
        }
    }
}

pub fn is_zero_vec<F: Field>(f: &F, a: &[F::Elem]) -> bool {
    a.iter().all(|x| f.is_zero(x))
}

pub fn unit_vec<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// The nonzero rows of the reduced echelon form of the span of `vectors`,
/// a canonical basis of the subspace they span.
pub fn echelon_basis<F: Field>(f: &F, dim: usize, vectors: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix {
        field: f.clone(),
        rows: vectors.len(),
        cols: dim,
        data: vectors.iter().flat_map(|v| v.iter().cloned()).collect(),
    };
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Dimension of the span of `vectors`.
pub fn span_rank<F: Field>(f: &F, dim: usize, vectors: &[Vec<F::Elem>]) -> usize {
    echelon_basis(f, dim, vectors).len()
}

/// Coefficient vectors `c` with `Σ c_i images[i] = 0`, found by row reducing
/// `[images | I]`.
pub fn relations<F: Field>(f: &F, images: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let r = images.len();
    if r == 0 {
        return Vec::new();
    }
    let m = images[0].len();
    let mut aug = Matrix::zeros(f, r, m + r);
    for (i, img) in images.iter().enumerate() {
        for (j, x) in img.iter().enumerate() {
            aug.set(i, j, x.clone());
        }
        aug.set(i, m + i, f.one());
    }
    let pivots = aug.rref_in_place();
    let first_tail = pivots.iter().position(|&c| c >= m).unwrap_or(pivots.len());
    (first_tail..pivots.len())
        .map(|i| aug.row(i)[m..].to_vec())
        .collect()
}

/// Given a basis `basis` of a subspace `V` and the images of the basis
/// vectors under a linear map, returns a basis of the kernel of the map
/// restricted to `V`.
pub fn refine<F: Field>(
    f: &F,
    basis: &[Vec<F::Elem>],
    images: &[Vec<F::Elem>],
) -> Vec<Vec<F::Elem>> {
    debug_assert_eq!(basis.len(), images.len());
    if images.iter().all(|v| is_zero_vec(f, v)) {
        return basis.to_vec();
    }
    let dim = basis.first().map_or(0, |b| b.len());
    relations(f, images)
        .into_iter()
        .map(|c| {
            let mut v = vec![f.zero(); dim];
            for (ci, b) in c.iter().zip(basis) {
                axpy(f, &mut v, ci, b);
            }
            v
        })
        .collect()
}

/// Coordinates of `v` in the echelon basis `basis` (as returned by
/// [`echelon_basis`]) with the given pivot columns, or `None` if `v` is not
/// in the span.
pub fn echelon_coords<F: Field>(
    f: &F,
    basis: &[Vec<F::Elem>],
    pivots: &[usize],
    v: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let coords: Vec<F::Elem> = pivots.iter().map(|&p| v[p].clone()).collect();
    let mut recon = vec![f.zero(); v.len()];
    for (c, b) in coords.iter().zip(basis) {
        axpy(f, &mut recon, c, b);
    }
    (recon == v).then_some(coords)
}

/// Pivot column of each row of an echelon basis.
pub fn pivot_columns<F: Field>(f: &F, basis: &[Vec<F::Elem>]) -> Vec<usize> {
    basis
        .iter()
        .map(|b| b.iter().position(|x| !f.is_zero(x)).expect("nonzero basis vector"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{GaloisField, PrimeField};

    fn m(f: &PrimeField, rows: &[&[u32]]) -> Matrix<PrimeField> {
        Matrix::from_rows(f, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rank_kernel_and_solve() {
        let f = PrimeField::new(5).unwrap();
        let a = m(&f, &[&[1, 2, 3], &[2, 4, 1], &[0, 1, 0]]);
        assert_eq!(a.rank(), 2);
        let ker = a.kernel();
        assert_eq!(ker.len(), 1);
        assert!(is_zero_vec(&f, &a.mul_vec(&ker[0]).unwrap()));
        let x = a.solve(&[1, 2, 3]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![1, 2, 3]);
        assert!(a.solve(&[1, 0, 0]).unwrap().is_none());
        assert_eq!(a.det().unwrap(), 0);
        assert!(a.inverse().unwrap().is_none());
    }

    #[test]
    fn inverse_over_extension_field() {
        let f = GaloisField::new(2, 2).unwrap();
        let w = f.generator();
        let a = Matrix::from_rows(&f, vec![vec![f.one(), w.clone()], vec![w.clone(), f.one()]]).unwrap();
        // det = 1 + w^2 = w
        assert_eq!(a.det().unwrap(), w);
        let inv = a.inverse().unwrap().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn refine_restricts_a_map_to_a_subspace() {
        let f = PrimeField::new(3).unwrap();
        // V = span(e0, e1 + e2) in F^3, map = projection onto the last coordinate
        let basis = vec![vec![1, 0, 0], vec![0, 1, 1]];
        let images = vec![vec![0], vec![1]];
        assert_eq!(refine(&f, &basis, &images), vec![vec![1, 0, 0]]);
        assert_eq!(relations(&f, &[vec![1, 2], vec![2, 1]]), vec![vec![1, 1]]);
    }

    #[test]
    fn echelon_coordinates() {
        let f = PrimeField::new(7).unwrap();
        let basis = echelon_basis(&f, 3, &[vec![0, 2, 4], vec![1, 1, 1], vec![1, 2, 3]]);
        assert_eq!(basis.len(), 2);
        let piv = pivot_columns(&f, &basis);
        let c = echelon_coords(&f, &basis, &piv, &[3, 5, 0]).unwrap();
        assert_eq!(c.len(), 2);
        assert!(echelon_coords(&f, &basis, &piv, &[1, 0, 0]).is_none());
    }
}
