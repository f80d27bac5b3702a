use std::collections::HashMap;

use super::AlgebraSC;
use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::exactla::{axpy, span_rank, Matrix};

/// Checks that `m` (columns = images of the basis of `a`, in coordinates of
/// `b`) is an invertible unital multiplicative map `a -> b`.
pub fn verify_isomorphism<F: Field>(a: &AlgebraSC<F>, b: &AlgebraSC<F>, m: &Matrix<F>) -> bool {
    let n = a.dim();
    if b.dim() != n || m.rows() != n || m.cols() != n {
        return false;
    }
    let f = a.field();
    if f.is_zero(&m.det().expect("square")) {
        return false;
    }
    let apply = |v: &[F::Elem]| m.mul_vec(v).expect("dimensions checked");
    if apply(a.unit()) != b.unit() {
        return false;
    }
    let images: Vec<Vec<F::Elem>> = (0..n).map(|j| m.column(j)).collect();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let lhs = apply(&a.densify(a.basis_product(i, j)));
            lhs == b.mul(&images[i], &images[j])
        })
    })
}

struct Search<'a, F: Field> {
    a: &'a AlgebraSC<F>,
    b: &'a AlgebraSC<F>,
    elems: Vec<F::Elem>,
    q: u64,
    total: u64,
    start: Vec<u64>,
    /// Basis pairs whose products can be checked once level `m` is assigned.
    pair_checks: Vec<Vec<(usize, usize)>>,
    unit_level: usize,
    cap: u64,
    nodes: u64,
    images: Vec<Vec<F::Elem>>,
}

impl<F: Field> Search<'_, F> {
    fn vector(&self, mut index: u64) -> Vec<F::Elem> {
        (0..self.a.dim())
            .map(|_| {
                let e = self.elems[(index % self.q) as usize].clone();
                index /= self.q;
                e
            })
            .collect()
    }

    fn image_of(&self, sparse: &[(usize, F::Elem)]) -> Vec<F::Elem> {
        let f = self.a.field();
        let mut out = self.b.zero();
        for (k, c) in sparse {
            axpy(f, &mut out, c, &self.images[*k]);
        }
        out
    }

    fn consistent(&self, level: usize) -> bool {
        let f = self.a.field();
        if span_rank(f, self.b.dim(), &self.images) != level + 1 {
            return false;
        }
        if level == self.unit_level {
            let unit: Vec<(usize, F::Elem)> = self
                .a
                .unit()
                .iter()
                .enumerate()
                .filter(|(_, c)| !f.is_zero(c))
                .map(|(k, c)| (k, c.clone()))
                .collect();
            if self.image_of(&unit) != self.b.unit() {
                return false;
            }
        }
        self.pair_checks[level].iter().all(|&(i, j)| {
            self.image_of(self.a.basis_product(i, j)) == self.b.mul(&self.images[i], &self.images[j])
        })
    }

    fn descend(&mut self, level: usize) -> Result<bool> {
        if level == self.a.dim() {
            return Ok(true);
        }
        for offset in 0..self.total {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::CapExceeded {
                    cap: self.cap,
                    explored: self.nodes - 1,
                    context: "isomorphism search nodes".into(),
                });
            }
            let index = (self.start[level] + offset) % self.total;
            let v = self.vector(index);
            if v.iter().all(|c| self.a.field().is_zero(c)) {
                continue;
            }
            self.images.push(v);
            if self.consistent(level) && self.descend(level + 1)? {
                return Ok(true);
            }
            self.images.pop();
        }
        Ok(false)
    }
}

/// Depth-first search for an isomorphism `a -> b`, assigning images of
/// `a`'s basis vectors in order. Candidates for the image of `b_m` start at
/// `b_m` itself, so the identity is found first when it works. `cap` bounds
/// the number of candidate images tried.
pub fn find_isomorphism_exhaustive<F: Field>(
    a: &AlgebraSC<F>,
    b: &AlgebraSC<F>,
    cap: u64,
) -> Result<Option<Matrix<F>>> {
    if a.field().descriptor() != b.field().descriptor() {
        return Err(Error::Validation("algebras over different fields".into()));
    }
    let n = a.dim();
    if b.dim() != n {
        return Ok(None);
    }
    let f = a.field();
    let elems = f
        .elements()
        .ok_or_else(|| Error::Unsupported("isomorphism search over an infinite field".into()))?;
    let q = elems.len() as u64;
    let total = q.checked_pow(n as u32).ok_or(Error::CapExceeded {
        cap,
        explored: 0,
        context: "candidate space too large".into(),
    })?;
    let index_of: HashMap<F::Elem, u64> = elems.iter().cloned().zip(0..).collect();
    let one = index_of[&f.one()];
    let start = (0..n).map(|m| one * q.pow(m as u32)).collect();
    let support_max = |i: usize, j: usize| {
        a.basis_product(i, j)
            .iter()
            .map(|(k, _)| *k)
            .max()
            .unwrap_or(0)
    };
    let mut pair_checks = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            pair_checks[i.max(j).max(support_max(i, j))].push((i, j));
        }
    }
    let unit_level = a
        .unit()
        .iter()
        .rposition(|c| !f.is_zero(c))
        .expect("nonzero unit");
    let mut search = Search {
        a,
        b,
        elems,
        q,
        total,
        start,
        pair_checks,
        unit_level,
        cap,
        nodes: 0,
        images: Vec::with_capacity(n),
    };
    if search.descend(0)? {
        Ok(Some(Matrix::from_columns(f, n, &search.images)?))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::PrimeField;
    use crate::nalg::matrix_algebra;

    #[test]
    fn identity_is_found_first() {
        let f = PrimeField::new(2).unwrap();
        let m = matrix_algebra(&f, 2);
        let iso = find_isomorphism_exhaustive(&m, &m, 1_000_000).unwrap().unwrap();
        assert!(iso.is_identity());
        assert!(verify_isomorphism(&m, &m, &iso));
    }

    #[test]
    fn finds_transpose_anti_automorphism_as_opposite_iso() {
        let f = PrimeField::new(2).unwrap();
        let m = matrix_algebra(&f, 2);
        let op = m.opposite();
        let iso = find_isomorphism_exhaustive(&m, &op, 1_000_000).unwrap().unwrap();
        assert!(verify_isomorphism(&m, &op, &iso));
    }

    #[test]
    fn rejects_maps_that_move_the_unit() {
        let f = PrimeField::new(3).unwrap();
        let m = matrix_algebra(&f, 2);
        let two = Matrix::identity(&f, 4).scale(&2);
        assert!(!verify_isomorphism(&m, &m, &two));
        let other = crate::nalg::base_field_algebra(&f);
        assert_eq!(find_isomorphism_exhaustive(&m, &other, 10).unwrap(), None);
    }
}
