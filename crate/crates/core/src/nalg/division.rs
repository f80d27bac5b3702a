use rayon::prelude::*;

use super::AlgebraSC;
use crate::error::{Error, Result};
use crate::exactfield::Field;

/// Outcome of an exhaustive zero-divisor scan.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisionReport<E> {
    pub is_division: bool,
    /// Nonzero `x, y` with `x y = 0`, the first found in enumeration order.
    pub witness: Option<(Vec<E>, Vec<E>)>,
    /// Number of elements whose left multiplication was examined.
    pub checked: u64,
}

/// Number of vectors of `F^n` whose first nonzero coordinate is `1`.
fn projective_count(q: u64, n: usize) -> Option<u64> {
    let mut total: u64 = 0;
    let mut block: u64 = 1;
    for _ in 0..n {
        total = total.checked_add(block)?;
        block = block.checked_mul(q)?;
    }
    Some(total)
}

/// The `index`-th normalized nonzero vector: the leading `1` sits at the
/// earliest position whose block contains `index`, and later coordinates
/// run through `F^(n - pos - 1)` in base-`q` order.
fn projective_vector<F: Field>(f: &F, q: u64, n: usize, mut index: u64) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    for pos in 0..n {
        let block = q.pow((n - pos - 1) as u32);
        if index < block {
            v[pos] = f.one();
            for slot in v.iter_mut().skip(pos + 1) {
                *slot = f.element_at(index % q).expect("in range");
                index /= q;
            }
            return v;
        }
        index -= block;
    }
    unreachable!("index beyond projective range")
}

/// Decides whether a finite-dimensional algebra over a finite field has no
/// zero divisors by checking that left multiplication by every nonzero
/// element (up to scalars) is injective. In finite dimension this is
/// equivalent to being a division algebra.
pub fn is_division_exhaustive<F: Field>(a: &AlgebraSC<F>, cap: u64) -> Result<DivisionReport<F::Elem>> {
    let f = a.field();
    let q = f
        .size()
        .ok_or_else(|| Error::Unsupported("exhaustive division test over an infinite field".into()))?;
    let n = a.dim();
    let total = projective_count(q, n).filter(|&t| t <= cap).ok_or(Error::CapExceeded {
        cap,
        explored: 0,
        context: format!("{}^{} candidates for the division test", q, n),
    })?;
    let first = (0..total).into_par_iter().find_map_first(|idx| {
        let x = projective_vector(f, q, n, idx);
        let lx = a.left_mul_matrix(&x);
        if f.is_zero(&lx.det().expect("square")) {
            let y = lx.kernel().into_iter().next().expect("singular operator has a kernel");
            Some((idx, x, y))
        } else {
            None
        }
    });
    Ok(match first {
        Some((idx, x, y)) => DivisionReport {
            is_division: false,
            witness: Some((x, y)),
            checked: idx + 1,
        },
        None => DivisionReport {
            is_division: true,
            witness: None,
            checked: total,
        },
    })
}

/// Independent oracle: the first pair of nonzero elements with product zero,
/// scanning normalized `x` against every nonzero `y`.
pub fn find_zero_divisor_pair<F: Field>(a: &AlgebraSC<F>, cap: u64) -> Result<Option<(Vec<F::Elem>, Vec<F::Elem>)>> {
    let f = a.field();
    let q = f
        .size()
        .ok_or_else(|| Error::Unsupported("pair enumeration over an infinite field".into()))?;
    let n = a.dim();
    let px = projective_count(q, n).expect("small");
    let all = q.checked_pow(n as u32).expect("small");
    if px.checked_mul(all).is_none_or(|t| t > cap) {
        return Err(Error::CapExceeded {
            cap,
            explored: 0,
            context: "zero-divisor pair enumeration".into(),
        });
    }
    let digits = |mut idx: u64| -> Vec<F::Elem> {
        (0..n)
            .map(|_| {
                let e = f.element_at(idx % q).expect("in range");
                idx /= q;
                e
            })
            .collect()
    };
    Ok((0..px).into_par_iter().find_map_first(|ix| {
        let x = projective_vector(f, q, n, ix);
        (1..all).find_map(|iy| {
            let y = digits(iy);
            a.is_zero(&a.mul(&x, &y)).then(|| (x.clone(), y))
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{GaloisField, PrimeField};
    use crate::nalg::matrix_algebra;

    #[test]
    fn projective_enumeration_covers_each_line_once() {
        let f = PrimeField::new(3).unwrap();
        let total = projective_count(3, 3).unwrap();
        assert_eq!(total, 13);
        let mut seen = std::collections::HashSet::new();
        for i in 0..total {
            let v = projective_vector(&f, 3, 3, i);
            let lead = v.iter().find(|&&c| c != 0).copied();
            assert_eq!(lead, Some(1));
            assert!(seen.insert(v));
        }
    }

    #[test]
    fn field_is_division_matrices_are_not() {
        let f = PrimeField::new(2).unwrap();
        let g = GaloisField::new(2, 2).unwrap();
        let f4 = AlgebraSC::from_products(&f, 2, vec![1, 0], |i, j| {
            g.mul(&g.element_at(1 << i).unwrap(), &g.element_at(1 << j).unwrap())
        })
        .unwrap();
        let r = is_division_exhaustive(&f4, 1000).unwrap();
        assert!(r.is_division && r.witness.is_none());
        assert_eq!(find_zero_divisor_pair(&f4, 1000).unwrap(), None);

        let m = matrix_algebra(&f, 2);
        let r = is_division_exhaustive(&m, 1000).unwrap();
        let (x, y) = r.witness.unwrap();
        assert!(m.is_zero(&m.mul(&x, &y)) && !m.is_zero(&x) && !m.is_zero(&y));
        assert!(find_zero_divisor_pair(&m, 1000).unwrap().is_some());
    }

    #[test]
    fn cap_is_enforced() {
        let f = PrimeField::new(2).unwrap();
        let m = matrix_algebra(&f, 3);
        assert!(matches!(is_division_exhaustive(&m, 100), Err(Error::CapExceeded { .. })));
    }
}
