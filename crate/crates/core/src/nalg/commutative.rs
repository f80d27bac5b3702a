//! Commutative associative algebras over finite fields: Frobenius fixed
//! spaces, nilradicals, primitive idempotents and atoms.

use super::{AlgebraSC, Subalgebra};
use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldDescriptor};
use crate::exactla::{echelon_basis, is_zero_vec, Matrix};

fn require_commutative_associative<F: Field>(a: &AlgebraSC<F>) -> Result<u64> {
    let q = a
        .field()
        .size()
        .ok_or_else(|| Error::Unsupported("q-power map over an infinite field".into()))?;
    if !a.is_commutative() {
        return Err(Error::Precondition("algebra is not commutative".into()));
    }
    if !a.is_associative() {
        return Err(Error::Precondition("algebra is not associative".into()));
    }
    Ok(q)
}

/// Matrix of the `F_q`-linear map `x -> x^q`.
fn q_power_matrix<F: Field>(a: &AlgebraSC<F>, q: u64) -> Matrix<F> {
    let cols: Vec<_> = (0..a.dim()).map(|i| a.power(&a.basis(i), q)).collect();
    Matrix::from_columns(a.field(), a.dim(), &cols).expect("square")
}

/// `{x : x^q = x}`, an `F_q`-subalgebra isomorphic to `F_q^r` where `r` is
/// the number of primitive idempotents.
pub fn frobenius_fixed_space<F: Field>(a: &AlgebraSC<F>) -> Result<Vec<Vec<F::Elem>>> {
    let q = require_commutative_associative(a)?;
    let phi = q_power_matrix(a, q);
    let shifted = phi.sub(&Matrix::identity(a.field(), a.dim()))?;
    Ok(echelon_basis(a.field(), a.dim(), &shifted.kernel()))
}

/// All primitive idempotents, found by searching the Frobenius fixed space
/// (at most `cap` candidates). Sorted by their coordinate vectors in
/// enumeration order of the fixed space.
pub fn primitive_idempotents<F: Field>(a: &AlgebraSC<F>, cap: u64) -> Result<Vec<Vec<F::Elem>>> {
    let fixed = frobenius_fixed_space(a)?;
    let f = a.field();
    let elems = f.elements().expect("finite");
    let q = elems.len() as u64;
    let r = fixed.len();
    let total = q
        .checked_pow(r as u32)
        .filter(|&t| t <= cap)
        .ok_or(Error::CapExceeded {
            cap,
            explored: 0,
            context: format!("{q}^{r} elements of the Frobenius fixed space"),
        })?;
    let mut idempotents = Vec::new();
    for mut idx in 1..total {
        let coeffs: Vec<F::Elem> = (0..r)
            .map(|_| {
                let e = elems[(idx % q) as usize].clone();
                idx /= q;
                e
            })
            .collect();
        let x = a.combine(&coeffs, &fixed);
        if a.mul(&x, &x) == x {
            idempotents.push(x);
        }
    }
    // e is primitive iff e e' is 0 or e for every idempotent e'.
    let primitive: Vec<Vec<F::Elem>> = idempotents
        .iter()
        .filter(|e| {
            idempotents.iter().all(|g| {
                let p = a.mul(e, g);
                is_zero_vec(f, &p) || &p == *e
            })
        })
        .cloned()
        .collect();
    debug_assert_eq!(primitive.len(), r);
    Ok(primitive)
}

/// A simple component of the semisimple quotient of a commutative algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Atom<E> {
    /// Dimension of the component over the base field.
    pub degree: usize,
    /// The component as a field, `F_{q^degree}`.
    pub field: FieldDescriptor,
    /// Its primitive idempotent, in coordinates of the semisimple part.
    pub idempotent: Vec<E>,
}

/// Atoms of a commutative nucleus: the nilradical is `ker Φ^N` for the
/// `q`-power map `Φ`; the image of `Φ^N` is a subalgebra isomorphic to the
/// semisimple quotient, split into fields by its primitive idempotents.
pub fn atoms_commutative<F: Field>(nucleus: &Subalgebra<F>, cap: u64) -> Result<Vec<Atom<F::Elem>>> {
    let c = nucleus.algebra();
    if !c.is_commutative() {
        return Err(Error::Unsupported(
            "atoms of a noncommutative nucleus".into(),
        ));
    }
    let q = require_commutative_associative(c)?;
    let f = c.field();
    let n = c.dim();
    let phi_n = q_power_matrix(c, q).pow(n as u64)?;
    let image: Vec<_> = (0..n).map(|j| phi_n.column(j)).collect();
    let semisimple = Subalgebra::new(c, &image)?;
    let s = semisimple.algebra();
    let idempotents = primitive_idempotents(s, cap)?;
    let desc = f.descriptor();
    let (p, k) = match &desc {
        FieldDescriptor::Prime { p } => (*p, 1),
        FieldDescriptor::Extension { p, k, .. } => (*p, *k),
        FieldDescriptor::RationalFunction { .. } => unreachable!("finite field checked"),
    };
    idempotents
        .into_iter()
        .map(|e| {
            let ideal: Vec<_> = (0..s.dim()).map(|i| s.mul(&e, &s.basis(i))).collect();
            let degree = echelon_basis(f, s.dim(), &ideal).len();
            Ok(Atom {
                degree,
                field: crate::exactfield::ff_make(p, k * degree as u32, None)?,
                idempotent: e,
            })
        })
        .collect()
}

/// Dimension of the nilradical `ker Φ^N`.
pub fn nilradical_dim<F: Field>(a: &AlgebraSC<F>) -> Result<usize> {
    let q = require_commutative_associative(a)?;
    let phi_n = q_power_matrix(a, q).pow(a.dim() as u64)?;
    Ok(phi_n.kernel().len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{GaloisField, PrimeField};

    fn field_algebra(p: u32, k: u32) -> AlgebraSC<PrimeField> {
        let f = PrimeField::new(p).unwrap();
        let g = GaloisField::new(p, k).unwrap();
        let w = |i: usize| g.element_at((p as u64).pow(i as u32)).unwrap();
        let unit = crate::exactla::unit_vec(&f, k as usize, 0);
        AlgebraSC::from_products(&f, k as usize, unit, |i, j| g.mul(&w(i), &w(j))).unwrap()
    }

    #[test]
    fn idempotents_of_field_tensor_square() {
        let k = field_algebra(2, 2);
        let kk = k.tensor(&k).unwrap();
        assert_eq!(frobenius_fixed_space(&kk).unwrap().len(), 2);
        let ids = primitive_idempotents(&kk, 1000).unwrap();
        assert_eq!(ids.len(), 2);
        assert_eq!(kk.add(&ids[0], &ids[1]), kk.unit());
        assert!(kk.is_zero(&kk.mul(&ids[0], &ids[1])));
        assert_eq!(frobenius_fixed_space(&k).unwrap().len(), 1);
    }

    #[test]
    fn nilpotents_are_detected() {
        // F_2[x]/(x^2)
        let f = PrimeField::new(2).unwrap();
        let a = AlgebraSC::from_products(&f, 2, vec![1, 0], |i, j| match i + j {
            0 => vec![1, 0],
            1 => vec![0, 1],
            _ => vec![0, 0],
        })
        .unwrap();
        assert_eq!(nilradical_dim(&a).unwrap(), 1);
        let whole = Subalgebra::new(&a, &[a.basis(0), a.basis(1)]).unwrap();
        let atoms = atoms_commutative(&whole, 100).unwrap();
        assert_eq!(atoms.len(), 1);
        assert_eq!(atoms[0].degree, 1);
    }

    #[test]
    fn atoms_of_a_field() {
        let k = field_algebra(3, 2);
        let whole = Subalgebra::new(&k, &[k.basis(0), k.basis(1)]).unwrap();
        let atoms = atoms_commutative(&whole, 100).unwrap();
        assert_eq!(atoms.len(), 1);
        assert_eq!(atoms[0].field, crate::exactfield::ff_make(3, 2, None).unwrap());
    }
}
