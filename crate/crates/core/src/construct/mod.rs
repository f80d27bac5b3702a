//! Factories for Petit algebras and the families built from them, together
//! with semiassociativity, splitting and skew-matrix machinery.

mod menichetti;
mod semiassoc;
mod skew;
mod tensor;

pub use menichetti::{generalized_menichetti, menichetti, menichetti_matrix_product, MenichettiData};
pub use semiassoc::{
    cyclic_module_check, semiassoc_check, split_certificate, SemiassocReport, SplitReport, SplitVerdict,
};
pub use skew::{matrix_units_from_idempotents, skew_matrix_algebra, MatrixUnits, SkewSet};
pub use tensor::{tensor_csa_cyclic, TensorCsaReport};

use crate::error::{Error, Result};
use crate::etale::GaloisCnAlgebra;
use crate::exactfield::{Field, PrimeField};
use crate::exactla::{echelon_basis, Matrix};
use crate::nalg::AlgebraSC;
use crate::skewpoly::{CoefficientRing, SkewPolynomial};

type Poly<F> = SkewPolynomial<<F as Field>::Elem>;

fn petit_with<F: Field>(
    ring: &CoefficientRing<F>,
    f: &Poly<F>,
    reduce: impl Fn(&Poly<F>, &Poly<F>) -> Result<Poly<F>>,
) -> Result<AlgebraSC<F>> {
    if !ring.is_monic(f) || f.degree() == Some(0) {
        return Err(Error::Precondition("f must be monic of degree at least 1".into()));
    }
    let m = f.degree().expect("monic");
    let d = ring.coeff_dim();
    let n = d * m;
    let s = ring.algebra();
    let basis: Vec<Poly<F>> = (0..n).map(|idx| ring.monomial(&s.basis(idx % d), idx / d)).collect();
    let mut products = Vec::with_capacity(n * n);
    for a in &basis {
        for b in &basis {
            products.push(ring.to_coords(&reduce(&ring.mul(a, b), f)?, m));
        }
    }
    let unit = ring.to_coords(&ring.one(), m);
    let mut it = products.into_iter();
    AlgebraSC::from_products(ring.field(), n, unit, |_, _| it.next().expect("n^2 products"))
}

/// `S_f = R / R f` with `g ∘ h = g h mod_r f`, on the basis `s_i t^j`
/// indexed `j * dim S + i`.
pub fn petit_algebra<F: Field>(ring: &CoefficientRing<F>, f: &Poly<F>) -> Result<AlgebraSC<F>> {
    petit_with(ring, f, |g, f| ring.mod_r(g, f))
}

/// `_f S = R / f R` with `g ⋄ h = g h mod_l f`.
pub fn petit_algebra_left<F: Field>(ring: &CoefficientRing<F>, f: &Poly<F>) -> Result<AlgebraSC<F>> {
    petit_with(ring, f, |g, f| ring.mod_l(g, f))
}

/// `K[t; σ]` for a Galois `C_n`-algebra.
pub fn cyclic_ring(k: &GaloisCnAlgebra) -> CoefficientRing<PrimeField> {
    CoefficientRing::twisted(k.algebra().clone(), k.sigma_matrix().clone())
        .expect("σ of a Galois C_n-algebra is an automorphism")
}

/// The nonassociative cyclic algebra `(K/F, σ, d) = K[t;σ] / K[t;σ](t^n - d)`.
pub fn cyclic_algebra(k: &GaloisCnAlgebra, d: &[u32]) -> Result<AlgebraSC<PrimeField>> {
    if !k.is_unit(d) {
        return Err(Error::Precondition("d must be a unit of K".into()));
    }
    let ring = cyclic_ring(k);
    petit_algebra(&ring, &ring.binomial(k.dim(), d))
}

/// `(B, σ, d)` together with the data the factory computed along the way.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedCyclic<F: Field> {
    pub algebra: AlgebraSC<F>,
    /// Order of `σ` on the center `C` of `B`.
    pub m: usize,
    /// Echelon basis of `C`.
    pub center: Vec<Vec<F::Elem>>,
    /// `d ∈ C`; the nucleus statements about `(B, σ, d)` assume this.
    pub d_in_center: bool,
    /// `d ∈ F`, i.e. `d` is a scalar multiple of the unit.
    pub d_in_base: bool,
}

/// `(B, σ, d) = B[t;σ] / B[t;σ](t^m - d)` with `m` the order of `σ` on the
/// center of `B`. Requires `Fix(σ) ∩ C` to be the base field.
pub fn generalized_cyclic<F: Field>(ring: &CoefficientRing<F>, d: &[F::Elem]) -> Result<GeneralizedCyclic<F>> {
    let b = ring.algebra();
    let fld = ring.field();
    if ring.has_derivation() {
        return Err(Error::Precondition("generalized cyclic algebras need δ = 0".into()));
    }
    if ring.inverse(d).is_none() {
        return Err(Error::Precondition("d must be a unit of B".into()));
    }
    let center = b.center();
    let center_basis = center.basis().to_vec();
    let m = sigma_order_on(ring, &center_basis)?;
    let fixed = fixed_subspace(ring, &center_basis);
    if fixed.len() != 1 {
        return Err(Error::Precondition(format!(
            "Fix(σ) ∩ C has dimension {} over the base field, expected 1",
            fixed.len()
        )));
    }
    let algebra = petit_algebra(ring, &ring.binomial(m, d))?;
    let d_in_base = echelon_basis(fld, b.dim(), &[b.unit().to_vec(), d.to_vec()]).len() == 1;
    Ok(GeneralizedCyclic {
        algebra,
        m,
        d_in_center: center.contains(d),
        d_in_base,
        center: center_basis,
    })
}

/// Smallest `m ≥ 1` with `σ^m` the identity on the span of `vectors`.
pub(crate) fn sigma_order_on<F: Field>(ring: &CoefficientRing<F>, vectors: &[Vec<F::Elem>]) -> Result<usize> {
    let mut cur = vectors.to_vec();
    for m in 1..=4096 {
        cur = cur.iter().map(|v| ring.apply_sigma(v)).collect();
        if cur == vectors {
            return Ok(m);
        }
    }
    Err(Error::Precondition("σ has no small finite order on the center".into()))
}

/// `{x ∈ span(vectors) : σ(x) = x}` as an echelon basis.
pub(crate) fn fixed_subspace<F: Field>(ring: &CoefficientRing<F>, vectors: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let fld = ring.field();
    let b = ring.algebra();
    // (σ - 1) restricted to the span, as a map from coefficient space.
    let images: Vec<Vec<F::Elem>> = vectors
        .iter()
        .map(|v| b.sub(&ring.apply_sigma(v), v))
        .collect();
    let m = Matrix::from_columns(fld, b.dim(), &images).expect("nonempty span");
    let kernel = m.kernel();
    let vectors_in_b: Vec<Vec<F::Elem>> = kernel.iter().map(|c| b.combine(c, vectors)).collect();
    echelon_basis(fld, b.dim(), &vectors_in_b)
}

/// Whether `e` associates with every pair of basis elements in all three
/// positions.
pub(crate) fn in_nucleus<F: Field>(a: &AlgebraSC<F>, e: &[F::Elem]) -> bool {
    let n = a.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (x, y) = (a.basis(i), a.basis(j));
            a.is_zero(&a.associator(e, &x, &y))
                && a.is_zero(&a.associator(&x, e, &y))
                && a.is_zero(&a.associator(&x, &y, e))
        })
    })
}

/// `M_n(K)` for `K = F_{p^k}` as an algebra over `F_p`, with `σ` the
/// entrywise Frobenius. Basis `e_{ij} ⊗ w^l`, indexed `(i n + j) k + l`.
pub fn matrix_ring_over_extension(p: u32, k: usize, n: usize) -> Result<CoefficientRing<PrimeField>> {
    let kk = crate::etale::make_cyclic_ext(p, k)?;
    let f = *kk.base();
    let b = crate::nalg::matrix_algebra(&f, n).tensor(kk.algebra())?;
    let blocks = n * n;
    let dim = blocks * k;
    let mut sigma = Matrix::zeros(&f, dim, dim);
    let s = kk.sigma_matrix();
    for blk in 0..blocks {
        for r in 0..k {
            for c in 0..k {
                sigma.set(blk * k + r, blk * k + c, *s.get(r, c));
            }
        }
    }
    CoefficientRing::twisted(b, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::etale::{make_cyclic_ext, make_split_etale};
    use crate::nalg::is_division_exhaustive;

    #[test]
    fn degree_one_petit_algebra_is_the_coefficient_ring() {
        let k = make_cyclic_ext(3, 2).unwrap();
        let ring = cyclic_ring(&k);
        let d = k.parse("w").unwrap();
        let f = ring.binomial(1, &d);
        let a = petit_algebra(&ring, &f).unwrap();
        assert_eq!(a, *k.algebra());
        assert_eq!(petit_algebra_left(&ring, &f).unwrap(), *k.algebra());
    }

    #[test]
    fn nonassociative_quaternion_over_f2() {
        let k = make_cyclic_ext(2, 2).unwrap();
        let w = k.parse("w").unwrap();
        let a = cyclic_algebra(&k, &w).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(!a.is_associative());
        // t * t = w, t * w = w^2 t
        assert_eq!(a.mul(&a.basis(2), &a.basis(2)), vec![0, 1, 0, 0]);
        assert_eq!(a.mul(&a.basis(2), &a.basis(1)), vec![0, 0, 1, 1]);
        assert!(is_division_exhaustive(&a, 1000).unwrap().is_division);

        let one = cyclic_algebra(&k, &k.one()).unwrap();
        assert!(one.is_associative());
        assert!(!is_division_exhaustive(&one, 1000).unwrap().is_division);
        assert!(cyclic_algebra(&k, &[0, 0]).is_err());
    }

    #[test]
    fn dual_quaternions_are_associative_with_nilpotent_t() {
        let k = make_cyclic_ext(2, 2).unwrap();
        let ring = cyclic_ring(&k);
        let a = petit_algebra(&ring, &ring.monomial(&k.one(), 2)).unwrap();
        assert!(a.is_associative());
        assert!(a.is_zero(&a.mul(&a.basis(2), &a.basis(2))));
    }

    #[test]
    fn split_etale_cyclic_algebra() {
        let k = make_split_etale(3, 2).unwrap();
        let d = vec![1, 2];
        let a = cyclic_algebra(&k, &d).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(!is_division_exhaustive(&a, 1000).unwrap().is_division);
    }

    #[test]
    fn generalized_cyclic_over_matrices() {
        let ring = matrix_ring_over_extension(2, 2, 2).unwrap();
        let w = {
            let mut v = vec![0; 8];
            v[1] = 1; // e11 ⊗ w
            v[7] = 1; // e22 ⊗ w
            v
        };
        let g = generalized_cyclic(&ring, &w).unwrap();
        assert_eq!((g.algebra.dim(), g.m, g.center.len()), (16, 2, 2));
        assert!(g.d_in_center && !g.d_in_base);
        assert!(!g.algebra.is_associative());
        let nuc = g.algebra.nucleus();
        let b: Vec<_> = (0..8).map(|i| g.algebra.basis(i)).collect();
        assert!(nuc.contains_all(&b));

        let one = ring.algebra().unit().to_vec();
        let g1 = generalized_cyclic(&ring, &one).unwrap();
        assert!(g1.d_in_base && g1.algebra.is_associative());

        // e12 ⊗ 1 + e21 ⊗ 1 is a unit outside the center
        let mut x = vec![0; 8];
        x[2] = 1;
        x[4] = 1;
        assert!(!generalized_cyclic(&ring, &x).unwrap().d_in_center);
    }
}
