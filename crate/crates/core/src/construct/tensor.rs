use serde::Serialize;

use super::{cyclic_algebra, generalized_cyclic};
use crate::error::{Error, Result};
use crate::etale::GaloisCnAlgebra;
use crate::exactfield::PrimeField;
use crate::exactla::Matrix;
use crate::nalg::{verify_isomorphism, AlgebraSC};
use crate::skewpoly::CoefficientRing;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorCsaReport {
    pub dim: usize,
    /// The coefficient map `a ⊗ x t^j ↦ (a ⊗ x) t^j` is an isomorphism
    /// `D_0 ⊗ (K/F, σ, d) → (D_0 ⊗ K, id ⊗ σ, 1 ⊗ d)`.
    pub isomorphism_verified: bool,
    pub nucleus_dim: usize,
    /// `Nuc = D_0 ⊗ K`; only evaluated when `d ∉ F`.
    pub nucleus_is_coefficient_ring: Option<bool>,
    pub nucleus_center_dim: usize,
}

/// `D_0 ⊗ K` with `id ⊗ σ`, basis `a ⊗ w^i` indexed `a n + i`.
pub fn csa_extension_ring(d0: &AlgebraSC<PrimeField>, k: &GaloisCnAlgebra) -> Result<CoefficientRing<PrimeField>> {
    let f = k.base();
    let n = k.dim();
    let b = d0.tensor(k.algebra())?;
    let mut sigma = Matrix::zeros(f, b.dim(), b.dim());
    for a in 0..d0.dim() {
        for r in 0..n {
            for c in 0..n {
                sigma.set(a * n + r, a * n + c, *k.sigma_matrix().get(r, c));
            }
        }
    }
    CoefficientRing::twisted(b, sigma)
}

/// Builds `D_0 ⊗ (K/F, σ, d)` and `(D_0 ⊗ K, id ⊗ σ, 1 ⊗ d)` and compares
/// them through the canonical coefficient map. `D_0` must be associative
/// with center `F`.
pub fn tensor_csa_cyclic(d0: &AlgebraSC<PrimeField>, k: &GaloisCnAlgebra, d: &[u32]) -> Result<TensorCsaReport> {
    if !d0.is_associative() {
        return Err(Error::Precondition("D_0 must be associative".into()));
    }
    if d0.center().dim() != 1 {
        return Err(Error::Precondition("D_0 must have center F".into()));
    }
    let n = k.dim();
    let nd = d0.dim();
    let a = d0.tensor(&cyclic_algebra(k, d)?)?;
    let ring = csa_extension_ring(d0, k)?;
    let mut one_d = vec![0; nd * n];
    for (idx, u) in d0.unit().iter().enumerate() {
        for (i, x) in d.iter().enumerate() {
            one_d[idx * n + i] = (u * x) % k.base().p();
        }
    }
    let g = generalized_cyclic(&ring, &one_d)?;
    debug_assert_eq!(g.m, n);
    let dim = a.dim();
    let mut map = Matrix::zeros(k.base(), dim, dim);
    for idx in 0..nd {
        for j in 0..n {
            for i in 0..n {
                map.set(j * nd * n + idx * n + i, idx * n * n + j * n + i, 1);
            }
        }
    }
    let isomorphism_verified = verify_isomorphism(&a, &g.algebra, &map);
    let nucleus = g.algebra.nucleus();
    let nucleus_is_coefficient_ring = (!k.in_base(d)).then(|| {
        let b: Vec<Vec<u32>> = (0..nd * n).map(|i| g.algebra.basis(i)).collect();
        nucleus.same_subspace(&b)
    });
    Ok(TensorCsaReport {
        dim,
        isomorphism_verified,
        nucleus_dim: nucleus.dim(),
        nucleus_is_coefficient_ring,
        nucleus_center_dim: nucleus.algebra().center().dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::etale::make_cyclic_ext;
    use crate::nalg::{base_field_algebra, matrix_algebra};

    #[test]
    fn trivial_factor() {
        let k = make_cyclic_ext(2, 2).unwrap();
        let r = tensor_csa_cyclic(&base_field_algebra(k.base()), &k, &k.parse("w").unwrap()).unwrap();
        assert!(r.isomorphism_verified);
        assert_eq!((r.dim, r.nucleus_dim, r.nucleus_is_coefficient_ring), (4, 2, Some(true)));
    }

    #[test]
    fn matrices_tensor_quaternion() {
        let k = make_cyclic_ext(2, 2).unwrap();
        let m2 = matrix_algebra(k.base(), 2);
        let r = tensor_csa_cyclic(&m2, &k, &k.parse("w").unwrap()).unwrap();
        assert!(r.isomorphism_verified);
        assert_eq!((r.dim, r.nucleus_dim, r.nucleus_center_dim), (16, 8, 2));
        assert_eq!(r.nucleus_is_coefficient_ring, Some(true));
        let k2 = make_cyclic_ext(2, 2).unwrap();
        let noncentral = m2.tensor(k2.algebra()).unwrap();
        assert!(tensor_csa_cyclic(&noncentral, &k, &k.one()).is_err());
    }
}
