use super::{cyclic_ring, fixed_subspace, sigma_order_on};
use crate::error::{Error, Result};
use crate::etale::GaloisCnAlgebra;
use crate::exactfield::{Field, PrimeField};
use crate::nalg::AlgebraSC;
use crate::skewpoly::CoefficientRing;

/// `(D, σ, k_0, ..., k_{m-1})` on `D^m = ⊕ D z_i`, basis `s_l z_i` indexed
/// `i * dim D + l`, with `(a z_i)(b z_j) = σ^j(a) b c_{j,i} z_{i+j}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MenichettiData<F: Field> {
    pub algebra: AlgebraSC<F>,
    pub m: usize,
    /// `c[i][j] = k_0^{-1} ⋯ k_{j-1}^{-1} k_i k_{i+1} ⋯ k_{i+j-1}`, indices mod `m`.
    pub c: Vec<Vec<Vec<F::Elem>>>,
}

fn c_table<F: Field>(ring: &CoefficientRing<F>, ks: &[Vec<F::Elem>], inverses: &[Vec<F::Elem>]) -> Vec<Vec<Vec<F::Elem>>> {
    let d = ring.algebra();
    let m = ks.len();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = d.unit().to_vec();
                    for l in 0..j {
                        acc = d.mul(&acc, &inverses[l]);
                        acc = d.mul(&acc, &ks[(i + l) % m]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Generalized Menichetti algebra over `D` with `σ` of order `m` on the
/// center `C` and central units `k_i`. The `k_i` are taken with `τ_j = σ^j`.
pub fn generalized_menichetti<F: Field>(
    ring: &CoefficientRing<F>,
    ks: &[Vec<F::Elem>],
) -> Result<MenichettiData<F>> {
    let d = ring.algebra();
    let n = d.dim();
    if ring.has_derivation() {
        return Err(Error::Precondition("Menichetti algebras need δ = 0".into()));
    }
    let center = d.center();
    let m = sigma_order_on(ring, center.basis())?;
    if ks.len() != m {
        return Err(Error::Precondition(format!(
            "expected {m} scalars k_i (the order of σ on the center), got {}",
            ks.len()
        )));
    }
    if fixed_subspace(ring, center.basis()).len() != 1 {
        return Err(Error::Precondition("Fix(σ) ∩ C must be the base field".into()));
    }
    let inverses = ks
        .iter()
        .enumerate()
        .map(|(i, k)| {
            if !center.contains(k) {
                return Err(Error::Precondition(format!("k_{i} is not central")));
            }
            ring.inverse(k)
                .ok_or_else(|| Error::Precondition(format!("k_{i} is not a unit")))
        })
        .collect::<Result<Vec<_>>>()?;
    let c = c_table(ring, ks, &inverses);
    debug_assert!((0..m).all(|i| c[i][0] == d.unit() && c[0][i] == d.unit()));
    let sigma_pows: Vec<Vec<Vec<F::Elem>>> = (0..m)
        .map(|j| (0..n).map(|l| ring.apply_sigma_pow(&d.basis(l), j as i64)).collect())
        .collect();
    let dim = n * m;
    let mut unit = vec![ring.field().zero(); dim];
    unit[..n].clone_from_slice(d.unit());
    let algebra = AlgebraSC::from_products(ring.field(), dim, unit, |x, y| {
        let (i, l) = (x / n, x % n);
        let (j, l2) = (y / n, y % n);
        let coeff = d.mul(&d.mul(&sigma_pows[j][l], &d.basis(l2)), &c[j][i]);
        let mut out = vec![ring.field().zero(); dim];
        let k = (i + j) % m;
        out[k * n..(k + 1) * n].clone_from_slice(&coeff);
        out
    })?;
    Ok(MenichettiData { algebra, m, c })
}

/// `(K/F, k_0, ..., k_{m-1})` for a Galois `C_m`-algebra `K`.
pub fn menichetti(k: &GaloisCnAlgebra, ks: &[Vec<u32>]) -> Result<MenichettiData<PrimeField>> {
    generalized_menichetti(&cyclic_ring(k), ks)
}

/// `x · y` computed as the block matrix `M(x)` applied to `y`, where
/// `M(x)_{k,j} = c_{j,k-j} σ^j(x_{k-j})`; used to cross-check the structure
/// constants.
pub fn menichetti_matrix_product<F: Field>(
    ring: &CoefficientRing<F>,
    data: &MenichettiData<F>,
    x: &[F::Elem],
    y: &[F::Elem],
) -> Vec<F::Elem> {
    let d = ring.algebra();
    let n = d.dim();
    let m = data.m;
    let block = |v: &[F::Elem], i: usize| v[i * n..(i + 1) * n].to_vec();
    let mut out = Vec::with_capacity(n * m);
    for k in 0..m {
        let mut acc = d.zero();
        for j in 0..m {
            let i = (k + m - j) % m;
            let entry = d.mul(&data.c[j][i], &ring.apply_sigma_pow(&block(x, i), j as i64));
            acc = d.add(&acc, &d.mul(&entry, &block(y, j)));
        }
        out.extend(acc);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::matrix_ring_over_extension;
    use crate::etale::make_cyclic_ext;
    use rand::{Rng, SeedableRng};

    #[test]
    fn quadratic_example() {
        let k = make_cyclic_ext(2, 2).unwrap();
        let w = k.parse("w").unwrap();
        let data = menichetti(&k, &[k.one(), w.clone()]).unwrap();
        let a = &data.algebra;
        assert_eq!(a.dim(), 4);
        // z_1 z_1 = c_{1,1} z_0 = w
        assert_eq!(a.mul(&a.basis(2), &a.basis(2)), vec![0, 1, 0, 0]);
        for i in 0..4 {
            assert_eq!(a.mul(&a.basis(i), a.unit()), a.basis(i));
            assert_eq!(a.mul(a.unit(), &a.basis(i)), a.basis(i));
        }
        let nuc = a.nucleus();
        assert!(nuc.contains_all(&[a.basis(0), a.basis(1)]));
        assert!(!a.is_associative());
        let trivial = menichetti(&k, &[k.one(), k.one()]).unwrap();
        assert!(trivial.algebra.is_associative());
        assert!(menichetti(&k, &[k.one()]).is_err());
        assert!(menichetti(&k, &[k.one(), vec![0, 0]]).is_err());
    }

    #[test]
    fn c_table_matches_formula_for_cubic() {
        let k = make_cyclic_ext(2, 3).unwrap();
        let ks = vec![k.parse("w").unwrap(), k.parse("w+1").unwrap(), k.parse("w^2").unwrap()];
        let data = menichetti(&k, &ks).unwrap();
        let inv = |x: &[u32]| k.inverse(x).unwrap();
        // c_{2,2} = k_0^{-1} k_1^{-1} k_2 k_0
        let expected = k.mul(&k.mul(&inv(&ks[0]), &inv(&ks[1])), &k.mul(&ks[2], &ks[0]));
        assert_eq!(data.c[2][2], expected);
        assert_eq!(data.c[1][0], k.one());
        assert_eq!(data.c[0][2], k.one());
    }

    #[test]
    fn matrix_form_agrees_with_structure_constants() {
        let ring = matrix_ring_over_extension(2, 2, 2).unwrap();
        let mut w = vec![0; 8];
        w[1] = 1;
        w[7] = 1;
        let one = ring.algebra().unit().to_vec();
        let data = generalized_menichetti(&ring, &[one, w]).unwrap();
        assert_eq!(data.algebra.dim(), 16);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x: Vec<u32> = (0..16).map(|_| rng.gen_range(0..2)).collect();
            let y: Vec<u32> = (0..16).map(|_| rng.gen_range(0..2)).collect();
            assert_eq!(data.algebra.mul(&x, &y), menichetti_matrix_product(&ring, &data, &x, &y));
        }
    }
}
