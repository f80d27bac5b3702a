use proptest::prelude::*;
use semiassoc::construct::{cyclic_ring, petit_algebra, petit_algebra_left};
use semiassoc::etale::make_cyclic_ext;
use semiassoc::exactfield::PrimeField;
use semiassoc::exactla::Matrix;
use semiassoc::skewpoly::{CoefficientRing, SkewPolynomial};

/// `F_4[t; σ]` (`derivation = false`) or `F_4[t; σ, id - σ]`.
fn ring(derivation: bool) -> CoefficientRing<PrimeField> {
    let k = make_cyclic_ext(2, 2).unwrap();
    let twisted = cyclic_ring(&k);
    if !derivation {
        return twisted;
    }
    let f = k.base();
    let delta = Matrix::identity(f, 2).sub(k.sigma_matrix()).unwrap();
    CoefficientRing::new(k.algebra().clone(), k.sigma_matrix().clone(), delta).unwrap()
}

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..2, 2), 0..=max_len)
}

/// Non-leading coefficients of a monic polynomial of degree `min..=max`.
fn lower(min: usize, max: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..2, 2), min..=max)
}

fn monic(r: &CoefficientRing<PrimeField>, mut c: Vec<Vec<u32>>) -> SkewPolynomial<u32> {
    c.push(vec![1, 0]);
    r.poly(c)
}

proptest! {
    #[test]
    fn multiplication_is_associative(dl in any::<bool>(), a in coeffs(3), b in coeffs(3), c in coeffs(3)) {
        let r = ring(dl);
        let (a, b, c) = (r.poly(a), r.poly(b), r.poly(c));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
    }

    #[test]
    fn division_identities(dl in any::<bool>(), g in coeffs(6), f in lower(1, 3)) {
        let r = ring(dl);
        let g = r.poly(g);
        let f = monic(&r, f);
        let m = f.degree().unwrap();
        let (q, rem) = r.right_divide(&g, &f).unwrap();
        prop_assert_eq!(r.add(&r.mul(&q, &f), &rem), g.clone());
        prop_assert!(rem.degree().is_none_or(|d| d < m));
        let (q, rem) = r.left_divide(&g, &f).unwrap();
        prop_assert_eq!(r.add(&r.mul(&f, &q), &rem), g);
        prop_assert!(rem.degree().is_none_or(|d| d < m));
    }

    #[test]
    fn psi_is_an_involutive_anti_isomorphism(dl in any::<bool>(), g in coeffs(4), h in coeffs(4)) {
        let r = ring(dl);
        let op = r.opposite_ring();
        let (g, h) = (r.poly(g), r.poly(h));
        prop_assert_eq!(r.psi_into(&op, &r.mul(&g, &h)), op.mul(&r.psi_into(&op, &h), &r.psi_into(&op, &g)));
        prop_assert_eq!(op.psi_into(&r, &r.psi_into(&op, &g)), g);
    }

    #[test]
    fn eigenspace_is_right_nucleus(dl in any::<bool>(), f in lower(2, 3)) {
        let r = ring(dl);
        let f = monic(&r, f);
        let a = petit_algebra(&r, &f).unwrap();
        prop_assert!(a.nucleus_right().same_subspace(&r.eigenspace(&f).unwrap()));
        prop_assert_eq!(a.is_associative(), r.is_right_invariant(&f).unwrap());
    }

    #[test]
    fn opposite_is_left_petit_algebra_of_psi(dl in any::<bool>(), f in lower(1, 3)) {
        let r = ring(dl);
        let op = r.opposite_ring();
        let f = monic(&r, f);
        let m = f.degree().unwrap();
        let a = petit_algebra(&r, &f).unwrap();
        let left = petit_algebra_left(&op, &r.psi_into(&op, &f)).unwrap();
        let cols: Vec<Vec<u32>> = (0..a.dim())
            .map(|i| op.to_coords(&r.psi_into(&op, &r.from_coords(&a.basis(i))), m))
            .collect();
        let map = Matrix::from_columns(a.field(), a.dim(), &cols).unwrap();
        prop_assert!(semiassoc::nalg::verify_isomorphism(&a.opposite(), &left, &map));
    }
}

/// For `deg f = 1`, `S_f = S` is associative whether or not `Rf` is two-sided,
/// so neither law extends to degree one.
#[test]
fn degree_one_exception() {
    let r = ring(false);
    let f = monic(&r, vec![vec![0, 1]]);
    let a = petit_algebra(&r, &f).unwrap();
    assert!(a.is_associative());
    assert!(!r.is_right_invariant(&f).unwrap());
    assert_eq!((a.nucleus_right().dim(), r.eigenspace(&f).unwrap().len()), (2, 1));
}
