use proptest::prelude::*;
use semiassoc::exactfield::{Field, PrimeField};
use semiassoc::exactla::{echelon_basis, is_zero_vec, Matrix};

fn matrix(p: u32, max: usize) -> impl Strategy<Value = (u32, usize, usize, Vec<u32>)> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        (Just(p), Just(r), Just(c), prop::collection::vec(0..p, r * c))
    })
}

fn build(p: u32, r: usize, c: usize, data: &[u32]) -> Matrix<PrimeField> {
    let f = PrimeField::new(p).unwrap();
    Matrix::from_rows(&f, data.chunks(c).take(r).map(|row| row.to_vec()).collect()).unwrap()
}

proptest! {
    #[test]
    fn rank_plus_nullity((p, r, c, data) in matrix(3, 6)) {
        let a = build(p, r, c, &data);
        let ker = a.kernel();
        prop_assert_eq!(a.rank() + ker.len(), c);
        for v in &ker {
            prop_assert!(is_zero_vec(a.field(), &a.mul_vec(v).unwrap()));
        }
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn inverse_and_determinant((p, n, _, data) in (1usize..=5).prop_flat_map(|n| (Just(5u32), Just(n), Just(n), prop::collection::vec(0u32..5, n * n)))) {
        let a = build(p, n, n, &data);
        let det = a.det().unwrap();
        match a.inverse().unwrap() {
            Some(inv) => {
                prop_assert!(det != 0);
                prop_assert!(a.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&a).unwrap().is_identity());
            }
            None => prop_assert_eq!(det, 0),
        }
    }

    #[test]
    fn determinant_is_multiplicative(n in 1usize..=4, x in prop::collection::vec(0u32..7, 16), y in prop::collection::vec(0u32..7, 16)) {
        let a = build(7, n, n, &x);
        let b = build(7, n, n, &y);
        let f = PrimeField::new(7).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), f.mul(&a.det().unwrap(), &b.det().unwrap()));
    }

    #[test]
    fn solve_finds_preimages((p, r, c, data) in matrix(2, 6), seed in prop::collection::vec(0u32..2, 6)) {
        let a = build(p, r, c, &data);
        let x0: Vec<u32> = seed[..c].to_vec();
        let b = a.mul_vec(&x0).unwrap();
        let x = a.solve(&b).unwrap().expect("consistent system");
        prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn echelon_basis_is_canonical((p, r, c, data) in matrix(3, 5)) {
        let f = PrimeField::new(p).unwrap();
        let a = build(p, r, c, &data);
        let rows = a.to_rows();
        let e1 = echelon_basis(&f, c, &rows);
        let mut rev = rows.clone();
        rev.reverse();
        let e2 = echelon_basis(&f, c, &rev);
        prop_assert_eq!(&e1, &e2);
        prop_assert_eq!(e1.len(), a.rank());
    }
}
