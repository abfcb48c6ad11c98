mod common;

use common::strategies::{entry, matrix};
use num_bigint::BigInt;
use pathhom_core::linalg::{
    null_space_basis, rank, ratio, solve_all, LinalgError, Rational, RationalMatrix,
};
use proptest::prelude::*;

fn big_rational() -> impl Strategy<Value = Rational> {
    (any::<i128>(), 1u128..).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rank_nullity(m in matrix(6, 8)) {
        let n = null_space_basis(&m);
        prop_assert_eq!(rank(&m) + n.ncols(), m.ncols());
        prop_assert_eq!(n.nrows(), m.ncols());
        prop_assert!(m.mul(&n).unwrap().is_zero());
        prop_assert_eq!(rank(&n), n.ncols());
    }

    #[test]
    fn rank_matches_dense_oracle(m in matrix(6, 8)) {
        prop_assert_eq!(rank(&m), common::dense_rank(&m.to_dense()));
    }

    #[test]
    fn product_rank_is_bounded(a in prop::collection::vec(entry(), 15), b in prop::collection::vec(entry(), 15)) {
        let a = RationalMatrix::from_dense(5, 3, &a);
        let b = RationalMatrix::from_dense(3, 5, &b);
        let p = a.mul(&b).unwrap();
        let r = rank(&p);
        prop_assert!(r <= 3);
        prop_assert_eq!(r, common::dense_rank(&p.to_dense()));
    }

    #[test]
    fn basis_is_canonical_under_row_permutation(m in matrix(6, 8), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..m.nrows()).collect();
        let len = order.len();
        if len > 1 {
            for i in 0..len {
                order.swap(i, (seed as usize).wrapping_mul(i + 7) % len);
            }
        }
        let permuted = m.select_rows(&order).unwrap();
        prop_assert_eq!(null_space_basis(&m), null_space_basis(&permuted));
    }

    #[test]
    fn solve_recovers_consistent_systems(a in matrix(6, 5), y in prop::collection::vec(entry(), 10)) {
        let y = RationalMatrix::from_dense(a.ncols(), 2, &y[..a.ncols() * 2]);
        let b = a.mul(&y).unwrap();
        let x = solve_all(&a, &b).unwrap();
        prop_assert_eq!(a.mul(&x).unwrap(), b);
    }

    #[test]
    fn exact_arithmetic(a in big_rational(), b in big_rational()) {
        prop_assert_eq!((&a + &b) - &b, a.clone());
        if b != ratio(0, 1) {
            prop_assert_eq!((&a * &b) / &b, a);
        }
    }
}

#[test]
fn inconsistent_system() {
    let a = RationalMatrix::from_i64(2, 1, &[1, 1]);
    let b = RationalMatrix::from_i64(2, 1, &[1, 2]);
    assert_eq!(
        solve_all(&a, &b),
        Err(LinalgError::Inconsistent { column: 0 })
    );
}

#[test]
fn drop_conventions() {
    let m = RationalMatrix::from_i64(2, 3, &[1, 0, 2, 0, 1, 1]);
    let none = m.drop_rows(&[]).unwrap();
    assert_eq!(none, m);
    let all = m.drop_rows(&[0, 1]).unwrap();
    assert_eq!(all.nrows(), 0);
    assert_eq!(null_space_basis(&all), RationalMatrix::identity(3));
    let stacked = RationalMatrix::vstack(&[&m, &m]).unwrap();
    assert_eq!(stacked.drop_rows(&[2, 3]).unwrap().nrows(), 2);
    assert!(matches!(
        m.drop_rows(&[5]),
        Err(LinalgError::UnknownLabel { .. })
    ));
}
