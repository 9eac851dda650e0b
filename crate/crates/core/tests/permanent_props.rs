use num_bigint::BigInt;
use pind_core::permanent::{permanent_ryser_chunked, permanent_ryser_with, PermanentConfig};
use pind_core::{permanent_naive, permanent_ryser, Matrix};
use proptest::prelude::*;

fn arb_square(max: usize, range: i64) -> impl Strategy<Value = Matrix<i64>> {
    (0..=max).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(-range..=range, n), n).prop_map(Matrix::from_rows)
    })
}

fn rows(m: &Matrix<i64>) -> Vec<Vec<i64>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

proptest! {
    #[test]
    fn ryser_equals_naive(m in arb_square(7, 3)) {
        prop_assert_eq!(permanent_ryser(&m).unwrap(), permanent_naive(&m).unwrap());
    }

    #[test]
    fn invariant_under_row_and_column_permutation(m in arb_square(6, 2), seed in any::<u64>()) {
        let n = m.rows();
        let shift = |i: usize| if n == 0 { 0 } else { (i + seed as usize) % n };
        let mut r = rows(&m);
        r.rotate_left(shift(0));
        let permuted_rows = Matrix::from_rows(r);
        let swapped: Vec<Vec<i64>> = rows(&m).into_iter().map(|mut row| { row.reverse(); row }).collect();
        let p = permanent_ryser(&m).unwrap();
        prop_assert_eq!(permanent_ryser(&permuted_rows).unwrap(), p.clone());
        prop_assert_eq!(permanent_ryser(&Matrix::from_rows(swapped)).unwrap(), p);
    }

    #[test]
    fn transpose_invariant(m in arb_square(6, 3)) {
        let t = Matrix::from_rows((0..m.cols()).map(|j| m.column(j)).collect());
        prop_assert_eq!(permanent_ryser(&t).unwrap(), permanent_ryser(&m).unwrap());
    }

    #[test]
    fn negating_a_row_negates(m in arb_square(6, 3), i in any::<prop::sample::Index>()) {
        prop_assume!(m.rows() > 0);
        let i = i.index(m.rows());
        let mut r = rows(&m);
        r[i].iter_mut().for_each(|x| *x = -*x);
        prop_assert_eq!(permanent_ryser(&Matrix::from_rows(r)).unwrap(), -permanent_ryser(&m).unwrap());
    }

    #[test]
    fn bounded_by_product_of_row_norms(m in arb_square(7, 4)) {
        let bound: BigInt = (0..m.rows()).map(|i| BigInt::from(m.row(i).iter().map(|x| x.abs()).sum::<i64>())).product();
        let p = permanent_ryser(&m).unwrap();
        prop_assert!(p.magnitude() <= bound.magnitude());
    }

    #[test]
    fn chunked_and_parallel_agree(m in arb_square(9, 2), chunks in 1usize..20) {
        let seq = permanent_ryser(&m).unwrap();
        prop_assert_eq!(permanent_ryser_chunked(&m, chunks).unwrap(), seq.clone());
        let cfg = PermanentConfig { parallel_from: 0, ..PermanentConfig::default() };
        prop_assert_eq!(permanent_ryser_with(&m, &cfg).unwrap(), seq);
    }
}

#[test]
fn large_entries_stay_exact() {
    let m = Matrix::from_rows(vec![vec![i64::MAX / 2; 4]; 4]);
    let expected = BigInt::from(i64::MAX / 2).pow(4) * 24;
    assert_eq!(permanent_ryser(&m).unwrap(), expected);
    assert_eq!(permanent_naive(&m).unwrap(), expected);
}
