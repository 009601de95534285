//! The fraction-free solver against a plain rational Gauss–Jordan oracle.

use num_traits::{One, Zero};
use proptest::prelude::*;

use weitzenbock::linalg::{nullspace, rank, Echelon, ExactMatrix, LinearSolver};
use weitzenbock::rational::{ratio, Rational};

/// Textbook reduced row echelon form over Q.
fn rref(mut a: Vec<Vec<Rational>>) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(i) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, i);
        let p = a[r][c].clone();
        for v in a[r].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (a, pivots)
}

fn oracle_nullspace(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = a.first().map_or(0, Vec::len);
    let (r, pivots) = rref(a.to_vec());
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (k, &c) in pivots.iter().enumerate() {
                v[c] = -r[k][f].clone();
            }
            v
        })
        .collect()
}

fn matrix() -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
        prop::collection::vec(
            prop::collection::vec(
                prop_oneof![3 => Just(ratio(0, 1)), 2 => (-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d))],
                c,
            ),
            r,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn nullspace_matches_rational_oracle(a in matrix()) {
        let m = ExactMatrix::from_dense(&a);
        let ns = nullspace(&m);
        prop_assert_eq!(&ns, &oracle_nullspace(&a));
        for v in &ns {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        let (_, pivots) = rref(a.clone());
        prop_assert_eq!(rank(&m), pivots.len());
        prop_assert_eq!(Echelon::new(&m).pivot_columns().to_vec(), pivots);
    }

    #[test]
    fn solver_reproduces_consistent_right_hand_sides(a in matrix(), x in prop::collection::vec(-3i64..=3, 7)) {
        let m = ExactMatrix::from_dense(&a);
        let x: Vec<Rational> = x.into_iter().take(m.cols()).map(|v| ratio(v, 1)).collect();
        let b = m.mul_vec(&x);
        let s = LinearSolver::new(&m);
        let c = s.solve(&b).expect("b is in the column space");
        prop_assert_eq!(m.mul_vec(&c), b);
        let pivots = s.pivot_columns();
        for (j, v) in c.iter().enumerate() {
            if !pivots.contains(&j) {
                prop_assert!(v.is_zero());
            }
        }
    }

    #[test]
    fn solver_rejects_vectors_outside_column_space(a in matrix()) {
        let m = ExactMatrix::from_dense(&a);
        let s = LinearSolver::new(&m);
        if s.rank() < m.rows() {
            // a left-nullspace vector y gives y·b != 0 for b = y
            let mut t = vec![vec![Rational::zero(); m.rows()]; m.cols()];
            for (i, row) in a.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    t[j][i] = v.clone();
                }
            }
            let left = oracle_nullspace(&t);
            prop_assert!(s.solve(&left[0]).is_none());
        }
    }
}
