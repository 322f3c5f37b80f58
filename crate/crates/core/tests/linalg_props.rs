use proptest::prelude::*;
use revring::arith::{rat, Rational};
use revring::linalg::{linearly_independent, rank, Matrix};

fn matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, n), n).prop_map(|rows| {
            Matrix::from_rows(
                rows.into_iter()
                    .map(|r| r.into_iter().map(rat).collect())
                    .collect(),
            )
            .unwrap()
        })
    })
}

fn upper(m: &Matrix) -> Matrix {
    let n = m.dim();
    let mut u = m.clone();
    for i in 0..n {
        for j in 0..i {
            u.set(i, j, rat(0));
        }
        if *u.get(i, i) == rat(0) {
            u.set(i, i, rat(1 + i as i64));
        }
    }
    u
}

proptest! {
    #[test]
    fn adjugate_identity(a in matrix()) {
        let adj = a.adjugate();
        let d = Matrix::identity(a.dim()).scale(&a.determinant());
        prop_assert_eq!(&(&a * &adj), &d);
        prop_assert_eq!(&(&adj * &a), &d);
    }

    #[test]
    fn cofactor_expansion_along_any_line(a in matrix()) {
        let d = a.determinant();
        for k in 0..a.dim() {
            prop_assert_eq!(&a.determinant_along_row(k), &d);
            prop_assert_eq!(&a.determinant_along_col(k), &d);
        }
    }

    #[test]
    fn triangular_solve_agrees_with_adjugate(a in matrix(), b in prop::collection::vec(-9i64..=9, 5)) {
        let u = upper(&a);
        let b: Vec<Rational> = b.into_iter().take(u.dim()).map(rat).collect();
        let x = u.triangular_solve(&b).unwrap();
        prop_assert_eq!(&u.mul_vec(&x).unwrap(), &b);
        prop_assert_eq!(&u.adjugate_inverse().unwrap().mul_vec(&b).unwrap(), &x);
        let diag = (0..u.dim()).fold(rat(1), |acc, i| acc * u.get(i, i));
        prop_assert_eq!(u.determinant(), diag);
    }

    #[test]
    fn independence_matches_determinant(a in matrix()) {
        let rows: Vec<Vec<Rational>> = (0..a.dim()).map(|i| a.row(i).to_vec()).collect();
        prop_assert_eq!(linearly_independent(&rows), a.determinant() != rat(0));
        prop_assert_eq!(rank(&rows) == a.dim(), a.determinant() != rat(0));
    }
}
