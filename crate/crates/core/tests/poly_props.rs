use proptest::prelude::*;
use revring::arith::{ratio, Rational};
use revring::bezout::factorization_equal;
use revring::poly::factor::{factor_over_q, factor_over_z, FactorConfig};
use revring::poly::univariate::{
    content, divide_long, divide_matrix, from_dense, from_ints, is_primitive,
};
use revring::poly::{meet_exponents, ExponentVector, MultiPoly};
use revring::ring::QPoly;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn qpoly(max_deg: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(rational(), 1..=max_deg + 1).prop_map(|c| from_dense(&c))
}

fn zpoly(max_deg: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(-9i64..=9, 1..=max_deg + 1).prop_map(|c| from_ints(&c))
}

proptest! {
    #[test]
    fn matrix_division_matches_long_division(p in qpoly(8), d in qpoly(8)) {
        prop_assume!(!d.is_zero());
        let long = divide_long(&p, &d).unwrap();
        match divide_matrix(&p, &d) {
            Ok(m) => prop_assert_eq!(&m, &long),
            Err(_) => prop_assert!(long.quotient.is_zero()),
        }
        prop_assert_eq!(&(&long.quotient * &d) + &long.remainder, p);
    }

    #[test]
    fn gauss_content_is_multiplicative(p in zpoly(5), q in zpoly(5)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!(content(&(&p * &q)), content(&p) * content(&q));
        if is_primitive(&p) && is_primitive(&q) {
            prop_assert!(is_primitive(&(&p * &q)));
        }
    }

    #[test]
    fn meet_divides_every_member(exps in prop::collection::vec(prop::collection::vec(0u32..6, 4), 1..5)) {
        let set: Vec<ExponentVector> = exps.iter().map(|e| ExponentVector::from_dense(e)).collect();
        let m = meet_exponents(set.iter()).unwrap();
        for e in &set {
            prop_assert!(m.divides(e));
        }
        // greatest such: each coordinate is attained
        for i in 0..4 {
            prop_assert!(set.iter().any(|e| e.get(i) == m.get(i)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn factorisation_remultiplies(p in zpoly(4), q in zpoly(3)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let cfg = FactorConfig::default();
        let fz = factor_over_z(&p, &cfg).unwrap();
        prop_assert_eq!(fz.product(), p.clone());
        let fq = factor_over_q(&p, &cfg).unwrap();
        prop_assert_eq!(fq.product(), p.clone());
        let pq = &p * &q;
        let both = factor_over_q(&pq, &cfg).unwrap().factors;
        let mut joined = fq.factors.clone();
        joined.extend(factor_over_q(&q, &cfg).unwrap().factors);
        prop_assert!(factorization_equal(&QPoly, &both, &joined).is_some());
    }
}
