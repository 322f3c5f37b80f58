use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use revring::arith::{int, ratio, Rational};
use revring::bezout::{
    dh_build_check, euclid_gcd, extended_gcd, factorization_equal, gcd_lcm, principal_generator,
    ufd_gcd, DHNorm,
};
use revring::poly::univariate::from_dense;
use revring::ring::{classify, EuclideanDomain, Integers, QPoly, RingId};
use revring::{Element, MultiPoly};

fn qpoly(max_deg: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d)),
        1..=max_deg + 1,
    )
    .prop_map(|c: Vec<Rational>| from_dense(&c))
}

#[test]
fn gcd_scales_with_common_factor() {
    for a in 0..=30i64 {
        for b in 0..=30i64 {
            if a == 0 && b == 0 {
                continue;
            }
            for c in 1..=30i64 {
                let lhs = euclid_gcd(&Integers, &int(a * c), &int(b * c));
                let rhs = euclid_gcd(&Integers, &int(a), &int(b)) * c;
                assert_eq!(lhs.abs(), rhs.abs());
                assert_eq!(lhs, int(a.gcd(&b) * c));
            }
        }
    }
}

proptest! {
    #[test]
    fn integer_gcd_lcm(a in -500i64..=500, b in -500i64..=500) {
        prop_assume!(a != 0 || b != 0);
        let (g, l) = gcd_lcm(&Integers, &int(a), &int(b));
        prop_assert_eq!((&g * &l).abs(), int(a * b).abs());
        // (a) ∩ (b) = (l), sampled
        if a != 0 && b != 0 {
            for k in -200i64..=200 {
                let in_both = k % a == 0 && k % b == 0;
                prop_assert_eq!(in_both, (int(k) % &l).is_zero());
            }
        }
    }

    #[test]
    fn integer_certificates(gens in prop::collection::vec(-200i64..=200, 1..6)) {
        prop_assume!(gens.iter().any(|&g| g != 0));
        let g: Vec<BigInt> = gens.iter().map(|&x| int(x)).collect();
        let cert = principal_generator(&Integers, &g).unwrap();
        prop_assert!(cert.verify(&Integers, &g));
        let oracle = gens.iter().fold(0i64, |acc, x| acc.gcd(x));
        prop_assert_eq!(cert.d, int(oracle));
    }

    #[test]
    fn polynomial_certificates(a in qpoly(5), b in qpoly(5), c in qpoly(3)) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let cert = extended_gcd(&QPoly, &a, &b).unwrap();
        prop_assert!(cert.verify(&QPoly, &[a.clone(), b.clone()]));
        let gens = vec![a.clone(), b.clone(), c.clone()];
        let cert = principal_generator(&QPoly, &gens).unwrap();
        prop_assert!(cert.verify(&QPoly, &gens));
    }

    #[test]
    fn ufd_gcd_agrees_with_euclid(a in -400i64..=400, b in -400i64..=400) {
        prop_assume!(a != 0 && b != 0);
        let u = ufd_gcd(&Integers, &int(a), &int(b)).unwrap();
        prop_assert!(Integers.associates(&u, &euclid_gcd(&Integers, &int(a), &int(b))));
    }

    #[test]
    fn irreducibles_are_prime_in_z(r in 2i64..=60, a in -60i64..=60, b in -60i64..=60) {
        let class = classify(&RingId::Integers, &Element::int(r)).unwrap();
        if class.irreducible == Some(true) && (a * b) % r == 0 {
            // d = gcd(ar, ab) = a gcd(r, b); r | d forces r | a or r | b
            let d = (a * r).gcd(&(a * b));
            prop_assert!(a == 0 || d % r == 0);
            prop_assert!(a % r == 0 || b % r == 0);
        }
    }

    #[test]
    fn factorization_equal_is_an_equivalence(fs in prop::collection::vec(-30i64..=30, 0..6), seed in 0usize..100) {
        let f: Vec<BigInt> = fs.iter().map(|&x| int(x)).collect();
        prop_assert!(factorization_equal(&Integers, &f, &f).is_some());
        let mut g: Vec<BigInt> = f.iter().map(|x| -x).collect();
        if !g.is_empty() {
            let k = seed % g.len();
            g.rotate_left(k);
        }
        prop_assert!(factorization_equal(&Integers, &f, &g).is_some());
        prop_assert!(factorization_equal(&Integers, &g, &f).is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn polynomial_ufd_gcd_agrees_with_euclid(a in qpoly(3), b in qpoly(3), c in qpoly(2)) {
        let (a, b) = (&a * &c, &b * &c);
        prop_assume!(!a.is_zero() && !b.is_zero());
        let u = ufd_gcd(&QPoly, &a, &b).unwrap();
        prop_assert!(QPoly.associates(&u, &euclid_gcd(&QPoly, &a, &b)));
    }
}

#[test]
fn dh_units_match_classification() {
    let f = DHNorm::new(Integers);
    let sample: Vec<BigInt> = (-30..=30).map(int).collect();
    let report = dh_build_check(&f, &sample).unwrap();
    let classified: Vec<BigInt> = sample
        .iter()
        .filter(|a| {
            classify(&RingId::Integers, &Element::Int((*a).clone()))
                .unwrap()
                .unit
                == Some(true)
        })
        .cloned()
        .collect();
    assert_eq!(report.units, classified);
}
