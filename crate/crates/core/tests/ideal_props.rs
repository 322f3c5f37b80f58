use num_integer::Integer;
use proptest::prelude::*;
use revring::arith::squarefree_kernel;
use revring::ideal::{
    classify_ideal, comaximal, contains, extensions_contain_nonzerodivisor, ideal_correspondence,
    principal, radical, FgIdeal,
};
use revring::Element;

fn gen_of(i: &FgIdeal) -> i64 {
    match principal(i).unwrap() {
        Some(Element::Int(n)) => i64::try_from(n).unwrap().abs(),
        Some(Element::Mod(n)) => n as i64,
        other => panic!("unexpected generator {other:?}"),
    }
}

fn rad(m: i64) -> i64 {
    gen_of(&radical(&FgIdeal::integers(&[m])).unwrap())
}

proptest! {
    #[test]
    fn radical_of_intersection(m in 0i64..=300, n in 0i64..=300) {
        let l = m.lcm(&n);
        // √(mZ ∩ nZ) = √mZ ∩ √nZ, intersections being lcm ideals
        prop_assert_eq!(rad(l), rad(m).lcm(&rad(n)));
    }

    #[test]
    fn radical_is_idempotent_and_extensive(m in 0i64..=300) {
        let r = rad(m);
        prop_assert_eq!(rad(r), r);
        let expected = if m == 0 { 0 } else { i64::try_from(squarefree_kernel(&m.into())).unwrap() };
        prop_assert_eq!(r, expected);
        let rideal = FgIdeal::integers(&[r]);
        prop_assert!(contains(&rideal, &Element::int(m)).unwrap());
    }

    #[test]
    fn primary_flags(m in 0i64..=300) {
        let c = classify_ideal(&FgIdeal::integers(&[m])).unwrap();
        if c.primary {
            prop_assert!(classify_ideal(&radical(&FgIdeal::integers(&[m])).unwrap()).unwrap().prime);
        }
        prop_assert_eq!(c.prime, c.primary && c.semiprime);
    }

    #[test]
    fn comaximality_lifts_from_radicals(m in 1i64..=100, n in 1i64..=100) {
        let (i, j) = (FgIdeal::integers(&[m]), FgIdeal::integers(&[n]));
        let (ri, rj) = (radical(&i).unwrap(), radical(&j).unwrap());
        let (up, cert) = comaximal(&i, &j).unwrap();
        prop_assert_eq!(up, comaximal(&ri, &rj).unwrap().0);
        prop_assert_eq!(up, m.gcd(&n) == 1);
        if let Some((a, b)) = cert {
            prop_assert!(contains(&i, &a).unwrap() && contains(&j, &b).unwrap());
        }
    }
}

#[test]
fn residue_ring_flags() {
    for n in 1..=100u64 {
        for pair in ideal_correspondence(n).unwrap() {
            let down = classify_ideal(&pair.downstairs).unwrap();
            if down.primary {
                assert!(
                    classify_ideal(&radical(&pair.downstairs).unwrap())
                        .unwrap()
                        .prime
                );
            }
            assert_eq!(
                down.prime,
                down.primary && down.semiprime,
                "Z/{n}, d = {}",
                pair.d
            );
            let up = classify_ideal(&pair.upstairs).unwrap();
            assert_eq!(
                (up.prime, up.primary, up.semiprime, up.maximal),
                (down.prime, down.primary, down.semiprime, down.maximal)
            );
        }
        let zero = classify_ideal(&FgIdeal::modular(n, &[0]).unwrap()).unwrap();
        assert_eq!(
            zero.primary,
            extensions_contain_nonzerodivisor(n).unwrap(),
            "n = {n}"
        );
        // oracle: {0} is primary in Z/n iff n is a prime power or 1
        let pp = revring::arith::factor_u64(n).len() <= 1;
        assert_eq!(zero.primary, pp, "n = {n}");
    }
}

#[test]
fn modular_generator_matches_gcd() {
    for n in 1..=30u64 {
        for a in 0..n {
            let g = gen_of(&FgIdeal::modular(n, &[a]).unwrap()) as u64;
            assert_eq!(g, a.gcd(&n) % n, "n={n} a={a}");
        }
    }
}
