use num_bigint::BigInt;
use proptest::prelude::*;
use revring::arith::int;
use revring::frac::{
    index_structure, saturate, staged_membership, staged_membership_at, Enumerator, Fraction,
    IntegerEnumerator, LocalizedIntegers, MultiplicativeSet, StagedRingHandle,
};
use revring::lab::StageEnumeration;
use revring::ring::Integers;
use revring::MultiPoly;

proptest! {
    #[test]
    fn embedding_is_injective_and_multiplicative(a in -100i64..=100, b in -100i64..=100) {
        let (fa, fb) = (Fraction::embed(&Integers, int(a)), Fraction::embed(&Integers, int(b)));
        prop_assert_eq!(fa.equals(&Integers, &fb), a == b);
        let prod = Fraction::embed(&Integers, int(a * b));
        prop_assert!(fa.mul(&Integers, &fb).equals(&Integers, &prod));
    }

    #[test]
    fn saturation_does_not_change_fractions(n in -30i64..=30, d in 1u32..=5, m in -30i64..=30, e in 1u32..=5) {
        // 1/2^d in Z[1/4] and in its saturation Z[1/2]: equality by cross-multiplication is the same
        let set = MultiplicativeSet::PowersOf(int(4));
        let sat = saturate(&set, 64).unwrap();
        prop_assert!(sat.contains(&int(2)));
        let x = Fraction::new(&Integers, int(n), int(2).pow(d)).unwrap();
        let y = Fraction::new(&Integers, int(m), int(2).pow(e)).unwrap();
        let lifted = |f: &Fraction<BigInt>| {
            // multiply through by 2 to land in Z[1/4]-denominators
            Fraction::new(&Integers, &f.num * 2, &f.den * 2).unwrap()
        };
        prop_assert_eq!(x.equals(&Integers, &y), lifted(&x).equals(&Integers, &lifted(&y)));
    }

    #[test]
    fn staged_membership_is_stage_stable(coeffs in prop::collection::vec(-3i64..=3, 4), extra in 0u64..20) {
        let a = StageEnumeration::from_entries([(0, 1), (2, 3)]);
        let b = StageEnumeration::from_entries([(1, 2)]);
        let h = StagedRingHandle::new(a, b).unwrap();
        let [c0, c1, c2, c3] = [coeffs[0], coeffs[1], coeffs[2], coeffs[3]].map(MultiPoly::from_int);
        let v = MultiPoly::var;
        let p = &(&(&c0 * &(&v(0) * &v(1))) + &(&c1 * &v(2).pow(2)))
            + &(&(&c2 * &(&v(3) - &v(3).pow(2))) + &(&c3 * &(&v(2) * &v(4))));
        let deg = p.total_degree().unwrap_or(0);
        let base = staged_membership(&h, &p).unwrap();
        prop_assert_eq!(staged_membership_at(&h, &p, deg + extra).unwrap(), base);
    }
}

#[test]
fn indexing_is_a_homomorphism() {
    let mut r = index_structure(IntegerEnumerator, 400).unwrap();
    let e = IntegerEnumerator;
    let sample: Vec<BigInt> = (-7..=7).map(int).collect();
    for a in &sample {
        for b in &sample {
            let (i, j) = (r.index_of(a).unwrap().index, r.index_of(b).unwrap().index);
            let sum = r.add(i, j).unwrap().index;
            assert_eq!(r.element(sum).unwrap(), &e.add(a, b));
            let prod = r.mul(i, j).unwrap().index;
            assert_eq!(r.element(prod).unwrap(), &e.mul(a, b));
        }
    }
}

#[test]
fn localised_indexing_is_a_homomorphism() {
    let set = MultiplicativeSet::PowersOf(int(2));
    let mut r = index_structure(LocalizedIntegers::new(set.clone()).unwrap(), 200).unwrap();
    let e = LocalizedIntegers::new(set).unwrap();
    let sample: Vec<(BigInt, BigInt)> = [(1, 2), (-3, 4), (5, 1), (0, 1), (7, 8)]
        .iter()
        .map(|&(n, d)| (int(n), int(d)))
        .collect();
    for a in &sample {
        for b in &sample {
            let (i, j) = (r.index_of(a).unwrap().index, r.index_of(b).unwrap().index);
            let sum = r.add(i, j).unwrap().index;
            assert_eq!(r.element(sum).unwrap(), &e.add(a, b));
            let prod = r.mul(i, j).unwrap().index;
            assert_eq!(r.element(prod).unwrap(), &e.mul(a, b));
        }
    }
}
