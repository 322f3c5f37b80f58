use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use revring::arith::{rat, ratio, Rational};
use revring::bezout::{
    dh_build_check, dh_generator, euclid_enumeration, euclid_gcd, factorization_equal, gcd_lcm,
    integer_combinations, principal_generator, ufd_gcd, BoundedQPoly, DHNorm,
};
use revring::ideal::{
    classify_ideal, comaximal, contains, extensions_contain_nonzerodivisor, ideal_correspondence,
    principal, radical, FgIdeal, IdealClass,
};
use revring::linalg::Matrix;
use revring::pid_t::{in_M, t_divides, t_principal_generator, TElement};
use revring::poly::factor::{factor_over_q, factor_over_z, is_irreducible_over_q, FactorConfig};
use revring::poly::univariate::{
    content, divide_long, divide_matrix, from_ints, gcd_univariate, monic,
};
use revring::ring::{classify, EuclideanDomain, FieldTag, Integers, QPoly, RingId};
use revring::{Element, ExponentVector, MultiPoly};

use super::{rand_nonzero_rational, rand_qpoly, rand_rational, rand_zpoly};
use crate::report::Tally;

fn cfg(degree_bound: usize) -> FactorConfig {
    FactorConfig { degree_bound }
}

fn qx() -> RingId {
    RingId::UnivariatePoly(FieldTag::Rationals)
}

// ---------------------------------------------------------------------------
// division

pub(super) fn division_equivalence(rng: &mut ChaCha8Rng, scale: u64, t: &mut Tally) {
    for case in 0..scale {
        let dp = rng.gen_range(0..=8usize);
        let dd = rng.gen_range(0..=dp);
        let p = rand_qpoly(rng, dp);
        let d = rand_qpoly(rng, dd);
        let ctx = || format!("case {case}: p = {p}, d = {d}");
        let long = t.check_result(divide_long(&p, &d), ctx);
        let mat = t.check_result(divide_matrix(&p, &d), ctx);
        let (Some(long), Some(mat)) = (long, mat) else {
            continue;
        };
        t.check(long == mat, || {
            format!(
                "{}: long ({}, {}) vs matrix ({}, {})",
                ctx(),
                long.quotient,
                long.remainder,
                mat.quotient,
                mat.remainder
            )
        });
        let recombined = &(&d * &long.quotient) + &long.remainder;
        let small = long.remainder.is_zero() || long.remainder.total_degree().unwrap() < dd as u64;
        t.check(recombined == p && small, || {
            format!("{}: p != dq + r", ctx())
        });
    }
    // a dividend of smaller degree has no square system
    for case in 0..scale / 10 {
        let dd = rng.gen_range(1..=8usize);
        let p = {
            let v = rng.gen_range(0..dd);
            rand_qpoly(rng, v)
        };
        let d = rand_qpoly(rng, dd);
        let long = divide_long(&p, &d);
        t.check(
            divide_matrix(&p, &d).is_err()
                && long.is_ok_and(|r| r.quotient.is_zero() && r.remainder == p),
            || format!("small case {case}: p = {p}, d = {d}"),
        );
    }
}

// ---------------------------------------------------------------------------
// linear algebra

fn rand_matrix(rng: &mut ChaCha8Rng, n: usize, upper: bool) -> Matrix {
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if upper && j < i {
                        Rational::zero()
                    } else {
                        rand_rational(rng)
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).expect("square rows")
}

/// Permutations of `0..n` with their signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        // insert n-1 at position k: it passes n-1-k larger positions
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            let sign = if (n - 1 - k).is_multiple_of(2) { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

fn leibniz(a: &Matrix) -> Rational {
    let n = a.dim();
    permutations(n)
        .into_iter()
        .map(|(p, s)| {
            let prod = (0..n).fold(Rational::one(), |acc, i| acc * a.get(i, p[i]));
            prod * rat(s)
        })
        .fold(Rational::zero(), |acc, x| acc + x)
}

pub(super) fn linalg_identities(rng: &mut ChaCha8Rng, scale: u64, t: &mut Tally) {
    for case in 0..scale {
        let n = rng.gen_range(1..=5usize);
        let a = rand_matrix(rng, n, false);
        let det = a.determinant();
        t.check(det == leibniz(&a), || {
            format!("case {case}: determinant of {a:?}")
        });
        let r = rng.gen_range(0..n);
        t.check(a.determinant_along_row(r) == det, || {
            format!("case {case}: row {r} expansion")
        });
        let adj = a.adjugate();
        let scaled = Matrix::identity(n).scale(&det);
        t.check(&a * &adj == scaled && &adj * &a == scaled, || {
            format!("case {case}: A adj(A) != det(A) I for {a:?}")
        });
        let u = rand_matrix(rng, n, true);
        let diag = (0..n).fold(Rational::one(), |acc, i| acc * u.get(i, i));
        t.check(u.determinant() == diag, || {
            format!("case {case}: upper triangular {u:?}")
        });
        let l = u.transpose();
        t.check(l.determinant() == diag, || {
            format!("case {case}: lower triangular {l:?}")
        });
    }
}

// ---------------------------------------------------------------------------
// radicals and primary ideals

fn prime_factors(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn kernel(m: u64) -> u64 {
    if m == 0 {
        return 0;
    }
    prime_factors(m).iter().map(|&(p, _)| p).product()
}

fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / a.gcd(&b) * b
    }
}

fn divisible(a: &BigInt, m: u64) -> bool {
    if m == 0 {
        a.is_zero()
    } else {
        (a % BigInt::from(m)).is_zero()
    }
}

fn int_generator(i: &FgIdeal) -> Option<u64> {
    match principal(i) {
        Ok(Some(Element::Int(g))) => g.abs().to_u64(),
        _ => None,
    }
}

fn flags(c: &IdealClass) -> (bool, bool, bool, bool) {
    (c.prime, c.primary, c.semiprime, c.maximal)
}

pub(super) fn radical_identities(_rng: &mut ChaCha8Rng, scale: u64, t: &mut Tally) {
    integer_radicals(scale, t);
    for n in 1..=scale.min(100) {
        residue_ring(n, t);
    }
}

fn integer_radicals(scale: u64, t: &mut Tally) {
    let ideals: Vec<FgIdeal> = (0..=scale)
        .map(|m| FgIdeal::integers(&[m as i64]))
        .collect();
    let mut radicals = Vec::new();
    for (m, i) in ideals.iter().enumerate() {
        let m = m as u64;
        let rad = t
            .check_result(radical(i), || format!("radical of {m}Z"))
            .unwrap_or_else(|| FgIdeal::integers(&[0]));
        t.check(int_generator(&rad) == Some(kernel(m)), || {
            format!("sqrt({m}Z)")
        });
        if let Some(c) = t.check_result(classify_ideal(i), || format!("classify {m}Z")) {
            let pf = prime_factors(m);
            let oracle = (
                m <= 1 || (pf.len() == 1 && pf[0].1 == 1),
                m <= 1 || pf.len() == 1,
                m == 0 || kernel(m) == m,
                pf.len() == 1 && pf[0].1 == 1,
            );
            t.check(flags(&c) == oracle, || {
                format!("{m}Z: flags {:?} vs {oracle:?}", flags(&c))
            });
            t.check(c.prime == (c.primary && c.semiprime), || {
                format!("{m}Z: prime vs primary and semiprime")
            });
            if c.primary {
                let ok = classify_ideal(&rad).is_ok_and(|r| r.prime);
                t.check(ok, || format!("{m}Z primary but radical not prime"));
            }
        }
        radicals.push(rad);
    }
    let rad_gens: Vec<Option<u64>> = radicals.iter().map(int_generator).collect();
    for m in 0..=scale {
        for n in 0..=scale {
            let (mu, nu) = (m as usize, n as usize);
            let meet = FgIdeal::integers(&[lcm(m, n) as i64]);
            let lhs = radical(&meet).ok().and_then(|r| int_generator(&r));
            let rhs = rad_gens[mu].zip(rad_gens[nu]).map(|(a, b)| lcm(a, b));
            t.check(lhs.is_some() && lhs == rhs, || format!("sqrt({m}Z ∩ {n}Z)"));

            let co = comaximal(&ideals[mu], &ideals[nu]);
            let co_ok = co.as_ref().is_ok_and(|(flag, cert)| {
                *flag == (m.gcd(&n) == 1)
                    && match cert {
                        Some((Element::Int(a), Element::Int(b))) => {
                            divisible(a, m) && divisible(b, n) && (a + b).is_one()
                        }
                        Some(_) => false,
                        None => !*flag,
                    }
            });
            t.check(co_ok, || format!("comaximal({m}Z, {n}Z): {co:?}"));
            let lifted = comaximal(&radicals[mu], &radicals[nu]);
            let lift_ok = match (&lifted, &co) {
                (Ok((true, _)), Ok((flag, _))) => *flag,
                (Ok((false, _)), Ok(_)) => true,
                _ => false,
            };
            t.check(lift_ok, || {
                format!("comaximality of radicals does not lift for {m}, {n}")
            });
        }
    }
}

fn pow_mod(a: u64, k: u64, n: u64) -> u64 {
    (0..k).fold(1 % n, |acc, _| acc * a % n)
}

fn residue_ring(n: u64, t: &mut Tally) {
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let whole: BTreeSet<u64> = (0..n).collect();
    let mut ideals = Vec::new();
    for &d in &divisors {
        let Some(i) = t.check_result(FgIdeal::modular(n, &[d]), || format!("({d}) in Z/{n}"))
        else {
            continue;
        };
        let members: BTreeSet<u64> = (0..n)
            .filter(|&a| contains(&i, &Element::Mod(a)).unwrap_or(false))
            .collect();
        let oracle: BTreeSet<u64> = (0..n).filter(|a| a % d == 0).collect();
        t.check(members == oracle, || format!("members of ({d}) in Z/{n}"));
        let rad_oracle: BTreeSet<u64> = (0..n)
            .filter(|&a| (1..=n).any(|k| members.contains(&pow_mod(a, k, n))))
            .collect();
        let rad = radical(&i).ok();
        let rad_members: Option<BTreeSet<u64>> = rad.as_ref().map(|r| {
            (0..n)
                .filter(|&a| contains(r, &Element::Mod(a)).unwrap_or(false))
                .collect()
        });
        t.check(rad_members.as_ref() == Some(&rad_oracle), || {
            format!("sqrt(({d})) in Z/{n}")
        });
        ideals.push((d, i, members, rad_oracle, rad));
    }
    for (d, i, m, r, rad) in &ideals {
        let Some(c) = t.check_result(classify_ideal(i), || format!("classify ({d}) in Z/{n}"))
        else {
            continue;
        };
        let pairs = || (0..n).flat_map(|a| (0..n).map(move |b| (a, b)));
        let prime =
            pairs().all(|(a, b)| !m.contains(&(a * b % n)) || m.contains(&a) || m.contains(&b));
        let primary =
            pairs().all(|(a, b)| !m.contains(&(a * b % n)) || m.contains(&a) || r.contains(&b));
        let semiprime = r == m;
        let maximal = *m != whole
            && ideals
                .iter()
                .all(|(_, _, other, _, _)| !(m.is_subset(other) && m != other) || *other == whole);
        let oracle = (prime, primary, semiprime, maximal);
        t.check(flags(&c) == oracle, || {
            format!("({d}) in Z/{n}: {:?} vs {oracle:?}", flags(&c))
        });
        t.check(c.prime == (c.primary && c.semiprime), || {
            format!("({d}) in Z/{n}: prime split")
        });
        if c.primary {
            let ok = rad
                .as_ref()
                .is_some_and(|r| classify_ideal(r).is_ok_and(|x| x.prime));
            t.check(ok, || {
                format!("({d}) in Z/{n} primary with non-prime radical")
            });
        }
    }
    for (d1, _, m1, r1, _) in &ideals {
        for (d2, _, m2, r2, _) in &ideals {
            let meet = FgIdeal::modular(n, &[lcm(*d1, *d2) % n]).expect("valid modulus");
            let members: BTreeSet<u64> = (0..n)
                .filter(|&a| contains(&meet, &Element::Mod(a)).unwrap_or(false))
                .collect();
            let inter: BTreeSet<u64> = m1.intersection(m2).copied().collect();
            t.check(members == inter, || format!("({d1}) ∩ ({d2}) in Z/{n}"));
            let rad: Option<BTreeSet<u64>> = radical(&meet).ok().map(|r| {
                (0..n)
                    .filter(|&a| contains(&r, &Element::Mod(a)).unwrap_or(false))
                    .collect()
            });
            let rinter: BTreeSet<u64> = r1.intersection(r2).copied().collect();
            t.check(rad == Some(rinter), || {
                format!("sqrt(({d1}) ∩ ({d2})) in Z/{n}")
            });
        }
    }
    if let Some(pairs) = t.check_result(ideal_correspondence(n), || {
        format!("correspondence for {n}")
    }) {
        for p in pairs {
            let up = classify_ideal(&p.upstairs).map(|c| flags(&c));
            let down = classify_ideal(&p.downstairs).map(|c| flags(&c));
            t.check(up.is_ok() && up == down, || {
                format!("{}Z vs ({}) in Z/{n}", p.d, p.d)
            });
        }
    }
    let zero_primary = FgIdeal::modular(n, &[0])
        .ok()
        .and_then(|z| classify_ideal(&z).ok())
        .map(|c| c.primary);
    let ext = extensions_contain_nonzerodivisor(n).ok();
    let oracle = n == 1 || prime_factors(n).len() == 1;
    t.check(zero_primary == Some(oracle) && ext == Some(oracle), || {
        format!("Z/{n}: (0) primary {zero_primary:?}, extensions {ext:?}, expected {oracle}")
    });
}

// ---------------------------------------------------------------------------
// gcd and Bezout

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Shared random factor times independent cofactors.
fn rand_qpoly_list(rng: &mut ChaCha8Rng, k: usize) -> Vec<MultiPoly> {
    let common = {
        let v = rng.gen_range(0..=2);
        rand_qpoly(rng, v)
    };
    (0..k)
        .map(|_| {
            let g = {
                let v = rng.gen_range(0..=3);
                rand_qpoly(rng, v)
            };
            if rng.gen_bool(0.5) {
                &g * &common
            } else {
                g
            }
        })
        .collect()
}

fn gcd_oracle(gens: &[MultiPoly]) -> MultiPoly {
    gens.iter()
        .fold(MultiPoly::zero(), |acc, g| match gcd_univariate(&acc, g) {
            Ok(d) => d,
            Err(_) => MultiPoly::zero(),
        })
}

pub(super) fn gcd_bezout(rng: &mut ChaCha8Rng, scale: u64, t: &mut Tally) {
    let z = Integers;
    for a in 0..=30i64 {
        for b in 0..=30i64 {
            let g = euclid_gcd(&z, &big(a), &big(b));
            t.check(g == big(a.gcd(&b)), || format!("gcd({a}, {b})"));
            for c in 0..=30i64 {
                let lhs = euclid_gcd(&z, &big(a * c), &big(b * c));
                t.check(lhs == &g * big(c), || {
                    format!("gcd({a}c, {b}c) with c = {c}")
                });
            }
        }
    }
    let bounded = BoundedQPoly { config: cfg(8) };
    for case in 0..scale {
        let a = big(rng.gen_range(-1_000_000..=1_000_000));
        let b = big(rng.gen_range(-1_000_000..=1_000_000));
        let (g, l) = gcd_lcm(&z, &a, &b);
        t.check(g == a.gcd(&b) && &g * &l == (&a * &b).abs(), || {
            format!("gcd/lcm of {a}, {b}")
        });

        let k = rng.gen_range(1..=5);
        let gens: Vec<BigInt> = (0..k).map(|_| big(rng.gen_range(-1000..=1000))).collect();
        let oracle = gens.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if let Some(cert) = t.check_result(principal_generator(&z, &gens), || {
            format!("bezout {gens:?}")
        }) {
            t.check(cert.verify(&z, &gens) && cert.d == oracle, || {
                format!("case {case}: certificate for {gens:?}")
            });
        }

        let gens = {
            let v = rng.gen_range(1..=4);
            rand_qpoly_list(rng, v)
        };
        let shown = || {
            gens.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        if let Some(cert) = t.check_result(principal_generator(&QPoly, &gens), || {
            format!("bezout [{}]", shown())
        }) {
            let ok = cert.verify(&QPoly, &gens) && cert.d == monic(&gcd_oracle(&gens));
            t.check(ok, || format!("case {case}: certificate for [{}]", shown()));
        }

        let (p, q) = (gens[0].clone(), {
            let v = rng.gen_range(0..=4);
            rand_qpoly(rng, v)
        });
        let (g, l) = gcd_lcm(&QPoly, &p, &q);
        t.check(monic(&(&g * &l)) == monic(&(&p * &q)), || {
            format!("gcd/lcm of {p}, {q}")
        });

        let (a, b) = (big(rng.gen_range(1..=5000)), big(rng.gen_range(-5000..=-1)));
        let u = ufd_gcd(&z, &a, &b);
        t.check(
            u.as_ref().is_ok_and(|u| *u == euclid_gcd(&z, &a, &b)),
            || format!("ufd gcd({a}, {b}) = {u:?}"),
        );

        if case % 4 == 0 {
            let pool: Vec<MultiPoly> = (0..3)
                .map(|_| {
                    let v = rng.gen_range(1..=2);
                    rand_zpoly(rng, v, 3)
                })
                .collect();
            let pick = |rng: &mut ChaCha8Rng| {
                (0..rng.gen_range(1..=3))
                    .fold(MultiPoly::one(), |acc, _| &acc * pool.choose(rng).unwrap())
            };
            let (p, q) = (pick(rng), pick(rng));
            let u = ufd_gcd(&bounded, &p, &q);
            let e = euclid_gcd(&bounded, &p, &q);
            t.check(u.as_ref().is_ok_and(|u| *u == e), || {
                format!("ufd gcd({p}, {q}) = {u:?}, euclid {e}")
            });
        }
    }
}

// ---------------------------------------------------------------------------
// the PID T

fn rand_exponent(rng: &mut ChaCha8Rng, max: u32) -> Vec<u32> {
    (0..4).map(|_| rng.gen_range(0..=max)).collect()
}

/// An element of `M`: a constant plus a monomial, falling back to the
/// constant alone.
fn rand_m(rng: &mut ChaCha8Rng) -> MultiPoly {
    let a = rng.gen_range(1..5);
    let g = rand_exponent(rng, 2);
    let p = &MultiPoly::from_int(a)
        + &MultiPoly::monomial(ExponentVector::from_dense(&g), rat(rng.gen_range(-3..=3)));
    if in_M(&p) {
        p
    } else {
        MultiPoly::from_int(a)
    }
}

pub(super) fn pid_t(rng: &mut ChaCha8Rng, scale: u64, t: &mut Tally) {
    for case in 0..scale {
        let k = rng.gen_range(1..=5);
        let betas: Vec<Vec<u32>> = (0..k).map(|_| rand_exponent(rng, 6)).collect();
        let gens: Vec<TElement> = betas
            .iter()
            .map(|b| {
                let num =
                    &MultiPoly::monomial(ExponentVector::from_dense(b), rat(1)) * &rand_m(rng);
                TElement::new(num, rand_m(rng)).expect("denominator in M")
            })
            .collect();
        let oracle: Vec<u32> = (0..4)
            .map(|i| betas.iter().map(|b| b[i]).min().unwrap())
            .collect();
        let oracle = ExponentVector::from_dense(&oracle);
        let shown = || {
            gens.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        if let Some(cert) = t.check_result(t_principal_generator(&gens), || {
            format!("case {case}: [{}]", shown())
        }) {
            t.check(cert.alpha == oracle, || {
                format!("case {case}: alpha {} vs {oracle:?}", cert.alpha)
            });
            t.check(cert.verify(&gens), || {
                format!("case {case}: combination for [{}]", shown())
            });
            t.check(
                cert.generator.associate_to(&TElement::monomial(&oracle)),
                || format!("case {case}: generator {}", cert.generator),
            );
        }
        let i = rng.gen_range(0..8);
        let j = (i + rng.gen_range(1..8)) % 8;
        let (xi, xj) = (
            TElement::monomial(&ExponentVector::var(i, 1)),
            TElement::monomial(&ExponentVector::var(j, 1)),
        );
        t.check(
            !t_divides(&xi, &xj) && t_divides(&xi, &xi) && !xi.is_unit(),
            || format!("x{i} | x{j}"),
        );
    }
}

// ---------------------------------------------------------------------------
// the Dedekind-Hasse norm

fn omega(n: u64) -> u64 {
    prime_factors(n).iter().map(|&(_, e)| e as u64).sum()
}

pub(super) fn dh_norm(rng: &mut ChaCha8Rng, scale: u64, t: &mut Tally) {
    let zn = DHNorm::new(Integers);
    let sample: Vec<BigInt> = (-50..=50).map(big).collect();
    if let Some(report) = t.check_result(dh_build_check(&zn, &sample), || {
        "axioms on |a|, |b| <= 50".into()
    }) {
        t.cases += report.pairs as u64;
        let units: Vec<BigInt> = sample
            .iter()
            .filter(|a| {
                classify(&RingId::Integers, &Element::Int((*a).clone()))
                    .is_ok_and(|c| c.unit == Some(true))
            })
            .cloned()
            .collect();
        t.check(report.units == units, || {
            format!("units {:?} vs {units:?}", report.units)
        });
    }
    for a in &sample {
        let m = a.abs().to_u64().unwrap();
        let expected = if m == 0 { 0 } else { 1 + omega(m) };
        t.check(zn.norm(a).ok() == Some(expected), || format!("f({a})"));
    }

    let bounded = BoundedQPoly { config: cfg(10) };
    let qn = DHNorm::new(bounded);
    let f1 = qn.norm(&MultiPoly::one()).unwrap_or(u64::MAX);
    for case in 0..scale {
        let a = {
            let v = rng.gen_range(0..=5);
            rand_small_qpoly(rng, v)
        };
        let b = {
            let v = rng.gen_range(0..=5);
            rand_small_qpoly(rng, v)
        };
        let pair = [a.clone(), b.clone()];
        t.check_result(dh_build_check(&qn, &pair), || {
            format!("case {case}: axioms on {a}, {b}")
        });
        for x in [a, b, MultiPoly::constant(rand_nonzero_rational(rng))] {
            let unit = classify(&qx(), &Element::Poly(x.clone()))
                .ok()
                .and_then(|c| c.unit);
            let by_norm = qn.norm(&x).map(|n| n == f1);
            t.check(by_norm.as_ref().ok() == unit.as_ref(), || {
                format!("unit test for {x}")
            });
        }
    }

    let qb = DHNorm::new(BoundedQPoly { config: cfg(8) });
    for case in 0..scale {
        if case % 2 == 0 {
            let (a, b) = loop {
                let (a, b) = (rng.gen_range(-30..=30i64), rng.gen_range(-30..=30i64));
                if a != 0 || b != 0 {
                    break (a, b);
                }
            };
            let mut en = integer_combinations(vec![big(a), big(b)]);
            let g = dh_generator(&zn, &mut en, 30);
            t.check(g.as_ref().is_ok_and(|g| g.abs() == big(a.gcd(&b))), || {
                format!("generator of ({a}, {b}): {g:?}")
            });
        } else {
            let gens = {
                let v = rng.gen_range(2..=3);
                rand_qpoly_list(rng, v)
            };
            let mut en = euclid_enumeration(BoundedQPoly { config: cfg(8) }, gens.clone());
            let g = dh_generator(&qb, &mut en, 64);
            let oracle = monic(&gcd_oracle(&gens));
            t.check(g.as_ref().is_ok_and(|g| monic(g) == oracle), || {
                let shown = gens
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ");
                format!("generator of ({shown}): {g:?}, expected {oracle}")
            });
        }
    }
}

fn rand_small_qpoly(rng: &mut ChaCha8Rng, deg: usize) -> MultiPoly {
    let mut c: Vec<Rational> = (0..=deg)
        .map(|_| ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2)))
        .collect();
    while c[deg].is_zero() {
        c[deg] = ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2));
    }
    revring::poly::univariate::from_dense(&c)
}

// ---------------------------------------------------------------------------
// factorisation

fn is_square(n: i64) -> bool {
    n >= 0 && {
        let r = (n as f64).sqrt().round() as i64;
        (r - 1..=r + 1).any(|s| s >= 0 && s * s == n)
    }
}

/// A random polynomial irreducible over the rationals, of degree at most
/// `max_deg`.
fn rand_irreducible(rng: &mut ChaCha8Rng, max_deg: usize) -> MultiPoly {
    match rng.gen_range(1..=max_deg.min(3)) {
        1 => rand_zpoly(rng, 1, 6),
        2 => loop {
            let p = rand_zpoly(rng, 2, 5);
            let c = |i| {
                p.coefficient(&ExponentVector::var(0, i))
                    .to_integer()
                    .to_i64()
                    .unwrap()
            };
            if !is_square(c(1) * c(1) - 4 * c(2) * c(0)) {
                break p;
            }
        },
        _ => {
            // x^3 - c with c not a cube
            let c = *[2, 3, 5, 6, 7, 10, -2, -3, -5, -6].choose(rng).unwrap();
            from_ints(&[-c, 0, 0, 1])
        }
    }
}

pub(super) fn factorization(rng: &mut ChaCha8Rng, scale: u64, t: &mut Tally) {
    let config = cfg(8);
    for case in 0..scale {
        let budget = rng.gen_range(1..=6usize);
        let mut known: Vec<MultiPoly> = Vec::new();
        let mut deg = 0;
        while deg < budget {
            let f = rand_irreducible(rng, budget - deg);
            deg += f.total_degree().unwrap() as usize;
            known.push(f);
        }
        let product = known.iter().fold(MultiPoly::one(), |acc, f| &acc * f);
        let random = case % 4 == 3;
        let p = if random {
            {
                let v = rng.gen_range(1..=6);
                rand_zpoly(rng, v, 9)
            }
        } else {
            product.scale(&rat(
                rng.gen_range(1..=12) * if rng.gen_bool(0.5) { 1 } else { -1 }
            ))
        };
        let ctx = || format!("case {case}: {p}");

        if let Some(fz) = t.check_result(factor_over_z(&p, &config), ctx) {
            let positive = fz
                .factors
                .iter()
                .filter(|f| !f.is_constant())
                .all(|f| content(f).is_one() && f.leading_sign() > 0);
            t.check(fz.product() == p && positive, || {
                format!("{}: Z factors {:?}", ctx(), fz.factors)
            });
        }
        let Some(fq) = t.check_result(factor_over_q(&p, &config), ctx) else {
            continue;
        };
        t.check(fq.product() == p, || {
            format!("{}: Q factors {:?}", ctx(), fq.factors)
        });
        for f in &fq.factors {
            let irr = is_irreducible_over_q(f, &config).unwrap_or(false);
            t.check(irr && monic(f) == *f, || format!("{}: factor {f}", ctx()));
        }
        if !random {
            t.check(
                factorization_equal(&QPoly, &fq.factors, &known).is_some(),
                || format!("{}: {:?} vs constructed {:?}", ctx(), fq.factors, known),
            );
        }
        // permuted, rescaled copies match, and so does the factorisation of
        // a unit multiple
        let mut shuffled: Vec<MultiPoly> = fq
            .factors
            .iter()
            .map(|f| f.scale(&rand_nonzero_rational(rng)))
            .collect();
        shuffled.shuffle(rng);
        let h = factorization_equal(&QPoly, &fq.factors, &shuffled);
        let consistent = h.as_ref().is_some_and(|h| {
            let distinct: BTreeSet<usize> = h.iter().copied().collect();
            distinct.len() == h.len()
                && h.iter()
                    .enumerate()
                    .all(|(i, &j)| QPoly.associates(&fq.factors[i], &shuffled[j]))
        });
        t.check(consistent, || format!("{}: permutation {h:?}", ctx()));
        let u = rand_nonzero_rational(rng);
        let again = factor_over_q(&p.scale(&u), &config);
        t.check(
            again
                .as_ref()
                .is_ok_and(|g| g.factors == fq.factors && g.unit == &fq.unit * &u),
            || format!("{}: unit multiple by {u}", ctx()),
        );
        if let Some(first) = fq.factors.first() {
            let mut other = fq.factors.clone();
            other[0] = first + &MultiPoly::one();
            t.check(
                factorization_equal(&QPoly, &fq.factors, &other).is_none(),
                || format!("{}: perturbed list matched", ctx()),
            );
        }
    }
    for case in 0..scale * 5 / 2 {
        let p = {
            let v = rng.gen_range(0..=6);
            rand_zpoly(rng, v, 20)
        };
        let q = {
            let v = rng.gen_range(0..=6);
            rand_zpoly(rng, v, 20)
        };
        t.check(content(&(&p * &q)) == content(&p) * content(&q), || {
            format!("Gauss pair {case}: {p}, {q}")
        });
    }
}
