//! Integer helpers shared by the algebra modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Prime factorisation of `|n|` by trial division, primes ascending.
///
/// Returns an empty list for `n = 0` and `n = ±1`.
pub fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    if let Some(m) = n.abs().to_u64() {
        for (p, e) in factor_u64(m) {
            out.push((BigInt::from(p), e));
        }
        return out;
    }
    let mut m = n.abs();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if m > BigInt::one() {
        out.push((m, 1));
    }
    out
}

pub fn factor_u64(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Number of prime factors of `|n|` counted with multiplicity.
pub fn big_omega(n: &BigInt) -> u32 {
    factor_integer(n).iter().map(|(_, e)| e).sum()
}

pub fn is_prime(n: &BigInt) -> bool {
    let f = factor_integer(n);
    f.len() == 1 && f[0].1 == 1
}

pub fn is_prime_power(n: &BigInt) -> bool {
    factor_integer(n).len() == 1
}

/// Squarefree kernel: the product of the distinct primes dividing `|n|`;
/// `rad(0) = 0`.
pub fn squarefree_kernel(n: &BigInt) -> BigInt {
    if n.is_zero() {
        return BigInt::zero();
    }
    factor_integer(n)
        .into_iter()
        .fold(BigInt::one(), |acc, (p, _)| acc * p)
}

/// Positive divisors of `n > 0`, ascending.
pub fn divisors_u64(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Positive divisors of `|n|` for `n != 0`, ascending.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut ds = vec![BigInt::one()];
    for (p, e) in factor_integer(n) {
        let mut next = Vec::with_capacity(ds.len() * (e as usize + 1));
        for d in &ds {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        ds = next;
    }
    ds.sort();
    ds
}

pub fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

pub fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        BigInt::zero()
    } else {
        a.lcm(b)
    }
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Binomial coefficient `C(n, k)` as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
