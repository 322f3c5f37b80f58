//! Seeded acceptance suites. Each suite draws all randomness from a
//! ChaCha stream keyed by the seed, so a report is a function of
//! `(name, seed, scale)` apart from its wall time.

use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use revring::arith::{ratio, Rational};
use revring::poly::univariate::from_dense;
use revring::MultiPoly;
use thiserror::Error;

use crate::report::{Report, Tally};

mod algebra;
mod lab;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

type SuiteFn = fn(&mut ChaCha8Rng, u64, &mut Tally);

/// Registered suites with their default scales, in acceptance order.
pub const SUITES: &[(&str, u64)] = &[
    ("division-equivalence", 1000),
    ("linalg-identities", 500),
    ("radical-identities", 300),
    ("gcd-bezout", 1000),
    ("pid-t", 500),
    ("dh-norm", 200),
    ("priority-merge", 20),
    ("dense-set", 10),
    ("conidis", 500),
    ("zorn", 20),
    ("factorization", 200),
];

fn suite_fn(name: &str) -> Option<SuiteFn> {
    Some(match name {
        "division-equivalence" => algebra::division_equivalence,
        "linalg-identities" => algebra::linalg_identities,
        "radical-identities" => algebra::radical_identities,
        "gcd-bezout" => algebra::gcd_bezout,
        "pid-t" => algebra::pid_t,
        "dh-norm" => algebra::dh_norm,
        "priority-merge" => lab::priority_merge,
        "dense-set" => lab::dense_set,
        "conidis" => lab::conidis,
        "zorn" => lab::zorn,
        "factorization" => algebra::factorization,
        _ => return None,
    })
}

pub fn default_scale(name: &str) -> Option<u64> {
    SUITES.iter().find(|(n, _)| *n == name).map(|&(_, s)| s)
}

pub fn run_suite(name: &str, seed: u64, scale: u64) -> Result<Report, UnknownSuite> {
    let f = suite_fn(name).ok_or_else(|| UnknownSuite(name.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    let start = Instant::now();
    f(&mut rng, scale, &mut tally);
    Ok(Report {
        suite: name.to_string(),
        seed,
        scale,
        cases: tally.cases,
        failures: tally.failures,
        failure_count: tally.failure_count,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn rand_nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let q = rand_rational(rng);
        if q != Rational::from_integer(0.into()) {
            return q;
        }
    }
}

/// Univariate polynomial of exact degree `deg` with small rational
/// coefficients.
fn rand_qpoly(rng: &mut ChaCha8Rng, deg: usize) -> MultiPoly {
    let mut c: Vec<Rational> = (0..deg).map(|_| rand_rational(rng)).collect();
    c.push(rand_nonzero_rational(rng));
    from_dense(&c)
}

/// Integer polynomial of exact degree `deg`, coefficients in `-r..=r`.
fn rand_zpoly(rng: &mut ChaCha8Rng, deg: usize, r: i64) -> MultiPoly {
    let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-r..=r)).collect();
    let mut lead = 0;
    while lead == 0 {
        lead = rng.gen_range(-r..=r);
    }
    c.push(lead);
    revring::poly::univariate::from_ints(&c)
}
