//! Factorisation of univariate polynomials over the integers and the
//! rationals by Kronecker's method.
//!
//! A primitive integer polynomial `f` is first stripped of its rational
//! roots. The remaining factors have no linear factor, so `f(a) != 0` for
//! every integer `a`, and any factor `g` of degree `d` is determined by its
//! values at `d + 1` integer points, each of which divides the corresponding
//! value of `f`. Candidate value tuples are interpolated in Newton form. The
//! divided differences of an integer polynomial at integer nodes are
//! integers, which prunes most tuples before they are completed. Degrees are
//! searched upward, so a factor found at degree `d` is irreducible: every
//! smaller degree was exhausted first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::univariate::{content_primitive, from_dense, to_dense};
use super::{MultiPoly, PolyError};
use crate::arith::{divisors, factor_integer, Rational};

pub const DEFAULT_DEGREE_BOUND: usize = 8;
pub const DEGREE_BOUND_ENV: &str = "REVRING_DEGREE_BOUND";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorConfig {
    pub degree_bound: usize,
}

impl Default for FactorConfig {
    fn default() -> Self {
        Self {
            degree_bound: DEFAULT_DEGREE_BOUND,
        }
    }
}

impl FactorConfig {
    /// Default bound, overridden by `REVRING_DEGREE_BOUND` when it parses.
    pub fn from_env() -> Self {
        let degree_bound = std::env::var(DEGREE_BOUND_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_DEGREE_BOUND);
        Self { degree_bound }
    }
}

/// `unit * prod(factors)`, factors sorted by degree and then coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFactorization {
    pub unit: Rational,
    pub factors: Vec<MultiPoly>,
}

impl PolyFactorization {
    pub fn product(&self) -> MultiPoly {
        self.factors
            .iter()
            .fold(MultiPoly::constant(self.unit.clone()), |acc, f| &acc * f)
    }
}

/// Factorisation in `Z[x]`: the unit is the sign of the leading coefficient,
/// the content contributes its prime factors as constants, and the primitive
/// part splits into irreducibles with positive leading coefficient.
pub fn factor_over_z(p: &MultiPoly, cfg: &FactorConfig) -> Result<PolyFactorization, PolyError> {
    let (content, prim) = content_primitive(p)?;
    check_degree(&prim, cfg)?;
    let mut prim_dense = dense_ints(&prim)?;
    let mut unit = Rational::one();
    if prim_dense.last().is_some_and(|c| c.is_negative()) {
        unit = -unit;
        prim_dense.iter_mut().for_each(|c| *c = -c.clone());
    }
    let mut factors = Vec::new();
    for (q, e) in factor_integer(&content) {
        for _ in 0..e {
            factors.push(MultiPoly::constant(Rational::from_integer(q.clone())));
        }
    }
    if prim_dense.len() > 1 {
        factors.extend(factor_primitive(prim_dense).iter().map(|g| poly_of(g)));
    }
    factors.sort();
    Ok(PolyFactorization { unit, factors })
}

/// Factorisation in `Q[x]` into monic irreducibles and a rational unit.
pub fn factor_over_q(p: &MultiPoly, cfg: &FactorConfig) -> Result<PolyFactorization, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !p.is_univariate() {
        return Err(PolyError::NotUnivariate);
    }
    check_degree(p, cfg)?;
    let c = p.rational_content();
    let integral = p.scale(&(Rational::one() / &c));
    let z = factor_over_z(&integral, cfg)?;
    let mut unit = c * z.unit;
    let mut factors = Vec::new();
    for f in z.factors {
        let lc = f
            .leading_term()
            .map(|(_, v)| v.clone())
            .expect("nonzero factor");
        if f.is_constant() {
            unit *= lc;
        } else {
            factors.push(f.scale(&(Rational::one() / &lc)));
            unit *= lc;
        }
    }
    factors.sort();
    Ok(PolyFactorization { unit, factors })
}

/// Irreducibility in `Q[x]`: nonconstant with a single factor.
pub fn is_irreducible_over_q(p: &MultiPoly, cfg: &FactorConfig) -> Result<bool, PolyError> {
    if p.is_constant() {
        return Ok(false);
    }
    Ok(factor_over_q(p, cfg)?.factors.len() == 1)
}

fn check_degree(p: &MultiPoly, cfg: &FactorConfig) -> Result<(), PolyError> {
    if !p.is_univariate() {
        return Err(PolyError::NotUnivariate);
    }
    let degree = p.total_degree().unwrap_or(0) as usize;
    if degree > cfg.degree_bound {
        return Err(PolyError::DegreeBoundExceeded {
            degree,
            bound: cfg.degree_bound,
        });
    }
    Ok(())
}

fn dense_ints(p: &MultiPoly) -> Result<Vec<BigInt>, PolyError> {
    to_dense(p)?
        .into_iter()
        .map(|c| {
            if c.denom().is_one() {
                Ok(c.numer().clone())
            } else {
                Err(PolyError::NotIntegral)
            }
        })
        .collect()
}

fn poly_of(f: &[BigInt]) -> MultiPoly {
    from_dense(
        &f.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect::<Vec<_>>(),
    )
}

fn eval(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Exact quotient `f / g` in `Z[x]`, if it exists.
fn div_exact(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let m = g.len() - 1;
    if f.len() < g.len() {
        return None;
    }
    let lead = &g[m];
    let mut r = f.to_vec();
    let mut q = vec![BigInt::zero(); f.len() - m];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + m].div_rem(lead);
        if !rem.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, gj) in g.iter().enumerate() {
            r[k + j] -= &c * gj;
        }
        q[k] = c;
    }
    r[..m].iter().all(Zero::is_zero).then_some(q)
}

/// Irreducible factors (with repetition) of a primitive polynomial of
/// positive degree and positive leading coefficient.
fn factor_primitive(mut f: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    while f.len() > 1 && f[0].is_zero() {
        out.push(vec![BigInt::zero(), BigInt::one()]);
        f.remove(0);
    }
    strip_rational_roots(&mut f, &mut out);
    let mut d = 2;
    while 2 * d < f.len() {
        match kronecker_factor(&f, d) {
            Some(g) => {
                f = div_exact(&f, &g).expect("candidate divides");
                out.push(g);
            }
            None => d += 1,
        }
    }
    if f.len() > 1 {
        out.push(f);
    }
    out
}

fn strip_rational_roots(f: &mut Vec<BigInt>, out: &mut Vec<Vec<BigInt>>) {
    if f.len() <= 1 {
        return;
    }
    let nums = divisors(&f[0]);
    let dens = divisors(f.last().unwrap());
    for q in &dens {
        for p in &nums {
            if !p.gcd(q).is_one() {
                continue;
            }
            for sign in [-1, 1] {
                // linear factor q x - sign*p
                let g = vec![-(p * BigInt::from(sign)), q.clone()];
                while f.len() > 1 {
                    match div_exact(f, &g) {
                        Some(h) => {
                            out.push(g.clone());
                            *f = h;
                        }
                        None => break,
                    }
                }
            }
        }
    }
}

/// Signed divisors `±d` of a nonzero integer, positive ones first.
fn signed_divisors(v: &BigInt) -> Vec<BigInt> {
    let pos = divisors(v);
    let mut out = pos.clone();
    out.extend(pos.into_iter().map(|d| -d));
    out
}

fn choose_points(f: &[BigInt], count: usize) -> Vec<(BigInt, BigInt)> {
    let mut candidates: Vec<(usize, usize, BigInt, BigInt)> = (0..6 * count as i64 + 6)
        .map(|k| {
            // 0, 1, -1, 2, -2, ...
            let x = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
            BigInt::from(x)
        })
        .enumerate()
        .map(|(order, x)| {
            let v = eval(f, &x);
            let count = if v.abs().to_u64().is_some_and(|m| m < 1 << 40) {
                divisors(&v).len()
            } else {
                usize::MAX
            };
            (count, order, x, v)
        })
        .collect();
    candidates.sort_by_key(|c| (c.0, c.1));
    candidates
        .into_iter()
        .take(count)
        .map(|(_, _, x, v)| (x, v))
        .collect()
}

/// Searches for a factor of exact degree `d`, returned with positive leading
/// coefficient.
fn kronecker_factor(f: &[BigInt], d: usize) -> Option<Vec<BigInt>> {
    let points = choose_points(f, d + 1);
    let choices: Vec<Vec<BigInt>> = points
        .iter()
        .enumerate()
        .map(|(i, (_, v))| {
            let mut ds = signed_divisors(v);
            if i == 0 {
                // g and -g are both factors; fix the sign at the first node
                ds.retain(|x| x.is_positive());
            }
            ds
        })
        .collect();
    let nodes: Vec<BigInt> = points.into_iter().map(|(x, _)| x).collect();
    let lead = f.last().unwrap().clone();
    let mut table: Vec<Vec<BigInt>> = Vec::with_capacity(d + 1);
    search(f, &nodes, &choices, &lead, &mut table)
}

// Depth-first over value tuples. `table[k]` is the k-th row of the divided
// difference table: table[k][j] = g[x_{k-j}, ..., x_k].
fn search(
    f: &[BigInt],
    nodes: &[BigInt],
    choices: &[Vec<BigInt>],
    lead: &BigInt,
    table: &mut Vec<Vec<BigInt>>,
) -> Option<Vec<BigInt>> {
    let k = table.len();
    if k == nodes.len() {
        let top = &table[k - 1][k - 1];
        if top.is_zero() || !(lead % top).is_zero() {
            return None;
        }
        let mut g = newton_to_dense(nodes, table);
        if g.last().unwrap().is_negative() {
            g.iter_mut().for_each(|c| *c = -c.clone());
        }
        return div_exact(f, &g).map(|_| g);
    }
    'value: for y in &choices[k] {
        let mut row = vec![y.clone()];
        for j in 1..=k {
            let diff = &row[j - 1] - &table[k - 1][j - 1];
            let (q, r) = diff.div_rem(&(&nodes[k] - &nodes[k - j]));
            if !r.is_zero() {
                continue 'value;
            }
            row.push(q);
        }
        table.push(row);
        if let Some(g) = search(f, nodes, choices, lead, table) {
            return Some(g);
        }
        table.pop();
    }
    None
}

fn newton_to_dense(nodes: &[BigInt], table: &[Vec<BigInt>]) -> Vec<BigInt> {
    let d = nodes.len() - 1;
    let mut g = vec![table[d][d].clone()];
    for k in (0..d).rev() {
        // g := g * (x - x_k) + c_k
        let mut next = vec![BigInt::zero(); g.len() + 1];
        for (i, c) in g.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &nodes[k];
        }
        next[0] += &table[k][k];
        g = next;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn cfg() -> FactorConfig {
        FactorConfig::default()
    }

    #[test]
    fn rational_examples() {
        let f = factor_over_q(&p("x0^2 - 1"), &cfg()).unwrap();
        assert_eq!(f.unit, rat(1));
        assert_eq!(f.factors, vec![p("x0 - 1"), p("x0 + 1")]);
        let f = factor_over_q(&p("x0^2 + 1"), &cfg()).unwrap();
        assert_eq!(f.factors, vec![p("x0^2 + 1")]);
        let f = factor_over_q(&p("3*x0^2 - 3/4"), &cfg()).unwrap();
        assert_eq!(f.unit, rat(3));
        assert_eq!(f.factors, vec![p("x0 - 1/2"), p("x0 + 1/2")]);
    }

    #[test]
    fn integer_examples() {
        let f = factor_over_z(&p("6*x0"), &cfg()).unwrap();
        assert_eq!(f.unit, rat(1));
        assert_eq!(f.factors, vec![p("2"), p("3"), p("x0")]);
        let f = factor_over_z(&p("-2*x0^2 + 2"), &cfg()).unwrap();
        assert_eq!(f.unit, rat(-1));
        assert_eq!(f.factors, vec![p("2"), p("x0 - 1"), p("x0 + 1")]);
        assert_eq!(f.product(), p("-2*x0^2 + 2"));
    }

    #[test]
    fn nonlinear_factors_found() {
        // (x^2 + 1)(x^2 + x + 2)(2x^2 - 3), no rational roots
        let a = p("x0^2 + 1");
        let b = p("x0^2 + x0 + 2");
        let c = p("2*x0^2 - 3");
        let prod = &(&a * &b) * &c;
        let f = factor_over_z(&prod, &cfg()).unwrap();
        assert_eq!(f.product(), prod);
        assert_eq!(f.factors.len(), 3);
        for g in [a, b, c] {
            assert!(f.factors.contains(&g), "missing {g}");
        }
    }

    #[test]
    fn quartic_irreducibles() {
        for s in ["x0^4 + 1", "x0^4 - 2", "x0^4 + x0 + 1", "x0^3 - 2"] {
            let f = factor_over_z(&p(s), &cfg()).unwrap();
            assert_eq!(f.factors, vec![p(s)], "{s}");
        }
        // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2)
        let f = factor_over_z(&p("x0^4 + 4"), &cfg()).unwrap();
        assert_eq!(f.factors, vec![p("x0^2 - 2*x0 + 2"), p("x0^2 + 2*x0 + 2")]);
    }

    #[test]
    fn repeated_factors() {
        let f = factor_over_q(&p("x0^5 - 2*x0^4 + x0^3"), &cfg()).unwrap();
        assert_eq!(
            f.factors,
            vec![p("x0"), p("x0"), p("x0"), p("x0 - 1"), p("x0 - 1")]
        );
    }

    #[test]
    fn bounds_and_errors() {
        assert_eq!(
            factor_over_q(&p("0"), &cfg()),
            Err(PolyError::ZeroPolynomial)
        );
        let small = FactorConfig { degree_bound: 2 };
        assert_eq!(
            factor_over_q(&p("x0^3"), &small),
            Err(PolyError::DegreeBoundExceeded {
                degree: 3,
                bound: 2
            })
        );
        assert_eq!(
            factor_over_z(&p("1/2*x0"), &cfg()),
            Err(PolyError::NotIntegral)
        );
        let f = factor_over_z(&p("-12"), &cfg()).unwrap();
        assert_eq!(f.unit, rat(-1));
        assert_eq!(f.factors, vec![p("2"), p("2"), p("3")]);
    }
}
