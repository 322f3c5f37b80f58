//! Univariate algorithms on polynomials in `x0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExponentVector, MultiPoly, PolyError};
use crate::arith::Rational;
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotient: MultiPoly,
    pub remainder: MultiPoly,
}

/// Dense ascending coefficients `[a0, a1, ..., an]`; empty for zero.
pub fn to_dense(p: &MultiPoly) -> Result<Vec<Rational>, PolyError> {
    if !p.is_univariate() {
        return Err(PolyError::NotUnivariate);
    }
    let n = match p.total_degree() {
        None => return Ok(Vec::new()),
        Some(n) => n as usize,
    };
    let mut out = vec![Rational::zero(); n + 1];
    for (e, c) in p.terms() {
        out[e.get(0) as usize] = c.clone();
    }
    Ok(out)
}

pub fn from_dense(coeffs: &[Rational]) -> MultiPoly {
    MultiPoly::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (ExponentVector::var(0, i as u32), c.clone())),
    )
}

pub fn from_ints(coeffs: &[i64]) -> MultiPoly {
    from_dense(
        &coeffs
            .iter()
            .map(|&c| crate::arith::rat(c))
            .collect::<Vec<_>>(),
    )
}

/// `deg p`, or `None` for the zero polynomial.
pub fn degree(p: &MultiPoly) -> Option<usize> {
    p.total_degree().map(|d| d as usize)
}

pub fn leading_coefficient(p: &MultiPoly) -> Rational {
    p.leading_term()
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rational::zero)
}

pub fn evaluate(p: &MultiPoly, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for (e, c) in p.terms() {
        acc += c * num_traits::pow(x.clone(), e.get(0) as usize);
    }
    acc
}

/// Long division over the rationals: `p = d q + r` with `r = 0` or
/// `deg r < deg d`.
pub fn divide_long(p: &MultiPoly, d: &MultiPoly) -> Result<DivisionResult, PolyError> {
    if d.is_zero() {
        return Err(PolyError::DivisionByZeroPoly);
    }
    let pd = to_dense(p)?;
    let dd = to_dense(d)?;
    let m = dd.len() - 1;
    if pd.len() <= m {
        return Ok(DivisionResult {
            quotient: MultiPoly::zero(),
            remainder: p.clone(),
        });
    }
    let lead = dd[m].clone();
    let mut r = pd;
    let mut q = vec![Rational::zero(); r.len() - m];
    for k in (0..q.len()).rev() {
        let c = &r[k + m] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, dj) in dd.iter().enumerate() {
            r[k + j] -= &c * dj;
        }
        q[k] = c;
    }
    r.truncate(m);
    Ok(DivisionResult {
        quotient: from_dense(&q),
        remainder: from_dense(&r),
    })
}

/// Division by solving the linear system for the unknown coefficients
/// `e_0..e_{m-1}` of the remainder and `c_0..c_{n-m}` of the quotient.
///
/// Equating the coefficient of `x^i` in `p = d q + r` gives
/// `e_i + sum_j d_{i-j} c_j = p_i`. With unknowns ordered `(e, c)`, the
/// column of `c_j` is nonzero only in rows `j..=j+m`, so the matrix is upper
/// triangular with diagonal `1, ..., 1, d_m, ..., d_m`.
pub fn divide_matrix(p: &MultiPoly, d: &MultiPoly) -> Result<DivisionResult, PolyError> {
    if d.is_zero() {
        return Err(PolyError::DivisionByZeroPoly);
    }
    let pd = to_dense(p)?;
    let dd = to_dense(d)?;
    let m = dd.len() - 1;
    if pd.len() <= m {
        return Err(PolyError::DegreeTooSmall {
            p_degree: pd.len().saturating_sub(1),
            d_degree: m,
        });
    }
    let n = pd.len() - 1;
    let mut a = Matrix::zero(n + 1);
    for i in 0..m {
        a.set(i, i, Rational::one());
    }
    for j in 0..=n - m {
        for (k, dk) in dd.iter().enumerate() {
            a.set(j + k, m + j, dk.clone());
        }
    }
    let x = a
        .triangular_solve(&pd)
        .expect("division system is upper triangular with nonzero diagonal");
    Ok(DivisionResult {
        remainder: from_dense(&x[..m]),
        quotient: from_dense(&x[m..]),
    })
}

/// Scale to leading coefficient one; zero stays zero.
pub fn monic(p: &MultiPoly) -> MultiPoly {
    let lc = leading_coefficient(p);
    if lc.is_zero() {
        return MultiPoly::zero();
    }
    p.scale(&(Rational::one() / lc))
}

/// Monic gcd by Euclid's algorithm with the degree norm.
pub fn gcd_univariate(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly, PolyError> {
    if p.is_zero() && q.is_zero() {
        return Err(PolyError::BothZero);
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let r = divide_long(&a, &b)?.remainder;
        a = b;
        b = r;
    }
    Ok(monic(&a))
}

/// `(content, primitive)` with content positive and `p = content * primitive`.
pub fn content_primitive(p: &MultiPoly) -> Result<(BigInt, MultiPoly), PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !p.has_integer_coefficients() {
        return Err(PolyError::NotIntegral);
    }
    let c = content(p);
    let prim = p.scale(&Rational::new(BigInt::one(), c.clone()));
    Ok((c, prim))
}

/// Gcd of the integer coefficients (positive; zero for the zero polynomial).
pub fn content(p: &MultiPoly) -> BigInt {
    p.terms()
        .fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c.numer()))
}

pub fn is_primitive(p: &MultiPoly) -> bool {
    p.has_integer_coefficients() && content(p).is_one()
}

pub fn derivative(p: &MultiPoly) -> MultiPoly {
    MultiPoly::from_terms(p.terms().filter(|(e, _)| e.get(0) > 0).map(|(e, c)| {
        let k = e.get(0);
        (
            ExponentVector::var(0, k - 1),
            c * Rational::from_integer(BigInt::from(k)),
        )
    }))
}

/// Product of the distinct monic irreducible factors, `p / gcd(p, p')`.
pub fn squarefree_part(p: &MultiPoly) -> Result<MultiPoly, PolyError> {
    if p.is_zero() {
        return Ok(MultiPoly::zero());
    }
    let g = gcd_univariate(p, &derivative(p))?;
    Ok(monic(&divide_long(p, &g)?.quotient))
}

/// Sign-normalised primitive integer polynomial associated to `p` over the
/// rationals: integer coefficients with gcd one and positive leading
/// coefficient.
pub fn integer_primitive(p: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return MultiPoly::zero();
    }
    let mut c = p.rational_content();
    if leading_coefficient(p).is_negative() {
        c = -c;
    }
    p.scale(&(Rational::one() / c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, ratio};

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn long_division_examples() {
        let r = divide_long(&p("x0^2 + 1"), &p("x0 + 1")).unwrap();
        assert_eq!(r.quotient, p("x0 - 1"));
        assert_eq!(r.remainder, p("2"));
        let r = divide_long(&p("x0^3 - x0"), &p("x0^3 - x0")).unwrap();
        assert_eq!((r.quotient, r.remainder), (p("1"), p("0")));
        let r = divide_long(&p("x0 + 5"), &p("x0^2")).unwrap();
        assert_eq!((r.quotient, r.remainder), (p("0"), p("x0 + 5")));
        assert_eq!(
            divide_long(&p("x0"), &MultiPoly::zero()),
            Err(PolyError::DivisionByZeroPoly)
        );
    }

    #[test]
    fn matrix_division_examples() {
        let r = divide_matrix(&p("x0^2 + 1"), &p("x0 + 1")).unwrap();
        assert_eq!((r.quotient, r.remainder), (p("x0 - 1"), p("2")));
        let r = divide_matrix(&p("x0^3"), &p("x0")).unwrap();
        assert_eq!((r.quotient, r.remainder), (p("x0^2"), p("0")));
        let r = divide_matrix(&p("2*x0 + 3"), &p("2")).unwrap();
        assert_eq!((r.quotient, r.remainder), (p("x0 + 3/2"), p("0")));
        assert!(matches!(
            divide_matrix(&p("x0"), &p("x0^2")),
            Err(PolyError::DegreeTooSmall {
                p_degree: 1,
                d_degree: 2
            })
        ));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(
            gcd_univariate(&p("x0^2 - 1"), &p("x0 - 1")).unwrap(),
            p("x0 - 1")
        );
        assert_eq!(
            gcd_univariate(&p("3*x0 + 6"), &p("0")).unwrap(),
            p("x0 + 2")
        );
        assert_eq!(
            gcd_univariate(&p("x0^2 + 1"), &p("x0^2 - 1")).unwrap(),
            p("1")
        );
        assert_eq!(gcd_univariate(&p("0"), &p("0")), Err(PolyError::BothZero));
    }

    #[test]
    fn content_examples() {
        assert_eq!(
            content_primitive(&p("4*x0 + 6")).unwrap(),
            (int(2), p("2*x0 + 3"))
        );
        assert_eq!(
            content_primitive(&p("x0 + 1")).unwrap(),
            (int(1), p("x0 + 1"))
        );
        assert_eq!(
            content_primitive(&p("-6*x0^2")).unwrap(),
            (int(6), p("-x0^2"))
        );
        assert_eq!(content_primitive(&p("0")), Err(PolyError::ZeroPolynomial));
        assert_eq!(content_primitive(&p("1/2*x0")), Err(PolyError::NotIntegral));
    }

    #[test]
    fn helpers() {
        assert_eq!(derivative(&p("x0^3 + 2*x0 + 7")), p("3*x0^2 + 2"));
        assert_eq!(squarefree_part(&p("x0^3 - x0^2")).unwrap(), p("x0^2 - x0"));
        assert_eq!(evaluate(&p("x0^2 - 1"), &rat(3)), rat(8));
        assert_eq!(evaluate(&p("x0 + 1/2"), &ratio(1, 2)), rat(1));
        assert_eq!(integer_primitive(&p("-1/2*x0 + 1/3")), p("3*x0 - 2"));
        assert_eq!(to_dense(&p("x1")), Err(PolyError::NotUnivariate));
    }
}
