use std::collections::BTreeSet;

use super::FracError;
use crate::lab::schedule::StageEnumeration;
use crate::poly::{ExponentVector, MultiPoly};

pub const X_VAR: usize = 0;
pub const Y_VAR: usize = 1;

/// Variable index of `z_j`.
pub fn z_var(j: u64) -> usize {
    j as usize + 2
}

pub fn xy() -> MultiPoly {
    MultiPoly::monomial(
        ExponentVector::from_pairs([(X_VAR, 1), (Y_VAR, 1)]),
        crate::arith::rat(1),
    )
}

/// The ideal of `Z[x, y, z0, z1, ...]` grown from `(xy)` by two disjoint
/// schedules: `j` entering `A` at stage `s` adds `z_j^s`, entering `B` adds
/// `(z_j - 1)^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StagedRingHandle {
    a: StageEnumeration,
    b: StageEnumeration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct MonicGenerator {
    var: usize,
    degree: u32,
    poly: MultiPoly,
}

impl StagedRingHandle {
    pub fn new(a: StageEnumeration, b: StageEnumeration) -> Result<Self, FracError> {
        for (x, s) in a.entries().into_iter().chain(b.entries()) {
            if s == 0 {
                return Err(FracError::StageZeroEntry { element: x });
            }
        }
        if let Some(x) = a.elements().intersection(&b.elements()).next() {
            return Err(FracError::SchedulesNotDisjoint { element: *x });
        }
        Ok(Self { a, b })
    }

    pub fn schedule_a(&self) -> &StageEnumeration {
        &self.a
    }

    pub fn schedule_b(&self) -> &StageEnumeration {
        &self.b
    }

    fn monic_generators(&self, stage: u64) -> Vec<MonicGenerator> {
        let one = MultiPoly::one();
        let mut out = Vec::new();
        for (j, s) in self.a.entries() {
            if s <= stage {
                let v = z_var(j);
                out.push(MonicGenerator {
                    var: v,
                    degree: s as u32,
                    poly: MultiPoly::var(v).pow(s as u32),
                });
            }
        }
        for (j, s) in self.b.entries() {
            if s <= stage {
                let v = z_var(j);
                out.push(MonicGenerator {
                    var: v,
                    degree: s as u32,
                    poly: (&MultiPoly::var(v) - &one).pow(s as u32),
                });
            }
        }
        out
    }

    /// Generators present once stage `s` has run, `xy` first.
    pub fn generators_at(&self, s: u64) -> Vec<MultiPoly> {
        std::iter::once(xy())
            .chain(self.monic_generators(s).into_iter().map(|g| g.poly))
            .collect()
    }

    /// `(stage, generator)` for every generator, in order of addition.
    pub fn generator_log(&self) -> Vec<(u64, MultiPoly)> {
        let mut log: Vec<(u64, MultiPoly)> = vec![(0, xy())];
        let last = self.a.last_stage().max(self.b.last_stage()).unwrap_or(0);
        for s in 1..=last {
            let before = self.monic_generators(s - 1).len();
            log.extend(
                self.monic_generators(s)
                    .into_iter()
                    .skip(before)
                    .map(|g| (s, g.poly)),
            );
        }
        log.sort_by_key(|(s, _)| *s);
        log
    }
}

/// Reduces `p` modulo a polynomial that is monic of degree `g.degree` in
/// the single variable `g.var`.
fn reduce_monic(p: &MultiPoly, g: &MonicGenerator) -> MultiPoly {
    let lead = ExponentVector::var(g.var, g.degree);
    let mut r = p.clone();
    loop {
        let top = r
            .terms()
            .filter(|(e, _)| e.get(g.var) >= g.degree)
            .max_by_key(|(e, _)| e.get(g.var))
            .map(|(e, c)| (e.clone(), c.clone()));
        let Some((e, c)) = top else {
            return r;
        };
        let shift = e.checked_sub(&lead).expect("exponent at least the degree");
        r = &r - &g.poly.shift(&shift).scale(&c);
    }
}

/// Decides `p ∈ I` using the generators present at stage `deg p`.
pub fn staged_membership(h: &StagedRingHandle, p: &MultiPoly) -> Result<bool, FracError> {
    let stage = p.total_degree().unwrap_or(0);
    staged_membership_at(h, p, stage)
}

/// Membership in the ideal generated at stage `stage`.
///
/// Each generator other than `xy` is monic in its own variable `z_j`, and
/// distinct generators use distinct variables, so the quotient `Q` of
/// `Z[x, y, z]` by them is a free `Z[x, y, ...]`-module on the monomials
/// with `z_j`-degree below the generator's degree, and reducing `p`
/// modulo each generator in turn stays integral and lands on that basis.
/// Multiplying by `xy` maps the basis into `xy` times itself, so `p ∈ I`
/// iff the reduced form lies in `xy Q`, that is iff every one of its terms is
/// divisible by `xy`.
pub fn staged_membership_at(
    h: &StagedRingHandle,
    p: &MultiPoly,
    stage: u64,
) -> Result<bool, FracError> {
    if !p.has_integer_coefficients() {
        return Err(FracError::NotIntegral);
    }
    let mut r = p.clone();
    for g in h.monic_generators(stage) {
        r = reduce_monic(&r, &g);
    }
    let xy_exp = ExponentVector::from_pairs([(X_VAR, 1), (Y_VAR, 1)]);
    let ok = r.support().all(|e| xy_exp.divides(e));
    Ok(ok)
}

/// Membership in `√I = (xy, z_j : j ∈ A, z_j - 1 : j ∈ B)` over all entries
/// of the schedules.
#[derive(Debug, Clone)]
pub struct RadicalOracle {
    handle: StagedRingHandle,
}

impl RadicalOracle {
    pub fn new(handle: StagedRingHandle) -> Self {
        Self { handle }
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        let mut r = p.clone();
        for j in self.handle.a.elements() {
            r = r.substitute(z_var(j), &MultiPoly::zero());
        }
        for j in self.handle.b.elements() {
            r = r.substitute(z_var(j), &MultiPoly::one());
        }
        let xy_exp = ExponentVector::from_pairs([(X_VAR, 1), (Y_VAR, 1)]);
        let ok = r.support().all(|e| xy_exp.divides(e));
        ok
    }
}

/// `X_J ∩ [0, horizon)` for an ideal `J` given by a membership oracle.
///
/// The oracle is checked to contain `xy`, `z_j` for `j ∈ A` and `z_j - 1`
/// for `j ∈ B` below the horizon.
pub fn extract_separator(
    h: &StagedRingHandle,
    oracle: &dyn Fn(&MultiPoly) -> bool,
    horizon: u64,
) -> Result<BTreeSet<u64>, FracError> {
    let one = MultiPoly::one();
    let missing = |p: MultiPoly| FracError::OracleNotExtendingRadical {
        element: p.to_string(),
    };
    if !oracle(&xy()) {
        return Err(missing(xy()));
    }
    for j in h.a.elements().into_iter().filter(|&j| j < horizon) {
        let z = MultiPoly::var(z_var(j));
        if !oracle(&z) {
            return Err(missing(z));
        }
    }
    for j in h.b.elements().into_iter().filter(|&j| j < horizon) {
        let z1 = &MultiPoly::var(z_var(j)) - &one;
        if !oracle(&z1) {
            return Err(missing(z1));
        }
    }
    let mut out = BTreeSet::new();
    for n in 0..horizon {
        let z = MultiPoly::var(z_var(n));
        let in_z = oracle(&z);
        if in_z && oracle(&(&z - &one)) {
            return Err(FracError::SeparationViolation { index: n });
        }
        if in_z {
            out.insert(n);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn handle(a: &[(u64, u64)], b: &[(u64, u64)]) -> StagedRingHandle {
        StagedRingHandle::new(
            StageEnumeration::from_entries(a.iter().copied()),
            StageEnumeration::from_entries(b.iter().copied()),
        )
        .unwrap()
    }

    #[test]
    fn membership_examples() {
        let h = handle(&[(1, 2)], &[]);
        assert!(staged_membership(&h, &p("x0*x1")).unwrap());
        // z_1 is x3
        assert!(staged_membership(&h, &p("x3^2")).unwrap());
        assert!(!staged_membership(&h, &p("x3")).unwrap());
        assert!(!staged_membership(&h, &p("1")).unwrap());
        assert!(staged_membership(&h, &p("0")).unwrap());
        assert!(staged_membership(&h, &p("x0*x1*x4 + 3*x3^5 - x0^2*x1")).unwrap());
        assert!(!staged_membership(&h, &p("x0 + x0*x1")).unwrap());
    }

    #[test]
    fn b_generators_reduce_integrally() {
        let h = handle(&[], &[(0, 2)]);
        // (z_0 - 1)^2 = x2^2 - 2 x2 + 1
        assert!(staged_membership(&h, &p("x2^2 - 2*x2 + 1")).unwrap());
        assert!(staged_membership(&h, &p("x2^3 - 3*x2 + 2")).unwrap());
        assert!(!staged_membership(&h, &p("x2 - 1")).unwrap());
        assert!(staged_membership(&h, &p("x2^2*x5 - 2*x2*x5 + x5 + x0*x1")).unwrap());
    }

    #[test]
    fn membership_is_stage_stable() {
        let h = handle(&[(0, 1), (3, 4)], &[(1, 2), (2, 3)]);
        let samples = [
            "x2",
            "x2*x0",
            "x3^2 - 2*x3 + 1",
            "x5^4 + x0*x1",
            "x4^3 - 1",
            "7",
            "x5^3",
        ];
        for s in samples {
            let q = p(s);
            let base = staged_membership(&h, &q).unwrap();
            for extra in 0..6 {
                let at = q.total_degree().unwrap() + extra;
                assert_eq!(
                    staged_membership_at(&h, &q, at).unwrap(),
                    base,
                    "{s} at {at}"
                );
            }
        }
    }

    #[test]
    fn construction_errors() {
        let a = StageEnumeration::from_entries([(1, 2)]);
        let b = StageEnumeration::from_entries([(1, 3)]);
        assert_eq!(
            StagedRingHandle::new(a, b),
            Err(FracError::SchedulesNotDisjoint { element: 1 })
        );
        let a = StageEnumeration::from_entries([(4, 0)]);
        assert_eq!(
            StagedRingHandle::new(a, StageEnumeration::empty()),
            Err(FracError::StageZeroEntry { element: 4 })
        );
    }

    #[test]
    fn generator_log_records_stages() {
        let h = handle(&[(1, 2)], &[(2, 3)]);
        let log = h.generator_log();
        assert_eq!(log.len(), 3);
        assert_eq!(log[0], (0, p("x0*x1")));
        assert_eq!(log[1], (2, p("x3^2")));
        assert_eq!(log[2], (3, p("x4^3 - 3*x4^2 + 3*x4 - 1")));
        assert_eq!(h.generators_at(2).len(), 2);
    }

    #[test]
    fn separator_from_radical() {
        let h = handle(&[(1, 2)], &[(2, 3)]);
        let rad = RadicalOracle::new(h.clone());
        let x = extract_separator(&h, &|q| rad.contains(q), 4).unwrap();
        assert_eq!(x, BTreeSet::from([1]));

        let empty = handle(&[], &[]);
        let rad = RadicalOracle::new(empty.clone());
        assert_eq!(
            extract_separator(&empty, &|q| rad.contains(q), 5).unwrap(),
            BTreeSet::new()
        );
        // J = √I + (z_0, z_3) is still proper and separating
        let bigger = |q: &MultiPoly| {
            rad.contains(
                &q.substitute(z_var(0), &MultiPoly::zero())
                    .substitute(z_var(3), &MultiPoly::zero()),
            )
        };
        assert_eq!(
            extract_separator(&empty, &bigger, 5).unwrap(),
            BTreeSet::from([0, 3])
        );
    }

    #[test]
    fn adversarial_oracles() {
        let h = handle(&[(1, 2)], &[(2, 3)]);
        let rad = RadicalOracle::new(h.clone());
        let bad = |q: &MultiPoly| *q == p("x4") || *q == p("x4 - 1") || rad.contains(q);
        assert_eq!(
            extract_separator(&h, &bad, 4),
            Err(FracError::SeparationViolation { index: 2 })
        );
        let small = |q: &MultiPoly| *q == xy();
        assert_eq!(
            extract_separator(&h, &small, 4),
            Err(FracError::OracleNotExtendingRadical {
                element: "x3".into()
            })
        );
    }
}
