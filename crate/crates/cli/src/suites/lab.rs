use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use revring::arith::{rat, Rational};
use revring::lab::zorn::carrier_order;
use revring::lab::{
    block_merge_poset, decide_with_dominator, dense_set_build, dominating_f, modulus,
    normalize_independent, zorn_greedy_chain, FnOrder, LinearRingElement, MonomialChain,
    StageEnumeration, StagedOrder,
};
use revring::linalg::{linearly_independent, rank};
use revring::{ExponentVector, MultiPoly};

use crate::report::Tally;

/// Stand-in for a halting-style set: each `n < max` is enumerated with
/// probability `p` at a stage below `last`.
fn rand_schedule(rng: &mut ChaCha8Rng, max: u64, p: f64, last: u64) -> StageEnumeration {
    let mut entries = Vec::new();
    for n in 0..max {
        if rng.gen_bool(p) {
            entries.push((n, rng.gen_range(0..=last)));
        }
    }
    StageEnumeration::from_entries(entries)
}

/// `μ_K(n)` straight from the entries.
fn mu(k: &StageEnumeration, n: u64) -> u64 {
    k.entries()
        .into_iter()
        .filter(|&(x, _)| x < n)
        .map(|(_, s)| s)
        .max()
        .unwrap_or(0)
}

// ---------------------------------------------------------------------------
// priority merge

/// A non-stabilising chain of monomial ideals. `g` is unbounded and
/// nondecreasing; the shape picks how `I_k` is generated from it.
fn rand_chain(rng: &mut ChaCha8Rng) -> (String, MonomialChain) {
    let len = 512;
    let p = rng.gen_range(0.2..0.9);
    let steps: Vec<usize> = (0..len)
        .scan(0, |acc, _| {
            *acc += rng.gen_bool(p) as usize;
            Some(*acc)
        })
        .collect();
    let steps = Arc::new(steps);
    let g = move |k: usize| {
        if k < len {
            steps[k]
        } else {
            steps[len - 1] + (k - len) / 2 + 1
        }
    };
    let shape = rng.gen_range(0..3);
    let chain = match shape {
        0 => MonomialChain::prefix_variables(g),
        1 => MonomialChain::from_fn(move |k| {
            (0..=g(k))
                .map(|i| ExponentVector::from_pairs([(i, 1), (i + 1, 1)]))
                .collect()
        }),
        _ => MonomialChain::from_fn(move |k| {
            (0..=g(k))
                .map(|i| ExponentVector::from_pairs([(0, 1), (i + 1, 2)]))
                .collect()
        }),
    };
    (format!("shape {shape}, step probability {p:.3}"), chain)
}

fn monomial_member(gens: &[MultiPoly], x: &MultiPoly) -> bool {
    let Some((e, _)) = x.as_monomial() else {
        return false;
    };
    gens.iter()
        .any(|g| g.as_monomial().is_some_and(|(f, _)| f.divides(e)))
}

pub(super) const PRIORITY_STAGES: usize = 60;
pub(super) const PRIORITY_SETTLED: usize = 20;

pub(super) fn priority_merge(rng: &mut ChaCha8Rng, scale: u64, t: &mut Tally) {
    for case in 0..scale {
        let (desc, chain) = rand_chain(rng);
        let ctx = || format!("case {case} ({desc})");
        let Some(run) = t.check_result(revring::lab::priority_merge(&chain, PRIORITY_STAGES), ctx)
        else {
            continue;
        };
        t.check_result(run.verify(&chain), ctx);
        let settled = run.settled_bound();
        t.check(settled > PRIORITY_SETTLED, || {
            format!("{}: only {settled} indices settled", ctx())
        });
        for n in 1..settled.min(PRIORITY_SETTLED + 1) {
            let x = &run.witnesses[n];
            let inside = monomial_member(&run.j_elements(n), x);
            let outside = !monomial_member(&run.j_elements(n - 1), x);
            t.check(inside && outside, || {
                format!("{}: witness {x} at index {n}", ctx())
            });
        }
        let monotone = run
            .marker_history
            .windows(2)
            .all(|w| w[0].iter().zip(&w[1]).all(|(a, b)| a <= b));
        t.check(monotone, || format!("{}: a marker moved down", ctx()));
    }
}

// ---------------------------------------------------------------------------
// dense set

pub(super) fn dense_set(rng: &mut ChaCha8Rng, scale: u64, t: &mut Tally) {
    let horizon = 200;
    for case in 0..scale {
        let k = rand_schedule(rng, 60, 0.35, 150);
        let ctx = || format!("case {case}: K = {:?}", k.entries());
        let d = dense_set_build(&k, horizon, horizon as usize + 2);
        t.check_result(d.check_domination(&k, 15), ctx);
        t.check(d.stable > 15, || {
            format!("{}: only {} stable indices", ctx(), d.stable)
        });
        for i in 0..d.stable.min(16) {
            t.check(d.complement_prefix[i] >= mu(&k, i as u64), || {
                format!("{}: b_{i}", ctx())
            });
        }
        let a = d.a.elements();
        let complement: Vec<u64> = (0..)
            .filter(|c| !a.contains(c))
            .take(d.complement_prefix.len())
            .collect();
        t.check(complement == d.complement_prefix, || {
            format!("{}: complement prefix", ctx())
        });
        let members = k.elements();
        let b = |m: u64| d.complement_prefix[m as usize];
        let by_modulus = |m: u64| modulus(&k, m, horizon).unwrap_or(u64::MAX);
        for n in 0..horizon {
            let truth = members.contains(&n);
            if (n as usize + 1) < d.stable {
                t.check(decide_with_dominator(&k, b, n) == truth, || {
                    format!("{}: deciding {n} from b", ctx())
                });
            }
            t.check(decide_with_dominator(&k, by_modulus, n) == truth, || {
                format!("{}: deciding {n} from μ", ctx())
            });
        }
    }
}

// ---------------------------------------------------------------------------
// Conidis ring

fn rand_linear(rng: &mut ChaCha8Rng, vars: usize, constant: bool) -> LinearRingElement {
    let q = if constant { rng.gen_range(-5..=5) } else { 0 };
    let terms: Vec<(usize, Rational)> = (0..rng.gen_range(1..=4))
        .map(|_| (rng.gen_range(0..vars), rat(rng.gen_range(-5..=5))))
        .collect();
    LinearRingElement::new(rat(q), terms)
}

fn to_poly(a: &LinearRingElement) -> MultiPoly {
    let mut p = MultiPoly::constant(a.constant.clone());
    for (i, c) in a.coeffs() {
        p = &p + &MultiPoly::monomial(ExponentVector::var(*i, 1), c.clone());
    }
    p
}

/// Expands as polynomials and drops every product of two variables.
fn expand(a: &LinearRingElement, b: &LinearRingElement) -> LinearRingElement {
    let p = &to_poly(a) * &to_poly(b);
    let constant = p.constant_term();
    let coeffs: Vec<(usize, Rational)> = p
        .terms()
        .filter(|(e, _)| e.degree() == 1)
        .map(|(e, c)| (e.entries()[0].0, c.clone()))
        .collect();
    LinearRingElement::new(constant, coeffs)
}

fn vectors(s: &[LinearRingElement], len: usize) -> Vec<Vec<Rational>> {
    s.iter().map(|e| e.coefficient_vector(len)).collect()
}

pub(super) fn conidis(rng: &mut ChaCha8Rng, scale: u64, t: &mut Tally) {
    for case in 0..scale {
        let (a, b) = (rand_linear(rng, 8, true), rand_linear(rng, 8, true));
        t.check(a.multiply(&b) == expand(&a, &b), || {
            format!("case {case}: ({a})({b})")
        });

        let len = rng.gen_range(1..=6);
        let seq = (0..20)
            .map(|_| {
                (0..len)
                    .map(|_| {
                        let c = rng.gen_bool(0.6);
                        rand_linear(rng, 6, c)
                    })
                    .collect::<Vec<_>>()
            })
            .find(|s| rank(&vectors(s, 6)) == len);
        if let Some(seq) = seq {
            let out = normalize_independent(&seq, len);
            let ok = rank(&vectors(&out, 6)) == out.len()
                && out.len() + 1 >= len
                && out.iter().all(|e| e.constant == rat(0));
            t.check(ok, || {
                format!("case {case}: normalising {seq:?} gave {out:?}")
            });
        }
    }
    for case in 0..(scale / 10).max(1) {
        let k = rand_schedule(rng, 40, 0.3, 80);
        let horizon = 120;
        let dense = dense_set_build(&k, horizon, 64);
        let set = dense.a.elements();
        let complement: Vec<u64> = (0..).filter(|c| !set.contains(c)).take(14).collect();
        let vars = complement[13] as usize + 1;
        // elements of (x_0, x_1, ...) whose images modulo A stay independent;
        // the images live on the complement variables
        let coords = |r: &LinearRingElement| -> Vec<Rational> {
            complement.iter().map(|&c| r.coeff(c as usize)).collect()
        };
        let mut seq: Vec<LinearRingElement> = Vec::new();
        let mut images: Vec<Vec<Rational>> = Vec::new();
        for _ in 0..10_000 {
            if seq.len() == 12 {
                break;
            }
            // half the variables are drawn from the complement, so a huge
            // dumped interval cannot starve the search
            let terms: Vec<(usize, Rational)> = (0..rng.gen_range(1..=3))
                .map(|_| {
                    let v = if rng.gen_bool(0.5) {
                        complement[rng.gen_range(0..14)] as usize
                    } else {
                        rng.gen_range(0..vars)
                    };
                    (v, rat(rng.gen_range(-5..=5)))
                })
                .collect();
            let e = LinearRingElement::new(rat(0), terms);
            images.push(coords(&e.reduce_mod(&set)));
            if linearly_independent(&images) {
                seq.push(e);
            } else {
                images.pop();
            }
        }
        t.check(seq.len() == 12, || {
            format!("case {case}: built only {} independent elements", seq.len())
        });
        let table = dominating_f(&seq, &dense.a);
        t.check_result(table.verify(10), || {
            format!("case {case}: f = {:?}, c = {:?}", table.f, table.complement)
        });
        for n in 0..=10.min(table.f.len().saturating_sub(1)) {
            let f = table.f[n].map(|v| v as u64);
            t.check(f >= Some(mu(&k, n as u64)), || {
                format!("case {case}: f({n}) = {f:?} below μ")
            });
        }
    }
}

// ---------------------------------------------------------------------------
// Zorn

/// Transitive closure of the relations revealed by stage `k`.
fn reach(rel: &[(u64, u64, u64)], a: u64, b: u64, k: u64) -> bool {
    let mut seen = BTreeSet::from([a]);
    loop {
        let before = seen.len();
        for &(x, y, s) in rel {
            if s <= k && seen.contains(&x) {
                seen.insert(y);
            }
        }
        if seen.len() == before {
            return a != b && seen.contains(&b);
        }
    }
}

pub(super) const BLOCK_HORIZON: u64 = 200;

pub(super) fn zorn(rng: &mut ChaCha8Rng, scale: u64, t: &mut Tally) {
    for case in 0..scale {
        let n = 14;
        let rel: Vec<(u64, u64, u64)> = (0..rng.gen_range(0..40))
            .map(|_| {
                (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..30),
                )
            })
            .filter(|(a, b, _)| a < b)
            .collect();
        let stages: Vec<u64> = (0..n).map(|_| rng.gen_range(0..6)).collect();
        let carrier = StageEnumeration::from_fn(0..n, |x| stages[x as usize]);
        let order = FnOrder(|a: u64, b: u64, k: u64| reach(&rel, a, b, k));
        let zc = zorn_greedy_chain(&carrier, &order, 400);
        let ctx = || format!("case {case}: relations {rel:?}");
        t.check_result(zc.verify(&carrier_order(&carrier), &order), ctx);
        let strict = zc
            .chain
            .windows(2)
            .all(|w| reach(&rel, w[0], w[1], u64::MAX));
        let certified = zc
            .certificates
            .iter()
            .enumerate()
            .all(|(i, &(_, k))| order.below_at(zc.chain[i], zc.chain[i + 1], k));
        t.check(
            !zc.chain.is_empty()
                && zc.certificates.len() + 1 == zc.chain.len()
                && strict
                && certified,
            || format!("{}: chain {:?}", ctx(), zc.chain),
        );

        block_merge_case(rng, case, t);
    }
}

fn block_merge_case(rng: &mut ChaCha8Rng, case: u64, t: &mut Tally) {
    let k = rand_schedule(rng, 40, 0.3, 150);
    let p = block_merge_poset(&k, BLOCK_HORIZON);
    let ctx = || format!("case {case}: K = {:?}", k.entries());

    let starts: Vec<u64> = (0..12).map(|n| p.block(n).start).collect();
    t.check_result(p.check_chain(&starts), ctx);
    for n in 0..=10 {
        t.check(starts[n + 1] >= mu(&k, n as u64), || {
            format!("{}: block start {}", ctx(), n + 1)
        });
    }
    let all = StageEnumeration::from_fn(0..BLOCK_HORIZON, |x| x);
    let greedy = zorn_greedy_chain(&all, &p, 4000);
    t.check_result(greedy.verify(&carrier_order(&all), &p), ctx);
    t.check_result(p.check_chain(&greedy.chain), ctx);

    // replay the merges on explicit block labels
    let width = BLOCK_HORIZON as usize + 64;
    let mut label: Vec<usize> = (0..width).collect();
    for s in 0..=BLOCK_HORIZON {
        for n in k.entering_at(s) {
            let (n, b) = (n as usize, label[s as usize]);
            if b > n {
                for l in label.iter_mut() {
                    if (n..=b).contains(l) {
                        *l = n;
                    } else if *l > b {
                        *l -= b - n;
                    }
                }
            }
        }
        let got: Vec<usize> = (0..BLOCK_HORIZON).map(|a| p.block_of_at(a, s)).collect();
        t.check(got[..] == label[..BLOCK_HORIZON as usize], || {
            format!("{}: blocks at stage {s}", ctx())
        });
        let intervals = got[0] == 0 && got.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1);
        t.check(intervals, || {
            format!(
                "{}: blocks at stage {s} are not consecutive intervals",
                ctx()
            )
        });
    }
    for a in 0..BLOCK_HORIZON {
        for b in 0..BLOCK_HORIZON {
            let expected = label[a as usize] < label[b as usize];
            if p.below(a, b) != expected {
                t.check(false, || format!("{}: order on {a}, {b}", ctx()));
            }
        }
    }
    t.cases += 1;
}
