//! Runs every acceptance criterion at its stated scale and checks the
//! wall-time limit. Prints one line per criterion.
//!
//! `REVRING_ACCEPTANCE_SEED` overrides the seed (default 0).

use std::process::ExitCode;

use revring_cli::run_suite;

struct Criterion {
    title: &'static str,
    suite: &'static str,
    scale: u64,
    limit_secs: u64,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        title: "division equivalence",
        suite: "division-equivalence",
        scale: 1000,
        limit_secs: 10,
    },
    Criterion {
        title: "adjugate and triangular determinants",
        suite: "linalg-identities",
        scale: 500,
        limit_secs: 5,
    },
    Criterion {
        title: "radical and primary identities",
        suite: "radical-identities",
        scale: 300,
        limit_secs: 30,
    },
    Criterion {
        title: "gcd and Bezout certificates",
        suite: "gcd-bezout",
        scale: 1000,
        limit_secs: 20,
    },
    Criterion {
        title: "principal generators in T",
        suite: "pid-t",
        scale: 500,
        limit_secs: 10,
    },
    Criterion {
        title: "Dedekind-Hasse norm",
        suite: "dh-norm",
        scale: 200,
        limit_secs: 20,
    },
    Criterion {
        title: "priority merge",
        suite: "priority-merge",
        scale: 20,
        limit_secs: 30,
    },
    Criterion {
        title: "dense set and domination",
        suite: "dense-set",
        scale: 10,
        limit_secs: 10,
    },
    Criterion {
        title: "Conidis construction",
        suite: "conidis",
        scale: 500,
        limit_secs: 10,
    },
    Criterion {
        title: "greedy chains and block merge",
        suite: "zorn",
        scale: 20,
        limit_secs: 10,
    },
    Criterion {
        title: "factorization",
        suite: "factorization",
        scale: 200,
        limit_secs: 60,
    },
];

fn main() -> ExitCode {
    let seed = std::env::var("REVRING_ACCEPTANCE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let mut failed = 0;
    for (i, c) in CRITERIA.iter().enumerate() {
        let report = run_suite(c.suite, seed, c.scale).expect("registered suite");
        let in_time = report.elapsed_ms < c.limit_secs * 1000;
        let ok = report.passed() && in_time;
        println!(
            "criterion {:>2} {}: {} ({} seed {}, scale {}): {} cases, {} failures, {} ms of {} s",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            c.suite,
            seed,
            c.scale,
            report.cases,
            report.failure_count,
            report.elapsed_ms,
            c.limit_secs,
        );
        for f in &report.failures {
            println!("    {f}");
        }
        if !ok {
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
