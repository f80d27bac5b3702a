//! One pass/fail line per acceptance criterion. Every check is exact; the
//! only tolerances are the wall-clock bounds below.
//!
//! Criterion 1 asks for `Nuc_r = span{K t^{js}}` over split algebras as well
//! as fields. Over `F_3^n` with `n ≥ 3` that formula is false whenever some
//! `σ^j(d) - d` is a nonzero zero divisor: `Ann_K(σ^j(d) - d) t^j` then lies
//! in the right nucleus. Those cases are printed as failures; the test
//! only requires that no other case fails and that the annihilator formula
//! holds everywhere.

use std::time::{Duration, Instant};

use semiassoc::suites::{run_suite, SuiteConfig};

const CRITERIA: [(u32, &str, &str, u64); 10] = [
    (1, "nucleus theorem", "nucleus-theorem", 60),
    (2, "opposite algebras", "opposite", 30),
    (3, "division criteria agree", "division-criteria", 300),
    (4, "split quaternion presentation", "split-quaternion", 120),
    (5, "semiassociativity", "semiassoc-all", 120),
    (6, "infinite-order certificates", "infinite-order", 120),
    (7, "tensor with central simple algebra", "tensor-csa", 60),
    (8, "associative iff right-invariant iff d in F", "associativity", 60),
    (9, "differential identities", "differential", 120),
    (10, "eigenspace equals right nucleus", "eigenspace", 60),
];

/// Cases whose failure is a genuine counterexample, not a defect.
const COUNTEREXAMPLES: [&str; 2] = ["F3^3/F3 span formula", "F3^4/F3 span formula"];

#[test]
fn acceptance() {
    let cfg = SuiteConfig::default();
    let mut failed = Vec::new();
    for (id, title, suite, limit) in CRITERIA {
        let start = Instant::now();
        let outcome = run_suite(suite, &cfg);
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (pass, note) = match &outcome {
            Ok(r) => (r.passed() && in_time, format!("{}/{} cases", r.cases.len() - r.failures(), r.cases.len())),
            Err(e) => (false, format!("error: {e}")),
        };
        println!(
            "criterion {id:>2} [{}] {title}: {note}, {:.2}s (limit {limit}s)",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        let mut unexpected = !in_time || outcome.is_err();
        if let Ok(r) = &outcome {
            for c in r.cases.iter().filter(|c| !c.pass) {
                let known = COUNTEREXAMPLES.contains(&c.name.as_str());
                println!(
                    "    failed case {}: {}{}",
                    c.name,
                    c.detail,
                    if known { " (counterexample)" } else { "" }
                );
                unexpected |= !known;
            }
        }
        if unexpected {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "unexpected failures in criteria {failed:?}");
}
