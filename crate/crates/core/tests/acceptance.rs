//! The acceptance gate: runs every criterion of the paper suite, prints
//! one pass/fail line per criterion, and pins the runtime targets. A
//! criterion may report `evidence` only for the known tower blowups (the
//! triple powers of the subset and affine monads are astronomically
//! finite); everything else must pass outright, and nothing may fail.

use codense_core::budget::Budget;
use codense_core::report::Verdict;
use codense_core::suite::{paper_suite, quick_suite};
use std::time::Instant;

/// Criteria allowed to carry an evidence verdict, by index (1-based), with
/// the budget-bound quantification that forces it.
const EVIDENCE_ALLOWED: &[usize] = &[
    1,  // associativity of subset/affine monads quantifies over T³ ≥ 2^127
    7,  // splitting verification above materializable powers
    13, // realization pairs through the third power of the subset monad
];

#[test]
fn paper_suite_passes_every_criterion() {
    let budget = Budget::default();
    let t0 = Instant::now();
    let report = paper_suite(&budget).expect("suite runs within budget");
    let total = t0.elapsed();

    let mut failures = Vec::new();
    for (i, claim) in report.claims.iter().enumerate() {
        let index = i + 1;
        let line = match claim.verdict {
            Verdict::Pass => "PASS",
            Verdict::Evidence => "PASS (evidence)",
            Verdict::Fail => "FAIL",
        };
        println!("{line} — {} | {}", claim.name, claim.window);
        match claim.verdict {
            Verdict::Fail => failures.push(format!("{}: {}", claim.name, claim.details)),
            Verdict::Evidence => {
                if !EVIDENCE_ALLOWED.contains(&index) {
                    failures.push(format!(
                        "{} reported evidence outside the allowed set: {}",
                        claim.name, claim.details
                    ));
                }
            }
            Verdict::Pass => {}
        }
    }
    assert_eq!(report.claims.len(), 17, "all seventeen criteria must run");
    assert!(
        failures.is_empty(),
        "criteria failed:\n{}",
        failures.join("\n")
    );

    // total runtime target: five minutes on commodity hardware; the debug
    // profile is slower than release, so the bound stays generous
    println!("paper suite wall time: {:.1}s", total.as_secs_f64());
    assert!(
        total.as_secs_f64() < 300.0,
        "paper suite exceeded the five-minute target: {:.1}s",
        total.as_secs_f64()
    );
}

#[test]
fn law_checks_stay_under_ten_seconds_each() {
    use codense_core::bkshadow::builtins;
    use codense_core::monadkit::{monad::skeletal_window, monad_law_check, SetMonad};

    let budget = Budget::default();
    let window = skeletal_window(4);
    let corpus: Vec<Box<dyn SetMonad>> = vec![
        Box::new(builtins::IdentityMonad),
        Box::new(builtins::powerset()),
        Box::new(builtins::MaybeMonad),
        builtins::builtin_monad("writer:Z/2").unwrap(),
        builtins::builtin_monad("affine:Z/2").unwrap(),
    ];
    for m in &corpus {
        let t0 = Instant::now();
        let report = monad_law_check(m.as_ref(), &window, &budget).expect("laws run");
        let secs = t0.elapsed().as_secs_f64();
        println!("{}: {:.2}s", m.name(), secs);
        assert_ne!(report.verdict(), Verdict::Fail, "{}", report.to_text());
        assert!(secs < 10.0, "{} law check took {:.1}s", m.name(), secs);
    }
}

#[test]
fn completion_convergence_stays_under_a_minute() {
    use codense_core::bkshadow::builtins;
    use codense_core::monadkit::fakir::fakir_vs_codensity;
    use codense_core::set::LSet;

    let budget = Budget::default();
    let t0 = Instant::now();
    for n in 0..=3usize {
        let c = LSet::skeletal(n);
        let p = fakir_vs_codensity(&builtins::powerset(), &c, &[1, 2, 3, 4], &budget).unwrap();
        assert!(p.passed(), "{}", p.to_text());
        let a = fakir_vs_codensity(&builtins::affine_z2(), &c, &[1, 2, 3, 4], &budget).unwrap();
        assert!(a.passed(), "{}", a.to_text());
    }
    let secs = t0.elapsed().as_secs_f64();
    println!("convergence ladder wall time: {secs:.1}s");
    assert!(secs < 60.0, "convergence took {secs:.1}s");
}

#[test]
fn quick_suite_is_a_passing_subset() {
    let budget = Budget::default();
    let report = quick_suite(&budget).expect("quick suite runs");
    assert!(report.passed(), "{}", report.to_text());
}

#[test]
fn suite_reports_are_deterministic() {
    let budget = Budget::default();
    let a = quick_suite(&budget).unwrap().to_json();
    let b = quick_suite(&budget).unwrap().to_json();
    assert_eq!(a, b, "identical inputs must produce byte-identical reports");
}
