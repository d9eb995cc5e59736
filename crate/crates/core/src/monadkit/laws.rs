//! Exhaustive monad law checking over a declared window of finite sets.
//!
//! Each law quantifies over a specific power of the window objects; a law
//! instance whose quantification domain exceeds the element budget is
//! reported as an explicit skip (evidence verdict), never silently
//! dropped.

use super::monad::{PowerTower, SetMonad};
use crate::budget::Budget;
use crate::error::Result;
use crate::par;
use crate::report::{Claim, Report, Verdict};
use crate::set::{all_functions, LFun, LSet};

fn window_stamp(window: &[LSet]) -> String {
    let sizes: Vec<String> = window.iter().map(|s| s.len().to_string()).collect();
    format!("set sizes [{}]", sizes.join(","))
}

/// Runs every monad law on the window. Functoriality and unit naturality
/// quantify over all functions between window objects; multiplication
/// naturality needs `T²`, associativity needs `T³` of each object.
pub fn monad_law_check(m: &dyn SetMonad, window: &[LSet], budget: &Budget) -> Result<Report> {
    let mut report = Report::new("monad-check")
        .param("monad", m.name())
        .param("window", window_stamp(window));

    // function corpus between all window pairs
    let mut funs: Vec<LFun> = Vec::new();
    for x in window {
        for y in window {
            funs.extend(all_functions(x, y, budget)?);
        }
    }
    report.set_param("functions", funs.len());

    // functoriality: identities and composition
    let mut bad = Vec::new();
    for x in window {
        let tid = m.on_function(&LFun::identity(x), budget)?;
        if tid != LFun::identity(&m.on_object(x, budget)?) {
            bad.push(format!("T(id) ≠ id on size {}", x.len()));
        }
    }
    report.push(Claim::of_bool(
        "object action preserves identities",
        window_stamp(window),
        bad.is_empty(),
        bad.join("; "),
    ));

    let composable: Vec<(usize, usize)> = (0..funs.len())
        .flat_map(|i| (0..funs.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| funs[i].cod() == funs[j].dom())
        .collect();
    let comp_bad = par::violations(composable.len(), |k| {
        let (i, j) = composable[k];
        let gf = funs[j].compose(&funs[i]).expect("checked composable");
        let lhs = m.on_function(&gf, budget);
        let rhs = m.on_function(&funs[j], budget).and_then(|tg| {
            m.on_function(&funs[i], budget)
                .and_then(|tf| tg.compose(&tf))
        });
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    });
    report.push(Claim::of_bool(
        "object action preserves composition",
        format!("{} composable pairs", composable.len()),
        comp_bad.is_empty(),
        if comp_bad.is_empty() {
            String::new()
        } else {
            format!(
                "{} violations, first at pair index {}",
                comp_bad.len(),
                comp_bad[0]
            )
        },
    ));

    // unit naturality: T(f) ∘ η_x = η_y ∘ f
    let nat_bad = par::violations(funs.len(), |i| {
        let f = &funs[i];
        let lhs = m
            .on_function(f, budget)
            .and_then(|tf| m.unit(f.dom(), budget).and_then(|e| tf.compose(&e)));
        let rhs = m.unit(f.cod(), budget).and_then(|e| e.compose(f));
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    });
    report.push(Claim::of_bool(
        "unit is natural",
        format!("{} functions", funs.len()),
        nat_bad.is_empty(),
        if nat_bad.is_empty() {
            String::new()
        } else {
            format!("{} violations", nat_bad.len())
        },
    ));

    // mult naturality: μ_y ∘ T²(f) = T(f) ∘ μ_x ; needs T² of the domain
    let mut skipped = Vec::new();
    let mut mu_bad = Vec::new();
    for f in &funs {
        let mut dom_tower = PowerTower::new(m, f.dom().clone());
        let mut cod_tower = PowerTower::new(m, f.cod().clone());
        if !dom_tower.power_within_budget(2, budget)?
            || !cod_tower.power_within_budget(2, budget)?
        {
            skipped.push(format!("size {}", f.dom().len().max(f.cod().len())));
            continue;
        }
        let ttf = m.on_function(&m.on_function(f, budget)?, budget)?;
        let lhs = m.mult(f.cod(), budget)?.compose(&ttf)?;
        let rhs = m
            .on_function(f, budget)?
            .compose(&m.mult(f.dom(), budget)?)?;
        if lhs != rhs {
            mu_bad.push(format!(
                "multiplication not natural at some f on size {}",
                f.dom().len()
            ));
        }
    }
    skipped.sort();
    skipped.dedup();
    push_guarded_claim(
        &mut report,
        "multiplication is natural",
        window_stamp(window),
        mu_bad,
        skipped,
    );

    // unit laws: μ ∘ η_T = id = μ ∘ T(η); quantify over T(x)
    let mut bad = Vec::new();
    for x in window {
        let tx = m.on_object(x, budget)?;
        let mu = m.mult(x, budget)?;
        let left = mu.compose(&m.unit(&tx, budget)?)?;
        let right = mu.compose(&m.on_function(&m.unit(x, budget)?, budget)?)?;
        let id = LFun::identity(&tx);
        if left != id {
            bad.push(format!("μ∘η_T ≠ id on size {}", x.len()));
        }
        if right != id {
            bad.push(format!("μ∘T(η) ≠ id on size {}", x.len()));
        }
    }
    report.push(Claim::of_bool(
        "unit laws hold",
        window_stamp(window),
        bad.is_empty(),
        bad.join("; "),
    ));

    // associativity: μ ∘ μ_T = μ ∘ T(μ); quantifies over T³(x)
    let mut skipped = Vec::new();
    let mut bad = Vec::new();
    for x in window {
        let mut tower = PowerTower::new(m, x.clone());
        if !tower.power_within_budget(3, budget)? {
            skipped.push(format!("size {}", x.len()));
            continue;
        }
        let tx = tower.power(1, budget)?;
        let mu = m.mult(x, budget)?;
        let left = mu.compose(&m.mult(&tx, budget)?)?;
        let right = mu.compose(&m.on_function(&mu, budget)?)?;
        if left != right {
            bad.push(format!("associativity fails on size {}", x.len()));
        }
    }
    push_guarded_claim(
        &mut report,
        "multiplication is associative",
        window_stamp(window),
        bad,
        skipped,
    );

    Ok(report)
}

fn push_guarded_claim(
    report: &mut Report,
    name: &str,
    window: String,
    bad: Vec<String>,
    skipped: Vec<String>,
) {
    let verdict = if !bad.is_empty() {
        Verdict::Fail
    } else if !skipped.is_empty() {
        Verdict::Evidence
    } else {
        Verdict::Pass
    };
    let mut details = bad.join("; ");
    if !skipped.is_empty() {
        if !details.is_empty() {
            details.push_str("; ");
        }
        details.push_str(&format!(
            "quantification domain over budget, skipped: {}",
            skipped.join(", ")
        ));
    }
    report.push(Claim::new(name, window, verdict, details));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bkshadow::builtins;
    use crate::monadkit::monad::skeletal_window;

    #[test]
    fn identity_monad_passes_all_laws() {
        let b = Budget::default();
        let r = monad_law_check(&builtins::IdentityMonad, &skeletal_window(3), &b).unwrap();
        assert_eq!(r.verdict(), Verdict::Pass, "{}", r.to_text());
    }

    #[test]
    fn small_monads_pass_laws_fully() {
        let b = Budget::default();
        for m in builtins::catalog() {
            let window = skeletal_window(2);
            let r = monad_law_check(m.as_ref(), &window, &b).unwrap();
            assert!(r.passed(), "{} failed:\n{}", m.name(), r.to_text());
        }
    }

    #[test]
    fn corrupted_mult_table_is_reported() {
        use crate::monadkit::monad::SetMonad;
        struct Broken;
        impl SetMonad for Broken {
            fn name(&self) -> String {
                "broken-maybe".into()
            }
            fn on_object(&self, x: &LSet, b: &Budget) -> Result<LSet> {
                builtins::MaybeMonad.on_object(x, b)
            }
            fn on_function(&self, f: &LFun, b: &Budget) -> Result<LFun> {
                builtins::MaybeMonad.on_function(f, b)
            }
            fn unit(&self, x: &LSet, b: &Budget) -> Result<LFun> {
                builtins::MaybeMonad.unit(x, b)
            }
            fn mult(&self, x: &LSet, b: &Budget) -> Result<LFun> {
                let good = builtins::MaybeMonad.mult(x, b)?;
                // send the inner bottom to the first element when possible
                let mut map = good.map().to_vec();
                if x.len() > 0 {
                    let jn = good.dom().index_of("j(n)").unwrap();
                    map[jn] = 0;
                }
                LFun::new(good.dom().clone(), good.cod().clone(), map)
            }
        }
        let b = Budget::default();
        let r = monad_law_check(&Broken, &skeletal_window(2), &b).unwrap();
        assert_eq!(r.verdict(), Verdict::Fail);
    }
}
