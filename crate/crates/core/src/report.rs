//! Structured verification reports.
//!
//! Every check emits a [`Report`]: a verb echo, the parameters it ran with,
//! and one [`Claim`] row per verified statement. A claim records the window
//! it was checked on; a numeric assertion without a window stamp is a bug.
//! Reports render as a text table and as JSON, both deterministic.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    /// Exhaustively verified on the stamped window.
    Pass,
    /// A counterexample was found; details name it.
    Fail,
    /// Verified on a restricted window because the full quantification
    /// domain exceeded the budget; the stamp names the restriction.
    Evidence,
}

impl Verdict {
    pub fn passed(self) -> bool {
        self != Verdict::Fail
    }

    /// Pass ∧ Pass = Pass, anything ∧ Fail = Fail, otherwise Evidence.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Evidence, _) | (_, Evidence) => Evidence,
            (Pass, Pass) => Pass,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "FAIL"),
            Verdict::Evidence => write!(f, "evidence"),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Claim {
    /// What was checked, named by what it does.
    pub name: String,
    /// The finite window the check quantified over.
    pub window: String,
    pub verdict: Verdict,
    /// Counts, counterexamples, witnesses.
    pub details: String,
}

impl Claim {
    pub fn new(
        name: impl Into<String>,
        window: impl Into<String>,
        verdict: Verdict,
        details: impl Into<String>,
    ) -> Self {
        Claim {
            name: name.into(),
            window: window.into(),
            verdict,
            details: details.into(),
        }
    }

    pub fn pass(
        name: impl Into<String>,
        window: impl Into<String>,
        details: impl Into<String>,
    ) -> Self {
        Claim::new(name, window, Verdict::Pass, details)
    }

    pub fn fail(
        name: impl Into<String>,
        window: impl Into<String>,
        details: impl Into<String>,
    ) -> Self {
        Claim::new(name, window, Verdict::Fail, details)
    }

    pub fn evidence(
        name: impl Into<String>,
        window: impl Into<String>,
        details: impl Into<String>,
    ) -> Self {
        Claim::new(name, window, Verdict::Evidence, details)
    }

    pub fn of_bool(
        name: impl Into<String>,
        window: impl Into<String>,
        ok: bool,
        details: impl Into<String>,
    ) -> Self {
        Claim::new(
            name,
            window,
            if ok { Verdict::Pass } else { Verdict::Fail },
            details,
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub verb: String,
    /// Echo of the parameters (windows, bounds, inputs) the run used.
    pub params: BTreeMap<String, String>,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn new(verb: impl Into<String>) -> Self {
        Report {
            verb: verb.into(),
            params: BTreeMap::new(),
            claims: Vec::new(),
        }
    }

    pub fn param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn set_param(&mut self, key: impl Into<String>, value: impl ToString) {
        self.params.insert(key.into(), value.to_string());
    }

    pub fn push(&mut self, claim: Claim) {
        self.claims.push(claim);
    }

    pub fn verdict(&self) -> Verdict {
        self.claims
            .iter()
            .map(|c| c.verdict)
            .fold(Verdict::Pass, Verdict::and)
    }

    pub fn passed(&self) -> bool {
        self.verdict().passed()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("== {} : {} ==\n", self.verb, self.verdict()));
        for (k, v) in &self.params {
            out.push_str(&format!("   {k} = {v}\n"));
        }
        for c in &self.claims {
            out.push_str(&format!(
                "  [{:>8}] {} | window: {}\n",
                c.verdict.to_string(),
                c.name,
                c.window
            ));
            if !c.details.is_empty() {
                out.push_str(&format!("             {}\n", c.details));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_aggregation() {
        use Verdict::*;
        assert_eq!(Pass.and(Pass), Pass);
        assert_eq!(Pass.and(Evidence), Evidence);
        assert_eq!(Evidence.and(Fail), Fail);
    }

    #[test]
    fn report_round_trips_and_is_deterministic() {
        let mut r = Report::new("demo").param("window", "0..3");
        r.push(Claim::pass("x", "0..3", "ok"));
        let j1 = r.to_json();
        let back: Report = serde_json::from_str(&j1).unwrap();
        assert_eq!(back.to_json(), j1);
    }
}
