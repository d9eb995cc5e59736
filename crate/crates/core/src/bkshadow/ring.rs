//! Finite commutative rings as explicit tables, with exhaustive axiom
//! validation. `Z/n` is built in; arbitrary tables can be loaded from
//! files.

use crate::error::{EngineError, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteRing {
    pub name: String,
    pub labels: Vec<String>,
    /// add[a][b] = a + b
    pub add: Vec<Vec<usize>>,
    /// mul[a][b] = a · b
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl FiniteRing {
    pub fn zmod(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(EngineError::structural("Z/n needs n >= 2"));
        }
        let r = FiniteRing {
            name: format!("Z/{n}"),
            labels: (0..n).map(|i| i.to_string()).collect(),
            add: (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
            mul: (0..n)
                .map(|a| (0..n).map(|b| (a * b) % n).collect())
                .collect(),
            zero: 0,
            one: 1 % n,
        };
        r.validate()?;
        Ok(r)
    }

    /// Parses `Z/n` shorthand.
    pub fn parse(spec: &str) -> Result<Self> {
        let lower = spec.trim().to_ascii_lowercase();
        if let Some(n) = lower.strip_prefix("z/") {
            let n: usize = n
                .parse()
                .map_err(|_| EngineError::Parse(format!("bad ring modulus in `{spec}`")))?;
            return FiniteRing::zmod(n);
        }
        Err(EngineError::Parse(format!(
            "unknown ring `{spec}` (expected Z/n or a ring file)"
        )))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    /// Checks every commutative-ring axiom exhaustively.
    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        let shaped = self.add.len() == n
            && self.mul.len() == n
            && self
                .add
                .iter()
                .all(|r| r.len() == n && r.iter().all(|&v| v < n))
            && self
                .mul
                .iter()
                .all(|r| r.len() == n && r.iter().all(|&v| v < n))
            && self.zero < n
            && self.one < n;
        if !shaped {
            return Err(EngineError::structural(format!(
                "ring {} has malformed tables",
                self.name
            )));
        }
        let fail = |msg: String| {
            Err(EngineError::structural(format!(
                "ring {}: {msg}",
                self.name
            )))
        };
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail(format!("0 is not an additive unit at {a}"));
            }
            if self.mul(a, self.one) != a {
                return fail(format!("1 is not a multiplicative unit at {a}"));
            }
            if !(0..n).any(|b| self.add(a, b) == self.zero) {
                return fail(format!("{a} has no additive inverse"));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail(format!("addition not commutative at ({a},{b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail(format!("multiplication not commutative at ({a},{b})"));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail(format!("addition not associative at ({a},{b},{c})"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail(format!("multiplication not associative at ({a},{b},{c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail(format!("distributivity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("ring serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let r: FiniteRing =
            serde_json::from_str(s).map_err(|e| EngineError::Parse(e.to_string()))?;
        r.validate()?;
        Ok(r)
    }
}

/// A finite monoid table (for the writer monad).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinMonoid {
    pub name: String,
    pub labels: Vec<String>,
    /// op[a][b] = a · b
    pub op: Vec<Vec<usize>>,
    pub unit: usize,
}

impl FinMonoid {
    pub fn trivial() -> Self {
        FinMonoid {
            name: "1".into(),
            labels: vec!["e".into()],
            op: vec![vec![0]],
            unit: 0,
        }
    }

    /// The additive cyclic monoid (group) Z/n.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        FinMonoid {
            name: format!("Z/{n}"),
            labels: (0..n).map(|i| i.to_string()).collect(),
            op: (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
            unit: 0,
        }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a][b]
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        for a in 0..n {
            if self.op(a, self.unit) != a || self.op(self.unit, a) != a {
                return Err(EngineError::structural(format!(
                    "monoid {}: unit fails at {a}",
                    self.name
                )));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                        return Err(EngineError::structural(format!(
                            "monoid {}: associativity fails at ({a},{b},{c})",
                            self.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_rings_validate() {
        for n in 2..=6 {
            FiniteRing::zmod(n).unwrap();
        }
    }

    #[test]
    fn broken_ring_is_rejected() {
        let mut r = FiniteRing::zmod(3).unwrap();
        r.mul[2][2] = 2; // 2*2 = 1 in Z/3, corrupt it
        assert!(r.validate().is_err());
    }

    #[test]
    fn parse_shorthand() {
        assert_eq!(FiniteRing::parse("Z/2").unwrap().size(), 2);
        assert!(FiniteRing::parse("Q").is_err());
    }

    #[test]
    fn monoids_validate() {
        FinMonoid::trivial().validate().unwrap();
        FinMonoid::cyclic(4).validate().unwrap();
    }
}
