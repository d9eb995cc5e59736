//! Resource budgets for exhaustive enumerations.
//!
//! Two independent limits: `families` bounds search-tree nodes visited by
//! candidate enumerations (naturality families, algebra structures,
//! splittings, horn fillers), `elements` bounds the size of any single
//! materialized set (monad powers, simplex levels). Exceeding either is an
//! [`EngineError::Resource`], not a truncation.

use crate::error::{EngineError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Max candidate nodes visited before an enumeration aborts.
    pub families: u64,
    /// Max cardinality of any single materialized set.
    pub elements: u64,
}

pub const DEFAULT_FAMILY_BUDGET: u64 = 10_000_000;
pub const DEFAULT_ELEMENT_BUDGET: u64 = 1 << 17;

impl Default for Budget {
    fn default() -> Self {
        Budget {
            families: DEFAULT_FAMILY_BUDGET,
            elements: DEFAULT_ELEMENT_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(families: u64, elements: u64) -> Self {
        Budget { families, elements }
    }

    /// Reads `CODENSE_BUDGET_FAMILIES` / `CODENSE_BUDGET_ELEMENTS` on top of
    /// the defaults.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Some(v) = read_env("CODENSE_BUDGET_FAMILIES") {
            b.families = v;
        }
        if let Some(v) = read_env("CODENSE_BUDGET_ELEMENTS") {
            b.elements = v;
        }
        b
    }

    /// Checks that a set of `n` elements may be materialized.
    pub fn admit_set(&self, n: u128, context: &str) -> Result<()> {
        if n > self.elements as u128 {
            return Err(EngineError::Resource {
                context: context.to_string(),
                needed: n,
                budget: self.elements as u128,
            });
        }
        Ok(())
    }

    /// Checks that a search of `n` candidates may run.
    pub fn admit_search(&self, n: u128, context: &str) -> Result<()> {
        if n > self.families as u128 {
            return Err(EngineError::Resource {
                context: context.to_string(),
                needed: n,
                budget: self.families as u128,
            });
        }
        Ok(())
    }
}

fn read_env(name: &str) -> Option<u64> {
    std::env::var(name).ok().and_then(|s| s.parse().ok())
}

/// A per-enumeration node counter checked against the family budget.
#[derive(Debug)]
pub struct SearchMeter {
    visited: u64,
    limit: u64,
    context: String,
}

impl SearchMeter {
    pub fn new(budget: &Budget, context: &str) -> Self {
        SearchMeter {
            visited: 0,
            limit: budget.families,
            context: context.to_string(),
        }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.limit {
            return Err(EngineError::Resource {
                context: self.context.clone(),
                needed: self.visited as u128,
                budget: self.limit as u128,
            });
        }
        Ok(())
    }

    pub fn visited(&self) -> u64 {
        self.visited
    }
}
