//! Explicit table monads loaded from files: the object action, unit, and
//! multiplication are given as tables over a declared window of labeled
//! sets, and the function action as a list of realized function tables.
//! Inputs outside the declared data are structural errors, never guesses.

use super::monad::SetMonad;
use crate::budget::Budget;
use crate::error::{EngineError, Result};
use crate::set::{LFun, LSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonadFile {
    pub name: String,
    /// element labels of each window set
    pub window: Vec<Vec<String>>,
    /// labels of the value at each window set, in order
    pub on_objects: Vec<Vec<String>>,
    /// unit tables: index map from each window set into its value
    pub unit: Vec<Vec<usize>>,
    /// multiplication tables: index map from the value of the value into
    /// the value; requires the value of each window set to be a window set
    /// itself (up to labels)
    pub mult: Vec<Vec<usize>>,
    /// function action: for each entry, the input function between window
    /// sets (by index) and the output table between their values
    pub on_functions: Vec<FunctionEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctionEntry {
    pub dom: usize,
    pub cod: usize,
    pub table: Vec<usize>,
    pub image: Vec<usize>,
}

impl MonadFile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("monad file serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| EngineError::Parse(e.to_string()))
    }

    pub fn into_monad(self) -> Result<TableMonad> {
        if self.on_objects.len() != self.window.len()
            || self.unit.len() != self.window.len()
            || self.mult.len() != self.window.len()
        {
            return Err(EngineError::structural(
                "object/unit/mult tables must match the window length",
            ));
        }
        let window: Result<Vec<LSet>> = self.window.into_iter().map(LSet::new).collect();
        let values: Result<Vec<LSet>> = self.on_objects.into_iter().map(LSet::new).collect();
        Ok(TableMonad {
            name: self.name,
            window: window?,
            values: values?,
            unit: self.unit,
            mult: self.mult,
            functions: self.on_functions,
        })
    }

    /// Writes a monad restricted to a window as an explicit table file.
    pub fn from_monad(m: &dyn SetMonad, window: &[LSet], budget: &Budget) -> Result<Self> {
        let mut on_objects = Vec::new();
        let mut unit = Vec::new();
        let mut mult = Vec::new();
        for x in window {
            on_objects.push(m.on_object(x, budget)?.labels().to_vec());
            unit.push(m.unit(x, budget)?.map().to_vec());
            mult.push(m.mult(x, budget)?.map().to_vec());
        }
        let mut on_functions = Vec::new();
        for (di, x) in window.iter().enumerate() {
            for (ci, y) in window.iter().enumerate() {
                for f in crate::set::all_functions(x, y, budget)? {
                    let tf = m.on_function(&f, budget)?;
                    on_functions.push(FunctionEntry {
                        dom: di,
                        cod: ci,
                        table: f.map().to_vec(),
                        image: tf.map().to_vec(),
                    });
                }
            }
        }
        Ok(MonadFile {
            name: m.name(),
            window: window.iter().map(|s| s.labels().to_vec()).collect(),
            on_objects,
            unit,
            mult,
            on_functions,
        })
    }
}

/// A monad given purely by tables. All answers are looked up; asking for
/// an input outside the declared window is a structural error.
pub struct TableMonad {
    name: String,
    window: Vec<LSet>,
    values: Vec<LSet>,
    unit: Vec<Vec<usize>>,
    mult: Vec<Vec<usize>>,
    functions: Vec<FunctionEntry>,
}

impl TableMonad {
    fn entry_of(&self, x: &LSet) -> Result<usize> {
        self.window
            .iter()
            .position(|w| w == x)
            .ok_or_else(|| EngineError::structural(format!("{}: set not in the declared window", self.name)))
    }
}

impl SetMonad for TableMonad {
    fn name(&self) -> String {
        format!("tables:{}", self.name)
    }

    fn on_object(&self, x: &LSet, _: &Budget) -> Result<LSet> {
        Ok(self.values[self.entry_of(x)?].clone())
    }

    fn on_function(&self, f: &LFun, _: &Budget) -> Result<LFun> {
        let di = self.entry_of(f.dom())?;
        let ci = self.entry_of(f.cod())?;
        let entry = self
            .functions
            .iter()
            .find(|e| e.dom == di && e.cod == ci && e.table == f.map())
            .ok_or_else(|| {
                EngineError::structural(format!("{}: function not in the declared tables", self.name))
            })?;
        LFun::new(self.values[di].clone(), self.values[ci].clone(), entry.image.clone())
    }

    fn unit(&self, x: &LSet, _: &Budget) -> Result<LFun> {
        let i = self.entry_of(x)?;
        LFun::new(x.clone(), self.values[i].clone(), self.unit[i].clone())
    }

    fn mult(&self, x: &LSet, budget: &Budget) -> Result<LFun> {
        let i = self.entry_of(x)?;
        // the domain is the value of the value; the value must itself be a
        // declared window set for the tables to cover it
        let tt = self.on_object(&self.values[i], budget)?;
        LFun::new(tt, self.values[i].clone(), self.mult[i].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bkshadow::builtins;
    use crate::monadkit::laws::monad_law_check;
    use crate::monadkit::monad::skeletal_window;

    #[test]
    fn identity_monad_round_trips_through_tables_and_passes_laws() {
        let b = Budget::default();
        let window = skeletal_window(2);
        let file = MonadFile::from_monad(&builtins::IdentityMonad, &window, &b).unwrap();
        let json = file.to_json();
        let parsed = MonadFile::from_json(&json).unwrap();
        assert_eq!(parsed.to_json(), json);
        let m = parsed.into_monad().unwrap();
        let report = monad_law_check(&m, &window, &b).unwrap();
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn out_of_window_requests_are_structural_errors() {
        let b = Budget::default();
        let window = skeletal_window(1);
        let m = MonadFile::from_monad(&builtins::IdentityMonad, &window, &b)
            .unwrap()
            .into_monad()
            .unwrap();
        assert!(m.on_object(&LSet::skeletal(5), &b).is_err());
    }
}
