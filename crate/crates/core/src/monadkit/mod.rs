//! Monads on finite-set windows: law checking, algebra search, the
//! image/algebra/split/retract chain, completion, cobar tables, monad
//! morphisms, and the walking action.

pub mod algebra;
pub mod cobar;
pub mod fakir;
pub mod isar;
pub mod laws;
pub mod monad;
pub mod morphisms;
pub mod tables;
pub mod walking;

pub use algebra::{algebra_search, retract_membership, verify_algebra, RetractWitness};
pub use cobar::{cobar_table, CobarTable};
pub use fakir::{fakir, fakir_check, fakir_map, fakir_unit, FakirValue};
pub use isar::{isar_chain_check, split_resolution_search, ChainRow, SplitEvidence};
pub use laws::monad_law_check;
pub use monad::{skeletal_window, PowerTower, SetMonad};
pub use morphisms::{monad_morphisms_from_identity, natural_transformations_from_identity};
pub use tables::{MonadFile, TableMonad};
pub use walking::{chain_lattice_algebra, iterated_action, walking_action, walking_action_check};
