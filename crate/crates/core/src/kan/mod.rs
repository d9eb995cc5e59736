//! Ends of concrete diagrams: codensity values of full subcategory
//! inclusions, windowed codensity endofunctors and their terminality,
//! retract closure invariance, reflective localizations, and cofinality
//! criteria.

pub mod codensity;
pub mod cofinal;
pub mod localize;
pub mod monad;
pub mod retract;
pub mod terminal;

pub use codensity::{
    codensity_functor, codensity_value, codensity_value_naive, CodensityValue, FamilyProblem,
    WindowedEndofunctor,
};
pub use cofinal::{cofinality_witness_check, is_initial_functor, CofinalityWitness};
pub use localize::{localization_check, reflector_and_localization, Localization};
pub use monad::{codensity_set_monad, CodensitySetMonad};
pub use retract::{closure_invariance_check, retract_closure};
pub use terminal::{d_preserving_check, terminality_count};
