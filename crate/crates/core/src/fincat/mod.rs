//! Finite categories, functors, natural transformations, the simplex
//! category family, derived categories, exhaustive limits, and the
//! category definition file format.

pub mod builders;
pub mod category;
pub mod concrete;
pub mod derived;
pub mod functor;
pub mod io;
pub mod limits;
pub mod ordmap;

pub use category::{Cat, CategoryBuilder, FinCategory, MorId, Morphism, ObjId};
pub use concrete::ConcreteCategory;
pub use derived::{comma_under, over_fiber, twisted_arrow, OverFiber};
pub use functor::{FinFunctor, NatTransf};
pub use limits::{initial_object, limit_in_finite_category, terminal_object, Cone};
pub use ordmap::{amax, max_canonical_form, max_compose, max_recompose, MaxOrdMap, OrdMap};
