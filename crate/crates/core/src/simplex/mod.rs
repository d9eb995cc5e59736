//! Truncated simplicial sets, nerves, the chain nerve of the ordinal
//! category with its free basis and horn generators, free simplicial
//! monoid presentations with filtrations, and horn lifting checks.

pub mod freemonoid;
pub mod lifting;
pub mod ndelta;
pub mod nerve;
pub mod sset;

pub use freemonoid::{
    free_map_filtration, ndelta_presentation, verify_horn_annotation, FreeMonoidPresentation,
    HornAnnotation, Word,
};
pub use lifting::{horn_lifting_check, HornClass, HornWitness, SimplicialMap};
pub use ndelta::{
    enumerate_ndelta_inj, enumerate_ndelta_plus, join_decompose_chain, verify_basis_delta_inj,
    verify_basis_ndelta_plus, verify_horn_generators_ndelta_plus, OrdChain,
};
pub use nerve::{nerve, point};
pub use sset::TruncatedSSet;
