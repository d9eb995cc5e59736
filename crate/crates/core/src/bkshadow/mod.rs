//! Builtin monads for the comparison corpus, centered on the affine-span
//! monad of a finite commutative ring.

pub mod affine;
pub mod builtins;
pub mod kr;
pub mod ring;

pub use affine::{
    affine_span_monad, enumerate_affine, r_product_map, AffineElement, AffineSpanMonad, RProduct,
};
pub use builtins::{builtin_monad, catalog};
pub use kr::{kr_shadow, levelwise_affine};
pub use ring::{FinMonoid, FiniteRing};
