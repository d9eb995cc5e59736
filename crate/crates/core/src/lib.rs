//! A verification-grade engine for finite category theory.
//!
//! Everything here is exact and exhaustively checked on declared finite
//! windows: finite categories and their derived categories (`fincat`),
//! codensity monads of full subcategories computed as ends of naturality
//! families (`kan`), monads on finite-set windows with their algebra
//! spectra and completion (`monadkit`), truncated simplicial sets and free
//! simplicial monoid bases (`simplex`), and the affine-span monad over a
//! finite ring together with the builtin comparison monads (`bkshadow`).
//!
//! Infinite quantifications never happen: every claim is stamped with the
//! window it was verified on, and enumerations that would exceed the
//! configured [`budget::Budget`] fail loudly instead of truncating.

pub mod bkshadow;
pub mod budget;
pub mod error;
pub mod fincat;
pub mod kan;
pub mod monadkit;
pub mod par;
pub mod report;
pub mod set;
pub mod simplex;
pub mod suite;
