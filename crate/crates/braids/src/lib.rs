//! Exact braid-group computation with numeric dilatation estimation.
//!
//! The crate provides braid words and their algebra (skew involution,
//! palindromization, half twists, strand deletion), linking invariants of
//! closures, a linking-number certificate that a pure braid is pseudo-Anosov,
//! a calculus for braids that are increasing in the middle, constructors for
//! the explicit braid families behind the bounded-normalized-entropy
//! phenomenon, and a dilatation estimator driven by exact integer lamination
//! coordinates with a Burau lower bound.

pub mod artin;
pub mod burau;
pub mod certify;
pub mod dilatation;
pub mod error;
pub mod families;
pub mod increasing;
pub mod linking;
pub mod lamination;
pub mod perm;
pub mod word;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use word::{BraidWord, StrandTrace};

/// Exact scalar for production lamination coordinates.
pub type Coord = num_bigint::BigInt;

/// Lamination state over the production scalar.
pub type LaminationState = lamination::LaminationStateOf<Coord>;
