//! Finite ordered algebras with two monoid operations.
//!
//! Elements are dense indices into a [`order::FinitePoset`]; every operation is a
//! flat lookup table.

pub mod algebra;
pub mod clauses;
pub mod completion;
pub mod constructions;
pub mod error;
pub mod format;
pub mod fractions;
pub mod iso;
pub mod order;

pub use algebra::{InteriorOperator, InvolutiveAlgebra, OrderedAlgebra};
pub use error::{Error, Result};
pub use order::FinitePoset;
