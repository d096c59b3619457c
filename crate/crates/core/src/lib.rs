//! Commutative algebra toolkit.

pub mod algebra;
pub mod error;
pub mod families;
pub mod groebner;
pub mod invariants;
pub mod monideal;
pub mod sop;

pub use error::{Error, Result};
