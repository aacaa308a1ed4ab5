//! Tensor products of simple SL3 modules in characteristics 2 and 3.
//!
//! Weights live in the fundamental-weight basis. Characters are exact
//! integer maps; every decomposition can be checked against the product
//! of simple characters.

pub mod characters;
pub mod decompose;
pub mod error;
pub mod family;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use weights::{Prime, Weight};
