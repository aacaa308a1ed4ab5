//! Finite-dimensional path algebras given by a quiver with relations, and
//! the module-theoretic tools needed to study a small quasi-hereditary
//! algebra: projectives, standard and costandard modules, Loewy series,
//! contravariant duality, isomorphism tests and tilting modules.
//!
//! Modules are right modules. A path is read left to right, and an arrow
//! `a: x → y` acts on a representation by a `dim M_y × dim M_x` matrix.

pub mod algebra;
pub mod error;
pub mod field;
pub mod highest;
pub mod hom;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod report;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use field::{Fp, Scalar};
pub use quiver::{FieldSpec, Path, Presentation, Quiver};
pub use rep::Rep;

/// The rationals.
pub type Q = num::BigRational;
