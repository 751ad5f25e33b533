//! Finite groupoid actions on finite-dimensional algebras over prime fields,
//! skew groupoid rings, and exact checkers for Galois correspondence
//! properties of the invariant map `H ↦ R^{β_H}`.

pub mod action;
pub mod algebra;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod galois;
pub mod groupoid;
pub mod linalg;
pub mod random;
pub mod skew;

pub use action::GroupoidAction;
pub use algebra::{StructureAlgebra, Subalgebra};
pub use error::{Error, Result};
pub use galois::{GaloisCoordinates, GaloisInstance, Status};
pub use groupoid::{Groupoid, MorphismSet, Subgroupoid};
pub use linalg::{Matrix, PrimeField, Subspace};
pub use skew::SkewGroupoidRing;
