//! Exact linear algebra over Q and prime fields.

mod matrix;
pub mod poly;
mod scalar;
mod space;

pub use matrix::{kernel_basis, kron, rref, solve, Matrix};
pub use scalar::{FieldSpec, Scalar};
pub use space::{Coordinates, Subspace};
