//! Homological invariants of finite-dimensional algebras over exact fields, and
//! mechanical checks of the higher Auslander correspondence on small instances.
//!
//! Conventions: modules are left modules; a path is written as its arrow list in
//! traversal order, and the product `x * y` in a path algebra means "first `y`,
//! then `x`", so representations of a quiver are left modules over its path algebra.

pub mod algebra;
pub mod corpus;
pub mod correspond;
pub mod error;
pub mod exactlin;
pub mod homology;
pub mod mckay;
pub mod modrep;
pub mod orthocat;

pub use error::{Error, Result};
