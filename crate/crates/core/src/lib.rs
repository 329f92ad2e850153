//! Exact computations with finite-dimensional Hopf algebras given by
//! structure constants: Yetter–Drinfeld braidings against modules, braided
//! two-cocycles and crossed products, cleft extensions, bosonization and
//! cocycle deformation.

pub mod braidmod;
pub mod cleft;
pub mod cli;
pub mod cocycle;
pub mod error;
pub mod fixtures;
pub mod hopfcore;
pub mod lifting;
pub mod linspace;
pub mod oracle;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use linspace::{BasedSpace, LinearMap, TensorSpace};
pub use report::Report;
pub use scalar::{FieldSpec, Scalar};
