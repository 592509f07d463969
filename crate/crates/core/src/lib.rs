//! Exact finite-dimensional quantum logic over ℚ and ℚ(i).
//!
//! Subspaces of `Fⁿ` form the lattice [`Subspace`]; pairs of orthogonal
//! subspaces form [`OrthoSubspace`], which corresponds one-to-one with
//! partial projections ([`PartialProjection`]). Every law checker returns a
//! [`SuiteReport`] whose failures carry vector witnesses.

pub mod error;
pub mod linalg;
pub mod ortho_lattice;
pub mod partial_op;
pub mod quotient;
pub mod random;
pub mod report;
pub mod scalars;
pub mod subspace;

pub use error::{Error, Result};
pub use linalg::{Matrix, Vector};
pub use ortho_lattice::OrthoSubspace;
pub use partial_op::{PartialOperator, PartialProjection};
pub use quotient::QuotientSpace;
pub use random::Sampler;
pub use report::{SuiteReport, Verdict, Witness};
pub use scalars::{Field, Rational, Scalar};
pub use subspace::Subspace;
