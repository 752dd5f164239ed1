//! Combinatorics of irreducible components of Springer fibers in type A.
//!
//! Partitions and compositions, standard tableaux, link patterns, Jordan
//! orbit dimensions, component classification, and an exact linear-algebra
//! oracle that recomputes the closed formulas from explicit matrices.

pub mod classify;
pub mod error;
pub mod linkpatterns;
pub mod oracle;
pub mod orbits;
pub mod shapes;
pub mod tableaux;

pub use classify::{
    bc_is_singular, classify_shape, classify_tableau, fiber_bundle_base, BcVerdict, ComponentReport,
    ShapeClassification, ShapeSummary, Singularity, SmoothReason, Witness,
};
pub use error::{Error, Result};
pub use linkpatterns::{LinkPattern, PatternFilter};
pub use oracle::linalg::{Matrix, Scalar};
pub use oracle::NilpotentRealization;
pub use orbits::{analyze_orbit, inductive_report, InductiveReport, OrbitAnalysis};
pub use shapes::{Composition, Partition};
pub use tableaux::StandardTableau;

/// Matrices over arbitrary-precision integers; the oracle's default.
pub type IntMatrix = Matrix<num_bigint::BigInt>;
/// Matrices over arbitrary-precision rationals.
pub type RationalMatrix = Matrix<num_rational::BigRational>;
/// Matrices over `i64`, for small inputs where overflow cannot occur.
pub type MachineMatrix = Matrix<i64>;
