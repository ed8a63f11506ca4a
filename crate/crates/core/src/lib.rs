//! Matrix computation over semirings: classical, probabilistic, quantum and
//! fuzzy (MV-algebra) models, a small circuit language, and exhaustive law
//! checkers over finite grids.

pub mod cli;
pub mod dsl;
pub mod error;
pub mod linalg;
pub mod models;
pub mod oracle;
pub mod scalar;
pub mod semiring;
pub mod textio;

pub use error::{AlgebraError, ModelError, TextError};
pub use linalg::{linearly_independent, SMatrix, SVector};
pub use models::Model;
pub use scalar::{ComplexScalar, Rational, UnitScalar};
pub use semiring::SemiringInstance;
