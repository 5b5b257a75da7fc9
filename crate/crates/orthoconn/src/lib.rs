//! Exact multivariate orthogonal polynomials and their connection coefficients.
//!
//! Everything is generic over [`Scalar`]; the aliases below fix the exact
//! rational field used by every verification routine.

pub mod ball_sphere;
pub mod closed_forms;
pub mod connection;
pub mod discrete;
pub mod error;
pub mod exact_arith;
pub mod multipoly;
pub mod racah;
pub mod report;
pub mod simplex_jacobi;
pub mod suites;

pub use error::{Error, Result};
pub use exact_arith::{QSqrt, Scalar};
pub use multipoly::{MultiIndex, SparsePoly};
pub use report::Report;
pub use simplex_jacobi::{KappaParams, Permutation};
pub use connection::ConnMatrix;
/// Arbitrary-precision rational, the default field.
pub type Rational = num_rational::BigRational;
/// Polynomial with rational coefficients.
pub type Poly = SparsePoly<Rational>;
/// `sign * sqrt(q)` with rational `q`.
pub type QSqrtQ = QSqrt<Rational>;
/// Jacobi parameters over the rationals.
pub type Kappa = KappaParams<Rational>;
/// Connection matrix with rational entries.
pub type ConnMatrixQ = ConnMatrix<Rational>;
