//! Scalar kernel: the [`Scalar`] field abstraction, Pochhammer symbols,
//! terminating hypergeometric series and `sign * sqrt(q)` values.

mod qsqrt;
mod scalar;
mod series;

pub use qsqrt::{qsqrt_mul, qsqrt_square, sum_sqrt_terms, QSqrt};
pub use scalar::{neg_one_pow, parse_rational, sign_of, Scalar};
pub use series::{absorbed_series, binomial, factorial, hyp_terminating, pochhammer, HypSeries};
