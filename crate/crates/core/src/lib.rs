//! Exact-arithmetic Krawtchouk transforms.
//!
//! * [`math`]: rationals, dense matrices, truncated series, nilpotent
//!   matrix functions.
//! * [`univariate`]: Kravchuk matrices for the binomial distribution, their
//!   inverses and identities, and the Appell-system series.
//! * [`operator`]: expansion coefficients of polynomials via the
//!   differentiation matrix.
//! * [`coding`]: the coding-theory normalization, linear codes, MacWilliams
//!   and Delsarte checks.
//! * [`multivariate`]: induced (symmetric power) matrices and Krawtchouk
//!   polynomials for the multinomial distribution.

pub mod cli;
pub mod coding;
pub mod error;
pub mod io;
pub mod math;
pub mod multivariate;
pub mod operator;
pub mod univariate;

pub use error::{Error, Result};
pub use math::{DenseMatrix, ExactScalar, TruncatedSeries};
