//! Exact arithmetic substrate: scalars, matrices, combinatorics and
//! truncated power series.

pub mod combinat;
pub mod matrix;
pub mod nilpotent;
pub mod scalar;
pub mod series;

pub use combinat::{binomial, factorial, multinomial};
pub use matrix::DenseMatrix;
pub use nilpotent::poly_of_nilpotent;
pub use scalar::{format_scalar, parse_scalar, parse_scalar_list, ExactScalar};
pub use series::TruncatedSeries;
