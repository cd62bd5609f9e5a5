//! The canonical Appell system behind the binomial Krawtchouk polynomials:
//!
//! * `U(v) = ½ log((1 + 2qv) / (1 - 2pv))`
//! * `H(z) = log(p eᶻ + q e⁻ᶻ)`
//! * `V(z) = sinh z / (p eᶻ + q e⁻ᶻ)`, the compositional inverse of `U`.

use num_traits::One;

use super::{check_probability, generating_series, grid_point};
use crate::error::{Error, Result};
use crate::math::scalar::{int, ratio};
use crate::math::{ExactScalar, TruncatedSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppellFunctions {
    pub order: usize,
    /// series in `v`
    pub u: TruncatedSeries,
    /// series in `z`
    pub h: TruncatedSeries,
    /// series in `z`
    pub v: TruncatedSeries,
}

/// `p eᶻ + q e⁻ᶻ`.
pub(crate) fn step_transform(p: &ExactScalar, order: usize) -> TruncatedSeries {
    let q = ExactScalar::one() - p;
    TruncatedSeries::exp_scaled(order, &int(1))
        .scale(p)
        .add(&TruncatedSeries::exp_scaled(order, &int(-1)).scale(&q))
}

pub fn appell_functions(p: &ExactScalar, order: usize) -> Result<AppellFunctions> {
    check_probability(p)?;
    if order == 0 {
        return Err(Error::domain("Appell series need order >= 1"));
    }
    let q = ExactScalar::one() - p;
    let num = TruncatedSeries::linear(order, int(1), int(2) * &q).log()?;
    let den = TruncatedSeries::linear(order, int(1), int(-2) * p).log()?;
    let u = num.sub(&den).scale(&ratio(1, 2));
    let mgf = step_transform(p, order);
    let h = mgf.log()?;
    let v = TruncatedSeries::sinh(order).mul(&mgf.recip()?);
    Ok(AppellFunctions { order, u, h, v })
}

/// Difference between the generating function `(1+2qv)^(N-j) (1-2pv)^j`
/// and `exp(x U(v) - N H(U(v)))` at grid column `j`, truncated at `order`.
pub fn appell_identity_defect(p: &ExactScalar, level: usize, j: usize, order: usize) -> Result<TruncatedSeries> {
    if j > level {
        return Err(Error::domain(format!("column {j} exceeds level {level}")));
    }
    let f = appell_functions(p, order)?;
    Ok(defect_at(&f, p, level, j))
}

fn defect_at(f: &AppellFunctions, p: &ExactScalar, level: usize, j: usize) -> TruncatedSeries {
    let x = int(grid_point(level, j));
    let h_of_u = f.h.compose(&f.u).expect("U(0) = 0");
    let exponent = f.u.scale(&x).sub(&h_of_u.scale(&int(level as i64)));
    let rhs = exponent.exp().expect("H(U(0)) = 0");
    generating_series(level, p, j, f.order).sub(&rhs)
}

/// [`appell_identity_defect`] for every column `j = 0..=N`.
pub fn appell_identity_defects(p: &ExactScalar, level: usize, order: usize) -> Result<Vec<TruncatedSeries>> {
    let f = appell_functions(p, order)?;
    Ok((0..=level).map(|j| defect_at(&f, p, level, j)).collect())
}
