use num_traits::Zero;

use super::matrix::DenseMatrix;
use super::scalar::ExactScalar;
use crate::error::{Error, Result};

/// Evaluate the power series `Σ c_k M^k` at a nilpotent matrix.
///
/// `M^bound` must vanish; this is checked. Only the first `bound`
/// coefficients contribute, missing ones count as zero.
pub fn poly_of_nilpotent(
    coeffs: &[ExactScalar],
    m: &DenseMatrix,
    nilpotency_bound: usize,
) -> Result<DenseMatrix> {
    if !m.is_square() {
        return Err(Error::dimension(
            "poly_of_nilpotent",
            "square matrix",
            format!("{}x{}", m.rows(), m.cols()),
        ));
    }
    let n = m.rows();
    let mut power = DenseMatrix::identity(n);
    let mut acc = DenseMatrix::zeros(n, n);
    for k in 0..nilpotency_bound {
        if let Some(c) = coeffs.get(k) {
            if !c.is_zero() {
                acc = &acc + &power.scale(c);
            }
        }
        power = &power * m;
    }
    if !power.is_zero() {
        return Err(Error::InvariantViolation(format!(
            "matrix is not nilpotent of index <= {nilpotency_bound}"
        )));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::scalar::{int, ratio};
    use crate::math::series::TruncatedSeries;
    use proptest::prelude::*;

    #[test]
    fn exp_of_zero_is_identity() {
        let exp = TruncatedSeries::exp_scaled(4, &int(1));
        let z = DenseMatrix::zeros(3, 3);
        assert_eq!(poly_of_nilpotent(exp.coefficients(), &z, 1).unwrap(), DenseMatrix::identity(3));
    }

    #[test]
    fn rejects_non_nilpotent() {
        let exp = TruncatedSeries::exp_scaled(4, &int(1));
        let m = DenseMatrix::from_int_rows(&[[0, 1], [1, 0]]);
        assert!(matches!(
            poly_of_nilpotent(exp.coefficients(), &m, 4),
            Err(Error::InvariantViolation(_))
        ));
        // bound too small for a genuinely nilpotent matrix
        let j = DenseMatrix::from_int_rows(&[[0, 1, 0], [0, 0, 1], [0, 0, 0]]);
        assert!(poly_of_nilpotent(exp.coefficients(), &j, 2).is_err());
        assert!(poly_of_nilpotent(exp.coefficients(), &j, 3).is_ok());
        assert!(poly_of_nilpotent(exp.coefficients(), &DenseMatrix::zeros(2, 3), 3).is_err());
    }

    fn strictly_upper(n: usize) -> impl Strategy<Value = DenseMatrix> {
        proptest::collection::vec((-4i64..=4, 1i64..=3), n * n).prop_map(move |v| {
            let mut m = DenseMatrix::zeros(n, n);
            for (idx, (a, b)) in v.into_iter().enumerate() {
                let (i, j) = (idx / n, idx % n);
                if j > i {
                    m.set(i, j, ratio(a, b));
                }
            }
            m
        })
    }

    proptest! {
        #[test]
        fn exp_times_exp_of_negation_is_identity(m in strictly_upper(5)) {
            let ep = TruncatedSeries::exp_scaled(5, &int(1));
            let em = TruncatedSeries::exp_scaled(5, &int(-1));
            let a = poly_of_nilpotent(ep.coefficients(), &m, 5).unwrap();
            let b = poly_of_nilpotent(em.coefficients(), &m, 5).unwrap();
            prop_assert_eq!(&a * &b, DenseMatrix::identity(5));
        }
    }
}
