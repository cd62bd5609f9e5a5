//! Krawtchouk expansion coefficients through the differentiation matrix.
//!
//! For `deg f ≤ N` the expansion `f(x) = Σ_n f̃(n) K_n(x, N)` has
//!
//! ```text
//! f̃(n) = (1/n!) · [(p e^D + q e^-D)^(N-n) (sinh D)^n f](0)
//! ```
//!
//! where `D = d/dx` acts on coefficient vectors through the nilpotent matrix
//! `D̂` with superdiagonal `1, 2, ..., N`. Evaluating at `x = 0` means reading
//! the constant coefficient.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::math::scalar::{int, is_open_probability};
use crate::math::{factorial, poly_of_nilpotent, DenseMatrix, ExactScalar, TruncatedSeries};
use crate::univariate::{appell, KravchukBasis};

/// Polynomial in one variable, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyCoeffs(pub Vec<ExactScalar>);

impl PolyCoeffs {
    /// Degree of the highest nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }

    pub fn evaluate(&self, x: &ExactScalar) -> ExactScalar {
        self.0.iter().rev().fold(ExactScalar::zero(), |acc, c| acc * x + c)
    }

    /// Coefficient vector of length `level + 1`; errors if the degree is too high.
    pub fn padded(&self, level: usize) -> Result<Vec<ExactScalar>> {
        if let Some(d) = self.degree() {
            if d > level {
                return Err(Error::domain(format!("polynomial degree {d} exceeds level {level}")));
            }
        }
        let mut v: Vec<ExactScalar> = self.0.iter().take(level + 1).cloned().collect();
        v.resize(level + 1, ExactScalar::zero());
        Ok(v)
    }
}

/// Polynomial in `x, y`; entry `(a, b)` is the coefficient of `x^a y^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePoly(pub DenseMatrix);

impl BivariatePoly {
    pub fn evaluate(&self, x: &ExactScalar, y: &ExactScalar) -> ExactScalar {
        let m = &self.0;
        let mut total = ExactScalar::zero();
        let mut xa = ExactScalar::one();
        for a in 0..m.rows() {
            let mut yb = ExactScalar::one();
            for b in 0..m.cols() {
                total += &xa * &yb * m.get(a, b);
                yb *= y;
            }
            xa *= x;
        }
        total
    }

    fn padded(&self, n: usize, m: usize) -> Result<DenseMatrix> {
        let f = &self.0;
        let mut out = DenseMatrix::zeros(n + 1, m + 1);
        for a in 0..f.rows() {
            for b in 0..f.cols() {
                let c = f.get(a, b);
                if c.is_zero() {
                    continue;
                }
                if a > n || b > m {
                    return Err(Error::domain(format!(
                        "term x^{a} y^{b} exceeds degree bounds ({n}, {m})"
                    )));
                }
                out.set(a, b, c.clone());
            }
        }
        Ok(out)
    }
}

/// Matrix of `d/dx` on the monomial basis `1, x, ..., x^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DhatOperator {
    level: usize,
    matrix: DenseMatrix,
}

pub fn dhat(level: usize) -> DhatOperator {
    let mut m = DenseMatrix::zeros(level + 1, level + 1);
    for k in 0..level {
        m.set(k, k + 1, int(k as i64 + 1));
    }
    DhatOperator { level, matrix: m }
}

impl DhatOperator {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    /// `ψ(D̂)` for a power series `ψ`.
    pub fn apply_series(&self, coeffs: &[ExactScalar]) -> DenseMatrix {
        poly_of_nilpotent(coeffs, &self.matrix, self.level + 1).expect("D̂ is nilpotent of index N+1")
    }

    /// `p e^D̂ + q e^-D̂`.
    pub fn step_operator(&self, p: &ExactScalar) -> DenseMatrix {
        self.apply_series(appell::step_transform(p, self.level).coefficients())
    }

    /// `sinh D̂`.
    pub fn sinh(&self) -> DenseMatrix {
        self.apply_series(TruncatedSeries::sinh(self.level).coefficients())
    }
}

fn check_p(p: &ExactScalar) -> Result<()> {
    if !is_open_probability(p) {
        return Err(Error::domain(format!("p = {p} must lie strictly between 0 and 1")));
    }
    Ok(())
}

/// Linear map `f ↦ f̃` on coefficient vectors of length `N+1`.
///
/// Row `n` is the constant-term row of `(1/n!) (p e^D̂ + q e^-D̂)^(N-n) (sinh D̂)^n`.
pub fn expansion_matrix(level: usize, p: &ExactScalar) -> Result<DenseMatrix> {
    check_p(p)?;
    let d = dhat(level);
    let step = d.step_operator(p);
    let sinh = d.sinh();
    let n1 = level + 1;
    let mut out = DenseMatrix::zeros(n1, n1);
    // step^(N-n) for n = N, N-1, ..., 0 and sinh^n for n = 0..N
    let mut sinh_pows = Vec::with_capacity(n1);
    let mut acc = DenseMatrix::identity(n1);
    for _ in 0..n1 {
        sinh_pows.push(acc.clone());
        acc = &acc * &sinh;
    }
    let mut step_pow = DenseMatrix::identity(n1);
    for n in (0..n1).rev() {
        let op = &step_pow * &sinh_pows[n];
        let inv_fact = ExactScalar::from_integer(factorial(n)).recip();
        for a in 0..n1 {
            out.set(n, a, op.get(0, a) * &inv_fact);
        }
        step_pow = &step_pow * &step;
    }
    Ok(out)
}

/// Krawtchouk expansion coefficients `f̃(0..=N)` of `f`.
pub fn expansion_coefficients(f: &PolyCoeffs, level: usize, p: &ExactScalar) -> Result<Vec<ExactScalar>> {
    let coeffs = f.padded(level)?;
    expansion_matrix(level, p)?.mul_vec(&coeffs)
}

/// Sign test driving the positivity theorem: every `f̃(n)` with
/// `n ≤ deg f` must be positive when `p > 1/2` and nonnegative otherwise.
///
/// The caller is responsible for `f` having positive coefficients; the
/// function only reports the sign pattern of the expansion.
pub fn positivity_check(f: &PolyCoeffs, level: usize, p: &ExactScalar) -> Result<bool> {
    let coeffs = expansion_coefficients(f, level, p)?;
    let Some(deg) = f.degree() else {
        return Ok(true);
    };
    let strict = *p > ExactScalar::new(1.into(), 2.into());
    Ok(coeffs[..=deg].iter().all(|c| if strict { c > &ExactScalar::zero() } else { c >= &ExactScalar::zero() }))
}

/// `f̃(n, m)` for the product basis `K_n(x, N) K_m(y, M)`.
pub fn expansion_coefficients_2d(
    f: &BivariatePoly,
    n_level: usize,
    m_level: usize,
    p1: &ExactScalar,
    p2: &ExactScalar,
) -> Result<DenseMatrix> {
    let coeffs = f.padded(n_level, m_level)?;
    let tx = expansion_matrix(n_level, p1)?;
    let ty = expansion_matrix(m_level, p2)?;
    Ok(&(&tx * &coeffs) * &ty.transpose())
}

/// Grid values `Σ_n f̃(n) n! Φ_{nj}` for `j = 0..=N`.
pub fn reconstruct(coeffs: &[ExactScalar], basis: &KravchukBasis) -> Result<Vec<ExactScalar>> {
    let scaled: Vec<ExactScalar> = coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| c * ExactScalar::from_integer(factorial(n)))
        .collect();
    basis.phi().vec_mul(&scaled)
}

/// Grid values on the `(N+1) × (M+1)` product grid.
pub fn reconstruct_2d(coeffs: &DenseMatrix, bx: &KravchukBasis, by: &KravchukBasis) -> Result<DenseMatrix> {
    let fact = |k: usize| -> Vec<ExactScalar> {
        (0..k).map(|n| ExactScalar::from_integer(factorial(n))).collect()
    };
    let kx = &DenseMatrix::diagonal(&fact(bx.level() + 1)) * bx.phi();
    let ky = &DenseMatrix::diagonal(&fact(by.level() + 1)) * by.phi();
    Ok(&kx.transpose().try_mul(coeffs)? * &ky)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::scalar::ratio;
    use crate::univariate::{grid_point, kravchuk_matrix};
    use proptest::prelude::*;

    fn poly(v: &[i64]) -> PolyCoeffs {
        PolyCoeffs(v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn dhat_shape() {
        let d = dhat(4);
        let expect = DenseMatrix::from_int_rows(&[
            [0, 1, 0, 0, 0],
            [0, 0, 2, 0, 0],
            [0, 0, 0, 3, 0],
            [0, 0, 0, 0, 4],
            [0, 0, 0, 0, 0],
        ]);
        assert_eq!(*d.matrix(), expect);
        assert_eq!(*dhat(0).matrix(), DenseMatrix::zeros(1, 1));
        for level in 0..=12 {
            assert!(dhat(level).matrix().pow(level + 1).unwrap().is_zero());
            if level > 0 {
                assert!(!dhat(level).matrix().pow(level).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn dhat_differentiates() {
        let d = dhat(6);
        for m in 0..=6 {
            let mut e = vec![int(0); 7];
            e[m] = int(1);
            let out = d.matrix().mul_vec(&e).unwrap();
            let mut expect = vec![int(0); 7];
            if m > 0 {
                expect[m - 1] = int(m as i64);
            }
            assert_eq!(out, expect);
        }
    }

    #[test]
    fn operators_commute() {
        let d = dhat(5);
        let a = d.step_operator(&ratio(2, 7));
        let s = d.sinh();
        assert_eq!(&a * &s, &s * &a);
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(expansion_coefficients(&poly(&[0, 1]), 1, &ratio(1, 2)).unwrap(), vec![int(0), int(1)]);
        for level in 0..5 {
            let mut expect = vec![int(0); level + 1];
            expect[0] = int(1);
            assert_eq!(expansion_coefficients(&poly(&[1]), level, &ratio(2, 3)).unwrap(), expect);
        }
        let f = poly(&[0, 0, 1]);
        let b = kravchuk_matrix(2, &ratio(1, 2)).unwrap();
        let c = expansion_coefficients(&f, 2, &ratio(1, 2)).unwrap();
        assert_eq!(reconstruct(&c, &b).unwrap(), vec![int(4), int(0), int(4)]);
        assert!(matches!(expansion_coefficients(&poly(&[0, 0, 1]), 1, &ratio(1, 2)), Err(Error::Domain(_))));
        // trailing zeros beyond N are fine
        assert!(expansion_coefficients(&poly(&[1, 1, 0, 0]), 1, &ratio(1, 2)).is_ok());
    }

    #[test]
    fn positivity_examples() {
        assert!(positivity_check(&poly(&[0, 1, 1]), 2, &ratio(7, 10)).unwrap());
        let c = expansion_coefficients(&poly(&[0, 1, 1]), 2, &ratio(7, 10)).unwrap();
        assert!(c.iter().all(|x| *x > ExactScalar::zero()));
        assert!(positivity_check(&poly(&[1]), 4, &ratio(1, 2)).unwrap());
        // x at p = 1/2: f̃ = (0, 1), zero allowed
        assert!(positivity_check(&poly(&[0, 1]), 1, &ratio(1, 2)).unwrap());
        // p < q may fail: f = x, N = 1 gives f̃(0) = 2p - 1 < 0
        assert!(!positivity_check(&poly(&[0, 1]), 1, &ratio(1, 3)).unwrap());
    }

    #[test]
    fn bivariate_examples() {
        let p = ratio(1, 2);
        let one = BivariatePoly(DenseMatrix::from_int_rows(&[[1]]));
        let c = expansion_coefficients_2d(&one, 2, 3, &ratio(1, 3), &ratio(3, 5)).unwrap();
        let mut expect = DenseMatrix::zeros(3, 4);
        expect.set(0, 0, int(1));
        assert_eq!(c, expect);

        let xy = BivariatePoly(DenseMatrix::from_int_rows(&[[0, 0], [0, 1]]));
        let c = expansion_coefficients_2d(&xy, 1, 1, &p, &p).unwrap();
        assert_eq!(c, DenseMatrix::from_int_rows(&[[0, 0], [0, 1]]));

        // x² + y, each variable expanded separately
        let (p1, p2) = (ratio(3, 5), ratio(1, 4));
        let f = BivariatePoly(DenseMatrix::from_int_rows(&[[0, 1], [0, 0], [1, 0]]));
        let c = expansion_coefficients_2d(&f, 2, 1, &p1, &p2).unwrap();
        let x2 = expansion_coefficients(&poly(&[0, 0, 1]), 2, &p1).unwrap();
        let y = expansion_coefficients(&poly(&[0, 1]), 1, &p2).unwrap();
        let one_x = expansion_coefficients(&poly(&[1]), 2, &p1).unwrap();
        let one_y = expansion_coefficients(&poly(&[1]), 1, &p2).unwrap();
        for n in 0..3 {
            for m in 0..2 {
                assert_eq!(c[(n, m)], &x2[n] * &one_y[m] + &one_x[n] * &y[m]);
            }
        }
        let bx = kravchuk_matrix(2, &p1).unwrap();
        let by = kravchuk_matrix(1, &p2).unwrap();
        let values = reconstruct_2d(&c, &bx, &by).unwrap();
        for j in 0..3 {
            for k in 0..2 {
                let (x, y) = (int(grid_point(2, j)), int(grid_point(1, k)));
                assert_eq!(values[(j, k)], f.evaluate(&x, &y));
            }
        }
        let too_high = BivariatePoly(DenseMatrix::from_int_rows(&[[0, 0, 1]]));
        assert!(expansion_coefficients_2d(&too_high, 2, 1, &p1, &p2).is_err());
    }

    #[test]
    fn psi_of_dhat_reads_coefficients() {
        let level = 6;
        let d = dhat(level);
        let c: Vec<ExactScalar> = (0..=level as i64).map(|k| ratio(k * 3 - 7, k + 2)).collect();
        let psi = d.apply_series(&c);
        for m in 0..=level {
            let mut xm = vec![int(0); level + 1];
            xm[m] = int(1);
            let at_zero = psi.mul_vec(&xm).unwrap()[0].clone();
            assert_eq!(at_zero, ExactScalar::from_integer(factorial(m)) * &c[m]);
        }
    }

    fn rational() -> impl Strategy<Value = ExactScalar> {
        (-9i64..=9, 1i64..=5).prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #[test]
        fn reconstruction_identity(
            level in 0usize..=6,
            coeffs in proptest::collection::vec(rational(), 7),
            pn in 1i64..=9,
        ) {
            let p = ratio(pn, 10);
            let f = PolyCoeffs(coeffs[..=level].to_vec());
            let c = expansion_coefficients(&f, level, &p).unwrap();
            let b = kravchuk_matrix(level, &p).unwrap();
            let values = reconstruct(&c, &b).unwrap();
            for (j, v) in values.iter().enumerate() {
                prop_assert_eq!(v, &f.evaluate(&int(grid_point(level, j))));
            }
        }
    }
}
