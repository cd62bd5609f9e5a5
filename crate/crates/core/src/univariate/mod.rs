//! Kravchuk matrices for the binomial distribution.
//!
//! Column `j` of Φ corresponds to the grid point `x = N - 2j` (`j` left
//! jumps); row `n` holds `K_n(x_j) / n!`. The weight matrix `B` carries
//! `C(N,j) p^(N-j) q^j` and `Γ` carries `C(N,n) (4pq)^n`, so that
//! `Φ B Φᵀ = Γ`.

pub(crate) mod appell;

pub use appell::{appell_functions, appell_identity_defect, appell_identity_defects, AppellFunctions};

use num_traits::One;

use crate::error::{Error, Result};
use crate::math::scalar::{int, is_open_probability, pow};
use crate::math::{binomial, factorial, DenseMatrix, ExactScalar, TruncatedSeries};

/// One univariate transform instance `(N, p, Φ, B, Γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KravchukBasis {
    level: usize,
    p: ExactScalar,
    q: ExactScalar,
    phi: DenseMatrix,
    b: DenseMatrix,
    gamma: DenseMatrix,
}

/// Grid point `x = N - 2j` for column `j`.
pub fn grid_point(level: usize, j: usize) -> i64 {
    level as i64 - 2 * j as i64
}

/// `(1 + 2qv)^(N-j) (1 - 2pv)^j`, truncated at `order`.
pub(crate) fn generating_series(level: usize, p: &ExactScalar, j: usize, order: usize) -> TruncatedSeries {
    let q = ExactScalar::one() - p;
    let right = TruncatedSeries::linear(order, int(1), int(2) * q).pow(level - j);
    let left = TruncatedSeries::linear(order, int(1), int(-2) * p).pow(j);
    right.mul(&left)
}

fn check_probability(p: &ExactScalar) -> Result<()> {
    if !is_open_probability(p) {
        return Err(Error::domain(format!("p = {p} must lie strictly between 0 and 1")));
    }
    Ok(())
}

/// Build Φ, B and Γ for level `N` and probability `p`.
pub fn kravchuk_matrix(level: usize, p: &ExactScalar) -> Result<KravchukBasis> {
    check_probability(p)?;
    let q = ExactScalar::one() - p;
    let n1 = level + 1;
    let mut phi = DenseMatrix::zeros(n1, n1);
    for j in 0..n1 {
        let g = generating_series(level, p, j, level);
        for i in 0..n1 {
            phi.set(i, j, g.coefficient(i));
        }
    }
    let weights: Vec<ExactScalar> = (0..n1)
        .map(|j| binomial(level, j).unwrap() * pow(p, level - j) * pow(&q, j))
        .collect();
    let four_pq = int(4) * p * &q;
    let norms: Vec<ExactScalar> = (0..n1)
        .map(|i| binomial(level, i).unwrap() * pow(&four_pq, i))
        .collect();
    Ok(KravchukBasis {
        level,
        p: p.clone(),
        q,
        phi,
        b: DenseMatrix::diagonal(&weights),
        gamma: DenseMatrix::diagonal(&norms),
    })
}

impl KravchukBasis {
    /// Assemble a basis from stored matrices, e.g. a serialized dump.
    /// Only shapes and `p` are validated; the identities are left for the
    /// caller to check.
    pub fn from_parts(
        level: usize,
        p: ExactScalar,
        phi: DenseMatrix,
        b: DenseMatrix,
        gamma: DenseMatrix,
    ) -> Result<Self> {
        check_probability(&p)?;
        let n1 = level + 1;
        for (name, m) in [("Phi", &phi), ("B", &b), ("Gamma", &gamma)] {
            if m.rows() != n1 || m.cols() != n1 {
                return Err(Error::dimension(
                    "KravchukBasis::from_parts",
                    format!("{name} {n1}x{n1}"),
                    format!("{}x{}", m.rows(), m.cols()),
                ));
            }
        }
        let q = ExactScalar::one() - &p;
        Ok(Self { level, p, q, phi, b, gamma })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn p(&self) -> &ExactScalar {
        &self.p
    }

    pub fn q(&self) -> &ExactScalar {
        &self.q
    }

    pub fn phi(&self) -> &DenseMatrix {
        &self.phi
    }

    /// Diagonal binomial weights.
    pub fn b(&self) -> &DenseMatrix {
        &self.b
    }

    /// Diagonal squared norms without the factorial factors.
    pub fn gamma(&self) -> &DenseMatrix {
        &self.gamma
    }

    /// `K_n(x_j, N) = n! Φ_{nj}`.
    pub fn krawtchouk_value(&self, n: usize, j: usize) -> ExactScalar {
        ExactScalar::from_integer(factorial(n)) * self.phi.get(n, j)
    }

    /// `Φ B Φᵀ - Γ`.
    pub fn orthogonality_defect(&self) -> DenseMatrix {
        let lhs = &(&self.phi * &self.b) * &self.phi.transpose();
        &lhs - &self.gamma
    }

    /// `Φ⁻¹ = B Φᵀ Γ⁻¹`.
    pub fn inverse(&self) -> DenseMatrix {
        let gamma_inv: Vec<ExactScalar> = self.gamma.diagonal_entries().iter().map(|g| g.recip()).collect();
        &(&self.b * &self.phi.transpose()) * &DenseMatrix::diagonal(&gamma_inv)
    }

    /// The modified involution `Φ P Φ = 2^N P′`.
    pub fn involution_identity(&self) -> InvolutionIdentity {
        let two_p = int(2) * &self.p;
        let n1 = self.level + 1;
        let p_diag: Vec<ExactScalar> = (0..n1).map(|j| pow(&two_p, self.level - j)).collect();
        let pp_diag: Vec<ExactScalar> = (0..n1).map(|j| pow(&two_p, j)).collect();
        let p_mat = DenseMatrix::diagonal(&p_diag);
        let pprime = DenseMatrix::diagonal(&pp_diag);
        let scale = pow(&int(2), self.level);
        let defect = &(&(&self.phi * &p_mat) * &self.phi) - &pprime.scale(&scale);

        let pprime_inv: Vec<ExactScalar> = pp_diag.iter().map(|x| x.recip()).collect();
        let corollary_inverse =
            (&(&p_mat * &self.phi) * &DenseMatrix::diagonal(&pprime_inv)).scale(&scale.recip());
        let inverse_agrees = corollary_inverse == self.inverse();
        InvolutionIdentity {
            p: p_mat,
            pprime,
            defect,
            corollary_inverse,
            inverse_agrees,
        }
    }

    pub fn determinant(&self) -> ExactScalar {
        self.phi.determinant().expect("Φ is square")
    }

    /// `Φ · data`.
    pub fn transform(&self, data: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        self.phi.mul_vec(data)
    }

    /// `dataᵀ · Φ`.
    pub fn transform_left(&self, data: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        self.phi.vec_mul(data)
    }

    /// `Φ⁻¹ · data`.
    pub fn inverse_transform(&self, data: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        self.inverse().mul_vec(data)
    }
}

/// Result of checking `Φ P Φ = 2^N P′` and the induced inverse formula.
#[derive(Clone, Debug)]
pub struct InvolutionIdentity {
    /// `diag((2p)^(N-j))`
    pub p: DenseMatrix,
    /// `diag((2p)^j)`
    pub pprime: DenseMatrix,
    /// `Φ P Φ - 2^N P′`
    pub defect: DenseMatrix,
    /// `2^-N P Φ P′⁻¹`
    pub corollary_inverse: DenseMatrix,
    /// Whether the corollary inverse equals `B Φᵀ Γ⁻¹`.
    pub inverse_agrees: bool,
}

impl InvolutionIdentity {
    pub fn holds(&self) -> bool {
        self.defect.is_zero() && self.inverse_agrees
    }
}

/// `(n!)² C(N,n) (4pq)^n`.
pub fn squared_norm(level: usize, p: &ExactScalar, n: usize) -> Result<ExactScalar> {
    check_probability(p)?;
    if n > level {
        return Err(Error::domain(format!("degree {n} exceeds level {level}")));
    }
    let q = ExactScalar::one() - p;
    let nf = ExactScalar::from_integer(factorial(n));
    Ok(&nf * &nf * binomial(level, n)? * pow(&(int(4) * p * q), n))
}

/// Expected `det Φ`: `±2^(N(N+1)/2)`, positive iff `N ≡ 0, 3 (mod 4)`.
pub fn expected_determinant(level: usize) -> ExactScalar {
    let magnitude = pow(&int(2), level * (level + 1) / 2);
    if matches!(level % 4, 0 | 3) {
        magnitude
    } else {
        -magnitude
    }
}
