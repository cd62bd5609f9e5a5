//! Induced (symmetric power) matrices and Krawtchouk polynomials for the
//! multinomial distribution.
//!
//! For a `(d+1)×(d+1)` matrix `A`, set `y_i = Σ_j A_ij x_j`. At level `N`
//! the induced matrix `Ā` is defined by `y^n = Σ_m Ā_nm x^m` over
//! multi-indices of total degree `N`, ordered descending lexicographically.
//! The map `A ↦ Ā` is multiplicative, and `B Ā(Aᵀ) = Āᵀ B` with `B` the
//! diagonal of multinomial coefficients.
//!
//! If `AᵀPA = D` is diagonal for the probability matrix `P`, then
//! `Φ = Āᵀ` satisfies `Φ (B P̄) Φᵀ = B D̄`: the rows of `Φ` are orthogonal
//! polynomials for the multinomial distribution `B P̄`.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::math::scalar::{int, pow};
use crate::math::{multinomial, DenseMatrix, ExactScalar};

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn exponents(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn multinomial(&self) -> ExactScalar {
        multinomial(&self.0)
    }

    /// `Π base_i^{n_i}`.
    pub fn monomial_value(&self, base: &[ExactScalar]) -> ExactScalar {
        self.0
            .iter()
            .zip(base)
            .fold(ExactScalar::one(), |acc, (&e, b)| acc * pow(b, e))
    }
}

/// All exponent vectors of length `vars` and total degree `level`, in
/// descending lexicographic order. Empty when `vars == 0` and `level > 0`.
pub fn enumerate_multiindices(vars: usize, level: usize) -> Vec<MultiIndex> {
    fn rec(vars: usize, level: usize, prefix: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
        if vars == 1 {
            prefix.push(level);
            out.push(MultiIndex(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=level).rev() {
            prefix.push(first);
            rec(vars - 1, level - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    match vars {
        0 if level == 0 => out.push(MultiIndex(Vec::new())),
        0 => {}
        _ => rec(vars, level, &mut Vec::with_capacity(vars), &mut out),
    }
    out
}

/// Diagonal matrix of multinomial coefficients `N! / Π n_i!` in the
/// canonical ordering.
pub fn multinomial_matrix(vars: usize, level: usize) -> DenseMatrix {
    let diag: Vec<ExactScalar> = enumerate_multiindices(vars, level)
        .iter()
        .map(MultiIndex::multinomial)
        .collect();
    DenseMatrix::diagonal(&diag)
}

/// Symmetric power of a base matrix at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMatrix {
    pub base: DenseMatrix,
    pub level: usize,
    pub matrix: DenseMatrix,
    pub ordering: Vec<MultiIndex>,
}

fn require_square(a: &DenseMatrix, op: &'static str) -> Result<()> {
    if !a.is_square() {
        return Err(Error::dimension(op, "square matrix", format!("{}x{}", a.rows(), a.cols())));
    }
    Ok(())
}

pub fn induced_matrix(a: &DenseMatrix, level: usize) -> Result<InducedMatrix> {
    require_square(a, "induced_matrix")?;
    let vars = a.rows();
    let ordering = enumerate_multiindices(vars, level);
    let size = ordering.len();
    let mut matrix = DenseMatrix::zeros(size, size);

    if a.is_diagonal() {
        let diag = a.diagonal_entries();
        for (i, n) in ordering.iter().enumerate() {
            matrix.set(i, i, n.monomial_value(&diag));
        }
    } else {
        let position: HashMap<&[usize], usize> =
            ordering.iter().enumerate().map(|(i, m)| (m.exponents(), i)).collect();
        for (row, n) in ordering.iter().enumerate() {
            // expand Π y_i^{n_i} one linear factor at a time
            let mut poly: HashMap<Vec<usize>, ExactScalar> = HashMap::new();
            poly.insert(vec![0; vars], ExactScalar::one());
            for (i, &e) in n.exponents().iter().enumerate() {
                for _ in 0..e {
                    let mut next: HashMap<Vec<usize>, ExactScalar> = HashMap::with_capacity(poly.len() * vars);
                    for (mono, c) in &poly {
                        for j in 0..vars {
                            let aij = a.get(i, j);
                            if aij.is_zero() {
                                continue;
                            }
                            let mut m = mono.clone();
                            m[j] += 1;
                            *next.entry(m).or_insert_with(ExactScalar::zero) += c * aij;
                        }
                    }
                    poly = next;
                }
            }
            for (mono, c) in poly {
                if !c.is_zero() {
                    matrix.set(row, position[mono.as_slice()], c);
                }
            }
        }
    }
    Ok(InducedMatrix {
        base: a.clone(),
        level,
        matrix,
        ordering,
    })
}

/// `Ā(Aᵀ) - B⁻¹ Āᵀ B`.
pub fn transpose_lemma_defect(a: &DenseMatrix, level: usize) -> Result<DenseMatrix> {
    require_square(a, "transpose_lemma_defect")?;
    let lhs = induced_matrix(&a.transpose(), level)?.matrix;
    let b = multinomial_matrix(a.rows(), level);
    let b_inv: Vec<ExactScalar> = b.diagonal_entries().iter().map(|x| x.recip()).collect();
    let abar = induced_matrix(a, level)?.matrix;
    let rhs = &(&DenseMatrix::diagonal(&b_inv) * &abar.transpose()) * &b;
    Ok(&lhs - &rhs)
}

/// Householder reflection `2 v vᵀ / vᵀv - I`.
pub fn reflection_from_vector(v: &[ExactScalar]) -> Result<DenseMatrix> {
    let norm2: ExactScalar = v.iter().map(|x| x * x).sum();
    if norm2.is_zero() {
        return Err(Error::domain("reflection vector must be nonzero"));
    }
    let n = v.len();
    let two_over = int(2) / norm2;
    let mut w = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut x = &v[i] * &v[j] * &two_over;
            if i == j {
                x -= ExactScalar::one();
            }
            w.set(i, j, x);
        }
    }
    Ok(w)
}

/// Multivariate Krawtchouk system built from `(A, P, N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultivariateKravchuk {
    pub d: usize,
    pub level: usize,
    pub a: DenseMatrix,
    pub probs: Vec<ExactScalar>,
    /// `diag(p_0, ..., p_d)`
    pub p: DenseMatrix,
    /// `AᵀPA`, diagonal
    pub dnorm: DenseMatrix,
    /// `Āᵀ`; rows are polynomial labels, columns are grid points
    pub phi: DenseMatrix,
    /// multinomial coefficients
    pub b: DenseMatrix,
    pub pbar: DenseMatrix,
    pub dbar: DenseMatrix,
    pub ordering: Vec<MultiIndex>,
}

/// Validate `AᵀPA` diagonal with positive diagonal and build Φ, B, P̄, D̄.
pub fn build_multivariate(a: &DenseMatrix, probs: &[ExactScalar], level: usize) -> Result<MultivariateKravchuk> {
    require_square(a, "build_multivariate")?;
    if probs.len() != a.rows() {
        return Err(Error::dimension("build_multivariate", format!("{} probabilities", a.rows()), probs.len()));
    }
    if let Some((i, p)) = probs.iter().enumerate().find(|(_, p)| !p.is_positive()) {
        return Err(Error::domain(format!("probability p_{i} = {p} must be positive")));
    }
    let total: ExactScalar = probs.iter().sum();
    if !total.is_one() {
        return Err(Error::domain(format!("probabilities sum to {total}, not 1")));
    }
    let p = DenseMatrix::diagonal(probs);
    let dnorm = &(&a.transpose() * &p) * a;
    if let Some((i, j)) = dnorm.first_off_diagonal() {
        return Err(Error::Construction(format!(
            "AᵀPA is not diagonal: entry ({i}, {j}) = {}",
            dnorm.get(i, j)
        )));
    }
    if let Some((i, x)) = dnorm.diagonal_entries().iter().enumerate().find(|(_, x)| !x.is_positive()) {
        return Err(Error::Construction(format!("AᵀPA has nonpositive diagonal entry ({i}, {i}) = {x}")));
    }
    let induced = induced_matrix(a, level)?;
    let vars = a.rows();
    Ok(MultivariateKravchuk {
        d: vars - 1,
        level,
        a: a.clone(),
        probs: probs.to_vec(),
        phi: induced.matrix.transpose(),
        b: multinomial_matrix(vars, level),
        pbar: induced_matrix(&p, level)?.matrix,
        dbar: induced_matrix(&dnorm, level)?.matrix,
        p,
        dnorm,
        ordering: induced.ordering,
    })
}

impl MultivariateKravchuk {
    /// `B P̄`: the multinomial distribution on the grid.
    pub fn weights(&self) -> DenseMatrix {
        &self.b * &self.pbar
    }

    /// `B D̄`: squared norms.
    pub fn norms(&self) -> DenseMatrix {
        &self.b * &self.dbar
    }

    /// `Φ (B P̄) Φᵀ - B D̄`.
    pub fn orthogonality_defect(&self) -> DenseMatrix {
        &(&(&self.phi * &self.weights()) * &self.phi.transpose()) - &self.norms()
    }

    /// `Φ⁻¹ = (B P̄) Φᵀ (B D̄)⁻¹`.
    pub fn inverse(&self) -> DenseMatrix {
        let inv: Vec<ExactScalar> = self.norms().diagonal_entries().iter().map(|x| x.recip()).collect();
        &(&self.weights() * &self.phi.transpose()) * &DenseMatrix::diagonal(&inv)
    }

    /// `Φ · data`.
    pub fn transform(&self, data: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        self.phi.mul_vec(data)
    }

    /// `dataᵀ · Φ`.
    pub fn transform_left(&self, data: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        self.phi.vec_mul(data)
    }

    pub fn inverse_transform(&self, data: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        self.inverse().mul_vec(data)
    }
}

/// Floating-point realization of `A = P^{-1/2} W D^{1/2}` for an orthogonal
/// `W`. Rejects the result unless `AᵀPA` is diagonal to within `1e-12`.
pub fn construct_from_orthogonal_f64(w: &[Vec<f64>], probs: &[f64], d: &[f64]) -> Result<Vec<Vec<f64>>> {
    const TOL: f64 = 1e-12;
    let n = probs.len();
    if w.len() != n || w.iter().any(|r| r.len() != n) || d.len() != n {
        return Err(Error::dimension("construct_from_orthogonal_f64", format!("{n}x{n} inputs"), "mismatched shapes"));
    }
    if probs.iter().chain(d).any(|&x| x.is_nan() || x <= 0.0) {
        return Err(Error::domain("probabilities and norms must be positive"));
    }
    let a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| w[i][j] * d[j].sqrt() / probs[i].sqrt()).collect())
        .collect();
    for k in 0..n {
        for l in 0..n {
            let v: f64 = (0..n).map(|i| a[i][k] * probs[i] * a[i][l]).sum();
            let target = if k == l { d[k] } else { 0.0 };
            if (v - target).abs() > TOL * (1.0 + target.abs()) {
                return Err(Error::Construction(format!(
                    "AᵀPA entry ({k}, {l}) = {v:e} deviates from {target:e}; is W orthogonal?"
                )));
            }
        }
    }
    Ok(a)
}

/// Base matrix and probabilities of the two-variable worked example.
pub fn two_variable_example() -> (DenseMatrix, Vec<ExactScalar>) {
    use crate::math::scalar::ratio;
    (
        DenseMatrix::from_int_rows(&[[1, 1, 1], [1, -1, 0], [1, 1, -2]]),
        vec![ratio(1, 3), ratio(1, 2), ratio(1, 6)],
    )
}

/// Base matrix and probabilities of the three-variable worked example.
pub fn three_variable_example() -> (DenseMatrix, Vec<ExactScalar>) {
    use crate::math::scalar::ratio;
    (
        DenseMatrix::from_int_rows(&[[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]),
        vec![ratio(1, 4); 4],
    )
}
