//! Truncated formal power series with exact coefficients.

use num_traits::{One, Zero};

use super::combinat::factorial;
use super::scalar::{int, pow, ExactScalar};
use crate::error::{Error, Result};

/// `Σ_{k ≤ order} c_k t^k`, with all arithmetic truncated at `order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<ExactScalar>,
}

impl TruncatedSeries {
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn new(order: usize, mut coeffs: Vec<ExactScalar>) -> Self {
        coeffs.resize(order + 1, ExactScalar::zero());
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn constant(order: usize, c: ExactScalar) -> Self {
        Self::new(order, vec![c])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, ExactScalar::one())
    }

    /// The formal variable itself.
    pub fn variable(order: usize) -> Self {
        Self::new(order, vec![ExactScalar::zero(), ExactScalar::one()])
    }

    /// `exp(a·t)`.
    pub fn exp_scaled(order: usize, a: &ExactScalar) -> Self {
        let coeffs = (0..=order)
            .map(|k| pow(a, k) / ExactScalar::from_integer(factorial(k)))
            .collect();
        Self::new(order, coeffs)
    }

    pub fn sinh(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| {
                if k % 2 == 1 {
                    ExactScalar::from_integer(factorial(k)).recip()
                } else {
                    ExactScalar::zero()
                }
            })
            .collect();
        Self::new(order, coeffs)
    }

    pub fn cosh(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| {
                if k % 2 == 0 {
                    ExactScalar::from_integer(factorial(k)).recip()
                } else {
                    ExactScalar::zero()
                }
            })
            .collect();
        Self::new(order, coeffs)
    }

    /// `c0 + c1·t`, truncated.
    pub fn linear(order: usize, c0: ExactScalar, c1: ExactScalar) -> Self {
        Self::new(order, vec![c0, c1])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> ExactScalar {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-truncate at a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order.min(self.order), self.coeffs.clone())
    }

    fn common_order(&self, rhs: &Self) -> usize {
        self.order.min(rhs.order)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.common_order(rhs);
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect();
        Self::new(order, coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.common_order(rhs);
        let coeffs = (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect();
        Self::new(order, coeffs)
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.common_order(rhs);
        let mut out = vec![ExactScalar::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(order, out)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut result = Self::one(self.order);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::domain("series reciprocal needs a nonzero constant term"));
        }
        let inv0 = c0.recip();
        let mut out = vec![inv0.clone()];
        for n in 1..=self.order {
            let s: ExactScalar = (1..=n).map(|k| &self.coeffs[k] * &out[n - k]).sum();
            out.push(-s * &inv0);
        }
        Ok(Self::new(self.order, out))
    }

    /// `self(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::domain("series composition needs an inner series with zero constant term"));
        }
        let order = self.common_order(inner);
        // Horner: c_0 + g(c_1 + g(c_2 + ...))
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `exp(self)`; needs zero constant term to stay rational.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("series exp needs zero constant term"));
        }
        // g' = f' g  =>  n g_n = Σ_{k=1}^{n} k f_k g_{n-k}
        let mut g = vec![ExactScalar::one()];
        for n in 1..=self.order {
            let s: ExactScalar = (1..=n)
                .map(|k| int(k as i64) * &self.coeffs[k] * &g[n - k])
                .sum();
            g.push(s / int(n as i64));
        }
        Ok(Self::new(self.order, g))
    }

    /// `log(self)`; needs constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::domain("series log needs constant term 1"));
        }
        // h' = f'/f
        let deriv = self.derivative();
        let q = deriv.mul(&self.recip()?);
        let mut h = vec![ExactScalar::zero()];
        for n in 1..=self.order {
            h.push(q.coefficient(n - 1) / int(n as i64));
        }
        Ok(Self::new(self.order, h))
    }

    /// Formal derivative; the top coefficient becomes zero.
    pub fn derivative(&self) -> Self {
        let coeffs = (1..=self.order).map(|k| int(k as i64) * &self.coeffs[k]).collect();
        Self::new(self.order, coeffs)
    }
}
