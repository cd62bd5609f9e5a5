//! Worked-example matrices transcribed entry by entry, used as golden values.
#![allow(dead_code)]

use krawtchouk::math::scalar::{int, ratio};
use krawtchouk::{DenseMatrix, ExactScalar};

fn m(rows: Vec<Vec<ExactScalar>>) -> DenseMatrix {
    DenseMatrix::from_rows(rows).unwrap()
}

/// The N = 4 Kravchuk matrix, written symbolically in p and q.
pub fn phi4_display(p: &ExactScalar) -> DenseMatrix {
    let q = &(int(1) - p);
    let c = |k: i64| int(k);
    m(vec![
        vec![c(1), c(1), c(1), c(1), c(1)],
        vec![c(8) * q, c(6) * q - c(2) * p, c(4) * q - c(4) * p, c(2) * q - c(6) * p, c(-8) * p],
        vec![
            c(24) * q * q,
            c(12) * q * q - c(12) * p * q,
            c(4) * q * q - c(16) * p * q + c(4) * p * p,
            c(-12) * p * q + c(12) * p * p,
            c(24) * p * p,
        ],
        vec![
            c(32) * q * q * q,
            c(8) * q * q * q - c(24) * p * q * q,
            c(-16) * p * q * q + c(16) * p * p * q,
            c(24) * p * p * q - c(8) * p * p * p,
            c(-32) * p * p * p,
        ],
        vec![
            c(16) * q * q * q * q,
            c(-16) * p * q * q * q,
            c(16) * p * p * q * q,
            c(-16) * p * p * p * q,
            c(16) * p * p * p * p,
        ],
    ])
}

/// `Q = 2⁴ Φ⁻¹` for N = 4, written symbolically in p and q.
pub fn q4_display(p: &ExactScalar) -> DenseMatrix {
    let q = &(int(1) - p);
    let c = |k: i64| int(k);
    m(vec![
        vec![c(16) * p * p * p * p, c(8) * p * p * p, c(4) * p * p, c(2) * p, c(1)],
        vec![
            c(64) * p * p * p * q,
            c(8) * p * p * (c(3) * q - p),
            c(8) * p * (q - p),
            c(2) * q - c(6) * p,
            c(-4),
        ],
        vec![
            c(96) * p * p * q * q,
            c(24) * q * p * (q - p),
            c(4) * q * q - c(16) * p * q + c(4) * p * p,
            c(-6) * q + c(6) * p,
            c(6),
        ],
        vec![
            c(64) * p * q * q * q,
            c(8) * q * q * (q - c(3) * p),
            c(-8) * q * (q - p),
            c(6) * q - c(2) * p,
            c(-4),
        ],
        vec![c(16) * q * q * q * q, c(-8) * q * q * q, c(4) * q * q, c(-2) * q, c(1)],
    ])
}

/// `p e^D̂ + q e^-D̂` for N = 4 after substituting q = 1 - p.
pub fn step_operator4_display(p: &ExactScalar) -> DenseMatrix {
    let c = |k: i64| int(k);
    let lin = |a: i64, b: i64| c(a) * p + c(b);
    m(vec![
        vec![c(1), lin(2, -1), c(1), lin(2, -1), c(1)],
        vec![c(0), c(1), lin(4, -2), c(3), lin(8, -4)],
        vec![c(0), c(0), c(1), lin(6, -3), c(6)],
        vec![c(0), c(0), c(0), c(1), lin(8, -4)],
        vec![c(0), c(0), c(0), c(0), c(1)],
    ])
}

pub fn sinh4_display() -> DenseMatrix {
    DenseMatrix::from_int_rows(&[
        [0, 1, 0, 1, 0],
        [0, 0, 2, 0, 4],
        [0, 0, 0, 3, 0],
        [0, 0, 0, 0, 4],
        [0, 0, 0, 0, 0],
    ])
}

pub fn two_variable_phi_display() -> DenseMatrix {
    DenseMatrix::from_int_rows(&[
        [1, 1, 1, 1, 1, 1],
        [2, 0, 2, -2, 0, 2],
        [2, 1, -1, 0, -2, -4],
        [1, -1, 1, 1, -1, 1],
        [2, -1, -1, 0, 2, -4],
        [1, 0, -2, 0, 0, 4],
    ])
}

pub fn three_variable_phi_display() -> DenseMatrix {
    DenseMatrix::from_int_rows(&[
        [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        [2, 2, 0, 0, 2, 0, 0, -2, -2, -2],
        [2, 0, 2, 0, -2, 0, -2, 2, 0, -2],
        [2, 0, 0, 2, -2, -2, 0, -2, 0, 2],
        [1, 1, -1, -1, 1, -1, -1, 1, 1, 1],
        [2, 0, 0, -2, -2, 2, 0, -2, 0, 2],
        [2, 0, -2, 0, -2, 0, 2, 2, 0, -2],
        [1, -1, 1, -1, 1, -1, 1, 1, -1, 1],
        [2, -2, 0, 0, 2, 0, 0, -2, 2, -2],
        [1, -1, -1, 1, 1, 1, -1, 1, -1, 1],
    ])
}

pub fn sample_probabilities() -> Vec<ExactScalar> {
    vec![ratio(1, 2), ratio(1, 3), ratio(2, 5), ratio(3, 4)]
}
