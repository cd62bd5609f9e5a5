mod common;

use common::*;
use krawtchouk::math::scalar::{int, ratio};
use krawtchouk::multivariate::{build_multivariate, three_variable_example, two_variable_example};
use krawtchouk::operator::dhat;
use krawtchouk::univariate::kravchuk_matrix;
use krawtchouk::DenseMatrix;

// The displays are polynomials in p of degree <= 4, so agreement at five
// distinct p values pins them as polynomial identities.
const SAMPLES: [(i64, i64); 5] = [(1, 3), (2, 5), (1, 2), (3, 4), (1, 7)];

#[test]
fn phi_and_q_for_level_four() {
    for (a, b) in SAMPLES {
        let p = ratio(a, b);
        let basis = kravchuk_matrix(4, &p).unwrap();
        assert_eq!(*basis.phi(), phi4_display(&p), "p = {p}");
        let q = basis.inverse().scale(&int(16));
        assert_eq!(q, q4_display(&p), "p = {p}");
        let sixteen = DenseMatrix::identity(5).scale(&int(16));
        assert_eq!(&q * basis.phi(), sixteen);
        assert_eq!(basis.phi() * &q, sixteen);
    }
}

#[test]
fn differentiation_operator_functions() {
    let d = dhat(4);
    for (a, b) in SAMPLES {
        let p = ratio(a, b);
        assert_eq!(d.step_operator(&p), step_operator4_display(&p), "p = {p}");
    }
    assert_eq!(d.sinh(), sinh4_display());
}

#[test]
fn induced_matrix_examples() {
    let (a, p) = two_variable_example();
    let mk = build_multivariate(&a, &p, 2).unwrap();
    assert_eq!(mk.phi, two_variable_phi_display());
    assert_eq!(mk.dnorm, DenseMatrix::identity(3));

    let (a, p) = three_variable_example();
    let mk = build_multivariate(&a, &p, 2).unwrap();
    assert_eq!(mk.phi, three_variable_phi_display());
    assert_eq!(&a * &a, DenseMatrix::identity(4).scale(&int(4)));
    assert_eq!(&mk.phi * &mk.phi, DenseMatrix::identity(10).scale(&int(16)));
    assert!(mk.orthogonality_defect().is_zero());
}

#[test]
fn multivariate_transform_row_sums() {
    let (a, p) = three_variable_example();
    let mk = build_multivariate(&a, &p, 2).unwrap();
    let ones = vec![int(1); 10];
    let sums: Vec<_> = (0..10).map(|i| mk.phi.row(i).iter().sum()).collect();
    assert_eq!(mk.transform(&ones).unwrap(), sums);
}
