mod common;

use adjinv::exactmat::conjugate;
use adjinv::{DualRational, Matrix, Rational, Scalar};
use common::*;
use proptest::prelude::*;

#[test]
fn frozen_four_by_four_determinant() {
    // Laplace expansion, evaluated independently.
    let m = Matrix::from_rows(vec![
        vec![q("1/2"), q("-3"), q("2/7"), q("1")],
        vec![q("5"), q("-1/4"), q("0"), q("2")],
        vec![q("3/5"), q("1"), q("-2"), q("1/3")],
        vec![q("-1"), q("4"), q("5/6"), q("-3")],
    ])
    .unwrap();
    assert_eq!(m.det().unwrap(), q("185509/5040"));
    assert_eq!(cofactor_det(&rows(&m)), q("185509/5040"));
}

proptest! {
    #[test]
    fn reciprocal_is_exact(a in nonzero_rational()) {
        prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
    }

    #[test]
    fn text_form_is_canonical(p in -1000i64..1000, d in 1i64..1000) {
        let r = Rational::new(p, d).unwrap();
        let back: Rational = r.to_string().parse().unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(back.to_string(), r.to_string());
        let scaled = Rational::new(p * 7, d * 7).unwrap();
        prop_assert_eq!(scaled.to_string(), r.to_string());
    }

    #[test]
    fn dual_derivative_of_cube(x in rational()) {
        let v = DualRational::variable(x.clone());
        let cube = v.clone() * v.clone() * v;
        prop_assert_eq!(cube.value, &(&x * &x) * &x);
        prop_assert_eq!(cube.deriv, Rational::from(3) * &x * &x);
    }

    #[test]
    fn bareiss_matches_cofactor_oracle(m in sized_square(5)) {
        prop_assert_eq!(m.det().unwrap(), cofactor_det(&rows(&m)));
    }

    #[test]
    fn adjugate_matches_cofactor_oracle(m in sized_square(4)) {
        prop_assert_eq!(rows(&m.adjugate().unwrap()), cofactor_adjugate(&rows(&m)));
    }

    #[test]
    fn determinant_is_multiplicative(a in square(4), b in square(4)) {
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn adjugate_identity(m in sized_square(5)) {
        let n = m.rows();
        let adj = m.adjugate().unwrap();
        let scalar = Matrix::identity(n).scale(&m.det().unwrap());
        prop_assert_eq!(m.mul(&adj).unwrap(), scalar.clone());
        prop_assert_eq!(adj.mul(&m).unwrap(), scalar);
    }

    #[test]
    fn adjugate_equivariance(g in square(3), x in square(3)) {
        prop_assume!(!g.det().unwrap().is_zero());
        let lhs = conjugate(&g, &x).unwrap().adjugate().unwrap();
        let rhs = conjugate(&g, &x.adjugate().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugation_round_trip(g in square(3), x in square(3)) {
        prop_assume!(!g.det().unwrap().is_zero());
        let inv = g.inverse().unwrap();
        prop_assert_eq!(conjugate(&g, &conjugate(&inv, &x).unwrap()).unwrap(), x);
    }

    #[test]
    fn rank_of_transpose(m in proptest::collection::vec(rational(), 12)) {
        let m = Matrix::new(3, 4, m).unwrap();
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn dual_determinant_value_part(m in sized_square(4)) {
        let dual = Matrix::<DualRational>::lift(&m);
        let d = dual.det().unwrap();
        prop_assert_eq!(d.value(), &m.det().unwrap());
        prop_assert!(d.deriv.is_zero());
    }
}

#[test]
fn low_rank_products() {
    let a = Matrix::from_rows(vec![
        vec![q("1"), q("2")],
        vec![q("0"), q("1/2")],
        vec![q("3"), q("-1")],
    ])
    .unwrap();
    let b = Matrix::from_rows(vec![vec![q("1"), q("1"), q("1")], vec![q("2"), q("0"), q("-5")]]).unwrap();
    let p = a.mul(&b).unwrap();
    assert_eq!(p.rank(), 2);
    assert!(p.det().unwrap().is_zero());
}
