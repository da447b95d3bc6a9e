use multest_algebra::scalar::{frac, int};
use multest_algebra::{bi_names, parse_polynomial, parse_x, AlgebraError, BiPolynomial, Polynomial, ProjectivePoint};

fn x(s: &str, n: usize) -> Polynomial {
    parse_x(s, n).unwrap()
}

fn bi(s: &str, half: usize) -> BiPolynomial {
    BiPolynomial::from_inner(half, parse_polynomial(s, &bi_names(half)).unwrap()).unwrap()
}

#[test]
fn square_of_difference() {
    let a = x("x1 - x0", 2);
    assert_eq!(&a * &a, x("x1^2 - 2*x0*x1 + x0^2", 2));
    assert_eq!((&a * &a).to_string(), "x1^2 - 2*x0*x1 + x0^2");
}

#[test]
fn adding_zero_is_identity() {
    let p = x("3*x0*x1 - 1/2*x1^2", 2);
    assert_eq!(&p + &Polynomial::zero(2), p);
}

#[test]
fn cube_of_difference() {
    assert_eq!(
        x("x1 - x0", 2).pow(3),
        x("x1^3 - 3*x0*x1^2 + 3*x0^2*x1 - x0^3", 2)
    );
}

#[test]
fn mismatched_arity_is_a_dimension_error() {
    let err = x("x0", 2).try_add(&x("x0", 3)).unwrap_err();
    assert!(matches!(err, AlgebraError::Dimension { .. }));
}

#[test]
fn product_of_homogeneous_is_homogeneous() {
    let p = &x("x0^2 + x0*x1", 2) * &x("x1^3 - x0^3", 2);
    assert!(p.is_homogeneous());
    assert_eq!(p.degree(), Some(5));
}

#[test]
fn substitute_into_y_polynomial() {
    // P = (y1 - y0)^2 with y0 -> x0*y0, y1 -> x1*y1
    let p = x("(x1 - x0)^2", 2);
    let images = [bi("x0*y0", 2).inner().clone(), bi("x1*y1", 2).inner().clone()];
    let out = p.substitute(&images).unwrap();
    assert_eq!(out, bi("(x1*y1 - x0*y0)^2", 2).inner().clone());
}

#[test]
fn substitute_identity_and_linear() {
    let p = x("x1 - x0", 2);
    let id = [x("x0", 2), x("x1", 2)];
    assert_eq!(p.substitute(&id).unwrap(), p);
    let s = [x("x0", 2), x("2*x1", 2)];
    assert_eq!(p.substitute(&s).unwrap(), x("2*x1 - x0", 2));
    assert!(matches!(
        p.substitute(&[x("x0", 2)]),
        Err(AlgebraError::Dimension { .. })
    ));
}

#[test]
fn substitution_multiplies_degrees() {
    let p = x("x0^2*x1 + x1^3", 2);
    let s = [x("x0^2 - x1^2", 2), x("x0*x1", 2)];
    let out = p.substitute(&s).unwrap();
    assert!(out.is_homogeneous());
    assert_eq!(out.degree(), Some(6));
}

#[test]
fn partial_derivative_examples() {
    let f = bi("(x1*y1 - x0*y0)^2", 2);
    assert_eq!(f.partial_y(1), bi("2*x1*(x1*y1 - x0*y0)", 2));
    assert!(Polynomial::constant(2, int(5)).partial_derivative(0).is_zero());
    assert_eq!(x("x0*x1^2", 2).partial_derivative(1), x("2*x0*x1", 2));
}

#[test]
fn dehomogenize_and_homogenize() {
    assert_eq!(x("x0^2*x1", 2).dehomogenize(0), x("x1", 2));
    assert_eq!(x("x1", 2).homogenize(0, 2).unwrap(), x("x0*x1", 2));
    let r = x("x1^2 - x0*x1", 2);
    let d = r.dehomogenize(1);
    assert_eq!(d.homogenize(1, 2).unwrap(), r);
    assert!(matches!(
        x("x1^3", 2).homogenize(0, 2),
        Err(AlgebraError::Degree(_))
    ));
}

#[test]
fn evaluation_examples() {
    let f = x("x1 - x0", 2);
    assert_eq!(f.evaluate(&[int(1), int(1)]).unwrap(), int(0));
    assert_eq!(f.evaluate(&[int(1), int(2)]).unwrap(), int(1));
    let g = bi("x1*y1 - x0*y0", 2);
    assert_eq!(g.evaluate(&[int(1), int(2)], &[int(1), int(1)]).unwrap(), int(1));
}

#[test]
fn projective_point_normalizes() {
    let p = ProjectivePoint::new(vec![int(0), int(3), int(6)]).unwrap();
    assert_eq!(p.coords(), &[int(0), int(1), int(2)]);
    assert_eq!(p.chart_index(), 1);
    assert!(ProjectivePoint::new(vec![int(0), int(0)]).is_err());
    let q = ProjectivePoint::new(vec![int(2), int(1)]).unwrap();
    assert_eq!(q.coords(), &[int(1), frac(1, 2)]);
}

#[test]
fn parser_round_trip() {
    let p = x("2*x1^2 - 1/3*x0*x1", 2);
    assert_eq!(x(&p.to_string(), 2), p);
    assert!(parse_x("x0 + x7", 2).is_err());
    assert!(parse_x("x0 +", 2).is_err());
}

#[test]
fn bidegree_checks() {
    assert_eq!(bi("x0*y0 - x1*y1", 2).bidegree(), Some((1, 1)));
    assert_eq!(bi("x0*y0 - x1", 2).bidegree(), None);
}
