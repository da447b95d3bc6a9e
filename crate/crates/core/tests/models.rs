use multest::model::*;
use multest_algebra::scalar::int;
use multest_algebra::{parse_polynomial, Polynomial, ProjectivePoint};

#[test]
fn gm_embedding_and_tables() {
    let g = make_gm();
    assert_eq!(g.big_n(), 1);
    assert!(g.ig().generators().is_empty());
    assert_eq!((g.c5(), g.c6(), g.c7(), g.deg_g()), (1, 2, 1, 1));
    let two = g.point_from_ints(&[2]).unwrap();
    assert_eq!(two.projective(), &ProjectivePoint::from_ints(&[1, 2]).unwrap());
    let names = g.names();
    let p = |s: &str| parse_polynomial(s, &names).unwrap();
    assert_eq!(g.q(0, 0, 1), &p("x0*x1"));
    assert_eq!(g.q(0, 0, 0), &Polynomial::zero(2));
    assert_eq!(g.q(0, 1, 0), &p("-x0*x1"));
    assert_eq!(g.q(0, 1, 1), &Polynomial::zero(2));
    let chart = &g.charts(Side::Left)[0];
    let v = chart.at_x(two.projective().coords()).unwrap();
    assert_eq!(v, vec![p("x0"), p("2*x1")]);
    model_validate(&g).unwrap();
}

#[test]
fn gm_arithmetic() {
    let g = make_gm();
    let a = g.point_from_ints(&[2]).unwrap();
    let b = g.point_from_ints(&[3]).unwrap();
    assert_eq!(g.params_of(&g.mul(&a, &b)), vec![int(6)]);
    assert_eq!(g.params_of(&g.inv(&a).unwrap()), vec![multest_algebra::scalar::frac(1, 2)]);
    assert_eq!(g.identity().chart_index(), 0);
    assert!(g.point_from_ints(&[0]).is_err());
}

#[test]
fn borel_model() {
    let b = make_borel2();
    assert_eq!((b.n(), b.big_n()), (3, 4));
    assert_eq!(b.ig().generators().len(), 1);
    assert_eq!(b.deg_g(), 1);
    assert!(b.identity().projective().coords().iter().all(|c| c != &int(0)));
    let names = b.names();
    assert_eq!(b.ig().generators()[0], parse_polynomial("x3 - x0", &names).unwrap());
    model_validate(&b).unwrap();
    let lie = b.lie();
    let br = lie.bracket(&[int(1), int(0), int(0)], &[int(0), int(1), int(0)]);
    assert!(br.iter().any(|c| c != &int(0)));
}

#[test]
fn gl2_model() {
    let g = make_gl2();
    assert!(g.ig().generators().is_empty());
    assert_eq!(g.deg_g(), 1);
    model_validate(&g).unwrap();
}

#[test]
fn corrupted_table_fails_check_b() {
    let text = r#"
name = "gm-bad"
m = 1
params = ["t"]
entries = ["t"]
[[lie_basis]]
name = "d"
matrix = [["1"]]
[[q_override]]
j = 0
k = 0
l = 1
poly = "-x0*x1"
"#;
    match custom::load_custom_model(text) {
        Err(multest::Error::Validation { check, .. }) => assert_eq!(check, "b"),
        other => panic!("unexpected {other:?}"),
    }
}
