use multest_algebra::{parse_x, Ideal, Polynomial};

fn p(s: &str, n: usize) -> Polynomial {
    parse_x(s, n).unwrap()
}

fn ideal(gens: &[&str], n: usize) -> Ideal {
    Ideal::new(n, gens.iter().map(|g| p(g, n))).unwrap()
}

#[test]
fn groebner_of_two_linear_forms() {
    let i = ideal(&["x1 - x0", "x1 + x0"], 2);
    let gb = i.groebner().unwrap();
    let expect = vec![p("x0", 2), p("x1", 2)];
    let mut got = gb.polys().to_vec();
    got.sort();
    let mut e = expect.clone();
    e.sort();
    assert_eq!(got, e);
}

#[test]
fn groebner_of_zero_ideal_is_empty() {
    assert!(Ideal::zero(3).groebner().unwrap().is_empty());
}

#[test]
fn principal_basis_is_monic_generator() {
    let i = ideal(&["3*x1^2 - 6*x0*x1"], 2);
    assert_eq!(i.groebner().unwrap().polys(), &[p("x1^2 - 2*x0*x1", 2)]);
}

#[test]
fn membership_examples() {
    assert!(ideal(&["x0", "x1"], 2).contains(&p("x0 + x1", 2)).unwrap());
    assert!(!ideal(&["x0^2"], 2).contains(&p("x0", 2)).unwrap());
    assert!(ideal(&["x0", "x1"], 2)
        .equals(&ideal(&["x1 - x0", "x1 + x0"], 2))
        .unwrap());
}

#[test]
fn intersect_quotient_saturate_examples() {
    let a = ideal(&["x0"], 2);
    let b = ideal(&["x1"], 2);
    assert!(a.intersect(&b).unwrap().equals(&ideal(&["x0*x1"], 2)).unwrap());
    let c = ideal(&["x0^2*x1"], 2);
    assert!(c.quotient(&a).unwrap().equals(&ideal(&["x0*x1"], 2)).unwrap());
    assert!(c.saturate(&a).unwrap().equals(&ideal(&["x1"], 2)).unwrap());
    assert!(c.saturate_iterated(&a).unwrap().equals(&ideal(&["x1"], 2)).unwrap());
}

#[test]
fn elimination_examples() {
    // t is x2
    let i = ideal(&["x1 - x2*x0", "x2 - 2"], 3);
    assert!(i.eliminate(&[2]).unwrap().equals(&ideal(&["x1 - 2*x0"], 3)).unwrap());
    assert!(i.eliminate(&[]).unwrap().equals(&i).unwrap());
    let j = ideal(&["x2*x0 - 1"], 3);
    assert!(j.eliminate(&[2]).unwrap().is_zero());
}

#[test]
fn dim_degree_examples() {
    let h = Ideal::zero(2).dim_degree().unwrap();
    assert_eq!((h.dim, h.degree), (1, 1));
    let h = ideal(&["x0*x1"], 2).dim_degree().unwrap();
    assert_eq!((h.dim, h.degree), (0, 2));
    let h = ideal(&["(x1 - x0)^2"], 2).dim_degree().unwrap();
    assert_eq!((h.dim, h.degree), (0, 2));
}

#[test]
fn zero_set_empty_examples() {
    assert!(ideal(&["x0", "x1"], 2).zero_set_empty().unwrap());
    assert!(!ideal(&["x0*x1"], 2).zero_set_empty().unwrap());
    assert!(ideal(&["x0^2", "x0*x1", "x1^3"], 2).zero_set_empty().unwrap());
}

#[test]
fn saturation_by_irrelevant_examples() {
    assert!(ideal(&["x0", "x1"], 2).saturate_irrelevant().unwrap().is_unit().unwrap());
    let i = ideal(&["x0^2*x1"], 2);
    assert!(i.saturate_irrelevant().unwrap().equals(&i).unwrap());
    let j = ideal(&["(x1 - x0)^2", "x1*(x1 - x0)"], 2);
    assert!(j
        .saturate_irrelevant()
        .unwrap()
        .equals(&ideal(&["x1 - x0"], 2))
        .unwrap());
}
