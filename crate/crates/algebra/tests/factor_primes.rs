use multest_algebra::scalar::int;
use multest_algebra::{factor, local_length, minimal_primes, parse_x, rational_roots, Ideal, Polynomial, ProjectivePoint};

fn x(s: &str, n: usize) -> Polynomial {
    parse_x(s, n).unwrap()
}

fn ideal(gens: &[&str], n: usize) -> Ideal {
    Ideal::new(n, gens.iter().map(|g| x(g, n))).unwrap()
}

#[test]
fn roots_of_univariate() {
    // 2t^2 - 3t + 1 = (2t - 1)(t - 1)
    let r = rational_roots(&[int(1), int(-3), int(2)]).unwrap();
    assert_eq!(r, vec![multest_algebra::scalar::frac(1, 2), int(1)]);
    assert!(rational_roots(&[int(1), int(0), int(1)]).unwrap().is_empty());
}

#[test]
fn factor_binary_form() {
    let f = x("(x1 - x0)^3*(x1 + 2*x0)*x0", 2);
    let fac = factor(&f).unwrap();
    assert!(fac.certified);
    assert_eq!(fac.product(2), f);
    let mults: Vec<u32> = fac.factors.iter().map(|(_, m)| *m).collect();
    assert_eq!(mults.iter().sum::<u32>(), 5);
}

#[test]
fn factor_without_pure_power() {
    let f = x("x0*x1 - x1*x2 + x0*x2 - x2^2", 3);
    // (x0 - x2)(x1 + x2)
    let fac = factor(&f).unwrap();
    assert_eq!(fac.factors.len(), 2);
    assert_eq!(fac.product(3), f);
}

#[test]
fn irreducible_quadric_kept() {
    let f = x("x0*x2 - x1^2", 3);
    let fac = factor(&f).unwrap();
    assert!(fac.is_irreducible());
}

#[test]
fn minimal_primes_examples() {
    let p = minimal_primes(&ideal(&["x0*x1"], 2)).unwrap();
    assert_eq!(p.len(), 2);
    assert!(p.iter().all(|c| c.certified));
    assert!(p.iter().any(|c| c.ideal.equals(&ideal(&["x0"], 2)).unwrap()));
    assert!(p.iter().any(|c| c.ideal.equals(&ideal(&["x1"], 2)).unwrap()));

    let p = minimal_primes(&ideal(&["(x1 - x0)^2"], 2)).unwrap();
    assert_eq!(p.len(), 1);
    assert!(p[0].ideal.equals(&ideal(&["x1 - x0"], 2)).unwrap());

    let p = minimal_primes(&ideal(&["(x1 - x0)*(x1 - 2*x0)", "x2"], 3)).unwrap();
    assert_eq!(p.len(), 2);
    assert!(p.iter().any(|c| c.ideal.equals(&ideal(&["x1 - x0", "x2"], 3)).unwrap()));
    assert!(p.iter().any(|c| c.ideal.equals(&ideal(&["x1 - 2*x0", "x2"], 3)).unwrap()));
}

#[test]
fn minimal_primes_zero_dimensional_fallback() {
    // two points [1:1:1] and [1:2:4] on a conic, no generator factors
    let i = ideal(&["x0*x2 - x1^2", "x2 - 3*x1 + 2*x0"], 3);
    let p = minimal_primes(&i).unwrap();
    assert_eq!(p.len(), 2);
    assert!(p.iter().all(|c| c.certified));
    for c in &p {
        assert!(i.is_subset_of(&c.ideal).unwrap());
        assert_eq!(c.ideal.dim_degree().unwrap().dim, 0);
    }
}

#[test]
fn irrational_points_are_flagged() {
    let p = minimal_primes(&ideal(&["x1^2 - 2*x0^2"], 2)).unwrap();
    assert_eq!(p.len(), 1);
    assert!(!p[0].certified);
}

#[test]
fn local_length_of_fat_point() {
    let i = ideal(&["(x1 - x0)^4"], 2);
    let z = ProjectivePoint::from_ints(&[1, 1]).unwrap();
    assert_eq!(local_length(&i, &z).unwrap(), 4);
    let off = ProjectivePoint::from_ints(&[1, 2]).unwrap();
    assert_eq!(local_length(&i, &off).unwrap(), 0);
    let j = ideal(&["x1^2", "x2^3"], 3);
    let o = ProjectivePoint::from_ints(&[1, 0, 0]).unwrap();
    assert_eq!(local_length(&j, &o).unwrap(), 6);
}
