use multest_algebra::scalar::frac;
use multest_algebra::{Ideal, Matrix, Monomial, Polynomial, Scalar};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, nvars), scalar()),
        0..=max_terms,
    )
    .prop_map(move |ts| {
        Polynomial::from_terms(nvars, ts.into_iter().map(|(e, c)| (Monomial::new(&e), c)))
    })
}

fn homogeneous(nvars: usize, deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    poly(nvars, deg, max_terms).prop_map(move |p| {
        // keep only the degree-`deg` part, shifting the rest up with x0
        let mut out = Polynomial::zero(nvars);
        for (m, c) in p.terms() {
            if m.degree() <= deg {
                let mut e = m.exps().to_vec();
                e[0] += deg - m.degree();
                out = &out + &Polynomial::term(Monomial::new(&e), c.clone());
            }
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distributive(a in poly(3, 3, 5), b in poly(3, 3, 5), c in poly(3, 2, 4)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn canonical_form(a in poly(3, 3, 6), b in poly(3, 3, 6)) {
        // a + b - b has the same representation as a
        let r = &(&a + &b) - &b;
        prop_assert_eq!(format!("{:?}", r), format!("{:?}", a));
    }

    #[test]
    fn homogeneity_preserved(a in homogeneous(3, 2, 4), b in homogeneous(3, 3, 4)) {
        let p = &a * &b;
        prop_assert!(p.is_homogeneous());
        let s = a.substitute(&[b.clone(), b.clone(), b.clone()]).unwrap();
        prop_assert!(s.is_homogeneous());
    }

    #[test]
    fn homogenize_round_trip(a in poly(3, 3, 5), k in 0usize..3, extra in 0u32..3) {
        let r = a.dehomogenize(k);
        let d = r.degree().unwrap_or(0) + extra;
        let h = r.homogenize(k, d).unwrap();
        prop_assert!(h.is_homogeneous());
        prop_assert_eq!(h.dehomogenize(k), r);
    }

    #[test]
    fn leibniz(a in poly(3, 3, 4), b in poly(3, 3, 4), v in 0usize..3) {
        let lhs = (&a * &b).partial_derivative(v);
        let rhs = &(&a.partial_derivative(v) * &b) + &(&a * &b.partial_derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn generators_reduce_to_zero(gens in prop::collection::vec(homogeneous(3, 2, 3), 1..4)) {
        let i = Ideal::new(3, gens.clone()).unwrap();
        for g in &gens {
            prop_assert!(i.contains(g).unwrap());
        }
        // combinations too
        if gens.len() >= 2 {
            let f = &(&gens[0] * &Polynomial::var(3, 1)) + &gens[1].pow(2);
            prop_assert!(i.contains(&f).unwrap());
        }
    }

    #[test]
    fn linear_ideals_match_rank(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..4)) {
        let gens: Vec<Polynomial> = rows
            .iter()
            .map(|r| Polynomial::linear(&r.iter().map(|&v| frac(v, 1)).collect::<Vec<_>>()))
            .collect();
        let rank = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| frac(v, 1)).collect()).collect()).rank();
        let i = Ideal::new(4, gens).unwrap();
        let gb = i.groebner().unwrap();
        prop_assert_eq!(gb.len(), rank);
        let h = i.dim_degree().unwrap();
        prop_assert_eq!(h.dim, 3 - rank as i64);
    }

    #[test]
    fn intersection_contained_in_both(a in homogeneous(2, 2, 3), b in homogeneous(2, 1, 2)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let i = Ideal::principal(a.clone());
        let j = Ideal::new(2, [b.clone(), Polynomial::var(2, 0).pow(3)]).unwrap();
        let k = i.intersect(&j).unwrap();
        prop_assert!(k.is_subset_of(&i).unwrap());
        prop_assert!(k.is_subset_of(&j).unwrap());
        prop_assert!(i.product(&j).unwrap().is_subset_of(&k).unwrap());
        // (I ∩ J) : J ⊇ I
        prop_assert!(i.is_subset_of(&k.quotient(&j).unwrap()).unwrap());
    }

    #[test]
    fn saturation_idempotent(a in homogeneous(3, 2, 3), b in homogeneous(3, 3, 3)) {
        let i = Ideal::new(3, [a, b]).unwrap();
        let x0 = Ideal::principal(Polynomial::var(3, 0));
        let s = i.saturate(&x0).unwrap();
        prop_assert!(i.is_subset_of(&s).unwrap());
        prop_assert!(s.saturate(&x0).unwrap().equals(&s).unwrap());
        prop_assert!(i.quotient(&x0).unwrap().is_subset_of(&s).unwrap());
    }

    #[test]
    fn distinct_linear_forms_degree(roots in prop::collection::btree_set(-6i64..=6, 1..5)) {
        let mut f = Polynomial::one(2);
        for r in &roots {
            f = &f * &Polynomial::linear(&[frac(-*r, 1), frac(1, 1)]);
        }
        let h = Ideal::principal(f).dim_degree().unwrap();
        prop_assert_eq!(h.dim, 0);
        prop_assert_eq!(h.degree, roots.len() as u64);
    }

    #[test]
    fn saturation_agrees_with_iterated_quotients(a in homogeneous(2, 3, 3), e in 1u32..3) {
        prop_assume!(!a.is_zero());
        let i = Ideal::new(2, [&a * &Polynomial::var(2, 0).pow(e)]).unwrap();
        let m = Ideal::irrelevant(2);
        let fast = i.saturate_irrelevant().unwrap();
        let slow = i.saturate_iterated(&m).unwrap();
        prop_assert!(fast.equals(&slow).unwrap());
    }
}

#[test]
fn dimension_drops_by_one_for_nonzerodivisor() {
    let x = |s: &str| multest_algebra::parse_x(s, 4).unwrap();
    let i = Ideal::new(4, [x("x0*x3 - x1*x2")]).unwrap();
    let j = i.with_generators([x("x0 + x1 + x2 + x3")]).unwrap();
    assert_eq!(i.dim_degree().unwrap().dim, 2);
    assert_eq!(j.dim_degree().unwrap().dim, 1);
    let k = j.with_generators([x("x0 - x3")]).unwrap();
    assert_eq!(k.dim_degree().unwrap().dim, 0);
    assert_eq!(k.dim_degree().unwrap().degree, 2);
}

#[test]
fn bases_are_deterministic() {
    let x = |s: &str| multest_algebra::parse_x(s, 3).unwrap();
    let gens = vec![x("x0^2 - x1*x2"), x("x1^2 - x0*x2"), x("x2^2 - x0*x1")];
    let a = Ideal::new(3, gens.clone()).unwrap();
    let b = Ideal::new(3, gens.into_iter().rev()).unwrap();
    assert_eq!(
        format!("{:?}", a.groebner().unwrap().polys()),
        format!("{:?}", b.groebner().unwrap().polys())
    );
}

fn s_poly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().unwrap();
    let (mg, cg) = g.leading_term().unwrap();
    let l = mf.lcm(mg);
    let a = f.mul_monomial(&l.div(mf).unwrap(), &cf.recip());
    let b = g.mul_monomial(&l.div(mg).unwrap(), &cg.recip());
    &a - &b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Buchberger's criterion, checked with plain polynomial arithmetic.
    #[test]
    fn reduced_basis_satisfies_buchberger(gens in prop::collection::vec(homogeneous(3, 2, 3), 1..4)) {
        let i = Ideal::new(3, gens).unwrap();
        let gb = i.groebner().unwrap();
        let ps = gb.polys();
        for a in 0..ps.len() {
            prop_assert_eq!(ps[a].leading_term().unwrap().1.clone(), frac(1, 1));
            for b in a + 1..ps.len() {
                let s = s_poly(&ps[a], &ps[b]);
                prop_assert!(gb.normal_form(&s).unwrap().is_zero());
                // reducedness: no term of one element divisible by another's leading monomial
                let lb = ps[b].leading_term().unwrap().0.clone();
                prop_assert!(ps[a].terms().all(|(m, _)| !lb.divides(m)));
            }
        }
    }
}
