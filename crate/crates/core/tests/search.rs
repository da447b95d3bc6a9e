use multest::model::*;
use multest::search::geometry::*;
use multest::search::group::*;
use multest::search::*;
use multest::Error;
use multest_algebra::{parse_polynomial, Ideal, Polynomial};
use num::bigint::BigInt;
use num::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly(model: &GroupModel, s: &str) -> Polynomial {
    parse_polynomial(s, &model.names()).unwrap()
}

fn ideal(model: &GroupModel, gens: &[&str]) -> Ideal {
    Ideal::new(model.nvars(), gens.iter().map(|g| poly(model, g))).unwrap()
}

fn flagship() -> Scenario {
    let gm = make_gm();
    Scenario {
        p: poly(&gm, "(x1-x0)^4"),
        sub: gm.subalgebra("full").unwrap(),
        sigma1: vec![gm.identity().clone()],
        s: 1,
        t: 3,
        d: 4,
        d0: 1,
        theorem: Theorem::Two,
        seed: 7,
        core_samples: 3,
        core_rounds: 6,
        model: gm,
    }
}

fn borel4() -> Scenario {
    let b = make_borel2();
    Scenario {
        p: poly(&b, "x1^2 - x0*x1 - x0*x4"),
        sub: b.subalgebra("unipotent").unwrap(),
        sigma1: vec![b.identity().clone(), b.point_from_ints(&[-1, 0, -1]).unwrap()],
        s: 3,
        t: 3,
        d: 2,
        d0: 1,
        theorem: Theorem::Four,
        seed: 11,
        core_samples: 3,
        core_rounds: 6,
        model: b,
    }
}

#[test]
fn constants_of_builtins() {
    let c = constants(&make_gm());
    assert_eq!(c.n, 1);
    assert_eq!(c.c1, c.c2);
    assert_eq!(c.c3, c.c4);
    let b = constants(&make_borel2());
    assert_eq!(b.n, 3);
    assert!(b.c3 >= b.c1);
    let manual = Constants::from_parts(2, 3, 1, 2, 5);
    assert_eq!(manual.c1, BigInt::from(3i64.pow(4) * 4 * 5));
    assert_eq!(manual.c4, BigInt::from(3i64.pow(6) * 4 * 5));
}

#[test]
fn separator_vanishes_on_sigma_only() {
    let gm = make_gm();
    let sigma: Vec<GroupPoint> = [1, 2].iter().map(|v| gm.point_from_ints(&[*v]).unwrap()).collect();
    let w = ideal(&gm, &["x1-3*x0"]);
    let q = separating_polynomial(&sigma, &w).unwrap();
    for g in &sigma {
        assert!(q.evaluate(g.projective().coords()).unwrap().is_zero());
    }
    assert!(!w.contains(&q).unwrap());
    let only = ideal(&gm, &["x1-x0"]);
    assert!(matches!(separating_polynomial(&sigma[..1], &only), Err(Error::Domain(_))));
}

#[test]
fn cosets_and_lengths_on_gm() {
    let gm = make_gm();
    let one = ideal(&gm, &["x1-x0"]);
    let sigma: Vec<GroupPoint> = [1, 2, 2].iter().map(|v| gm.point_from_ints(&[*v]).unwrap()).collect();
    assert_eq!(coset_count(&gm, &one, &sigma, Side::Left).unwrap(), 2);
    let i = ideal(&gm, &["(x1-x0)^3*(x1-2*x0)"]);
    assert_eq!(length_at_point(&gm, &i, gm.identity().projective()).unwrap(), 3);
    let two = gm.point_from_ints(&[2]).unwrap();
    assert_eq!(length_at_point(&gm, &i, two.projective()).unwrap(), 1);
}

#[test]
fn tau_on_gm_point() {
    let gm = make_gm();
    let full = gm.subalgebra("full").unwrap();
    let w = ideal(&gm, &["x1-x0"]);
    assert_eq!(tau(&gm, &w, &full, gm.identity()).unwrap(), 1);
    let all = Ideal::new(gm.nvars(), Vec::new()).unwrap();
    assert_eq!(tau(&gm, &all, &full, gm.identity()).unwrap(), 0);
}

#[test]
fn bezout_on_gm() {
    let gm = make_gm();
    let j = ideal(&gm, &["(x1-x0)^2*(x1-3*x0)"]);
    let r = bezout_check(&gm, &j, None).unwrap();
    assert!(r.holds);
    assert_eq!(r.lhs, "3");
    assert_eq!(r.rhs, "3");
    let boundary = ideal(&gm, &["x0*x1"]);
    let r = bezout_check(&gm, &boundary, None).unwrap();
    assert!(r.points.iter().all(|p| !p.in_group));
    assert_eq!(r.lhs, "0");
}

#[test]
fn normal_core_of_normal_subgroup_is_itself() {
    let b = make_borel2();
    let u = b.subgroup_for(&b.subalgebra("unipotent").unwrap()).unwrap().clone();
    let v = b.orbit_ideal(b.identity(), &u).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let core = normal_core(&b, &v, &mut rng, 3, 4).unwrap();
    assert!(core.ideal.equals(&v).unwrap());
    assert_eq!(core.invariance, Invariance::Certified);
}

#[test]
fn stabilizer_of_unipotent_closure() {
    let b = make_borel2();
    let u = b.subgroup_for(&b.subalgebra("unipotent").unwrap()).unwrap().clone();
    let v = b.orbit_ideal(b.identity(), &u).unwrap();
    let st = stabilizer(&b, &v).unwrap();
    assert!(st.identity_component.equals(&v).unwrap());
    assert_eq!(st.dim, 1);
    assert_eq!(match_declared_subgroup(&b, &st.identity_component).unwrap().as_deref(), Some("unipotent"));
}

#[test]
fn flagship_search() {
    let sc = flagship();
    let report = chain_search(&sc).unwrap();
    assert_eq!(report.r0, 1);
    assert_eq!(report.dim, 0);
    assert_eq!(report.deg, 1);
    assert_eq!(report.tau, 1);
    assert_eq!(report.cosets, 1);
    assert_eq!(report.bound_lhs, BigInt::from(4));
    assert_eq!(report.bound_rhs, BigInt::from(4));
    assert!(report.conclusions.all());
    assert!(verify_bound(&report, &constants(&sc.model)));
}

#[test]
fn low_order_violates_hypothesis() {
    let mut sc = flagship();
    sc.p = poly(&sc.model, "(x1-x0)^2*x1^2");
    let err = chain_search(&sc).unwrap_err();
    assert!(matches!(err, Error::Hypothesis(_)));
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn degree_mismatch_is_rejected() {
    let mut sc = flagship();
    sc.d = 5;
    assert!(matches!(check_hypotheses(&sc), Err(Error::Hypothesis(_))));
}

#[test]
fn borel_subgroup_search() {
    let sc = borel4();
    let report = chain_search(&sc).unwrap();
    let dims: Vec<i64> = report.chain.iter().map(|s| s.d_r).collect();
    assert_eq!(dims, vec![2, 1, 1, 1]);
    let sub = report.subgroup.as_ref().unwrap();
    assert_eq!(sub.matches.as_deref(), Some("unipotent"));
    assert_eq!(report.dim, 1);
    assert_eq!(report.cosets, 2);
    assert_eq!(report.tau, 0);
    assert_eq!(report.bound_lhs, BigInt::from(2));
    assert!(report.conclusions.all());
    assert!(verify_bound(&report, &constants(&sc.model)));
}

#[test]
fn spec_table_examples() {
    let gm = make_gm();
    let pts: Vec<GroupPoint> = [1, 2, 4].iter().map(|v| gm.point_from_ints(&[*v]).unwrap()).collect();
    let one = ideal(&gm, &["x1-x0"]);
    assert_eq!(coset_count(&gm, &one, &pts, Side::Left).unwrap(), 3);
    let everything = Ideal::new(gm.nvars(), Vec::new()).unwrap();
    assert_eq!(coset_count(&gm, &everything, &pts, Side::Right).unwrap(), 1);
    let id = gm.identity().projective();
    assert_eq!(length_at_point(&gm, &ideal(&gm, &["(x1-x0)^2", "x1*(x1-x0)"]), id).unwrap(), 1);
    let r = bezout_check(&gm, &one, Some(2)).unwrap();
    assert_eq!((r.lhs.as_str(), r.rhs.as_str(), r.holds), ("1", "2", true));
    let r = bezout_check(&gm, &ideal(&gm, &["(x1-x0)*(x1-2*x0)"]), None).unwrap();
    assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("2", "2"));
    let q = separating_polynomial(&pts[..2], &everything).unwrap();
    assert_eq!(q, poly(&gm, "(x1-x0)*(x1-2*x0)"));

    let b = make_borel2();
    let usub = b.subalgebra("unipotent").unwrap();
    let u = b.orbit_ideal(b.identity(), b.subgroup_for(&usub).unwrap()).unwrap();
    assert_eq!(tau(&b, &u, &usub, b.identity()).unwrap(), 0);
    let torus = b.point_from_ints(&[2, 0, 1]).unwrap();
    assert_eq!(coset_count(&b, &u, &[b.identity().clone(), torus], Side::Right).unwrap(), 2);
}

#[test]
fn theorem_three_on_borel() {
    let mut sc = borel4();
    sc.theorem = Theorem::Three;
    sc.s = 1;
    let report = chain_search(&sc).unwrap();
    assert_eq!(report.subgroup.as_ref().unwrap().matches.as_deref(), Some("unipotent"));
    assert_eq!(report.conclusions.dimension_bound, Some(true));
    assert!(report.conclusions.all());
    assert!(verify_bound(&report, &constants(&sc.model)));
}

/// The separators that keep the chain inside `𝓘_{S,T+1}` are `(T+1)`-th
/// powers, so their degree is not bounded by `D` and the final inequality can
/// fail here. Measured, not assumed.
#[test]
fn theorem_one_separators_on_borel() {
    let mut sc = borel4();
    sc.theorem = Theorem::One;
    sc.s = 1;
    let report = chain_search(&sc).unwrap();
    assert!(report.chain.iter().any(|s| s.separators > 0));
    assert!(report.chain.iter().any(|s| s.max_degree > sc.d));
    assert!(report.conclusions.contains_identity);
    assert!(report.conclusions.inside_zero_set_of_p);
    assert_eq!(report.conclusions.dimension_bound, Some(true));
    assert_eq!((report.bound_lhs.clone(), report.bound_rhs.clone()), (BigInt::from(8), BigInt::from(4)));
    assert!(!verify_bound(&report, &constants(&sc.model)));
}

#[test]
fn search_is_deterministic() {
    let a = serde_json::to_string(&chain_search(&borel4()).unwrap()).unwrap();
    let b = serde_json::to_string(&chain_search(&borel4()).unwrap()).unwrap();
    assert_eq!(a, b);
}
