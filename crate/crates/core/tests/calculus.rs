use multest::calculus::identities::{builtin_instances, identity_suite, chart_change, Status};
use multest::calculus::*;
use multest::model::*;
use multest_algebra::{parse_polynomial, BiPolynomial, Ideal, Polynomial};

fn ideal(model: &GroupModel, gens: &[&str]) -> Ideal {
    let names = model.names();
    Ideal::new(model.nvars(), gens.iter().map(|s| parse_polynomial(s, &names).unwrap())).unwrap()
}

fn poly(model: &GroupModel, s: &str) -> Polynomial {
    parse_polynomial(s, &model.names()).unwrap()
}

#[test]
fn interesting_part_examples() {
    let gm = make_gm();
    assert!(interesting_part(&ideal(&gm, &["x0", "x1"])).unwrap().is_unit().unwrap());
    let a = ideal(&gm, &["x0^2*x1"]);
    assert!(interesting_part(&a).unwrap().equals(&a).unwrap());
    let b = ideal(&gm, &["(x1-x0)^2", "x1*(x1-x0)"]);
    assert!(interesting_part(&b).unwrap().equals(&ideal(&gm, &["x1-x0"])).unwrap());
}

#[test]
fn translation_examples() {
    let gm = make_gm();
    let i = ideal(&gm, &["x1-x0"]);
    let g2 = gm.point_from_ints(&[2]).unwrap();
    let g3 = gm.point_from_ints(&[3]).unwrap();
    let t = translate_ideal(&gm, &i, &g2, Side::Left).unwrap();
    assert!(t.equals(&ideal(&gm, &["2*x1-x0"])).unwrap());
    let tt = translate_ideal(&gm, &t, &g3, Side::Left).unwrap();
    assert!(tt.equals(&ideal(&gm, &["6*x1-x0"])).unwrap());
    let direct = translate_ideal(&gm, &i, &gm.mul(&g2, &g3), Side::Left).unwrap();
    assert!(tt.equals(&direct).unwrap());
}

#[test]
fn derivation_operator_examples() {
    let gm = make_gm();
    let sub = gm.subalgebra("full").unwrap();
    let ops = Operators::new(&gm, &sub);
    let bn = multest_algebra::bi_names(2);
    let f = parse_polynomial("(x1*y1 - x0*y0)^2", &bn).unwrap();
    let expected = parse_polynomial("2*(x1*y1 - x0*y0)*x1*y0*y1", &bn).unwrap();
    assert_eq!(ops.dop(0, &f), expected);
    let w = DerivationWord::one(1);
    let fb = BiPolynomial::from_inner(2, f.clone()).unwrap();
    assert_eq!(ops.d_word(&w, &fb).unwrap(), fb);
    let e = poly(&gm, "(x1-x0)^2");
    assert_eq!(ops.b(0, 0, &e), poly(&gm, "2*(x1-x0)*x0*x1"));
    assert_eq!(ops.b_word(&w, 0, &e), e);
}

#[test]
fn family_examples() {
    let gm = make_gm();
    let sub = gm.subalgebra("full").unwrap();
    let ops = Operators::new(&gm, &sub);
    let p = poly(&gm, "(x1-x0)^2");
    let fam = family_e(&ops, &p, 1).unwrap();
    assert_eq!(fam.len(), 2);
    assert_eq!(fam[0].poly, p);
    assert_eq!(fam[1].poly, poly(&gm, "2*x1*(x1-x0)"));

    let b = make_borel2();
    let bsub = b.subalgebra("full").unwrap();
    let bops = Operators::new(&b, &bsub);
    let q = b.ig().generators()[0].clone();
    for m in family_e(&bops, &q, 2).unwrap().into_iter().chain(family_d(&bops, &q, 2).unwrap()).chain(family_c(&bops, &q, 2).unwrap()) {
        assert!(b.ig().contains(&m.poly).unwrap());
    }
}

#[test]
fn jet_examples() {
    let gm = make_gm();
    let sub = gm.subalgebra("full").unwrap();
    let i = ideal(&gm, &["(x1-x0)^2"]);
    let target = ideal(&gm, &["x1-x0"]);
    for v in JetVariant::ALL {
        assert!(jet_ideal(&gm, &sub, &i, 1, v).unwrap().equals(&target).unwrap(), "variant {v}");
        assert!(jet_ideal(&gm, &sub, &i, 0, v).unwrap().equals(&i).unwrap(), "variant {v}");
    }
    let one = gm.identity().clone();
    let d = partial_ideal(&gm, &sub, &i, &one, 1, Side::Left).unwrap();
    assert!(interesting_part(&d).unwrap().equals(&target).unwrap());
    assert!(max_generator_degree(&d) <= partial_degree_bound(&gm, &i));
}

#[test]
fn gm_suite_passes() {
    let gm = make_gm();
    let (sub, inst) = builtin_instances(&gm).unwrap();
    let report = identity_suite(&gm, &sub, &inst).unwrap();
    for o in &report.outcomes {
        println!("{} {} {} {}", o.identity, o.instance, o.status, o.detail);
    }
    assert!(report.all_passed());
}

#[test]
fn perturbed_table_breaks_chart_relation() {
    let gm = make_gm();
    let mut spec = gm.spec().clone();
    spec.q_override.push((0, 0, 1, poly(&gm, "-x0*x1")));
    let bad = GroupModel::build(spec).unwrap();
    let sub = bad.subalgebra("full").unwrap();
    let i = ideal(&bad, &["(x1-x0)^2"]);
    assert_eq!(chart_change(&bad, &sub, &i).unwrap().status, Status::Fail);
    assert_eq!(chart_change(&gm, &gm.subalgebra("full").unwrap(), &i).unwrap().status, Status::Pass);
}

#[test]
fn borel_suite_passes() {
    let b = make_borel2();
    let (sub, inst) = builtin_instances(&b).unwrap();
    let start = std::time::Instant::now();
    let report = identity_suite(&b, &sub, &inst).unwrap();
    for o in &report.outcomes {
        println!("{} {} {} {}", o.identity, o.instance, o.status, o.detail);
    }
    println!("elapsed {:?}", start.elapsed());
    assert!(report.all_passed());
}

#[test]
fn gl2_suite_passes() {
    let b = make_gl2();
    let (sub, inst) = builtin_instances(&b).unwrap();
    let start = std::time::Instant::now();
    let report = identity_suite(&b, &sub, &inst).unwrap();
    for o in &report.outcomes {
        println!("{} {} {} {}", o.identity, o.instance, o.status, o.detail);
    }
    println!("elapsed {:?}", start.elapsed());
    assert!(report.all_passed());
}
