use multest::model::*;
use multest::order::*;
use multest::Error;
use multest_algebra::{parse_polynomial, Polynomial};
use proptest::prelude::*;

fn poly(model: &GroupModel, s: &str) -> Polynomial {
    parse_polynomial(s, &model.names()).unwrap()
}

#[test]
fn gm_orders_at_identity() {
    let gm = make_gm();
    let full = gm.subalgebra("full").unwrap();
    let one = gm.identity().clone();
    let r = ord_direct(&gm, &full, &poly(&gm, "x1-x0"), &one, 6).unwrap();
    assert_eq!(r, OrderResult::Exact { value: 1, witness: DerivationWord::new(vec![1]) });
    assert_eq!(ord_direct(&gm, &full, &poly(&gm, "x0"), &one, 6).unwrap().value(), Some(0));
    assert_eq!(ord_direct(&gm, &full, &poly(&gm, "(x1-x0)^3"), &one, 5).unwrap().value(), Some(3));
    assert_eq!(ord_direct(&gm, &full, &poly(&gm, "(x1-x0)^3"), &one, 2).unwrap(), OrderResult::AtLeast(3));
}

#[test]
fn gm_orders_away_from_identity() {
    let gm = make_gm();
    let full = gm.subalgebra("full").unwrap();
    let g2 = gm.point_from_ints(&[2]).unwrap();
    let p = poly(&gm, "(x1-2*x0)^2*(x1-x0)");
    assert_eq!(ord_direct(&gm, &full, &p, &g2, 6).unwrap().value(), Some(2));
    assert_eq!(ord_direct(&gm, &full, &p, gm.identity(), 6).unwrap().value(), Some(1));
    let g3 = gm.point_from_ints(&[3]).unwrap();
    assert_eq!(ord_direct(&gm, &full, &p, &g3, 6).unwrap().value(), Some(0));
}

#[test]
fn polynomial_in_closure_ideal_is_rejected() {
    let b = make_borel2();
    let sub = b.subalgebra("unipotent").unwrap();
    let err = ord_direct(&b, &sub, &poly(&b, "x3-x0"), b.identity(), 3).unwrap_err();
    assert!(matches!(err, Error::Domain(_)));
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn ideal_predicates_on_gm() {
    let gm = make_gm();
    let full = gm.subalgebra("full").unwrap();
    let one = gm.identity().clone();
    let p = poly(&gm, "(x1-x0)^2");
    assert_eq!(ord_via_ideals(&gm, &full, &p, &one, &one, 1).unwrap(), ThresholdPredicates { left: true, right: true });
    assert_eq!(ord_via_ideals(&gm, &full, &p, &one, &one, 2).unwrap(), ThresholdPredicates { left: false, right: false });
}

#[test]
fn ideal_predicates_on_borel_agree_with_direct_order() {
    let b = make_borel2();
    let sub = b.subalgebra("unipotent").unwrap();
    let p = poly(&b, "(x2-x0)^2*x1 - x0^2*x4");
    let pts: Vec<GroupPoint> = [[1, 0, 1], [2, 1, 1], [1, -1, 2]].iter().map(|v| b.point_from_ints(v).unwrap()).collect();
    for g in &pts {
        for h in &pts {
            let gh = b.mul(g, h);
            let direct = ord_direct(&b, &sub, &p, &gh, 4).unwrap();
            for t in 0..=2 {
                let pred = ord_via_ideals(&b, &sub, &p, g, h, t).unwrap();
                assert_eq!(pred.left, pred.right, "g={g} h={h} t={t}");
                assert_eq!(Some(pred.left), direct.exceeds(t), "g={g} h={h} t={t}");
            }
        }
    }
}

#[test]
fn word_counts() {
    assert_eq!(enumerate_words(1, 3).len(), 4);
    assert_eq!(enumerate_words(2, 2).len(), 6);
    assert_eq!(enumerate_words(3, 0), vec![DerivationWord::one(3)]);
}

#[test]
fn product_sets() {
    let gm = make_gm();
    let s1: Vec<GroupPoint> = [1, 2].iter().map(|v| gm.point_from_ints(&[*v]).unwrap()).collect();
    assert_eq!(product_set(&gm, &s1, 0).len(), 1);
    assert_eq!(product_set(&gm, &s1, 3).len(), 4);
    let b = make_borel2();
    let s1 = vec![b.identity().clone(), b.point_from_ints(&[-1, 0, -1]).unwrap()];
    assert_eq!(product_set(&b, &s1, 3).len(), 2);
}

fn linear_product(roots: &[i64]) -> String {
    roots.iter().map(|r| format!("(x1-{r}*x0)")).collect::<Vec<_>>().join("*")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gm_order_is_root_multiplicity(roots in proptest::collection::vec(1i64..4, 1..5), g in 1i64..4) {
        let gm = make_gm();
        let full = gm.subalgebra("full").unwrap();
        let p = poly(&gm, &linear_product(&roots));
        let expected = roots.iter().filter(|r| **r == g).count() as u32;
        let pt = gm.point_from_ints(&[g]).unwrap();
        prop_assert_eq!(ord_direct(&gm, &full, &p, &pt, 6).unwrap().value(), Some(expected));
    }

    #[test]
    fn leibniz_on_gm(a in proptest::collection::vec(1i64..4, 1..3), b in proptest::collection::vec(1i64..4, 1..3), g in 1i64..4) {
        let gm = make_gm();
        let full = gm.subalgebra("full").unwrap();
        let pt = gm.point_from_ints(&[g]).unwrap();
        let pa = poly(&gm, &linear_product(&a));
        let pb = poly(&gm, &linear_product(&b));
        let oa = ord_direct(&gm, &full, &pa, &pt, 6).unwrap().value().unwrap();
        let ob = ord_direct(&gm, &full, &pb, &pt, 6).unwrap().value().unwrap();
        let oab = ord_direct(&gm, &full, &(&pa * &pb), &pt, 8).unwrap().value().unwrap();
        prop_assert_eq!(oab, oa + ob);
    }

    #[test]
    fn gm_oracles_agree(roots in proptest::collection::vec(1i64..4, 1..4), g in 1i64..3, h in 1i64..3, t in 0u32..3) {
        let gm = make_gm();
        let full = gm.subalgebra("full").unwrap();
        let p = poly(&gm, &linear_product(&roots));
        let gp = gm.point_from_ints(&[g]).unwrap();
        let hp = gm.point_from_ints(&[h]).unwrap();
        let direct = ord_direct(&gm, &full, &p, &gm.mul(&gp, &hp), 6).unwrap();
        let pred = ord_via_ideals(&gm, &full, &p, &gp, &hp, t).unwrap();
        prop_assert_eq!(Some(pred.left), direct.exceeds(t));
        prop_assert_eq!(Some(pred.right), direct.exceeds(t));
    }
}
