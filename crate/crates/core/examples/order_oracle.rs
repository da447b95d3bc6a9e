//! Order of vanishing along a subalgebra, directly and through ideals.

use multest::model::make_gm;
use multest::order::{ord_direct, ord_via_ideals, product_set};
use multest_algebra::parse_polynomial;

fn main() -> multest::Result<()> {
    let gm = make_gm();
    let full = gm.subalgebra("full")?;
    let p = parse_polynomial("(x1 - x0)^3 * (x1 - 2*x0)", &gm.names())?;
    let sigma1 = vec![gm.point_from_ints(&[1])?, gm.point_from_ints(&[2])?];
    for g in product_set(&gm, &sigma1, 2) {
        let r = ord_direct(&gm, &full, &p, &g, 6)?;
        println!("ord at {g} = {r}");
    }
    let one = gm.identity();
    for t in 0..4 {
        let pred = ord_via_ideals(&gm, &full, &p, one, one, t)?;
        println!("T = {t}: ord > T by left ideal {}, by right ideal {}", pred.left, pred.right);
    }
    Ok(())
}
