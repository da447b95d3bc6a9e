//! Bezout inequality for finite intersections with the closure of the group.

use multest::model::{make_borel2, make_gm};
use multest::search::geometry::bezout_check;
use multest_algebra::{parse_polynomial, Ideal};

fn main() -> multest::Result<()> {
    let gm = make_gm();
    for (gens, d) in [(vec!["(x1-x0)^2"], None), (vec!["x1-x0"], Some(2)), (vec!["(x1-x0)*(x1-2*x0)"], None), (vec!["x0*x1"], None)] {
        let j = Ideal::new(gm.nvars(), gens.iter().map(|s| parse_polynomial(s, &gm.names())).collect::<Result<Vec<_>, _>>()?)?;
        let r = bezout_check(&gm, &j, d)?;
        println!("gm {gens:?}: {} <= {} is {}", r.lhs, r.rhs, r.holds);
    }

    let b = make_borel2();
    let gens = ["(x1-2*x0)^2", "x2", "x4-2*x0"];
    let j = Ideal::new(b.nvars(), gens.iter().map(|s| parse_polynomial(s, &b.names())).collect::<Result<Vec<_>, _>>()?)?;
    let r = bezout_check(&b, &j, None)?;
    for p in &r.points {
        println!("  point {:?} length {} in group {}", p.ideal, p.length, p.in_group);
    }
    println!("borel2 {gens:?}: {} <= {} is {}", r.lhs, r.rhs, r.holds);
    Ok(())
}
