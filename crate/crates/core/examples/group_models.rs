//! Built-in compactified groups: points, products, charts and validation.

use multest::model::{make_borel2, make_gl2, make_gm, model_validate, Side};

fn main() -> multest::Result<()> {
    for model in [make_gm(), make_borel2(), make_gl2()] {
        println!("{}: n = {}, ambient P^{}, deg = {}, c5 = {}", model.name(), model.n(), model.big_n(), model.deg_g(), model.c5());
        println!("  closure ideal: {:?}", model.ig().generator_strings(&model.names()));
        println!("  identity {}", model.identity());
        let report = model_validate(&model)?;
        for (check, detail) in &report.checks {
            println!("  ({check}) {detail}");
        }
    }

    let b = make_borel2();
    let g = b.point_from_ints(&[2, 1, 3])?;
    let h = b.point_from_ints(&[1, -1, 1])?;
    let gh = b.mul(&g, &h);
    println!("g·h = {gh}, (g·h)⁻¹ = {}", b.inv(&gh)?);
    let chart = &b.charts(Side::Left)[0];
    let v = chart.evaluate(g.projective().coords(), h.projective().coords())?;
    let shown: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    println!("left chart at (g, h): [{}]", shown.join(" : "));
    let ad = b.adjoint(&g)?;
    println!("Ad(g) on the Lie algebra:");
    for r in 0..ad.rows() {
        let row: Vec<String> = (0..ad.cols()).map(|c| ad[(r, c)].to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
    Ok(())
}
