//! Left and right translation of ideals and the composition laws.

use multest::calculus::translate_ideal;
use multest::model::{make_borel2, Side};
use multest_algebra::{parse_polynomial, Ideal};

fn main() -> multest::Result<()> {
    let b = make_borel2();
    let names = b.names();
    let i = Ideal::new(b.nvars(), [parse_polynomial("(x2 - x0)^2*x1 - x0^2*x4", &names)?])?;
    let g = b.point_from_ints(&[2, 1, 1])?;
    let h = b.point_from_ints(&[1, 3, -1])?;

    let lg = translate_ideal(&b, &i, &g, Side::Left)?;
    println!("T_L(g) I = {:?}", lg.generator_strings(&names));
    let rg = translate_ideal(&b, &i, &g, Side::Right)?;
    println!("T_R(g) I = {:?}", rg.generator_strings(&names));

    let twice = translate_ideal(&b, &lg, &h, Side::Left)?;
    let once = translate_ideal(&b, &i, &b.mul(&g, &h), Side::Left)?;
    println!("T_L(h) T_L(g) = T_L(gh): {}", twice.equals(&once)?);

    let a = translate_ideal(&b, &lg, &h, Side::Right)?;
    let c = translate_ideal(&b, &translate_ideal(&b, &i, &h, Side::Right)?, &g, Side::Left)?;
    println!("left and right translations commute: {}", a.equals(&c)?);
    Ok(())
}
