//! The four jet constructions and the derivative ideals at a point.

use multest::calculus::{jet_ideal, max_generator_degree, partial_degree_bound, partial_ideal, JetVariant};
use multest::model::{make_borel2, Side};
use multest_algebra::{parse_polynomial, Ideal};

fn main() -> multest::Result<()> {
    let b = make_borel2();
    let names = b.names();
    let sub = b.subalgebra("unipotent")?;
    let i = Ideal::new(b.nvars(), [parse_polynomial("(x2 - x0)^2*x1 - x0^2*x4", &names)?])?;

    for t in 0..=2 {
        let ideals: Vec<Ideal> = JetVariant::ALL.iter().map(|v| jet_ideal(&b, &sub, &i, t, *v)).collect::<Result<_, _>>()?;
        let agree = ideals.windows(2).all(|w| w[0].equals(&w[1]).unwrap_or(false));
        println!("T = {t}: B = C = D = E is {agree}; E = {:?}", ideals[3].generator_strings(&names));
    }

    let g = b.point_from_ints(&[1, 2, 1])?;
    let bound = partial_degree_bound(&b, &i);
    for side in [Side::Left, Side::Right] {
        let d = partial_ideal(&b, &sub, &i, &g, 2, side)?;
        println!("{side} derivative ideal of order 2 at {g}: {} generators, max degree {} (bound {bound})", d.generators().len(), max_generator_degree(&d));
    }
    Ok(())
}
