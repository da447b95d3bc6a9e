//! Reduced Gröbner bases and the ideal operations built on them.

use multest_algebra::{default_names, groebner, parse_polynomial, Ideal, MonomialOrder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let names = default_names(3);
    let p = |s: &str| parse_polynomial(s, &names);
    let gens = vec![p("x1^2 - x0*x2")?, p("x1*x2 - x0^2")?];

    for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
        let gb = groebner(&gens, 3, order)?;
        let shown: Vec<String> = gb.polys().iter().map(|g| g.to_string_with(&names)).collect();
        println!("{order:?}: {shown:?}");
    }

    let i = Ideal::new(3, gens)?;
    let j = Ideal::new(3, [p("x1 - x0")?])?;
    println!("x2^3 - x0^3 in I: {}", i.contains(&p("x2^3 - x0^3")?)?);
    println!("I ∩ J = {:?}", i.intersect(&j)?.generator_strings(&names));
    println!("I : x0 = {:?}", i.quotient_poly(&p("x0")?)?.generator_strings(&names));
    println!("In(I) = {:?}", i.saturate_irrelevant()?.generator_strings(&names));
    println!("eliminate x1: {:?}", i.eliminate(&[1])?.generator_strings(&names));
    let h = i.dim_degree()?;
    println!("projective dim {}, degree {}", h.dim, h.degree);
    Ok(())
}
