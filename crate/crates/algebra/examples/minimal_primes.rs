//! Minimal primes, Hilbert data and local lengths of zero-dimensional ideals.

use multest_algebra::{default_names, local_length, minimal_primes, parse_polynomial, Ideal, ProjectivePoint};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let names = default_names(3);
    let p = |s: &str| parse_polynomial(s, &names);

    // two lines and a conic through a common point
    let i = Ideal::new(3, [p("x2*(x1 - x0)*(x1^2 - x0*x2)")?])?;
    for c in minimal_primes(&i)? {
        let h = c.ideal.dim_degree()?;
        println!("{:?}  dim {} deg {} certified {}", c.ideal.generator_strings(&names), h.dim, h.degree, c.certified);
    }

    let j = Ideal::new(3, [p("(x1 - x0)^3")?, p("x2 - x0")?])?;
    let z = ProjectivePoint::from_ints(&[1, 1, 1])?;
    println!("length of (x1-x0)^3, x2-x0 at [1:1:1] = {}", local_length(&j, &z)?);
    Ok(())
}
