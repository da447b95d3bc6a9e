//! Parsing, arithmetic, substitution and factoring of exact polynomials.

use multest_algebra::{default_names, factor, parse_polynomial, scalar, Polynomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let names = default_names(3);
    let f = parse_polynomial("(x1 - x0)^2 * (x2 + 1/2*x0)", &names)?;
    let g = parse_polynomial("x1 + x2", &names)?;
    println!("f = {}", f.to_string_with(&names));
    println!("deg f = {:?}, homogeneous: {}", f.degree(), f.is_homogeneous());
    println!("f*g has {} terms", (&f * &g).terms().count());
    println!("d f / d x1 = {}", f.partial_derivative(1).to_string_with(&names));

    let at = [scalar::int(1), scalar::int(3), scalar::int(-2)];
    println!("f(1, 3, -2) = {}", f.evaluate(&at)?);

    // x1 -> x0 + x2 collapses the squared factor to x2^2
    let images = [Polynomial::var(3, 0), &Polynomial::var(3, 0) + &Polynomial::var(3, 2), Polynomial::var(3, 2)];
    println!("f(x0, x0+x2, x2) = {}", f.substitute(&images)?.to_string_with(&names));

    let fac = factor(&f)?;
    for (p, e) in &fac.factors {
        println!("factor {} ^ {e}", p.to_string_with(&names));
    }
    Ok(())
}
