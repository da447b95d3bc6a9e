//! Constants of the built-in models.

use multest::model::{make_borel2, make_gl2, make_gm};
use multest::search::{constants, Constants};

fn main() {
    for model in [make_gm(), make_borel2(), make_gl2()] {
        let c = constants(&model);
        println!("{:<7} n={} c5={} c7={} deg={} c1=c2={} c3=c4={}", model.name(), c.n, c.c5, c.c7, c.deg_g, c.c1, c.c3);
    }
    let c = Constants::from_parts(1, 2, 1, 1, 1);
    println!("c5 = 2, n = 1: c3 = {}", c.c3);
}
