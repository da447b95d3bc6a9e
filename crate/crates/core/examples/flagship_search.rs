//! Equality case on the multiplicative group: P = (x1 - x0)^4 vanishing to
//! order four at the identity.

use multest::model::make_gm;
use multest::search::{chain_search, constants, verify_bound, Scenario, Theorem};
use multest_algebra::parse_polynomial;

fn main() -> multest::Result<()> {
    let gm = make_gm();
    let sc = Scenario {
        p: parse_polynomial("(x1-x0)^4", &gm.names())?,
        sub: gm.subalgebra("full")?,
        sigma1: vec![gm.identity().clone()],
        s: 1,
        t: 3,
        d: 4,
        d0: 0,
        theorem: Theorem::Two,
        seed: 7,
        core_samples: 3,
        core_rounds: 6,
        model: gm,
    };
    let report = chain_search(&sc)?;
    for step in &report.chain {
        println!("r={} s={} t={} dim={} through 1: {}", step.r, step.s, step.t, step.dim, step.d_r);
    }
    println!("W = {:?}, dim {}, deg {}, tau {}, cosets {}", report.obstruction, report.dim, report.deg, report.tau, report.cosets);
    println!("{} <= {}: {}", report.bound_lhs, report.bound_rhs, verify_bound(&report, &constants(&sc.model)));
    Ok(())
}
