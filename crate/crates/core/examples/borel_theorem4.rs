//! Subgroup version on upper-triangular 2x2 matrices with a central Σ₁.

use multest::model::make_borel2;
use multest::search::{chain_search, constants, verify_bound, Scenario, Theorem};
use multest_algebra::parse_polynomial;

fn main() -> multest::Result<()> {
    let b = make_borel2();
    let sc = Scenario {
        p: parse_polynomial("x1^2 - x0*x1 - x0*x4", &b.names())?,
        sub: b.subalgebra("unipotent")?,
        sigma1: vec![b.identity().clone(), b.point_from_ints(&[-1, 0, -1])?],
        s: 3,
        t: 3,
        d: 2,
        d0: 0,
        theorem: Theorem::Four,
        seed: 11,
        core_samples: 3,
        core_rounds: 6,
        model: b,
    };
    let report = chain_search(&sc)?;
    for step in &report.chain {
        println!("r={} dim={} through 1: {}", step.r, step.dim, step.d_r);
    }
    let sub = report.subgroup.as_ref().expect("subgroup data");
    println!("core {:?} ({:?})", sub.core, sub.invariance);
    println!("H = {:?}, matches {:?}", report.obstruction, sub.matches);
    println!("N_H = {}, tau = {}, {} <= {}: {}", report.cosets, report.tau, report.bound_lhs, report.bound_rhs, verify_bound(&report, &constants(&sc.model)));
    Ok(())
}
