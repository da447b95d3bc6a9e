use multest_algebra::{Polynomial, Scalar};
use num::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Entry, GroupModel, Side};
use crate::error::{Error, Result};

/// Outcome of [`model_validate`]: one line per check that passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub model: String,
    pub checks: Vec<(String, String)>,
}

fn fail(check: &str, detail: impl Into<String>) -> Error {
    Error::Validation { check: check.to_string(), detail: detail.into() }
}

/// Runs checks (a) to (e) on a model; the first failing check is returned as
/// a validation error.
pub fn model_validate(model: &GroupModel) -> Result<ValidationReport> {
    let mut checks = Vec::new();
    checks.push(("a".to_string(), check_charts(model)?));
    checks.push(("b".to_string(), check_tables(model)?));
    checks.push(("c".to_string(), check_left_invariance(model)?));
    checks.push(("d".to_string(), check_brackets(model)?));
    checks.push(("e".to_string(), check_adjoint(model)?));
    Ok(ValidationReport { model: model.name().to_string(), checks })
}

fn proportional(a: &[Scalar], b: &[Scalar]) -> bool {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    true
}

fn check_charts(model: &GroupModel) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11ce);
    let pairs = 12;
    for side in [Side::Left, Side::Right] {
        let charts = model.charts(side);
        for chart in charts {
            for p in &chart.polys {
                if !p.is_zero() && p.bidegree() != Some((model.c5, model.c5)) {
                    return Err(fail("a", format!("{side} chart component of wrong bidegree")));
                }
            }
        }
        for _ in 0..pairs {
            let g = model.random_point(&mut rng);
            let h = model.random_point(&mut rng);
            let target = model.mul(&g, &h);
            let mut covered = false;
            for chart in charts {
                let v = chart.evaluate(g.projective().coords(), h.projective().coords())?;
                if v.iter().all(|c| c.is_zero()) {
                    continue;
                }
                covered = true;
                if !proportional(&v, target.projective().coords()) {
                    return Err(fail("a", format!("{side} chart disagrees with the product of {g} and {h}")));
                }
            }
            if !covered {
                return Err(fail("a", format!("no {side} chart covers the pair {g}, {h}")));
            }
        }
    }
    Ok(format!("charts reproduce products on {pairs} random pairs per side"))
}

fn check_tables(model: &GroupModel) -> Result<String> {
    let m = model.spec.m;
    let np = model.n();
    let nv = model.nvars();
    let entries = model.param_entries();
    let affine = model.affine_image(&entries, np);
    for (j, a) in model.spec.lie_basis.iter().enumerate() {
        // g·A as polynomials in the parameters
        let mut ga = Vec::with_capacity(m * m);
        for i in 0..m {
            for c in 0..m {
                let mut acc = Polynomial::zero(np);
                for l in 0..m {
                    let coeff = &a[(l, c)];
                    if !coeff.is_zero() {
                        acc = &acc + &entries[i * m + l].scale(coeff);
                    }
                }
                ga.push(acc);
            }
        }
        let mut velocity = vec![Polynomial::zero(np); np];
        for (idx, e) in model.spec.entries.iter().enumerate() {
            match e {
                Entry::Param(i) => velocity[*i] = ga[idx].clone(),
                Entry::Const(_) => {
                    if !ga[idx].is_zero() {
                        return Err(fail("b", format!("basis element {j} is not tangent to the group")));
                    }
                }
            }
        }
        let derived: Vec<Polynomial> = affine
            .iter()
            .map(|f| {
                let mut acc = Polynomial::zero(np);
                for (i, v) in velocity.iter().enumerate() {
                    acc = &acc + &(&f.partial_derivative(i) * v);
                }
                acc
            })
            .collect();
        for k in 0..nv {
            for l in 0..nv {
                let lhs = &(&affine[k] * &derived[l]) - &(&affine[l] * &derived[k]);
                let rhs = model.q[j][k][l].substitute(&affine)?;
                if lhs != rhs {
                    return Err(fail("b", format!("table entry Q^({l})_{{{j},{k}}} does not match the derivation")));
                }
            }
        }
    }
    Ok(format!("{} derivation tables match the parametrization", model.lie.dim()))
}

fn check_left_invariance(model: &GroupModel) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    let nv = model.nvars();
    let d = model.lie.dim();
    let mut tests: Vec<Polynomial> = (0..nv).map(|l| Polynomial::var(nv, l)).collect();
    tests.push(&Polynomial::var(nv, nv - 1) * &Polynomial::var(nv, 0) - Polynomial::var(nv, 0).pow(2));
    let samples = 3;
    for _ in 0..samples {
        let g = model.random_point(&mut rng);
        let chart = model
            .charts(Side::Left)
            .iter()
            .find(|c| {
                c.evaluate(g.projective().coords(), model.identity.projective().coords())
                    .map(|v| v.iter().any(|x| !x.is_zero()))
                    .unwrap_or(false)
            })
            .ok_or_else(|| fail("c", "no left chart at a sample point"))?;
        let tx = chart.at_x(g.projective().coords())?;
        for p in &tests {
            let deg = p.degree().unwrap_or(0);
            let f = p.substitute(&tx)?;
            for j in 0..d {
                let mut coeffs = vec![Scalar::zero(); d];
                coeffs[j] = Scalar::from_integer(1.into());
                for k in 0..nv {
                    let h = &tx[k];
                    let lhs = &(&model.apply_b(&coeffs, k, &f) * h)
                        - &(&f * &model.apply_b(&coeffs, k, h)).scale(&Scalar::from_integer(deg.into()));
                    let lhs = &lhs * &h.pow(model.c6 - 2);
                    let rhs = &model.apply_b(&coeffs, k, p).substitute(&tx)? * &Polynomial::var(nv, k).pow(model.c6 - 1);
                    if !model.ig.contains(&(&lhs - &rhs))? {
                        return Err(fail("c", format!("derivation {j} is not left invariant in chart {k} at {g}")));
                    }
                }
            }
        }
    }
    Ok(format!("left invariance at {samples} sample points"))
}

fn check_brackets(model: &GroupModel) -> Result<String> {
    let d = model.lie.dim();
    for i in 0..d {
        for j in 0..d {
            let mut ei = vec![Scalar::zero(); d];
            ei[i] = Scalar::from_integer(1.into());
            let mut ej = vec![Scalar::zero(); d];
            ej[j] = Scalar::from_integer(1.into());
            let a = model.lie.bracket(&ei, &ej);
            let b = model.lie.bracket(&ej, &ei);
            if a.iter().zip(&b).any(|(x, y)| x != &-y) {
                return Err(fail("d", format!("bracket of {i} and {j} is not antisymmetric")));
            }
        }
    }
    model.lie.check_jacobi().map_err(|e| fail("d", e))?;
    Ok("antisymmetry and Jacobi identity".into())
}

fn check_adjoint(model: &GroupModel) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xad);
    let pairs = 5;
    for _ in 0..pairs {
        let g = model.random_point(&mut rng);
        let h = model.random_point(&mut rng);
        let gh = model.mul(&g, &h);
        let lhs = model.adjoint(&gh)?;
        let rhs = &model.adjoint(&g)? * &model.adjoint(&h)?;
        if lhs != rhs {
            return Err(fail("e", format!("Ad is not multiplicative at {g}, {h}")));
        }
    }
    Ok(format!("Ad(gh) = Ad(g)Ad(h) on {pairs} random pairs"))
}
