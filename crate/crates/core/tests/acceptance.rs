//! Acceptance run: one PASS/FAIL line per criterion, each under its time limit.
//! All comparisons are exact; the time limits are the only tolerances.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use multest::calculus::identities::*;
use multest::calculus::{degree_audit, interesting_part, translate_ideal};
use multest::model::{make_borel2, make_gl2, make_gm, GroupModel, GroupPoint, LieSubalgebra, Side};
use multest::order::{ord_direct, ord_via_ideals, product_set};
use multest::search::geometry::{bezout_check, components};
use multest::search::{chain_search, constants, verify_bound, Scenario, Theorem};
use multest_algebra::{default_names, parse_polynomial, Ideal, Polynomial};
use num::bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;

fn ideal_in(nvars: usize, gens: &[&str]) -> Ideal {
    let names = default_names(nvars);
    Ideal::new(nvars, gens.iter().map(|g| parse_polynomial(g, &names).unwrap())).unwrap()
}

fn model_ideal(model: &GroupModel, gens: &[&str]) -> Ideal {
    ideal_in(model.nvars(), gens)
}

fn poly(model: &GroupModel, s: &str) -> Polynomial {
    parse_polynomial(s, &model.names()).unwrap()
}

fn expect(check: Check, what: &str) -> Result<(), String> {
    match check.status {
        Status::Fail => Err(format!("{what}: {}", check.detail)),
        _ => Ok(()),
    }
}

fn in_operator() -> Outcome {
    let groups: Vec<(usize, Vec<Vec<&str>>)> = vec![
        (2, vec![vec!["x0", "x1"], vec!["x0^2*x1"], vec!["(x1-x0)^2", "x1*(x1-x0)"], vec!["x1^2-x0^2"], vec!["x0*x1*(x1-x0)"], vec!["(x1-2*x0)^3"]]),
        (
            3,
            vec![
                vec!["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2"],
                vec!["x1^2-x0*x2"],
                vec!["x0*x1", "x0*x2"],
                vec!["x1*x2", "x0^2"],
                vec!["x0^3", "x1^2*x2"],
                vec!["x0*x1-x2^2", "x1^3"],
                vec!["x2", "x0^2-x1^2"],
                vec!["x0^2", "x0*x1", "x1^2"],
            ],
        ),
        (
            4,
            vec![
                vec!["x1^2-x0*x2", "x1*x2-x0*x3", "x2^2-x1*x3"],
                vec!["x0*x3-x1*x2"],
                vec!["x0*x2", "x0*x3", "x1*x2", "x1*x3"],
                vec!["x0^2", "x1^2", "x2^2", "x3^2"],
                vec!["x3^2", "x0*x3", "x1-x2"],
                vec!["x0*x1*x2*x3"],
                vec!["x0+x1+x2+x3", "x0*x1-x2*x3"],
                vec!["x0*x3", "x1*x3", "x2*x3", "x3^2"],
            ],
        ),
    ];
    let mut count = 0;
    let mut checks = 0;
    let mut literal_sum_failures = 0;
    for (nv, gens) in &groups {
        let ideals: Vec<Ideal> = gens.iter().map(|g| ideal_in(*nv, g)).collect();
        for (k, i) in ideals.iter().enumerate() {
            let j = &ideals[(k + 1) % ideals.len()];
            count += 1;
            expect(in_intersection(i, j).map_err(|e| e.to_string())?, "intersection")?;
            expect(in_sum(i, j).map_err(|e| e.to_string())?, "sum")?;
            expect(in_idempotent(i).map_err(|e| e.to_string())?, "idempotent")?;
            expect(in_zero_set(i).map_err(|e| e.to_string())?, "zero set")?;
            checks += 4;
            let literal = interesting_part(&i.sum(j).unwrap()).unwrap();
            let pieces = interesting_part(i).unwrap().sum(&interesting_part(j).unwrap()).unwrap();
            if !literal.equals(&pieces).unwrap() {
                literal_sum_failures += 1;
            }
        }
    }
    let ex = [
        (vec!["x0", "x1"], vec!["1"]),
        (vec!["x0^2*x1"], vec!["x0^2*x1"]),
        (vec!["(x1-x0)^2", "x1*(x1-x0)"], vec!["x1-x0"]),
    ];
    for (i, want) in ex {
        let got = interesting_part(&ideal_in(2, &i)).unwrap();
        if !got.equals(&ideal_in(2, &want)).unwrap() {
            return Err(format!("In({i:?}) = {:?}", got.generator_strings(&default_names(2))));
        }
        checks += 1;
    }
    Ok(format!(
        "{count} ideals, {checks} exact checks; sum law checked as In(I+J) = In(In I + In J), the unsaturated form differs on {literal_sum_failures} pairs"
    ))
}

fn random_pairs(model: &GroupModel, k: usize, rng: &mut ChaCha8Rng) -> Vec<(GroupPoint, GroupPoint)> {
    (0..k).map(|_| (model.random_point(rng), model.random_point(rng))).collect()
}

fn translation_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = 0;
    for model in [make_gm(), make_borel2()] {
        let (_, instances) = builtin_instances(&model).map_err(|e| e.to_string())?;
        for (n, (g, h)) in random_pairs(&model, 5, &mut rng).into_iter().enumerate() {
            let i = &instances[n % instances.len()].i;
            let run = || -> multest::Result<Vec<(Check, &'static str)>> {
                Ok(vec![
                    (translate_in(&model, i, &g)?, "translate-in"),
                    (left_composition(&model, i, &g, &h)?, "left-composition"),
                    (right_composition(&model, i, &g, &h)?, "right-composition"),
                    (left_right_commute(&model, i, &g, &h)?, "left-right-commute"),
                    (identity_translation(&model, i)?, "identity-translation"),
                    (point_translation(&model, &h, &g)?, "point-translation"),
                ])
            };
            for (c, name) in run().map_err(|e| e.to_string())? {
                expect(c, &format!("{} {name} g={g} h={h}", model.name()))?;
                checks += 1;
            }
        }
    }
    Ok(format!("gm and borel2, 5 random pairs each, {checks} exact checks"))
}

fn jet_models() -> Vec<(GroupModel, LieSubalgebra, Vec<Ideal>)> {
    let mut out = Vec::new();
    for model in [make_gm(), make_borel2()] {
        let (sub, inst) = builtin_instances(&model).unwrap();
        let ideals = inst.iter().map(|s| s.i.clone()).collect();
        out.push((model, sub, ideals));
    }
    out
}

fn jets() -> Outcome {
    let mut checks = 0;
    for (model, sub, ideals) in jet_models() {
        for i in &ideals {
            expect(jet_agreement(&model, &sub, i, 3).map_err(|e| e.to_string())?, &format!("{} jets", model.name()))?;
            checks += 4;
            for (t, t2) in [(1, 1), (1, 2), (2, 1)] {
                expect(jet_composition(&model, &sub, i, t, t2).map_err(|e| e.to_string())?, &format!("{} composition {t},{t2}", model.name()))?;
                checks += 1;
            }
        }
    }
    Ok(format!("B = C = D = E for T ≤ 3 and E composition on gm (4 ideals) and borel2 (3 ideals), {checks} exact checks"))
}

fn mixed_laws() -> Outcome {
    let mut checks = 0;
    for model in [make_gm(), make_borel2()] {
        let (sub, inst) = builtin_instances(&model).map_err(|e| e.to_string())?;
        for s in &inst {
            for t in 0..=2 {
                expect(left_mixed(&model, &sub, &s.i, &s.g, t).map_err(|e| e.to_string())?, "left three-way")?;
                checks += 1;
            }
        }
    }
    let b = make_borel2();
    let (sub, inst) = builtin_instances(&b).map_err(|e| e.to_string())?;
    for s in &inst {
        let run = || -> multest::Result<Vec<Check>> {
            let mut v = Vec::new();
            for t in 0..=2 {
                v.push(right_mixed(&b, &sub, &s.i, &s.g, t)?);
            }
            v.push(left_partial_composition(&b, &sub, &s.i, &s.g, &s.h, s.t, s.t2)?);
            v.push(right_partial_composition(&b, &sub, &s.i, &s.g, &s.h, s.t, s.t2)?);
            v.push(partial_commute(&b, &sub, &s.i, &s.g, &s.h, s.t, s.t2)?);
            Ok(v)
        };
        for c in run().map_err(|e| e.to_string())? {
            if c.status == Status::Skip {
                return Err(format!("skipped on the ad-stable subalgebra: {}", c.detail));
            }
            expect(c, &format!("borel2 {}", s.label))?;
            checks += 1;
        }
    }
    Ok(format!("three-way laws on gm and borel2, right and composed laws on borel2 (unipotent), {checks} exact checks"))
}

fn oracle_agreement() -> Outcome {
    let gm = make_gm();
    let b = make_borel2();
    let corpora: Vec<(&GroupModel, &str, Vec<Vec<i64>>, Vec<&str>)> = vec![
        (&gm, "full", vec![vec![1]], vec!["(x1-x0)^4"]),
        (&gm, "full", vec![vec![1], vec![2]], vec!["(x1-x0)^3*(x1-2*x0)", "(x1-2*x0)^2*(x1-4*x0)^2"]),
        (&b, "unipotent", vec![vec![1, 0, 1], vec![-1, 0, -1]], vec!["x1^2 - x0*x1 - x0*x4"]),
        (&b, "unipotent", vec![vec![1, 0, 1], vec![2, 1, 1]], vec!["(x2-x0)^2*x1 - x0^2*x4"]),
    ];
    let mut checks = 0;
    for (model, sub, sigma, polys) in corpora {
        let sub = model.subalgebra(sub).unwrap();
        let sigma1: Vec<GroupPoint> = sigma.iter().map(|v| model.point_from_ints(v).unwrap()).collect();
        let sigma2 = product_set(model, &sigma1, 2);
        for p in polys {
            let p = poly(model, p);
            for g in &sigma2 {
                for h in &sigma2 {
                    let direct = ord_direct(model, &sub, &p, &model.mul(g, h), 5).map_err(|e| e.to_string())?;
                    for t in 0..=4 {
                        let pred = ord_via_ideals(model, &sub, &p, g, h, t).map_err(|e| e.to_string())?;
                        let want = direct.exceeds(t);
                        if Some(pred.left) != want || Some(pred.right) != want {
                            return Err(format!("{} g={g} h={h} T={t}: direct {direct}, ideals {pred:?}", model.name()));
                        }
                        checks += 2;
                    }
                }
            }
        }
    }
    Ok(format!("{checks} predicate comparisons over Σ₂ × Σ₂, T ≤ 4"))
}

fn flagship_scenario() -> Scenario {
    let gm = make_gm();
    Scenario {
        p: poly(&gm, "(x1-x0)^4"),
        sub: gm.subalgebra("full").unwrap(),
        sigma1: vec![gm.identity().clone()],
        s: 1,
        t: 3,
        d: 4,
        d0: 0,
        theorem: Theorem::Two,
        seed: SEED,
        core_samples: 3,
        core_rounds: 6,
        model: gm,
    }
}

fn borel_scenario() -> Scenario {
    let b = make_borel2();
    Scenario {
        p: poly(&b, "x1^2 - x0*x1 - x0*x4"),
        sub: b.subalgebra("unipotent").unwrap(),
        sigma1: vec![b.identity().clone(), b.point_from_ints(&[-1, 0, -1]).unwrap()],
        s: 3,
        t: 3,
        d: 2,
        d0: 0,
        theorem: Theorem::Four,
        seed: SEED,
        core_samples: 3,
        core_rounds: 6,
        model: b,
    }
}

fn flagship() -> Outcome {
    let sc = flagship_scenario();
    let r = chain_search(&sc).map_err(|e| e.to_string())?;
    let c2 = constants(&sc.model).c2;
    let w = model_ideal(&sc.model, &["x1-x0"]);
    let got = Ideal::new(2, r.obstruction.iter().map(|s| poly(&sc.model, s))).unwrap();
    if !got.equals(&w).unwrap() || r.dim != 0 || r.deg != 1 || r.cosets != 1 || r.tau != 1 {
        return Err(format!("W = {:?}, dim {}, deg {}, N {}, tau {}", r.obstruction, r.dim, r.deg, r.cosets, r.tau));
    }
    if r.bound_lhs != BigInt::from(4) || r.bound_rhs != BigInt::from(4) || c2 != BigInt::from(1) {
        return Err(format!("{} vs {}", r.bound_lhs, r.bound_rhs));
    }
    if !verify_bound(&r, &constants(&sc.model)) || !r.conclusions.all() {
        return Err("verification failed".into());
    }
    Ok(format!("W = {{1}}, N_W·binom(4,1)·1 = {} = c₂·D¹ = {}", r.bound_lhs, r.bound_rhs))
}

fn borel_theorem4() -> Outcome {
    let sc = borel_scenario();
    let r = chain_search(&sc).map_err(|e| e.to_string())?;
    let sub = r.subgroup.as_ref().ok_or("no subgroup data")?;
    if r.conclusions.normal != Some(true) {
        return Err(format!("normality not established: {:?}", sub.invariance));
    }
    if !verify_bound(&r, &constants(&sc.model)) || !r.conclusions.all() {
        return Err(format!("bound {} <= {} not verified", r.bound_lhs, r.bound_rhs));
    }
    Ok(format!(
        "H = {:?} ({:?}, invariance {:?}), N_H = {}, tau = {}, {} ≤ {}",
        r.obstruction,
        sub.matches.as_deref().unwrap_or("undeclared"),
        sub.invariance,
        r.cosets,
        r.tau,
        r.bound_lhs,
        r.bound_rhs
    ))
}

fn bezout_and_degrees() -> Outcome {
    let gm = make_gm();
    let b = make_borel2();
    let g2 = make_gl2();
    let cases: Vec<(&GroupModel, Vec<&str>, Option<u32>, Option<(&str, &str)>)> = vec![
        (&gm, vec!["(x1-x0)^2"], None, Some(("2", "2"))),
        (&gm, vec!["x1-x0"], Some(2), Some(("1", "2"))),
        (&gm, vec!["(x1-x0)*(x1-2*x0)"], None, Some(("2", "2"))),
        (&gm, vec!["x0*x1*(x1-x0)"], None, Some(("1", "3"))),
        (&b, vec!["(x1-2*x0)^2", "x2", "x4-2*x0"], None, None),
        (&b, vec!["x1*x4-4*x0^2", "x2-x0", "x1-x4"], None, None),
        (&g2, vec!["x2-x0", "x3-x0", "(x1-2*x0)*(x1-3*x0)", "x4-2*x0"], None, None),
        (&g2, vec!["x2-x0", "x3-x0", "x1^2-x0*x4", "x4-3*x0"], None, None),
    ];
    let mut n = 0;
    for (model, gens, d, want) in cases {
        let j = model_ideal(model, &gens);
        let r = bezout_check(model, &j, d).map_err(|e| e.to_string())?;
        if !r.holds {
            return Err(format!("{} {gens:?}: {} > {}", model.name(), r.lhs, r.rhs));
        }
        if let Some((l, rr)) = want {
            if r.lhs != l || r.rhs != rr {
                return Err(format!("{} {gens:?}: {} ≤ {}, expected {l} ≤ {rr}", model.name(), r.lhs, r.rhs));
            }
        }
        n += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x29);
    let mut translated = 0;
    for model in [&gm, &b] {
        let (_, inst) = builtin_instances(model).map_err(|e| e.to_string())?;
        for s in &inst {
            for comp in components(&s.i.sum(model.ig()).unwrap()).map_err(|e| e.to_string())? {
                for side in [Side::Left, Side::Right] {
                    let g = model.random_point(&mut rng);
                    let t = translate_ideal(model, &comp.prime, &g, side).map_err(|e| e.to_string())?;
                    let d = t.dim_degree().map_err(|e| e.to_string())?;
                    if d.degree != comp.degree || d.dim != comp.dim {
                        return Err(format!("degree changed under translation by {g}"));
                    }
                    translated += 1;
                }
            }
        }
    }
    if translated < 5 {
        return Err(format!("only {translated} translated varieties"));
    }
    Ok(format!("{n} intersections in P¹ and P⁴ (double-point equality 2 = 2), degree invariance on {translated} translates"))
}

fn degree_discipline() -> Outcome {
    // a sweep of its own on top of everything generated by the criteria above
    let mut extra = 0;
    for model in [make_gm(), make_borel2(), make_gl2()] {
        let (sub, inst) = builtin_instances(&model).map_err(|e| e.to_string())?;
        for s in &inst {
            for t in 0..=3 {
                for side in [Side::Left, Side::Right] {
                    multest::calculus::partial_ideal(&model, &sub, &s.i, &s.g, t, side).map_err(|e| e.to_string())?;
                    extra += 1;
                }
            }
        }
    }
    let (audited, over) = degree_audit();
    if over > 0 {
        return Err(format!("{over} of {audited} derivative ideals exceed c5²·max(D, c7)"));
    }
    Ok(format!("{audited} derivative ideals (including a T ≤ 3 sweep of {extra} on gm, borel2, gl2), none above c5²·max(D, c7)"))
}

fn run_bin(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_multest")).args(args).output().expect("run multest");
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn determinism() -> Outcome {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/scenarios");
    let seed = SEED.to_string();
    let runs: Vec<Vec<String>> = vec![
        vec!["verify".into(), "--builtin-suite".into(), "gm".into()],
        vec!["verify".into(), "--builtin-suite".into(), "borel2".into()],
        vec!["search".into(), "--scenario".into(), format!("{dir}/flagship_gm.toml"), "--seed".into(), seed.clone()],
        vec!["search".into(), "--scenario".into(), format!("{dir}/borel_theorem4.toml"), "--seed".into(), seed.clone()],
        vec!["constants".into(), "--model".into(), "gl2".into()],
    ];
    let mut bytes = 0;
    for args in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = run_bin(&args);
        let b = run_bin(&args);
        if a != b {
            return Err(format!("{args:?} differs between runs"));
        }
        bytes += a.len();
    }
    let a = serde_json::to_string(&chain_search(&borel_scenario()).unwrap()).unwrap();
    let b = serde_json::to_string(&chain_search(&borel_scenario()).unwrap()).unwrap();
    if a != b {
        return Err("in-process search reports differ".into());
    }
    Ok(format!("{} commands run twice, {bytes} identical bytes; in-process reports identical", runs.len()))
}

fn main() -> ExitCode {
    let criteria: Vec<(u32, &str, u64, fn() -> Outcome)> = vec![
        (1, "interesting-part algebra", 10, in_operator),
        (2, "translation laws", 30, translation_laws),
        (3, "four-fold jet equality", 300, jets),
        (4, "mixed laws", 300, mixed_laws),
        (5, "order oracle agreement", 120, oracle_agreement),
        (6, "flagship equality case", 10, flagship),
        (7, "noncommutative subgroup run", 600, borel_theorem4),
        (8, "Bezout and translate degrees", 60, bezout_and_degrees),
        (9, "derivative degree discipline", 600, degree_discipline),
        (10, "determinism", 600, determinism),
    ];
    let mut failed = 0;
    for (n, name, limit, f) in criteria {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let took = start.elapsed();
        let limit = Duration::from_secs(limit);
        let (ok, detail) = match out {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {n:>2}: {} {name} [{:.2}s / {}s] {detail}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
