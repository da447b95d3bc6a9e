//! Executable checks of the ideal identities: each check computes both sides
//! independently and compares reduced bases or normal forms.

use std::fmt;

use multest_algebra::{Ideal, Polynomial, Scalar};

use super::{
    interesting_part, jet_ideal, max_generator_degree, partial_degree_bound, partial_ideal, translate_ideal, JetVariant,
    Operators,
};
use crate::error::Result;
use crate::model::{GroupModel, GroupPoint, LieSubalgebra, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub identity: String,
    pub instance: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub model: String,
    pub outcomes: Vec<Outcome>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&Outcome> {
        self.outcomes.iter().filter(|o| o.status == Status::Fail).collect()
    }

    pub fn count(&self, status: Status) -> usize {
        self.outcomes.iter().filter(|o| o.status == status).count()
    }
}

/// Data for one run of the suite.
#[derive(Clone, Debug)]
pub struct SuiteInstance {
    pub label: String,
    pub i: Ideal,
    pub j: Ideal,
    pub g: GroupPoint,
    pub h: GroupPoint,
    pub t: u32,
    pub t2: u32,
}

/// Result of a single identity: pass/fail with a short explanation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn from_bool(ok: bool, detail: impl Into<String>) -> Check {
        Check { status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into() }
    }

    fn skip(detail: impl Into<String>) -> Check {
        Check { status: Status::Skip, detail: detail.into() }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

fn all_equal(ideals: &[&Ideal]) -> Result<bool> {
    for w in ideals.windows(2) {
        if !w[0].equals(w[1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn point_ideal(model: &GroupModel, g: &GroupPoint) -> Result<Ideal> {
    Ok(Ideal::new(model.nvars(), g.projective().ideal_generators())?)
}

/// An ideal with empty zero set: a power of the irrelevant ideal plus a form.
pub fn empty_zero_set_ideal(nvars: usize) -> Result<Ideal> {
    let irr = Ideal::irrelevant(nvars).power(2)?;
    Ok(irr.with_generators([Polynomial::var(nvars, 0).pow(3) - Polynomial::var(nvars, nvars - 1).pow(3)])?)
}

pub fn in_empty_factor(i: &Ideal, empty: &Ideal) -> Result<Check> {
    if !empty.zero_set_empty()? {
        return Ok(Check::skip("auxiliary ideal has a nonempty zero set"));
    }
    let a = interesting_part(i)?;
    let b = interesting_part(&i.intersect(empty)?)?;
    let c = interesting_part(&i.product(empty)?)?;
    Ok(Check::from_bool(all_equal(&[&a, &b, &c])?, "In(I) = In(I∩J) = In(IJ)"))
}

pub fn in_intersection(i: &Ideal, j: &Ideal) -> Result<Check> {
    let lhs = interesting_part(&i.intersect(j)?)?;
    let rhs = interesting_part(i)?.intersect(&interesting_part(j)?)?;
    Ok(Check::from_bool(lhs.equals(&rhs)?, "In(I∩J) = In(I)∩In(J)"))
}

/// Sum law in the corrected form `In(I+J) = In(In(I) + In(J))`.
pub fn in_sum(i: &Ideal, j: &Ideal) -> Result<Check> {
    let lhs = interesting_part(&i.sum(j)?)?;
    let rhs = interesting_part(&interesting_part(i)?.sum(&interesting_part(j)?)?)?;
    Ok(Check::from_bool(lhs.equals(&rhs)?, "In(I+J) = In(In(I)+In(J))"))
}

pub fn in_idempotent(i: &Ideal) -> Result<Check> {
    let a = interesting_part(i)?;
    let b = interesting_part(&a)?;
    Ok(Check::from_bool(a.equals(&b)?, "In(In(I)) = In(I)"))
}

/// `𝒵(In(I)) = 𝒵(I)`: `I ⊆ In(I)` and every `x_i·f`, `f ∈ In(I)`, lies in `√I`.
pub fn in_zero_set(i: &Ideal) -> Result<Check> {
    let a = interesting_part(i)?;
    if !i.is_subset_of(&a)? {
        return Ok(Check::from_bool(false, "I is not contained in In(I)"));
    }
    let n = i.nvars();
    for f in a.generators() {
        for v in 0..n {
            if !i.radical_contains(&(f * &Polynomial::var(n, v)))? {
                return Ok(Check::from_bool(false, "a generator of In(I) does not vanish on Z(I)"));
            }
        }
    }
    Ok(Check::from_bool(true, "Z(In(I)) = Z(I)"))
}

/// `In(I, J) = In(I, F·J)` for `𝒵(F) = ∅`.
pub fn in_empty_multiplier(i: &Ideal, j: &Ideal, f: &Ideal) -> Result<Check> {
    let lhs = interesting_part(&i.sum(j)?)?;
    let rhs = interesting_part(&i.sum(&f.product(j)?)?)?;
    Ok(Check::from_bool(lhs.equals(&rhs)?, "In(I, J) = In(I, F·J)"))
}

/// Translating the ideal of `φ(z)` gives the ideal of `φ(g⁻¹z)` (left) or `φ(zg⁻¹)` (right).
pub fn point_translation(model: &GroupModel, z: &GroupPoint, g: &GroupPoint) -> Result<Check> {
    let iz = point_ideal(model, z)?;
    let ginv = model.inv(g)?;
    let left = translate_ideal(model, &iz, g, Side::Left)?;
    let right = translate_ideal(model, &iz, g, Side::Right)?;
    let el = point_ideal(model, &model.mul(&ginv, z))?;
    let er = point_ideal(model, &model.mul(z, &ginv))?;
    Ok(Check::from_bool(left.equals(&el)? && right.equals(&er)?, "Z(T_{L_g} I) = g⁻¹Z(I), Z(T_{R_g} I) = Z(I)g⁻¹"))
}

pub fn translate_in(model: &GroupModel, i: &Ideal, g: &GroupPoint) -> Result<Check> {
    let ini = interesting_part(i)?;
    let mut ok = true;
    for side in [Side::Left, Side::Right] {
        ok &= translate_ideal(model, &ini, g, side)?.equals(&translate_ideal(model, i, g, side)?)?;
    }
    Ok(Check::from_bool(ok, "T_g(In(I)) = T_g(I) on both sides"))
}

pub fn left_composition(model: &GroupModel, i: &Ideal, g: &GroupPoint, h: &GroupPoint) -> Result<Check> {
    let lhs = translate_ideal(model, &translate_ideal(model, i, g, Side::Left)?, h, Side::Left)?;
    let rhs = translate_ideal(model, i, &model.mul(g, h), Side::Left)?;
    Ok(Check::from_bool(lhs.equals(&rhs)?, "T_{L_h}T_{L_g} = T_{L_{gh}}"))
}

pub fn right_composition(model: &GroupModel, i: &Ideal, g: &GroupPoint, h: &GroupPoint) -> Result<Check> {
    let lhs = translate_ideal(model, &translate_ideal(model, i, g, Side::Right)?, h, Side::Right)?;
    let rhs = translate_ideal(model, i, &model.mul(h, g), Side::Right)?;
    Ok(Check::from_bool(lhs.equals(&rhs)?, "T_{R_h}T_{R_g} = T_{R_{hg}}"))
}

pub fn left_right_commute(model: &GroupModel, i: &Ideal, g: &GroupPoint, h: &GroupPoint) -> Result<Check> {
    let lhs = translate_ideal(model, &translate_ideal(model, i, g, Side::Left)?, h, Side::Right)?;
    let rhs = translate_ideal(model, &translate_ideal(model, i, h, Side::Right)?, g, Side::Left)?;
    Ok(Check::from_bool(lhs.equals(&rhs)?, "T_{R_h}T_{L_g} = T_{L_g}T_{R_h}"))
}

pub fn identity_translation(model: &GroupModel, i: &Ideal) -> Result<Check> {
    let one = model.identity();
    let l = translate_ideal(model, i, one, Side::Left)?;
    let r = translate_ideal(model, i, one, Side::Right)?;
    let mid = interesting_part(&i.sum(model.ig())?)?;
    Ok(Check::from_bool(all_equal(&[&l, &mid, &r])?, "T_{L_1}(I) = In(I, I(G)) = T_{R_1}(I)"))
}

/// The chart-change relation for `P^Δ_k`, exactly modulo `I(Ḡ)`, for every
/// generator, basis element of `𝔟` and pair `(k, l)`.
pub fn chart_change(model: &GroupModel, sub: &LieSubalgebra, i: &Ideal) -> Result<Check> {
    let ops = Operators::new(model, sub);
    let nv = model.nvars();
    let c6 = model.c6();
    for p in i.generators() {
        let deg = Scalar::from_integer(p.degree().unwrap_or(0).into());
        for b in 0..sub.dim() {
            let pk: Vec<Polynomial> = (0..nv).map(|k| ops.b(b, k, p)).collect();
            for k in 0..nv {
                let xk = Polynomial::var(nv, k);
                for l in 0..nv {
                    let xl = Polynomial::var(nv, l);
                    let xk_l = ops.b(b, l, &xk);
                    let e = &(&(&xk.pow(c6 - 1) * &pk[l]) - &(&xl.pow(c6 - 1) * &pk[k]))
                        - &(&(&xk_l * &xk.pow(c6 - 2)) * p).scale(&deg);
                    if !model.ig().contains(&e)? {
                        return Ok(Check::from_bool(false, format!("relation fails for k={k}, l={l}, basis element {b}")));
                    }
                }
            }
        }
    }
    Ok(Check::from_bool(true, "chart-change relation for P^Δ_k holds modulo I(G)"))
}

/// The four jet constructions agree for `t ≤ t_max`.
pub fn jet_agreement(model: &GroupModel, sub: &LieSubalgebra, i: &Ideal, t_max: u32) -> Result<Check> {
    for t in 0..=t_max {
        let ideals: Vec<Ideal> =
            JetVariant::ALL.iter().map(|v| jet_ideal(model, sub, i, t, *v)).collect::<Result<_>>()?;
        for (k, v) in JetVariant::ALL.iter().enumerate().skip(1) {
            if !ideals[k - 1].equals(&ideals[k])? {
                return Ok(Check::from_bool(
                    false,
                    format!("{}^{t} differs from {}^{t}", JetVariant::ALL[k - 1], v),
                ));
            }
        }
    }
    Ok(Check::from_bool(true, format!("B^T = C^T = D^T = E^T for T ≤ {t_max}")))
}

pub fn jet_in(model: &GroupModel, sub: &LieSubalgebra, i: &Ideal, t: u32) -> Result<Check> {
    let a = jet_ideal(model, sub, i, t, JetVariant::E)?;
    let b = jet_ideal(model, sub, &interesting_part(i)?, t, JetVariant::E)?;
    Ok(Check::from_bool(a.equals(&b)?, "E^T(I) = E^T(In(I))"))
}

pub fn jet_composition(model: &GroupModel, sub: &LieSubalgebra, i: &Ideal, t: u32, t2: u32) -> Result<Check> {
    let lhs = jet_ideal(model, sub, i, t + t2, JetVariant::E)?;
    let inner = jet_ideal(model, sub, i, t2, JetVariant::E)?;
    let rhs = jet_ideal(model, sub, &inner, t, JetVariant::E)?;
    Ok(Check::from_bool(lhs.equals(&rhs)?, "E^{T+T'}(I) = E^T(E^{T'}(I))"))
}

/// `∂` ideal together with the generator degree discipline.
fn partial_checked(
    model: &GroupModel,
    sub: &LieSubalgebra,
    i: &Ideal,
    g: &GroupPoint,
    t: u32,
    side: Side,
    degrees: &mut Vec<String>,
) -> Result<Ideal> {
    let out = partial_ideal(model, sub, i, g, t, side)?;
    let bound = partial_degree_bound(model, i);
    let got = max_generator_degree(&out);
    if got > bound {
        degrees.push(format!("∂^{t}_{side} at {g}: degree {got} > {bound}"));
    }
    Ok(out)
}

fn degree_note(degrees: &[String]) -> Option<Check> {
    if degrees.is_empty() {
        None
    } else {
        Some(Check::from_bool(false, degrees.join("; ")))
    }
}

/// Left three-way equality `T_{L_g}(E^T I) = In(∂^T_{L_g} I) = E^T(T_{L_g} I)`.
pub fn left_mixed(model: &GroupModel, sub: &LieSubalgebra, i: &Ideal, g: &GroupPoint, t: u32) -> Result<Check> {
    let mut degrees = Vec::new();
    let a = translate_ideal(model, &jet_ideal(model, sub, i, t, JetVariant::E)?, g, Side::Left)?;
    let b = interesting_part(&partial_checked(model, sub, i, g, t, Side::Left, &mut degrees)?)?;
    let c = jet_ideal(model, sub, &translate_ideal(model, i, g, Side::Left)?, t, JetVariant::E)?;
    if let Some(fail) = degree_note(&degrees) {
        return Ok(fail);
    }
    Ok(Check::from_bool(all_equal(&[&a, &b, &c])?, "T_{L_g}(E^T I) = In(∂^T_{L_g} I) = E^T(T_{L_g} I)"))
}

/// Right analog, meaningful when `Ad(g)𝔟 ⊆ 𝔟`.
pub fn right_mixed(model: &GroupModel, sub: &LieSubalgebra, i: &Ideal, g: &GroupPoint, t: u32) -> Result<Check> {
    if !model.ad_stable(g, sub)? {
        return Ok(Check::skip(format!("Ad({g}) does not preserve the subalgebra")));
    }
    let mut degrees = Vec::new();
    let a = translate_ideal(model, &jet_ideal(model, sub, i, t, JetVariant::E)?, g, Side::Right)?;
    let b = interesting_part(&partial_checked(model, sub, i, g, t, Side::Right, &mut degrees)?)?;
    let c = jet_ideal(model, sub, &translate_ideal(model, i, g, Side::Right)?, t, JetVariant::E)?;
    if let Some(fail) = degree_note(&degrees) {
        return Ok(fail);
    }
    Ok(Check::from_bool(all_equal(&[&a, &b, &c])?, "T_{R_g}(E^T I) = In(∂^T_{R_g} I) = E^T(T_{R_g} I)"))
}

pub fn left_partial_composition(
    model: &GroupModel,
    sub: &LieSubalgebra,
    i: &Ideal,
    g: &GroupPoint,
    h: &GroupPoint,
    t: u32,
    t2: u32,
) -> Result<Check> {
    let mut degrees = Vec::new();
    let inner = partial_checked(model, sub, i, g, t, Side::Left, &mut degrees)?;
    let lhs = interesting_part(&partial_checked(model, sub, &inner, h, t2, Side::Left, &mut degrees)?)?;
    let rhs = interesting_part(&partial_checked(model, sub, i, &model.mul(g, h), t + t2, Side::Left, &mut degrees)?)?;
    if let Some(fail) = degree_note(&degrees) {
        return Ok(fail);
    }
    Ok(Check::from_bool(lhs.equals(&rhs)?, "In(∂^{T'}_{L_h}∂^T_{L_g} I) = In(∂^{T+T'}_{L_{gh}} I)"))
}

pub fn right_partial_composition(
    model: &GroupModel,
    sub: &LieSubalgebra,
    i: &Ideal,
    g: &GroupPoint,
    h: &GroupPoint,
    t: u32,
    t2: u32,
) -> Result<Check> {
    if !model.ad_stable(g, sub)? || !model.ad_stable(h, sub)? {
        return Ok(Check::skip("right translation by a point that does not normalize the subalgebra"));
    }
    let mut degrees = Vec::new();
    let inner = partial_checked(model, sub, i, g, t, Side::Right, &mut degrees)?;
    let lhs = interesting_part(&partial_checked(model, sub, &inner, h, t2, Side::Right, &mut degrees)?)?;
    let rhs = interesting_part(&partial_checked(model, sub, i, &model.mul(h, g), t + t2, Side::Right, &mut degrees)?)?;
    if let Some(fail) = degree_note(&degrees) {
        return Ok(fail);
    }
    Ok(Check::from_bool(lhs.equals(&rhs)?, "In(∂^{T'}_{R_h}∂^T_{R_g} I) = In(∂^{T+T'}_{R_{hg}} I)"))
}

pub fn partial_commute(
    model: &GroupModel,
    sub: &LieSubalgebra,
    i: &Ideal,
    g: &GroupPoint,
    h: &GroupPoint,
    t: u32,
    t2: u32,
) -> Result<Check> {
    if !model.ad_stable(h, sub)? {
        return Ok(Check::skip("right translation by a point that does not normalize the subalgebra"));
    }
    let mut degrees = Vec::new();
    let a = partial_checked(model, sub, i, g, t, Side::Left, &mut degrees)?;
    let lhs = interesting_part(&partial_checked(model, sub, &a, h, t2, Side::Right, &mut degrees)?)?;
    let b = partial_checked(model, sub, i, h, t2, Side::Right, &mut degrees)?;
    let rhs = interesting_part(&partial_checked(model, sub, &b, g, t, Side::Left, &mut degrees)?)?;
    if let Some(fail) = degree_note(&degrees) {
        return Ok(fail);
    }
    Ok(Check::from_bool(lhs.equals(&rhs)?, "In(∂^{T'}_{R_h}∂^T_{L_g} I) = In(∂^T_{L_g}∂^{T'}_{R_h} I)"))
}

/// Runs every identity on every instance.
pub fn identity_suite(model: &GroupModel, sub: &LieSubalgebra, instances: &[SuiteInstance]) -> Result<IdentityReport> {
    let mut report = IdentityReport { model: model.name().to_string(), outcomes: Vec::new() };
    let empty = empty_zero_set_ideal(model.nvars())?;
    for inst in instances {
        let mut push = |name: &str, c: Check| {
            report.outcomes.push(Outcome {
                identity: name.to_string(),
                instance: inst.label.clone(),
                status: c.status,
                detail: c.detail,
            })
        };
        let (i, j, g, h, t, t2) = (&inst.i, &inst.j, &inst.g, &inst.h, inst.t, inst.t2);
        push("in-empty-factor", in_empty_factor(i, &empty)?);
        push("in-intersection", in_intersection(i, j)?);
        push("in-sum", in_sum(i, j)?);
        push("in-idempotent", in_idempotent(i)?);
        push("in-zero-set", in_zero_set(i)?);
        push("in-empty-multiplier", in_empty_multiplier(i, j, &empty)?);
        push("point-translation", point_translation(model, h, g)?);
        push("translate-in", translate_in(model, i, g)?);
        push("left-composition", left_composition(model, i, g, h)?);
        push("right-composition", right_composition(model, i, g, h)?);
        push("left-right-commute", left_right_commute(model, i, g, h)?);
        push("identity-translation", identity_translation(model, i)?);
        push("chart-change", chart_change(model, sub, i)?);
        push("jet-agreement", jet_agreement(model, sub, i, t)?);
        push("jet-in", jet_in(model, sub, i, t)?);
        push("jet-composition", jet_composition(model, sub, i, t, t2)?);
        push("left-mixed", left_mixed(model, sub, i, g, t)?);
        push("right-mixed", right_mixed(model, sub, i, g, t)?);
        push("left-partial-composition", left_partial_composition(model, sub, i, g, h, t, t2)?);
        push("right-partial-composition", right_partial_composition(model, sub, i, g, h, t, t2)?);
        push("partial-commute", partial_commute(model, sub, i, g, h, t, t2)?);
    }
    Ok(report)
}

fn ideal(model: &GroupModel, gens: &[&str]) -> Result<Ideal> {
    let names = model.names();
    let polys = gens
        .iter()
        .map(|s| multest_algebra::parse_polynomial(s, &names))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(Ideal::new(model.nvars(), polys)?)
}

/// The canonical instance set of a built-in model and the subalgebra it uses.
pub fn builtin_instances(model: &GroupModel) -> Result<(LieSubalgebra, Vec<SuiteInstance>)> {
    let p = |v: &[i64]| model.point_from_ints(v);
    match model.name() {
        "gm" => {
            let sub = model.subalgebra("full")?;
            let ideals = [
                ideal(model, &["(x1-x0)^2"])?,
                ideal(model, &["(x1-x0)*(x1-2*x0)"])?,
                ideal(model, &["x0*x1^2"])?,
                ideal(model, &["(x1-x0)^3"])?,
            ];
            let js = [ideal(model, &["x1-3*x0"])?, ideal(model, &["x1^2-x0*x1"])?];
            let pts = [(2, 3), (-1, 2), (3, 1), (1, -2)];
            let mut out = Vec::new();
            for (n, i) in ideals.iter().enumerate() {
                let (g, h) = pts[n % pts.len()];
                out.push(SuiteInstance {
                    label: format!("gm-{n}"),
                    i: i.clone(),
                    j: js[n % js.len()].clone(),
                    g: p(&[g])?,
                    h: p(&[h])?,
                    t: 2,
                    t2: 1,
                });
            }
            Ok((sub, out))
        }
        "borel2" => {
            let sub = model.subalgebra("unipotent")?;
            let ideals = [
                ideal(model, &["x1^2 - x0*x1 - x0*x4"])?,
                ideal(model, &["x2 - x0", "x1*x4 - x0^2"])?,
                ideal(model, &["(x1 - x0)^2"])?,
            ];
            let js = [ideal(model, &["x4 - 2*x0"])?, ideal(model, &["x2 - x1"])?];
            let pts = [([2, 1, 1], [1, 3, -1]), ([1, -1, 3], [-2, 1, 1]), ([1, 2, 1], [3, 0, 2])];
            let mut out = Vec::new();
            for (n, i) in ideals.iter().enumerate() {
                let (g, h) = pts[n % pts.len()];
                out.push(SuiteInstance {
                    label: format!("borel2-{n}"),
                    i: i.clone(),
                    j: js[n % js.len()].clone(),
                    g: p(&g)?,
                    h: p(&h)?,
                    t: 1,
                    t2: 1,
                });
            }
            Ok((sub, out))
        }
        "gl2" => {
            let sub = model.subalgebra("unipotent")?;
            let ideals = [ideal(model, &["x1*x4 - x2*x3"])?, ideal(model, &["x2 - x0", "x3 - x0"])?];
            let js = [ideal(model, &["x1 - x4"])?];
            let pts = [([1, 1, 0, 1], [2, 0, 0, 1]), ([1, 0, 1, 1], [1, 2, 0, 1])];
            let mut out = Vec::new();
            for (n, i) in ideals.iter().enumerate() {
                let (g, h) = pts[n % pts.len()];
                out.push(SuiteInstance {
                    label: format!("gl2-{n}"),
                    i: i.clone(),
                    j: js[n % js.len()].clone(),
                    g: p(&g)?,
                    h: p(&h)?,
                    t: 1,
                    t2: 1,
                });
            }
            Ok((sub, out))
        }
        other => Err(crate::error::Error::Unsupported(format!("no built-in instance set for model {other}"))),
    }
}
