//! Normal core `⋂_g gVg⁻¹` and right stabilizers of subvarieties.

use multest_algebra::{Ideal, Polynomial};
use rand::Rng;
use serde::Serialize;

use super::geometry::components_through;
use super::symbolic::{maps_into, GenericElement};
use crate::calculus::translate_ideal;
use crate::error::{Error, Result};
use crate::model::{GroupModel, GroupPoint, Side};

/// Largest number of variables for which the symbolic certificate is attempted.
pub const SYMBOLIC_VAR_BUDGET: usize = 12;

/// `g·𝒵(v)·g⁻¹`.
pub fn conjugate_ideal(model: &GroupModel, v: &Ideal, g: &GroupPoint) -> Result<Ideal> {
    let left = translate_ideal(model, v, &model.inv(g)?, Side::Left)?;
    translate_ideal(model, &left, g, Side::Right)
}

/// How conjugation invariance of a variety was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Invariance {
    /// Checked with a generic group element.
    Certified,
    /// Only random conjugations were checked.
    UnverifiedInvariance,
}

/// Exact test of `g·𝒵(w)·g⁻¹ ⊆ 𝒵(w)` for all `g ∈ G`; `None` when the ring
/// would exceed [`SYMBOLIC_VAR_BUDGET`] or no chart applies.
pub fn conjugation_invariant(model: &GroupModel, w: &Ideal) -> Result<Option<bool>> {
    if model.nvars() + model.n() > SYMBOLIC_VAR_BUDGET {
        return Ok(None);
    }
    let generic = GenericElement::new(model)?;
    match generic.conjugation(model, w)? {
        Some(images) => Ok(Some(maps_into(w, &images, generic.np)?)),
        None => Ok(None),
    }
}

#[derive(Clone, Debug)]
pub struct NormalCore {
    /// Component through `φ(1)` of the intersection of the sampled conjugates.
    pub ideal: Ideal,
    pub rounds: usize,
    pub samples: usize,
    pub invariance: Invariance,
}

/// `W`: the component through `φ(1)` of `⋂_g gVg⁻¹`, sampled in rounds of
/// `per_round` random elements until a full round changes nothing.
pub fn normal_core<R: Rng>(model: &GroupModel, v: &Ideal, rng: &mut R, per_round: usize, max_rounds: usize) -> Result<NormalCore> {
    let one = model.identity().projective().clone();
    if !v.vanishes_at(one.coords())? {
        return Err(Error::Domain("the variety does not contain the identity".into()));
    }
    let mut acc = v.clone();
    let mut samples = 0;
    for round in 1..=max_rounds {
        let mut changed = false;
        for _ in 0..per_round {
            let g = model.random_point(rng);
            samples += 1;
            let c = conjugate_ideal(model, v, &g)?;
            let mut inside = true;
            for f in c.generators() {
                if !acc.radical_contains(f)? {
                    inside = false;
                    break;
                }
            }
            if !inside {
                acc = acc.sum(&c)?;
                changed = true;
            }
        }
        if changed {
            continue;
        }
        let comp = components_through(&acc, &one)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::Domain("the identity fell out of the core".into()))?;
        let w = comp.prime;
        return match conjugation_invariant(model, &w)? {
            Some(true) => Ok(NormalCore { ideal: w, rounds: round, samples, invariance: Invariance::Certified }),
            Some(false) => continue,
            None => Ok(NormalCore { ideal: w, rounds: round, samples, invariance: Invariance::UnverifiedInvariance }),
        };
    }
    Err(Error::Resource(format!("normal core did not stabilize within {max_rounds} rounds (unverified-invariance)")))
}

/// Closure in `φ(Ḡ)` of `{g(p) : constraints(p) = 0, det ≠ 0}`.
pub fn closure_of_locus(model: &GroupModel, constraints: &[Polynomial]) -> Result<Ideal> {
    let np = model.n();
    let affine = model.affine_image(&model.param_entries(), np);
    let nv = model.nvars();
    let total = nv + np;
    let x0 = Polynomial::var(total, 0);
    let mut gens = Vec::new();
    for (k, f) in affine.iter().enumerate().skip(1) {
        gens.push(&Polynomial::var(total, k) - &(&x0 * &f.embed(total, nv)));
    }
    gens.extend(constraints.iter().map(|c| c.embed(total, nv)));
    let det = super::symbolic::poly_det(
        &model.param_entries().iter().map(|e| e.embed(total, nv)).collect::<Vec<_>>(),
        model.spec().m,
    );
    let graph = Ideal::new(total, gens)?.saturate_poly(&det)?;
    let params: Vec<usize> = (nv..total).collect();
    let image = graph.eliminate(&params)?.truncate(nv)?;
    Ok(image.saturate_var(0)?.reduced()?)
}

/// Parameter equations of `{h : 𝒵(w)·h ⊆ 𝒵(w)}`.
pub fn stabilizer_equations(model: &GroupModel, w: &Ideal) -> Result<Vec<Polynomial>> {
    let generic = GenericElement::new(model)?;
    let images = generic
        .right_translation(model, w)?
        .ok_or_else(|| Error::Unsupported("no right chart is defined generically on the variety".into()))?;
    let np = generic.np;
    let nv = generic.nv;
    let wx = w.extend(np);
    let mut eqs = Vec::new();
    for f in w.generators() {
        let r = wx.normal_form(&f.substitute(&images)?)?;
        // coefficients of the x-monomials, as polynomials in the parameters
        let mut by_x: std::collections::BTreeMap<Vec<u32>, Polynomial> = std::collections::BTreeMap::new();
        for (m, c) in r.terms() {
            let key = m.exps()[..nv].to_vec();
            let pexp: Vec<u32> = m.exps()[nv..].to_vec();
            let term = Polynomial::term(multest_algebra::Monomial::new(&pexp), c.clone());
            let e = by_x.entry(key).or_insert_with(|| Polynomial::zero(np));
            *e = &*e + &term;
        }
        eqs.extend(by_x.into_values().filter(|p| !p.is_zero()));
    }
    Ok(eqs)
}

#[derive(Clone, Debug)]
pub struct Stabilizer {
    /// Ideal of the closure of `H'`.
    pub full: Ideal,
    /// Ideal of the closure of the identity component `H`.
    pub identity_component: Ideal,
    pub dim: i64,
    pub degree: u64,
}

/// `H' = {h : W·h = W}` and its identity component, as closures in `φ(Ḡ)`.
pub fn stabilizer(model: &GroupModel, w: &Ideal) -> Result<Stabilizer> {
    let eqs = stabilizer_equations(model, w)?;
    let full = closure_of_locus(model, &eqs)?;
    let one = model.identity().projective().clone();
    let comp = components_through(&full, &one)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Domain("the stabilizer does not contain the identity".into()))?;
    Ok(Stabilizer { full, identity_component: comp.prime, dim: comp.dim, degree: comp.degree })
}

/// Whether the ideal equals the closure of one of the model's declared
/// subgroups; returns that subgroup's name.
pub fn match_declared_subgroup(model: &GroupModel, h: &Ideal) -> Result<Option<String>> {
    for s in &model.spec().subgroups {
        let ideal = model.orbit_ideal(model.identity(), s)?;
        if ideal.equals(h)? {
            return Ok(Some(s.name.clone()));
        }
    }
    Ok(None)
}

/// Random points of a declared subgroup.
pub fn subgroup_points<R: Rng>(model: &GroupModel, name: &str, count: usize, rng: &mut R) -> Result<Vec<GroupPoint>> {
    let spec = model
        .spec()
        .subgroups
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::Domain(format!("no subgroup {name}")))?;
    let m = model.spec().m;
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count.max(1) {
        attempts += 1;
        let params: Vec<multest_algebra::Scalar> =
            (0..spec.params).map(|_| multest_algebra::scalar::int(rng.gen_range(-4..=4))).collect();
        let mut matrix = multest_algebra::Matrix::zeros(m, m);
        for (idx, e) in spec.entries.iter().enumerate() {
            matrix[(idx / m, idx % m)] = e.evaluate(&params)?;
        }
        if let Ok(p) = model.point_from_matrix(matrix) {
            out.push(p);
        }
    }
    Ok(out)
}
