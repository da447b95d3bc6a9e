//! Obstruction search: the ideal chains behind the four multiplicity
//! estimates, pigeonhole selection of a component through `φ(1)`, the normal
//! core and stabilizer for the subgroup versions, and exact verification of
//! the final inequality.

pub mod geometry;
pub mod group;
pub mod symbolic;

use std::fmt;

use multest_algebra::{Ideal, Polynomial};
use num::bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::calculus::{max_generator_degree, partial_degree_bound, partial_ideal, span_basis};
use crate::error::{Error, Result};
use crate::model::{GroupModel, GroupPoint, LieSubalgebra, Side};
use crate::order::{check_outside_ig, ord_direct, product_set, OrderResult};
use geometry::{binomial, bezout_check, components, components_through, cosets, length_at_point, separating_polynomial, tau, Component};
use group::{conjugate_ideal, conjugation_invariant, match_declared_subgroup, normal_core, stabilizer, subgroup_points, Invariance};

fn big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Model constants entering the four inequalities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constants {
    pub n: u32,
    pub c5: u32,
    pub c6: u32,
    pub c7: u32,
    pub deg_g: u64,
    #[serde(serialize_with = "big")]
    pub c1: BigInt,
    #[serde(serialize_with = "big")]
    pub c2: BigInt,
    #[serde(serialize_with = "big")]
    pub c3: BigInt,
    #[serde(serialize_with = "big")]
    pub c4: BigInt,
}

impl Constants {
    pub fn from_parts(n: u32, c5: u32, c6: u32, c7: u32, deg_g: u64) -> Constants {
        let c5b = BigInt::from(c5);
        let base = BigInt::from(c7).pow(n) * BigInt::from(deg_g);
        let c12 = c5b.pow(2 * n) * &base;
        let c34 = c5b.pow(3 * n) * &base;
        Constants { n, c5, c6, c7, deg_g, c1: c12.clone(), c2: c12, c3: c34.clone(), c4: c34 }
    }

    pub fn for_theorem(&self, t: Theorem) -> &BigInt {
        match t {
            Theorem::One => &self.c1,
            Theorem::Two => &self.c2,
            Theorem::Three => &self.c3,
            Theorem::Four => &self.c4,
        }
    }
}

pub fn constants(model: &GroupModel) -> Constants {
    Constants::from_parts(model.n() as u32, model.c5(), model.c6(), model.c7(), model.deg_g())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    One,
    Two,
    Three,
    Four,
}

impl Theorem {
    pub fn from_number(k: u32) -> Result<Theorem> {
        match k {
            1 => Ok(Theorem::One),
            2 => Ok(Theorem::Two),
            3 => Ok(Theorem::Three),
            4 => Ok(Theorem::Four),
            _ => Err(Error::Parse(format!("theorem must be 1, 2, 3 or 4, got {k}"))),
        }
    }

    pub fn number(self) -> u32 {
        match self {
            Theorem::One => 1,
            Theorem::Two => 2,
            Theorem::Three => 3,
            Theorem::Four => 4,
        }
    }

    /// Derivative ideals are left-sided for the variety versions, right-sided
    /// for the subgroup versions.
    pub fn side(self) -> Side {
        match self {
            Theorem::One | Theorem::Two => Side::Left,
            Theorem::Three | Theorem::Four => Side::Right,
        }
    }

    pub fn uses_separators(self) -> bool {
        matches!(self, Theorem::One | Theorem::Three)
    }

    pub fn subgroup(self) -> bool {
        matches!(self, Theorem::Three | Theorem::Four)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl Serialize for Theorem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.number())
    }
}

/// Inputs of one search.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub model: GroupModel,
    pub p: Polynomial,
    pub sub: LieSubalgebra,
    pub sigma1: Vec<GroupPoint>,
    pub s: u32,
    pub t: u32,
    pub d: u32,
    pub d0: u32,
    pub theorem: Theorem,
    pub seed: u64,
    /// Random conjugations per normal-core round.
    pub core_samples: usize,
    pub core_rounds: usize,
}

impl Scenario {
    pub fn n(&self) -> u32 {
        self.model.n() as u32
    }

    /// `Σ_{i=0}^S (|Σ₁| − 1)^i`
    pub fn separator_degree(&self) -> BigInt {
        let base = BigInt::from(self.sigma1.len().saturating_sub(1));
        (0..=self.s).map(|i| base.pow(i)).sum()
    }
}

/// Order at one point of `Σ_S`, recorded while checking the hypotheses.
#[derive(Clone, Debug, Serialize)]
pub struct PointOrder {
    pub point: String,
    pub order: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct HypothesisReport {
    pub orders: Vec<PointOrder>,
    /// `Σ (|Σ₁|−1)^i ≤ D`, for theorems 1 and 3.
    pub separator_degree: Option<String>,
    /// `Ad(g)(𝔟) ⊆ 𝔟` for `g ∈ Σ₁`, theorems 3 and 4.
    pub ad_stable: Option<bool>,
}

/// Gate on the hypotheses of the selected theorem; violations are
/// [`Error::Hypothesis`].
pub fn check_hypotheses(sc: &Scenario) -> Result<HypothesisReport> {
    let model = &sc.model;
    check_outside_ig(model, &sc.p)?;
    let deg = sc.p.degree().unwrap_or(0);
    if deg != sc.d {
        return Err(Error::Hypothesis(format!("D = {} but deg P = {deg}", sc.d)));
    }
    if sc.sigma1.is_empty() {
        return Err(Error::Hypothesis("Σ₁ is empty".into()));
    }
    if !sc.sigma1.contains(model.identity()) {
        return Err(Error::Hypothesis("Σ₁ must contain the identity".into()));
    }
    if sc.theorem.uses_separators() && !(1..=sc.n()).contains(&sc.d0) {
        return Err(Error::Hypothesis(format!("d0 = {} must lie in 1..={}", sc.d0, sc.n())));
    }
    let mut orders = Vec::new();
    for g in product_set(model, &sc.sigma1, sc.s) {
        let r = ord_direct(model, &sc.sub, &sc.p, &g, sc.t)?;
        if let OrderResult::Exact { value, .. } = r {
            return Err(Error::Hypothesis(format!("ord at {g} is {value}, below T+1 = {}", sc.t + 1)));
        }
        orders.push(PointOrder { point: g.to_string(), order: r.to_string() });
    }
    let separator_degree = if sc.theorem.uses_separators() {
        let need = sc.separator_degree();
        if need > BigInt::from(sc.d) {
            return Err(Error::Hypothesis(format!("Σ(|Σ₁|−1)^i = {need} exceeds D = {}", sc.d)));
        }
        Some(need.to_string())
    } else {
        None
    };
    let ad_stable = if sc.theorem.subgroup() {
        for g in &sc.sigma1 {
            if !model.ad_stable(g, &sc.sub)? {
                return Err(Error::Hypothesis(format!("Ad({g}) does not preserve 𝔟")));
            }
        }
        Some(true)
    } else {
        None
    };
    Ok(HypothesisReport { orders, separator_degree, ad_stable })
}

/// One ideal of the chain.
#[derive(Clone, Debug, Serialize)]
pub struct ChainStep {
    pub r: u32,
    /// Index of the product set `Σ_s` used at this step.
    pub s: u32,
    /// Derivative order.
    pub t: u32,
    pub generators: usize,
    pub max_degree: u32,
    /// Largest generator degree allowed for the derivative ideals of this step.
    pub degree_bound: u32,
    pub dim: i64,
    /// Largest dimension of a component through `φ(1)`.
    pub d_r: i64,
    pub separators: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Conclusions {
    pub contains_identity: bool,
    pub inside_zero_set_of_p: bool,
    /// `dim ≤ d0`, theorems 1 and 3.
    pub dimension_bound: Option<bool>,
    /// Normality of `H`, theorems 3 and 4.
    pub normal: Option<bool>,
    pub bound: bool,
}

impl Conclusions {
    pub fn all(&self) -> bool {
        self.contains_identity
            && self.inside_zero_set_of_p
            && self.dimension_bound.unwrap_or(true)
            && self.normal.unwrap_or(true)
            && self.bound
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupData {
    /// Component through `φ(1)` of the normal core of the selected component.
    pub core: Vec<String>,
    pub core_rounds: usize,
    pub core_samples: usize,
    pub invariance: Invariance,
    /// Declared subgroup with the same closure, when there is one.
    pub matches: Option<String>,
    /// `𝒵(W)·h = 𝒵(W)` at sample points of `H`.
    pub stabilizes_core: Option<bool>,
    /// Random conjugations of `H̄` that returned the same ideal.
    pub conjugations_checked: usize,
}

/// Result of [`chain_search`].
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub model: String,
    pub theorem: Theorem,
    /// Generators of the prime ideal of `φ(W)` (theorems 1, 2) or `φ(H̄)` (3, 4).
    pub obstruction: Vec<String>,
    pub dim: i64,
    pub deg: u64,
    pub certified_prime: bool,
    pub n: u32,
    pub d: u32,
    pub t_over_n: u32,
    /// Number of distinct cosets `gW` or `Hg` over `Σ_{[S/n]}`.
    pub cosets: usize,
    pub tau: u32,
    #[serde(serialize_with = "big")]
    pub bound_lhs: BigInt,
    #[serde(serialize_with = "big")]
    pub bound_rhs: BigInt,
    pub r0: u32,
    pub chain: Vec<ChainStep>,
    /// Degrees of all distinct cosets agree with `deg φ(W)`.
    pub coset_degrees_equal: bool,
    /// `binom(τ+[T/n], τ) ≤ l(I_{r0})` at each coset, when `W` is a point.
    pub lengths: Option<Vec<u64>>,
    /// Bezout inequality for the chain ideal `I_{r0}` when its zero set is finite.
    pub chain_bezout: Option<bool>,
    pub subgroup: Option<SubgroupData>,
    pub hypotheses: HypothesisReport,
    pub conclusions: Conclusions,
}

struct ChainIdeal {
    ideal: Ideal,
    through_one: Vec<Component>,
    step: ChainStep,
}

fn chain_ideal(sc: &Scenario, r: u32, separators: &[Polynomial]) -> Result<Ideal> {
    let model = &sc.model;
    let n = sc.n();
    let s_r = (r - 1) * sc.s / n;
    let t_r = (r - 1) * sc.t / n;
    let mut input = vec![sc.p.clone()];
    input.extend(separators.iter().cloned());
    let input = Ideal::new(model.nvars(), input)?;
    let bound = partial_degree_bound(model, &input);
    let mut gens = Vec::new();
    for g in product_set(model, &sc.sigma1, s_r) {
        let j = partial_ideal(model, &sc.sub, &input, &g, t_r, sc.theorem.side())?;
        let deg = max_generator_degree(&j);
        if deg > bound {
            return Err(Error::Stability(format!("∂^{t_r} ideal at {g} has a generator of degree {deg} > {bound}")));
        }
        gens.extend(j.generators().iter().cloned());
    }
    Ok(Ideal::new(model.nvars(), span_basis(gens))?)
}

fn describe(sc: &Scenario, r: u32, ideal: Ideal, separators: usize, bound_input: &[Polynomial]) -> Result<ChainIdeal> {
    let n = sc.n();
    let one = sc.model.identity().projective().clone();
    let dim = ideal.dim_degree()?.dim;
    let through_one = components_through(&ideal, &one)?;
    let d_r = through_one.first().map(|c| c.dim).unwrap_or(-1);
    let mut input = vec![sc.p.clone()];
    input.extend(bound_input.iter().cloned());
    let step = ChainStep {
        r,
        s: (r - 1) * sc.s / n,
        t: (r - 1) * sc.t / n,
        generators: ideal.generators().len(),
        max_degree: max_generator_degree(&ideal),
        degree_bound: partial_degree_bound(&sc.model, &Ideal::new(sc.model.nvars(), input)?),
        dim,
        d_r,
        separators,
    };
    Ok(ChainIdeal { ideal, through_one, step })
}

/// Builds `I_1 ⊇ … ⊇ I_{n+1}`, `I_r` generated by the derivative ideals of
/// order `[(r−1)T/n]` at the points of `Σ_{[(r−1)S/n]}` (plus separators for
/// theorems 1 and 3).
fn build_chain(sc: &Scenario) -> Result<Vec<ChainIdeal>> {
    let n = sc.n();
    let mut chain = Vec::with_capacity(n as usize + 1);
    let first = chain_ideal(sc, 1, &[])?;
    chain.push(describe(sc, 1, first, 0, &[])?);
    let sigma_s = product_set(&sc.model, &sc.sigma1, sc.s);
    let mut separators: Vec<Polynomial> = Vec::new();
    for r in 2..=n + 1 {
        let star = chain_ideal(sc, r, &separators)?;
        let used = separators.clone();
        let prev_dim = chain.last().unwrap().step.dim;
        let star_dim = star.dim_degree()?.dim;
        let mut fresh = Vec::new();
        if sc.theorem.uses_separators() && star_dim == prev_dim && star_dim > 0 && (sc.d0 as i64) <= n as i64 - r as i64 {
            for c in components(&star)?.into_iter().filter(|c| c.dim == star_dim) {
                fresh.push(separating_polynomial(&sigma_s, &c.prime)?.pow(sc.t + 1));
            }
        }
        let ideal = if fresh.is_empty() { star } else { star.with_generators(fresh.iter().cloned())? };
        separators.extend(fresh.iter().cloned());
        chain.push(describe(sc, r, ideal, fresh.len(), &used)?);
    }
    Ok(chain)
}

/// Pigeonhole: the first `r0` with `d_{r0} = d_{r0+1}` (and `≤ d0` for
/// theorems 1 and 3), with the shared component through `φ(1)`.
fn select(sc: &Scenario, chain: &[ChainIdeal]) -> Result<(u32, Component)> {
    let n = sc.n();
    let lo = if sc.theorem.uses_separators() { n.saturating_sub(sc.d0).max(1) } else { 1 };
    for r0 in lo..=n {
        let a = &chain[r0 as usize - 1];
        let b = &chain[r0 as usize];
        if a.step.d_r != b.step.d_r || a.step.d_r < 0 {
            continue;
        }
        if sc.theorem.uses_separators() && a.step.d_r > sc.d0 as i64 {
            continue;
        }
        for cb in b.through_one.iter().filter(|c| c.dim == b.step.d_r) {
            for ca in a.through_one.iter().filter(|c| c.dim == a.step.d_r) {
                if ca.prime.equals(&cb.prime)? {
                    return Ok((r0, ca.clone()));
                }
            }
        }
    }
    Err(Error::Stability("no chain step keeps a component through the identity".into()))
}

fn coset_degrees(cosets: &[Ideal], degree: u64) -> Result<bool> {
    for c in cosets {
        if c.dim_degree()?.degree != degree {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs the full search for a scenario whose hypotheses hold.
pub fn chain_search(sc: &Scenario) -> Result<ObstructionReport> {
    let hypotheses = check_hypotheses(sc)?;
    let model = &sc.model;
    let n = sc.n();
    let consts = constants(model);
    let chain = build_chain(sc)?;
    let (r0, comp) = select(sc, &chain)?;
    let sigma = product_set(model, &sc.sigma1, sc.s / n);
    let t_over_n = sc.t / n;
    let one = model.identity().clone();
    let names = model.names();
    let side = sc.theorem.side();

    let (obstruction, dim, deg, certified_prime, subgroup) = if sc.theorem.subgroup() {
        let mut rng = ChaCha8Rng::seed_from_u64(sc.seed);
        let core = normal_core(model, &comp.prime, &mut rng, sc.core_samples, sc.core_rounds)?;
        let st = stabilizer(model, &core.ideal)?;
        let h = st.identity_component.clone();
        let matches = match_declared_subgroup(model, &h)?;
        let stabilizes_core = match &matches {
            Some(name) => {
                let mut ok = true;
                for p in subgroup_points(model, name, 3, &mut rng)? {
                    let t = crate::calculus::translate_ideal(model, &core.ideal, &p, Side::Right)?;
                    ok &= t.equals(&core.ideal)?;
                }
                Some(ok)
            }
            None => None,
        };
        let mut conjugations_checked = 0;
        for _ in 0..3 {
            let g = model.random_point(&mut rng);
            if conjugate_ideal(model, &h, &g)?.equals(&h)? {
                conjugations_checked += 1;
            }
        }
        let data = SubgroupData {
            core: core.ideal.generator_strings(&names),
            core_rounds: core.rounds,
            core_samples: core.samples,
            invariance: core.invariance,
            matches,
            stabilizes_core,
            conjugations_checked,
        };
        (h, st.dim, st.degree, comp.certified, Some(data))
    } else {
        (comp.prime.clone(), comp.dim, comp.degree, comp.certified, None)
    };

    let distinct = cosets(model, &obstruction, &sigma, side)?;
    let coset_degrees_equal = coset_degrees(&distinct, deg)?;
    let tau = tau(model, &obstruction, &sc.sub, &one)?;
    let lhs = BigInt::from(distinct.len()) * binomial((t_over_n + tau) as u64, tau as u64) * BigInt::from(deg);
    let rhs = consts.for_theorem(sc.theorem) * BigInt::from(sc.d).pow((n as i64 - dim).max(0) as u32);

    let chain_ideal = &chain[r0 as usize - 1].ideal;
    let lengths = if dim == 0 && !sc.theorem.subgroup() {
        let mut out = Vec::new();
        for g in &sigma {
            out.push(length_at_point(model, chain_ideal, g.projective())?);
        }
        Some(out)
    } else {
        None
    };
    let chain_bezout = if chain[r0 as usize - 1].step.dim == 0 {
        let cap = model.c7().max(model.c5() * model.c5() * sc.d);
        Some(bezout_check(model, chain_ideal, Some(cap))?.holds)
    } else {
        None
    };

    let normal = match &subgroup {
        Some(data) => {
            let certified = conjugation_invariant(model, &obstruction)?;
            Some(certified.unwrap_or(data.conjugations_checked == 3) && data.conjugations_checked == 3)
        }
        None => None,
    };
    let conclusions = Conclusions {
        contains_identity: obstruction.vanishes_at(one.projective().coords())?,
        inside_zero_set_of_p: obstruction.contains(&sc.p)?,
        dimension_bound: sc.theorem.uses_separators().then_some(dim <= sc.d0 as i64),
        normal,
        bound: lhs <= rhs,
    };
    Ok(ObstructionReport {
        model: model.name().to_string(),
        theorem: sc.theorem,
        obstruction: obstruction.generator_strings(&names),
        dim,
        deg,
        certified_prime,
        n,
        d: sc.d,
        t_over_n,
        cosets: distinct.len(),
        tau,
        bound_lhs: lhs,
        bound_rhs: rhs,
        r0,
        chain: chain.into_iter().map(|c| c.step).collect(),
        coset_degrees_equal,
        lengths,
        chain_bezout,
        subgroup,
        hypotheses,
        conclusions,
    })
}

/// Recomputes the final inequality from the report fields and checks the
/// auxiliary degree and length statements recorded in it.
pub fn verify_bound(report: &ObstructionReport, consts: &Constants) -> bool {
    let lhs = BigInt::from(report.cosets)
        * binomial((report.t_over_n + report.tau) as u64, report.tau as u64)
        * BigInt::from(report.deg);
    let rhs = consts.for_theorem(report.theorem) * BigInt::from(report.d).pow((report.n as i64 - report.dim).max(0) as u32);
    if lhs != report.bound_lhs || rhs != report.bound_rhs || lhs > rhs {
        return false;
    }
    if !report.coset_degrees_equal {
        return false;
    }
    if let Some(lengths) = &report.lengths {
        let need = binomial((report.t_over_n + report.tau) as u64, report.tau as u64);
        if lengths.iter().any(|l| BigInt::from(*l) < need) {
            return false;
        }
    }
    report.chain_bezout.unwrap_or(true)
}
