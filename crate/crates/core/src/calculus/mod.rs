//! The operator calculus on homogeneous ideals: `In`, translation ideals, the
//! derivation operators `𝒟` and `ℬ_k`, the polynomial families built from them
//! and the jet ideals `B^T`, `C^T`, `D^T`, `E^T`, `∂^T_{L_g}`, `∂^T_{R_g}`.
//!
//! Ideals are always built from generators: substitution by a chart tuple is
//! a ring map, so images of generators generate the image ideal modulo `I(Ḡ)`.

pub mod identities;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use multest_algebra::{BiPolynomial, Ideal, Monomial, Polynomial, Scalar};
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::model::{Chart, DerivationWord, GroupModel, GroupPoint, LieSubalgebra, Side};

/// `In(I)`: the intersection of the primary components with nonempty zero
/// set, computed as the saturation by the irrelevant ideal.
pub fn interesting_part(i: &Ideal) -> Result<Ideal> {
    if !i.is_homogeneous() {
        return Err(Error::Domain("In is defined for homogeneous ideals only".into()));
    }
    Ok(i.saturate_irrelevant()?)
}

/// A basis of the linear span of the given polynomials, in reduced echelon form.
///
/// Ideals generated by the input and by the output coincide; the output is
/// much shorter when the families are highly redundant.
pub fn span_basis(polys: impl IntoIterator<Item = Polynomial>) -> Vec<Polynomial> {
    let mut basis: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
    for p in polys {
        let mut f = p;
        for (m, b) in &basis {
            let c = f.coeff(m);
            if !c.is_zero() {
                f = &f - &b.scale(&c);
            }
        }
        let Some((lead, _)) = f.leading_term() else { continue };
        let lead = lead.clone();
        let f = f.monic();
        for b in basis.values_mut() {
            let c = b.coeff(&lead);
            if !c.is_zero() {
                *b = &*b - &f.scale(&c);
            }
        }
        basis.insert(lead, f);
    }
    let mut out: Vec<Polynomial> = basis.into_values().collect();
    out.sort();
    out
}

/// `f(T_α(φ(g), x))` for a left chart, `f(T_α(x, φ(g)))` for a right chart.
pub fn translate_poly(f: &Polynomial, chart: &Chart, g: &GroupPoint) -> Result<Polynomial> {
    let images = match chart.side {
        Side::Left => chart.at_x(g.projective().coords())?,
        Side::Right => chart.at_y(g.projective().coords())?,
    };
    Ok(f.substitute(&images)?)
}

fn with_ig(model: &GroupModel, gens: Vec<Polynomial>) -> Result<Ideal> {
    let nv = model.nvars();
    let mut all = span_basis(gens);
    all.extend(model.ig().generators().iter().cloned());
    Ok(Ideal::new(nv, all)?)
}

fn check_ambient(model: &GroupModel, i: &Ideal) -> Result<()> {
    if i.nvars() != model.nvars() {
        return Err(Error::Domain(format!(
            "ideal lives in {} variables but the model needs {}",
            i.nvars(),
            model.nvars()
        )));
    }
    if !i.is_homogeneous() {
        return Err(Error::Domain("ideal is not homogeneous".into()));
    }
    Ok(())
}

/// `𝐓_{L_g}(I)` or `𝐓_{R_g}(I)`.
///
/// The zero set of the left translate is `g⁻¹·𝒵(I)`, that of the right
/// translate is `𝒵(I)·g⁻¹`.
pub fn translate_ideal(model: &GroupModel, i: &Ideal, g: &GroupPoint, side: Side) -> Result<Ideal> {
    check_ambient(model, i)?;
    let mut gens = Vec::new();
    for chart in model.charts(side) {
        for p in i.generators() {
            gens.push(translate_poly(p, chart, g)?);
        }
    }
    interesting_part(&with_ig(model, gens)?)
}

/// Chart operators `ℬ_k(Δ_i)` and `𝒟(Δ_i)` for the basis of a subalgebra.
pub struct Operators<'a> {
    model: &'a GroupModel,
    sub: &'a LieSubalgebra,
    /// `bq[i][k][l] = Q^{(l)}_{Δ_i,k}(x)`
    bq: Vec<Vec<Vec<Polynomial>>>,
    /// `dq[i][l] = Q^{(l)}_{Δ_i,0}(y)` in the `(x, y)` ring
    dq: Vec<Vec<Polynomial>>,
}

impl<'a> Operators<'a> {
    pub fn new(model: &'a GroupModel, sub: &'a LieSubalgebra) -> Operators<'a> {
        let nv = model.nvars();
        let bq: Vec<Vec<Vec<Polynomial>>> = sub
            .basis()
            .iter()
            .map(|c| (0..nv).map(|k| model.q_combination(c, k)).collect())
            .collect();
        let dq = bq.iter().map(|per_k| per_k[0].iter().map(|q| q.embed(2 * nv, nv)).collect()).collect();
        Operators { model, sub, bq, dq }
    }

    pub fn model(&self) -> &GroupModel {
        self.model
    }

    pub fn sub(&self) -> &LieSubalgebra {
        self.sub
    }

    pub fn d(&self) -> usize {
        self.sub.dim()
    }

    /// `ℬ_k(Δ_i)(e)`.
    pub fn b(&self, i: usize, k: usize, e: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(e.nvars());
        for (l, q) in self.bq[i][k].iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let de = e.partial_derivative(l);
            if !de.is_zero() {
                acc = &acc + &(&de * q);
            }
        }
        acc
    }

    /// `𝒟(Δ_i)(f)` for `f` in the `(x, y)` ring.
    pub fn dop(&self, i: usize, f: &Polynomial) -> Polynomial {
        let nv = self.model.nvars();
        let mut acc = Polynomial::zero(f.nvars());
        for (l, q) in self.dq[i].iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let df = f.partial_derivative(nv + l);
            if !df.is_zero() {
                acc = &acc + &(&df * q);
            }
        }
        acc
    }

    /// `ℬ_k(word)(e)`, applying `Δ_1` first.
    pub fn b_word(&self, word: &DerivationWord, k: usize, e: &Polynomial) -> Polynomial {
        word.letters().into_iter().fold(e.clone(), |acc, i| self.b(i, k, &acc))
    }

    /// `𝒟(word)(f)`, applying `Δ_1` first.
    pub fn d_word(&self, word: &DerivationWord, f: &BiPolynomial) -> Result<BiPolynomial> {
        let inner = word.letters().into_iter().fold(f.inner().clone(), |acc, i| self.dop(i, &acc));
        Ok(BiPolynomial::from_inner(self.model.nvars(), inner)?)
    }
}

/// Depth-first walk over PBW words of total at most `t`, reusing prefixes.
///
/// `step(state, i)` applies letter `i`; `visit` sees every word once, in
/// lexicographic order of the exponent vector.
pub fn walk_words<S>(
    d: usize,
    t: u32,
    init: S,
    step: &mut dyn FnMut(&S, usize) -> Result<S>,
    visit: &mut dyn FnMut(&DerivationWord, &S) -> Result<()>,
) -> Result<()> {
    fn rec<S>(
        d: usize,
        idx: usize,
        left: u32,
        exps: &mut Vec<u32>,
        state: &S,
        step: &mut dyn FnMut(&S, usize) -> Result<S>,
        visit: &mut dyn FnMut(&DerivationWord, &S) -> Result<()>,
    ) -> Result<()> {
        if idx == d {
            return visit(&DerivationWord::new(exps.clone()), state);
        }
        rec(d, idx + 1, left, exps, state, step, visit)?;
        let mut cur: Option<S> = None;
        for c in 1..=left {
            let next = step(cur.as_ref().unwrap_or(state), idx)?;
            exps[idx] = c;
            rec(d, idx + 1, left - c, exps, &next, step, visit)?;
            cur = Some(next);
        }
        exps[idx] = 0;
        Ok(())
    }
    let mut exps = vec![0; d];
    rec(d, 0, t, &mut exps, &init, step, visit)
}

/// `P(T^{(R)}_α(x, y))` as a polynomial in the `(x, y)` ring.
fn right_composite(p: &Polynomial, chart: &Chart) -> Result<Polynomial> {
    let images: Vec<Polynomial> = chart.polys.iter().map(|b| b.inner().clone()).collect();
    Ok(p.substitute(&images)?)
}

fn at_identity(model: &GroupModel, f: &Polynomial) -> Result<Polynomial> {
    let b = BiPolynomial::from_inner(model.nvars(), f.clone())?;
    Ok(b.at_y(model.identity().projective().coords())?)
}

/// Member of one of the polynomial families, tagged by word and chart data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub word: DerivationWord,
    /// Chart index `α` (families E and D).
    pub alpha: Option<usize>,
    /// Coordinate index `k` (families C and D).
    pub k: Option<usize>,
    pub poly: Polynomial,
}

/// `P_{Δ,α} = 𝒟(Δ)(P(T^{(R)}_α(x, y)))|_{y = φ(1)}` for all words of total at most `t`.
pub fn family_e(ops: &Operators, p: &Polynomial, t: u32) -> Result<Vec<FamilyMember>> {
    let model = ops.model;
    let mut out = Vec::new();
    for (alpha, chart) in model.charts(Side::Right).iter().enumerate() {
        let f = right_composite(p, chart)?;
        walk_words(
            ops.d(),
            t,
            f,
            &mut |s, i| Ok(ops.dop(i, s)),
            &mut |w, s| {
                out.push(FamilyMember { word: w.clone(), alpha: Some(alpha), k: None, poly: at_identity(model, s)? });
                Ok(())
            },
        )?;
    }
    Ok(out)
}

/// `P^{(k)}_{Δ,α}`: `𝒟(Δ)` applied to the rational function
/// `P(T_α(x,y)) / T_{k,α}(x,y)^{deg P}`, cleared by `T_{k,α}^{deg P + |Δ|}`, at `y = φ(1)`.
pub fn family_d(ops: &Operators, p: &Polynomial, t: u32) -> Result<Vec<FamilyMember>> {
    let model = ops.model;
    let e = p.degree().unwrap_or(0);
    let mut out = Vec::new();
    for (alpha, chart) in model.charts(Side::Right).iter().enumerate() {
        let n0 = right_composite(p, chart)?;
        for k in 0..model.nvars() {
            let h = chart.polys[k].inner().clone();
            let dh: Vec<Polynomial> = (0..ops.d()).map(|i| ops.dop(i, &h)).collect();
            // state: numerator and current word length
            walk_words(
                ops.d(),
                t,
                (n0.clone(), 0u32),
                &mut |(num, len), i| {
                    let exp = Scalar::from_integer((e + *len).into());
                    let next = &(&ops.dop(i, num) * &h) - &(&(num * &dh[i])).scale(&exp);
                    Ok((next, len + 1))
                },
                &mut |w, (num, _)| {
                    out.push(FamilyMember { word: w.clone(), alpha: Some(alpha), k: Some(k), poly: at_identity(model, num)? });
                    Ok(())
                },
            )?;
        }
    }
    Ok(out)
}

/// `P^Δ_k = ℬ_k(Δ)(P)` for all `k` and all words of total at most `t`.
pub fn family_c(ops: &Operators, p: &Polynomial, t: u32) -> Result<Vec<FamilyMember>> {
    let mut out = Vec::new();
    for k in 0..ops.model.nvars() {
        walk_words(
            ops.d(),
            t,
            p.clone(),
            &mut |s, i| Ok(ops.b(i, k, s)),
            &mut |w, s| {
                out.push(FamilyMember { word: w.clone(), alpha: None, k: Some(k), poly: s.clone() });
                Ok(())
            },
        )?;
    }
    Ok(out)
}

/// Spans of `ℬ_{k_r}(Δ'_r)∘…∘ℬ_{k_1}(Δ'_1)(P)` over all basis elements and all
/// coordinate indices, for `r = 0..=t`. Entry `r` spans the compositions of length `r`.
pub fn family_b(ops: &Operators, p: &Polynomial, t: u32) -> Vec<Vec<Polynomial>> {
    let nv = ops.model.nvars();
    let mut levels = vec![vec![p.clone()]];
    for _ in 0..t {
        let prev = levels.last().unwrap();
        let mut next = Vec::new();
        for e in prev {
            for i in 0..ops.d() {
                for k in 0..nv {
                    next.push(ops.b(i, k, e));
                }
            }
        }
        levels.push(span_basis(next));
    }
    levels
}

/// Selector for the four equivalent jet-ideal constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JetVariant {
    B,
    C,
    D,
    E,
}

impl JetVariant {
    pub const ALL: [JetVariant; 4] = [JetVariant::B, JetVariant::C, JetVariant::D, JetVariant::E];
}

impl fmt::Display for JetVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            JetVariant::B => "B",
            JetVariant::C => "C",
            JetVariant::D => "D",
            JetVariant::E => "E",
        };
        write!(f, "{s}")
    }
}

/// Generators of a jet ideal before adding `I(Ḡ)` and taking `In`.
pub fn jet_generators(ops: &Operators, i: &Ideal, t: u32, variant: JetVariant) -> Result<Vec<Polynomial>> {
    let mut gens = Vec::new();
    for p in i.generators() {
        match variant {
            JetVariant::B => gens.extend(family_b(ops, p, t).into_iter().flatten()),
            JetVariant::C => gens.extend(family_c(ops, p, t)?.into_iter().map(|m| m.poly)),
            JetVariant::D => gens.extend(family_d(ops, p, t)?.into_iter().map(|m| m.poly)),
            JetVariant::E => gens.extend(family_e(ops, p, t)?.into_iter().map(|m| m.poly)),
        }
    }
    Ok(gens)
}

/// `𝐁^T(I)`, `𝐂^T(I)`, `𝐃^T(I)` or `𝐄^T(I)`.
pub fn jet_ideal(model: &GroupModel, sub: &LieSubalgebra, i: &Ideal, t: u32, variant: JetVariant) -> Result<Ideal> {
    check_ambient(model, i)?;
    let ops = Operators::new(model, sub);
    let gens = jet_generators(&ops, i, t, variant)?;
    interesting_part(&with_ig(model, gens)?)
}

/// `∂^T_{L_g}(I)` or `∂^T_{R_g}(I)`, without `In`.
///
/// Generators are the `P_{Δ,α}` for generators `P` of `I`, translated by `g`
/// through every chart of the given side, together with `I(Ḡ)`.
pub fn partial_ideal(
    model: &GroupModel,
    sub: &LieSubalgebra,
    i: &Ideal,
    g: &GroupPoint,
    t: u32,
    side: Side,
) -> Result<Ideal> {
    check_ambient(model, i)?;
    let ops = Operators::new(model, sub);
    let mut family = Vec::new();
    for p in i.generators() {
        family.extend(family_e(&ops, p, t)?.into_iter().map(|m| m.poly));
    }
    let family = span_basis(family);
    let mut gens = Vec::new();
    for chart in model.charts(side) {
        for f in &family {
            gens.push(translate_poly(f, chart, g)?);
        }
    }
    let out = with_ig(model, gens)?;
    audit_degree(max_generator_degree(&out), partial_degree_bound(model, i));
    Ok(out)
}

static AUDITED: AtomicU64 = AtomicU64::new(0);
static OVER_BOUND: AtomicU64 = AtomicU64::new(0);

fn audit_degree(got: u32, bound: u32) {
    AUDITED.fetch_add(1, AtomicOrdering::Relaxed);
    if got > bound {
        OVER_BOUND.fetch_add(1, AtomicOrdering::Relaxed);
    }
}

/// Process-wide count of `∂` ideals built so far and of those whose
/// generator degree exceeded [`partial_degree_bound`].
pub fn degree_audit() -> (u64, u64) {
    (AUDITED.load(AtomicOrdering::Relaxed), OVER_BOUND.load(AtomicOrdering::Relaxed))
}

/// Generator degree bound `c5²·max(deg I, c7)` for `∂` ideals.
pub fn partial_degree_bound(model: &GroupModel, i: &Ideal) -> u32 {
    let d = i.generators().iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    model.c5() * model.c5() * d.max(model.c7())
}

/// Largest generator degree of an ideal, `0` for the zero ideal.
pub fn max_generator_degree(i: &Ideal) -> u32 {
    i.generators().iter().filter_map(|p| p.degree()).max().unwrap_or(0)
}

/// `ℬ_k(u)(e)` for a linear combination of words.
pub fn b_element(ops: &Operators, u: &crate::model::UElement, k: usize, e: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero(e.nvars());
    for (w, c) in u.terms() {
        let v = ops.b_word(w, k, e);
        if c.is_one() {
            acc = &acc + &v;
        } else {
            acc = &acc + &v.scale(c);
        }
    }
    acc
}
