//! Order of vanishing `ord_g(𝔟, P)` along a Lie subalgebra.
//!
//! [`ord_direct`] works from the definition: words of the enveloping algebra
//! act through the chart-0 operators on the left-translated polynomial and are
//! evaluated at `φ(1)`. [`ord_via_ideals`] answers the threshold question
//! `ord_{gh} > T` through the zero sets of `∂^T_{L_g}(P)` and `∂^T_{R_h}(P)`.

use std::fmt;

use multest_algebra::{Ideal, Polynomial, Scalar};
use num::Zero;
use serde::Serialize;

use crate::calculus::{partial_ideal, translate_poly, walk_words, Operators};
use crate::error::{Error, Result};
use crate::model::{DerivationWord, GroupModel, GroupPoint, LieSubalgebra, Side};

/// Exact order, or a lower bound when every word up to `T_max` vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderResult {
    Exact { value: u32, witness: DerivationWord },
    AtLeast(u32),
}

impl OrderResult {
    /// `true` when the order is known to exceed `t`.
    pub fn exceeds(&self, t: u32) -> Option<bool> {
        match self {
            OrderResult::Exact { value, .. } => Some(*value > t),
            OrderResult::AtLeast(b) if *b > t => Some(true),
            OrderResult::AtLeast(_) => None,
        }
    }

    pub fn value(&self) -> Option<u32> {
        match self {
            OrderResult::Exact { value, .. } => Some(*value),
            OrderResult::AtLeast(_) => None,
        }
    }
}

impl fmt::Display for OrderResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderResult::Exact { value, witness } => write!(f, "{value} (witness {witness})"),
            OrderResult::AtLeast(b) => write!(f, ">= {b}"),
        }
    }
}

impl Serialize for OrderResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(2))?;
        match self {
            OrderResult::Exact { value, witness } => {
                map.serialize_entry("value", value)?;
                map.serialize_entry("witness", &witness.to_string())?;
            }
            OrderResult::AtLeast(b) => {
                map.serialize_entry("value", &format!(">={b}"))?;
                map.serialize_entry("witness", &Option::<String>::None)?;
            }
        }
        map.end()
    }
}

/// Rejects polynomials that vanish on the whole compactification.
pub fn check_outside_ig(model: &GroupModel, p: &Polynomial) -> Result<()> {
    if p.nvars() != model.nvars() {
        return Err(Error::Domain(format!("polynomial has {} variables, model needs {}", p.nvars(), model.nvars())));
    }
    if !p.is_homogeneous() {
        return Err(Error::Domain("polynomial is not homogeneous".into()));
    }
    if model.ig().normal_form(p)?.is_zero() {
        return Err(Error::Domain("P ∈ I(Ḡ)".into()));
    }
    Ok(())
}

/// `P(T^{(L)}(φ(g), x))` through the first left chart defined at `(g, 1)`.
pub fn left_translate_poly(model: &GroupModel, p: &Polynomial, g: &GroupPoint) -> Result<Polynomial> {
    let one = model.identity().projective().coords();
    for chart in model.charts(Side::Left) {
        let v = chart.evaluate(g.projective().coords(), one)?;
        if v.iter().any(|c| !c.is_zero()) {
            return translate_poly(p, chart, g);
        }
    }
    Err(Error::Domain(format!("no left chart is defined at ({g}, 1)")))
}

/// `ord_g(𝔟, P)` from the definition, searching words of total at most `t_max`.
pub fn ord_direct(model: &GroupModel, sub: &LieSubalgebra, p: &Polynomial, g: &GroupPoint, t_max: u32) -> Result<OrderResult> {
    check_outside_ig(model, p)?;
    let pg = left_translate_poly(model, p, g)?;
    let ops = Operators::new(model, sub);
    let one: Vec<Scalar> = model.identity().projective().coords().to_vec();
    // words grouped by total; the first total with a nonzero value is the order
    let mut best: Option<(u32, DerivationWord)> = None;
    walk_words(
        ops.d(),
        t_max,
        pg,
        &mut |s, i| Ok(ops.b(i, 0, s)),
        &mut |w, s| {
            let total = w.total();
            if best.as_ref().is_some_and(|(b, _)| *b <= total) {
                return Ok(());
            }
            if !s.evaluate(&one)?.is_zero() {
                best = Some((total, w.clone()));
            }
            Ok(())
        },
    )?;
    Ok(match best {
        Some((value, witness)) => OrderResult::Exact { value, witness },
        None => OrderResult::AtLeast(t_max + 1),
    })
}

/// The two ideal-side predicates for `ord_{gh}(𝔟, P) > T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdPredicates {
    /// `φ(h) ∈ 𝒵(∂^T_{L_g}(P))`
    pub left: bool,
    /// `φ(g) ∈ 𝒵(∂^T_{R_h}(P))`
    pub right: bool,
}

pub fn ord_via_ideals(
    model: &GroupModel,
    sub: &LieSubalgebra,
    p: &Polynomial,
    g: &GroupPoint,
    h: &GroupPoint,
    t: u32,
) -> Result<ThresholdPredicates> {
    check_outside_ig(model, p)?;
    let i = Ideal::principal(p.clone());
    let left = partial_ideal(model, sub, &i, g, t, Side::Left)?;
    let right = partial_ideal(model, sub, &i, h, t, Side::Right)?;
    Ok(ThresholdPredicates {
        left: left.vanishes_at(h.projective().coords())?,
        right: right.vanishes_at(g.projective().coords())?,
    })
}

/// `Σ_S`: products of `s` elements of `Σ_1`, without repetition, in order of discovery.
pub fn product_set(model: &GroupModel, sigma1: &[GroupPoint], s: u32) -> Vec<GroupPoint> {
    let mut out = vec![model.identity().clone()];
    for _ in 0..s {
        let mut next: Vec<GroupPoint> = Vec::new();
        for a in &out {
            for b in sigma1 {
                let c = model.mul(a, b);
                if !next.contains(&c) {
                    next.push(c);
                }
            }
        }
        out = next;
    }
    out
}
