//! Zero-set geometry used by the search: components through a point,
//! separators, `τ`, coset counts, local lengths and the Bezout inequality.

use multest_algebra::{local_length, minimal_primes, Ideal, Polynomial, ProjectivePoint};
use num::bigint::BigInt;
use num::{One, Zero};
use serde::Serialize;

use super::symbolic::boundary_poly;
use crate::calculus::translate_ideal;
use crate::error::{Error, Result};
use crate::model::{GroupModel, GroupPoint, LieSubalgebra, Side};

/// Irreducible component of a zero set.
#[derive(Clone, Debug)]
pub struct Component {
    pub prime: Ideal,
    pub dim: i64,
    pub degree: u64,
    /// `false` when the splitting could not prove absolute irreducibility.
    pub certified: bool,
}

/// All irreducible components of `𝒵(i)`, largest dimension first.
pub fn components(i: &Ideal) -> Result<Vec<Component>> {
    let mut out = Vec::new();
    for c in minimal_primes(i)? {
        let h = c.ideal.dim_degree()?;
        out.push(Component { prime: c.ideal, dim: h.dim, degree: h.degree, certified: c.certified });
    }
    out.sort_by(|a, b| b.dim.cmp(&a.dim));
    Ok(out)
}

/// Components of `𝒵(i)` passing through `z`, largest dimension first.
pub fn components_through(i: &Ideal, z: &ProjectivePoint) -> Result<Vec<Component>> {
    let mut out = Vec::new();
    for c in components(i)? {
        if c.prime.vanishes_at(z.coords())? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Product over `g ∈ Σ` of a linear form `g_e x_f − g_f x_e` vanishing at
/// `φ(g)` and not identically on `𝒵(w)`.
pub fn separating_polynomial(sigma: &[GroupPoint], w: &Ideal) -> Result<Polynomial> {
    let nv = w.nvars();
    let mut acc = Polynomial::one(nv);
    for g in sigma {
        let c = g.projective().coords();
        let mut found = None;
        'pairs: for e in 0..nv {
            for f in e + 1..nv {
                let l = &Polynomial::var(nv, f).scale(&c[e]) - &Polynomial::var(nv, e).scale(&c[f]);
                if l.is_zero() {
                    continue;
                }
                if !w.contains(&l)? {
                    found = Some(l);
                    break 'pairs;
                }
            }
        }
        let l = found.ok_or_else(|| Error::Domain(format!("the zero set is the single point {g}, no separator exists")))?;
        acc = &acc * &l;
    }
    Ok(acc)
}

/// `dim(B) − dim(𝒵(w) ∩ closure of x·B)` at the point `x`.
///
/// Requires a declared algebraic subgroup integrating `sub`.
pub fn tau(model: &GroupModel, w: &Ideal, sub: &LieSubalgebra, x: &GroupPoint) -> Result<u32> {
    let spec = model
        .subgroup_for(sub)
        .ok_or_else(|| Error::Unsupported("the subalgebra has no declared algebraic subgroup".into()))?;
    if !w.vanishes_at(x.projective().coords())? {
        return Err(Error::Domain(format!("{x} is not on the variety")));
    }
    let orbit = model.orbit_ideal(x, spec)?;
    let meet = w.sum(&orbit)?;
    let local = components_through(&meet, x.projective())?;
    let d = local.first().map(|c| c.dim).unwrap_or(0).max(0) as u32;
    Ok(sub.dim() as u32 - d.min(sub.dim() as u32))
}

/// Number of distinct `gW` (side Left) or `Wg` (side Right) for `g ∈ Σ`.
pub fn coset_count(model: &GroupModel, w: &Ideal, sigma: &[GroupPoint], side: Side) -> Result<usize> {
    Ok(cosets(model, w, sigma, side)?.len())
}

/// Distinct translates of `w`, in order of first appearance.
pub fn cosets(model: &GroupModel, w: &Ideal, sigma: &[GroupPoint], side: Side) -> Result<Vec<Ideal>> {
    let mut seen: Vec<Ideal> = Vec::new();
    for g in sigma {
        let t = translate_ideal(model, w, &model.inv(g)?, side)?;
        let mut new = true;
        for s in &seen {
            if s.equals(&t)? {
                new = false;
                break;
            }
        }
        if new {
            seen.push(t);
        }
    }
    Ok(seen)
}

/// Length of `𝒪_{z,Ḡ} / I·𝒪_{z,Ḡ}` at a point isolated in `𝒵(I + I(Ḡ))`.
pub fn length_at_point(model: &GroupModel, i: &Ideal, z: &ProjectivePoint) -> Result<u64> {
    let full = i.sum(model.ig())?;
    let local = components_through(&full, z)?;
    if local.iter().any(|c| c.dim > 0) {
        return Err(Error::Unsupported(format!("{z} is not isolated in the zero set")));
    }
    Ok(local_length(&full, z)?)
}

/// `l_Z · deg Z` for a zero-dimensional prime `Z` of `full`: the degree of the
/// `Z`-primary component.
fn weighted_length(full: &Ideal, others: &[&Component]) -> Result<u64> {
    let mut q = full.clone();
    for o in others {
        q = q.saturate(&o.prime)?;
    }
    Ok(q.dim_degree()?.degree)
}

/// One isolated point (or Galois orbit of points) of a Bezout check.
#[derive(Clone, Debug, Serialize)]
pub struct BezoutPoint {
    pub ideal: Vec<String>,
    pub degree: u64,
    pub length: u64,
    pub in_group: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BezoutReport {
    pub max_degree: u32,
    pub points: Vec<BezoutPoint>,
    /// `Σ l·deg` over components meeting `φ(G)`.
    pub lhs: String,
    /// `D^{n − dim} · deg φ(Ḡ)`
    pub rhs: String,
    pub holds: bool,
}

/// Checks `Σ_Z l_Z · deg Z ≤ D^n · deg φ(Ḡ)` for a zero-dimensional
/// intersection `𝒵(I(Ḡ), J)`, `D` the largest generator degree of `J` (or `d`
/// when larger).
pub fn bezout_check(model: &GroupModel, j: &Ideal, d: Option<u32>) -> Result<BezoutReport> {
    let full = j.sum(model.ig())?;
    let comps = components(&full)?;
    if comps.iter().any(|c| c.dim > 0) {
        return Err(Error::Unsupported("the intersection has positive-dimensional components".into()));
    }
    let boundary = boundary_poly(model)?;
    let names = model.names();
    let mut points = Vec::new();
    let mut lhs = BigInt::zero();
    for (idx, c) in comps.iter().enumerate() {
        let others: Vec<&Component> = comps.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, o)| o).collect();
        let weighted = weighted_length(&full, &others)?;
        let in_group = !c.prime.contains(&boundary)?;
        let length = weighted / c.degree.max(1);
        if in_group {
            lhs += BigInt::from(weighted);
        }
        points.push(BezoutPoint { ideal: c.prime.generator_strings(&names), degree: c.degree, length, in_group });
    }
    let max_degree = j.generators().iter().filter_map(|p| p.degree()).max().unwrap_or(0).max(d.unwrap_or(0));
    let n = model.n() as u32;
    let rhs = BigInt::from(max_degree).pow(n) * BigInt::from(model.deg_g());
    Ok(BezoutReport { max_degree, points, holds: lhs <= rhs, lhs: lhs.to_string(), rhs: rhs.to_string() })
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
