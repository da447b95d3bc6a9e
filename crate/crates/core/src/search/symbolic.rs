//! A generic group element: parameters as extra indeterminates after the
//! ambient coordinates, so that translation and conjugation by "every `g`"
//! become polynomial identities.

use multest_algebra::{Ideal, Polynomial};

use crate::error::Result;
use crate::model::{Chart, GroupModel};

/// Determinant of a square matrix of polynomials, by cofactor expansion.
pub fn poly_det(entries: &[Polynomial], m: usize) -> Polynomial {
    let nv = entries[0].nvars();
    match m {
        0 => Polynomial::one(nv),
        1 => entries[0].clone(),
        _ => {
            let mut acc = Polynomial::zero(nv);
            for j in 0..m {
                if entries[j].is_zero() {
                    continue;
                }
                let term = &entries[j] * &poly_det(&minor(entries, m, 0, j), m - 1);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn minor(entries: &[Polynomial], m: usize, row: usize, col: usize) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity((m - 1) * (m - 1));
    for i in (0..m).filter(|i| *i != row) {
        for j in (0..m).filter(|j| *j != col) {
            out.push(entries[i * m + j].clone());
        }
    }
    out
}

/// Adjugate, row-major.
pub fn poly_adjugate(entries: &[Polynomial], m: usize) -> Vec<Polynomial> {
    let nv = entries[0].nvars();
    if m == 1 {
        return vec![Polynomial::one(nv)];
    }
    let mut out = vec![Polynomial::zero(nv); m * m];
    for i in 0..m {
        for j in 0..m {
            let c = poly_det(&minor(entries, m, j, i), m - 1);
            out[i * m + j] = if (i + j) % 2 == 0 { c } else { -c };
        }
    }
    out
}

/// `raw0 · det(raw entries)` in model coordinates: vanishes exactly on `φ(Ḡ) ∖ φ(G)`.
pub fn boundary_poly(model: &GroupModel) -> Result<Polynomial> {
    let nv = model.nvars();
    let m = model.spec().m;
    let entries: Vec<Polynomial> = (1..nv).map(|k| Polynomial::var(nv, k)).collect();
    let raw = &Polynomial::var(nv, 0) * &poly_det(&entries, m);
    model.from_raw(&raw)
}

/// Symbolic `φ(g)` and `φ(g⁻¹)` in the ring of `nvars + n` variables.
pub struct GenericElement {
    pub nv: usize,
    pub np: usize,
    pub phi: Vec<Polynomial>,
    pub phi_inv: Vec<Polynomial>,
    /// Determinant of the parameter matrix; `g` lies in `G` where it is nonzero.
    pub det: Polynomial,
}

impl GenericElement {
    pub fn new(model: &GroupModel) -> Result<GenericElement> {
        let nv = model.nvars();
        let np = model.n();
        let m = model.spec().m;
        let total = nv + np;
        let entries: Vec<Polynomial> = model.param_entries().iter().map(|e| e.embed(total, nv)).collect();
        let phi: Vec<Polynomial> = model.affine_image(&model.param_entries(), np).iter().map(|p| p.embed(total, nv)).collect();
        let det = poly_det(&entries, m);
        let mut raw_inv = vec![det.clone()];
        raw_inv.extend(poly_adjugate(&entries, m));
        let coord = model.coordinate_change();
        let phi_inv = (0..nv)
            .map(|k| {
                let mut acc = Polynomial::zero(total);
                for (r, p) in raw_inv.iter().enumerate() {
                    let c = &coord[(k, r)];
                    if !num::Zero::is_zero(c) {
                        acc = &acc + &p.scale(c);
                    }
                }
                acc
            })
            .collect();
        Ok(GenericElement { nv, np, phi, phi_inv, det })
    }

    pub fn total(&self) -> usize {
        self.nv + self.np
    }

    /// Ambient coordinate `x_k` in the big ring.
    pub fn x(&self, k: usize) -> Polynomial {
        Polynomial::var(self.total(), k)
    }

    pub fn xs(&self) -> Vec<Polynomial> {
        (0..self.nv).map(|k| self.x(k)).collect()
    }

    /// `T(first, second)` for a chart, both arguments given as polynomial tuples.
    pub fn compose(&self, chart: &Chart, first: &[Polynomial], second: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let mut images = first.to_vec();
        images.extend(second.iter().cloned());
        chart.polys.iter().map(|b| Ok(b.inner().substitute(&images)?)).collect()
    }

    /// Coordinates of `g·z·g⁻¹` for the first chart that is not identically
    /// degenerate on `w` (an ideal in the ambient ring).
    pub fn conjugation(&self, model: &GroupModel, w: &Ideal) -> Result<Option<Vec<Polynomial>>> {
        let wx = w.extend(self.np);
        for chart in model.charts(crate::model::Side::Left) {
            let inner = self.compose(chart, &self.phi, &self.xs())?;
            let outer = self.compose(chart, &inner, &self.phi_inv)?;
            if !nondegenerate(&wx, &outer)? {
                continue;
            }
            return Ok(Some(outer));
        }
        Ok(None)
    }

    /// Coordinates of `z·g` for the first chart not degenerate on `w`.
    pub fn right_translation(&self, model: &GroupModel, w: &Ideal) -> Result<Option<Vec<Polynomial>>> {
        let wx = w.extend(self.np);
        for chart in model.charts(crate::model::Side::Right) {
            let img = self.compose(chart, &self.xs(), &self.phi)?;
            if nondegenerate(&wx, &img)? {
                return Ok(Some(img));
            }
        }
        Ok(None)
    }
}

fn nondegenerate(wx: &Ideal, images: &[Polynomial]) -> Result<bool> {
    for p in images {
        if !wx.contains(p)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether `f(images)` lies in `w` for every generator `f` of `w`, the
/// images living in the extended ring.
pub fn maps_into(w: &Ideal, images: &[Polynomial], np: usize) -> Result<bool> {
    let wx = w.extend(np);
    for f in w.generators() {
        let g = f.substitute(images)?;
        if !wx.contains(&g)? {
            return Ok(false);
        }
    }
    Ok(true)
}
