//! Compactified matrix groups: embedding, translation charts, derivation
//! tables, adjoint action and point arithmetic.

mod builtin;
pub mod custom;
pub mod lie;
mod validate;

use std::fmt;

use multest_algebra::{BiPolynomial, Ideal, Matrix, Polynomial, ProjectivePoint, Scalar};
use num::{One, Zero};
use rand::Rng;

pub use builtin::{closure_ideal, make_borel2, make_gl2, make_gm, model_by_name, pad_charts, GroupSpec, SubgroupSpec};
pub use lie::{enumerate_words, DerivationWord, LieAlgebraData, LieSubalgebra, UElement};
pub use validate::{model_validate, ValidationReport};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// One translation chart: `N+1` bihomogeneous polynomials of bidegree `(c5, c5)`.
///
/// A left chart computes `φ(g·z)` from `(φ(g), φ(z))`, a right chart computes
/// `φ(z·g)` from `(φ(z), φ(g))`, wherever the tuple does not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub side: Side,
    pub polys: Vec<BiPolynomial>,
}

impl Chart {
    pub fn evaluate(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.polys.iter().map(|p| Ok(p.evaluate(x, y)?)).collect()
    }

    /// The tuple with the first argument fixed, as polynomials in the second.
    pub fn at_x(&self, x: &[Scalar]) -> Result<Vec<Polynomial>> {
        self.polys.iter().map(|p| Ok(p.at_x(x)?)).collect()
    }

    /// The tuple with the second argument fixed, as polynomials in the first.
    pub fn at_y(&self, y: &[Scalar]) -> Result<Vec<Polynomial>> {
        self.polys.iter().map(|p| Ok(p.at_y(y)?)).collect()
    }
}

/// A group element with its image in the ambient projective space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupPoint {
    matrix: Matrix,
    proj: ProjectivePoint,
}

impl GroupPoint {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn projective(&self) -> &ProjectivePoint {
        &self.proj
    }

    /// `k_g`: first nonzero homogeneous coordinate.
    pub fn chart_index(&self) -> usize {
        self.proj.chart_index()
    }
}

impl fmt::Display for GroupPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.proj)
    }
}

/// Entry of the matrix parametrization: a free parameter or a constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Param(usize),
    Const(Scalar),
}

/// A validated compactified group `Ḡ ⊆ ℙ^N` with `N = m²`.
#[derive(Clone, Debug)]
pub struct GroupModel {
    spec: GroupSpec,
    coord: Matrix,
    coord_inv: Matrix,
    ig: Ideal,
    deg_g: u64,
    identity: GroupPoint,
    charts_l: Vec<Chart>,
    charts_r: Vec<Chart>,
    lie: LieAlgebraData,
    fields: Vec<Matrix>,
    q: Vec<Vec<Vec<Polynomial>>>,
    c5: u32,
    c6: u32,
    c7: u32,
}

impl GroupModel {
    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// Group dimension `n`.
    pub fn n(&self) -> usize {
        self.spec.params.len()
    }

    /// Ambient projective dimension `N`.
    pub fn big_n(&self) -> usize {
        self.spec.m * self.spec.m
    }

    /// Number of homogeneous coordinates, `N + 1`.
    pub fn nvars(&self) -> usize {
        self.big_n() + 1
    }

    pub fn ig(&self) -> &Ideal {
        &self.ig
    }

    pub fn deg_g(&self) -> u64 {
        self.deg_g
    }

    pub fn identity(&self) -> &GroupPoint {
        &self.identity
    }

    pub fn charts(&self, side: Side) -> &[Chart] {
        match side {
            Side::Left => &self.charts_l,
            Side::Right => &self.charts_r,
        }
    }

    pub fn lie(&self) -> &LieAlgebraData {
        &self.lie
    }

    /// Linear vector field of basis derivation `j` on homogeneous coordinates.
    pub fn field(&self, j: usize) -> &Matrix {
        &self.fields[j]
    }

    /// `Q^{(l)}_{j,k}`.
    pub fn q(&self, j: usize, k: usize, l: usize) -> &Polynomial {
        &self.q[j][k][l]
    }

    pub fn c5(&self) -> u32 {
        self.c5
    }

    pub fn c6(&self) -> u32 {
        self.c6
    }

    pub fn c7(&self) -> u32 {
        self.c7
    }

    /// The stored change of coordinates `x = M · raw`.
    pub fn coordinate_change(&self) -> &Matrix {
        &self.coord
    }

    pub fn names(&self) -> Vec<String> {
        multest_algebra::default_names(self.nvars())
    }

    /// `Q^{(l)}_{b,k}` for `b = Σ c_j Δ_j`, as a vector over `l`.
    pub fn q_combination(&self, coeffs: &[Scalar], k: usize) -> Vec<Polynomial> {
        let nv = self.nvars();
        (0..nv)
            .map(|l| {
                let mut acc = Polynomial::zero(nv);
                for (j, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        acc = &acc + &self.q[j][k][l].scale(c);
                    }
                }
                acc
            })
            .collect()
    }

    /// `ℬ_k(Δ)e = Σ_l ∂e/∂x_l · Q^{(l)}_{Δ,k}` for `Δ = Σ c_j Δ_j`.
    pub fn apply_b(&self, coeffs: &[Scalar], k: usize, e: &Polynomial) -> Polynomial {
        let qs = self.q_combination(coeffs, k);
        let mut acc = Polynomial::zero(self.nvars());
        for (l, q) in qs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let d = e.partial_derivative(l);
            if !d.is_zero() {
                acc = &acc + &(&d * q);
            }
        }
        acc
    }

    /// Matrix of the parametrization at the given parameter values.
    pub fn matrix_of(&self, params: &[Scalar]) -> Result<Matrix> {
        if params.len() != self.n() {
            return Err(Error::Domain(format!(
                "model {} expects {} coordinates, got {}",
                self.name(),
                self.n(),
                params.len()
            )));
        }
        let m = self.spec.m;
        let mut out = Matrix::zeros(m, m);
        for (idx, e) in self.spec.entries.iter().enumerate() {
            out[(idx / m, idx % m)] = match e {
                Entry::Param(i) => params[*i].clone(),
                Entry::Const(c) => c.clone(),
            };
        }
        Ok(out)
    }

    pub fn params_of(&self, g: &GroupPoint) -> Vec<Scalar> {
        let m = self.spec.m;
        let mut out = vec![Scalar::zero(); self.n()];
        for (idx, e) in self.spec.entries.iter().enumerate() {
            if let Entry::Param(i) = e {
                out[*i] = g.matrix[(idx / m, idx % m)].clone();
            }
        }
        out
    }

    /// Raw embedding `[1 : entries]` followed by the coordinate change.
    pub fn phi(&self, matrix: &Matrix) -> ProjectivePoint {
        ProjectivePoint::new(self.coord.apply(&raw_vector(matrix))).expect("first coordinate is one")
    }

    pub fn point(&self, params: &[Scalar]) -> Result<GroupPoint> {
        let matrix = self.matrix_of(params)?;
        self.point_from_matrix(matrix)
    }

    pub fn point_from_ints(&self, params: &[i64]) -> Result<GroupPoint> {
        let v: Vec<Scalar> = params.iter().map(|&c| multest_algebra::scalar::int(c)).collect();
        self.point(&v)
    }

    pub fn point_from_matrix(&self, matrix: Matrix) -> Result<GroupPoint> {
        let m = self.spec.m;
        if matrix.rows() != m || matrix.cols() != m {
            return Err(Error::Domain("matrix has the wrong size".into()));
        }
        for (idx, e) in self.spec.entries.iter().enumerate() {
            if let Entry::Const(c) = e {
                if &matrix[(idx / m, idx % m)] != c {
                    return Err(Error::Domain("matrix is not in the group".into()));
                }
            }
        }
        if matrix.det()?.is_zero() {
            return Err(Error::Domain("singular matrix".into()));
        }
        let proj = self.phi(&matrix);
        Ok(GroupPoint { matrix, proj })
    }

    /// Group element with the given image, if the point lies in `φ(G)`.
    pub fn point_from_projective(&self, z: &ProjectivePoint) -> Option<GroupPoint> {
        let raw = self.coord_inv.apply(z.coords());
        if raw[0].is_zero() {
            return None;
        }
        let inv = raw[0].recip();
        let m = self.spec.m;
        let mut matrix = Matrix::zeros(m, m);
        for idx in 0..m * m {
            matrix[(idx / m, idx % m)] = &raw[idx + 1] * &inv;
        }
        self.point_from_matrix(matrix).ok()
    }

    pub fn mul(&self, g: &GroupPoint, h: &GroupPoint) -> GroupPoint {
        let matrix = &g.matrix * &h.matrix;
        let proj = self.phi(&matrix);
        GroupPoint { matrix, proj }
    }

    pub fn inv(&self, g: &GroupPoint) -> Result<GroupPoint> {
        let matrix = g.matrix.inverse()?;
        let proj = self.phi(&matrix);
        Ok(GroupPoint { matrix, proj })
    }

    pub fn chart_index(&self, g: &GroupPoint) -> usize {
        g.chart_index()
    }

    /// `Ad(g)` on the full Lie algebra.
    pub fn adjoint(&self, g: &GroupPoint) -> Result<Matrix> {
        self.lie.adjoint(&g.matrix)
    }

    pub fn ad_stable(&self, g: &GroupPoint, sub: &LieSubalgebra) -> Result<bool> {
        sub.ad_stable(&self.lie, &g.matrix)
    }

    /// Random group element with small integer parameters.
    pub fn random_point<R: Rng>(&self, rng: &mut R) -> GroupPoint {
        loop {
            let params: Vec<Scalar> = (0..self.n()).map(|_| multest_algebra::scalar::int(rng.gen_range(-4..=4))).collect();
            if let Ok(p) = self.point(&params) {
                return p;
            }
        }
    }

    /// Rewrites a polynomial in raw embedding coordinates into model coordinates.
    pub fn from_raw(&self, p: &Polynomial) -> Result<Polynomial> {
        let images = linear_images(&self.coord_inv);
        Ok(p.substitute(&images)?)
    }

    /// Rewrites a polynomial in model coordinates into raw embedding coordinates.
    pub fn to_raw(&self, p: &Polynomial) -> Result<Polynomial> {
        let images = linear_images(&self.coord);
        Ok(p.substitute(&images)?)
    }

    /// Declared algebraic subgroup whose Lie algebra is `sub`.
    pub fn subgroup_for(&self, sub: &LieSubalgebra) -> Option<&SubgroupSpec> {
        self.spec.subgroups.iter().find(|s| {
            LieSubalgebra::new(&self.lie, s.lie.clone())
                .map(|b| b.same_span(sub))
                .unwrap_or(false)
        })
    }

    /// Subalgebra from a named declared subgroup, or `"full"`.
    pub fn subalgebra(&self, name: &str) -> Result<LieSubalgebra> {
        if name == "full" {
            return Ok(LieSubalgebra::full(&self.lie));
        }
        let s = self
            .spec
            .subgroups
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::Domain(format!("model {} has no subgroup named {}", self.name(), name)))?;
        LieSubalgebra::new(&self.lie, s.lie.clone())
    }

    /// Ideal of the closure of the orbit `w·B` of a declared subgroup.
    pub fn orbit_ideal(&self, w: &GroupPoint, sub: &SubgroupSpec) -> Result<Ideal> {
        let m = self.spec.m;
        let np = sub.params;
        // entries of w · b(s) as polynomials in the subgroup parameters
        let mut prod = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                let mut acc = Polynomial::zero(np);
                for l in 0..m {
                    let c = &w.matrix[(i, l)];
                    if !c.is_zero() {
                        acc = &acc + &sub.entries[l * m + j].scale(c);
                    }
                }
                prod.push(acc);
            }
        }
        let affine = self.affine_image(&prod, np);
        closure_ideal(self.nvars(), &affine)
    }

    /// Model coordinates of `[1 : entries]` as polynomials.
    pub(crate) fn affine_image(&self, entries: &[Polynomial], np: usize) -> Vec<Polynomial> {
        let nv = self.nvars();
        let mut raw = Vec::with_capacity(nv);
        raw.push(Polynomial::one(np));
        raw.extend(entries.iter().cloned());
        (0..nv)
            .map(|k| {
                let mut acc = Polynomial::zero(np);
                for (r, p) in raw.iter().enumerate() {
                    let c = &self.coord[(k, r)];
                    if !c.is_zero() {
                        acc = &acc + &p.scale(c);
                    }
                }
                acc
            })
            .collect()
    }

    /// Parameter matrix entries as polynomials in the group parameters.
    pub(crate) fn param_entries(&self) -> Vec<Polynomial> {
        let np = self.n();
        self.spec
            .entries
            .iter()
            .map(|e| match e {
                Entry::Param(i) => Polynomial::var(np, *i),
                Entry::Const(c) => Polynomial::constant(np, c.clone()),
            })
            .collect()
    }

    /// Whether a projective point lies in `φ(G)`.
    pub fn in_group(&self, z: &ProjectivePoint) -> bool {
        self.point_from_projective(z).is_some()
    }

    /// Whether a point lies on `φ(Ḡ)`.
    pub fn on_closure(&self, z: &ProjectivePoint) -> Result<bool> {
        Ok(self.ig.vanishes_at(z.coords())?)
    }
}

/// `[1, entries row-major]`.
pub(crate) fn raw_vector(matrix: &Matrix) -> Vec<Scalar> {
    let m = matrix.rows();
    let mut v = Vec::with_capacity(m * m + 1);
    v.push(Scalar::one());
    for i in 0..m {
        v.extend(matrix.row(i).iter().cloned());
    }
    v
}

/// Linear forms `Σ_j a_{ij} x_j`, one per row.
pub(crate) fn linear_images(a: &Matrix) -> Vec<Polynomial> {
    (0..a.rows()).map(|i| Polynomial::linear(a.row(i))).collect()
}
