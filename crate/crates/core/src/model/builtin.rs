use multest_algebra::scalar::int;
use multest_algebra::{BiPolynomial, Ideal, Matrix, Polynomial, Scalar};
use num::{One, Zero};

use super::lie::LieAlgebraData;
use super::{linear_images, Chart, Entry, GroupModel, GroupPoint, Side};
use crate::error::{Error, Result};

/// Declared algebraic subgroup: Lie algebra coordinates over the full basis and
/// a polynomial parametrization of its matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSpec {
    pub name: String,
    pub lie: Vec<Vec<Scalar>>,
    pub params: usize,
    /// `m²` entries, row-major, polynomials in `params` variables.
    pub entries: Vec<Polynomial>,
}

/// Declarative description of a matrix group `G ⊆ GL_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub m: usize,
    pub params: Vec<String>,
    pub entries: Vec<Entry>,
    pub lie_names: Vec<String>,
    pub lie_basis: Vec<Matrix>,
    pub subgroups: Vec<SubgroupSpec>,
    /// Explicit change of coordinates; chosen automatically when absent.
    pub coordinate_change: Option<Matrix>,
    /// Replacement table entries `(j, k, l, Q)`.
    pub q_override: Vec<(usize, usize, usize, Polynomial)>,
}

fn unit_matrix(m: usize, i: usize, j: usize) -> Matrix {
    let mut a = Matrix::zeros(m, m);
    a[(i, j)] = Scalar::one();
    a
}

fn e_vec(d: usize, i: usize) -> Vec<Scalar> {
    (0..d).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()
}

fn poly_entries(np: usize, spec: &[Option<usize>], consts: &[i64]) -> Vec<Polynomial> {
    spec.iter()
        .zip(consts)
        .map(|(s, &c)| match s {
            Some(i) => Polynomial::var(np, *i),
            None => Polynomial::constant(np, int(c)),
        })
        .collect()
}

/// The multiplicative group, `φ(t) = [1 : t]` in `ℙ¹`.
pub fn make_gm() -> GroupModel {
    try_gm().expect("built-in gm model")
}

fn try_gm() -> Result<GroupModel> {
    let spec = GroupSpec {
        name: "gm".into(),
        m: 1,
        params: vec!["t".into()],
        entries: vec![Entry::Param(0)],
        lie_names: vec!["d".into()],
        lie_basis: vec![unit_matrix(1, 0, 0)],
        subgroups: vec![SubgroupSpec {
            name: "full".into(),
            lie: vec![e_vec(1, 0)],
            params: 1,
            entries: vec![Polynomial::var(1, 0)],
        }],
        coordinate_change: None,
        q_override: Vec::new(),
    };
    GroupModel::build(spec)
}

/// `GL_2` in `ℙ⁴`.
pub fn make_gl2() -> GroupModel {
    try_gl2().expect("built-in gl2 model")
}

fn try_gl2() -> Result<GroupModel> {
    let names = ["e11", "e12", "e21", "e22"];
    let lie_basis = vec![unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 0), unit_matrix(2, 1, 1)];
    let subgroups = vec![
        SubgroupSpec {
            name: "full".into(),
            lie: (0..4).map(|i| e_vec(4, i)).collect(),
            params: 4,
            entries: (0..4).map(|i| Polynomial::var(4, i)).collect(),
        },
        SubgroupSpec {
            name: "unipotent".into(),
            lie: vec![e_vec(4, 1)],
            params: 1,
            entries: poly_entries(1, &[None, Some(0), None, None], &[1, 0, 0, 1]),
        },
        SubgroupSpec {
            name: "torus1".into(),
            lie: vec![e_vec(4, 0)],
            params: 1,
            entries: poly_entries(1, &[Some(0), None, None, None], &[0, 0, 0, 1]),
        },
        SubgroupSpec {
            name: "diagonal".into(),
            lie: vec![e_vec(4, 0), e_vec(4, 3)],
            params: 2,
            entries: poly_entries(2, &[Some(0), None, None, Some(1)], &[0, 0, 0, 0]),
        },
        SubgroupSpec {
            name: "center".into(),
            lie: vec![vec![int(1), int(0), int(0), int(1)]],
            params: 1,
            entries: poly_entries(1, &[Some(0), None, None, Some(0)], &[0, 0, 0, 0]),
        },
    ];
    let spec = GroupSpec {
        name: "gl2".into(),
        m: 2,
        params: vec!["a".into(), "b".into(), "c".into(), "d".into()],
        entries: (0..4).map(Entry::Param).collect(),
        lie_names: names.iter().map(|s| s.to_string()).collect(),
        lie_basis,
        subgroups,
        coordinate_change: None,
        q_override: Vec::new(),
    };
    GroupModel::build(spec)
}

/// Upper triangular invertible `2×2` matrices `(a, b, d)`, closure a hyperplane of `ℙ⁴`.
pub fn make_borel2() -> GroupModel {
    try_borel2().expect("built-in borel2 model")
}

fn try_borel2() -> Result<GroupModel> {
    let names = ["h1", "e", "h2"];
    let lie_basis = vec![unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 1)];
    let subgroups = vec![
        SubgroupSpec {
            name: "full".into(),
            lie: (0..3).map(|i| e_vec(3, i)).collect(),
            params: 3,
            entries: poly_entries(3, &[Some(0), Some(1), None, Some(2)], &[0, 0, 0, 0]),
        },
        SubgroupSpec {
            name: "unipotent".into(),
            lie: vec![e_vec(3, 1)],
            params: 1,
            entries: poly_entries(1, &[None, Some(0), None, None], &[1, 0, 0, 1]),
        },
        SubgroupSpec {
            name: "torus".into(),
            lie: vec![e_vec(3, 0), e_vec(3, 2)],
            params: 2,
            entries: poly_entries(2, &[Some(0), None, None, Some(1)], &[0, 0, 0, 0]),
        },
        SubgroupSpec {
            name: "h1".into(),
            lie: vec![e_vec(3, 0)],
            params: 1,
            entries: poly_entries(1, &[Some(0), None, None, None], &[0, 0, 0, 1]),
        },
        SubgroupSpec {
            name: "center".into(),
            lie: vec![vec![int(1), int(0), int(1)]],
            params: 1,
            entries: poly_entries(1, &[Some(0), None, None, Some(0)], &[0, 0, 0, 0]),
        },
    ];
    let spec = GroupSpec {
        name: "borel2".into(),
        m: 2,
        params: vec!["a".into(), "b".into(), "d".into()],
        entries: vec![Entry::Param(0), Entry::Param(1), Entry::Const(Scalar::zero()), Entry::Param(2)],
        lie_names: names.iter().map(|s| s.to_string()).collect(),
        lie_basis,
        subgroups,
        coordinate_change: None,
        q_override: Vec::new(),
    };
    GroupModel::build(spec)
}

pub fn model_by_name(name: &str) -> Result<GroupModel> {
    match name {
        "gm" => try_gm(),
        "gl2" => try_gl2(),
        "borel2" => try_borel2(),
        other => Err(Error::Domain(format!("unknown model {other:?}; expected gm, gl2 or borel2"))),
    }
}

/// Ideal of the closure of the image of `p ↦ [f_0(p) : … : f_N(p)]` with `f_0 = 1`.
pub fn closure_ideal(nvars: usize, affine: &[Polynomial]) -> Result<Ideal> {
    if affine.len() != nvars || !affine[0].is_constant() || affine[0].constant_term() != Scalar::one() {
        return Err(Error::Model("parametrization must have first coordinate one".into()));
    }
    let np = affine[0].nvars();
    let total = nvars + np;
    let x0 = Polynomial::var(total, 0);
    let mut gens = Vec::with_capacity(nvars - 1);
    for (k, f) in affine.iter().enumerate().skip(1) {
        let fk = f.embed(total, nvars);
        gens.push(&Polynomial::var(total, k) - &(&x0 * &fk));
    }
    let graph = Ideal::new(total, gens)?;
    let params: Vec<usize> = (nvars..total).collect();
    let image = graph.eliminate(&params)?.truncate(nvars)?;
    Ok(image.saturate_var(0)?.reduced()?)
}

/// Pads raw action tuples to one common bidegree `(c5, c5)`.
///
/// Each tuple's components are multiplied by powers of a coordinate form in x
/// and one in y, chosen among `x_0, …, x_N` so that it does not vanish at the
/// sample pairs where the tuple is nonzero.
pub fn pad_charts(
    raw: &[Vec<BiPolynomial>],
    samples: &[(Vec<Scalar>, Vec<Scalar>)],
) -> Result<(Vec<Vec<BiPolynomial>>, u32)> {
    let mut c5 = 0;
    for tuple in raw {
        for p in tuple {
            if let Some((dx, dy)) = p.bidegree() {
                c5 = c5.max(dx).max(dy);
            } else if !p.is_zero() {
                return Err(Error::Model("chart component is not bihomogeneous".into()));
            }
        }
    }
    let mut out = Vec::with_capacity(raw.len());
    for tuple in raw {
        let half = tuple[0].half();
        let piece: Vec<&(Vec<Scalar>, Vec<Scalar>)> = samples
            .iter()
            .filter(|(x, y)| tuple.iter().any(|p| !p.evaluate(x, y).map(|v| v.is_zero()).unwrap_or(true)))
            .collect();
        let pick = |first: bool| -> Option<usize> {
            (0..half).find(|&k| {
                piece.iter().all(|(x, y)| {
                    let v = if first { &x[k] } else { &y[k] };
                    !v.is_zero()
                })
            })
        };
        let needs_x = tuple.iter().any(|p| p.bidegree().map(|(dx, _)| dx < c5).unwrap_or(false));
        let needs_y = tuple.iter().any(|p| p.bidegree().map(|(_, dy)| dy < c5).unwrap_or(false));
        let fx = if needs_x {
            Some(pick(true).ok_or_else(|| Error::Model("no nonvanishing linear form in x for a chart".into()))?)
        } else {
            None
        };
        let fy = if needs_y {
            Some(pick(false).ok_or_else(|| Error::Model("no nonvanishing linear form in y for a chart".into()))?)
        } else {
            None
        };
        let mut padded = Vec::with_capacity(tuple.len());
        for p in tuple {
            let Some((dx, dy)) = p.bidegree() else {
                padded.push(p.clone());
                continue;
            };
            let mut q = p.clone();
            if dx < c5 {
                q = q.mul(&BiPolynomial::x_var(half, fx.unwrap()).pow(c5 - dx))?;
            }
            if dy < c5 {
                q = q.mul(&BiPolynomial::y_var(half, fy.unwrap()).pow(c5 - dy))?;
            }
            padded.push(q);
        }
        out.push(padded);
    }
    Ok((out, c5))
}

/// Coordinate change: identity when the raw identity point has no zero
/// coordinate, otherwise `x_k = raw_k + raw_0` for `k ≥ 1`.
fn default_coordinate_change(identity_raw: &[Scalar]) -> Matrix {
    let n = identity_raw.len();
    let mut a = Matrix::identity(n);
    if identity_raw.iter().any(|c| c.is_zero()) {
        for k in 1..n {
            a[(k, 0)] = Scalar::one();
        }
    }
    a
}

/// Raw product chart `[x_0 y_0 : X·Y]` before padding.
fn raw_product_tuple(m: usize) -> Vec<BiPolynomial> {
    let half = m * m + 1;
    let mut tuple = vec![BiPolynomial::y_var(half, 0)];
    for i in 0..m {
        for j in 0..m {
            let mut acc = BiPolynomial::zero(half);
            for l in 0..m {
                let t = BiPolynomial::x_var(half, 1 + i * m + l)
                    .mul(&BiPolynomial::y_var(half, 1 + l * m + j))
                    .unwrap();
                acc = acc.add(&t).unwrap();
            }
            tuple.push(acc);
        }
    }
    tuple
}

/// Conjugates a raw tuple by the coordinate change: `T'(x, y) = M·T(M⁻¹x, M⁻¹y)`.
fn conjugate_tuple(tuple: &[BiPolynomial], coord: &Matrix, coord_inv: &Matrix) -> Result<Vec<BiPolynomial>> {
    let half = tuple[0].half();
    let total = 2 * half;
    let inv_rows = linear_images(coord_inv);
    let mut images = Vec::with_capacity(total);
    for r in &inv_rows {
        images.push(r.embed(total, 0));
    }
    for r in &inv_rows {
        images.push(r.embed(total, half));
    }
    let substituted: Vec<Polynomial> = tuple.iter().map(|t| t.substitute(&images)).collect::<std::result::Result<_, _>>()?;
    let mut out = Vec::with_capacity(half);
    for k in 0..half {
        let mut acc = Polynomial::zero(total);
        for (r, s) in substituted.iter().enumerate() {
            let c = &coord[(k, r)];
            if !c.is_zero() {
                acc = &acc + &s.scale(c);
            }
        }
        out.push(BiPolynomial::from_inner(half, acc)?);
    }
    Ok(out)
}

impl GroupModel {
    /// Builds and validates a model from its declarative description.
    pub fn build(spec: GroupSpec) -> Result<GroupModel> {
        let m = spec.m;
        if spec.entries.len() != m * m {
            return Err(Error::Model(format!("expected {} matrix entries", m * m)));
        }
        let nv = m * m + 1;
        let lie = LieAlgebraData::from_matrices(spec.lie_names.clone(), spec.lie_basis.clone())?;
        let mut identity_raw = vec![Scalar::one()];
        for i in 0..m {
            for j in 0..m {
                identity_raw.push(if i == j { Scalar::one() } else { Scalar::zero() });
            }
        }
        let coord = spec.coordinate_change.clone().unwrap_or_else(|| default_coordinate_change(&identity_raw));
        if coord.rows() != nv || coord.cols() != nv {
            return Err(Error::Model(format!("coordinate change must be {nv}x{nv}")));
        }
        let coord_inv = coord.inverse().map_err(|_| Error::Model("coordinate change is singular".into()))?;
        let first_row_ok = (0..nv).all(|j| coord[(0, j)] == if j == 0 { Scalar::one() } else { Scalar::zero() });
        if !first_row_ok {
            return Err(Error::Model("coordinate change must keep x0".into()));
        }
        let image_identity = coord.apply(&identity_raw);
        if image_identity.iter().any(|c| c.is_zero()) {
            return Err(Error::Model("identity point has a vanishing coordinate".into()));
        }

        // vector fields of the basis derivations in raw coordinates: X ↦ X·A
        let mut fields = Vec::with_capacity(lie.dim());
        for a in &spec.lie_basis {
            let mut raw = Matrix::zeros(nv, nv);
            for i in 0..m {
                for j in 0..m {
                    for l in 0..m {
                        let c = &a[(l, j)];
                        if !c.is_zero() {
                            raw[(1 + i * m + j, 1 + i * m + l)] += c.clone();
                        }
                    }
                }
            }
            fields.push(&(&coord * &raw) * &coord_inv);
        }
        let c6 = 2;
        let mut q = Vec::with_capacity(fields.len());
        for f in &fields {
            let lx: Vec<Polynomial> = linear_images(f);
            let mut per_k = Vec::with_capacity(nv);
            for k in 0..nv {
                let xk = Polynomial::var(nv, k);
                let per_l: Vec<Polynomial> = (0..nv).map(|l| &(&lx[l] * &xk) - &(&Polynomial::var(nv, l) * &lx[k])).collect();
                per_k.push(per_l);
            }
            q.push(per_k);
        }
        for (j, k, l, poly) in &spec.q_override {
            if *j >= q.len() || *k >= nv || *l >= nv || poly.nvars() != nv {
                return Err(Error::Model("table override out of range".into()));
            }
            q[*j][*k][*l] = poly.clone();
        }

        let np = spec.params.len();
        let mut pre = GroupModel {
            spec,
            coord: coord.clone(),
            coord_inv: coord_inv.clone(),
            ig: Ideal::zero(nv),
            deg_g: 1,
            identity: GroupPoint {
                matrix: Matrix::identity(m),
                proj: multest_algebra::ProjectivePoint::new(image_identity).unwrap(),
            },
            charts_l: Vec::new(),
            charts_r: Vec::new(),
            lie,
            fields,
            q,
            c5: 1,
            c6,
            c7: 1,
        };
        let entries = pre.param_entries();
        let affine = pre.affine_image(&entries, np);
        let ig = closure_ideal(nv, &affine)?;
        let hd = ig.dim_degree()?;
        if hd.dim != np as i64 {
            return Err(Error::Model(format!("closure has dimension {} but the group has {} parameters", hd.dim, np)));
        }
        pre.deg_g = hd.degree;
        pre.c7 = ig.generators().iter().filter_map(|g| g.degree()).max().unwrap_or(1).max(1);
        pre.ig = ig;

        // padding samples in raw coordinates: group elements against group elements
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(0x5eed);
        let mut samples = Vec::new();
        for _ in 0..6 {
            let g = pre.random_point(&mut rng);
            let h = pre.random_point(&mut rng);
            samples.push((super::raw_vector(g.matrix()), super::raw_vector(h.matrix())));
        }
        let raw = vec![raw_product_tuple(m)];
        let (padded, c5) = pad_charts(&raw, &samples)?;
        pre.c5 = c5;
        let mut charts = Vec::new();
        for t in &padded {
            charts.push(conjugate_tuple(t, &coord, &coord_inv)?);
        }
        pre.charts_l = charts.iter().map(|p| Chart { side: Side::Left, polys: p.clone() }).collect();
        pre.charts_r = charts.into_iter().map(|p| Chart { side: Side::Right, polys: p }).collect();
        Ok(pre)
    }
}
