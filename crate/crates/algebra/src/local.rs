//! Length of the local ring of a zero set at a point.

use crate::error::{check_dim, AlgebraError, Result};
use crate::hilbert::count_standard_below;
use crate::ideal::Ideal;
use crate::point::ProjectivePoint;
use crate::poly::Polynomial;

const MAX_ORDER: u32 = 30;

/// `dim_k O_z / I O_z` for a homogeneous ideal `I` and a point `z` at which
/// the zero set is isolated. Zero when `z` is not on the zero set.
pub fn local_length(i: &Ideal, z: &ProjectivePoint) -> Result<u64> {
    check_dim(i.nvars(), z.len())?;
    let n = i.nvars();
    let k = z.chart_index();
    let coords = z.affine_in_chart(k).unwrap();
    // affine coordinates u over the variables other than x_k, centred at z
    let m = n - 1;
    let mut images = Vec::with_capacity(n);
    let mut slot = 0;
    for v in 0..n {
        if v == k {
            images.push(Polynomial::one(m));
        } else {
            let u = Polynomial::var(m, slot);
            images.push(&u + &Polynomial::constant(m, coords[v].clone()));
            slot += 1;
        }
    }
    let j = i.map(&images)?;
    let maximal: Vec<Polynomial> = (0..m).map(|v| Polynomial::var(m, v)).collect();
    let mut prev: Option<u64> = None;
    let mut power = Ideal::unit(m);
    let mx = Ideal::new(m, maximal)?;
    for order in 1..=MAX_ORDER {
        power = power.product(&mx)?;
        let big = j.sum(&power)?;
        let gb = big.groebner()?;
        let len = count_standard_below(&gb.leading_monomials(), m, order);
        if prev == Some(len) {
            return Ok(len);
        }
        prev = Some(len);
    }
    Err(AlgebraError::Unsupported(format!(
        "local length did not stabilize by order {MAX_ORDER}; the point may not be isolated"
    )))
}
