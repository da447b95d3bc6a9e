use std::fmt;

use num::{One, Zero};

use crate::error::{check_dim, AlgebraError, Result};
use crate::poly::Polynomial;
use crate::scalar::{format_scalar, Scalar};

/// Point of projective space, stored with its first nonzero coordinate equal to one.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<Scalar>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        let first = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or_else(|| AlgebraError::Domain("projective point with all coordinates zero".into()))?;
        let inv = first.recip();
        Ok(ProjectivePoint {
            coords: coords.into_iter().map(|c| c * &inv).collect(),
        })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| crate::scalar::int(c)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Number of homogeneous coordinates (N+1).
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Index of the first nonzero coordinate.
    pub fn chart_index(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).unwrap()
    }

    /// Representative with `x_k = 1`; `None` if that coordinate vanishes.
    pub fn affine_in_chart(&self, k: usize) -> Option<Vec<Scalar>> {
        let c = &self.coords[k];
        if c.is_zero() {
            return None;
        }
        let inv = c.recip();
        Some(self.coords.iter().map(|v| v * &inv).collect())
    }

    pub fn vanishes(&self, f: &Polynomial) -> Result<bool> {
        check_dim(f.nvars(), self.coords.len())?;
        Ok(f.evaluate(&self.coords)?.is_zero())
    }

    /// Homogeneous linear forms cutting out exactly this point.
    pub fn ideal_generators(&self) -> Vec<Polynomial> {
        let n = self.coords.len();
        let k = self.chart_index();
        let mut out = Vec::new();
        for l in 0..n {
            if l == k {
                continue;
            }
            // c_k x_l - c_l x_k with c_k = 1
            let mut coeffs = vec![Scalar::zero(); n];
            coeffs[l] = Scalar::one();
            coeffs[k] = -self.coords[l].clone();
            out.push(Polynomial::linear(&coeffs));
        }
        out
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_scalar).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}
