use std::fmt;

use num::Zero;

use crate::error::{check_dim, AlgebraError, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Polynomial in two blocks of variables `x0..xN, y0..yN`.
///
/// Backed by a [`Polynomial`] over `2(N+1)` variables with the x block first,
/// so storage stays canonical.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BiPolynomial {
    half: usize,
    inner: Polynomial,
}

impl BiPolynomial {
    pub fn zero(half: usize) -> Self {
        BiPolynomial {
            half,
            inner: Polynomial::zero(2 * half),
        }
    }

    pub fn from_inner(half: usize, inner: Polynomial) -> Result<Self> {
        check_dim(2 * half, inner.nvars())?;
        Ok(BiPolynomial { half, inner })
    }

    pub fn x_var(half: usize, i: usize) -> Self {
        BiPolynomial {
            half,
            inner: Polynomial::var(2 * half, i),
        }
    }

    pub fn y_var(half: usize, i: usize) -> Self {
        BiPolynomial {
            half,
            inner: Polynomial::var(2 * half, half + i),
        }
    }

    /// Lifts a polynomial in the x block.
    pub fn from_x(p: &Polynomial) -> Self {
        let h = p.nvars();
        BiPolynomial {
            half: h,
            inner: p.embed(2 * h, 0),
        }
    }

    /// Lifts a polynomial in the y block.
    pub fn from_y(p: &Polynomial) -> Self {
        let h = p.nvars();
        BiPolynomial {
            half: h,
            inner: p.embed(2 * h, h),
        }
    }

    pub fn half(&self) -> usize {
        self.half
    }

    pub fn inner(&self) -> &Polynomial {
        &self.inner
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// `(deg_x, deg_y)` when every term shares it.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut out: Option<(u32, u32)> = None;
        for (m, _) in self.inner.terms() {
            let dx: u32 = m.exps()[..self.half].iter().sum();
            let dy: u32 = m.exps()[self.half..].iter().sum();
            match out {
                None => out = Some((dx, dy)),
                Some(d) if d != (dx, dy) => return None,
                _ => {}
            }
        }
        out
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.is_zero() || self.bidegree().is_some()
    }

    pub fn degree_x(&self) -> u32 {
        self.inner
            .terms()
            .map(|(m, _)| m.exps()[..self.half].iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.inner
            .terms()
            .map(|(m, _)| m.exps()[self.half..].iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &BiPolynomial) -> Result<BiPolynomial> {
        check_dim(self.half, other.half)?;
        Ok(BiPolynomial {
            half: self.half,
            inner: self.inner.try_add(&other.inner)?,
        })
    }

    pub fn sub(&self, other: &BiPolynomial) -> Result<BiPolynomial> {
        check_dim(self.half, other.half)?;
        Ok(BiPolynomial {
            half: self.half,
            inner: self.inner.try_sub(&other.inner)?,
        })
    }

    pub fn mul(&self, other: &BiPolynomial) -> Result<BiPolynomial> {
        check_dim(self.half, other.half)?;
        Ok(BiPolynomial {
            half: self.half,
            inner: self.inner.try_mul(&other.inner)?,
        })
    }

    pub fn pow(&self, k: u32) -> BiPolynomial {
        BiPolynomial {
            half: self.half,
            inner: self.inner.pow(k),
        }
    }

    pub fn scale(&self, c: &Scalar) -> BiPolynomial {
        BiPolynomial {
            half: self.half,
            inner: self.inner.scale(c),
        }
    }

    pub fn partial_x(&self, i: usize) -> BiPolynomial {
        BiPolynomial {
            half: self.half,
            inner: self.inner.partial_derivative(i),
        }
    }

    pub fn partial_y(&self, i: usize) -> BiPolynomial {
        BiPolynomial {
            half: self.half,
            inner: self.inner.partial_derivative(self.half + i),
        }
    }

    /// Substitutes polynomials for all `2(N+1)` variables, x block first.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        self.inner.substitute(images)
    }

    /// Substitutes the x block and y block separately; both tuples must live in one ring.
    pub fn substitute_xy(&self, xs: &[Polynomial], ys: &[Polynomial]) -> Result<Polynomial> {
        check_dim(self.half, xs.len())?;
        check_dim(self.half, ys.len())?;
        let all: Vec<Polynomial> = xs.iter().chain(ys).cloned().collect();
        self.inner.substitute(&all)
    }

    pub fn evaluate(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        check_dim(self.half, x.len())?;
        check_dim(self.half, y.len())?;
        let all: Vec<Scalar> = x.iter().chain(y).cloned().collect();
        self.inner.evaluate(&all)
    }

    /// Fixes `x` to constants, leaving a polynomial in the y block over `N+1` variables.
    pub fn at_x(&self, x: &[Scalar]) -> Result<Polynomial> {
        check_dim(self.half, x.len())?;
        let h = self.half;
        let mut out = Polynomial::zero(h);
        for (m, c) in self.inner.terms() {
            let mut coeff = c.clone();
            for (i, &e) in m.exps()[..h].iter().enumerate() {
                if e > 0 {
                    coeff *= num::pow::pow(x[i].clone(), e as usize);
                }
            }
            if !coeff.is_zero() {
                out.add_term(Monomial::new(&m.exps()[h..]), coeff);
            }
        }
        Ok(out)
    }

    /// Fixes `y` to constants, leaving a polynomial in the x block.
    pub fn at_y(&self, y: &[Scalar]) -> Result<Polynomial> {
        check_dim(self.half, y.len())?;
        let h = self.half;
        let mut out = Polynomial::zero(h);
        for (m, c) in self.inner.terms() {
            let mut coeff = c.clone();
            for (i, &e) in m.exps()[h..].iter().enumerate() {
                if e > 0 {
                    coeff *= num::pow::pow(y[i].clone(), e as usize);
                }
            }
            if !coeff.is_zero() {
                out.add_term(Monomial::new(&m.exps()[..h]), coeff);
            }
        }
        Ok(out)
    }

    /// Swaps the roles of the two blocks.
    pub fn swap_blocks(&self) -> BiPolynomial {
        let h = self.half;
        let map: Vec<usize> = (0..2 * h).map(|i| if i < h { i + h } else { i - h }).collect();
        BiPolynomial {
            half: h,
            inner: self.inner.remap(&map, 2 * h),
        }
    }

    pub fn check_bidegree(&self, dx: u32, dy: u32) -> Result<()> {
        match self.bidegree() {
            Some(d) if d == (dx, dy) => Ok(()),
            None if self.is_zero() => Ok(()),
            other => Err(AlgebraError::Degree(format!(
                "expected bidegree ({dx},{dy}), found {other:?}"
            ))),
        }
    }
}

/// Names `x0..xN, y0..yN`.
pub fn bi_names(half: usize) -> Vec<String> {
    (0..half)
        .map(|i| format!("x{i}"))
        .chain((0..half).map(|i| format!("y{i}")))
        .collect()
}

impl fmt::Display for BiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.inner.to_string_with(&bi_names(self.half)))
    }
}
