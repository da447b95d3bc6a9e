use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{check_dim, AlgebraError, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::scalar::{common_denominator, format_scalar, gcd_all, Scalar};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms live in a map keyed by degrevlex-ordered monomials, so two equal
/// polynomials always share one representation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range");
        Self::term(Monomial::var(nvars, index, 1), Scalar::one())
    }

    pub fn term(mon: Monomial, c: Scalar) -> Self {
        let nvars = mon.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mon, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        Polynomial::from_terms(
            n,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i, 1), c.clone())),
        )
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading (largest degrevlex) monomial downwards.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one(self.nvars))
    }

    /// Leading term in degrevlex.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_term_in(&self, order: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    /// True when every term has the same total degree. The zero polynomial
    /// counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Homogeneous with respect to the grading that only counts the
    /// variables in `vars`.
    pub fn is_homogeneous_in(&self, vars: &[usize]) -> bool {
        let mut it = self
            .terms
            .keys()
            .map(|m| vars.iter().map(|&v| m.exp(v)).sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mon: &Monomial, c: &Scalar) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.mul(mon), v * c)).collect(),
        }
    }

    /// Scales so the degrevlex leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Integer coefficients with trivial content and positive leading
    /// coefficient, together with the factor `self = factor * result`.
    pub fn primitive_integer(&self) -> (Scalar, Vec<(Monomial, BigInt)>) {
        if self.is_zero() {
            return (Scalar::one(), Vec::new());
        }
        let den = common_denominator(self.terms.values());
        let ints: Vec<(Monomial, BigInt)> = self
            .terms()
            .map(|(m, c)| (m.clone(), (c * Scalar::from_integer(den.clone())).to_integer()))
            .collect();
        let mut g = gcd_all(ints.iter().map(|(_, c)| c));
        if ints[0].1.is_negative() {
            g = -g;
        }
        let out = ints.into_iter().map(|(m, c)| (m, c / &g)).collect();
        (Scalar::new(g, den), out)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.nvars, other.nvars)?;
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        check_dim(self.nvars, images.len())?;
        let target = match images.first() {
            Some(p) => p.nvars,
            None => return Ok(Polynomial::constant(0, self.constant_term())),
        };
        for im in images {
            check_dim(target, im.nvars)?;
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target), p.clone()])
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.nvars, "variable index {var} out of range");
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e > 0 {
                out.add_term(m.with_exp(var, e - 1), c * Scalar::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Sets `x_k = 1`; the variable count is unchanged and `x_k` no longer occurs.
    pub fn dehomogenize(&self, k: usize) -> Polynomial {
        assert!(k < self.nvars, "chart index {k} out of range");
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.with_exp(k, 0), c.clone());
        }
        out
    }

    /// Multiplies every term by the power of `x_k` that lifts it to total
    /// degree `degree`. Expects a polynomial not involving `x_k`.
    pub fn homogenize(&self, k: usize, degree: u32) -> Result<Polynomial> {
        if let Some(d) = self.degree() {
            if d > degree {
                return Err(AlgebraError::Degree(format!(
                    "target degree {degree} below polynomial degree {d}"
                )));
            }
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(k) + degree - m.degree();
            out.add_term(m.with_exp(k, e), c.clone());
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        check_dim(self.nvars, point.len())?;
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t *= num::pow::pow(point[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes constants for a subset of variables, keeping the arity.
    pub fn evaluate_partial(&self, assignment: &[(usize, Scalar)]) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mon = m.clone();
            for (v, val) in assignment {
                let e = mon.exp(*v);
                if e > 0 {
                    coeff *= num::pow::pow(val.clone(), e as usize);
                    mon = mon.with_exp(*v, 0);
                }
            }
            out.add_term(mon, coeff);
        }
        out
    }

    /// Moves variable `i` to position `map[i]` in a ring with `nvars` variables.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Polynomial {
        assert_eq!(map.len(), self.nvars, "remap table arity mismatch");
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            out.add_term(m.remap(map, nvars), c.clone());
        }
        out
    }

    /// Embeds into a larger ring, shifting variable `i` to `i + offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Polynomial {
        let map: Vec<usize> = (0..self.nvars).map(|i| i + offset).collect();
        self.remap(&map, nvars)
    }

    /// Restricts to the first `nvars` variables; fails if a dropped one occurs.
    pub fn truncate_vars(&self, nvars: usize) -> Result<Polynomial> {
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            if m.exps()[nvars..].iter().any(|&e| e > 0) {
                return Err(AlgebraError::Dimension {
                    expected: nvars,
                    found: self.nvars,
                });
            }
            out.add_term(Monomial::new(&m.exps()[..nvars]), c.clone());
        }
        Ok(out)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let q = m.div(&lm)?;
            let qc = c / &lc;
            let step = divisor.mul_monomial(&q, &qc);
            rem = &rem - &step;
            quot.add_term(q, qc);
        }
        Some(quot)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.nvars),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    pub fn div_monomial(&self, mon: &Monomial) -> Option<Polynomial> {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.div(mon)?, c.clone());
        }
        Some(out)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(format_scalar(&a));
            }
            for (v, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[v].clone()),
                    _ => factors.push(format!("{}^{}", names[v], e)),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

/// Default variable names `x0, x1, ...`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (0..nvars).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_names(self.nvars)))
    }
}

impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nvars.cmp(&other.nvars).then_with(|| {
            let a = self.terms();
            let b = other.terms();
            for (x, y) in a.zip(b) {
                match x.0.cmp(y.0).then_with(|| x.1.cmp(y.1)) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
            self.terms.len().cmp(&other.terms.len())
        })
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
