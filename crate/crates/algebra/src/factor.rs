//! Factorization of homogeneous polynomials into linear factors and a
//! remainder, exact over the rationals.

use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// `f = unit * Π factor^mult`, factors monic and pairwise distinct.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub unit: Scalar,
    pub factors: Vec<(Polynomial, u32)>,
    /// False when some factor of degree four or more could not be shown irreducible.
    pub certified: bool,
}

impl Factorization {
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn product(&self, nvars: usize) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::constant(nvars, self.unit.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }
}

const COEFF_LIMIT: u64 = 1_000_000_000_000;
const CANDIDATE_LIMIT: usize = 200_000;

/// Factors a homogeneous polynomial. Linear factors are found exactly; the
/// cofactor is irreducible when its degree is at most three, and otherwise
/// reported with `certified = false` after splitting off repeated parts.
pub fn factor(f: &Polynomial) -> Result<Factorization> {
    if f.is_zero() {
        return Err(AlgebraError::Domain("cannot factor zero".into()));
    }
    let n = f.nvars();
    let (_, lc) = f.leading_term().unwrap();
    let unit = lc.clone();
    let mut rest = f.monic();
    let mut factors: Vec<(Polynomial, u32)> = Vec::new();
    if rest.is_constant() {
        return Ok(Factorization {
            unit,
            factors,
            certified: true,
        });
    }
    if !rest.is_homogeneous() {
        let d = rest.degree().unwrap();
        return Ok(Factorization {
            unit,
            factors: vec![(rest, 1)],
            certified: d <= 1,
        });
    }
    let mc = rest.monomial_content();
    if !mc.is_one() {
        for (v, &e) in mc.exps().iter().enumerate() {
            if e > 0 {
                factors.push((Polynomial::var(n, v), e));
            }
        }
        rest = rest.div_monomial(&mc).unwrap();
    }
    let mut certified = true;
    if rest.degree().unwrap_or(0) > 0 {
        for (l, m) in linear_factors(&rest)? {
            for _ in 0..m {
                rest = rest.exact_div(&l).unwrap();
            }
            factors.push((l, m));
        }
        let d = rest.degree().unwrap_or(0);
        if d > 0 {
            let r = rest.monic();
            if d <= 3 {
                factors.push((r, 1));
            } else {
                let (base, mult) = perfect_power(&r)?;
                let bd = base.degree().unwrap();
                certified = bd <= 3;
                factors.push((base, mult));
            }
        }
    }
    factors.sort();
    Ok(Factorization {
        unit,
        factors,
        certified,
    })
}

/// Irreducible factors without multiplicity.
pub fn distinct_factors(f: &Polynomial) -> Result<(Vec<Polynomial>, bool)> {
    let fac = factor(f)?;
    Ok((fac.factors.into_iter().map(|(p, _)| p).collect(), fac.certified))
}

/// Writes `r = base^mult` with `mult` maximal, via the squarefree part.
fn perfect_power(r: &Polynomial) -> Result<(Polynomial, u32)> {
    let s = squarefree_part(r)?;
    let mut q = r.clone();
    let mut k = 0;
    while let Some(next) = q.exact_div(&s) {
        k += 1;
        q = next;
        if q.is_constant() {
            return Ok((s.monic(), k));
        }
    }
    Ok((r.clone(), 1))
}

/// `f / gcd(f, ∂f/∂x_v)` for a variable actually occurring in `f`.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial> {
    let n = f.nvars();
    let Some(v) = (0..n).find(|&v| f.uses_var(v)) else {
        return Ok(Polynomial::one(n));
    };
    let g = poly_gcd(f, &f.partial_derivative(v))?;
    Ok(f.exact_div(&g).unwrap().monic())
}

/// Gcd of two nonzero polynomials, as `a*b / lcm(a,b)`.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    let inter = Ideal::principal(a.clone()).intersect(&Ideal::principal(b.clone()))?;
    let lcm = match inter.generators() {
        [l] => l.clone(),
        _ => return Err(AlgebraError::Unsupported("intersection of principal ideals not principal".into())),
    };
    Ok((a * b).exact_div(&lcm).unwrap().monic())
}

/// Rational linear factors with multiplicities of a homogeneous polynomial
/// without monomial factors.
fn linear_factors(f: &Polynomial) -> Result<Vec<(Polynomial, u32)>> {
    let n = f.nvars();
    let d = f.degree().unwrap();
    let pure = (0..n).find(|&j| !f.coeff(&Monomial::var(n, j, d)).is_zero());
    match pure {
        Some(j) => linear_factors_pure(f, j),
        None => {
            // shear x_i -> x_i + c_i x_0 until x_0^d appears
            let c = shear_for_pure_power(f)?;
            let images = |sign: i64| -> Vec<Polynomial> {
                (0..n)
                    .map(|i| {
                        let xi = Polynomial::var(n, i);
                        if i == 0 {
                            xi
                        } else {
                            &xi + &Polynomial::var(n, 0).scale(&(&c[i] * Scalar::from_integer(sign.into())))
                        }
                    })
                    .collect()
            };
            let g = f.substitute(&images(1))?;
            let facs = linear_factors_pure(&g, 0)?;
            let back = images(-1);
            facs.into_iter()
                .map(|(l, m)| Ok((l.substitute(&back)?.monic(), m)))
                .collect()
        }
    }
}

fn shear_for_pure_power(f: &Polynomial) -> Result<Vec<Scalar>> {
    let n = f.nvars();
    for s in 1..50i64 {
        let c: Vec<Scalar> = (0..n)
            .map(|i| if i == 0 { Scalar::one() } else { Scalar::from_integer(((s * i as i64) % 11 + i as i64).into()) })
            .collect();
        if !f.evaluate(&c)?.is_zero() {
            let mut out = c;
            out[0] = Scalar::zero();
            return Ok(out);
        }
    }
    Err(AlgebraError::Unsupported("no shear found".into()))
}

fn linear_factors_pure(f: &Polynomial, j: usize) -> Result<Vec<(Polynomial, u32)>> {
    let n = f.nvars();
    let mut root_sets: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for i in (0..n).filter(|&i| i != j) {
        if !f.uses_var(i) {
            root_sets.push((i, vec![Scalar::zero()]));
            continue;
        }
        // h(t) = f restricted to the (x_j, x_i) plane at x_j = t, x_i = 1
        let d = f.degree().unwrap() as usize;
        let mut coeffs = vec![Scalar::zero(); d + 1];
        for (m, c) in f.terms() {
            if m.exp(i) + m.exp(j) == m.degree() {
                coeffs[m.exp(j) as usize] += c;
            }
        }
        let roots = rational_roots(&coeffs)?;
        if roots.is_empty() {
            return Ok(Vec::new());
        }
        root_sets.push((i, roots));
    }
    let total: usize = root_sets.iter().map(|(_, r)| r.len()).product();
    if total > CANDIDATE_LIMIT {
        return Err(AlgebraError::Unsupported("too many linear factor candidates".into()));
    }
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut idx = vec![0usize; root_sets.len()];
    loop {
        let mut coeffs = vec![Scalar::zero(); n];
        coeffs[j] = Scalar::one();
        for (k, (i, roots)) in root_sets.iter().enumerate() {
            coeffs[*i] = -roots[idx[k]].clone();
        }
        let l = Polynomial::linear(&coeffs);
        let mut m = 0;
        while let Some(q) = rest.exact_div(&l) {
            rest = q;
            m += 1;
        }
        if m > 0 {
            out.push((l.monic(), m));
            if rest.is_constant() {
                break;
            }
        }
        // next combination
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < root_sets[k].1.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    Ok(out)
}

/// Distinct rational roots of `Σ coeffs[i] t^i`.
pub fn rational_roots(coeffs: &[Scalar]) -> Result<Vec<Scalar>> {
    let den = crate::scalar::common_denominator(coeffs.iter());
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Scalar::from_integer(den.clone())).to_integer())
        .collect();
    while ints.last().is_some_and(|c| c.is_zero()) {
        ints.pop();
    }
    let mut roots = Vec::new();
    if ints.len() <= 1 {
        return Ok(roots);
    }
    if ints[0].is_zero() {
        roots.push(Scalar::zero());
        let k = ints.iter().position(|c| !c.is_zero()).unwrap();
        ints.drain(..k);
    }
    if ints.len() <= 1 {
        return Ok(roots);
    }
    let a0 = ints[0].abs();
    let ad = ints.last().unwrap().abs();
    let ps = divisors(&a0)?;
    let qs = divisors(&ad)?;
    let mut seen = std::collections::BTreeSet::new();
    for p in &ps {
        for q in &qs {
            for sign in [1i64, -1] {
                let r = Scalar::new(p * BigInt::from(sign), q.clone());
                if !seen.insert(r.clone()) {
                    continue;
                }
                if eval_int(&ints, &r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

fn eval_int(c: &[BigInt], t: &Scalar) -> Scalar {
    c.iter()
        .rev()
        .fold(Scalar::zero(), |acc, a| acc * t + Scalar::from_integer(a.clone()))
}

/// Positive divisors by trial division.
fn divisors(v: &BigInt) -> Result<Vec<BigInt>> {
    let n = v
        .to_u64()
        .filter(|&n| n <= COEFF_LIMIT)
        .ok_or_else(|| AlgebraError::Unsupported(format!("coefficient {v} too large for root search")))?;
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            primes.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        primes.push((m, 1));
    }
    let mut out = vec![1u64];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &out {
            let mut q = *d;
            for _ in 0..=e {
                next.push(q);
                q *= p;
            }
        }
        out = next;
    }
    out.sort_unstable();
    Ok(out.into_iter().map(BigInt::from).collect())
}

/// Rank of the symmetric matrix of a quadratic form. Rank at least three
/// means the quadric stays irreducible over every field extension.
pub fn quadric_rank(q: &Polynomial) -> usize {
    let n = q.nvars();
    let mut rows = vec![vec![Scalar::zero(); n]; n];
    for (m, c) in q.terms() {
        let vars: Vec<usize> = (0..n).filter(|&v| m.exp(v) > 0).collect();
        match vars.as_slice() {
            [a] => rows[*a][*a] += c,
            [a, b] => {
                let half = c / Scalar::from_integer(2.into());
                rows[*a][*b] += &half;
                rows[*b][*a] += &half;
            }
            _ => {}
        }
    }
    crate::matrix::Matrix::from_rows(rows).rank()
}
