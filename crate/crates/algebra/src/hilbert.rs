//! Hilbert series of monomial ideals.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::monomial::Monomial;

/// Projective dimension and degree of a zero set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HilbertData {
    /// `-1` for the empty set.
    pub dim: i64,
    /// Zero when `dim == -1`.
    pub degree: u64,
}

/// Coefficients of a polynomial in `t`, lowest degree first.
type TPoly = Vec<BigInt>;

fn trim(mut p: TPoly) -> TPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn tmul(a: &TPoly, b: &TPoly) -> TPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn tadd(a: &TPoly, b: &TPoly) -> TPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect();
    trim(out)
}

fn one_minus_t_pow(d: u32) -> TPoly {
    let mut p = vec![BigInt::zero(); d as usize + 1];
    p[0] = BigInt::one();
    p[d as usize] -= BigInt::one();
    trim(p)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.retain(|h| !g.divides(h));
            out.push(g);
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t)/(1-t)^n` of `k[x]/(gens)`.
pub fn hilbert_numerator(gens: &[Monomial], nvars: usize) -> Vec<BigInt> {
    numerator(minimalize(gens.to_vec()), nvars)
}

fn numerator(gens: Vec<Monomial>, nvars: usize) -> TPoly {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime(b)));
    if coprime {
        return gens
            .iter()
            .fold(vec![BigInt::one()], |acc, g| tmul(&acc, &one_minus_t_pow(g.degree())));
    }
    // pivot on the variable occurring in the most generators; it is shared
    // by at least two since the generators are not coprime
    let mut best = (0usize, 0usize);
    for v in 0..nvars {
        let count = gens.iter().filter(|g| g.exp(v) > 0).count();
        if count > best.1 {
            best = (v, count);
        }
    }
    let v = best.0;
    // smallest positive exponent keeps the pivot outside the ideal
    let e = gens.iter().map(|g| g.exp(v)).filter(|&e| e > 0).min().unwrap();
    let pivot = Monomial::var(nvars, v, e);
    let mut with: Vec<Monomial> = gens.clone();
    with.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| g.div(&g.gcd(&pivot)).unwrap())
        .collect();
    let a = numerator(minimalize(with), nvars);
    let b = numerator(minimalize(colon), nvars);
    let mut shifted = vec![BigInt::zero(); e as usize];
    shifted.extend(b);
    tadd(&a, &trim(shifted))
}

/// Dimension and degree from the leading monomials of a homogeneous ideal in
/// `nvars` variables.
pub fn hilbert_data(leading: &[Monomial], nvars: usize) -> HilbertData {
    let mut num = hilbert_numerator(leading, nvars);
    if num.is_empty() {
        return HilbertData { dim: -1, degree: 0 };
    }
    let mut k = 0i64;
    loop {
        // divide by (1 - t) when N(1) = 0
        let at_one: BigInt = num.iter().sum();
        if !at_one.is_zero() || k as usize == nvars {
            break;
        }
        let mut q = vec![BigInt::zero(); num.len() - 1];
        let mut acc = BigInt::zero();
        for i in 0..num.len() - 1 {
            acc += &num[i];
            q[i] = acc.clone();
        }
        num = trim(q);
        k += 1;
    }
    let dim = nvars as i64 - k - 1;
    let deg: BigInt = num.iter().sum();
    if dim < 0 {
        return HilbertData { dim: -1, degree: 0 };
    }
    HilbertData {
        dim,
        degree: u64::try_from(deg).unwrap_or(u64::MAX),
    }
}

/// Number of standard monomials of degree below `bound`.
pub(crate) fn count_standard_below(leading: &[Monomial], nvars: usize, bound: u32) -> u64 {
    let mut count = 0u64;
    let mut exps = vec![0u32; nvars];
    fn rec(v: usize, left: u32, exps: &mut Vec<u32>, leading: &[Monomial], count: &mut u64) {
        if v == exps.len() {
            let m = Monomial::new(exps);
            if !leading.iter().any(|l| l.divides(&m)) {
                *count += 1;
            }
            return;
        }
        for e in 0..=left {
            exps[v] = e;
            let partial = Monomial::new(exps);
            if leading.iter().any(|l| l.divides(&partial)) {
                break;
            }
            rec(v + 1, left - e, exps, leading, count);
        }
        exps[v] = 0;
    }
    if bound == 0 {
        return 0;
    }
    rec(0, bound - 1, &mut exps, leading, &mut count);
    count
}
