//! Buchberger's algorithm over fraction-free integer coefficients.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::OnceLock;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::scalar::{gcd_all, Scalar};

const DEFAULT_STEPS: u64 = 50_000_000;

static BUDGET: AtomicU64 = AtomicU64::new(0);
static ENV_BUDGET: OnceLock<u64> = OnceLock::new();

/// Overrides the per-run reduction-step budget for the whole process.
pub fn set_step_budget(steps: u64) {
    BUDGET.store(steps.max(1), AtomicOrdering::SeqCst);
}

/// Current per-run reduction-step budget. `MULTEST_BUDGET` sets the
/// initial value.
pub fn step_budget() -> u64 {
    match BUDGET.load(AtomicOrdering::SeqCst) {
        0 => *ENV_BUDGET.get_or_init(|| {
            std::env::var("MULTEST_BUDGET")
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .filter(|&v: &u64| v > 0)
                .unwrap_or(DEFAULT_STEPS)
        }),
        b => b,
    }
}

pub(crate) struct Budget {
    left: u64,
    total: u64,
}

impl Budget {
    pub(crate) fn new() -> Self {
        let total = step_budget();
        Budget { left: total, total }
    }

    fn step(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(AlgebraError::Resource { budget: self.total });
        }
        self.left -= 1;
        Ok(())
    }
}

/// Integer polynomial sorted by decreasing monomial under a fixed order.
#[derive(Clone, Debug)]
pub(crate) struct IPoly {
    pub(crate) terms: Vec<(Monomial, BigInt)>,
}

impl IPoly {
    fn from_poly(p: &Polynomial, order: MonomialOrder) -> (Scalar, IPoly) {
        let (scale, mut terms) = p.primitive_integer();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out = IPoly { terms };
        out.normalize_sign();
        (scale, out)
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), Scalar::from_integer(c.clone()))),
        )
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn content(&self) -> BigInt {
        gcd_all(self.terms.iter().map(|t| &t.1))
    }

    fn normalize_sign(&mut self) {
        if let Some((_, c)) = self.terms.first() {
            if c.is_negative() {
                for t in &mut self.terms {
                    t.1 = -std::mem::take(&mut t.1);
                }
            }
        }
    }

    fn make_primitive(&mut self) {
        let g = self.content();
        if !g.is_zero() && !g.is_one() {
            for t in &mut self.terms {
                t.1 = &t.1 / &g;
            }
        }
        self.normalize_sign();
    }

    fn sugar_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }
}

/// `ca*a - cb*m*b`, both inputs sorted under `order`.
fn combine(
    a: &[(Monomial, BigInt)],
    ca: &BigInt,
    b: &[(Monomial, BigInt)],
    m: &Monomial,
    cb: &BigInt,
    order: MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut bm: Option<Monomial> = b.first().map(|t| t.0.mul(m));
    while i < a.len() || j < b.len() {
        let ord = match (i < a.len(), &bm) {
            (true, Some(x)) => order.cmp(&a[i].0, x),
            (true, None) => Ordering::Greater,
            (false, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push((a[i].0.clone(), ca * &a[i].1));
                i += 1;
            }
            Ordering::Less => {
                out.push((bm.take().unwrap(), -(cb * &b[j].1)));
                j += 1;
                bm = b.get(j).map(|t| t.0.mul(m));
            }
            Ordering::Equal => {
                let c = ca * &a[i].1 - cb * &b[j].1;
                if !c.is_zero() {
                    out.push((bm.take().unwrap(), c));
                }
                i += 1;
                j += 1;
                bm = b.get(j).map(|t| t.0.mul(m));
            }
        }
    }
    out
}

fn find_reducer<'a>(basis: &'a [IPoly], m: &Monomial) -> Option<&'a IPoly> {
    basis.iter().find(|g| g.lm().divides(m))
}

/// Reduces the leading term until it is irreducible.
fn top_reduce(mut p: IPoly, basis: &[IPoly], order: MonomialOrder, budget: &mut Budget) -> Result<IPoly> {
    let mut steps = 0u32;
    while !p.is_zero() {
        let Some(g) = find_reducer(basis, p.lm()) else {
            break;
        };
        budget.step()?;
        let t = p.lm().div(g.lm()).unwrap();
        let gg = p.lc().gcd(g.lc());
        let ca = g.lc() / &gg;
        let cb = p.lc() / &gg;
        p.terms = combine(&p.terms[1..], &ca, &g.terms[1..], &t, &cb, order);
        steps += 1;
        if steps % 8 == 0 {
            p.make_primitive();
        }
    }
    p.make_primitive();
    Ok(p)
}

/// Full reduction. Returns `(r, s)` with `s*p ≡ r` modulo the basis.
fn full_reduce(
    p: &IPoly,
    basis: &[IPoly],
    order: MonomialOrder,
    budget: &mut Budget,
) -> Result<(IPoly, Scalar)> {
    let mut rest = p.terms.clone();
    let mut done: Vec<(Monomial, BigInt)> = Vec::new();
    let mut scale = Scalar::one();
    let mut steps = 0u32;
    while !rest.is_empty() {
        let m = &rest[0].0;
        match find_reducer(basis, m) {
            None => {
                let t = rest.remove(0);
                done.push(t);
            }
            Some(g) => {
                budget.step()?;
                let t = m.div(g.lm()).unwrap();
                let lc = &rest[0].1;
                let gg = lc.gcd(g.lc());
                let ca = g.lc() / &gg;
                let cb = lc / &gg;
                rest = combine(&rest[1..], &ca, &g.terms[1..], &t, &cb, order);
                if !ca.is_one() {
                    for d in &mut done {
                        d.1 = &d.1 * &ca;
                    }
                    scale *= Scalar::from_integer(ca);
                }
                steps += 1;
                if steps % 8 == 0 || rest.is_empty() {
                    let c = gcd_all(done.iter().chain(rest.iter()).map(|t| &t.1));
                    if !c.is_zero() && !c.is_one() {
                        for d in done.iter_mut().chain(rest.iter_mut()) {
                            d.1 = &d.1 / &c;
                        }
                        scale /= Scalar::from_integer(c);
                    }
                }
            }
        }
    }
    Ok((IPoly { terms: done }, scale))
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Reduced Groebner basis for a fixed term order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    polys: Vec<Polynomial>,
    ints: Vec<IPoly>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Monic basis elements sorted by increasing leading monomial.
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    /// Leading monomials under the run's order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.ints.iter().map(|g| g.lm().clone()).collect()
    }

    /// Exact remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        crate::error::check_dim(self.nvars, f.nvars())?;
        if f.is_zero() {
            return Ok(f.clone());
        }
        let (s0, ip) = IPoly::from_poly(f, self.order);
        let mut budget = Budget::new();
        let (r, s) = full_reduce(&ip, &self.ints, self.order, &mut budget)?;
        Ok(r.to_poly(self.nvars).scale(&(s0 / s)))
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> Result<bool> {
        crate::error::check_dim(self.nvars, f.nvars())?;
        if f.is_zero() {
            return Ok(true);
        }
        if self.is_unit() {
            return Ok(true);
        }
        let (_, ip) = IPoly::from_poly(f, self.order);
        let mut budget = Budget::new();
        let (r, _) = full_reduce(&ip, &self.ints, self.order, &mut budget)?;
        Ok(r.is_zero())
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn groebner(gens: &[Polynomial], nvars: usize, order: MonomialOrder) -> Result<GroebnerBasis> {
    for g in gens {
        crate::error::check_dim(nvars, g.nvars())?;
    }
    let mut budget = Budget::new();
    let mut basis: Vec<IPoly> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let unit = |nvars| GroebnerBasis {
        order,
        nvars,
        polys: vec![Polynomial::one(nvars)],
        ints: vec![IPoly {
            terms: vec![(Monomial::one(nvars), BigInt::one())],
        }],
    };

    let mut inputs: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| IPoly::from_poly(g, order).1)
        .collect();
    inputs.sort_by(|a, b| {
        a.sugar_degree()
            .cmp(&b.sugar_degree())
            .then_with(|| order.cmp(a.lm(), b.lm()))
    });
    for p in inputs {
        let sugar = p.sugar_degree();
        let h = top_reduce(p, &basis, order, &mut budget)?;
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Ok(unit(nvars));
        }
        insert(&mut basis, &mut sugars, &mut active, &mut pairs, h, sugar);
    }

    while !pairs.is_empty() {
        let idx = select_pair(&pairs, order);
        let pair = pairs.swap_remove(idx);
        let (gi, gj) = (&basis[pair.i], &basis[pair.j]);
        let ti = pair.lcm.div(gi.lm()).unwrap();
        let tj = pair.lcm.div(gj.lm()).unwrap();
        let gg = gi.lc().gcd(gj.lc());
        let ci = gj.lc() / &gg;
        let cj = gi.lc() / &gg;
        let left: Vec<(Monomial, BigInt)> = gi.terms[1..]
            .iter()
            .map(|(m, c)| (m.mul(&ti), c * &ci))
            .collect();
        let s = combine(&left, &BigInt::one(), &gj.terms[1..], &tj, &cj, order);
        budget.step()?;
        let mut sp = IPoly { terms: s };
        sp.make_primitive();
        let h = top_reduce(sp, &basis, order, &mut budget)?;
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Ok(unit(nvars));
        }
        insert(&mut basis, &mut sugars, &mut active, &mut pairs, h, pair.sugar);
    }

    // minimal basis, then interreduce tails
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let lm = basis[i].lm();
        let redundant = (0..basis.len()).any(|j| {
            j != i && basis[j].lm().divides(lm) && (basis[j].lm() != lm || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let minimal: Vec<IPoly> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced: Vec<IPoly> = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<IPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let head = IPoly {
            terms: g.terms[1..].to_vec(),
        };
        // s*tail ≡ r, so den*s*g ≡ num*lc*lm + den*r
        let (r, s) = full_reduce(&head, &others, order, &mut budget)?;
        let (num, den) = (s.numer().clone(), s.denom().clone());
        let mut terms = vec![(g.terms[0].0.clone(), &g.terms[0].1 * &num)];
        terms.extend(r.terms.into_iter().map(|(m, c)| (m, c * &den)));
        let mut p = IPoly { terms };
        p.make_primitive();
        reduced.push(p);
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let polys = reduced.iter().map(|g| g.to_poly(nvars).monic_in(order)).collect();
    Ok(GroebnerBasis {
        order,
        nvars,
        polys,
        ints: reduced,
    })
}

fn select_pair(pairs: &[Pair], order: MonomialOrder) -> usize {
    let mut best = 0;
    for k in 1..pairs.len() {
        let (a, b) = (&pairs[k], &pairs[best]);
        let better = a
            .sugar
            .cmp(&b.sugar)
            .then_with(|| order.cmp(&a.lcm, &b.lcm))
            .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
        if better == Ordering::Less {
            best = k;
        }
    }
    best
}

/// Adds `h` and updates the pair list with the Gebauer-Moeller criteria.
fn insert(
    basis: &mut Vec<IPoly>,
    sugars: &mut Vec<u32>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: IPoly,
    sugar: u32,
) {
    let hidx = basis.len();
    let hlm = h.lm().clone();
    let sugar_of = |i: usize, lcm: &Monomial, basis: &[IPoly], sugars: &[u32]| {
        sugars[i] + lcm.degree() - basis[i].lm().degree()
    };
    let h_sugar = sugar.max(h.sugar_degree());

    // candidate pairs (g, h)
    let cands: Vec<(usize, Monomial, bool)> = (0..basis.len())
        .filter(|&i| active[i])
        .map(|i| {
            let lm = basis[i].lm();
            (i, lm.lcm(&hlm), lm.coprime(&hlm))
        })
        .collect();
    // chain criterion among the new pairs; one representative per lcm
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for (k, (i, lcm, cop)) in cands.iter().enumerate() {
        let dominated = cands.iter().enumerate().any(|(k2, (_, l2, _))| {
            k2 != k && l2.divides(lcm) && (l2 != lcm || k2 < k)
        });
        if !dominated {
            kept.push((*i, lcm.clone(), *cop));
        }
    }
    // if any pair with a given lcm is coprime, all pairs with that lcm can go
    let coprime_lcms: Vec<Monomial> = cands
        .iter()
        .filter(|(_, _, cop)| *cop)
        .map(|(_, l, _)| l.clone())
        .collect();
    kept.retain(|(_, l, cop)| !*cop && !coprime_lcms.contains(l));

    // old pairs killed by h
    pairs.retain(|p| {
        !(hlm.divides(&p.lcm)
            && basis[p.i].lm().lcm(&hlm) != p.lcm
            && basis[p.j].lm().lcm(&hlm) != p.lcm)
    });

    basis.push(h);
    sugars.push(h_sugar);
    active.push(true);
    for (i, lcm, _) in kept {
        let s = sugar_of(i, &lcm, basis, sugars).max(sugar_of(hidx, &lcm, basis, sugars));
        pairs.push(Pair {
            i,
            j: hidx,
            lcm,
            sugar: s,
        });
    }
    for i in 0..hidx {
        if active[i] && hlm.divides(basis[i].lm()) {
            active[i] = false;
        }
    }
}

impl Polynomial {
    /// Scales so the leading coefficient under `order` is one.
    pub fn monic_in(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term_in(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }
}
