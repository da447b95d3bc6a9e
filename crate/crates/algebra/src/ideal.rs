use std::fmt;
use std::sync::{Arc, OnceLock};

use num::Zero;

use crate::error::{check_dim, AlgebraError, Result};
use crate::groebner::{groebner, GroebnerBasis};
use crate::hilbert::{hilbert_data, HilbertData};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{default_names, Polynomial};
use crate::scalar::Scalar;

/// Ideal of a polynomial ring, given by canonical generators.
///
/// Generators are monic, sorted and free of duplicates. Two `Ideal`s compare
/// equal as values only when their generator lists agree; use
/// [`Ideal::equals`] for ideal equality, or compare [`Ideal::reduced`] forms.
#[derive(Clone)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<Polynomial>,
    homogeneous: bool,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.gens == other.gens
    }
}

impl Eq for Ideal {}

impl std::hash::Hash for Ideal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.nvars.hash(state);
        self.gens.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.nvars
            .cmp(&other.nvars)
            .then_with(|| self.gens.len().cmp(&other.gens.len()))
            .then_with(|| self.gens.cmp(&other.gens))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self)
    }
}

impl Ideal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut v: Vec<Polynomial> = Vec::new();
        for g in gens {
            check_dim(nvars, g.nvars())?;
            if !g.is_zero() {
                v.push(g.monic());
            }
        }
        v.sort();
        v.dedup();
        if v.iter().any(|g| g.is_constant()) {
            v = vec![Polynomial::one(nvars)];
        }
        let homogeneous = v.iter().all(|g| g.is_homogeneous());
        Ok(Ideal {
            nvars,
            gens: v,
            homogeneous,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(nvars: usize) -> Self {
        Ideal::new(nvars, []).unwrap()
    }

    pub fn unit(nvars: usize) -> Self {
        Ideal::new(nvars, [Polynomial::one(nvars)]).unwrap()
    }

    pub fn principal(p: Polynomial) -> Self {
        let n = p.nvars();
        Ideal::new(n, [p]).unwrap()
    }

    /// The irrelevant ideal `(x0, ..., xN)`.
    pub fn irrelevant(nvars: usize) -> Self {
        Ideal::new(nvars, (0..nvars).map(|i| Polynomial::var(nvars, i))).unwrap()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// True when no generators are stored.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced degrevlex Groebner basis, computed once.
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis>> {
        if let Some(g) = self.gb.get() {
            return Ok(g.clone());
        }
        let g = Arc::new(groebner(&self.gens, self.nvars, MonomialOrder::DegRevLex)?);
        Ok(self.gb.get_or_init(|| g).clone())
    }

    pub fn groebner_in(&self, order: MonomialOrder) -> Result<GroebnerBasis> {
        if order == MonomialOrder::DegRevLex {
            return Ok((*self.groebner()?).clone());
        }
        groebner(&self.gens, self.nvars, order)
    }

    /// The ideal with its reduced Groebner basis as generators, so equal
    /// ideals have equal values.
    pub fn reduced(&self) -> Result<Ideal> {
        let gb = self.groebner()?;
        let out = Ideal::new(self.nvars, gb.polys().iter().cloned())?;
        let _ = out.gb.set(gb);
        Ok(out)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        check_dim(self.nvars, f.nvars())?;
        self.groebner()?.reduces_to_zero(f)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.groebner()?.normal_form(f)
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        check_dim(self.nvars, other.nvars)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        check_dim(self.nvars, other.nvars)?;
        if self == other {
            return Ok(true);
        }
        Ok(self.groebner()?.polys() == other.groebner()?.polys())
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.len() == 1 && self.gens[0].is_constant() {
            return Ok(true);
        }
        Ok(self.groebner()?.is_unit())
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        Ideal::new(self.nvars, self.gens.iter().cloned().chain(extra))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        check_dim(self.nvars, other.nvars)?;
        self.with_generators(other.gens.iter().cloned())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        check_dim(self.nvars, other.nvars)?;
        let mut v = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                v.push(a * b);
            }
        }
        Ideal::new(self.nvars, v)
    }

    pub fn power(&self, k: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(self.nvars);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Image under the ring map sending `x_i` to `images[i]`.
    pub fn map(&self, images: &[Polynomial]) -> Result<Ideal> {
        let target = images.first().map_or(0, |p| p.nvars());
        let v: Result<Vec<Polynomial>> = self.gens.iter().map(|g| g.substitute(images)).collect();
        Ideal::new(target, v?)
    }

    /// Moves variable `i` to `map[i]` in a ring with `nvars` variables.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Ideal {
        Ideal::new(nvars, self.gens.iter().map(|g| g.remap(map, nvars))).unwrap()
    }

    /// `I ∩ k[remaining variables]`, expressed in the same ambient ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        if vars.is_empty() {
            return Ok(self.clone());
        }
        let n = self.nvars;
        let mut order_vars: Vec<usize> = vars.to_vec();
        order_vars.sort_unstable();
        order_vars.dedup();
        for &v in &order_vars {
            if v >= n {
                return Err(AlgebraError::Dimension { expected: n, found: v + 1 });
            }
        }
        order_vars.extend((0..n).filter(|v| !vars.contains(v)));
        // forward[i] = position of variable i
        let mut forward = vec![0usize; n];
        for (pos, &v) in order_vars.iter().enumerate() {
            forward[v] = pos;
        }
        let k = vars.len();
        let moved = self.remap(&forward, n);
        let gb = moved.groebner_in(MonomialOrder::Block(k))?;
        let kept: Vec<Polynomial> = gb
            .polys()
            .iter()
            .filter(|p| (0..k).all(|v| !p.uses_var(v)))
            .map(|p| p.remap(&order_vars, n))
            .collect();
        Ideal::new(n, kept)
    }

    /// Adds `extra` fresh variables at the end.
    pub fn extend(&self, extra: usize) -> Ideal {
        let n = self.nvars + extra;
        Ideal::new(n, self.gens.iter().map(|g| g.embed(n, 0))).unwrap()
    }

    /// Drops trailing variables that no generator uses.
    pub fn truncate(&self, nvars: usize) -> Result<Ideal> {
        let v: Result<Vec<Polynomial>> = self.gens.iter().map(|g| g.truncate_vars(nvars)).collect();
        Ideal::new(nvars, v?)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        check_dim(self.nvars, other.nvars)?;
        let n = self.nvars;
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ok(Ideal::zero(n));
        }
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        // t*I + (1-t)*J with t = variable 0
        let t = Polynomial::var(n + 1, 0);
        let one_minus_t = &Polynomial::one(n + 1) - &t;
        let mut v = Vec::new();
        for g in &self.gens {
            v.push(&t * &g.embed(n + 1, 1));
        }
        for g in &other.gens {
            v.push(&one_minus_t * &g.embed(n + 1, 1));
        }
        let big = Ideal::new(n + 1, v)?;
        let gb = big.groebner_in(MonomialOrder::Block(1))?;
        let kept: Result<Vec<Polynomial>> = gb
            .polys()
            .iter()
            .filter(|p| !p.uses_var(0))
            .map(|p| {
                let back: Vec<usize> = std::iter::once(0).chain(0..n).collect();
                let q = p.remap(&back, n + 1);
                q.truncate_vars(n)
            })
            .collect();
        Ideal::new(n, kept?)
    }

    pub fn intersect_all(ideals: &[Ideal], nvars: usize) -> Result<Ideal> {
        let mut acc = Ideal::unit(nvars);
        for i in ideals {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    /// `I : (g)`.
    pub fn quotient_poly(&self, g: &Polynomial) -> Result<Ideal> {
        check_dim(self.nvars, g.nvars())?;
        if g.is_zero() {
            return Ok(Ideal::unit(self.nvars));
        }
        let inter = self.intersect(&Ideal::principal(g.clone()))?;
        let mut v = Vec::new();
        for h in inter.generators() {
            v.push(h.exact_div(g).ok_or_else(|| {
                AlgebraError::Unsupported("intersection element not divisible".into())
            })?);
        }
        Ideal::new(self.nvars, v)
    }

    /// `I : J`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        check_dim(self.nvars, other.nvars)?;
        let parts: Result<Vec<Ideal>> = other.gens.iter().map(|g| self.quotient_poly(g)).collect();
        Ideal::intersect_all(&parts?, self.nvars)
    }

    /// `I : g^∞` by adjoining `1 - t*g` and eliminating `t`.
    pub fn saturate_poly(&self, g: &Polynomial) -> Result<Ideal> {
        check_dim(self.nvars, g.nvars())?;
        if g.is_zero() {
            return Ok(Ideal::unit(self.nvars));
        }
        if g.is_constant() {
            return Ok(self.clone());
        }
        match single_variable(g) {
            Some(v) if self.homogeneous => self.saturate_var(v),
            _ => self.saturate_poly_rabinowitsch(g),
        }
    }

    /// `I : x_v^∞` for homogeneous `I`, from a degrevlex basis in which `x_v`
    /// is the smallest variable.
    pub fn saturate_var(&self, v: usize) -> Result<Ideal> {
        if !self.homogeneous {
            return self.saturate_poly_rabinowitsch(&Polynomial::var(self.nvars, v));
        }
        let n = self.nvars;
        let smallest = 0;
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(v, smallest);
        let moved = self.remap(&perm, n);
        let gb = moved.groebner()?;
        let mut out = Vec::new();
        for p in gb.polys() {
            let e = p.terms().map(|(m, _)| m.exp(smallest)).min().unwrap_or(0);
            let q = p.div_monomial(&Monomial::var(n, smallest, e)).unwrap();
            out.push(q.remap(&perm, n));
        }
        Ideal::new(n, out)
    }

    fn saturate_poly_rabinowitsch(&self, g: &Polynomial) -> Result<Ideal> {
        let n = self.nvars;
        let t = Polynomial::var(n + 1, n);
        let rab = &Polynomial::one(n + 1) - &(&t * &g.embed(n + 1, 0));
        let big = self.extend(1).with_generators([rab])?;
        big.eliminate(&[n])?.truncate(n)
    }

    /// `I : J^∞`, as the intersection of the saturations by each generator of `J`.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        check_dim(self.nvars, other.nvars)?;
        if other.gens.is_empty() {
            return Ok(Ideal::unit(self.nvars));
        }
        let parts: Result<Vec<Ideal>> = other.gens.iter().map(|g| self.saturate_poly(g)).collect();
        let parts = parts?;
        Ideal::intersect_all(&parts, self.nvars)
    }

    /// Saturation by the ideal computed the slow way: iterated quotients
    /// until the chain stabilizes. Used as an oracle.
    pub fn saturate_iterated(&self, other: &Ideal) -> Result<Ideal> {
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(other)?;
            if next.is_subset_of(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Saturation by the irrelevant ideal: the intersection of the primary
    /// components whose zero set is nonempty.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        let n = self.nvars;
        if self.is_unit()? {
            return Ok(Ideal::unit(n));
        }
        if !self.homogeneous {
            return Err(AlgebraError::Domain("saturation by the irrelevant ideal needs a homogeneous ideal".into()));
        }
        let mut sats = Vec::with_capacity(n);
        for v in 0..n {
            let s = self.saturate_var(v)?;
            if s.is_subset_of(self)? {
                return self.reduced();
            }
            sats.push(s);
        }
        'outer: for i in 0..n {
            for j in 0..n {
                if i != j && !sats[i].is_subset_of(&sats[j])? {
                    continue 'outer;
                }
            }
            return sats[i].reduced();
        }
        for coeffs in generic_coefficient_lists(n) {
            let s = self.saturate_linear(&coeffs)?;
            let mut ok = true;
            for si in &sats {
                if !s.is_subset_of(si)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                return s.reduced();
            }
        }
        Ideal::intersect_all(&sats, n)?.reduced()
    }

    /// `I : ℓ^∞` with `ℓ = x_0 + Σ coeffs[k-1] x_k`.
    fn saturate_linear(&self, coeffs: &[Scalar]) -> Result<Ideal> {
        let n = self.nvars;
        let shift = |sign: i64| -> Vec<Polynomial> {
            let mut images: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(n, i)).collect();
            let mut l = Polynomial::var(n, 0);
            for (k, c) in coeffs.iter().enumerate() {
                l = &l + &Polynomial::var(n, k + 1).scale(&(c * Scalar::from_integer(sign.into())));
            }
            images[0] = l;
            images
        };
        let forward = self.map(&shift(-1))?;
        let s = forward.saturate_var(0)?;
        s.map(&shift(1))
    }

    /// Projective dimension and degree of the zero set of a homogeneous ideal.
    pub fn dim_degree(&self) -> Result<HilbertData> {
        if !self.homogeneous {
            return Err(AlgebraError::Domain("Hilbert data needs a homogeneous ideal".into()));
        }
        let gb = self.groebner()?;
        Ok(hilbert_data(&gb.leading_monomials(), self.nvars))
    }

    /// Krull dimension of `k[x]/I` for any ideal; `-1` for the unit ideal.
    pub fn affine_dim(&self) -> Result<i64> {
        if self.is_unit()? {
            return Ok(-1);
        }
        let gb = self.groebner()?;
        Ok(hilbert_data(&gb.leading_monomials(), self.nvars).dim + 1)
    }

    pub fn zero_set_empty(&self) -> Result<bool> {
        Ok(self.dim_degree()?.dim < 0)
    }

    /// `f ∈ √I`, by Rabinowitsch.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        check_dim(self.nvars, f.nvars())?;
        if f.is_zero() {
            return Ok(true);
        }
        let n = self.nvars;
        let t = Polynomial::var(n + 1, n);
        let rab = &Polynomial::one(n + 1) - &(&t * &f.embed(n + 1, 0));
        self.extend(1).with_generators([rab])?.is_unit()
    }

    /// Dehomogenizes every generator at `x_k`.
    pub fn dehomogenize(&self, k: usize) -> Ideal {
        Ideal::new(self.nvars, self.gens.iter().map(|g| g.dehomogenize(k))).unwrap()
    }

    pub fn vanishes_at(&self, point: &[Scalar]) -> Result<bool> {
        for g in &self.gens {
            if !g.evaluate(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string_with(names)).collect();
        format!("({})", parts.join(", "))
    }

    /// Generators as strings over `names`.
    pub fn generator_strings(&self, names: &[String]) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string_with(names)).collect()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_names(self.nvars)))
    }
}

fn single_variable(g: &Polynomial) -> Option<usize> {
    if g.num_terms() != 1 {
        return None;
    }
    let (m, _) = g.leading_term()?;
    if m.degree() != 1 {
        return None;
    }
    m.exps().iter().position(|&e| e == 1)
}

/// Deterministic coefficient vectors for generic linear forms.
fn generic_coefficient_lists(n: usize) -> Vec<Vec<Scalar>> {
    let seeds: [i64; 4] = [1, 2, 3, 7];
    let mut out = Vec::new();
    for (r, s) in seeds.iter().enumerate() {
        out.push(
            (0..n - 1)
                .map(|k| {
                    let v = (s * (k as i64 + 1)).pow(r as u32 + 1) % 97 + 1;
                    if k % 2 == 0 {
                        Scalar::from_integer(v.into())
                    } else {
                        -Scalar::from_integer(v.into())
                    }
                })
                .collect(),
        );
    }
    out
}
