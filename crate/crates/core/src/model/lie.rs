use std::collections::BTreeMap;
use std::fmt;

use multest_algebra::scalar::format_scalar;
use multest_algebra::{Matrix, Scalar};
use num::{One, Zero};

use crate::error::{Error, Result};

/// PBW monomial `Δ_1^{t_1} … Δ_d^{t_d}` over a fixed subalgebra basis.
///
/// As an operator the word applies `Δ_1` first (all `t_1` times), then `Δ_2`,
/// and so on; in the enveloping algebra it is the product
/// `Δ_d^{t_d} ⋯ Δ_1^{t_1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DerivationWord {
    exps: Vec<u32>,
}

impl DerivationWord {
    pub fn new(exps: Vec<u32>) -> Self {
        DerivationWord { exps }
    }

    pub fn one(d: usize) -> Self {
        DerivationWord { exps: vec![0; d] }
    }

    pub fn single(d: usize, i: usize) -> Self {
        let mut exps = vec![0; d];
        exps[i] = 1;
        DerivationWord { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn d(&self) -> usize {
        self.exps.len()
    }

    pub fn total(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.total() == 0
    }

    /// Basis indices in application order.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &t) in self.exps.iter().enumerate() {
            out.extend(std::iter::repeat(i).take(t as usize));
        }
        out
    }
}

impl fmt::Display for DerivationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &t)| t > 0)
            .map(|(i, &t)| if t == 1 { format!("D{}", i + 1) } else { format!("D{}^{}", i + 1, t) })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// All words of total at most `t` over `d` letters, in lexicographic order of
/// the exponent vector. There are `binom(t + d, d)` of them.
pub fn enumerate_words(d: usize, t: u32) -> Vec<DerivationWord> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<DerivationWord>) {
        if i == cur.len() {
            out.push(DerivationWord::new(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0; d];
    rec(0, t, &mut cur, &mut out);
    out
}

/// Lie algebra of a matrix group: basis matrices and structure constants.
#[derive(Clone, Debug)]
pub struct LieAlgebraData {
    pub names: Vec<String>,
    pub matrices: Vec<Matrix>,
    /// `brackets[i][j]` are the coordinates of `[A_i, A_j]`.
    pub brackets: Vec<Vec<Vec<Scalar>>>,
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        v.extend(m.row(i).iter().cloned());
    }
    v
}

/// Coordinates of `v` in the span of `basis`, if it lies there.
pub(crate) fn coordinates(basis: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return if v.iter().all(|c| c.is_zero()) { Some(Vec::new()) } else { None };
    }
    let rows = v.len();
    let mut a = Matrix::zeros(rows, basis.len());
    for (j, b) in basis.iter().enumerate() {
        for i in 0..rows {
            a[(i, j)] = b[i].clone();
        }
    }
    a.solve(v)
}

impl LieAlgebraData {
    pub fn from_matrices(names: Vec<String>, matrices: Vec<Matrix>) -> Result<Self> {
        let flat: Vec<Vec<Scalar>> = matrices.iter().map(flatten).collect();
        let d = matrices.len();
        let rank = Matrix::from_rows(flat.clone()).rank();
        if rank != d {
            return Err(Error::Model("Lie basis matrices are linearly dependent".into()));
        }
        let mut brackets = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let c = &(&matrices[i] * &matrices[j]).sub(&(&matrices[j] * &matrices[i]));
                brackets[i][j] = coordinates(&flat, &flatten(c))
                    .ok_or_else(|| Error::Model(format!("bracket [{}, {}] leaves the algebra", names[i], names[j])))?;
            }
        }
        Ok(LieAlgebraData { names, matrices, brackets })
    }

    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    /// Matrix of `Σ c_j A_j`.
    pub fn element(&self, coeffs: &[Scalar]) -> Matrix {
        let m = self.matrices[0].rows();
        let mut acc = Matrix::zeros(m, m);
        for (c, a) in coeffs.iter().zip(&self.matrices) {
            if !c.is_zero() {
                acc = acc.add(&a.scale(c));
            }
        }
        acc
    }

    pub fn coords_of(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        let flat: Vec<Vec<Scalar>> = self.matrices.iter().map(flatten).collect();
        coordinates(&flat, &flatten(m))
    }

    pub fn bracket(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for i in 0..d {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if b[j].is_zero() {
                    continue;
                }
                let w = &a[i] * &b[j];
                for (o, c) in out.iter_mut().zip(&self.brackets[i][j]) {
                    *o += &w * c;
                }
            }
        }
        out
    }

    /// Antisymmetry and the Jacobi identity on basis triples.
    pub fn check_jacobi(&self) -> std::result::Result<(), String> {
        let d = self.dim();
        let e = |i: usize| -> Vec<Scalar> {
            let mut v = vec![Scalar::zero(); d];
            v[i] = Scalar::one();
            v
        };
        for i in 0..d {
            for j in 0..d {
                let s: Vec<Scalar> = self.brackets[i][j].iter().zip(&self.brackets[j][i]).map(|(a, b)| a + b).collect();
                if s.iter().any(|c| !c.is_zero()) {
                    return Err(format!("bracket of {} and {} is not antisymmetric", self.names[i], self.names[j]));
                }
                for k in 0..d {
                    let a = self.bracket(&e(i), &self.bracket(&e(j), &e(k)));
                    let b = self.bracket(&e(j), &self.bracket(&e(k), &e(i)));
                    let c = self.bracket(&e(k), &self.bracket(&e(i), &e(j)));
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return Err(format!("Jacobi fails on ({}, {}, {})", self.names[i], self.names[j], self.names[k]));
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `Ad(g)` in the basis: column `j` holds `g A_j g^{-1}`.
    pub fn adjoint(&self, g: &Matrix) -> Result<Matrix> {
        let ginv = g.inverse()?;
        let d = self.dim();
        let mut out = Matrix::zeros(d, d);
        for j in 0..d {
            let c = &(g * &self.matrices[j]) * &ginv;
            let coords = self
                .coords_of(&c)
                .ok_or_else(|| Error::Domain("conjugate leaves the Lie algebra".into()))?;
            for i in 0..d {
                out[(i, j)] = coords[i].clone();
            }
        }
        Ok(out)
    }
}

/// Bracket-closed subspace `𝔟 ⊆ 𝔤`, given by coordinates over the full basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSubalgebra {
    basis: Vec<Vec<Scalar>>,
    /// `structure[i][j]` are the coordinates of `[b_i, b_j]` in this basis.
    structure: Vec<Vec<Vec<Scalar>>>,
}

impl LieSubalgebra {
    pub fn new(lie: &LieAlgebraData, basis: Vec<Vec<Scalar>>) -> Result<Self> {
        let full = lie.dim();
        if basis.iter().any(|v| v.len() != full) {
            return Err(Error::Domain(format!("subalgebra vectors must have {} coordinates", full)));
        }
        if Matrix::from_rows(basis.clone()).rank() != basis.len() && !basis.is_empty() {
            return Err(Error::Domain("subalgebra basis is linearly dependent".into()));
        }
        let d = basis.len();
        let mut structure = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let b = lie.bracket(&basis[i], &basis[j]);
                structure[i][j] = coordinates(&basis, &b)
                    .ok_or_else(|| Error::Domain("subalgebra is not closed under the bracket".into()))?;
            }
        }
        Ok(LieSubalgebra { basis, structure })
    }

    pub fn full(lie: &LieAlgebraData) -> Self {
        let d = lie.dim();
        let basis = (0..d)
            .map(|i| (0..d).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        LieSubalgebra::new(lie, basis).expect("full algebra is closed")
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn structure(&self, i: usize, j: usize) -> &[Scalar] {
        &self.structure[i][j]
    }

    /// Same subspace of `𝔤`.
    pub fn same_span(&self, other: &LieSubalgebra) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        other.basis.iter().all(|v| coordinates(&self.basis, v).is_some())
    }

    /// Whether `Ad(g)` maps the subalgebra into itself.
    pub fn ad_stable(&self, lie: &LieAlgebraData, g: &Matrix) -> Result<bool> {
        Ok(self.restricted_adjoint(lie, g)?.is_some())
    }

    /// `Ad(g)` restricted to the subalgebra, in its own basis, when stable.
    pub fn restricted_adjoint(&self, lie: &LieAlgebraData, g: &Matrix) -> Result<Option<Matrix>> {
        let ad = lie.adjoint(g)?;
        let d = self.dim();
        let mut out = Matrix::zeros(d, d);
        for (j, v) in self.basis.iter().enumerate() {
            let image = ad.apply(v);
            match coordinates(&self.basis, &image) {
                Some(c) => {
                    for i in 0..d {
                        out[(i, j)] = c[i].clone();
                    }
                }
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    /// Applies `Ad(g)` to a word, returning an element of the enveloping algebra.
    pub fn adjoint_word(&self, lie: &LieAlgebraData, g: &Matrix, word: &DerivationWord) -> Result<UElement> {
        let ad = self
            .restricted_adjoint(lie, g)?
            .ok_or_else(|| Error::Stability("Ad(g) does not preserve the subalgebra".into()))?;
        let d = self.dim();
        let mut acc = UElement::one(d);
        // the enveloping-algebra product is Δ_d^{t_d} ⋯ Δ_1^{t_1}
        for &i in word.letters().iter().rev() {
            let image = UElement::linear(d, &ad.column(i));
            acc = acc.mul(&image, self);
        }
        Ok(acc)
    }
}

/// Element of the enveloping algebra `𝒰(𝔟)` in the PBW basis of
/// [`DerivationWord`]s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UElement {
    d: usize,
    terms: BTreeMap<DerivationWord, Scalar>,
}

impl UElement {
    pub fn zero(d: usize) -> Self {
        UElement { d, terms: BTreeMap::new() }
    }

    pub fn one(d: usize) -> Self {
        UElement::word(DerivationWord::one(d))
    }

    pub fn word(w: DerivationWord) -> Self {
        let d = w.d();
        let mut terms = BTreeMap::new();
        terms.insert(w, Scalar::one());
        UElement { d, terms }
    }

    pub fn linear(d: usize, coeffs: &[Scalar]) -> Self {
        let mut out = UElement::zero(d);
        for (i, c) in coeffs.iter().enumerate() {
            out.add_term(DerivationWord::single(d, i), c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DerivationWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word total among the terms; 0 for the zero element.
    pub fn filtration_degree(&self) -> u32 {
        self.terms.keys().map(|w| w.total()).max().unwrap_or(0)
    }

    fn add_term(&mut self, w: DerivationWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let vanished = {
            let e = self.terms.entry(w.clone()).or_insert_with(Scalar::zero);
            *e += c;
            e.is_zero()
        };
        if vanished {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    /// Product `self · other` in the enveloping algebra.
    pub fn mul(&self, other: &UElement, sub: &LieSubalgebra) -> UElement {
        let mut out = UElement::zero(self.d);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut seq = sequence_of(wa);
                seq.extend(sequence_of(wb));
                straighten(&seq, &(ca * cb), sub, &mut out);
            }
        }
        out
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{}*{}", format_scalar(c), w)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Left-to-right product sequence of a word: descending letter indices.
fn sequence_of(w: &DerivationWord) -> Vec<usize> {
    let mut s = w.letters();
    s.reverse();
    s
}

fn straighten(seq: &[usize], coeff: &Scalar, sub: &LieSubalgebra, out: &mut UElement) {
    if coeff.is_zero() {
        return;
    }
    match seq.windows(2).position(|p| p[0] < p[1]) {
        None => {
            let mut exps = vec![0u32; out.d];
            for &i in seq {
                exps[i] += 1;
            }
            out.add_term(DerivationWord::new(exps), coeff.clone());
        }
        Some(p) => {
            let (a, b) = (seq[p], seq[p + 1]);
            let mut swapped = seq.to_vec();
            swapped.swap(p, p + 1);
            straighten(&swapped, coeff, sub, out);
            // Δ_a Δ_b = Δ_b Δ_a + [Δ_a, Δ_b]
            for (c, k) in sub.structure(a, b).iter().zip(0..) {
                if c.is_zero() {
                    continue;
                }
                let mut shorter: Vec<usize> = seq[..p].to_vec();
                shorter.push(k);
                shorter.extend_from_slice(&seq[p + 2..]);
                straighten(&shorter, &(coeff * c), sub, out);
            }
        }
    }
}
