use smallvec::SmallVec;
use std::cmp::Ordering;

pub(crate) type Exps = SmallVec<[u32; 12]>;

/// A power product over a fixed number of variables.
///
/// The `Ord` instance is degree-reverse-lexicographic; it is the storage
/// order of [`crate::Polynomial`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Monomial {
            degree: exps.iter().sum(),
            exps: exps.iter().copied().collect(),
        }
    }

    pub(crate) fn from_exps(exps: Exps) -> Self {
        Monomial {
            degree: exps.iter().sum(),
            exps,
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            degree: 0,
        }
    }

    pub fn var(nvars: usize, index: usize, power: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = power;
        m.degree = power;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, if exact.
    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        let exps: Exps = self
            .exps
            .iter()
            .zip(divisor.exps.iter())
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exps,
            degree: self.degree - divisor.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Reindexes variables: variable `i` of `self` becomes variable `map[i]`
    /// of a monomial over `nvars` variables.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut exps: Exps = smallvec::smallvec![0; nvars];
        for (i, e) in self.exps.iter().enumerate() {
            exps[map[i]] += e;
        }
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    pub(crate) fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = e;
        Monomial::from_exps(exps)
    }
}

pub(crate) fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.exps.iter().zip(b.exps.iter()) {
        if x != y {
            return y.cmp(x);
        }
    }
    a.exps.len().cmp(&b.exps.len())
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.exps.len().cmp(&other.exps.len()) {
            Ordering::Equal => degrevlex(self, other),
            o => o,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Term orders available to Groebner runs. Variables are ranked
/// `x0 < x1 < ... < xN`, so degrevlex breaks degree ties in favour of the
/// monomial with the smaller power of `x0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    /// Block order: degree and reverse-lex on the first `k` variables, ties
    /// broken the same way on the rest. Eliminates the first `k` variables.
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Lex => a.exps.iter().rev().cmp(b.exps.iter().rev()),
            MonomialOrder::Block(k) => {
                let (a1, a2) = a.exps.split_at(k);
                let (b1, b2) = b.exps.split_at(k);
                block_cmp(a1, b1).then_with(|| block_cmp(a2, b2))
            }
        }
    }
}

fn block_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b.iter()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}
