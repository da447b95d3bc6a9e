//! Minimal primes of small homogeneous ideals.

use crate::error::Result;
use crate::factor::{factor, quadric_rank};
use crate::ideal::Ideal;
use crate::poly::Polynomial;

/// A minimal prime. `certified` is false when primality over an algebraic
/// closure could not be verified, e.g. a rational irreducible factor that
/// splits over the complex numbers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimeComponent {
    pub ideal: Ideal,
    pub certified: bool,
}

const MAX_DEPTH: usize = 64;

/// Minimal primes of a homogeneous ideal whose zero sets are nonempty, sorted canonically.
pub fn minimal_primes(i: &Ideal) -> Result<Vec<PrimeComponent>> {
    let mut found = Vec::new();
    split(i.clone(), &mut found, 0)?;
    prune(found)
}

fn split(i: Ideal, out: &mut Vec<PrimeComponent>, depth: usize) -> Result<()> {
    if i.is_unit()? || i.zero_set_empty()? {
        return Ok(());
    }
    if depth > MAX_DEPTH {
        out.push(PrimeComponent {
            ideal: i.reduced()?,
            certified: false,
        });
        return Ok(());
    }
    let gb = i.groebner()?;
    let mut flagged = false;
    for g in gb.polys() {
        let fac = factor(g)?;
        if !fac.certified {
            flagged = true;
        }
        if fac.is_irreducible() {
            continue;
        }
        for (f, _) in &fac.factors {
            split(i.with_generators([f.clone()])?, out, depth + 1)?;
        }
        return Ok(());
    }
    if let Some(cert) = prime_shape(&i)? {
        out.push(PrimeComponent {
            ideal: i.reduced()?,
            certified: cert && !flagged,
        });
        return Ok(());
    }
    if i.dim_degree()?.dim == 0 {
        return zero_dimensional(i, out, depth);
    }
    out.push(PrimeComponent {
        ideal: i.reduced()?,
        certified: false,
    });
    Ok(())
}

/// `Some(certified)` when the reduced basis is linear forms plus at most one
/// irreducible polynomial.
fn prime_shape(i: &Ideal) -> Result<Option<bool>> {
    let gb = i.groebner()?;
    let nonlinear: Vec<&Polynomial> = gb.polys().iter().filter(|p| p.degree() != Some(1)).collect();
    match nonlinear.as_slice() {
        [] => Ok(Some(true)),
        [f] => {
            let fac = factor(f)?;
            if !fac.is_irreducible() {
                return Ok(None);
            }
            // absolute irreducibility is only checked for quadrics
            let absolute = f.degree() == Some(2) && quadric_rank(f) >= 3;
            Ok(Some(fac.certified && absolute))
        }
        _ => Ok(None),
    }
}

/// Splits a zero-dimensional ideal by projecting to coordinate lines.
fn zero_dimensional(mut i: Ideal, out: &mut Vec<PrimeComponent>, depth: usize) -> Result<()> {
    let n = i.nvars();
    for a in 0..n {
        for b in a + 1..n {
            let others: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
            let proj = i.eliminate(&others)?.saturate_irrelevant()?;
            if proj.is_unit()? {
                continue;
            }
            let [f] = proj.generators() else {
                continue;
            };
            let fac = factor(f)?;
            let linear: Vec<&Polynomial> = fac
                .factors
                .iter()
                .map(|(p, _)| p)
                .filter(|p| p.degree() == Some(1))
                .collect();
            if linear.len() < fac.factors.len() {
                out.push(PrimeComponent {
                    ideal: i.reduced()?,
                    certified: false,
                });
                return Ok(());
            }
            if linear.len() > 1 {
                for l in linear {
                    split(i.with_generators([l.clone()])?, out, depth + 1)?;
                }
                let both = i.with_generators([Polynomial::var(n, a), Polynomial::var(n, b)])?;
                split(both, out, depth + 1)?;
                return Ok(());
            }
            i = i.with_generators([linear[0].clone()])?;
            if let Some(cert) = prime_shape(&i)? {
                out.push(PrimeComponent {
                    ideal: i.reduced()?,
                    certified: cert,
                });
                return Ok(());
            }
        }
    }
    out.push(PrimeComponent {
        ideal: i.reduced()?,
        certified: false,
    });
    Ok(())
}

fn prune(found: Vec<PrimeComponent>) -> Result<Vec<PrimeComponent>> {
    let mut unique: Vec<PrimeComponent> = Vec::new();
    for c in found {
        let mut dup = false;
        for u in unique.iter_mut() {
            if u.ideal.equals(&c.ideal)? {
                u.certified &= c.certified;
                dup = true;
                break;
            }
        }
        if !dup {
            unique.push(c);
        }
    }
    let mut keep = Vec::new();
    for (k, c) in unique.iter().enumerate() {
        let mut minimal = true;
        for (k2, d) in unique.iter().enumerate() {
            if k2 != k && d.ideal.is_subset_of(&c.ideal)? {
                minimal = false;
                break;
            }
        }
        if minimal {
            keep.push(c.clone());
        }
    }
    keep.sort();
    Ok(keep)
}
