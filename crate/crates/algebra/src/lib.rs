//! Exact polynomial and ideal arithmetic over the rationals.
//!
//! Polynomials are sparse with [`Scalar`] (big rational) coefficients. Ideals
//! carry a cached reduced Groebner basis and support the usual operations:
//! membership, intersection, quotient, saturation, elimination, Hilbert
//! dimension and degree, and minimal primes at small scale.

mod bipoly;
mod error;
mod factor;
mod groebner;
mod hilbert;
mod ideal;
mod local;
mod matrix;
mod monomial;
mod parse;
mod point;
mod poly;
mod primes;
pub mod scalar;

pub use bipoly::{bi_names, BiPolynomial};
pub use error::{AlgebraError, Result};
pub use groebner::{groebner, set_step_budget, step_budget, GroebnerBasis};
pub use factor::{distinct_factors, factor, poly_gcd, quadric_rank, rational_roots, squarefree_part, Factorization};
pub use hilbert::{hilbert_numerator, HilbertData};
pub use ideal::Ideal;
pub use local::local_length;
pub use matrix::Matrix;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_polynomial, parse_scalar_list, parse_x};
pub use point::ProjectivePoint;
pub use poly::{default_names, Polynomial};
pub use primes::{minimal_primes, PrimeComponent};
pub use scalar::Scalar;
