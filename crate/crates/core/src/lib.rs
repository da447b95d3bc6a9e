//! Ideal calculus for multiplicity estimates on compactified matrix groups.

pub mod calculus;
pub mod cli;
pub mod error;
pub mod model;
pub mod order;
pub mod search;

pub use error::{Error, Result};
