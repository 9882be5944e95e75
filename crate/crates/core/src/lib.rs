//! Reproducing-kernel polynomial approximation over the classical
//! orthogonal-polynomial domains, in exact arithmetic.
//!
//! Kernels are built by inverting the monomial Gram matrix in closed form
//! through the expansion coefficients of the Laguerre, Legendre and Hermite
//! polynomials, and are checked against a brute-force fraction-free
//! inversion of the same Gram matrix.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod approx;
pub mod conditioning;
pub mod error;
pub mod exactscalar;
pub mod family;
pub mod kernel;
pub mod matrix;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
pub use exactscalar::{BigFloat, PiLaurent, Rational, ScaledRational};
pub use family::Family;
