//! Exact linear algebra over arbitrary-precision integers.
//!
//! Everything here works on [`IntMatrix`] and [`IntPolynomial`] and never
//! touches floating point. Determinants and ranks use fraction-free
//! (Bareiss) elimination, characteristic polynomials are reconstructed from
//! Hessenberg reductions modulo word-sized primes, and inertia of a symmetric
//! matrix is read off the signs of its characteristic polynomial.

mod charpoly;
mod det;
mod inertia;
mod matrix;
mod poly;
mod rational;

pub use charpoly::{char_poly, char_poly_faddeev, char_poly_interpolation, coefficient_bound_bits};
pub use det::{bareiss_determinant, cofactor_sum, rank};
pub use inertia::{inertia_from_charpoly, Inertia};
pub use matrix::IntMatrix;
pub use poly::IntPolynomial;
pub use rational::{RationalMatrix, RationalPolynomial};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("matrix order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("matrix text, line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("zero polynomial has no inertia")]
    ZeroPolynomial,
    #[error("inexact division in {context}")]
    InexactDivision { context: &'static str },
}
