use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{char_poly, IntMatrix, IntPolynomial};

/// Dense square matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    order: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let entries = (0..order * order).map(|k| f(k / order, k % order)).collect();
        RationalMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.order + j]
    }

    pub fn common_denominator(&self) -> BigInt {
        self.entries.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
    }

    /// The same matrix as an integer matrix, if every entry is integral.
    pub fn to_int_matrix(&self) -> Option<IntMatrix> {
        if !self.entries.iter().all(BigRational::is_integer) {
            return None;
        }
        Some(IntMatrix::from_fn(self.order, |i, j| self.get(i, j).to_integer()))
    }

    /// Monic `det(xI − B)` computed from the integer matrix `L·B`, with `L`
    /// the common denominator: `det(xI − B) = L^{−n} det(LxI − LB)`.
    pub fn char_poly(&self) -> RationalPolynomial {
        let l = self.common_denominator();
        let scaled =
            IntMatrix::from_fn(self.order, |i, j| (self.get(i, j) * BigRational::from_integer(l.clone())).to_integer());
        let q = char_poly(&scaled);
        let n = self.order;
        let mut l_pow = vec![BigInt::one()];
        for k in 1..=n {
            l_pow.push(&l_pow[k - 1] * &l);
        }
        RationalPolynomial::new((0..=n).map(|k| BigRational::new(q.coeff(k) * &l_pow[k], l_pow[n].clone())).collect())
    }
}

/// Polynomial with rational coefficients, lowest power first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn to_int_polynomial(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    /// Long division of an integer polynomial by `self`; returns the
    /// remainder. Panics on the zero polynomial.
    pub fn remainder_of(&self, dividend: &IntPolynomial) -> RationalPolynomial {
        let d = self.degree().expect("division by the zero polynomial");
        let lead = self.coeffs[d].clone();
        let mut rem: Vec<BigRational> = dividend.coeffs().iter().cloned().map(BigRational::from_integer).collect();
        while rem.len() > d {
            let top = rem.len() - 1;
            let q = &rem[top] / &lead;
            if !q.is_zero() {
                for (i, c) in self.coeffs.iter().enumerate() {
                    let idx = top - d + i;
                    rem[idx] = &rem[idx] - &q * c;
                }
            }
            rem.pop();
        }
        RationalPolynomial::new(rem)
    }

    pub fn divides(&self, dividend: &IntPolynomial) -> bool {
        self.remainder_of(dividend).coeffs.is_empty()
    }
}
