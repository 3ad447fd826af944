use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{char_poly, IntMatrix, IntPolynomial, LinalgError};

/// Counts of positive, zero and negative eigenvalues of a symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl Inertia {
    pub fn order(&self) -> usize {
        self.positive + self.zero + self.negative
    }
}

/// Inertia of a real-rooted polynomial from its coefficient signs.
///
/// The multiplicity of the root 0 is the number of trailing zero
/// coefficients. For a real-rooted polynomial Descartes' bound is attained,
/// so the sign changes of the deflated coefficient list count the positive
/// roots exactly. The caller is responsible for real-rootedness; see
/// [`IntMatrix::inertia`] for the checked entry point.
pub fn inertia_from_charpoly(p: &IntPolynomial) -> Result<Inertia, LinalgError> {
    let degree = p.degree().ok_or(LinalgError::ZeroPolynomial)?;
    let coeffs = p.coeffs();
    let zero = coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut changes = 0;
    let mut last_negative = None;
    for c in &coeffs[zero..] {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if last_negative.is_some_and(|l| l != negative) {
            changes += 1;
        }
        last_negative = Some(negative);
    }
    Ok(Inertia { positive: changes, zero, negative: degree - zero - changes })
}

impl IntMatrix {
    /// Inertia of a symmetric matrix; rejects matrices without the symmetric flag.
    pub fn inertia(&self) -> Result<Inertia, LinalgError> {
        if !self.is_symmetric() {
            return Err(LinalgError::NotSymmetric);
        }
        inertia_from_charpoly(&char_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_polynomials() {
        let i = |c: &[i64]| inertia_from_charpoly(&IntPolynomial::from_i64s(c)).unwrap();
        assert_eq!(i(&[-1, 0, 1]), Inertia { positive: 1, zero: 0, negative: 1 });
        assert_eq!(i(&[0, -1, 0, 1]), Inertia { positive: 1, zero: 1, negative: 1 });
        // F_5 distance polynomial: signs (−,−,−,−,0,+)
        assert_eq!(i(&[-12, -43, -52, -22, 0, 1]), Inertia { positive: 1, zero: 0, negative: 4 });
        assert_eq!(i(&[0, 0, 1]), Inertia { positive: 0, zero: 2, negative: 0 });
        assert_eq!(inertia_from_charpoly(&IntPolynomial::zero()), Err(LinalgError::ZeroPolynomial));
    }

    #[test]
    fn requires_symmetry() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(m.inertia(), Err(LinalgError::NotSymmetric));
    }
}
