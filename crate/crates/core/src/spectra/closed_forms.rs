use num_bigint::BigInt;

use super::SpectraError;
use crate::families::{FamilyError, FamilyKind};
use crate::linalg::{IntMatrix, IntPolynomial};

fn int(v: usize) -> BigInt {
    BigInt::from(v)
}

fn check(family: FamilyKind, param: &'static str, value: usize, min: usize) -> Result<(), SpectraError> {
    if value < min {
        return Err(FamilyError::OutOfRange { family, param, value, min }.into());
    }
    Ok(())
}

/// `(x+1)^{(t−2)k} (x+t)^{k−1} (x² − (t−2+2(t−1)(k−1))x − k(t−1))`, the
/// distance characteristic polynomial of `W(k, t)`.
pub fn windmill_closed_form(k: usize, t: usize) -> Result<IntPolynomial, SpectraError> {
    check(FamilyKind::Windmill, "k", k, 2)?;
    check(FamilyKind::Windmill, "t", t, 2)?;
    let ones = IntPolynomial::linear(1).pow(((t - 2) * k) as u32);
    let shifted = IntPolynomial::linear(int(t)).pow((k - 1) as u32);
    let b = int(t - 2 + 2 * (t - 1) * (k - 1));
    let c = int(k * (t - 1));
    let quadratic = IntPolynomial::new(vec![-c, -b, BigInt::from(1)]);
    Ok(&(&ones * &shifted) * &quadratic)
}

/// `(x+1)^{2t−2} (−(t+1) − x) (x² − (3t−1)x − 2t)` for two copies of `K_{t+1}`
/// sharing one vertex, written exactly as displayed, so with leading
/// coefficient −1.
pub fn two_clique_closed_form(t: usize) -> Result<IntPolynomial, SpectraError> {
    check(FamilyKind::Windmill, "t", t, 1)?;
    let ones = IntPolynomial::linear(1).pow((2 * t - 2) as u32);
    let linear = IntPolynomial::new(vec![-int(t + 1), BigInt::from(-1)]);
    let quadratic = IntPolynomial::new(vec![-int(2 * t), -int(3 * t - 1), BigInt::from(1)]);
    Ok(&(&ones * &linear) * &quadratic)
}

/// The four classes of `B(t, 2)` in the crate's labeling: the non-cut
/// vertices of clique A, the cut vertex of A, the cut vertex of B, the
/// non-cut vertices of B.
pub fn barbell_partition(t: usize) -> Result<Vec<Vec<usize>>, SpectraError> {
    check(FamilyKind::Barbell, "t", t, 2)?;
    Ok(vec![(0..t - 1).collect(), vec![t - 1], vec![t], (t + 1..2 * t).collect()])
}

/// Row-sum quotient of `D(B(t, 2))` for [`barbell_partition`].
pub fn barbell_quotient_closed_form(t: usize) -> Result<IntMatrix, SpectraError> {
    check(FamilyKind::Barbell, "t", t, 2)?;
    let (t, s) = (t as i64, t as i64 - 1);
    let rows = vec![vec![t - 2, 1, 2, 3 * s], vec![s, 0, 1, 2 * s], vec![2 * s, 1, 0, s], vec![3 * s, 2, 1, t - 2]];
    Ok(IntMatrix::from_rows(&rows).expect("4×4 rows"))
}

/// Monic `x⁴ − (2t−4)x³ − (8t²−4t−4)x² − (14t²−12t)x − (5t²−4t)`.
pub fn barbell_quotient_polynomial(t: usize) -> Result<IntPolynomial, SpectraError> {
    check(FamilyKind::Barbell, "t", t, 2)?;
    let t = int(t);
    let t2 = &t * &t;
    Ok(IntPolynomial::new(vec![
        -(BigInt::from(5) * &t2 - BigInt::from(4) * &t),
        -(BigInt::from(14) * &t2 - BigInt::from(12) * &t),
        -(BigInt::from(8) * &t2 - BigInt::from(4) * &t - BigInt::from(4)),
        -(BigInt::from(2) * &t - BigInt::from(4)),
        BigInt::from(1),
    ]))
}
