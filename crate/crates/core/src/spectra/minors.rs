use num_bigint::BigInt;

use super::SpectraError;
use crate::linalg::{bareiss_determinant, IntMatrix};

/// Largest order accepted by [`principal_minor_coefficient`] by default.
pub const DEFAULT_MINOR_CAP: usize = 12;

/// `c_{n−k} = (−1)^{n−k} Σ_{|S|=k} det D[S]`, the coefficient of `x^{n−k}` in
/// `det(D − xI)`, summed over all `C(n, k)` principal minors.
pub fn principal_minor_coefficient(m: &IntMatrix, k: usize, cap: usize) -> Result<BigInt, SpectraError> {
    let n = m.order();
    if n > cap {
        return Err(SpectraError::CapExceeded { n, cap });
    }
    if k > n {
        return Err(SpectraError::SubsetTooLarge { k, n });
    }
    let mut total = BigInt::from(0);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        total += bareiss_determinant(&m.principal_submatrix(&subset));
        // next k-subset in lexicographic order
        let Some(pos) = (0..k).rev().find(|&i| subset[i] < n - k + i) else {
            break;
        };
        subset[pos] += 1;
        for i in pos + 1..k {
            subset[i] = subset[i - 1] + 1;
        }
    }
    Ok(if (n - k) % 2 == 1 { -total } else { total })
}
