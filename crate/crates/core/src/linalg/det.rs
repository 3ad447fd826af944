use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntMatrix;

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn bareiss_determinant(m: &IntMatrix) -> BigInt {
    let n = m.order();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.entries().to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let v = (&a[i * n + j] * &pivot - &lead * &a[k * n + j]) / &prev;
                a[i * n + j] = v;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let det = a[n * n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact rank over the rationals via fraction-free row echelon form.
///
/// Every intermediate entry is a minor of the (row-permuted) input, so the
/// divisions by the previous pivot are exact even when columns are skipped.
pub fn rank(m: &IntMatrix) -> usize {
    let n = m.order();
    let mut a = m.entries().to_vec();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| !a[i * n + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..n {
                a.swap(r * n + j, p * n + j);
            }
        }
        let pivot = a[r * n + c].clone();
        for i in r + 1..n {
            let lead = a[i * n + c].clone();
            for j in c + 1..n {
                a[i * n + j] = (&pivot * &a[i * n + j] - &lead * &a[r * n + j]) / &prev;
            }
            a[i * n + c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
        if r == n {
            break;
        }
    }
    r
}

/// Sum of all cofactors, as `det(m + J) − det(m)`.
///
/// `det(m + xJ)` is affine in `x` with slope equal to the cofactor sum, since
/// `J` has rank one.
pub fn cofactor_sum(m: &IntMatrix) -> BigInt {
    let shifted = m.checked_add(&IntMatrix::all_ones(m.order())).expect("orders match by construction");
    bareiss_determinant(&shifted) - bareiss_determinant(m)
}
