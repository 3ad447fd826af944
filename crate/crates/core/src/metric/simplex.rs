//! Exact phase-one simplex for `A x = b, x ≥ 0`.
//!
//! A revised, fraction-free method. Only the block `D·B⁻¹` (the artificial
//! columns of the full tableau), the right-hand side and the objective
//! entries over those columns are stored, all integral with the common
//! denominator `D` equal to the previous pivot. Structural columns and their
//! reduced costs are rebuilt from `A` on demand. Pivoting on `p` replaces
//! every other row by `(p·T[i][j] − T[i][q]·T[r][j]) / D`, a division that
//! is always exact. Entering and leaving variables follow Bland's rule; an
//! artificial variable never re-enters once it has left the basis.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhaseOne {
    /// A basic feasible solution.
    Feasible { x: Vec<BigRational> },
    /// Integer `y` with `yᵀA ≤ 0` componentwise and `yᵀb > 0`.
    Infeasible { y: Vec<BigInt> },
}

/// Decides feasibility of `A x = b, x ≥ 0` exactly. `a` holds the rows of
/// `A`; every row must have the same length.
pub fn phase_one(a: &[Vec<BigInt>], b: &[BigInt]) -> PhaseOne {
    let m = a.len();
    assert_eq!(b.len(), m, "right-hand side length");
    let cols = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|r| r.len() == cols), "ragged constraint matrix");

    // rows with negative right-hand side are negated so artificials start feasible
    let flipped: Vec<bool> = b.iter().map(Signed::is_negative).collect();
    // sparse columns of the sign-adjusted matrix
    let columns: Vec<Vec<(usize, BigInt)>> = (0..cols)
        .map(|j| {
            (0..m)
                .filter(|&r| !a[r][j].is_zero())
                .map(|r| (r, if flipped[r] { -&a[r][j] } else { a[r][j].clone() }))
                .collect()
        })
        .collect();
    // row r holds D·B⁻¹ in positions 0..m and the right-hand side at m
    let mut t: Vec<Vec<BigInt>> = (0..m)
        .map(|r| {
            let mut row: Vec<BigInt> = (0..m).map(|k| if k == r { BigInt::one() } else { BigInt::zero() }).collect();
            row.push(if flipped[r] { -&b[r] } else { b[r].clone() });
            row
        })
        .collect();
    let mut obj: Vec<BigInt> = vec![BigInt::zero(); m + 1];
    obj[m] = -t.iter().map(|row| &row[m]).sum::<BigInt>();
    let mut basis: Vec<usize> = (cols..cols + m).collect();
    let mut denom = BigInt::one();

    loop {
        let duals: Vec<BigInt> = obj[..m].iter().map(|v| v - &denom).collect();
        let reduced = |j: usize| columns[j].iter().map(|(r, v)| &duals[*r] * v).sum::<BigInt>();
        let Some((q, cost)) = (0..cols).map(|j| (j, reduced(j))).find(|(_, c)| c.is_negative()) else { break };
        let column: Vec<BigInt> =
            t.iter().map(|row| columns[q].iter().map(|(k, v)| &row[*k] * v).sum::<BigInt>()).collect();
        let mut leave: Option<usize> = None;
        for r in 0..m {
            if !column[r].is_positive() {
                continue;
            }
            leave = Some(match leave {
                None => r,
                Some(s) => {
                    // compare t[r][m]/column[r] with t[s][m]/column[s]
                    let lhs = &t[r][m] * &column[s];
                    let rhs_v = &t[s][m] * &column[r];
                    if lhs < rhs_v || (lhs == rhs_v && basis[r] < basis[s]) {
                        r
                    } else {
                        s
                    }
                }
            });
        }
        let r = leave.expect("phase one objective is bounded below");
        let p = column[r].clone();
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r {
                eliminate(row, &pivot_row, &column[i], &p, &denom);
            }
        }
        eliminate(&mut obj, &pivot_row, &cost, &p, &denom);
        denom = p;
        basis[r] = q;
    }

    if obj[m].is_negative() {
        let y: Vec<BigInt> = (0..m)
            .map(|r| {
                let v = &denom - &obj[r];
                if flipped[r] {
                    -v
                } else {
                    v
                }
            })
            .collect();
        debug_assert!(certifies_infeasibility(a, b, &y));
        return PhaseOne::Infeasible { y };
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, &var) in basis.iter().enumerate() {
        if var < cols {
            x[var] = BigRational::new(t[r][m].clone(), denom.clone());
        }
    }
    PhaseOne::Feasible { x }
}

fn eliminate(row: &mut [BigInt], pivot_row: &[BigInt], factor: &BigInt, p: &BigInt, denom: &BigInt) {
    for (v, pv) in row.iter_mut().zip(pivot_row) {
        let mut next = p * &*v;
        if !factor.is_zero() {
            next -= factor * pv;
        }
        if !denom.is_one() {
            debug_assert!((&next % denom).is_zero(), "fraction-free pivot must divide exactly");
            next /= denom;
        }
        *v = next;
    }
}

/// `yᵀA ≤ 0` and `yᵀb > 0`.
pub(crate) fn certifies_infeasibility(a: &[Vec<BigInt>], b: &[BigInt], y: &[BigInt]) -> bool {
    let cols = a.first().map_or(0, Vec::len);
    let columns_ok = (0..cols).all(|j| {
        let s: BigInt = a.iter().zip(y).map(|(row, yi)| &row[j] * yi).sum();
        !s.is_positive()
    });
    let yb: BigInt = b.iter().zip(y).map(|(bi, yi)| bi * yi).sum();
    columns_ok && yb.is_positive()
}
