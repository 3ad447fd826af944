use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{quadratic_form, Metric, MetricError, Witness, WitnessKind};
use crate::linalg::{Inertia, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeTypeVerdict {
    pub negative_type: bool,
    /// Inertia of `2G_b`, the doubled base-point Gram matrix.
    pub gram_inertia: Inertia,
    pub witness: Option<Witness>,
}

pub fn is_negative_type(m: &Metric) -> Result<NegativeTypeVerdict, MetricError> {
    is_negative_type_at(m, 0)
}

/// Decides negative type through `G_b(i, j) = (d(b,i) + d(b,j) − d(i,j)) / 2`
/// on the points other than `b`: the metric has negative type iff `G_b` is
/// positive semidefinite. A violating direction `y` with `yᵀ(2G_b)y < 0`
/// becomes the weight vector `w = (y, −Σy)` with
/// `Σ w(x)w(y)d(x,y) = −yᵀ(2G_b)y > 0`.
pub fn is_negative_type_at(m: &Metric, base: usize) -> Result<NegativeTypeVerdict, MetricError> {
    let n = m.order();
    if base >= n {
        return Err(MetricError::OutOfRange { vertex: base, order: n });
    }
    let others: Vec<usize> = (0..n).filter(|&v| v != base).collect();
    let gram = IntMatrix::from_fn(others.len(), |a, b| {
        let (i, j) = (others[a], others[b]);
        BigInt::from(m.get(base, i) + m.get(base, j) - m.get(i, j))
    });
    let gram_inertia = gram.inertia()?;
    let negative_type = gram_inertia.negative == 0;
    let witness = match negative_direction(&gram) {
        None => {
            assert!(negative_type, "inertia reports a negative eigenvalue but elimination found none");
            None
        }
        Some(y) => {
            assert!(!negative_type, "elimination found a negative direction of a semidefinite matrix");
            let mut weights = vec![BigInt::zero(); n];
            for (a, &v) in others.iter().enumerate() {
                weights[v] = y[a].clone();
            }
            weights[base] = -y.iter().sum::<BigInt>();
            let value = quadratic_form(m, &weights);
            let witness = Witness { kind: WitnessKind::NegativeTypeViolation, weights, value };
            assert!(witness.verify(m), "negative-type witness failed re-evaluation");
            Some(witness)
        }
    };
    Ok(NegativeTypeVerdict { negative_type, gram_inertia, witness })
}

/// An integer vector `y` with `yᵀ a y < 0`, or `None` when `a` is positive
/// semidefinite. Symmetric elimination over the rationals: a negative
/// diagonal entry gives a direction at once, a zero diagonal entry with a
/// nonzero off-diagonal partner gives one by a two-term combination, and a
/// positive pivot is eliminated by a congruence. `basis[i]` tracks the
/// original-coordinate vector of the `i`-th active coordinate.
fn negative_direction(a: &IntMatrix) -> Option<Vec<BigInt>> {
    let n = a.order();
    let mut m: Vec<Vec<BigRational>> =
        (0..n).map(|i| (0..n).map(|j| BigRational::from_integer(a.get(i, j).clone())).collect()).collect();
    let mut basis: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    let mut active: Vec<usize> = (0..n).collect();

    while let Some(&p) = active.first() {
        if let Some(&i) = active.iter().find(|&&i| m[i][i].is_negative()) {
            return Some(integral(&basis[i]));
        }
        if m[p][p].is_zero() {
            match active.iter().copied().find(|&j| !m[p][j].is_zero()) {
                None => {
                    active.remove(0);
                    continue;
                }
                Some(j) => {
                    // (s·e_p + e_j)ᵀ M (s·e_p + e_j) = 2s·m_pj + m_jj < 0
                    let two_mpj = &m[p][j] * BigRational::from_integer(2.into());
                    let ratio = (&m[j][j] / &two_mpj).abs();
                    let magnitude = ratio.floor() + BigRational::one();
                    let s = if two_mpj.is_positive() { -magnitude } else { magnitude };
                    let y: Vec<BigRational> = (0..n).map(|c| &s * &basis[p][c] + &basis[j][c]).collect();
                    return Some(integral(&y));
                }
            }
        }
        let pivot = m[p][p].clone();
        let rest: Vec<usize> = active[1..].to_vec();
        for &i in &rest {
            let factor = &m[p][i] / &pivot;
            if factor.is_zero() {
                continue;
            }
            for &j in &rest {
                let delta = &factor * &m[p][j];
                m[i][j] -= delta;
            }
            let pivot_basis = basis[p].clone();
            for (b, pb) in basis[i].iter_mut().zip(&pivot_basis) {
                *b -= &factor * pb;
            }
        }
        active.remove(0);
    }
    None
}

fn integral(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        scaled
    } else {
        scaled.into_iter().map(|x| x / &g).collect()
    }
}
