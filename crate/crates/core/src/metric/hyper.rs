use num_bigint::BigInt;

use super::{Metric, MetricError, Witness, WitnessKind};

pub const DEFAULT_HYPER_BOUND: u32 = 3;

/// Upper limit on the number of weight vectors visited, `(2·bound+1)^{n−1}`.
pub const DEFAULT_HYPER_SEARCH_CAP: u128 = 50_000_000;

/// Searches integer weights with `Σw = 1` and `|w_i| ≤ bound` for one making
/// `Σ_x Σ_y w(x)w(y)d(x,y)` positive. `Ok(None)` only means nothing was found
/// within the bound; it does not prove the metric hypermetric.
///
/// The first `n − 1` weights run through an odometer and the last one is
/// determined by the sum. The partial form and the products `(d·w)_j` are
/// updated incrementally, so each step costs `O(n)`.
pub fn hypermetric_falsify(m: &Metric, bound: u32, cap: u128) -> Result<Option<Witness>, MetricError> {
    if bound == 0 {
        return Err(MetricError::ZeroBound);
    }
    let n = m.order();
    if n == 0 {
        return Ok(None);
    }
    let b = i64::from(bound);
    let free = n - 1;
    let vectors = (2 * u128::from(bound) + 1).checked_pow(free as u32).unwrap_or(u128::MAX);
    if vectors > cap {
        return Err(MetricError::SearchCapExceeded { vectors, cap });
    }
    let d = |i: usize, j: usize| i128::from(m.get(i, j));
    let last = n - 1;

    let mut w = vec![-b; free];
    // r[j] = Σ_{i<free} d(j, i) w_i
    let mut r: Vec<i128> = (0..n).map(|j| (0..free).map(|i| d(j, i) * i128::from(w[i])).sum()).collect();
    // q = Σ_{i,k<free} w_i w_k d(i, k)
    let mut q: i128 = (0..free).map(|i| i128::from(w[i]) * r[i]).sum();
    let mut sum: i64 = -b * free as i64;

    loop {
        let w_last = 1 - sum;
        if w_last.abs() <= b {
            let total = q + 2 * i128::from(w_last) * r[last];
            if total > 0 {
                let mut weights: Vec<BigInt> = w.iter().map(|&x| BigInt::from(x)).collect();
                weights.push(BigInt::from(w_last));
                let witness = Witness { kind: WitnessKind::HypermetricViolation, weights, value: BigInt::from(total) };
                assert!(witness.verify(m), "hypermetric witness failed re-evaluation");
                return Ok(Some(witness));
            }
        }
        // advance the odometer, least significant coordinate first
        let mut pos = 0;
        loop {
            if pos == free {
                return Ok(None);
            }
            let delta = if w[pos] < b { 1 } else { -2 * b };
            let dl = i128::from(delta);
            q += 2 * dl * r[pos] + dl * dl * d(pos, pos);
            for (j, rj) in r.iter_mut().enumerate() {
                *rj += dl * d(j, pos);
            }
            w[pos] += delta;
            sum += delta;
            if delta == 1 {
                break;
            }
            pos += 1;
        }
    }
}
