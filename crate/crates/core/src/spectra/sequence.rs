use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::SpectraError;
use crate::linalg::IntPolynomial;

/// `s_0 ..= s_{n−2}` together with the trace coefficient `c_{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientSequence {
    pub n: usize,
    #[serde(with = "crate::decimal::bigint_vec")]
    pub s: Vec<BigInt>,
    #[serde(with = "crate::decimal::bigint")]
    pub trace_coefficient: BigInt,
}

impl CoefficientSequence {
    pub fn trace_zero(&self) -> bool {
        self.trace_coefficient.is_zero()
    }

    pub fn all_positive(&self) -> bool {
        self.s.iter().all(Signed::is_positive)
    }
}

/// Coefficients `c_k` of `det(D − xI)` from the monic `det(xI − D)`.
pub fn det_convention_coefficients(p: &IntPolynomial) -> Vec<BigInt> {
    let n = p.degree().unwrap_or(0);
    let flip = n % 2 == 1;
    p.coeffs().iter().map(|c| if flip { -c } else { c.clone() }).collect()
}

/// Signed sequence of a monic degree-`n` characteristic polynomial.
pub fn signed_coefficients(p: &IntPolynomial, n: usize) -> Result<CoefficientSequence, SpectraError> {
    if p.degree() != Some(n) || !p.is_monic() {
        return Err(SpectraError::NotMonic { expected: n });
    }
    let c = det_convention_coefficients(p);
    let sign_n1 = if n % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    let s = c[..n.saturating_sub(1)].iter().map(|ck| ck * &sign_n1).collect();
    let trace_coefficient = if n >= 1 { c[n - 1].clone() } else { BigInt::zero() };
    Ok(CoefficientSequence { n, s, trace_coefficient })
}

/// Closed index interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeakWindow {
    pub lo: usize,
    pub hi: usize,
}

impl PeakWindow {
    /// `[⌊n/3⌋, ⌊n/2⌋]`, the window asked about for block graphs.
    pub fn block_graph(n: usize) -> Self {
        PeakWindow { lo: n / 3, hi: n / 2 }
    }

    /// `[⌊n/2⌋, ⌈(1 − 1/√5)n⌉]` for normalized tree coefficients.
    ///
    /// `n/√5` is irrational for `n > 0`, so the ceiling equals
    /// `n − ⌊n/√5⌋ = n − ⌊√⌊n²/5⌋⌋`.
    pub fn tree(n: usize) -> Self {
        let n64 = n as u64;
        let floor = (n64 * n64 / 5).sqrt() as usize;
        PeakWindow { lo: n / 2, hi: n - floor }
    }

    pub fn contains(&self, k: usize) -> bool {
        self.lo <= k && k <= self.hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceReport {
    pub positive: bool,
    pub unimodal: bool,
    pub log_concave: bool,
    /// Smallest index attaining the maximum.
    pub peak_index: usize,
    /// Every index attaining the maximum.
    pub argmax_set: Vec<usize>,
    /// Index where the sequence rises again after having fallen.
    pub first_violation: Option<usize>,
    /// First interior index with `s_j² < s_{j−1} s_{j+1}`.
    pub log_concavity_violation: Option<usize>,
}

impl SequenceReport {
    pub fn has_tie(&self) -> bool {
        self.argmax_set.len() > 1
    }
}

/// Panics on an empty sequence.
pub fn sequence_report(s: &[BigInt]) -> SequenceReport {
    assert!(!s.is_empty(), "sequence_report needs a nonempty sequence");
    let positive = s.iter().all(Signed::is_positive);
    let max = s.iter().max().expect("nonempty");
    let argmax_set: Vec<usize> = (0..s.len()).filter(|&i| &s[i] == max).collect();
    let peak_index = argmax_set[0];

    let mut fallen = false;
    let mut first_violation = None;
    for j in 1..s.len() {
        if s[j] < s[j - 1] {
            fallen = true;
        } else if s[j] > s[j - 1] && fallen {
            first_violation = Some(j);
            break;
        }
    }
    let unimodal = first_violation.is_none();
    let log_concavity_violation = (1..s.len().saturating_sub(1)).find(|&j| &s[j] * &s[j] < &s[j - 1] * &s[j + 1]);
    let log_concave = log_concavity_violation.is_none();

    assert!(!(log_concave && positive) || unimodal, "a positive log-concave sequence must be unimodal");
    if unimodal {
        assert!(argmax_set.windows(2).all(|w| w[1] == w[0] + 1), "the maxima of a unimodal sequence are contiguous");
    }
    SequenceReport { positive, unimodal, log_concave, peak_index, argmax_set, first_violation, log_concavity_violation }
}

/// `d_k = s_k / 2^{n−k−2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedCoefficients {
    #[serde(with = "crate::decimal::bigint_vec")]
    pub d: Vec<BigInt>,
}

pub fn normalized_coefficients(seq: &CoefficientSequence) -> Result<NormalizedCoefficients, SpectraError> {
    let n = seq.n;
    let d = seq
        .s
        .iter()
        .enumerate()
        .map(|(k, sk)| {
            let exponent = n - k - 2;
            let divisible = sk.is_zero() || sk.trailing_zeros().is_some_and(|z| z >= exponent as u64);
            if divisible {
                Ok(sk >> exponent)
            } else {
                Err(SpectraError::InexactNormalization { k, exponent })
            }
        })
        .collect::<Result<_, _>>()?;
    Ok(NormalizedCoefficients { d })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn signs_from_monic_polynomial() {
        let p3 = IntPolynomial::from_i64s(&[-4, -6, 0, 1]);
        let seq = signed_coefficients(&p3, 3).unwrap();
        assert_eq!(seq.s, big(&[4, 6]));
        assert!(seq.trace_zero());
        let k2 = IntPolynomial::from_i64s(&[-1, 0, 1]);
        assert_eq!(signed_coefficients(&k2, 2).unwrap().s, big(&[1]));
        assert!(signed_coefficients(&k2, 3).is_err());
        assert!(signed_coefficients(&IntPolynomial::from_i64s(&[1, 2]), 1).is_err());
    }

    #[test]
    fn reports() {
        let r = sequence_report(&big(&[12, 43, 52, 22]));
        assert!(r.unimodal && r.log_concave && r.positive);
        assert_eq!(r.peak_index, 2);
        let r = sequence_report(&big(&[1, 2, 2, 1]));
        assert!(r.unimodal);
        assert_eq!((r.peak_index, r.argmax_set.clone()), (1, vec![1, 2]));
        assert!(r.has_tie());
        let r = sequence_report(&big(&[1, 3, 2, 3]));
        assert!(!r.unimodal && !r.log_concave);
        assert_eq!(r.first_violation, Some(3));
        assert_eq!(r.log_concavity_violation, Some(2));
    }

    #[test]
    fn windows() {
        assert_eq!(PeakWindow::block_graph(5), PeakWindow { lo: 1, hi: 2 });
        assert_eq!(PeakWindow::block_graph(12), PeakWindow { lo: 4, hi: 6 });
        // ⌈(1 − 1/√5)·10⌉ = ⌈5.527⌉ = 6
        assert_eq!(PeakWindow::tree(10), PeakWindow { lo: 5, hi: 6 });
        assert_eq!(PeakWindow::tree(3), PeakWindow { lo: 1, hi: 2 });
    }

    #[test]
    fn normalization() {
        let seq = CoefficientSequence { n: 3, s: big(&[4, 6]), trace_coefficient: BigInt::zero() };
        assert_eq!(normalized_coefficients(&seq).unwrap().d, big(&[2, 6]));
        let odd = CoefficientSequence { n: 3, s: big(&[3, 6]), trace_coefficient: BigInt::zero() };
        assert_eq!(normalized_coefficients(&odd), Err(SpectraError::InexactNormalization { k: 0, exponent: 1 }));
    }
}
