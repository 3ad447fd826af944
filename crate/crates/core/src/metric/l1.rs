use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::simplex::{certifies_infeasibility, phase_one, PhaseOne};
use super::{Metric, MetricError};

/// Largest number of points for which the cut LP is attempted by default;
/// it has `2^{n−1} − 1` variables.
pub const DEFAULT_L1_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutTerm {
    /// The side of the cut not containing point 0, sorted.
    pub set: Vec<usize>,
    #[serde(with = "crate::decimal::bigrational")]
    pub coefficient: BigRational,
}

/// `d = Σ a_S δ_S` with `a_S > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutDecomposition {
    pub n: usize,
    pub terms: Vec<CutTerm>,
}

impl CutDecomposition {
    /// Substitutes the combination back and compares with `m` pair by pair.
    pub fn verify(&self, m: &Metric) -> bool {
        if self.n != m.order() || self.terms.iter().any(|t| !t.coefficient.is_positive()) {
            return false;
        }
        let n = self.n;
        let mut inside = vec![vec![false; n]; self.terms.len()];
        for (k, term) in self.terms.iter().enumerate() {
            for &v in &term.set {
                if v == 0 || v >= n {
                    return false;
                }
                inside[k][v] = true;
            }
        }
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let total: BigRational = self
                    .terms
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| inside[*k][i] != inside[*k][j])
                    .map(|(_, t)| t.coefficient.clone())
                    .sum();
                total == BigRational::from_integer(BigInt::from(m.get(i, j)))
            })
        })
    }
}

/// Weights `y_{ij}` on pairs `i < j` with `Σ y_{ij} δ_S(i,j) ≤ 0` for every
/// cut and `Σ y_{ij} d(i,j) > 0`, proving that `d` is not in the cut cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FarkasCertificate {
    pub pairs: Vec<(usize, usize)>,
    #[serde(with = "crate::decimal::bigint_vec")]
    pub weights: Vec<BigInt>,
}

impl FarkasCertificate {
    pub fn verify(&self, m: &Metric) -> bool {
        let n = m.order();
        let (a, pairs) = cut_system(n);
        pairs == self.pairs && certifies_infeasibility(&a, &b_of(m, &pairs), &self.weights)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum L1Outcome {
    Embeddable(CutDecomposition),
    NotEmbeddable(FarkasCertificate),
}

impl L1Outcome {
    pub fn is_embeddable(&self) -> bool {
        matches!(self, L1Outcome::Embeddable(_))
    }
}

fn subset_of(mask: usize) -> Vec<usize> {
    // bit i of the mask stands for point i + 1
    (0..usize::BITS as usize).filter(|&i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Constraint matrix of the cut LP: one row per pair `i < j`, one column per
/// nonempty subset of `1..n`, the subset with mask `s` in column `s − 1`.
fn cut_system(n: usize) -> (Vec<Vec<BigInt>>, Vec<(usize, usize)>) {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let cuts = if n == 0 { 0 } else { (1usize << (n - 1)) - 1 };
    let side = |mask: usize, v: usize| v > 0 && mask >> (v - 1) & 1 == 1;
    let a = pairs
        .iter()
        .map(|&(i, j)| (1..=cuts).map(|mask| BigInt::from(i64::from(side(mask, i) != side(mask, j)))).collect())
        .collect();
    (a, pairs)
}

fn b_of(m: &Metric, pairs: &[(usize, usize)]) -> Vec<BigInt> {
    pairs.iter().map(|&(i, j)| BigInt::from(m.get(i, j))).collect()
}

/// Decides whether `m` is a nonnegative combination of cut semimetrics by an
/// exact phase-one simplex. Returns the decomposition (verified by
/// substitution) or a Farkas certificate of infeasibility. Refuses metrics
/// on more than `cap` points.
pub fn l1_decompose(m: &Metric, cap: usize) -> Result<L1Outcome, MetricError> {
    let n = m.order();
    if n > cap || n >= usize::BITS as usize {
        return Err(MetricError::CapExceeded { what: "cut LP", n, cap });
    }
    let (a, pairs) = cut_system(n);
    let b = b_of(m, &pairs);
    let outcome = match phase_one(&a, &b) {
        PhaseOne::Feasible { x } => {
            let terms = x
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(col, coefficient)| CutTerm { set: subset_of(col + 1), coefficient })
                .collect();
            let decomposition = CutDecomposition { n, terms };
            assert!(decomposition.verify(m), "cut decomposition failed substitution");
            L1Outcome::Embeddable(decomposition)
        }
        PhaseOne::Infeasible { y } => {
            let certificate = FarkasCertificate { pairs, weights: y };
            assert!(certificate.verify(m), "Farkas certificate failed verification");
            L1Outcome::NotEmbeddable(certificate)
        }
    };
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn graph_metric(n: usize, edges: &[(usize, usize)]) -> Metric {
        Metric::from_graph(&Graph::from_edges(n, edges).unwrap()).unwrap()
    }

    fn half() -> BigRational {
        BigRational::new(1.into(), 2.into())
    }

    #[test]
    fn path_uses_edge_cuts() {
        let p3 = graph_metric(3, &[(0, 1), (1, 2)]);
        let L1Outcome::Embeddable(dec) = l1_decompose(&p3, DEFAULT_L1_CAP).unwrap() else {
            panic!("paths embed in l1");
        };
        assert!(dec.verify(&p3));
        // the cuts separating each edge: {1,2} | {0} and {2} | {0,1}
        let mut sets: Vec<Vec<usize>> = dec.terms.iter().map(|t| t.set.clone()).collect();
        sets.sort();
        assert_eq!(sets, vec![vec![1, 2], vec![2]]);
    }

    #[test]
    fn triangle_uses_half_weights() {
        let k3 = graph_metric(3, &[(0, 1), (0, 2), (1, 2)]);
        let L1Outcome::Embeddable(dec) = l1_decompose(&k3, DEFAULT_L1_CAP).unwrap() else {
            panic!("triangles embed in l1");
        };
        assert_eq!(dec.terms.len(), 3);
        assert!(dec.terms.iter().all(|t| t.coefficient == half()));
    }

    #[test]
    fn bipartite_is_not_l1() {
        let k23 = graph_metric(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let outcome = l1_decompose(&k23, DEFAULT_L1_CAP).unwrap();
        let L1Outcome::NotEmbeddable(cert) = outcome else { panic!("K_{{2,3}} is not l1") };
        assert!(cert.verify(&k23));
        assert!(matches!(l1_decompose(&k23, 4), Err(MetricError::CapExceeded { .. })));
    }

    #[test]
    fn five_cycle_embeds() {
        let c5 = graph_metric(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert!(l1_decompose(&c5, DEFAULT_L1_CAP).unwrap().is_embeddable());
    }
}
