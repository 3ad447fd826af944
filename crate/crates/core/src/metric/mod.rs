//! Finite metrics and the embeddability ladder
//! ℓ1 ⇒ hypermetric ⇒ negative type ⇒ one positive eigenvalue.

mod hyper;
mod l1;
mod negtype;
mod report;
mod simplex;
mod union_search;

pub use hyper::{hypermetric_falsify, DEFAULT_HYPER_BOUND, DEFAULT_HYPER_SEARCH_CAP};
pub use l1::{l1_decompose, CutDecomposition, CutTerm, FarkasCertificate, L1Outcome, DEFAULT_L1_CAP};
pub use negtype::{is_negative_type, is_negative_type_at, NegativeTypeVerdict};
pub use report::{hierarchy_report, HierarchyOptions, HierarchyReport};
pub use simplex::{phase_one, PhaseOne};
pub use union_search::{one_point_union_search, UnionCounterexample};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::FamilyError;
use crate::graph::{Graph, GraphError};
use crate::linalg::{IntMatrix, LinalgError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricError {
    #[error("row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("d({i},{j}) differs from d({j},{i})")]
    NotSymmetric { i: usize, j: usize },
    #[error("d({0},{0}) is not zero")]
    NonzeroDiagonal(usize),
    #[error("d({i},{j}) must be positive")]
    NonPositive { i: usize, j: usize },
    #[error("triangle inequality fails: d({i},{k}) > d({i},{j}) + d({j},{k})")]
    Triangle { i: usize, j: usize, k: usize },
    #[error("entry ({i},{j}) does not fit in 64 bits")]
    EntryTooLarge { i: usize, j: usize },
    #[error("cut set must be a nonempty proper subset")]
    TrivialCut,
    #[error("vertex {vertex} out of range for {order} points")]
    OutOfRange { vertex: usize, order: usize },
    #[error("{what}: {n} points exceeds the cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("hypermetric search needs {vectors} weight vectors, above the cap {cap}")]
    SearchCapExceeded { vectors: u128, cap: u128 },
    #[error("weight bound must be at least 1")]
    ZeroBound,
    #[error("need at least {min} points, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// A metric on `0..n` with nonnegative integer distances. Construction checks
/// symmetry, a zero diagonal, positivity off the diagonal and the triangle
/// inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    n: usize,
    d: Vec<i64>,
}

impl Metric {
    pub fn new(rows: &[Vec<i64>]) -> Result<Metric, MetricError> {
        let n = rows.len();
        let mut d = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(MetricError::NotSquare { row, len: r.len(), order: n });
            }
            d.extend_from_slice(r);
        }
        let m = Metric { n, d };
        m.validate()?;
        Ok(m)
    }

    pub fn from_matrix(m: &IntMatrix) -> Result<Metric, MetricError> {
        let n = m.order();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| i64::try_from(m.get(i, j)).map_err(|_| MetricError::EntryTooLarge { i, j }))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Metric::new(&rows)
    }

    /// Path metric of a connected graph.
    pub fn from_graph(g: &Graph) -> Result<Metric, MetricError> {
        let dist = g.distances()?;
        let rows: Vec<Vec<i64>> = dist.iter().map(|r| r.iter().map(|&x| i64::from(x)).collect()).collect();
        Metric::new(&rows)
    }

    fn validate(&self) -> Result<(), MetricError> {
        let n = self.n;
        for i in 0..n {
            if self.get(i, i) != 0 {
                return Err(MetricError::NonzeroDiagonal(i));
            }
            for j in 0..n {
                if self.get(i, j) != self.get(j, i) {
                    return Err(MetricError::NotSymmetric { i: i.min(j), j: i.max(j) });
                }
                if i != j && self.get(i, j) <= 0 {
                    return Err(MetricError::NonPositive { i: i.min(j), j: i.max(j) });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.get(i, k) as i128 > self.get(i, j) as i128 + self.get(j, k) as i128 {
                        return Err(MetricError::Triangle { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.d[i * self.n + j]
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| BigInt::from(self.get(i, j)))
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.d.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }
}

/// `δ_S` on `n` points: 1 between `S` and its complement, 0 otherwise.
/// Returned as a raw matrix since it is only a semimetric.
pub fn cut_semimetric(n: usize, s: &[usize]) -> Result<IntMatrix, MetricError> {
    let mut inside = vec![false; n];
    for &v in s {
        if v >= n {
            return Err(MetricError::OutOfRange { vertex: v, order: n });
        }
        inside[v] = true;
    }
    let count = inside.iter().filter(|&&x| x).count();
    if count == 0 || count == n {
        return Err(MetricError::TrivialCut);
    }
    Ok(IntMatrix::from_fn(n, |i, j| BigInt::from(i64::from(inside[i] != inside[j]))))
}

/// Metric on pairs: `d((x1, x2), (y1, y2)) = d1(x1, y1) + d2(x2, y2)`, with
/// `(a, x)` numbered `a·n2 + x`.
pub fn direct_product(m1: &Metric, m2: &Metric) -> Metric {
    let (n1, n2) = (m1.order(), m2.order());
    let n = n1 * n2;
    let d = (0..n * n)
        .map(|k| {
            let (p, q) = (k / n, k % n);
            m1.get(p / n2, q / n2) + m2.get(p % n2, q % n2)
        })
        .collect();
    Metric { n, d }
}

/// `Σ_x Σ_y w(x) w(y) d(x, y)` over ordered pairs.
pub fn quadratic_form(m: &Metric, w: &[BigInt]) -> BigInt {
    assert_eq!(w.len(), m.order(), "weight vector length");
    let mut total = BigInt::from(0);
    for (i, wi) in w.iter().enumerate() {
        let mut row = BigInt::from(0);
        for (j, wj) in w.iter().enumerate() {
            if m.get(i, j) != 0 {
                row += wj * m.get(i, j);
            }
        }
        total += wi * row;
    }
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    NegativeTypeViolation,
    HypermetricViolation,
}

/// Integer weights violating a negative-type (`Σw = 0`) or hypermetric
/// (`Σw = 1`) inequality: `value = Σ_x Σ_y w(x)w(y)d(x,y) > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    #[serde(with = "crate::decimal::bigint_vec")]
    pub weights: Vec<BigInt>,
    #[serde(with = "crate::decimal::bigint")]
    pub value: BigInt,
}

impl Witness {
    /// Re-evaluates the form and the weight sum against `m`.
    pub fn verify(&self, m: &Metric) -> bool {
        if self.weights.len() != m.order() {
            return false;
        }
        let sum: BigInt = self.weights.iter().sum();
        let expected_sum = match self.kind {
            WitnessKind::NegativeTypeViolation => 0,
            WitnessKind::HypermetricViolation => 1,
        };
        let value = quadratic_form(m, &self.weights);
        sum == BigInt::from(expected_sum) && value > BigInt::from(0) && value == self.value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_bipartite_2_3() -> Metric {
        let side = |v: usize| v < 2;
        let rows: Vec<Vec<i64>> = (0..5)
            .map(|i| {
                (0..5)
                    .map(|j| match (i == j, side(i) == side(j)) {
                        (true, _) => 0,
                        (false, true) => 2,
                        (false, false) => 1,
                    })
                    .collect()
            })
            .collect();
        Metric::new(&rows).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(Metric::new(&[vec![0, 1], vec![2, 0]]), Err(MetricError::NotSymmetric { i: 0, j: 1 }));
        assert_eq!(Metric::new(&[vec![1]]), Err(MetricError::NonzeroDiagonal(0)));
        assert_eq!(Metric::new(&[vec![0, 0], vec![0, 0]]), Err(MetricError::NonPositive { i: 0, j: 1 }));
        let bad = vec![vec![0, 1, 5], vec![1, 0, 1], vec![5, 1, 0]];
        assert!(matches!(Metric::new(&bad), Err(MetricError::Triangle { .. })));
        assert!(matches!(Metric::new(&[vec![0, 1]]), Err(MetricError::NotSquare { .. })));
    }

    #[test]
    fn cuts() {
        let d = cut_semimetric(3, &[1]).unwrap();
        assert_eq!(d, IntMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]).unwrap());
        assert_eq!(cut_semimetric(2, &[0]).unwrap(), IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap());
        assert_eq!(cut_semimetric(4, &[0, 2]).unwrap(), cut_semimetric(4, &[1, 3]).unwrap());
        assert_eq!(cut_semimetric(3, &[]), Err(MetricError::TrivialCut));
        assert_eq!(cut_semimetric(2, &[0, 1]), Err(MetricError::TrivialCut));
    }

    #[test]
    fn product_of_edges_is_square() {
        let k2 = Metric::new(&[vec![0, 1], vec![1, 0]]).unwrap();
        let c4 = direct_product(&k2, &k2);
        assert_eq!(c4.rows(), vec![vec![0, 1, 1, 2], vec![1, 0, 2, 1], vec![1, 2, 0, 1], vec![2, 1, 1, 0]]);
    }

    #[test]
    fn witness_values() {
        let m = complete_bipartite_2_3();
        let w: Vec<BigInt> = [3, 3, -2, -2, -2].into_iter().map(BigInt::from).collect();
        assert_eq!(quadratic_form(&m, &w), BigInt::from(12));
        let witness = Witness { kind: WitnessKind::NegativeTypeViolation, weights: w, value: 12.into() };
        assert!(witness.verify(&m));
        let h: Vec<BigInt> = [2, 2, -1, -1, -1].into_iter().map(BigInt::from).collect();
        assert_eq!(quadratic_form(&m, &h), BigInt::from(4));
    }
}
