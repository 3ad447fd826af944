use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::SpectraError;
use crate::linalg::{IntMatrix, IntPolynomial, RationalMatrix};

/// Quotient of a matrix by a vertex partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    /// Entry `(I, J)`: average over `i ∈ I` of `Σ_{j∈J} m[i][j]`.
    pub matrix: RationalMatrix,
    /// Whether those row sums are constant on every class.
    pub equitable: bool,
}

impl Quotient {
    /// For an equitable partition the characteristic polynomial of the
    /// quotient divides that of the full matrix.
    pub fn char_poly_divides(&self, full: &IntPolynomial) -> bool {
        self.matrix.char_poly().divides(full)
    }
}

pub fn quotient_matrix(m: &IntMatrix, partition: &[Vec<usize>]) -> Result<Quotient, SpectraError> {
    let n = m.order();
    let mut class_of = vec![usize::MAX; n];
    for (c, class) in partition.iter().enumerate() {
        if class.is_empty() {
            return Err(SpectraError::InvalidPartition(format!("class {c} is empty")));
        }
        for &v in class {
            if v >= n {
                return Err(SpectraError::InvalidPartition(format!("vertex {v} out of range")));
            }
            if class_of[v] != usize::MAX {
                return Err(SpectraError::InvalidPartition(format!("vertex {v} appears twice")));
            }
            class_of[v] = c;
        }
    }
    if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
        return Err(SpectraError::InvalidPartition(format!("vertex {v} is not covered")));
    }
    let q = partition.len();
    let mut equitable = true;
    let mut averages = vec![BigRational::zero(); q * q];
    for (ci, class) in partition.iter().enumerate() {
        for cj in 0..q {
            let sums: Vec<BigInt> = class.iter().map(|&i| partition[cj].iter().map(|&j| m.get(i, j)).sum()).collect();
            equitable &= sums.iter().all(|s| s == &sums[0]);
            let total: BigInt = sums.iter().sum();
            averages[ci * q + cj] = BigRational::new(total, BigInt::from(class.len()));
        }
    }
    let matrix = RationalMatrix::from_fn(q, |i, j| averages[i * q + j].clone());
    Ok(Quotient { matrix, equitable })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::char_poly;

    fn p3() -> IntMatrix {
        IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]).unwrap()
    }

    #[test]
    fn singleton_partition_is_identity() {
        let d = p3();
        let q = quotient_matrix(&d, &[vec![0], vec![1], vec![2]]).unwrap();
        assert!(q.equitable);
        assert_eq!(q.matrix.to_int_matrix().unwrap(), d);
    }

    #[test]
    fn leaves_versus_centre() {
        let d = p3();
        let q = quotient_matrix(&d, &[vec![0, 2], vec![1]]).unwrap();
        assert!(q.equitable);
        assert_eq!(q.matrix.to_int_matrix().unwrap(), IntMatrix::from_rows(&[vec![2, 1], vec![2, 0]]).unwrap());
        assert!(q.char_poly_divides(&char_poly(&d)));
        let uneven = quotient_matrix(&d, &[vec![0, 1], vec![2]]).unwrap();
        assert!(!uneven.equitable);
    }

    #[test]
    fn invalid_partitions() {
        let d = p3();
        assert!(quotient_matrix(&d, &[vec![0, 1]]).is_err());
        assert!(quotient_matrix(&d, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(quotient_matrix(&d, &[vec![0, 1, 2], vec![]]).is_err());
        assert!(quotient_matrix(&d, &[vec![0, 1, 2, 3]]).is_err());
    }
}
