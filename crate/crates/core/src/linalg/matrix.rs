use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::LinalgError;

/// Dense square matrix of arbitrary-precision integers, stored row-major.
///
/// The symmetry flag is computed on construction, so it always reflects the
/// entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
    symmetric: bool,
}

impl IntMatrix {
    fn from_raw(order: usize, entries: Vec<BigInt>) -> Self {
        debug_assert_eq!(entries.len(), order * order);
        let symmetric = (0..order).all(|i| (i + 1..order).all(|j| entries[i * order + j] == entries[j * order + i]));
        IntMatrix { order, entries, symmetric }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Self::from_raw(order, entries)
    }

    pub fn from_rows<T>(rows: &[Vec<T>]) -> Result<Self, LinalgError>
    where
        T: Clone + Into<BigInt>,
    {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (row, values) in rows.iter().enumerate() {
            if values.len() != order {
                return Err(LinalgError::NotSquare { row, len: values.len(), order });
            }
            entries.extend(values.iter().cloned().map(Into::into));
        }
        Ok(Self::from_raw(order, entries))
    }

    pub fn zeros(order: usize) -> Self {
        Self::from_fn(order, |_, _| BigInt::zero())
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn all_ones(order: usize) -> Self {
        Self::from_fn(order, |_, _| BigInt::one())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Largest absolute row sum (the induced infinity norm).
    pub fn max_abs_row_sum(&self) -> BigInt {
        (0..self.order).map(|i| self.row(i).iter().map(|v| v.abs()).sum::<BigInt>()).max().unwrap_or_default()
    }

    pub fn checked_add(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.order != other.order {
            return Err(LinalgError::OrderMismatch { left: self.order, right: other.order });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Self::from_raw(self.order, entries))
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.order != other.order {
            return Err(LinalgError::OrderMismatch { left: self.order, right: other.order });
        }
        let n = self.order;
        Ok(Self::from_fn(n, |i, j| (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum()))
    }

    pub fn scale(&self, factor: &BigInt) -> IntMatrix {
        Self::from_raw(self.order, self.entries.iter().map(|v| v * factor).collect())
    }

    /// `self - x·I` style shift: returns `self + shift·I`.
    pub fn shift_diagonal(&self, shift: &BigInt) -> IntMatrix {
        let mut entries = self.entries.clone();
        for i in 0..self.order {
            entries[i * self.order + i] += shift;
        }
        Self::from_raw(self.order, entries)
    }

    /// Submatrix on the given rows and columns (same index list for both).
    pub fn principal_submatrix(&self, indices: &[usize]) -> IntMatrix {
        Self::from_fn(indices.len(), |i, j| self.get(indices[i], indices[j]).clone())
    }

    /// Parses the whitespace matrix format: `n` rows of `n` integers,
    /// optionally preceded by a line holding just the order `n`. Blank lines
    /// and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<IntMatrix, LinalgError> {
        let content: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let (line, first) =
            *content.first().ok_or(LinalgError::Parse { line: 1, message: "empty matrix text".into() })?;
        let has_header = content.len() > 1 && first.split_whitespace().count() == 1;
        let order: usize = if has_header {
            first.parse().map_err(|_| LinalgError::Parse { line, message: format!("bad order `{first}`") })?
        } else {
            first.split_whitespace().count()
        };
        let mut lines = content.into_iter().skip(usize::from(has_header));
        let mut entries = Vec::with_capacity(order * order);
        for row in 0..order {
            let (line, text) = lines.next().ok_or(LinalgError::Parse {
                line: line + row + 1,
                message: format!("expected {order} rows, found {row}"),
            })?;
            let before = entries.len();
            for token in text.split_whitespace() {
                let value: BigInt = token
                    .parse()
                    .map_err(|_| LinalgError::Parse { line, message: format!("bad integer `{token}`") })?;
                entries.push(value);
            }
            if entries.len() - before != order {
                return Err(LinalgError::Parse {
                    line,
                    message: format!("expected {order} entries, found {}", entries.len() - before),
                });
            }
        }
        if let Some((line, _)) = lines.next() {
            return Err(LinalgError::Parse { line, message: "trailing data after matrix".into() });
        }
        Ok(Self::from_raw(order, entries))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order)?;
        for i in 0..self.order {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let text = "3\n0 1 2\n1 0 1\n2 1 0\n";
        let m = IntMatrix::parse(text).unwrap();
        assert!(m.is_symmetric());
        assert_eq!(m.to_text(), text);
        assert_eq!(m.trace(), BigInt::zero());
        assert_eq!(IntMatrix::parse("0 1 2\n1 0 1\n# comment\n2 1 0").unwrap(), m);
        assert_eq!(IntMatrix::parse("7").unwrap().order(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(IntMatrix::parse(""), Err(LinalgError::Parse { .. })));
        assert!(matches!(IntMatrix::parse("2\n0 1\n1"), Err(LinalgError::Parse { line: 3, .. })));
        assert!(matches!(IntMatrix::parse("1\n0\n5"), Err(LinalgError::Parse { .. })));
        assert!(matches!(IntMatrix::parse("2\n0 x\n1 0"), Err(LinalgError::Parse { line: 2, .. })));
    }

    #[test]
    fn rejects_ragged_rows() {
        let err = IntMatrix::from_rows(&[vec![0, 1], vec![1]]).unwrap_err();
        assert_eq!(err, LinalgError::NotSquare { row: 1, len: 1, order: 2 });
    }

    #[test]
    fn symmetry_flag_tracks_entries() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![2, 0]]).unwrap();
        assert!(!m.is_symmetric());
        assert!(IntMatrix::identity(4).is_symmetric());
    }
}
