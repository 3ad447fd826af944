//! Coefficient sequences of distance characteristic polynomials and the
//! checks run on them.
//!
//! Everything is normalized to the monic `p(x) = det(xI − D)`. The
//! coefficients `c_k` of `det(D − xI) = (−1)^n p(x)` are `c_k = (−1)^n p_k`,
//! and the signed sequence examined for unimodality is
//! `s_k = (−1)^{n−1} c_k = −p_k` for `0 ≤ k ≤ n − 2`.

mod closed_forms;
mod ghh;
mod minors;
mod predicted;
mod quotient;
mod sequence;
mod verdict;

pub use closed_forms::{
    barbell_partition, barbell_quotient_closed_form, barbell_quotient_polynomial, two_clique_closed_form,
    windmill_closed_form,
};
pub use ghh::{clique_block_values, ghh_det_cof, ghh_for_graph, BlockValues};
pub use minors::{principal_minor_coefficient, DEFAULT_MINOR_CAP};
pub use predicted::{expected_peak, ExpectedPeak};
pub use quotient::{quotient_matrix, Quotient};
pub use sequence::{
    det_convention_coefficients, normalized_coefficients, sequence_report, signed_coefficients, CoefficientSequence,
    NormalizedCoefficients, PeakWindow, SequenceReport,
};
pub use verdict::{
    conjecture_verdict, divisibility_probe, tree_normalized_coefficients, ConjectureVerdict, TreeVerdict,
};

use thiserror::Error;

use crate::families::FamilyError;
use crate::graph::GraphError;
use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("expected a monic polynomial of degree {expected}")]
    NotMonic { expected: usize },
    #[error("need at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("not a block graph: block {block:?} is not a clique")]
    NotBlockGraph { block: Vec<usize> },
    #[error("not a tree")]
    NotTree,
    #[error("coefficient s_{k} is not divisible by 2^{exponent}")]
    InexactNormalization { k: usize, exponent: usize },
    #[error("block count mismatch: {blocks} blocks, {values} value pairs")]
    BlockCount { blocks: usize, values: usize },
    #[error("no blocks supplied")]
    NoBlocks,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("order {n} exceeds the cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("subset size {k} exceeds the order {n}")]
    SubsetTooLarge { k: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}
