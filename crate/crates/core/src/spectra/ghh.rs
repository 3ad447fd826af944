use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::SpectraError;
use crate::graph::{block_cut_tree, distance_matrix, BlockCutTree, Graph};
use crate::linalg::{bareiss_determinant, cofactor_sum};

/// Determinant and cofactor sum of one block's distance matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockValues {
    #[serde(with = "crate::decimal::bigint")]
    pub det: BigInt,
    #[serde(with = "crate::decimal::bigint")]
    pub cof: BigInt,
}

/// `det D(K_t) = (−1)^{t−1}(t−1)` and `cof D(K_t) = (−1)^{t−1} t`.
pub fn clique_block_values(t: usize) -> BlockValues {
    let sign = if t % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    BlockValues { det: &sign * BigInt::from(t.saturating_sub(1)), cof: sign * BigInt::from(t) }
}

/// Combines per-block values:
/// `det D = Σ_i det_i Π_{j≠i} cof_j` and `cof D = Π_i cof_i`.
pub fn ghh_det_cof(bct: &BlockCutTree, values: &[BlockValues]) -> Result<(BigInt, BigInt), SpectraError> {
    if values.is_empty() {
        return Err(SpectraError::NoBlocks);
    }
    if bct.blocks().len() != values.len() {
        return Err(SpectraError::BlockCount { blocks: bct.blocks().len(), values: values.len() });
    }
    let m = values.len();
    // suffix[i] = Π_{j ≥ i} cof_j
    let mut suffix = vec![BigInt::one(); m + 1];
    for i in (0..m).rev() {
        suffix[i] = &suffix[i + 1] * &values[i].cof;
    }
    let mut prefix = BigInt::one();
    let mut det = BigInt::from(0);
    for (i, v) in values.iter().enumerate() {
        det += &v.det * &prefix * &suffix[i + 1];
        prefix *= &v.cof;
    }
    Ok((det, prefix))
}

/// Block values from the clique closed form where a block is complete, from
/// the block's own distance matrix otherwise; then combined.
pub fn ghh_for_graph(g: &Graph) -> Result<(BigInt, BigInt), SpectraError> {
    let bct = block_cut_tree(g)?;
    let values: Vec<BlockValues> = bct
        .blocks()
        .iter()
        .map(|block| {
            let sub = g.induced(block);
            let t = block.len();
            if sub.size() == t * (t - 1) / 2 {
                Ok(clique_block_values(t))
            } else {
                let d = distance_matrix(&sub)?;
                Ok(BlockValues { det: bareiss_determinant(&d), cof: cofactor_sum(&d) })
            }
        })
        .collect::<Result<_, SpectraError>>()?;
    ghh_det_cof(&bct, &values)
}
