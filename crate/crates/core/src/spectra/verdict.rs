use serde::{Deserialize, Serialize};

use super::{
    normalized_coefficients, sequence_report, signed_coefficients, CoefficientSequence, NormalizedCoefficients,
    PeakWindow, SequenceReport, SpectraError,
};
use crate::graph::{distance_matrix, first_non_clique_block, Graph, GraphError};
use crate::linalg::{char_poly, Inertia};

/// Peak check on the normalized coefficients of a tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeVerdict {
    pub normalized: NormalizedCoefficients,
    pub report: SequenceReport,
    pub window: PeakWindow,
    pub peak_in_window: bool,
}

/// Outcome of the full pipeline on one block graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureVerdict {
    pub n: usize,
    pub coefficients: CoefficientSequence,
    pub report: SequenceReport,
    pub inertia: Inertia,
    pub positivity_ok: bool,
    pub trace_zero_ok: bool,
    pub log_concave_ok: bool,
    pub unimodal_ok: bool,
    pub inertia_ok: bool,
    pub peak_index: usize,
    pub window: PeakWindow,
    pub peak_in_window: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree: Option<TreeVerdict>,
}

impl ConjectureVerdict {
    pub fn all_ok(&self) -> bool {
        self.positivity_ok
            && self.trace_zero_ok
            && self.log_concave_ok
            && self.unimodal_ok
            && self.inertia_ok
            && self.peak_in_window
            && self.tree.as_ref().is_none_or(|t| t.peak_in_window)
    }
}

/// Distance matrix, characteristic polynomial, signed coefficients,
/// sequence report, inertia and window test for a connected block graph on
/// at least two vertices. Trees on at least three vertices additionally get
/// the normalized check.
pub fn conjecture_verdict(g: &Graph) -> Result<ConjectureVerdict, SpectraError> {
    let n = g.order();
    if n < 2 {
        return Err(SpectraError::TooSmall { n, min: 2 });
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    if let Some(block) = first_non_clique_block(g)? {
        return Err(SpectraError::NotBlockGraph { block });
    }
    let d = distance_matrix(g)?;
    let p = char_poly(&d);
    let coefficients = signed_coefficients(&p, n)?;
    let report = sequence_report(&coefficients.s);
    let inertia = d.inertia()?;
    let window = PeakWindow::block_graph(n);
    let tree = if g.is_tree() && n >= 3 { Some(tree_verdict(&coefficients)?) } else { None };
    Ok(ConjectureVerdict {
        n,
        positivity_ok: report.positive,
        trace_zero_ok: coefficients.trace_zero(),
        log_concave_ok: report.log_concave,
        unimodal_ok: report.unimodal,
        inertia_ok: inertia == Inertia { positive: 1, zero: 0, negative: n - 1 },
        peak_index: report.peak_index,
        peak_in_window: window.contains(report.peak_index),
        window,
        coefficients,
        report,
        inertia,
        tree,
    })
}

fn tree_verdict(seq: &CoefficientSequence) -> Result<TreeVerdict, SpectraError> {
    let normalized = normalized_coefficients(seq)?;
    let report = sequence_report(&normalized.d);
    let window = PeakWindow::tree(seq.n);
    Ok(TreeVerdict { peak_in_window: window.contains(report.peak_index), normalized, report, window })
}

/// Normalized coefficients `d_k = s_k / 2^{n−k−2}` of a tree.
pub fn tree_normalized_coefficients(g: &Graph) -> Result<NormalizedCoefficients, SpectraError> {
    if !g.is_tree() {
        return Err(SpectraError::NotTree);
    }
    let n = g.order();
    if n < 2 {
        return Err(SpectraError::TooSmall { n, min: 2 });
    }
    let p = char_poly(&distance_matrix(g)?);
    normalized_coefficients(&signed_coefficients(&p, n)?)
}

/// First index `k` where `2^{n−k−2}` does not divide `s_k`, if any. Used to
/// probe graphs beyond trees, where divisibility is not a theorem.
pub fn divisibility_probe(seq: &CoefficientSequence) -> Option<usize> {
    match normalized_coefficients(seq) {
        Ok(_) => None,
        Err(SpectraError::InexactNormalization { k, .. }) => Some(k),
        Err(other) => unreachable!("normalization only fails on divisibility: {other}"),
    }
}
