use serde::{Deserialize, Serialize};

use super::{
    hypermetric_falsify, is_negative_type, l1_decompose, CutDecomposition, FarkasCertificate, L1Outcome, Metric,
    MetricError, Witness, DEFAULT_HYPER_BOUND, DEFAULT_HYPER_SEARCH_CAP, DEFAULT_L1_CAP,
};
use crate::linalg::Inertia;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyOptions {
    /// Largest number of points for the cut LP; larger metrics get no ℓ1 verdict.
    pub l1_max_n: usize,
    /// Weight bound for the hypermetric search.
    pub hyper_bound: u32,
    /// Largest number of weight vectors the hypermetric search may visit.
    pub hyper_cap: u128,
}

impl Default for HierarchyOptions {
    fn default() -> Self {
        HierarchyOptions {
            l1_max_n: DEFAULT_L1_CAP,
            hyper_bound: DEFAULT_HYPER_BOUND,
            hyper_cap: DEFAULT_HYPER_SEARCH_CAP,
        }
    }
}

/// One metric placed on the ladder
/// ℓ1 ⇒ hypermetric ⇒ negative type ⇒ one positive eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyReport {
    pub n: usize,
    /// Absent when the metric is above the LP cap.
    pub l1: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut_decomposition: Option<CutDecomposition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub farkas_certificate: Option<FarkasCertificate>,
    /// Absent when the search space is above the cap. `Some(false)` only
    /// means no violation was found within the bound.
    pub hypermetric_violated: Option<bool>,
    pub hyper_bound: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypermetric_witness: Option<Witness>,
    pub negative_type: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negative_type_witness: Option<Witness>,
    pub inertia: Inertia,
    pub one_positive_eigenvalue: bool,
}

impl HierarchyReport {
    /// Implications of the ladder that the report contradicts.
    pub fn ladder_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.l1 == Some(true) && self.hypermetric_violated == Some(true) {
            out.push("l1 but a hypermetric inequality fails");
        }
        if self.l1 == Some(true) && !self.negative_type {
            out.push("l1 but not of negative type");
        }
        if self.negative_type && !self.one_positive_eigenvalue {
            out.push("negative type but not exactly one positive eigenvalue");
        }
        out
    }
}

/// Runs the cut LP (within `l1_max_n`), the bounded hypermetric search, the
/// negative-type test and the inertia of the distance matrix, then asserts
/// that the ladder holds. Needs at least two points.
pub fn hierarchy_report(m: &Metric, options: &HierarchyOptions) -> Result<HierarchyReport, MetricError> {
    let n = m.order();
    if n < 2 {
        return Err(MetricError::TooSmall { n, min: 2 });
    }
    let (l1, cut_decomposition, farkas_certificate) = if n <= options.l1_max_n {
        match l1_decompose(m, options.l1_max_n)? {
            L1Outcome::Embeddable(dec) => (Some(true), Some(dec), None),
            L1Outcome::NotEmbeddable(cert) => (Some(false), None, Some(cert)),
        }
    } else {
        (None, None, None)
    };
    let (hypermetric_violated, hypermetric_witness) =
        match hypermetric_falsify(m, options.hyper_bound, options.hyper_cap) {
            Ok(w) => (Some(w.is_some()), w),
            Err(MetricError::SearchCapExceeded { .. }) => (None, None),
            Err(e) => return Err(e),
        };
    let neg = is_negative_type(m)?;
    let inertia = m.to_matrix().inertia()?;
    let report = HierarchyReport {
        n,
        l1,
        cut_decomposition,
        farkas_certificate,
        hypermetric_violated,
        hyper_bound: options.hyper_bound,
        hypermetric_witness,
        negative_type: neg.negative_type,
        negative_type_witness: neg.witness,
        inertia,
        one_positive_eigenvalue: inertia.positive == 1,
    };
    let violations = report.ladder_violations();
    assert!(violations.is_empty(), "embedding ladder violated: {violations:?}");
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn graph_metric(n: usize, edges: &[(usize, usize)]) -> Metric {
        Metric::from_graph(&Graph::from_edges(n, edges).unwrap()).unwrap()
    }

    #[test]
    fn tree_metric() {
        let p4 = graph_metric(4, &[(0, 1), (1, 2), (2, 3)]);
        let r = hierarchy_report(&p4, &HierarchyOptions::default()).unwrap();
        assert_eq!(r.l1, Some(true));
        assert_eq!(r.hypermetric_violated, Some(false));
        assert!(r.negative_type && r.one_positive_eigenvalue);
    }

    #[test]
    fn complete_bipartite_metric() {
        let k23 = graph_metric(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let r = hierarchy_report(&k23, &HierarchyOptions::default()).unwrap();
        assert_eq!(r.l1, Some(false));
        assert_eq!(r.hypermetric_violated, Some(true));
        assert!(!r.negative_type && !r.one_positive_eigenvalue);
        assert_eq!(r.inertia.positive, 2);
        assert!(r.negative_type_witness.unwrap().verify(&k23));
    }

    #[test]
    fn five_cycle() {
        let c5 = graph_metric(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        let r = hierarchy_report(&c5, &HierarchyOptions::default()).unwrap();
        assert_eq!(r.l1, Some(true));
        assert!(r.negative_type && r.one_positive_eigenvalue);
    }

    #[test]
    fn caps_leave_fields_absent() {
        let p4 = graph_metric(4, &[(0, 1), (1, 2), (2, 3)]);
        let options = HierarchyOptions { l1_max_n: 3, hyper_bound: 3, hyper_cap: 10 };
        let r = hierarchy_report(&p4, &options).unwrap();
        assert_eq!((r.l1, r.hypermetric_violated), (None, None));
        let single = Metric::new(&[vec![0]]).unwrap();
        assert!(hierarchy_report(&single, &options).is_err());
    }
}
