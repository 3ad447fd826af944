//! One analysed graph per record. Records are self-contained: every verdict
//! flag can be recomputed from the stored coefficients with [`ReportRecord::recheck`].

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use distpoly::graph::{distance_matrix, Graph};
use distpoly::linalg::{cofactor_sum, inertia_from_charpoly, Inertia, IntPolynomial};
use distpoly::metric::{hierarchy_report, HierarchyOptions, Metric};
use distpoly::spectra::{
    conjecture_verdict, ghh_for_graph, normalized_coefficients, sequence_report, CoefficientSequence, ExpectedPeak,
    PeakWindow, SpectraError,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Which analyses to run beyond the coefficient pipeline.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Checks {
    pub hierarchy: bool,
    pub hierarchy_options: HierarchyOptions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeFields {
    #[serde(with = "distpoly::decimal::bigint_vec")]
    pub normalized: Vec<BigInt>,
    pub peak_index: usize,
    pub argmax_set: Vec<usize>,
    pub window: PeakWindow,
    pub peak_in_window: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchySummary {
    pub l1: Option<bool>,
    pub hypermetric_violated: Option<bool>,
    pub hyper_bound: u32,
    pub negative_type: bool,
    pub one_positive_eigenvalue: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub schema_version: u32,
    /// Canonical graph6 of the graph.
    pub key: String,
    pub n: usize,
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// `s_0 ..= s_{n−2}`.
    #[serde(with = "distpoly::decimal::bigint_vec")]
    pub coefficients: Vec<BigInt>,
    /// `c_{n−1}`, the coefficient of `x^{n−1}` in `det(D − xI)`.
    #[serde(with = "distpoly::decimal::bigint_opt")]
    pub trace_coefficient: Option<BigInt>,
    pub peak_index: Option<usize>,
    pub argmax_set: Vec<usize>,
    pub tie: bool,
    pub window: Option<PeakWindow>,
    pub positivity_ok: bool,
    pub trace_zero_ok: bool,
    pub log_concave_ok: bool,
    pub unimodal_ok: bool,
    pub inertia_ok: bool,
    pub peak_in_window: bool,
    pub ghh_ok: bool,
    pub inertia: Option<Inertia>,
    #[serde(with = "distpoly::decimal::bigint_opt")]
    pub det: Option<BigInt>,
    #[serde(with = "distpoly::decimal::bigint_opt")]
    pub cof: Option<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_peak: Option<ExpectedPeak>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_peak_ok: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree: Option<TreeFields>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hierarchy: Option<HierarchySummary>,
    /// Names of failed checks. Any entry makes the record a finding.
    pub findings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl ReportRecord {
    fn empty(key: String, n: usize, family: String) -> Self {
        ReportRecord {
            schema_version: SCHEMA_VERSION,
            key,
            n,
            family,
            error: None,
            coefficients: Vec::new(),
            trace_coefficient: None,
            peak_index: None,
            argmax_set: Vec::new(),
            tie: false,
            window: None,
            positivity_ok: false,
            trace_zero_ok: false,
            log_concave_ok: false,
            unimodal_ok: false,
            inertia_ok: false,
            peak_in_window: false,
            ghh_ok: false,
            inertia: None,
            det: None,
            cof: None,
            expected_peak: None,
            expected_peak_ok: None,
            tree: None,
            hierarchy: None,
            findings: Vec::new(),
            timing_ms: None,
        }
    }

    /// Record for an instance that could not be analysed.
    pub fn failure(key: String, n: usize, family: String, error: String) -> Self {
        ReportRecord { error: Some(error), ..ReportRecord::empty(key, n, family) }
    }

    pub fn is_finding(&self) -> bool {
        !self.findings.is_empty()
    }

    /// Compares the peak with a proven prediction and records a finding on
    /// mismatch. Clears any earlier prediction.
    pub fn apply_expectation(&mut self, expected: Option<ExpectedPeak>) {
        self.findings.retain(|f| f != "expected_peak");
        self.expected_peak = expected;
        self.expected_peak_ok = expected.map(|e| {
            let actual = if e.normalized { self.tree.as_ref().map(|t| t.peak_index) } else { self.peak_index };
            actual == Some(e.index)
        });
        if self.expected_peak_ok == Some(false) {
            self.findings.push("expected_peak".to_string());
        }
    }

    /// Recomputes every derived field from `coefficients` and
    /// `trace_coefficient` and reports the first disagreement.
    pub fn recheck(&self) -> Result<(), String> {
        if self.error.is_some() {
            return Ok(());
        }
        let n = self.n;
        let trace = self.trace_coefficient.clone().ok_or("missing trace coefficient")?;
        let fail = |what: &str| Err(format!("{}: {what} disagrees with the coefficients", self.key));
        if self.coefficients.len() + 1 != n {
            return fail("coefficient count");
        }
        let report = sequence_report(&self.coefficients);
        if report.positive != self.positivity_ok
            || report.log_concave != self.log_concave_ok
            || report.unimodal != self.unimodal_ok
            || Some(report.peak_index) != self.peak_index
            || report.argmax_set != self.argmax_set
            || report.has_tie() != self.tie
        {
            return fail("sequence report");
        }
        let window = PeakWindow::block_graph(n);
        if Some(window) != self.window || window.contains(report.peak_index) != self.peak_in_window {
            return fail("peak window");
        }
        if (trace == BigInt::from(0)) != self.trace_zero_ok {
            return fail("trace flag");
        }
        let p = monic_from_signed(&self.coefficients, &trace, n);
        let inertia = inertia_from_charpoly(&p).map_err(|e| e.to_string())?;
        let expected_inertia = Inertia { positive: 1, zero: 0, negative: n - 1 };
        if Some(inertia) != self.inertia || (inertia == expected_inertia) != self.inertia_ok {
            return fail("inertia");
        }
        let det = if n % 2 == 1 { self.coefficients[0].clone() } else { -&self.coefficients[0] };
        if Some(det) != self.det {
            return fail("determinant");
        }
        if let Some(tree) = &self.tree {
            let seq = CoefficientSequence { n, s: self.coefficients.clone(), trace_coefficient: trace };
            let normalized = normalized_coefficients(&seq).map_err(|e| e.to_string())?;
            let r = sequence_report(&normalized.d);
            let window = PeakWindow::tree(n);
            if normalized.d != tree.normalized
                || r.peak_index != tree.peak_index
                || r.argmax_set != tree.argmax_set
                || window != tree.window
                || window.contains(r.peak_index) != tree.peak_in_window
            {
                return fail("tree normalization");
            }
        }
        Ok(())
    }
}

/// `det(xI − D)` from `s_k = −p_k` and `c_{n−1} = (−1)^n p_{n−1}`.
fn monic_from_signed(s: &[BigInt], trace: &BigInt, n: usize) -> IntPolynomial {
    let mut coeffs: Vec<BigInt> = s.iter().map(|v| -v).collect();
    coeffs.push(if n.is_multiple_of(2) { trace.clone() } else { -trace });
    coeffs.push(BigInt::from(1));
    IntPolynomial::new(coeffs)
}

/// Runs the full pipeline on `g`. The family descriptor and expected peak
/// are left to the caller.
pub fn analyze_graph(g: &Graph, key: String, family: String, checks: &Checks) -> ReportRecord {
    let n = g.order();
    let verdict = match conjecture_verdict(g) {
        Ok(v) => v,
        Err(e) => {
            let mut record = ReportRecord::failure(key, n, family, e.to_string());
            if matches!(e, SpectraError::InexactNormalization { .. }) {
                record.findings.push("tree_divisibility".to_string());
            }
            return record;
        }
    };
    let mut r = ReportRecord::empty(key, n, family);
    let s0 = &verdict.coefficients.s[0];
    let det = if n % 2 == 1 { s0.clone() } else { -s0 };
    let d = distance_matrix(g).expect("verdict succeeded, so the graph is connected");
    let cof = cofactor_sum(&d);
    r.ghh_ok = matches!(ghh_for_graph(g), Ok((gd, gc)) if gd == det && gc == cof);
    r.det = Some(det);
    r.cof = Some(cof);
    r.coefficients = verdict.coefficients.s.clone();
    r.trace_coefficient = Some(verdict.coefficients.trace_coefficient.clone());
    r.peak_index = Some(verdict.peak_index);
    r.tie = verdict.report.has_tie();
    r.argmax_set = verdict.report.argmax_set.clone();
    r.window = Some(verdict.window);
    r.positivity_ok = verdict.positivity_ok;
    r.trace_zero_ok = verdict.trace_zero_ok;
    r.log_concave_ok = verdict.log_concave_ok;
    r.unimodal_ok = verdict.unimodal_ok;
    r.inertia_ok = verdict.inertia_ok;
    r.peak_in_window = verdict.peak_in_window;
    r.inertia = Some(verdict.inertia);
    r.tree = verdict.tree.map(|t| TreeFields {
        normalized: t.normalized.d,
        peak_index: t.report.peak_index,
        argmax_set: t.report.argmax_set,
        window: t.window,
        peak_in_window: t.peak_in_window,
    });
    for (ok, name) in [
        (r.positivity_ok, "positivity"),
        (r.trace_zero_ok, "trace_zero"),
        (r.log_concave_ok, "log_concavity"),
        (r.unimodal_ok, "unimodality"),
        (r.inertia_ok, "inertia"),
        (r.peak_in_window, "peak_window"),
        (r.ghh_ok, "ghh"),
        (r.tree.as_ref().is_none_or(|t| t.peak_in_window), "tree_peak_window"),
    ] {
        if !ok {
            r.findings.push(name.to_string());
        }
    }
    if checks.hierarchy {
        let summary = Metric::from_graph(g)
            .map_err(|e| e.to_string())
            .and_then(|m| hierarchy_report(&m, &checks.hierarchy_options).map_err(|e| e.to_string()));
        match summary {
            Ok(h) => {
                if !h.negative_type {
                    r.findings.push("negative_type".to_string());
                }
                if !h.one_positive_eigenvalue {
                    r.findings.push("one_positive_eigenvalue".to_string());
                }
                r.hierarchy = Some(HierarchySummary {
                    l1: h.l1,
                    hypermetric_violated: h.hypermetric_violated,
                    hyper_bound: h.hyper_bound,
                    negative_type: h.negative_type,
                    one_positive_eigenvalue: h.one_positive_eigenvalue,
                });
            }
            Err(e) => r.error = Some(e),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use distpoly::families::{path, windmill};
    use distpoly::graph::canonical_graph6;

    fn record_of(g: &Graph) -> ReportRecord {
        analyze_graph(g, canonical_graph6(g), "test".into(), &Checks::default())
    }

    #[test]
    fn friendship_record() {
        let r = record_of(&windmill(2, 3).unwrap());
        let coefficients: Vec<String> = r.coefficients.iter().map(BigInt::to_string).collect();
        assert_eq!(coefficients, ["12", "43", "52", "22"]);
        assert_eq!(r.peak_index, Some(2));
        assert!(r.ghh_ok && r.findings.is_empty());
        r.recheck().unwrap();
    }

    #[test]
    fn tampering_is_detected() {
        let mut r = record_of(&path(6).unwrap());
        r.recheck().unwrap();
        r.coefficients[1] += 1;
        assert!(r.recheck().is_err());
    }

    #[test]
    fn expectation_mismatch_is_a_finding() {
        let mut r = record_of(&windmill(2, 3).unwrap());
        r.apply_expectation(Some(ExpectedPeak { index: 1, normalized: false }));
        assert_eq!(r.findings, ["expected_peak"]);
        r.apply_expectation(Some(ExpectedPeak { index: 2, normalized: false }));
        assert!(r.findings.is_empty());
    }

    #[test]
    fn non_block_graph_is_an_error_record() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let r = record_of(&c4);
        assert!(r.error.is_some() && !r.is_finding());
    }
}
