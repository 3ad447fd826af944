use serde::{Deserialize, Serialize};

use crate::families::{FamilyKind, FamilySpec};

/// Peak location that a proven result predicts for a family instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedPeak {
    pub index: usize,
    /// The prediction concerns the normalized tree coefficients rather than
    /// the signed sequence.
    pub normalized: bool,
}

/// Exact peak predicted for `spec`, when one is known:
///
/// * `W(2, t)` (two cliques sharing a vertex), `t ≥ 3`: `⌊n/2⌋`;
/// * `B(t, 2)`: `t − 1`, and `B(t, ℓ)` for `ℓ ∈ {3, 4, 5}`: `t`, `t ≥ 3`;
/// * `L(t, ℓ)` for `ℓ ∈ {2, …, 5}`, `t ≥ 3`: `⌊(n−1)/2⌋`;
/// * stars on `n ≥ 3` vertices: normalized peak `⌊n/2⌋`.
pub fn expected_peak(spec: &FamilySpec) -> Option<ExpectedPeak> {
    let p = &spec.params;
    let signed = |index| Some(ExpectedPeak { index, normalized: false });
    match spec.kind {
        FamilyKind::Windmill if p.k == Some(2) && p.t? >= 3 => {
            let n = 2 * p.t? - 1;
            signed(n / 2)
        }
        FamilyKind::Friendship if p.k == Some(2) => signed(2),
        FamilyKind::Barbell if p.t? >= 3 => match p.ell? {
            2 => signed(p.t? - 1),
            3..=5 => signed(p.t?),
            _ => None,
        },
        FamilyKind::Lollipop if p.t? >= 3 && (2..=5).contains(&p.ell?) => {
            let n = p.t? + p.ell? - 1;
            signed((n - 1) / 2)
        }
        FamilyKind::Star if p.n? >= 3 => Some(ExpectedPeak { index: p.n? / 2, normalized: true }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilyParams;

    fn spec(kind: FamilyKind, params: FamilyParams) -> FamilySpec {
        FamilySpec::new(kind, params)
    }

    #[test]
    fn predictions() {
        let w = spec(FamilyKind::Windmill, FamilyParams { k: Some(2), t: Some(4), ..Default::default() });
        assert_eq!(expected_peak(&w), Some(ExpectedPeak { index: 3, normalized: false }));
        let w3 = spec(FamilyKind::Windmill, FamilyParams { k: Some(3), t: Some(4), ..Default::default() });
        assert_eq!(expected_peak(&w3), None);
        let b = spec(FamilyKind::Barbell, FamilyParams { t: Some(5), ell: Some(2), ..Default::default() });
        assert_eq!(expected_peak(&b).unwrap().index, 4);
        let b6 = spec(FamilyKind::Barbell, FamilyParams { t: Some(5), ell: Some(6), ..Default::default() });
        assert_eq!(expected_peak(&b6), None);
        let l = spec(FamilyKind::Lollipop, FamilyParams { t: Some(4), ell: Some(5), ..Default::default() });
        assert_eq!(expected_peak(&l).unwrap().index, 3);
        let s = spec(FamilyKind::Star, FamilyParams { n: Some(7), ..Default::default() });
        assert_eq!(expected_peak(&s), Some(ExpectedPeak { index: 3, normalized: true }));
        let missing = spec(FamilyKind::Barbell, FamilyParams::default());
        assert_eq!(expected_peak(&missing), None);
    }
}
