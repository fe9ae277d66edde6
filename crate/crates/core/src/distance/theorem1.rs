//! The composite bound `d ≥ min{δ_1 d_1, …, δ_{r-1} d_{r-1}, d_r}`.
//!
//! Two members whose level-`i` outer words differ, with equal words above,
//! differ in at least `δ_i` blocks, and in each of those blocks by a vector
//! of `N(S_{i-1}) \ N(S_i)`. Members in the same coset of `N(S_{r-1})^N`
//! differ by a nonzero vector of it.

use super::{
    CertificateMethod, CertificateStatus, CompositeEvidence, DistanceCertificate, Evidence, InnerLeaf, OuterLeaf,
};
use crate::classical::{DistanceStatus, OuterCode};
use crate::gc::GCCode;

/// Assembles the bound from the verified component distances of `code`.
/// With `claimed`, the certificate proves it only if the bound reaches it.
pub fn certify_theorem1(code: &GCCode, claimed: Option<u32>) -> DistanceCertificate {
    let params = code.parameters();
    let bound = &params.bound;

    let mut inner: Vec<InnerLeaf> = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    for j in 0..code.blocks() {
        let c = code.chain_of[j];
        match seen.iter().position(|&s| s == c) {
            Some(i) => inner[i].blocks.push(j),
            None => {
                seen.push(c);
                inner.push(InnerLeaf { blocks: vec![j], levels: code.chains[c].distances.clone() });
            }
        }
    }

    let outer = code
        .outer()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let distance = a.distance();
            let verified = match distance.map(|d| d.status) {
                Some(DistanceStatus::VerifiedExact) => "verified exactly",
                Some(DistanceStatus::VerifiedLowerBound) => "verified as a lower bound",
                _ => "unverified",
            };
            let basis = match a {
                OuterCode::Linear(_) => format!("{verified} on the linear code"),
                OuterCode::SubAlphabet(s) => format!(
                    "inherited from the parent [{},{}]_{} ({verified}); a sub-alphabet coset has at least its distance",
                    s.parent().length(),
                    s.parent().dimension(),
                    s.parent().field().order()
                ),
            };
            OuterLeaf { level: i + 1, code: a.describe(), distance, basis }
        })
        .collect();

    let status = match (bound.value, claimed) {
        (None, _) => CertificateStatus::Conditional,
        (Some(b), Some(c)) if c > b => CertificateStatus::Conditional,
        _ if bound.verified => CertificateStatus::ProvedLowerBound,
        _ => CertificateStatus::Conditional,
    };
    let distance = match claimed {
        Some(c) if status == CertificateStatus::ProvedLowerBound => Some(c),
        _ => bound.value,
    };
    DistanceCertificate {
        claimed: claimed.or(bound.value).unwrap_or(0),
        method: CertificateMethod::Theorem1Composite,
        status,
        distance,
        evidence: Evidence::Composite(CompositeEvidence {
            inner,
            outer,
            label_maps_linear: code.label_maps_linear(),
            terms: bound.levels.iter().map(|t| t.product).collect(),
            last_level: bound.last_level,
        }),
    }
}
