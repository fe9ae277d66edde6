//! Minimum-distance verification.
//!
//! Three methods, each producing a [`DistanceCertificate`]:
//! exhaustive evaluation over the difference set of a small union code,
//! a scan of all low-weight vectors against a GC code's difference set, and
//! the composite bound assembled from verified component distances.

mod exhaustive;
mod inner;
mod lowweight;
pub(crate) mod scan;
mod theorem1;

pub use exhaustive::{verify_exhaustive, ExhaustiveMethod, UnionCode};
pub use inner::{
    chain_level_distances, min_symplectic_weight, min_weight_outside, LevelDistance, WeightMethod, WeightResult,
};
pub use lowweight::{verify_lowweight, LowWeightOptions, DEFAULT_SCAN_BUDGET};
pub use theorem1::certify_theorem1;

use serde::Serialize;

use crate::classical::DistanceClaim;
use crate::symplectic::SymplecticVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateMethod {
    ExhaustiveExact,
    LowWeightScan,
    Theorem1Composite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateStatus {
    ProvedExact,
    ProvedLowerBound,
    /// Rests on at least one unverified component.
    Conditional,
    /// A witness below the claimed distance exists.
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceCertificate {
    pub claimed: u32,
    pub method: CertificateMethod,
    pub status: CertificateStatus,
    /// Exact distance, certified lower bound, or witness weight, per status.
    pub distance: Option<u32>,
    pub evidence: Evidence,
}

impl DistanceCertificate {
    pub fn is_proved(&self) -> bool {
        matches!(self.status, CertificateStatus::ProvedExact | CertificateStatus::ProvedLowerBound)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    Scan(ScanEvidence),
    Exhaustive(ExhaustiveEvidence),
    Composite(CompositeEvidence),
}

/// A vector of the difference set, given by its support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub weight: u32,
    pub positions: Vec<usize>,
    /// Single-qudit factors at `positions`.
    pub paulis: Vec<String>,
    /// Position in the enumeration order of its weight, when found by a scan.
    pub index: Option<u64>,
}

impl Witness {
    pub(crate) fn from_vector(v: &SymplecticVector, index: Option<u64>) -> Self {
        let positions: Vec<usize> = (0..v.n()).filter(|&i| v.at(i) != (0, 0)).collect();
        let paulis = positions.iter().map(|&i| factor_name(v.p(), v.at(i))).collect();
        Witness { weight: positions.len() as u32, positions, paulis, index }
    }

    pub fn to_vector(&self, p: u32, n: usize) -> SymplecticVector {
        let mut v = SymplecticVector::zeros(p, n);
        for (&i, name) in self.positions.iter().zip(&self.paulis) {
            let (a, b) = parse_factor_name(p, name);
            v.set(i, a, b);
        }
        v
    }
}

fn factor_name(p: u32, (a, b): (u32, u32)) -> String {
    if p == 2 {
        return match (a, b) {
            (1, 0) => "X",
            (0, 1) => "Z",
            _ => "Y",
        }
        .into();
    }
    match (a, b) {
        (a, 0) => format!("X^{a}"),
        (0, b) => format!("Z^{b}"),
        (a, b) => format!("X^{a}Z^{b}"),
    }
}

fn parse_factor_name(p: u32, name: &str) -> (u32, u32) {
    match name {
        "X" => (1, 0),
        "Z" => (0, 1),
        "Y" => (1, 1),
        _ => {
            let (mut a, mut b) = (0, 0);
            if let Some(r) = name.strip_prefix("X^") {
                let end = r.find('Z').unwrap_or(r.len());
                a = r[..end].parse().unwrap_or(0) % p;
                if let Some(z) = r[end..].strip_prefix("Z^") {
                    b = z.parse().unwrap_or(0) % p;
                }
            } else if let Some(z) = name.strip_prefix("Z^") {
                b = z.parse().unwrap_or(0) % p;
            }
            (a, b)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightStats {
    pub weight: u32,
    /// Vectors enumerated at this weight.
    pub vectors: u64,
    /// Every vector of this weight was enumerated.
    pub complete: bool,
    /// Nonzero differences outside the excluded set.
    pub members: u64,
    /// Differences in the dual of the additive closure, which do not count.
    pub degenerate: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanEvidence {
    pub weights: Vec<WeightStats>,
    pub witness: Option<Witness>,
    /// Whether members in the dual of the additive closure were excluded.
    pub closure_excluded: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExhaustiveEvidence {
    pub technique: ExhaustiveMethod,
    pub cosets: usize,
    pub closure_dimension: usize,
    pub vectors: u64,
    /// `D \ C̃_0` was empty and the minimum nonzero weight of `D` is reported.
    pub fallback_to_nonzero: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InnerLeaf {
    /// Blocks that use this chain.
    pub blocks: Vec<usize>,
    pub levels: Vec<LevelDistance>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OuterLeaf {
    pub level: usize,
    pub code: String,
    pub distance: Option<DistanceClaim>,
    /// How the distance is justified.
    pub basis: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompositeEvidence {
    pub inner: Vec<InnerLeaf>,
    pub outer: Vec<OuterLeaf>,
    /// Informational: the bound needs only injective label maps.
    pub label_maps_linear: bool,
    pub terms: Vec<Option<u32>>,
    pub last_level: Option<u32>,
}
