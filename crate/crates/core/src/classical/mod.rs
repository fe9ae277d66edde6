//! Classical outer codes: linear codes over GF(q) and nonlinear codes cut
//! out of a linear code's coset by restricting the alphabet.
//!
//! Outer codes speak in *labels*: integers `0..alphabet_size`. For a linear
//! code the label of a symbol is its field encoding. For a sub-alphabet code
//! the label is mapped into the parent field by the symbol injection.

mod linear;
mod subalphabet;

pub use linear::{DistanceMode, DistanceResult, LinearCode, DEFAULT_BUDGET};
pub use subalphabet::{SubAlphabetCode, SubAlphabetStrategy};

pub(crate) use linear::{binomial, increment, next_combination};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceStatus {
    Unverified,
    VerifiedExact,
    VerifiedLowerBound,
}

/// A claimed minimum distance and how far it has been checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistanceClaim {
    pub value: u32,
    pub status: DistanceStatus,
}

impl DistanceClaim {
    pub fn is_verified(&self) -> bool {
        self.status != DistanceStatus::Unverified
    }
}

/// Where a size figure comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Exact,
    Bound,
    Estimate,
}

/// Size of an outer code.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SizeRecord {
    /// Exactly `base^exp` words.
    Power { base: u64, exp: u64 },
    /// Exactly `count` words, counted by enumeration.
    Count { count: u64 },
    /// `⌈K (s/q)^N⌉`: the pigeonhole guarantee for the best coset of the
    /// parent. Says nothing exact about the coset actually instantiated.
    PigeonholeBound { value: String, log2: f64 },
    /// Monte Carlo estimate for the instantiated coset with a 95% interval.
    Estimate { log2: f64, ci_low: f64, ci_high: f64, samples: u64, hits: u64, seed: u64 },
}

impl SizeRecord {
    pub fn log2(&self) -> f64 {
        match *self {
            SizeRecord::Power { base, exp } => exp as f64 * (base as f64).log2(),
            SizeRecord::Count { count } => (count as f64).log2(),
            SizeRecord::PigeonholeBound { log2, .. } | SizeRecord::Estimate { log2, .. } => log2,
        }
    }

    pub fn provenance(&self) -> Provenance {
        match self {
            SizeRecord::Power { .. } | SizeRecord::Count { .. } => Provenance::Exact,
            SizeRecord::PigeonholeBound { .. } => Provenance::Bound,
            SizeRecord::Estimate { .. } => Provenance::Estimate,
        }
    }
}

/// How a difference-membership answer was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DifferenceReason {
    ZeroWord,
    Linear,
    /// Support is nonzero and smaller than the verified distance.
    DistanceShortcut,
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DifferenceVerdict {
    pub member: bool,
    pub reason: DifferenceReason,
}

/// Digitwise base-`p` addition of labels, i.e. addition in F_p^b.
#[inline]
pub fn label_add(a: u32, b: u32, p: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

/// An outer code A_i.
#[derive(Debug, Clone)]
pub enum OuterCode {
    Linear(LinearCode),
    SubAlphabet(SubAlphabetCode),
}

impl OuterCode {
    pub fn length(&self) -> usize {
        match self {
            OuterCode::Linear(c) => c.length(),
            OuterCode::SubAlphabet(c) => c.length(),
        }
    }

    pub fn alphabet_size(&self) -> u64 {
        match self {
            OuterCode::Linear(c) => c.field().order() as u64,
            OuterCode::SubAlphabet(c) => c.alphabet_size() as u64,
        }
    }

    pub fn is_linear(&self) -> bool {
        matches!(self, OuterCode::Linear(_))
    }

    pub fn distance(&self) -> Option<DistanceClaim> {
        match self {
            OuterCode::Linear(c) => c.distance(),
            OuterCode::SubAlphabet(c) => c.distance(),
        }
    }

    pub fn size(&self) -> SizeRecord {
        match self {
            OuterCode::Linear(c) => c.size(),
            OuterCode::SubAlphabet(c) => c.size().clone(),
        }
    }

    pub fn describe(&self) -> String {
        let d = self.distance().map_or("?".to_string(), |d| d.value.to_string());
        match self {
            OuterCode::Linear(c) => {
                format!("[{},{},{}]_{}", c.length(), c.dimension(), d, c.field().order())
            }
            OuterCode::SubAlphabet(c) => format!(
                "({},2^{:.3},{})_{} from [{},{}]_{}",
                c.length(),
                c.size().log2(),
                d,
                c.alphabet_size(),
                c.parent().length(),
                c.parent().dimension(),
                c.parent().field().order()
            ),
        }
    }

    /// Membership of a label word.
    pub fn contains(&self, word: &[u32]) -> Result<bool> {
        match self {
            OuterCode::Linear(c) => c.contains(word),
            OuterCode::SubAlphabet(c) => c.contains(word),
        }
    }

    /// Whether `λ` is a difference `a ⊟ b` of two members, with label
    /// arithmetic in F_p^b.
    pub fn difference_contains(&self, lambda: &[u32], p: u32) -> Result<DifferenceVerdict> {
        if lambda.len() != self.length() {
            return Err(Error::Dimension { expected: self.length(), got: lambda.len() });
        }
        let entries: Vec<(usize, u32)> =
            lambda.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (j, x)).collect();
        self.difference_contains_sparse(&entries, p)
    }

    /// As [`difference_contains`](Self::difference_contains) for a word given
    /// by its nonzero entries, sorted by position.
    pub fn difference_contains_sparse(&self, entries: &[(usize, u32)], p: u32) -> Result<DifferenceVerdict> {
        if entries.is_empty() {
            return Ok(DifferenceVerdict { member: true, reason: DifferenceReason::ZeroWord });
        }
        match self {
            OuterCode::Linear(c) => {
                Ok(DifferenceVerdict { member: c.contains_sparse(entries), reason: DifferenceReason::Linear })
            }
            OuterCode::SubAlphabet(c) => c.difference_contains_sparse(entries, p),
        }
    }

    /// Every member as a label word, if at most `budget` of them.
    pub fn members(&self, budget: u64) -> Result<Vec<Vec<u32>>> {
        match self {
            OuterCode::Linear(c) => c.codewords(budget),
            OuterCode::SubAlphabet(c) => c.members(budget),
        }
    }
}
