use std::sync::Arc;

use serde::Serialize;

use super::{DistanceClaim, DistanceStatus, SizeRecord};
use crate::error::{Error, Result};
use crate::galois::{matrix, Elem, FiniteField};

/// Default cap on enumerated codewords.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// Subset count above which column-independence checks are not attempted
/// automatically.
const COLUMN_CHECK_LIMIT: u64 = 2_000_000;

/// How [`LinearCode::min_distance`] should work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceMode {
    /// Minimum weight over all nonzero codewords; at most `budget` codewords.
    Exact { budget: u64 },
    /// Check that every set of at most `w` columns of H is independent.
    LowerBound(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DistanceResult {
    /// Exact minimum distance; `None` for the zero code.
    Exact { distance: Option<u32> },
    /// Every set of at most `d - 1` columns of H is independent.
    AtLeast { distance: u32 },
    /// A nonzero codeword of weight at most the tested bound.
    Witness { codeword: Vec<Elem> },
}

/// A linear code over GF(q) with generator and parity-check matrices.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: Arc<FiniteField>,
    n: usize,
    generator: Vec<Vec<Elem>>,
    parity_check: Vec<Vec<Elem>>,
    /// Columns of `parity_check`, for sparse syndromes.
    check_columns: Vec<Vec<Elem>>,
    distance: Option<DistanceClaim>,
}

impl LinearCode {
    /// Builds the code spanned by the rows of `generator`.
    pub fn new(field: Arc<FiniteField>, generator: Vec<Vec<Elem>>) -> Result<Self> {
        let n = generator.first().map_or(0, Vec::len);
        if generator.is_empty() || n == 0 {
            return Err(Error::InvalidCode("empty generator matrix".into()));
        }
        for row in &generator {
            if row.len() != n {
                return Err(Error::Dimension { expected: n, got: row.len() });
            }
            for &x in row {
                field.check(x)?;
            }
        }
        let mut g = generator;
        matrix::rref(&field, &mut g);
        let parity_check = matrix::nullspace(&field, &g, n);
        let check_columns = (0..n).map(|j| parity_check.iter().map(|r| r[j]).collect()).collect();
        Ok(LinearCode { field, n, generator: g, parity_check, check_columns, distance: None })
    }

    /// Extended Reed-Solomon code `[n, k, n-k+1]` over `field`, `n ≤ q + 1`.
    ///
    /// Evaluation points are the elements `0..n` in integer order; when
    /// `n = q + 1` the last coordinate is the point at infinity.
    pub fn mds(field: Arc<FiniteField>, n: usize, k: usize) -> Result<Self> {
        let q = field.order() as usize;
        if n > q + 1 {
            return Err(Error::InvalidCode(format!("Reed-Solomon length {n} exceeds q+1 = {}", q + 1)));
        }
        if k == 0 || k > n {
            return Err(Error::InvalidCode(format!("dimension {k} out of range for length {n}")));
        }
        let finite = n.min(q);
        let generator = (0..k)
            .map(|i| {
                let mut row: Vec<Elem> = (0..finite as Elem).map(|a| field.pow(a, i as u64)).collect();
                if n == q + 1 {
                    row.push(if i == k - 1 { 1 } else { 0 });
                }
                row
            })
            .collect();
        let mut code = Self::new(field, generator)?;
        let claimed = (n - k + 1) as u32;
        code.distance = Some(DistanceClaim { value: claimed, status: DistanceStatus::Unverified });
        code.verify_claim(claimed, DEFAULT_BUDGET);
        Ok(code)
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[Vec<Elem>] {
        &self.generator
    }

    pub fn parity_check(&self) -> &[Vec<Elem>] {
        &self.parity_check
    }

    pub fn distance(&self) -> Option<DistanceClaim> {
        self.distance
    }

    pub fn size(&self) -> SizeRecord {
        SizeRecord::Power { base: self.field.order() as u64, exp: self.dimension() as u64 }
    }

    pub fn log2_size(&self) -> f64 {
        self.dimension() as f64 * (self.field.order() as f64).log2()
    }

    pub fn encode(&self, message: &[Elem]) -> Vec<Elem> {
        matrix::vec_mat(&self.field, message, &self.generator)
    }

    pub fn syndrome(&self, word: &[Elem]) -> Vec<Elem> {
        matrix::mat_vec(&self.field, &self.parity_check, word)
    }

    /// Syndrome of a word given by its nonzero `(position, symbol)` entries.
    pub fn syndrome_sparse(&self, entries: &[(usize, Elem)]) -> Vec<Elem> {
        let f = &self.field;
        let mut s = vec![0; self.parity_check.len()];
        for &(j, a) in entries {
            for (x, &h) in s.iter_mut().zip(&self.check_columns[j]) {
                *x = f.add(*x, f.mul(a, h));
            }
        }
        s
    }

    fn check_word(&self, word: &[Elem]) -> Result<()> {
        if word.len() != self.n {
            return Err(Error::Dimension { expected: self.n, got: word.len() });
        }
        word.iter().try_for_each(|&x| self.field.check(x))
    }

    pub fn contains(&self, word: &[Elem]) -> Result<bool> {
        self.check_word(word)?;
        Ok(self.syndrome(word).iter().all(|&x| x == 0))
    }

    pub(crate) fn contains_sparse(&self, entries: &[(usize, Elem)]) -> bool {
        self.syndrome_sparse(entries).iter().all(|&x| x == 0)
    }

    /// All codewords, in message order (message digits little-endian).
    pub fn codewords(&self, budget: u64) -> Result<Vec<Vec<Elem>>> {
        let count = (self.field.order() as f64).powi(self.dimension() as i32);
        if count > budget as f64 {
            return Err(Error::BudgetExceeded {
                what: "codeword enumeration".into(),
                needed: count,
                budget: budget as f64,
            });
        }
        let q = self.field.order();
        let k = self.dimension();
        let mut message = vec![0; k];
        let mut out = Vec::with_capacity(count as usize);
        loop {
            out.push(self.encode(&message));
            if !increment(&mut message, q) {
                break;
            }
        }
        Ok(out)
    }

    pub fn min_distance(&self, mode: DistanceMode) -> Result<DistanceResult> {
        match mode {
            DistanceMode::Exact { budget } => {
                let words = self.codewords(budget)?;
                let distance =
                    words.iter().map(|w| w.iter().filter(|&&x| x != 0).count() as u32).filter(|&w| w > 0).min();
                Ok(DistanceResult::Exact { distance })
            }
            DistanceMode::LowerBound(w) => {
                if w > self.n {
                    return Err(Error::InvalidCode(format!("bound {w} exceeds length {}", self.n)));
                }
                for size in 1..=w {
                    if let Some(codeword) = self.dependent_columns(size) {
                        return Ok(DistanceResult::Witness { codeword });
                    }
                }
                Ok(DistanceResult::AtLeast { distance: w as u32 + 1 })
            }
        }
    }

    /// A codeword supported on the first `size` columns of H (in
    /// lexicographic subset order) that are linearly dependent, if any.
    fn dependent_columns(&self, size: usize) -> Option<Vec<Elem>> {
        let f = &self.field;
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            // Rows of the transposed submatrix: one per chosen column.
            let rows: Vec<Vec<Elem>> = subset.iter().map(|&j| self.check_columns[j].clone()).collect();
            // Dependency among columns = nonzero left kernel of `rows`.
            let transposed: Vec<Vec<Elem>> =
                (0..self.parity_check.len()).map(|i| rows.iter().map(|r| r[i]).collect()).collect();
            let kernel =
                if transposed.is_empty() { vec![unit(size, 0)] } else { matrix::nullspace(f, &transposed, size) };
            if let Some(coeffs) = kernel.first() {
                let mut word = vec![0; self.n];
                for (&j, &c) in subset.iter().zip(coeffs) {
                    word[j] = c;
                }
                return Some(word);
            }
            if !next_combination(&mut subset, self.n) {
                return None;
            }
        }
    }

    /// Checks a claimed distance `d` and records the strongest verified status.
    ///
    /// The lower bound comes from column independence of H (or exhaustive
    /// enumeration); exactness needs a weight-`d` codeword.
    pub fn verify_claim(&mut self, claimed: u32, budget: u64) -> DistanceClaim {
        let claim = self.check_claim(claimed, budget);
        self.distance = Some(claim);
        claim
    }

    /// Records a distance without verification.
    pub fn set_claim(&mut self, claimed: u32) {
        self.distance = Some(DistanceClaim { value: claimed, status: DistanceStatus::Unverified });
    }

    fn check_claim(&self, claimed: u32, budget: u64) -> DistanceClaim {
        let unverified = DistanceClaim { value: claimed, status: DistanceStatus::Unverified };
        let enumerable = (self.field.order() as f64).powi(self.dimension() as i32) <= budget as f64;
        if enumerable {
            return match self.min_distance(DistanceMode::Exact { budget }) {
                Ok(DistanceResult::Exact { distance: Some(d) }) if d == claimed => {
                    DistanceClaim { value: d, status: DistanceStatus::VerifiedExact }
                }
                Ok(DistanceResult::Exact { distance: Some(d) }) if d > claimed => {
                    DistanceClaim { value: claimed, status: DistanceStatus::VerifiedLowerBound }
                }
                _ => unverified,
            };
        }
        let w = claimed.saturating_sub(1) as usize;
        if subsets_up_to(self.n, w) > COLUMN_CHECK_LIMIT {
            return unverified;
        }
        match self.min_distance(DistanceMode::LowerBound(w)) {
            Ok(DistanceResult::AtLeast { .. }) => {
                let exact = claimed as usize <= self.n
                    && binomial(self.n, claimed as usize) <= COLUMN_CHECK_LIMIT
                    && self.dependent_columns(claimed as usize).is_some();
                let status = if exact { DistanceStatus::VerifiedExact } else { DistanceStatus::VerifiedLowerBound };
                DistanceClaim { value: claimed, status }
            }
            _ => unverified,
        }
    }
}

fn unit(len: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

/// Little-endian base-`q` counter; false once it wraps to zero.
pub(crate) fn increment(digits: &mut [Elem], q: Elem) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < q {
            return true;
        }
        *d = 0;
    }
    false
}

/// Advances a sorted `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for i in (0..k).rev() {
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul((n - i) as u64) / (i as u64 + 1))
}

fn subsets_up_to(n: usize, w: usize) -> u64 {
    (1..=w).map(|s| binomial(n, s)).fold(0u64, u64::saturating_add)
}
