//! Minimum symplectic weights of additive codes and of the coset layers of
//! a nested chain.

use serde::Serialize;

use super::scan::{scan_first, Syn, SyndromeTable, Visit, Visitor};
use super::DEFAULT_SCAN_BUDGET;
use crate::error::{Error, Result};
use crate::symplectic::{AdditiveSymplecticCode, NestedStabilizerChain, SymplecticVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightMethod {
    /// Every codeword was enumerated.
    CodewordEnumeration,
    /// Every vector of weight up to the answer was tested for membership.
    WeightScan,
}

/// Outcome of a minimum-weight computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightResult {
    /// The minimum, or the certified lower bound when `exact` is false.
    /// `None` when the set is empty.
    pub value: Option<u32>,
    pub exact: bool,
    pub method: WeightMethod,
    /// Codewords or ambient vectors examined.
    pub words: u64,
}

/// Minimum weight over `{v ∈ a : v ∉ b}`, where `b = None` excludes only zero.
///
/// Enumerates `a` when it has at most `budget` words; otherwise scans the
/// ambient space by weight up to `upto`, enumerating at most `scan_budget`
/// vectors.
pub fn min_weight_outside(
    a: &AdditiveSymplecticCode,
    b: Option<&AdditiveSymplecticCode>,
    upto: u32,
    budget: u64,
    scan_budget: u64,
) -> Result<WeightResult> {
    let words = (a.p() as f64).powi(a.dim() as i32);
    if words <= budget as f64 {
        return Ok(enumerate_outside(a, b));
    }
    scan_outside(a, b, upto, scan_budget)
}

/// Exact minimum nonzero weight of `c`, or a bound `≥ upto + 1`.
pub fn min_symplectic_weight(c: &AdditiveSymplecticCode, upto: u32, budget: u64) -> Result<WeightResult> {
    min_weight_outside(c, None, upto, budget, DEFAULT_SCAN_BUDGET)
}

fn outside_test(b: Option<&AdditiveSymplecticCode>) -> Vec<SymplecticVector> {
    b.map(|b| b.dual().basis()).unwrap_or_default()
}

fn enumerate_outside(a: &AdditiveSymplecticCode, b: Option<&AdditiveSymplecticCode>) -> WeightResult {
    let (p, n) = (a.p(), a.n());
    let basis = a.basis();
    let checks = outside_test(b);
    let outside = |v: &SymplecticVector| match b {
        None => !v.is_zero(),
        Some(_) => checks.iter().any(|h| v.product_unchecked(h) != 0),
    };
    let mut best: Option<u32> = None;
    let mut v = SymplecticVector::zeros(p, n);
    let mut coeffs = vec![0u32; basis.len()];
    let mut words = 1u64;
    // Counter over coefficient vectors; a digit wrapping back to zero has
    // added its basis vector p times, which is zero.
    'outer: loop {
        let mut i = 0;
        loop {
            if i == basis.len() {
                break 'outer;
            }
            v.add_assign(&basis[i]);
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        words += 1;
        if outside(&v) {
            let w = v.weight() as u32;
            if best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        }
    }
    WeightResult { value: best, exact: true, method: WeightMethod::CodewordEnumeration, words }
}

struct OutsideVisitor {
    n: usize,
    member: SyndromeTable,
    outside: Option<SyndromeTable>,
}

impl Visitor for OutsideVisitor {
    type State = (Syn, Syn);
    type Hit = ();

    fn init(&self) -> Self::State {
        (Syn::default(), Syn::default())
    }

    fn visit(&self, (s, t): &mut Self::State, positions: &[usize], values: &[u32]) -> Visit<()> {
        self.member.clear(s);
        for (&i, &v) in positions.iter().zip(values) {
            self.member.add(s, i, v);
        }
        if !self.member.is_zero(s, 0..self.member.width()) {
            return Visit::Reject;
        }
        let Some(out) = &self.outside else {
            return Visit::Hit(());
        };
        out.clear(t);
        for (&i, &v) in positions.iter().zip(values) {
            out.add(t, i, v);
        }
        if out.is_zero(t, 0..out.width()) {
            Visit::Reject
        } else {
            Visit::Hit(())
        }
    }
}

fn scan_outside(
    a: &AdditiveSymplecticCode,
    b: Option<&AdditiveSymplecticCode>,
    upto: u32,
    budget: u64,
) -> Result<WeightResult> {
    let (p, n) = (a.p(), a.n());
    let visitor = OutsideVisitor {
        n,
        member: SyndromeTable::new(p, n, &a.dual().basis()),
        outside: b.map(|b| SyndromeTable::new(p, n, &outside_test(Some(b)))),
    };
    let mut words = 0u64;
    for w in 1..=(upto as usize).min(visitor.n) {
        let count = super::scan::weight_count(n, p, w);
        if count + words as u128 > budget as u128 {
            // Search only for a hit at this weight; an empty result is no proof.
            let first = scan_first(&visitor, n, p, w, budget.saturating_sub(words));
            words += first.vectors;
            if first.first.is_some() {
                return Ok(WeightResult {
                    value: Some(w as u32),
                    exact: true,
                    method: WeightMethod::WeightScan,
                    words,
                });
            }
            return Err(Error::BudgetExceeded {
                what: format!("weight-{w} scan on {n} qudits"),
                needed: count as f64,
                budget: budget as f64,
            });
        }
        let first = scan_first(&visitor, n, p, w, u64::MAX);
        words += first.vectors;
        if first.first.is_some() {
            return Ok(WeightResult { value: Some(w as u32), exact: true, method: WeightMethod::WeightScan, words });
        }
    }
    if upto as usize >= n {
        // Nothing of any weight: the set is empty.
        return Ok(WeightResult { value: None, exact: true, method: WeightMethod::WeightScan, words });
    }
    Ok(WeightResult { value: Some(upto + 1), exact: false, method: WeightMethod::WeightScan, words })
}

/// Per-level distances of a chain. Entry `i - 1` (for `i = 1..r-1`) is the
/// minimum weight over `N(S_{i-1}) \ N(S_i)`; the last entry is the minimum
/// nonzero weight of `N(S_{r-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelDistance {
    pub level: usize,
    pub result: Option<WeightResult>,
}

impl LevelDistance {
    pub fn value(&self) -> Option<u32> {
        self.result.as_ref().and_then(|r| r.value)
    }

    pub fn is_proved(&self) -> bool {
        self.result.as_ref().is_some_and(|r| r.exact && r.value.is_some())
    }
}

/// Layers with at most `budget` words are enumerated, larger ones scanned.
pub fn chain_level_distances(chain: &NestedStabilizerChain, budget: u64) -> Vec<LevelDistance> {
    let r = chain.codes().len();
    let n = chain.n() as u32;
    (1..=r)
        .map(|level| {
            let result = if level < r {
                let (a, b) = (chain.normalizer(level - 1), chain.normalizer(level));
                min_weight_outside(a, Some(b), n, budget, DEFAULT_SCAN_BUDGET)
            } else {
                min_symplectic_weight(chain.normalizer(r - 1), n, budget)
            };
            LevelDistance { level, result: result.ok() }
        })
        .collect()
}
