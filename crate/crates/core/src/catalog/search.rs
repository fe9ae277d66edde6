//! Bounded search for a stabilizer code nested with a given one.

use crate::distance::min_symplectic_weight;
use crate::error::{Error, Result};
use crate::fp::Echelon;
use crate::symplectic::{InnerDistanceStatus, StabilizerCode, SymplecticVector};

/// Default cap on candidate subgroups.
pub const SEARCH_BUDGET: u64 = 1 << 20;

/// Normalizers with at most this many words are enumerated when checking a
/// candidate's distance; larger ones are scanned by weight.
const WORD_BUDGET: u64 = 1 << 16;

/// Finds a code with `target_k` logical qudits and pure distance at least
/// `target_d` whose stabilizer contains or is contained in that of `code`.
///
/// For `target_k ≥ k` the candidates are the subgroups of `S` of dimension
/// `n - target_k`; otherwise they are `S + U` for subspaces `U` of a fixed
/// complement of `S` in `N(S)`, kept when self-orthogonal. Candidates are
/// visited in reduced-echelon order of their coordinates and the first hit
/// is returned.
pub fn find_nested_subcode(code: &StabilizerCode, target_k: usize, target_d: u32) -> Result<StabilizerCode> {
    find_nested_subcode_with_budget(code, target_k, target_d, SEARCH_BUDGET)
}

pub fn find_nested_subcode_with_budget(
    code: &StabilizerCode,
    target_k: usize,
    target_d: u32,
    budget: u64,
) -> Result<StabilizerCode> {
    let (p, n, k) = (code.p(), code.n(), code.k());
    if target_k > n {
        return Err(Error::InvalidCode(format!("cannot have {target_k} logical qudits on {n}")));
    }
    let stab = code.generators();
    let (ambient, fixed, dim) = if target_k >= k {
        (stab.clone(), Vec::new(), n - target_k)
    } else {
        (complement_in_normalizer(code), stab.clone(), k - target_k)
    };
    let candidates = gaussian_binomial(p, ambient.len(), dim);
    if candidates > budget as f64 {
        return Err(Error::BudgetExceeded {
            what: "nested subgroup search".into(),
            needed: candidates,
            budget: budget as f64,
        });
    }
    let mut found: Option<StabilizerCode> = None;
    let mut error: Option<Error> = None;
    for_each_subspace(p, ambient.len(), dim, |coeffs| {
        let mut gens = fixed.clone();
        for row in coeffs {
            let mut g = SymplecticVector::zeros(p, n);
            for (c, b) in row.iter().zip(&ambient) {
                g.add_scaled(b, *c);
            }
            gens.push(g);
        }
        let mut candidate = match StabilizerCode::new(p, n, &gens) {
            Ok(c) => c,
            Err(Error::NotSelfOrthogonal(..)) => return false,
            Err(e) => {
                error = Some(e);
                return true;
            }
        };
        match min_symplectic_weight(candidate.normalizer(), target_d, WORD_BUDGET) {
            Ok(w) => match w.value {
                Some(d) if d >= target_d => {
                    let d = if w.exact { d } else { target_d };
                    candidate.set_distance(d, InnerDistanceStatus::Verified);
                    found = Some(candidate);
                    true
                }
                _ => false,
            },
            Err(e) => {
                error = Some(e);
                true
            }
        }
    });
    if let Some(e) = error {
        return Err(e);
    }
    found.ok_or_else(|| {
        Error::SearchExhausted(format!(
            "no [[{n},{target_k},≥{target_d}]] code nested with {} among {candidates} candidates",
            code.params()
        ))
    })
}

/// Vectors of `N(S)` completing a basis of `S` to one of `N(S)`.
fn complement_in_normalizer(code: &StabilizerCode) -> Vec<SymplecticVector> {
    let (p, n) = (code.p(), code.n());
    let mut span = Echelon::new(p, 2 * n, code.generators().iter().map(SymplecticVector::to_flat));
    code.normalizer().basis().into_iter().filter(|v| span.insert(v.to_flat())).collect()
}

/// Number of `d`-dimensional subspaces of `F_p^m`.
fn gaussian_binomial(p: u32, m: usize, d: usize) -> f64 {
    if d > m {
        return 0.0;
    }
    let q = p as f64;
    (0..d).map(|i| (q.powi((m - i) as i32) - 1.0) / (q.powi((i + 1) as i32) - 1.0)).product()
}

/// Calls `visit` with the reduced-echelon basis of every `d`-dimensional
/// subspace of `F_p^m`, pivot sets in lexicographic order, until it returns
/// `true`.
fn for_each_subspace(p: u32, m: usize, d: usize, mut visit: impl FnMut(&[Vec<u32>]) -> bool) {
    if d > m {
        return;
    }
    let mut pivots: Vec<usize> = (0..d).collect();
    loop {
        // Free entries: right of the row's pivot, outside every pivot column.
        let slots: Vec<(usize, usize)> =
            (0..d).flat_map(|r| ((pivots[r] + 1)..m).filter(|c| !pivots.contains(c)).map(move |c| (r, c))).collect();
        let mut values = vec![0u32; slots.len()];
        loop {
            let mut rows = vec![vec![0u32; m]; d];
            for (r, &c) in pivots.iter().enumerate() {
                rows[r][c] = 1;
            }
            for (&(r, c), &v) in slots.iter().zip(&values) {
                rows[r][c] = v;
            }
            if visit(&rows) {
                return;
            }
            if !crate::classical::increment(&mut values, p) {
                break;
            }
        }
        if !crate::classical::next_combination(&mut pivots, m) {
            return;
        }
    }
}
