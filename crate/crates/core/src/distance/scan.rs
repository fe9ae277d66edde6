//! Enumeration of all vectors of a fixed symplectic weight.
//!
//! Order: supports in lexicographic order, and on each support the Pauli
//! values `v = x·p + z` (1..p²) as a counter whose last position moves
//! fastest. Work is split by the leading support position; results are merged
//! in that order, so the first hit does not depend on scheduling.

use rayon::prelude::*;

use crate::classical::{binomial, next_combination};
use crate::error::{Error, Result};
use crate::symplectic::SymplecticVector;

pub(crate) enum Visit<H> {
    Reject,
    /// A hit that does not count, e.g. a degenerate element.
    Skip,
    Hit(H),
}

pub(crate) trait Visitor: Sync {
    type State: Send;
    type Hit: Send;
    fn init(&self) -> Self::State;
    fn visit(&self, state: &mut Self::State, positions: &[usize], values: &[u32]) -> Visit<Self::Hit>;
}

pub(crate) struct Found<H> {
    /// Index of the vector in the enumeration order of its weight.
    pub index: u64,
    pub positions: Vec<usize>,
    pub values: Vec<u32>,
    pub hit: H,
}

pub(crate) struct FullScan<H> {
    pub vectors: u64,
    pub hits: u64,
    pub skipped: u64,
    pub first: Option<Found<H>>,
}

pub(crate) struct FirstScan<H> {
    pub first: Option<Found<H>>,
    /// Vectors enumerated before (and including) the hit, or in the searched
    /// prefix when there is none.
    pub vectors: u64,
    /// The search stopped at the budget before covering every support.
    pub truncated: bool,
}

/// `C(n, w) (p² − 1)^w`.
pub(crate) fn weight_count(n: usize, p: u32, w: usize) -> u128 {
    binomial(n, w) as u128 * ((p as u128 * p as u128 - 1).pow(w as u32))
}

/// Vectors whose support starts at `lead`.
pub(crate) fn leading_count(n: usize, p: u32, w: usize, lead: usize) -> u128 {
    if w == 0 || lead + w > n {
        return 0;
    }
    binomial(n - 1 - lead, w - 1) as u128 * ((p as u128 * p as u128 - 1).pow(w as u32))
}

struct Leading<H> {
    vectors: u64,
    hits: u64,
    skipped: u64,
    first: Option<Found<H>>,
}

fn scan_leading<V: Visitor>(
    v: &V,
    state: &mut V::State,
    n: usize,
    p: u32,
    w: usize,
    lead: usize,
    stop: bool,
) -> Leading<V::Hit> {
    let mut out = Leading { vectors: 0, hits: 0, skipped: 0, first: None };
    if w == 0 || lead + w > n {
        return out;
    }
    let top = p * p - 1;
    let mut rest: Vec<usize> = (0..w - 1).collect();
    let mut positions = vec![0; w];
    let mut values = vec![1u32; w];
    positions[0] = lead;
    loop {
        for (slot, &r) in positions[1..].iter_mut().zip(&rest) {
            *slot = lead + 1 + r;
        }
        values.iter_mut().for_each(|x| *x = 1);
        loop {
            match v.visit(state, &positions, &values) {
                Visit::Reject => {}
                Visit::Skip => out.skipped += 1,
                Visit::Hit(h) => {
                    out.hits += 1;
                    if out.first.is_none() {
                        out.first = Some(Found {
                            index: out.vectors,
                            positions: positions.clone(),
                            values: values.clone(),
                            hit: h,
                        });
                        if stop {
                            out.vectors += 1;
                            return out;
                        }
                    }
                }
            }
            out.vectors += 1;
            let mut i = w;
            while i > 0 {
                i -= 1;
                if values[i] < top {
                    values[i] += 1;
                    break;
                }
                values[i] = 1;
                if i == 0 {
                    i = usize::MAX;
                    break;
                }
            }
            if i == usize::MAX {
                break;
            }
        }
        if w == 1 || !next_combination(&mut rest, n - 1 - lead) {
            break;
        }
    }
    out
}

/// Visits every vector of weight `w`.
pub(crate) fn scan_full<V: Visitor>(v: &V, n: usize, p: u32, w: usize) -> FullScan<V::Hit> {
    let parts: Vec<Leading<V::Hit>> = (0..n)
        .into_par_iter()
        .map_init(|| v.init(), |state, lead| scan_leading(v, state, n, p, w, lead, false))
        .collect();
    let mut out = FullScan { vectors: 0, hits: 0, skipped: 0, first: None };
    for part in parts {
        if out.first.is_none() {
            if let Some(mut f) = part.first {
                f.index += out.vectors;
                out.first = Some(f);
            }
        }
        out.vectors += part.vectors;
        out.hits += part.hits;
        out.skipped += part.skipped;
    }
    out
}

/// Finds the first hit of weight `w`, searching only the longest prefix of
/// leading positions whose vectors fit in `budget`.
pub(crate) fn scan_first<V: Visitor>(v: &V, n: usize, p: u32, w: usize, budget: u64) -> FirstScan<V::Hit> {
    let mut covered = 0u128;
    let mut leads = 0;
    while leads < n {
        let c = leading_count(n, p, w, leads);
        if covered + c > budget as u128 {
            break;
        }
        covered += c;
        leads += 1;
    }
    let truncated = (leads..n).any(|l| leading_count(n, p, w, l) > 0);
    let hit = (0..leads)
        .into_par_iter()
        .map_init(|| v.init(), |state, lead| (lead, scan_leading(v, state, n, p, w, lead, true)))
        .find_first(|(_, part)| part.first.is_some());
    match hit {
        Some((lead, part)) => {
            let before: u128 = (0..lead).map(|l| leading_count(n, p, w, l)).sum();
            let mut found = part.first.unwrap();
            found.index += before as u64;
            FirstScan { vectors: found.index + 1, first: Some(found), truncated: false }
        }
        None => FirstScan { first: None, vectors: covered as u64, truncated },
    }
}

/// Runs `f` on a pool of `threads` workers, or on the global pool.
pub(crate) fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::Incompatible(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// The single-qudit Pauli with value `v = x·p + z`.
pub(crate) fn split_value(p: u32, v: u32) -> (u32, u32) {
    (v / p, v % p)
}

/// Builds the vector with the given support and values.
pub(crate) fn assemble(p: u32, n: usize, positions: &[usize], values: &[u32]) -> SymplecticVector {
    let mut out = SymplecticVector::zeros(p, n);
    for (&i, &v) in positions.iter().zip(values) {
        let (a, b) = split_value(p, v);
        out.set(i, a, b);
    }
    out
}

/// Products `⟨e, h_t⟩` of every single-qudit Pauli `e` with a list of
/// functionals `h_t`, for syndrome accumulation.
#[derive(Debug, Clone)]
pub(crate) struct SyndromeTable {
    p: u32,
    width: usize,
    per_pos: usize,
    /// Binary syndromes packed in one word, when they fit.
    bits: Option<Vec<u128>>,
    digits: Vec<u32>,
}

/// Accumulator for [`SyndromeTable`].
#[derive(Debug, Clone, Default)]
pub(crate) struct Syn {
    bits: u128,
    digits: Vec<u32>,
}

impl SyndromeTable {
    pub fn new(p: u32, n: usize, functionals: &[SymplecticVector]) -> Self {
        let width = functionals.len();
        let per_pos = (p * p - 1) as usize;
        let mut digits = vec![0u32; n * per_pos * width];
        for i in 0..n {
            for v in 1..=per_pos as u32 {
                let (a, b) = split_value(p, v);
                let base = (i * per_pos + v as usize - 1) * width;
                for (t, h) in functionals.iter().enumerate() {
                    let (hx, hz) = h.at(i);
                    digits[base + t] = (a * hz % p + p - b * hx % p) % p;
                }
            }
        }
        let bits = (p == 2 && width <= 128).then(|| {
            (0..n * per_pos)
                .map(|idx| {
                    let row = &digits[idx * width..(idx + 1) * width];
                    row.iter().enumerate().fold(0u128, |acc, (t, &d)| acc | ((d as u128) << t))
                })
                .collect()
        });
        SyndromeTable { p, width, per_pos, bits, digits }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn clear(&self, s: &mut Syn) {
        s.bits = 0;
        if self.bits.is_none() {
            s.digits.clear();
            s.digits.resize(self.width, 0);
        }
    }

    #[inline]
    pub fn add(&self, s: &mut Syn, pos: usize, value: u32) {
        let idx = pos * self.per_pos + value as usize - 1;
        if let Some(bits) = &self.bits {
            s.bits ^= bits[idx];
            return;
        }
        let row = &self.digits[idx * self.width..(idx + 1) * self.width];
        for (d, &c) in s.digits.iter_mut().zip(row) {
            *d = (*d + c) % self.p;
        }
    }

    /// Whether entries `range` are all zero.
    #[inline]
    pub fn is_zero(&self, s: &Syn, range: std::ops::Range<usize>) -> bool {
        if self.bits.is_some() {
            return range.is_empty() || (s.bits >> range.start) & mask(range.len()) == 0;
        }
        s.digits[range].iter().all(|&d| d == 0)
    }

    /// Entries `range` as a base-`p` integer, first entry least significant.
    #[inline]
    pub fn label(&self, s: &Syn, range: std::ops::Range<usize>) -> u32 {
        if self.bits.is_some() {
            if range.is_empty() {
                return 0;
            }
            return ((s.bits >> range.start) & mask(range.len())) as u32;
        }
        s.digits[range].iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }
}

#[inline]
fn mask(len: usize) -> u128 {
    if len >= 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}
