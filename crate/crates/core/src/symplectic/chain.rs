//! Nested stabilizer codes `B(0) ⊃ B(1) ⊃ … ⊃ B(r-1)` and the coset labels
//! they induce.
//!
//! Stabilizer generators are ordered so that the first `n - k_0` span `S_0`
//! and each following block extends `S_{i-1}` to `S_i`. The label of `v` at
//! level `i` is its syndrome against the level-`i` block of generators. The
//! coset representative of a unit label is a vector whose syndrome is that
//! unit against every generator, so representatives and labels are inverse
//! F_p-linear maps.

use super::{AdditiveSymplecticCode, StabilizerCode, SymplecticVector};
use crate::error::{Error, Result};
use crate::fp::{Echelon, FpVec};

#[derive(Debug, Clone, PartialEq)]
pub struct NestedStabilizerChain {
    codes: Vec<StabilizerCode>,
    generators: Vec<SymplecticVector>,
    /// `offsets[i]..offsets[i+1]` indexes the generators added at level `i`;
    /// `offsets[0] = 0` and the last entry is the total count.
    offsets: Vec<usize>,
    /// `extension[i-1][a]` is the representative of the unit label `a` at level `i`.
    extension: Vec<Vec<SymplecticVector>>,
}

impl NestedStabilizerChain {
    /// Builds the chain from codes ordered largest first.
    pub fn new(codes: Vec<StabilizerCode>) -> Result<Self> {
        let first = codes.first().ok_or_else(|| Error::InvalidCode("empty chain".into()))?;
        let (n, p) = (first.n(), first.p());
        for c in &codes {
            if c.n() != n || c.p() != p {
                return Err(Error::Incompatible(format!(
                    "chain mixes {} and {} on {} and {} qudits",
                    p,
                    c.p(),
                    n,
                    c.n()
                )));
            }
        }
        for (level, pair) in codes.windows(2).enumerate() {
            if let Some(g) = pair[0].generators().into_iter().find(|g| !pair[1].stabilizer().contains(g)) {
                return Err(Error::NotNested { level: level + 1, generator: format!("{g:?}") });
            }
            if pair[0].k() == pair[1].k() {
                return Err(Error::Incompatible(format!("level {} does not shrink the code", level + 1)));
            }
        }

        let mut span = Echelon::new(p, 2 * n, []);
        let mut generators = Vec::new();
        let mut offsets = vec![0];
        for c in &codes {
            for g in c.generators() {
                if span.insert(g.to_flat()) {
                    generators.push(g);
                }
            }
            offsets.push(generators.len());
        }
        let extension = Self::extension_vectors(p, n, &generators, &offsets);
        Ok(NestedStabilizerChain { codes, generators, offsets, extension })
    }

    /// Solves `⟨e, g_t⟩ = δ_{t,t0}` for every generator index `t0` past level 0.
    ///
    /// Row-reducing `[M | I]`, where row `t` of `M` is the functional
    /// `⟨·, g_t⟩`, gives `R = T M`; a solution of `M e = u` puts `(T u)` on
    /// the pivot columns of `R`.
    fn extension_vectors(p: u32, n: usize, gens: &[SymplecticVector], offsets: &[usize]) -> Vec<Vec<SymplecticVector>> {
        let s = gens.len();
        let rows: Vec<FpVec> =
            gens.iter().enumerate().map(|(t, g)| g.product_row().concat(&FpVec::unit(p, s, t))).collect();
        let reduced = Echelon::new(p, 2 * n + s, rows);
        debug_assert!(reduced.pivots().iter().all(|&c| c < 2 * n), "generators are independent");
        (1..offsets.len() - 1)
            .map(|level| {
                (offsets[level]..offsets[level + 1])
                    .map(|t0| {
                        let mut e = FpVec::zeros(p, 2 * n);
                        for (row, &pc) in reduced.rows().iter().zip(reduced.pivots()) {
                            e.set(pc, row.get(2 * n + t0));
                        }
                        SymplecticVector::from_flat(&e)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.codes[0].n()
    }

    pub fn p(&self) -> u32 {
        self.codes[0].p()
    }

    pub fn codes(&self) -> &[StabilizerCode] {
        &self.codes
    }

    /// Number of label levels, `r - 1`.
    pub fn levels(&self) -> usize {
        self.codes.len() - 1
    }

    /// F_p-dimension `b_i = k_{i-1} - k_i` of the level-`i` labels, `i = 1..r`.
    pub fn label_dims(&self) -> Vec<usize> {
        (1..self.codes.len()).map(|i| self.offsets[i + 1] - self.offsets[i]).collect()
    }

    /// Label alphabet sizes `p^{b_i}`.
    pub fn alphabet_sizes(&self) -> Vec<u64> {
        self.label_dims().iter().map(|&b| (self.p() as u64).pow(b as u32)).collect()
    }

    pub fn top(&self) -> &StabilizerCode {
        &self.codes[0]
    }

    pub fn bottom(&self) -> &StabilizerCode {
        self.codes.last().unwrap()
    }

    /// Generators of the smallest code's stabilizer, in nested order.
    pub fn nested_generators(&self) -> &[SymplecticVector] {
        &self.generators
    }

    pub(crate) fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn extension_basis(&self, level: usize) -> &[SymplecticVector] {
        &self.extension[level - 1]
    }

    /// Products of `v` with every nested generator.
    pub fn syndrome(&self, v: &SymplecticVector) -> FpVec {
        let mut s = FpVec::zeros(self.p(), self.generators.len());
        for (t, g) in self.generators.iter().enumerate() {
            s.set(t, v.product_unchecked(g));
        }
        s
    }

    /// Whether the level-0 part of a syndrome vanishes, i.e. `v ∈ N(S_0)`.
    pub(crate) fn syndrome_in_top(&self, s: &FpVec) -> bool {
        (0..self.offsets[1]).all(|t| s.get(t) == 0)
    }

    /// Integer label (base-p digits, first generator least significant) of
    /// level `level` read off a syndrome.
    pub(crate) fn syndrome_label(&self, s: &FpVec, level: usize) -> u32 {
        let p = self.p();
        (self.offsets[level]..self.offsets[level + 1]).rev().fold(0, |acc, t| acc * p + s.get(t))
    }

    /// Labels `(λ_1, …, λ_{r-1})` and whether `v ∈ N(S_0)`. Labels are only
    /// returned for vectors in `N(S_0)`.
    pub fn coset_label(&self, v: &SymplecticVector) -> Result<(Vec<u32>, bool)> {
        if v.n() != self.n() || v.p() != self.p() {
            return Err(Error::Dimension { expected: self.n(), got: v.n() });
        }
        let s = self.syndrome(v);
        if !self.syndrome_in_top(&s) {
            return Ok((Vec::new(), false));
        }
        Ok(((1..=self.levels()).map(|i| self.syndrome_label(&s, i)).collect(), true))
    }

    /// `Σ_i Σ_a λ_i[a] · E_i[a]`.
    pub fn coset_rep(&self, labels: &[u32]) -> Result<SymplecticVector> {
        if labels.len() != self.levels() {
            return Err(Error::Dimension { expected: self.levels(), got: labels.len() });
        }
        let p = self.p();
        let mut v = SymplecticVector::zeros(p, self.n());
        for (level, &label) in labels.iter().enumerate() {
            let basis = &self.extension[level];
            if (label as u64) >= (p as u64).pow(basis.len() as u32) {
                return Err(Error::Dimension { expected: basis.len(), got: label as usize });
            }
            let mut rest = label;
            for e in basis {
                v.add_scaled(e, rest % p);
                rest /= p;
            }
        }
        Ok(v)
    }

    /// The normalizer of the level-`i` code, `N(S_i)`.
    pub fn normalizer(&self, i: usize) -> &AdditiveSymplecticCode {
        self.codes[i].normalizer()
    }
}
