//! Generalized concatenation of a nested stabilizer chain with classical
//! outer codes.
//!
//! `N` blocks, block `j` carrying chain `B_j(0) ⊃ … ⊃ B_j(r-1)`. A vector
//! `v = (v_1, …, v_N)` belongs to the union normalizer code when every block
//! lies in `N(S_0)` and, for every level `i`, the column of level-`i` labels
//! `(λ_i(v_1), …, λ_i(v_N))` is a word of `A_i`. The last level is left
//! unconstrained: each block ranges over a whole coset of `N(S_{r-1})`.

mod export;

pub use export::{parse_generator_line, ExportFormat, StabilizerExport};

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::classical::{DistanceClaim, OuterCode, Provenance, SizeRecord, DEFAULT_BUDGET};
use crate::distance::{chain_level_distances, LevelDistance};
use crate::error::{Error, Result};
use crate::symplectic::{AdditiveSymplecticCode, NestedStabilizerChain, SymplecticVector};

/// Inputs of a generalized concatenation.
#[derive(Debug, Clone)]
pub struct GCSpec {
    pub p: u32,
    /// Chain used at each of the `N` positions.
    pub positions: Vec<Arc<NestedStabilizerChain>>,
    /// `A_1, …, A_{r-1}`.
    pub outer: Vec<OuterCode>,
    /// Optional bijection per level from chain labels to outer symbols.
    pub label_permutations: Vec<Option<Vec<u32>>>,
}

impl GCSpec {
    /// The same chain at every position, one outer code per level.
    pub fn uniform(chain: NestedStabilizerChain, outer: Vec<OuterCode>) -> Self {
        let n = outer.first().map_or(1, OuterCode::length);
        let chain = Arc::new(chain);
        GCSpec { p: chain.p(), positions: vec![chain; n], label_permutations: vec![None; outer.len()], outer }
    }

    /// One chain per position.
    pub fn mixed(positions: Vec<Arc<NestedStabilizerChain>>, outer: Vec<OuterCode>) -> Self {
        GCSpec {
            p: positions.first().map_or(2, |c| c.p()),
            label_permutations: vec![None; outer.len()],
            positions,
            outer,
        }
    }

    /// Installs a label permutation at `level` (1-based).
    pub fn with_label_permutation(mut self, level: usize, table: Vec<u32>) -> Self {
        if level >= 1 && level <= self.label_permutations.len() {
            self.label_permutations[level - 1] = Some(table);
        }
        self
    }
}

/// A label permutation and its inverse.
#[derive(Debug, Clone)]
pub(crate) struct LabelMap {
    forward: Vec<u32>,
    backward: Vec<u32>,
    linear: bool,
}

impl LabelMap {
    fn new(table: Vec<u32>, p: u32, level: usize) -> Result<Self> {
        let size = table.len();
        let mut backward = vec![u32::MAX; size];
        for (a, &b) in table.iter().enumerate() {
            if b as usize >= size || backward[b as usize] != u32::MAX {
                return Err(Error::Incompatible(format!("label table at level {level} is not a permutation")));
            }
            backward[b as usize] = a as u32;
        }
        let add = |a: u32, b: u32| crate::classical::label_add(a, b, p);
        let linear = (0..size as u32)
            .all(|a| (0..size as u32).all(|b| table[add(a, b) as usize] == add(table[a as usize], table[b as usize])));
        Ok(LabelMap { forward: table, backward, linear })
    }

    pub(crate) fn forward(&self, label: u32) -> u32 {
        self.forward[label as usize]
    }

    pub(crate) fn backward(&self, symbol: u32) -> u32 {
        self.backward[symbol as usize]
    }

    pub(crate) fn is_linear(&self) -> bool {
        self.linear
    }
}

/// Whether a code is additive, and why not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Additivity {
    pub additive: bool,
    pub reason: String,
}

/// One `δ_i · d_i` term of the distance bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelTerm {
    pub level: usize,
    pub outer_distance: Option<DistanceClaim>,
    /// `min_j d_i^{(j)}` over positions.
    pub inner_distance: Option<u32>,
    pub inner_proved: bool,
    pub product: Option<u32>,
}

/// `d ≥ min{δ_1 d_1, …, δ_{r-1} d_{r-1}, d_r}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceBound {
    pub value: Option<u32>,
    /// Every component distance was verified.
    pub verified: bool,
    pub levels: Vec<LevelTerm>,
    pub last_level: Option<u32>,
    pub last_level_proved: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GCParameters {
    pub n: usize,
    pub blocks: usize,
    pub p: u32,
    pub log2_dimension: f64,
    pub dimension_provenance: Provenance,
    /// `log_p` of the dimension when it is an exact power of `p`.
    pub k: Option<u64>,
    pub outer_sizes: Vec<SizeRecord>,
    /// `Σ_j k_{r-1}^{(j)}`: free logical qudits of the bottom codes.
    pub bottom_logical: u64,
    pub bound: DistanceBound,
}

/// A distinct chain and everything derived from it.
#[derive(Debug)]
pub(crate) struct ChainInfo {
    pub chain: Arc<NestedStabilizerChain>,
    pub distances: Vec<LevelDistance>,
}

/// A built GC code. Immutable; exports are computed once on demand.
#[derive(Debug)]
pub struct GCCode {
    spec: GCSpec,
    pub(crate) chains: Vec<ChainInfo>,
    /// Index into `chains` for each block.
    pub(crate) chain_of: Vec<usize>,
    /// First qudit of each block.
    pub(crate) block_start: Vec<usize>,
    pub(crate) label_maps: Vec<Option<LabelMap>>,
    label_dims: Vec<usize>,
    n_tot: usize,
    params: GCParameters,
    additivity: Additivity,
    closure: OnceLock<Option<AdditiveSymplecticCode>>,
    export: OnceLock<std::result::Result<StabilizerExport, Error>>,
}

impl GCCode {
    /// Validates the spec and computes parameters; no cosets are enumerated.
    pub fn build(spec: GCSpec) -> Result<Self> {
        Self::build_with_budget(spec, DEFAULT_BUDGET)
    }

    /// As [`build`](Self::build), with the enumeration budget used for the
    /// inner distances.
    pub fn build_with_budget(spec: GCSpec, budget: u64) -> Result<Self> {
        let big_n = spec.positions.len();
        if big_n == 0 {
            return Err(Error::InvalidCode("no positions".into()));
        }
        let p = spec.p;
        let mut chains: Vec<ChainInfo> = Vec::new();
        let mut chain_of = Vec::with_capacity(big_n);
        for c in &spec.positions {
            if c.p() != p {
                return Err(Error::Incompatible(format!("chain over F_{} in a spec over F_{p}", c.p())));
            }
            let idx = match chains.iter().position(|ci| Arc::ptr_eq(&ci.chain, c) || *ci.chain == **c) {
                Some(i) => i,
                None => {
                    chains.push(ChainInfo { chain: Arc::clone(c), distances: chain_level_distances(c, budget) });
                    chains.len() - 1
                }
            };
            chain_of.push(idx);
        }
        let label_dims = chains[0].chain.label_dims();
        for ci in &chains[1..] {
            if ci.chain.label_dims() != label_dims {
                return Err(Error::Incompatible(format!(
                    "mixed chains with label dimensions {:?} and {:?}",
                    label_dims,
                    ci.chain.label_dims()
                )));
            }
        }
        if spec.outer.len() != label_dims.len() {
            return Err(Error::Incompatible(format!(
                "chain has {} label levels but {} outer codes were given",
                label_dims.len(),
                spec.outer.len()
            )));
        }
        for (i, (a, &b)) in spec.outer.iter().zip(&label_dims).enumerate() {
            let expected = (p as u64).pow(b as u32);
            if a.alphabet_size() != expected {
                return Err(Error::AlphabetMismatch { level: i + 1, expected, provided: a.alphabet_size() });
            }
            if a.length() != big_n {
                return Err(Error::Incompatible(format!(
                    "outer code A{} has length {}, expected {big_n}",
                    i + 1,
                    a.length()
                )));
            }
            if let OuterCode::Linear(c) = a {
                if c.field().characteristic() != p {
                    return Err(Error::Incompatible(format!(
                        "outer code A{} is over characteristic {}, labels are over F_{p}",
                        i + 1,
                        c.field().characteristic()
                    )));
                }
            }
        }
        if spec.label_permutations.len() > label_dims.len() {
            return Err(Error::Incompatible("more label permutations than levels".into()));
        }
        let mut label_maps = vec![None; label_dims.len()];
        for (i, table) in spec.label_permutations.iter().enumerate() {
            if let Some(t) = table {
                let expected = (p as u64).pow(label_dims[i] as u32);
                if t.len() as u64 != expected {
                    return Err(Error::AlphabetMismatch { level: i + 1, expected, provided: t.len() as u64 });
                }
                label_maps[i] = Some(LabelMap::new(t.clone(), p, i + 1)?);
            }
        }
        let mut block_start = Vec::with_capacity(big_n);
        let mut n_tot = 0;
        for &c in &chain_of {
            block_start.push(n_tot);
            n_tot += chains[c].chain.n();
        }

        let additivity = Self::additivity(&spec.outer, &label_maps);
        let params = Self::compute_parameters(&spec, &chains, &chain_of, n_tot);
        Ok(GCCode {
            spec,
            chains,
            chain_of,
            block_start,
            label_maps,
            label_dims,
            n_tot,
            params,
            additivity,
            closure: OnceLock::new(),
            export: OnceLock::new(),
        })
    }

    fn additivity(outer: &[OuterCode], maps: &[Option<LabelMap>]) -> Additivity {
        for (i, a) in outer.iter().enumerate() {
            if !a.is_linear() {
                return Additivity { additive: false, reason: format!("A{} nonlinear", i + 1) };
            }
            if maps[i].as_ref().is_some_and(|m| !m.is_linear()) {
                return Additivity { additive: false, reason: format!("label map at level {} nonlinear", i + 1) };
            }
        }
        Additivity { additive: true, reason: "all outer codes and label maps are linear".into() }
    }

    fn compute_parameters(spec: &GCSpec, chains: &[ChainInfo], chain_of: &[usize], n_tot: usize) -> GCParameters {
        let p = spec.p;
        let bottom_logical: u64 = chain_of.iter().map(|&c| chains[c].chain.bottom().k() as u64).sum();
        let outer_sizes: Vec<SizeRecord> = spec.outer.iter().map(OuterCode::size).collect();
        let log2_dimension =
            outer_sizes.iter().map(SizeRecord::log2).sum::<f64>() + bottom_logical as f64 * (p as f64).log2();
        let dimension_provenance =
            outer_sizes.iter().map(SizeRecord::provenance).fold(Provenance::Exact, |acc, x| match (acc, x) {
                (Provenance::Estimate, _) | (_, Provenance::Estimate) => Provenance::Estimate,
                (Provenance::Bound, _) | (_, Provenance::Bound) => Provenance::Bound,
                _ => Provenance::Exact,
            });
        let k = outer_sizes
            .iter()
            .map(|s| match *s {
                SizeRecord::Power { base, exp } => log_exact(base, p).map(|m| m * exp),
                SizeRecord::Count { count } => log_exact(count, p),
                _ => None,
            })
            .sum::<Option<u64>>()
            .map(|k| k + bottom_logical);

        let used: Vec<usize> = {
            let mut u = chain_of.to_vec();
            u.sort_unstable();
            u.dedup();
            u
        };
        let levels = spec.outer.len();
        let mut terms = Vec::with_capacity(levels);
        for (i, a) in spec.outer.iter().enumerate() {
            let inner: Vec<&LevelDistance> = used.iter().map(|&c| &chains[c].distances[i]).collect();
            let inner_distance =
                inner.iter().map(|d| d.value()).collect::<Option<Vec<u32>>>().and_then(|v| v.into_iter().min());
            let outer_distance = a.distance();
            let product = inner_distance.zip(outer_distance).map(|(d, delta)| d * delta.value);
            terms.push(LevelTerm {
                level: i + 1,
                outer_distance,
                inner_distance,
                inner_proved: inner.iter().all(|d| d.is_proved()),
                product,
            });
        }
        let last: Vec<&LevelDistance> = used.iter().map(|&c| &chains[c].distances[levels]).collect();
        let last_level = last.iter().map(|d| d.value()).collect::<Option<Vec<u32>>>().and_then(|v| v.into_iter().min());
        let last_level_proved = last.iter().all(|d| d.is_proved());
        let value = terms
            .iter()
            .map(|t| t.product)
            .chain(std::iter::once(last_level))
            .collect::<Option<Vec<u32>>>()
            .and_then(|v| v.into_iter().min());
        let verified = last_level_proved
            && terms.iter().all(|t| t.inner_proved && t.outer_distance.is_some_and(|d| d.is_verified()));
        GCParameters {
            n: n_tot,
            blocks: chain_of.len(),
            p,
            log2_dimension,
            dimension_provenance,
            k,
            outer_sizes,
            bottom_logical,
            bound: DistanceBound { value, verified, levels: terms, last_level, last_level_proved },
        }
    }

    pub fn spec(&self) -> &GCSpec {
        &self.spec
    }

    pub fn p(&self) -> u32 {
        self.spec.p
    }

    pub fn n(&self) -> usize {
        self.n_tot
    }

    pub fn blocks(&self) -> usize {
        self.chain_of.len()
    }

    pub fn levels(&self) -> usize {
        self.label_dims.len()
    }

    pub fn label_dims(&self) -> &[usize] {
        &self.label_dims
    }

    pub fn outer(&self) -> &[OuterCode] {
        &self.spec.outer
    }

    pub fn chain(&self, block: usize) -> &NestedStabilizerChain {
        &self.chains[self.chain_of[block]].chain
    }

    /// Per-level distances of the chain at `block`.
    pub fn level_distances(&self, block: usize) -> &[LevelDistance] {
        &self.chains[self.chain_of[block]].distances
    }

    pub fn block_range(&self, block: usize) -> std::ops::Range<usize> {
        let start = self.block_start[block];
        start..start + self.chain(block).n()
    }

    pub fn parameters(&self) -> &GCParameters {
        &self.params
    }

    pub fn is_additive(&self) -> &Additivity {
        &self.additivity
    }

    /// Label-map linearity at every level.
    pub fn label_maps_linear(&self) -> bool {
        self.label_maps.iter().all(|m| m.as_ref().is_none_or(LabelMap::is_linear))
    }

    pub(crate) fn to_symbol(&self, level: usize, label: u32) -> u32 {
        self.label_maps[level].as_ref().map_or(label, |m| m.forward(label))
    }

    pub(crate) fn to_label(&self, level: usize, symbol: u32) -> u32 {
        self.label_maps[level].as_ref().map_or(symbol, |m| m.backward(symbol))
    }

    /// Outer symbol arrays `[level][block]` of `v`, or `None` when some block
    /// is outside `N(S_0)`.
    pub fn symbol_arrays(&self, v: &SymplecticVector) -> Result<Option<Vec<Vec<u32>>>> {
        if v.n() != self.n_tot || v.p() != self.p() {
            return Err(Error::Dimension { expected: self.n_tot, got: v.n() });
        }
        let mut out = vec![vec![0u32; self.blocks()]; self.levels()];
        for j in 0..self.blocks() {
            let range = self.block_range(j);
            let (labels, top) = self.chain(j).coset_label(&v.block(range.start, range.len()))?;
            if !top {
                return Ok(None);
            }
            for (i, l) in labels.into_iter().enumerate() {
                out[i][j] = self.to_symbol(i, l);
            }
        }
        Ok(Some(out))
    }

    /// Membership in the union normalizer code.
    pub fn contains(&self, v: &SymplecticVector) -> Result<bool> {
        let Some(arrays) = self.symbol_arrays(v)? else {
            return Ok(false);
        };
        for (a, word) in self.spec.outer.iter().zip(&arrays) {
            if !a.contains(word)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Blockwise coset representative of an array of outer symbols
    /// `[level][block]`.
    pub fn coset_rep(&self, symbols: &[Vec<u32>]) -> Result<SymplecticVector> {
        if symbols.len() != self.levels() {
            return Err(Error::Dimension { expected: self.levels(), got: symbols.len() });
        }
        let mut v = SymplecticVector::zeros(self.p(), self.n_tot);
        let mut labels = vec![0u32; self.levels()];
        for j in 0..self.blocks() {
            for (i, word) in symbols.iter().enumerate() {
                if word.len() != self.blocks() {
                    return Err(Error::Dimension { expected: self.blocks(), got: word.len() });
                }
                labels[i] = self.to_label(i, word[j]);
            }
            let rep = self.chain(j).coset_rep(&labels)?;
            v.add_assign(&rep.embed(self.n_tot, self.block_start[j]));
        }
        Ok(v)
    }

    /// Basis of `N(S_{r-1})` in every block, embedded.
    pub fn residual_basis(&self) -> Vec<SymplecticVector> {
        let mut out = Vec::new();
        for j in 0..self.blocks() {
            let chain = self.chain(j);
            for b in chain.normalizer(chain.levels()).basis() {
                out.push(b.embed(self.n_tot, self.block_start[j]));
            }
        }
        out
    }

    /// One representative per coset of `N(S_{r-1})^N`, i.e. per array of
    /// outer codewords.
    pub fn enumerate_cosets(&self, budget: u64) -> Result<impl Iterator<Item = SymplecticVector> + '_> {
        let log2: f64 = self.params.outer_sizes.iter().map(SizeRecord::log2).sum();
        if log2 > (budget as f64).log2() + 1e-9 {
            return Err(Error::BudgetExceeded {
                what: "coset enumeration".into(),
                needed: log2.exp2(),
                budget: budget as f64,
            });
        }
        let members: Vec<Vec<Vec<u32>>> = self.spec.outer.iter().map(|a| a.members(budget)).collect::<Result<_>>()?;
        let mut index = vec![0usize; members.len()];
        let mut done = members.iter().any(Vec::is_empty);
        Ok(std::iter::from_fn(move || {
            if done {
                return None;
            }
            let arrays: Vec<Vec<u32>> = index.iter().zip(&members).map(|(&i, m)| m[i].clone()).collect();
            done = true;
            for (i, m) in index.iter_mut().zip(&members) {
                *i += 1;
                if *i < m.len() {
                    done = false;
                    break;
                }
                *i = 0;
            }
            Some(self.coset_rep(&arrays).expect("member arrays have valid shape"))
        }))
    }

    /// Span of the union normalizer code, when every outer code is linear or
    /// enumerated within `DEFAULT_BUDGET` members.
    pub fn additive_closure(&self) -> Option<&AdditiveSymplecticCode> {
        self.closure
            .get_or_init(|| {
                let mut gens = self.residual_basis();
                for level in 0..self.levels() {
                    for word in self.outer_span_words(level)? {
                        let mut symbols = vec![vec![0u32; self.blocks()]; self.levels()];
                        symbols[level] = word;
                        gens.push(self.coset_rep(&symbols).ok()?);
                    }
                }
                AdditiveSymplecticCode::new(self.p(), self.n_tot, &gens).ok()
            })
            .as_ref()
    }

    /// Words whose coset representatives span level `level` of the code.
    fn outer_span_words(&self, level: usize) -> Option<Vec<Vec<u32>>> {
        match &self.spec.outer[level] {
            OuterCode::Linear(c) if self.label_maps[level].as_ref().is_none_or(LabelMap::is_linear) => {
                let f = c.field();
                let mut out = Vec::new();
                for row in c.generator() {
                    for t in 0..f.degree() {
                        let alpha = f.characteristic().pow(t);
                        out.push(row.iter().map(|&x| f.mul(alpha, x)).collect());
                    }
                }
                Some(out)
            }
            other => other.members(DEFAULT_BUDGET).ok(),
        }
    }

    /// Whether `v` lies in the symplectic dual of the additive closure; such
    /// differences act trivially on the code space. `None` if the closure is
    /// unavailable.
    pub fn in_closure_dual(&self, v: &SymplecticVector) -> Option<bool> {
        self.additive_closure().map(|c| c.dual_contains(v))
    }
}

fn log_exact(mut x: u64, p: u32) -> Option<u64> {
    let mut k = 0;
    while x > 1 && x.is_multiple_of(p as u64) {
        x /= p as u64;
        k += 1;
    }
    (x == 1).then_some(k)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::classical::LinearCode;
    use crate::galois::FiniteField;
    use crate::symplectic::StabilizerCode;

    /// `[[2,2,1]] ⊃ [[2,0,2]]` twice with `A_1 = [2,1,2]_4`.
    pub(crate) fn tiny() -> GCCode {
        let bell = StabilizerCode::from_paulis(&["XX", "ZZ"]).unwrap();
        let chain = NestedStabilizerChain::new(vec![StabilizerCode::full(2, 2), bell]).unwrap();
        let f = Arc::new(FiniteField::with_order(4).unwrap());
        let mut a = LinearCode::new(f, vec![vec![1, 1]]).unwrap();
        a.verify_claim(2, 1 << 20);
        GCCode::build(GCSpec::uniform(chain, vec![OuterCode::Linear(a)])).unwrap()
    }

    fn all_vectors(p: u32, n: usize) -> impl Iterator<Item = SymplecticVector> {
        let total = (p as u64).pow(2 * n as u32);
        (0..total).map(move |mut x| {
            let mut digits = vec![0u32; 2 * n];
            for d in &mut digits {
                *d = (x % p as u64) as u32;
                x /= p as u64;
            }
            SymplecticVector::from_digits(p, &digits[..n], &digits[n..]).unwrap()
        })
    }

    #[test]
    fn tiny_membership_matches_enumeration() {
        let code = tiny();
        let reps: Vec<_> = code.enumerate_cosets(100).unwrap().collect();
        assert_eq!(reps.len(), 4);
        let base = AdditiveSymplecticCode::new(2, 4, &code.residual_basis()).unwrap();
        let mut members = 0;
        for v in all_vectors(2, 4) {
            let expected = reps.iter().any(|t| base.contains(&v.sub(t)));
            assert_eq!(code.contains(&v).unwrap(), expected);
            members += expected as usize;
        }
        assert_eq!(members, 4 * 16);
    }

    #[test]
    fn tiny_parameters() {
        let code = tiny();
        let params = code.parameters();
        assert_eq!((params.n, params.k), (4, Some(2)));
        assert_eq!(params.bound.value, Some(2));
        assert!(params.bound.verified);
        assert!(code.is_additive().additive);
    }

    #[test]
    fn alphabet_mismatch_is_reported() {
        let bell = StabilizerCode::from_paulis(&["XX", "ZZ"]).unwrap();
        let chain = NestedStabilizerChain::new(vec![StabilizerCode::full(2, 2), bell]).unwrap();
        let f = Arc::new(FiniteField::with_order(8).unwrap());
        let a = LinearCode::new(f, vec![vec![1, 1]]).unwrap();
        let err = GCCode::build(GCSpec::uniform(chain, vec![OuterCode::Linear(a)])).unwrap_err();
        assert_eq!(err, Error::AlphabetMismatch { level: 1, expected: 4, provided: 8 });
    }

    #[test]
    fn membership_rejects_a_flipped_label() {
        let code = tiny();
        let v = code.coset_rep(&[vec![2, 2]]).unwrap();
        assert!(code.contains(&v).unwrap());
        let w = code.coset_rep(&[vec![2, 3]]).unwrap();
        assert!(!code.contains(&w).unwrap());
        assert!(code.contains(&SymplecticVector::zeros(2, 4)).unwrap());
    }

    #[test]
    fn nonlinear_label_map_breaks_additivity() {
        let bell = StabilizerCode::from_paulis(&["XX", "ZZ"]).unwrap();
        let chain = NestedStabilizerChain::new(vec![StabilizerCode::full(2, 2), bell]).unwrap();
        let f = Arc::new(FiniteField::with_order(4).unwrap());
        let a = LinearCode::new(f, vec![vec![1, 1]]).unwrap();
        let spec = GCSpec::uniform(chain, vec![OuterCode::Linear(a)]).with_label_permutation(1, vec![0, 2, 1, 3]);
        let code = GCCode::build(spec.clone()).unwrap();
        assert!(code.is_additive().additive, "swapping two basis labels is linear");
        let code = GCCode::build(spec.with_label_permutation(1, vec![1, 0, 2, 3])).unwrap();
        assert_eq!(code.is_additive().reason, "label map at level 1 nonlinear");
    }

    #[test]
    fn single_level_spec_is_additive() {
        let chain = NestedStabilizerChain::new(vec![StabilizerCode::full(2, 3)]).unwrap();
        let spec = GCSpec { p: 2, positions: vec![Arc::new(chain); 2], outer: vec![], label_permutations: vec![] };
        let code = GCCode::build(spec).unwrap();
        assert!(code.is_additive().additive);
        assert_eq!(code.parameters().k, Some(6));
        assert_eq!(code.enumerate_cosets(1).unwrap().count(), 1);
    }
}
