use std::collections::HashSet;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linear::increment;
use super::{label_add, DifferenceReason, DifferenceVerdict, DistanceClaim, LinearCode, SizeRecord};
use crate::error::{Error, Result};
use crate::galois::{matrix, Elem};

/// How to pick the coset of the parent code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubAlphabetStrategy {
    /// Count sub-alphabet words in every coset and keep a largest one.
    BestCoset { budget: u64 },
    /// Use the parent code itself; only the pigeonhole bound is recorded.
    ZeroShift,
    /// Use the parent code itself and estimate its sub-alphabet size.
    MonteCarlo { seed: u64, samples: u64 },
}

/// Words of a coset `x + C` of a linear code over GF(q) whose symbols all lie
/// in an `s`-element subset of the field.
///
/// Any two members differ by a codeword of `C`, so the code inherits the
/// parent's distance.
#[derive(Debug, Clone)]
pub struct SubAlphabetCode {
    parent: LinearCode,
    shift: Vec<Elem>,
    target: Vec<Elem>,
    injection: Vec<Elem>,
    label_of: Vec<Option<u32>>,
    size: SizeRecord,
    members: Option<Vec<Vec<u32>>>,
    member_set: Option<HashSet<Vec<u32>>>,
}

const Z95: f64 = 1.959963984540054;

impl SubAlphabetCode {
    /// Restricts `parent` to the symbols `0..s`.
    pub fn new(parent: LinearCode, s: u32, strategy: SubAlphabetStrategy) -> Result<Self> {
        Self::with_injection(parent, (0..s).collect(), strategy)
    }

    /// Restricts `parent` to the field elements `injection[0..s]`; label `i`
    /// stands for `injection[i]`.
    pub fn with_injection(parent: LinearCode, injection: Vec<Elem>, strategy: SubAlphabetStrategy) -> Result<Self> {
        let q = parent.field().order();
        let s = injection.len() as u32;
        if s == 0 || s >= q {
            return Err(Error::InvalidCode(format!("sub-alphabet size {s} must satisfy 0 < s < {q}")));
        }
        let mut label_of = vec![None; q as usize];
        for (label, &e) in injection.iter().enumerate() {
            parent.field().check(e)?;
            if label_of[e as usize].replace(label as u32).is_some() {
                return Err(Error::InvalidCode(format!("symbol {e} injected twice")));
            }
        }
        let n = parent.length();
        let mut code = SubAlphabetCode {
            target: vec![0; parent.parity_check().len()],
            shift: vec![0; n],
            parent,
            injection,
            label_of,
            size: SizeRecord::Count { count: 0 },
            members: None,
            member_set: None,
        };
        match strategy {
            SubAlphabetStrategy::ZeroShift => code.size = code.pigeonhole(),
            SubAlphabetStrategy::MonteCarlo { seed, samples } => code.size = code.estimate_size(seed, samples)?,
            SubAlphabetStrategy::BestCoset { budget } => code.pick_best_coset(budget)?,
        }
        Ok(code)
    }

    pub fn parent(&self) -> &LinearCode {
        &self.parent
    }

    pub fn length(&self) -> usize {
        self.parent.length()
    }

    pub fn alphabet_size(&self) -> u32 {
        self.injection.len() as u32
    }

    pub fn shift(&self) -> &[Elem] {
        &self.shift
    }

    pub fn injection(&self) -> &[Elem] {
        &self.injection
    }

    pub fn size(&self) -> &SizeRecord {
        &self.size
    }

    pub fn distance(&self) -> Option<DistanceClaim> {
        self.parent.distance()
    }

    pub fn is_enumerated(&self) -> bool {
        self.members.is_some()
    }

    /// `⌈q^k (s/q)^N⌉ = ⌈s^N / q^(N-k)⌉`.
    pub fn pigeonhole(&self) -> SizeRecord {
        let value = self.pigeonhole_value();
        SizeRecord::PigeonholeBound { log2: biguint_log2(&value), value: value.to_string() }
    }

    fn pigeonhole_value(&self) -> BigUint {
        let n = self.length() as u32;
        let r = (self.length() - self.parent.dimension()) as u32;
        let num = BigUint::from(self.alphabet_size()).pow(n);
        let den = BigUint::from(self.parent.field().order()).pow(r);
        (&num + &den - 1u32) / &den
    }

    fn symbols(&self, labels: &[u32]) -> Option<Vec<Elem>> {
        labels.iter().map(|&l| self.injection.get(l as usize).copied()).collect()
    }

    pub fn contains(&self, word: &[u32]) -> Result<bool> {
        if word.len() != self.length() {
            return Err(Error::Dimension { expected: self.length(), got: word.len() });
        }
        Ok(self.contains_unchecked(word))
    }

    fn contains_unchecked(&self, word: &[u32]) -> bool {
        if let Some(set) = &self.member_set {
            return set.contains(word);
        }
        match self.symbols(word) {
            Some(sym) => self.parent.syndrome(&sym) == self.target,
            None => false,
        }
    }

    fn pick_best_coset(&mut self, budget: u64) -> Result<()> {
        let n = self.length();
        let q = self.parent.field().order() as u64;
        let r = self.parent.parity_check().len();
        let words = (self.alphabet_size() as f64).powi(n as i32);
        let cosets = (q as f64).powi(r as i32);
        for (what, needed) in [("sub-alphabet words", words), ("cosets", cosets)] {
            if needed > budget as f64 {
                return Err(Error::BudgetExceeded { what: what.into(), needed, budget: budget as f64 });
            }
        }
        let index = |syn: &[Elem]| syn.iter().rev().fold(0u64, |acc, &x| acc * q + x as u64);
        let mut counts = vec![0u64; cosets as usize];
        let mut labels = vec![0u32; n];
        loop {
            let sym = self.symbols(&labels).expect("labels below s");
            counts[index(&self.parent.syndrome(&sym)) as usize] += 1;
            if !increment(&mut labels, self.alphabet_size()) {
                break;
            }
        }
        let (best, &count) =
            counts.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0))).expect("at least one coset");
        let mut target = Vec::with_capacity(r);
        let mut rest = best as u64;
        for _ in 0..r {
            target.push((rest % q) as Elem);
            rest /= q;
        }
        self.shift = matrix::solve(self.parent.field(), self.parent.parity_check(), &target, n)
            .expect("parity-check rows are independent");
        self.target = target;

        let mut members = Vec::with_capacity(count as usize);
        let mut labels = vec![0u32; n];
        loop {
            let sym = self.symbols(&labels).expect("labels below s");
            if self.parent.syndrome(&sym) == self.target {
                members.push(labels.clone());
            }
            if !increment(&mut labels, self.alphabet_size()) {
                break;
            }
        }
        self.size = SizeRecord::Count { count };
        let bound = self.pigeonhole_value();
        if BigUint::from(count) < bound {
            return Err(Error::Verification(format!(
                "best coset holds {count} words, below the pigeonhole bound {bound}"
            )));
        }
        self.member_set = Some(members.iter().cloned().collect());
        self.members = Some(members);
        Ok(())
    }

    /// Estimates the size of the instantiated coset by sampling its words
    /// uniformly and counting those inside the sub-alphabet.
    pub fn estimate_size(&self, seed: u64, samples: u64) -> Result<SizeRecord> {
        if samples == 0 {
            return Err(Error::InvalidCode("Monte Carlo needs at least one sample".into()));
        }
        let f = self.parent.field();
        let q = f.order();
        let g = self.parent.generator();
        let k = g.len();
        let n = self.length();
        // Generator rows are reduced, so codeword symbols at pivot columns
        // are the message symbols themselves.
        let pivots: Vec<usize> = g.iter().map(|row| row.iter().position(|&x| x != 0).unwrap()).collect();
        let others: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut message = vec![0; k];
        let mut hits = 0u64;
        for _ in 0..samples {
            for m in message.iter_mut() {
                *m = rng.gen_range(0..q);
            }
            let pivots_ok =
                pivots.iter().zip(&message).all(|(&c, &m)| self.label_of[f.add(self.shift[c], m) as usize].is_some());
            if !pivots_ok {
                continue;
            }
            let rest_ok = others.iter().all(|&c| {
                let v = message.iter().zip(g).fold(self.shift[c], |acc, (&m, row)| f.add(acc, f.mul(m, row[c])));
                self.label_of[v as usize].is_some()
            });
            if rest_ok {
                hits += 1;
            }
        }
        let total = k as f64 * (q as f64).log2();
        let nf = samples as f64;
        let phat = hits as f64 / nf;
        let z2 = Z95 * Z95;
        let center = (phat + z2 / (2.0 * nf)) / (1.0 + z2 / nf);
        let half = Z95 * (phat * (1.0 - phat) / nf + z2 / (4.0 * nf * nf)).sqrt() / (1.0 + z2 / nf);
        Ok(SizeRecord::Estimate {
            log2: total + phat.log2(),
            ci_low: total + (center - half).max(0.0).log2(),
            ci_high: total + (center + half).min(1.0).log2(),
            samples,
            hits,
            seed,
        })
    }

    pub fn members(&self, budget: u64) -> Result<Vec<Vec<u32>>> {
        if let Some(m) = &self.members {
            return Ok(m.clone());
        }
        let needed = (self.alphabet_size() as f64).powi(self.length() as i32);
        if needed > budget as f64 {
            return Err(Error::BudgetExceeded { what: "sub-alphabet words".into(), needed, budget: budget as f64 });
        }
        let mut out = Vec::new();
        let mut labels = vec![0u32; self.length()];
        loop {
            if self.contains_unchecked(&labels) {
                out.push(labels.clone());
            }
            if !increment(&mut labels, self.alphabet_size()) {
                break;
            }
        }
        Ok(out)
    }

    pub(crate) fn difference_contains_sparse(&self, entries: &[(usize, u32)], p: u32) -> Result<DifferenceVerdict> {
        if !is_power_of(self.alphabet_size(), p) {
            return Err(Error::Incompatible(format!(
                "alphabet of size {} has no F_{p}-vector labels",
                self.alphabet_size()
            )));
        }
        let Some(members) = &self.members else {
            if let Some(d) = self.distance().filter(DistanceClaim::is_verified) {
                if entries.len() < d.value as usize {
                    return Ok(DifferenceVerdict { member: false, reason: DifferenceReason::DistanceShortcut });
                }
            }
            return Err(Error::Undecidable(format!(
                "difference with support {} on a non-enumerated sub-alphabet code",
                entries.len()
            )));
        };
        let mut shifted = vec![0u32; self.length()];
        let member = members.iter().any(|a| {
            shifted.copy_from_slice(a);
            for &(j, l) in entries {
                shifted[j] = label_add(shifted[j], l, p);
            }
            self.contains_unchecked(&shifted)
        });
        Ok(DifferenceVerdict { member, reason: DifferenceReason::Exhaustive })
    }
}

fn is_power_of(mut s: u32, p: u32) -> bool {
    while s > 1 && s.is_multiple_of(p) {
        s /= p;
    }
    s == 1
}

pub(crate) fn biguint_log2(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 60 {
        let v = x.to_u64_digits().first().copied().unwrap_or(0);
        return (v as f64).log2();
    }
    let shift = bits - 60;
    let top = (x >> shift).to_u64_digits()[0];
    (top as f64).log2() + shift as f64
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::classical::{OuterCode, DEFAULT_BUDGET};
    use crate::galois::FiniteField;

    fn mds(q: u64, n: usize, k: usize) -> LinearCode {
        LinearCode::mds(Arc::new(FiniteField::with_order(q).unwrap()), n, k).unwrap()
    }

    fn best(parent: LinearCode, s: u32) -> SubAlphabetCode {
        SubAlphabetCode::new(parent, s, SubAlphabetStrategy::BestCoset { budget: DEFAULT_BUDGET }).unwrap()
    }

    #[test]
    fn example_four_outer_code_has_164_words() {
        let c = best(mds(5, 6, 4), 4);
        assert_eq!(c.size(), &SizeRecord::Count { count: 164 });
        assert_eq!(c.distance().unwrap().value, 3);
        assert_eq!(c.members(0).unwrap().len(), 164);
    }

    #[test]
    fn repetition_over_gf3_restricted_to_two_symbols() {
        let parent = LinearCode::new(Arc::new(FiniteField::new(3, 1).unwrap()), vec![vec![1, 1]]).unwrap();
        let c = best(parent, 2);
        assert_eq!(c.size(), &SizeRecord::Count { count: 2 });
        let mut members = c.members(0).unwrap();
        members.sort();
        assert_eq!(members, vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn pigeonhole_for_example_three() {
        let c = SubAlphabetCode::new(mds(17, 18, 16), 16, SubAlphabetStrategy::ZeroShift).unwrap();
        let SizeRecord::PigeonholeBound { log2, value } = c.size() else { panic!() };
        assert!((log2 - (72.0 - 2.0 * 17f64.log2())).abs() < 1e-9);
        assert!((log2 - 63.825).abs() < 5e-4);
        // 2^72 / 289 rounded up.
        let expected = (BigUint::from(1u32) << 72u32) / 289u32 + 1u32;
        assert_eq!(value, &expected.to_string());
    }

    #[test]
    fn membership_against_exhaustive_list() {
        let c = best(mds(5, 6, 4), 4);
        for m in c.members(0).unwrap() {
            assert!(c.contains(&m).unwrap());
        }
        let mut w = c.members(0).unwrap()[0].clone();
        w[0] = 4;
        assert!(!c.contains(&w).unwrap());
        assert!(c.contains(&[0; 5]).is_err());
    }

    #[test]
    fn difference_shortcut_matches_exhaustive_scan() {
        let c = best(mds(5, 6, 4), 4);
        let members = c.members(0).unwrap();
        let outer = OuterCode::SubAlphabet(c.clone());
        let zero = SubAlphabetCode::new(mds(5, 6, 4), 4, SubAlphabetStrategy::ZeroShift).unwrap();
        for a in 0..6 {
            for b in a + 1..6 {
                for (x, y) in [(1, 1), (2, 3), (3, 2)] {
                    let mut lambda = vec![0; 6];
                    lambda[a] = x;
                    lambda[b] = y;
                    let v = outer.difference_contains(&lambda, 2).unwrap();
                    assert_eq!(v.reason, DifferenceReason::Exhaustive);
                    let sparse = [(a, x), (b, y)];
                    let shortcut = zero.difference_contains_sparse(&sparse, 2).unwrap();
                    assert_eq!(shortcut.reason, DifferenceReason::DistanceShortcut);
                    assert_eq!(shortcut.member, v.member);
                    let brute = members.iter().any(|m| {
                        let shifted: Vec<u32> = m.iter().zip(&lambda).map(|(&u, &l)| u ^ l).collect();
                        members.contains(&shifted)
                    });
                    assert_eq!(v.member, brute);
                }
            }
        }
        let v = outer.difference_contains(&[0; 6], 2).unwrap();
        assert!(v.member);
    }

    #[test]
    fn undecidable_without_enumeration() {
        let c = SubAlphabetCode::new(mds(17, 18, 16), 16, SubAlphabetStrategy::ZeroShift).unwrap();
        let outer = OuterCode::SubAlphabet(c);
        let mut lambda = vec![0; 18];
        lambda[..3].copy_from_slice(&[1, 2, 3]);
        assert!(matches!(outer.difference_contains(&lambda, 2), Err(Error::Undecidable(_))));
        lambda[2] = 0;
        assert!(!outer.difference_contains(&lambda, 2).unwrap().member);
    }

    #[test]
    fn monte_carlo_is_seed_deterministic() {
        let parent = mds(5, 6, 4);
        let c = SubAlphabetCode::new(parent, 4, SubAlphabetStrategy::MonteCarlo { seed: 7, samples: 20_000 }).unwrap();
        let again = c.estimate_size(7, 20_000).unwrap();
        assert_eq!(c.size(), &again);
        let SizeRecord::Estimate { ci_low, ci_high, .. } = again else { panic!() };
        assert!(ci_low < ci_high);
    }

    #[test]
    fn invalid_sub_alphabets() {
        assert!(SubAlphabetCode::new(mds(5, 6, 4), 5, SubAlphabetStrategy::ZeroShift).is_err());
        assert!(SubAlphabetCode::with_injection(mds(5, 6, 4), vec![1, 1], SubAlphabetStrategy::ZeroShift).is_err());
        assert!(matches!(
            SubAlphabetCode::new(mds(17, 18, 16), 16, SubAlphabetStrategy::BestCoset { budget: 1 << 24 }),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
