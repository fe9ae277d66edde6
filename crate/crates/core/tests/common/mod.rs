//! Random generators and independent oracles shared by the property tests
//! and the acceptance suite.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use gcqc::classical::{
    DistanceMode, DistanceResult, LinearCode, OuterCode, SizeRecord, SubAlphabetCode, SubAlphabetStrategy,
};
use gcqc::distance::{verify_exhaustive, ExhaustiveMethod, UnionCode};
use gcqc::fp::Echelon;
use gcqc::galois::FiniteField;
use gcqc::gc::{GCCode, GCSpec};
use gcqc::symplectic::{AdditiveSymplecticCode, NestedStabilizerChain, StabilizerCode, SymplecticVector};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Outcome = Result<(), String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

// ---- fields ----

/// Orders `p^m ≤ 64`.
pub fn small_field_orders() -> Vec<u64> {
    (2..=64u64).filter(|&q| gcqc::galois::prime_power(q).is_some()).collect()
}

/// Schoolbook product of the coefficient vectors of `a` and `b`, reduced by
/// the monic modulus.
fn poly_mul_oracle(f: &FiniteField, a: u32, b: u32) -> u32 {
    let (p, m) = (f.characteristic(), f.degree() as usize);
    let (da, db) = (f.to_prime_vector(a), f.to_prime_vector(b));
    let mut prod = vec![0u32; 2 * m];
    for i in 0..m {
        for j in 0..m {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    let modulus = f.modulus();
    for top in (m..2 * m).rev() {
        let c = prod[top];
        if c != 0 {
            for (k, &mk) in modulus.iter().enumerate().take(m) {
                let idx = top - m + k;
                prod[idx] = (prod[idx] + (p - c) * mk) % p;
            }
            prod[top] = 0;
        }
    }
    f.from_prime_vector(&prod[..m]).unwrap()
}

/// Every field axiom, exhaustively, plus agreement of multiplication with a
/// polynomial oracle and of addition with digitwise addition.
pub fn check_field_axioms(q: u64) -> Outcome {
    let f = FiniteField::with_order(q).map_err(|e| e.to_string())?;
    let q = q as u32;
    let p = f.characteristic();
    for a in 0..q {
        ensure!(f.add(a, 0) == a && f.mul(a, 1) == a && f.mul(a, 0) == 0, "identities fail at {a} in GF({q})");
        ensure!(f.add(a, f.neg(a)) == 0, "additive inverse of {a} in GF({q})");
        if a != 0 {
            let inv = f.inv(a).ok_or(format!("{a} has no inverse in GF({q})"))?;
            ensure!(f.mul(a, inv) == 1, "bad inverse of {a} in GF({q})");
        }
        for b in 0..q {
            let digitwise: Vec<u32> =
                f.to_prime_vector(a).iter().zip(f.to_prime_vector(b)).map(|(x, y)| (x + y) % p).collect();
            ensure!(f.add(a, b) == f.from_prime_vector(&digitwise).unwrap(), "addition of {a},{b} in GF({q})");
            ensure!(f.mul(a, b) == poly_mul_oracle(&f, a, b), "product {a}*{b} in GF({q}) disagrees with the oracle");
            ensure!(f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a), "commutativity at {a},{b}");
            for c in 0..q {
                ensure!(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)), "additive associativity in GF({q})");
                ensure!(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)), "multiplicative associativity in GF({q})");
                ensure!(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)), "distributivity in GF({q})");
            }
        }
    }
    Ok(())
}

// ---- additive codes ----

pub fn random_vector(rng: &mut impl Rng, p: u32, n: usize) -> SymplecticVector {
    let x: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p)).collect();
    let z: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p)).collect();
    SymplecticVector::from_digits(p, &x, &z).unwrap()
}

/// Dual involution and `dim C + dim C^⊥ = 2n`, with the dual checked
/// against a brute-force orthogonality test when small.
pub fn check_dual(seed: u64) -> Outcome {
    let mut r = rng(seed);
    let p = *[2u32, 3, 5].choose(&mut r).unwrap();
    let n = r.gen_range(1..=5);
    let count = r.gen_range(0..=2 * n + 1);
    let gens: Vec<SymplecticVector> = (0..count).map(|_| random_vector(&mut r, p, n)).collect();
    let c = AdditiveSymplecticCode::new(p, n, &gens).map_err(|e| e.to_string())?;
    let dual = c.dual();
    ensure!(c.dim() + dual.dim() == 2 * n, "dim {} + {} != {}", c.dim(), dual.dim(), 2 * n);
    ensure!(dual.dual() == c, "dual is not an involution (p={p}, n={n})");
    for g in &gens {
        for h in dual.basis() {
            ensure!(g.product(&h).unwrap() == 0, "dual vector not orthogonal");
        }
    }
    if (p as u64).pow(2 * n as u32) <= 4096 {
        let mut count = 0u64;
        for_each_vector(p, n, |v| {
            if gens.iter().all(|g| g.product(v).unwrap() == 0) {
                count += 1;
                assert!(dual.contains(v));
            }
        });
        ensure!(count == (p as u64).pow(dual.dim() as u32), "dual size {count} mismatch");
    }
    Ok(())
}

/// Calls `f` on every vector of `F_p^{2n}`.
pub fn for_each_vector(p: u32, n: usize, mut f: impl FnMut(&SymplecticVector)) {
    let mut digits = vec![0u32; 2 * n];
    loop {
        f(&SymplecticVector::from_digits(p, &digits[..n], &digits[n..]).unwrap());
        let mut i = 0;
        loop {
            if i == digits.len() {
                return;
            }
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

// ---- chains ----

/// `count` independent, pairwise orthogonal random vectors.
pub fn random_isotropic(rng: &mut impl Rng, p: u32, n: usize, count: usize) -> Vec<SymplecticVector> {
    assert!(count <= n);
    loop {
        let mut span = Echelon::new(p, 2 * n, []);
        let mut out: Vec<SymplecticVector> = Vec::new();
        for _ in 0..200 {
            if out.len() == count {
                return out;
            }
            let v = random_vector(rng, p, n);
            if out.iter().all(|g| g.product(&v).unwrap() == 0) && span.insert(v.to_flat()) {
                out.push(v);
            }
        }
    }
}

/// Chain with `s0` generators at the top and `level_sizes[i]` more at level `i + 1`.
pub fn chain_with_shape(
    rng: &mut impl Rng,
    p: u32,
    n: usize,
    s0: usize,
    level_sizes: &[usize],
) -> NestedStabilizerChain {
    let total = s0 + level_sizes.iter().sum::<usize>();
    let gens = random_isotropic(rng, p, n, total);
    let mut cut = s0;
    let mut codes = vec![StabilizerCode::new(p, n, &gens[..cut]).unwrap()];
    for &s in level_sizes {
        cut += s;
        codes.push(StabilizerCode::new(p, n, &gens[..cut]).unwrap());
    }
    NestedStabilizerChain::new(codes).unwrap()
}

pub fn random_chain(rng: &mut impl Rng, p: u32, n: usize) -> NestedStabilizerChain {
    let total = rng.gen_range(1..=n);
    let s0 = rng.gen_range(0..total);
    let rest = total - s0;
    let levels = if rest >= 2 && rng.gen_bool(0.5) { 2 } else { 1 };
    let shape = if levels == 2 {
        let a = rng.gen_range(1..rest);
        vec![a, rest - a]
    } else {
        vec![rest]
    };
    chain_with_shape(rng, p, n, s0, &shape)
}

/// Label round trips, injectivity of representatives, and consistency of
/// labels with the coset structure on random vectors.
pub fn check_chain(seed: u64) -> Outcome {
    let mut r = rng(seed);
    let p = *[2u32, 3].choose(&mut r).unwrap();
    let n = r.gen_range(1..=4);
    let chain = random_chain(&mut r, p, n);
    let sizes = chain.alphabet_sizes();
    let mut labels = vec![0u32; sizes.len()];
    let bottom = chain.normalizer(chain.levels());
    let mut reps: Vec<SymplecticVector> = Vec::new();
    loop {
        let v = chain.coset_rep(&labels).map_err(|e| e.to_string())?;
        let (back, inside) = chain.coset_label(&v).map_err(|e| e.to_string())?;
        ensure!(inside && back == labels, "round trip {labels:?} -> {back:?}");
        for w in &reps {
            ensure!(!bottom.contains(&v.sub(w)), "two label arrays share a coset");
        }
        reps.push(v);
        let mut i = 0;
        while i < labels.len() {
            labels[i] += 1;
            if (labels[i] as u64) < sizes[i] {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
        if i == labels.len() {
            break;
        }
    }
    let top = chain.normalizer(0);
    for _ in 0..50 {
        let v = random_vector(&mut r, p, n);
        let (labels, inside) = chain.coset_label(&v).map_err(|e| e.to_string())?;
        ensure!(inside == top.contains(&v), "top membership disagrees");
        if inside {
            let rep = chain.coset_rep(&labels).unwrap();
            ensure!(bottom.contains(&v.sub(&rep)), "vector and representative of its labels differ outside N(S_(r-1))");
        }
    }
    Ok(())
}

// ---- sub-alphabet codes ----

pub fn random_linear(rng: &mut impl Rng, q: u64, n: usize, k: usize) -> LinearCode {
    let field = Arc::new(FiniteField::with_order(q).unwrap());
    loop {
        let rows: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..q as u32)).collect()).collect();
        if rows.iter().any(|r| r.iter().any(|&x| x != 0)) {
            let mut code = LinearCode::new(Arc::clone(&field), rows).unwrap();
            if let Ok(DistanceResult::Exact { distance: Some(d) }) =
                code.min_distance(DistanceMode::Exact { budget: 1 << 20 })
            {
                code.verify_claim(d, 1 << 20);
            }
            return code;
        }
    }
}

/// Best-coset size against a brute-force count of sub-alphabet words per
/// syndrome, and the pigeonhole bound `⌈s^N / q^(N-k)⌉`.
pub fn check_subalphabet(seed: u64) -> Outcome {
    let mut r = rng(seed);
    let q = *[3u64, 4, 5, 7].choose(&mut r).unwrap();
    let n = r.gen_range(2..=5);
    let k = r.gen_range(1..n);
    let s = r.gen_range(2..q as u32);
    let parent = random_linear(&mut r, q, n, k);
    let kk = parent.dimension();
    let code = SubAlphabetCode::new(parent.clone(), s, SubAlphabetStrategy::BestCoset { budget: 1 << 20 })
        .map_err(|e| e.to_string())?;
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut word = vec![0u32; n];
    loop {
        *counts.entry(parent.syndrome(&word)).or_default() += 1;
        let mut i = 0;
        while i < n {
            word[i] += 1;
            if word[i] < s {
                break;
            }
            word[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    let best = *counts.values().max().unwrap();
    ensure!(*code.size() == SizeRecord::Count { count: best }, "size {:?}, brute force {best}", code.size());
    let num = (s as u128).pow(n as u32);
    let den = (q as u128).pow((n - kk) as u32);
    let bound = num.div_ceil(den);
    ensure!(best as u128 >= bound, "best coset {best} below the pigeonhole bound {bound}");
    let members = code.members(1 << 20).unwrap();
    ensure!(members.len() as u64 == best, "member list size");
    for w in &members {
        ensure!(code.contains(w).unwrap(), "member rejected");
    }
    Ok(())
}

// ---- random GC specs ----

fn random_outer(rng: &mut impl Rng, p: u32, label_dim: usize, len: usize) -> OuterCode {
    let q = (p as u64).pow(label_dim as u32);
    let parents: Vec<u64> = match q {
        2 => vec![3, 4, 5],
        3 => vec![4, 5, 7],
        4 => vec![5, 7, 8, 9],
        _ => vec![],
    };
    if !parents.is_empty() && rng.gen_bool(0.35) {
        let parent_q = *parents.choose(rng).unwrap();
        let k = rng.gen_range(1..=len);
        let parent = random_linear(rng, parent_q, len, k);
        return OuterCode::SubAlphabet(
            SubAlphabetCode::new(parent, q as u32, SubAlphabetStrategy::BestCoset { budget: 1 << 20 }).unwrap(),
        );
    }
    let k = rng.gen_range(1..=len);
    OuterCode::Linear(random_linear(rng, q, len, k))
}

/// Small qubit chains whose bottom codes have distance 2.
fn structured_chain(rng: &mut impl Rng) -> (NestedStabilizerChain, usize) {
    let code = |g: &[&str]| StabilizerCode::from_paulis(g).unwrap();
    if rng.gen_bool(0.5) {
        let chain = NestedStabilizerChain::new(vec![StabilizerCode::full(2, 2), code(&["XX", "ZZ"])]).unwrap();
        (chain, rng.gen_range(2..=4))
    } else {
        let chain = NestedStabilizerChain::new(vec![
            StabilizerCode::full(2, 4),
            code(&["XXXX", "ZZZZ"]),
            code(&["XXXX", "ZZZZ", "XXII", "ZZII"]),
        ])
        .unwrap();
        (chain, 2)
    }
}

/// A random GC spec whose ambient space has at most `2^18` vectors and at
/// most 512 cosets.
pub fn random_spec(seed: u64) -> GCSpec {
    let mut r = rng(seed);
    loop {
        if r.gen_bool(0.4) {
            let (chain, blocks) = structured_chain(&mut r);
            let dims = chain.label_dims();
            let outer: Vec<OuterCode> = dims.iter().map(|&d| random_outer(&mut r, 2, d, blocks)).collect();
            if outer.iter().map(|a| a.size().log2()).sum::<f64>() > 9.0 + 1e-9 {
                continue;
            }
            return GCSpec::mixed(vec![Arc::new(chain); blocks], outer);
        }
        let p = if r.gen_bool(0.75) { 2 } else { 3 };
        let max_total = if p == 2 { 9 } else { 5 };
        let blocks = r.gen_range(2..=3usize);
        let n_in = r.gen_range(1..=(max_total / blocks).max(1));
        if blocks * n_in > max_total {
            continue;
        }
        let first = random_chain(&mut r, p, n_in);
        let dims = first.label_dims();
        let s0 = first.codes()[0].n() - first.codes()[0].k();
        let first = Arc::new(first);
        let positions: Vec<Arc<NestedStabilizerChain>> = (0..blocks)
            .map(|j| {
                if j > 0 && r.gen_bool(0.3) {
                    Arc::new(chain_with_shape(&mut r, p, n_in, s0, &dims))
                } else {
                    Arc::clone(&first)
                }
            })
            .collect();
        let outer: Vec<OuterCode> = dims.iter().map(|&d| random_outer(&mut r, p, d, blocks)).collect();
        let cosets: f64 = outer.iter().map(|a| a.size().log2()).sum();
        if cosets > 9.0 + 1e-9 {
            continue;
        }
        let mut spec = GCSpec::mixed(positions, outer);
        for (i, &d) in dims.iter().enumerate() {
            if r.gen_bool(0.2) {
                let mut table: Vec<u32> = (0..p.pow(d as u32)).collect();
                table.shuffle(&mut r);
                spec = spec.with_label_permutation(i + 1, table);
            }
        }
        return spec;
    }
}

/// Membership against explicit enumeration, the exact distance against the
/// composite bound, and, for additive codes, the exported stabilizer's dual
/// against the enumerated normalizer code.
pub fn check_gc_spec(seed: u64) -> Outcome {
    let spec = random_spec(seed);
    let code = GCCode::build(spec).map_err(|e| format!("build: {e}"))?;
    let (p, n) = (code.p(), code.n());
    let residual = AdditiveSymplecticCode::new(p, n, &code.residual_basis()).unwrap();
    let reps: Vec<SymplecticVector> = code.enumerate_cosets(1 << 20).map_err(|e| e.to_string())?.collect();
    let mut members: HashSet<SymplecticVector> = HashSet::new();
    for rep in &reps {
        let mut coeffs = vec![0u32; residual.dim()];
        let basis = residual.basis();
        loop {
            let mut v = rep.clone();
            for (c, b) in coeffs.iter().zip(&basis) {
                v.add_scaled(b, *c);
            }
            members.insert(v);
            let mut i = 0;
            while i < coeffs.len() {
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == coeffs.len() {
                break;
            }
        }
    }
    let expected = reps.len() as f64 * (p as f64).powi(residual.dim() as i32);
    ensure!(members.len() as f64 == expected, "cosets overlap: {} members, expected {expected}", members.len());
    let mut mismatch = None;
    for_each_vector(p, n, |v| {
        if mismatch.is_none() && code.contains(v).unwrap() != members.contains(v) {
            mismatch = Some(v.clone());
        }
    });
    ensure!(mismatch.is_none(), "membership oracle disagrees at {mismatch:?}");

    let params = code.parameters();
    let k_bottom: f64 = (0..code.blocks()).map(|j| code.chain(j).bottom().k() as f64).sum();
    let log2_dim = (reps.len() as f64).log2() + k_bottom * (p as f64).log2();
    if params.dimension_provenance == gcqc::classical::Provenance::Exact {
        ensure!(
            (params.log2_dimension - log2_dim).abs() < 1e-9,
            "log2 dimension {} vs {log2_dim}",
            params.log2_dimension
        );
    }

    let union = UnionCode::from_gc(&code, 1 << 20).map_err(|e| e.to_string())?;
    let cert = verify_exhaustive(&union, ExhaustiveMethod::Pairwise, None, 1 << 26).map_err(|e| e.to_string())?;
    if let (Some(d), Some(bound)) = (cert.distance, params.bound.value) {
        if params.bound.verified {
            ensure!(d >= bound, "exact distance {d} below the composite bound {bound}");
        }
    }

    if code.is_additive().additive {
        let export = code.export_stabilizer().map_err(|e| e.to_string())?;
        let stab = export.to_code().map_err(|e| e.to_string())?;
        let normalizer = stab.normalizer();
        ensure!(
            (p as f64).powi(normalizer.dim() as i32) == members.len() as f64,
            "normalizer of the export has {} words, code has {}",
            (p as f64).powi(normalizer.dim() as i32),
            members.len()
        );
        ensure!(members.iter().all(|v| normalizer.contains(v)), "member outside the export's normalizer");
    }
    Ok(())
}
