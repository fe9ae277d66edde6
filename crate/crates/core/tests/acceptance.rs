//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::time::Instant;

use gcqc::catalog::{self, CodeParams};
use gcqc::classical::{DistanceStatus, OuterCode, SizeRecord};
use gcqc::distance::{
    certify_theorem1, verify_lowweight, CertificateStatus, DistanceCertificate, Evidence, LowWeightOptions,
    ScanEvidence, WeightMethod,
};
use gcqc::gc::GCCode;
use gcqc::symplectic::InnerDistanceStatus;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_{w<target} C(n,w) 3^w`, the qubit vectors of weight 1..target-1.
fn vectors_below(n: u128, target: u32) -> u64 {
    (1..target as u128).map(|w| binomial(n, w) * 3u128.pow(w as u32)).sum::<u128>() as u64
}

fn scan(cert: &DistanceCertificate) -> Result<&ScanEvidence, String> {
    match &cert.evidence {
        Evidence::Scan(s) => Ok(s),
        other => Err(format!("expected scan evidence, got {other:?}")),
    }
}

/// No member below `target`, every vector below `target` visited, and a
/// member of weight `target` found.
fn check_exact_scan(code: &GCCode, target: u32, expected_vectors: u64) -> Check {
    let cert = verify_lowweight(code, target, LowWeightOptions::default()).map_err(err)?;
    ensure!(
        cert.status == CertificateStatus::ProvedExact && cert.distance == Some(target),
        "status {:?}, distance {:?}",
        cert.status,
        cert.distance
    );
    let ev = scan(&cert)?;
    let below: Vec<_> = ev.weights.iter().filter(|w| w.weight < target).collect();
    ensure!(below.iter().all(|w| w.complete && w.members == 0), "incomplete or nonempty low-weight layer");
    let visited: u64 = below.iter().map(|w| w.vectors).sum();
    ensure!(
        visited == expected_vectors,
        "visited {visited} vectors below weight {target}, expected {expected_vectors}"
    );
    let witness = ev.witness.as_ref().ok_or("no witness")?;
    let v = witness.to_vector(code.p(), code.n());
    ensure!(witness.weight == target && code.contains(&v).map_err(err)?, "witness is not a weight-{target} member");
    ensure!(code.in_closure_dual(&v) != Some(true), "witness acts trivially");
    Ok(format!("{visited} vectors below weight {target}, witness on qubits {:?}", witness.positions))
}

fn criterion_1() -> Check {
    let code = GCCode::build(catalog::paper_example(1).map_err(err)?).map_err(err)?;
    let params = code.parameters();
    ensure!(params.n == 36 && params.k == Some(26), "got n={} k={:?}", params.n, params.k);
    ensure!(code.is_additive().additive, "not additive: {}", code.is_additive().reason);
    ensure!(params.bound.value == Some(4) && params.bound.verified, "bound {:?}", params.bound.value);
    let detail = check_exact_scan(&code, 4, vectors_below(36, 4))?;
    Ok(format!("[[36,26,4]] additive; {detail}"))
}

fn criterion_2() -> Check {
    let code = GCCode::build(catalog::paper_example(4).map_err(err)?).map_err(err)?;
    let OuterCode::SubAlphabet(a1) = &code.outer()[0] else {
        return Err("A1 is not a sub-alphabet code".into());
    };
    ensure!(*a1.size() == SizeRecord::Count { count: 164 }, "A1 size {:?}", a1.size());
    ensure!(a1.is_enumerated(), "A1 members are not enumerated");
    let expected = 164f64.log2() + 15.0 + 18.0;
    let got = code.parameters().log2_dimension;
    ensure!((got - expected).abs() < 1e-9, "log2 dimension {got}, formula gives {expected}");
    ensure!((got - 40.3576).abs() <= 5e-4, "log2 dimension {got} not 40.3576 ± 0.0005");
    ensure!(got > 40.0, "does not exceed 2^40");
    ensure!(!code.is_additive().additive, "reported additive");
    let cert = verify_lowweight(&code, 3, LowWeightOptions::default()).map_err(err)?;
    ensure!(cert.is_proved() && cert.distance == Some(3), "status {:?}", cert.status);
    let ev = scan(&cert)?;
    let visited: u64 = ev.weights.iter().filter(|w| w.weight < 3).map(|w| w.vectors).sum();
    ensure!(visited == 10_296 && visited == vectors_below(48, 3), "visited {visited}");
    ensure!(ev.weights.iter().filter(|w| w.weight < 3).all(|w| w.complete && w.members == 0), "member below weight 3");
    Ok(format!("|A1| = 164, log2 K = {got:.4} > 40, nonadditive, d ≥ 3 over {visited} vectors ({:?})", cert.status))
}

fn criterion_3() -> Check {
    let spec = catalog::paper_example(3).map_err(err)?;
    let code = GCCode::build(spec).map_err(err)?;
    ensure!(code.n() == 90 && !code.is_additive().additive, "n = {}", code.n());
    let cert = certify_theorem1(&code, Some(3));
    ensure!(
        cert.status == CertificateStatus::ProvedLowerBound && cert.distance == Some(3),
        "status {:?} distance {:?}",
        cert.status,
        cert.distance
    );
    let Evidence::Composite(ev) = &cert.evidence else {
        return Err("expected composite evidence".into());
    };
    let last = ev.inner[0].levels.last().and_then(|l| l.result.clone()).ok_or("no inner leaf")?;
    ensure!(
        last.value == Some(3) && last.exact && last.method == WeightMethod::CodewordEnumeration && last.words == 64,
        "inner leaf {last:?}"
    );
    let outer = ev.outer[0].distance.ok_or("no outer distance")?;
    ensure!(outer.value == 3 && outer.status == DistanceStatus::VerifiedExact, "outer leaf {outer:?}");

    let OuterCode::SubAlphabet(a1) = &code.outer()[0] else {
        return Err("A1 is not a sub-alphabet code".into());
    };
    let bottom = code.parameters().bottom_logical as f64;
    let estimate = a1.estimate_size(2024, 1_000_000).map_err(err)?;
    let again = a1.estimate_size(2024, 1_000_000).map_err(err)?;
    ensure!(estimate == again, "estimate is not reproducible");
    let total = estimate.log2() + bottom;
    ensure!((total - 81.825).abs() <= 0.1, "estimated log2 dimension {total}");
    let bound_total = code.parameters().log2_dimension;
    ensure!((bound_total - 81.825).abs() <= 5e-4, "pigeonhole log2 dimension {bound_total}");
    Ok(format!("d ≥ 3 from leaves d_r = 3 (64 words) and δ = 3; Monte Carlo log2 K = {total:.3}"))
}

fn criterion_4() -> Check {
    let code = GCCode::build(catalog::paper_example(2).map_err(err)?).map_err(err)?;
    let params = code.parameters();
    ensure!(params.n == 1365 && params.k == Some(1353), "got n={} k={:?}", params.n, params.k);
    let export = code.export_stabilizer().map_err(err)?;
    ensure!(export.generators.len() == 12, "{} generators", export.generators.len());
    for g in &export.generators {
        for h in &export.generators {
            ensure!(g.product(h).map_err(err)? == 0, "exported generators do not commute");
        }
    }
    ensure!(export.paulis().iter().all(|s| s.len() == 1365), "generator length");
    let detail = check_exact_scan(&code, 3, 8_382_465)?;
    ensure!(vectors_below(1365, 3) == 8_382_465, "vector count formula");
    Ok(format!("[[1365,1353,3]], 12 commuting generators; {detail}"))
}

fn criterion_5() -> Check {
    let spec = catalog::get_spec("steane_concatenation").map_err(err)?;
    let code = GCCode::build((*spec).clone()).map_err(err)?;
    ensure!(code.n() == 455 && code.parameters().k == Some(443), "got n={} k={:?}", code.n(), code.parameters().k);
    let expected = vectors_below(455, 3);
    ensure!(expected <= 935_000, "{expected} vectors");
    let detail = check_exact_scan(&code, 3, expected)?;
    let spec = catalog::get_spec("mixed_concatenation").map_err(err)?;
    let mixed = GCCode::build((*spec).clone()).map_err(err)?;
    ensure!(mixed.n() == 469 && mixed.parameters().k == Some(457), "mixed: n={}", mixed.n());
    check_exact_scan(&mixed, 3, vectors_below(469, 3))?;
    Ok(format!("[[455,443,3]]: {detail}; 64 Steane + 1 [[21,15,3]] gives [[469,457,3]]"))
}

fn criterion_6() -> Check {
    let seeds = 0..24u64;
    let count = seeds.clone().count();
    for seed in seeds {
        common::check_gc_spec(seed).map_err(|e| format!("seed {seed}: {e}"))?;
    }
    Ok(format!("{count} random specs: membership, exhaustive ≥ bound, export dual"))
}

fn criterion_7() -> Check {
    let orders = common::small_field_orders();
    for &q in &orders {
        common::check_field_axioms(q)?;
    }
    for seed in 0..200 {
        common::check_dual(seed).map_err(|e| format!("dual seed {seed}: {e}"))?;
        common::check_chain(seed).map_err(|e| format!("chain seed {seed}: {e}"))?;
    }
    for seed in 0..40 {
        common::check_subalphabet(seed).map_err(|e| format!("sub-alphabet seed {seed}: {e}"))?;
    }
    let code = GCCode::build(catalog::paper_example(1).map_err(err)?).map_err(err)?;
    let reports: Vec<String> = [1, 2, 4, 8]
        .iter()
        .map(|&t| {
            let options = LowWeightOptions { threads: Some(t), ..LowWeightOptions::default() };
            verify_lowweight(&code, 4, options).map(|c| serde_json::to_string(&c).unwrap()).map_err(err)
        })
        .collect::<Result<_, _>>()?;
    ensure!(reports.windows(2).all(|w| w[0] == w[1]), "reports differ across thread counts");
    Ok(format!(
        "{} fields, 200 duals, 200 chains, 40 sub-alphabet codes, identical reports at 1/2/4/8 threads",
        orders.len()
    ))
}

fn criterion_8() -> Check {
    let expected = [
        ("five_qubit", (5, 1, 3)),
        ("iceberg6", (6, 4, 2)),
        ("hexacode", (6, 0, 4)),
        ("steane", (7, 1, 3)),
        ("eight_6_2", (8, 6, 2)),
        ("eight_3_3", (8, 3, 3)),
        ("qhamming(3)", (21, 15, 3)),
    ];
    for (name, (n, k, d)) in expected {
        let c = catalog::get_code(name).map_err(err)?;
        let got = (c.n(), c.k(), c.distance());
        ensure!(got == (n, k, Some((d, InnerDistanceStatus::Verified))), "{name}: {got:?}");
        let want = catalog::Expected::Code(CodeParams { n, k, d });
        let (entry, arg) = catalog::lookup(name).map_err(err)?;
        ensure!(entry.expected(arg) == want, "{name}: catalog expects {:?}", entry.expected(arg));
    }
    let big = catalog::get_code("eight_3_3").map_err(err)?;
    let found = catalog::find_nested_subcode(&big, 6, 2).map_err(err)?;
    ensure!((found.n(), found.k()) == (8, 6), "search returned {}", found.params());
    ensure!(big.stabilizer().contains_code(found.stabilizer()), "found code is not nested");
    let chain = catalog::eight_chain().map_err(err)?;
    ensure!(chain.codes()[1].stabilizer() == found.stabilizer(), "chain middle level differs from the search result");
    let hex = catalog::hexacode_chain().map_err(err)?;
    let dims: Vec<Option<u32>> =
        gcqc::distance::chain_level_distances(&hex, 1 << 16).iter().map(|l| l.value()).collect();
    ensure!(dims == vec![Some(1), Some(2), Some(4)], "hexacode chain layers {dims:?}");
    Ok("7 codes match; [[8,6,2]] found inside [[8,3,3]]; hexacode chain layers (1,2,4)".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("hexacode chain: [[36,26,4]]", criterion_1),
        ("[[8,3,3]] chain: size 164 and d >= 3", criterion_2),
        ("five-qubit chain: composite bound and size estimate", criterion_3),
        ("quantum Hamming chain: [[1365,1353,3]]", criterion_4),
        ("Steane x65 and mixed inner codes", criterion_5),
        ("oracle equivalence on random GC codes", criterion_6),
        ("invariant suites", criterion_7),
        ("catalog self-verification", criterion_8),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({title}) [{secs:.1}s]: {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {} ({title}) [{secs:.1}s]: {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
