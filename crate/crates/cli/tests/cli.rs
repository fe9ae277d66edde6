use std::path::PathBuf;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use gcqc::catalog;
use gcqc::gc::{GCCode, StabilizerExport};
use gcqc::symplectic::{StabilizerCode, SymplecticVector};
use gcqc_cli::budget::Budgets;
use gcqc_cli::spec::SpecSource;

fn spec(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("specs");
    p.push(name);
    p.to_string_lossy().into_owned()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn gcqc_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gcqc"));
    cmd.args(args).env_remove("GCQ_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("gcqc runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn gcqc(args: &[&str]) -> Run {
    gcqc_env(args, &[])
}

fn json(run: &Run) -> Value {
    serde_json::from_str(&run.stdout).unwrap_or_else(|e| panic!("{e}: {}", run.stdout))
}

fn temp_spec(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

/// `[[2,0]]` Bell chain under a `[3,2,2]_4` code: six qubits, small enough to enumerate.
const BELL: &str = r#"{"p":2,"inner":{"chain":[{"generators":[],"n":2},{"generators":["XX","ZZ"]}]},
    "outer":[{"type":"mds","q":4,"n":3,"k":2}]}"#;

#[test]
fn build_reports() {
    let run = gcqc(&["build", &spec("example1.json")]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert!(run.stdout.contains("n=36 k=26 additive=yes bound d≥4"), "{}", run.stdout);
    assert!(run.stdout.contains("budgets: enumeration 16777216 (default)"));

    let run = gcqc(&["build", &spec("example4.json")]);
    assert!(run.stdout.contains("n=48 log2dim=40.3576 additive=no"), "{}", run.stdout);

    let run = gcqc(&["build", &spec("example1.json"), "--json"]);
    let report = json(&run);
    assert_eq!(report["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(report["parameters"]["k"], 26);
    assert_eq!(report["certificate"]["status"], "proved-lower-bound");
    assert_eq!(report["budgets"]["scan"], 1_000_000_000u64);

    let run = gcqc(&["build", "catalog:mixed_concatenation"]);
    assert!(run.stdout.contains("n=469 k=457 additive=yes bound d≥3"), "{}", run.stdout);
    let run = gcqc(&["build", &spec("mixed.json")]);
    assert!(run.stdout.contains("n=469 k=457 additive=yes bound d≥3"), "{}", run.stdout);
    let run = gcqc(&["build", &spec("example2.json")]);
    assert!(run.stdout.contains("n=1365 k=1353 additive=yes bound d≥3"), "{}", run.stdout);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let run = gcqc(&["build", &temp_spec(&dir, "bad.json", "{\"p\": 2,")]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("malformed JSON"), "{}", run.stderr);

    let text =
        "{\"p\": 2,\n \"inner\": {\"chain\": \"five_chain\"},\n \"outer\": [{\"type\": \"mds\", \"q\": 4, \"n\": 6}]}";
    let run = gcqc(&["build", &temp_spec(&dir, "schema.json", text)]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("missing field `k`") && run.stderr.contains("line 3"), "{}", run.stderr);

    let text = r#"{"p":2,"inner":{"chain":"five_chain"},"outer":[{"type":"mds","q":8,"n":6,"k":3}]}"#;
    let run = gcqc(&["build", &temp_spec(&dir, "mismatch.json", text)]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("chain expects 16"), "{}", run.stderr);

    assert_eq!(gcqc(&["build", "catalog:nonexistent"]).code, 2);
    assert_eq!(gcqc(&["build", "/no/such/file.json"]).code, 2);
    assert_eq!(gcqc(&["verify", &spec("example1.json"), "--method", "lowweight"]).code, 2);
    assert_eq!(gcqc(&["verify", &spec("example1.json"), "--method", "guess"]).code, 2);
    assert_eq!(gcqc_env(&["build", &spec("example1.json")], &[("GCQ_BUDGET", "many")]).code, 2);
}

/// Whether `w` commutes with every exported generator but is not a
/// stabilizer: a logical operator.
fn is_logical(export: &StabilizerExport, w: &SymplecticVector) -> bool {
    let code = export.to_code().unwrap();
    code.normalizer().contains(w) && !code.stabilizer().contains(w)
}

#[test]
fn lowweight_verification() {
    let export_run = gcqc(&["export", &spec("example1.json")]);
    let export = StabilizerExport::parse(&export_run.stdout).unwrap();

    let run = gcqc(&["verify", &spec("example1.json"), "--method", "lowweight", "--distance", "4", "--json"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let cert = &json(&run)["certificate"];
    assert_eq!(cert["status"], "proved-exact");
    assert_eq!(cert["evidence"]["witness"]["weight"], 4);

    let args = ["verify", &spec("example1.json"), "--method", "lowweight", "--distance", "5"];
    let run = gcqc(&args);
    assert_eq!(run.code, 3);
    assert!(run.stdout.contains("status: refuted") && run.stdout.contains("witness: weight 4"), "{}", run.stdout);

    let mut with_json: Vec<&str> = args.to_vec();
    with_json.push("--json");
    let one = gcqc(&[&with_json[..], &["--threads", "1"]].concat());
    let four = gcqc(&[&with_json[..], &["--threads", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
    let witness: gcqc::distance::Witness = {
        let w = &json(&one)["certificate"]["evidence"]["witness"];
        gcqc::distance::Witness {
            weight: w["weight"].as_u64().unwrap() as u32,
            positions: w["positions"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect(),
            paulis: w["paulis"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect(),
            index: None,
        }
    };
    assert_eq!(witness.weight, 4);
    assert!(is_logical(&export, &witness.to_vector(2, 36)));
}

#[test]
fn certificate_and_exhaustive_verification() {
    let run = gcqc(&["verify", &spec("example3.json"), "--method", "certificate", "--json"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let cert = &json(&run)["certificate"];
    assert_eq!((cert["status"].as_str(), cert["distance"].as_u64()), (Some("proved-lower-bound"), Some(3)));

    let run = gcqc(&["verify", &spec("example3.json"), "--distance", "4"]);
    assert_eq!(run.code, 4, "{}", run.stdout);

    let dir = tempfile::tempdir().unwrap();
    let bell = temp_spec(&dir, "bell.json", BELL);
    let run = gcqc(&["verify", &bell, "--method", "exhaustive", "--distance", "2", "--json"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(json(&run)["certificate"]["status"], "proved-exact");
    assert_eq!(gcqc(&["verify", &bell, "--method", "exhaustive", "--distance", "3"]).code, 3);

    let run = gcqc_env(&["verify", &bell, "--method", "exhaustive", "--json"], &[("GCQ_BUDGET", "2")]);
    assert_eq!(run.code, 4);
    assert!(run.stderr.contains("budget"), "{}", run.stderr);
    let run = gcqc_env(&["build", &bell, "--json"], &[("GCQ_BUDGET", "2^20")]);
    let budgets = &json(&run)["budgets"];
    assert_eq!(
        (budgets["enumeration"].as_u64(), budgets["enumeration_source"].as_str()),
        (Some(1 << 20), Some("environment"))
    );
}

#[test]
fn export_formats() {
    let run = gcqc(&["export", &spec("example1.json")]);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(&lines[..2], &["GCQC v1", "n=36 k=26 p=2"]);
    assert_eq!(lines.len() - 2, 10);

    let run = gcqc(&["export", &spec("example2.json")]);
    let generators: Vec<&str> = run.stdout.lines().skip(2).collect();
    assert_eq!(generators.len(), 12);
    assert!(generators.iter().all(|g| g.len() == 1365));
    let code = StabilizerExport::parse(&run.stdout).unwrap().to_code().unwrap();
    assert_eq!((code.n(), code.k()), (1365, 1353));

    let pauli = StabilizerExport::parse(&gcqc(&["export", &spec("example1.json")]).stdout).unwrap();
    let matrix =
        StabilizerExport::parse(&gcqc(&["export", &spec("example1.json"), "--format", "matrix"]).stdout).unwrap();
    assert_eq!(pauli, matrix);

    // Nonadditive: the stabilizer of N(S_{r-1})^N and a description of the outer codes.
    let run = gcqc(&["export", &spec("example4.json")]);
    let base = StabilizerExport::parse(&run.stdout).unwrap();
    assert_eq!((base.n, base.k), (48, 18));
    assert!(run.stdout.contains("# A1: (6,2^7.358,3)_4 from [6,4]_5"), "{}", run.stdout);
}

fn random_vector(rng: &mut ChaCha8Rng, p: u32, n: usize) -> SymplecticVector {
    let x: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p)).collect();
    let z: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p)).collect();
    SymplecticVector::from_digits(p, &x, &z).unwrap()
}

/// Random element of the span of `basis` over F_2.
fn random_member(rng: &mut ChaCha8Rng, basis: &[SymplecticVector], n: usize) -> SymplecticVector {
    let mut v = SymplecticVector::zeros(2, n);
    for b in basis {
        if rng.gen_bool(0.5) {
            v.add_assign(b);
        }
    }
    v
}

#[test]
fn json_export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ex1.json");
    let run = gcqc(&["export", &spec("example1.json"), "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let text = std::fs::read_to_string(&out).unwrap();
    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!((doc["n"].as_u64(), doc["k"].as_u64(), doc["additive"].as_bool()), (Some(36), Some(26), Some(true)));

    let original = GCCode::build(catalog::paper_example(1).unwrap()).unwrap();
    let imported = {
        let source = SpecSource::load(out.to_str().unwrap()).unwrap();
        GCCode::build(source.to_gc_spec(&Budgets::resolve(None, None)).unwrap()).unwrap()
    };
    let generators: Vec<SymplecticVector> = doc["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| SymplecticVector::from_pauli_str(g.as_str().unwrap()).unwrap())
        .collect();
    let from_generators = StabilizerCode::new(2, 36, &generators).unwrap();

    let members = original.additive_closure().unwrap().basis();
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    let mut inside = 0;
    for i in 0..1000 {
        let v = if i % 2 == 0 { random_member(&mut rng, &members, 36) } else { random_vector(&mut rng, 2, 36) };
        let want = original.contains(&v).unwrap();
        inside += want as u32;
        assert_eq!(imported.contains(&v).unwrap(), want);
        assert_eq!(from_generators.normalizer().contains(&v), want);
    }
    assert!(inside >= 500, "{inside}");

    let run = gcqc(&["build", out.to_str().unwrap()]);
    assert!(run.stdout.contains("n=36 k=26 additive=yes bound d≥4"), "{}", run.stdout);
}

#[test]
fn size_estimates() {
    let args = ["estimate-size", &spec("example3.json"), "--seed", "11", "--json"];
    let first = gcqc(&args);
    assert_eq!(first.code, 0, "{}", first.stderr);
    assert_eq!(first.stdout, gcqc(&args).stdout);
    let report = json(&first);
    let size = &report["levels"][0]["size"];
    assert_eq!(
        (report["levels"][0]["method"].as_str(), size["samples"].as_u64()),
        (Some("monte-carlo"), Some(1_000_000))
    );
    let log2 = size["log2"].as_f64().unwrap();
    assert!((63.7..=63.95).contains(&log2), "{log2}");
    assert!(size["ci_low"].as_f64().unwrap() <= log2 && log2 <= size["ci_high"].as_f64().unwrap());
    // 18 free bottom qubits on top of the outer code.
    assert!((report["log2_dimension"].as_f64().unwrap() - log2 - 18.0).abs() < 1e-9);

    let other = json(&gcqc(&["estimate-size", &spec("example3.json"), "--seed", "12", "--json"]));
    assert_ne!(other["levels"][0]["size"]["hits"], size["hits"]);

    let run = gcqc(&["estimate-size", &spec("example4.json"), "--json"]);
    let level = &json(&run)["levels"][0];
    assert_eq!((level["method"].as_str(), level["size"]["count"].as_u64()), (Some("enumerated"), Some(164)));
}

#[test]
fn catalog_commands() {
    let run = gcqc(&["catalog", "list"]);
    assert_eq!(run.code, 0);
    for name in ["five_qubit", "hexacode_chain", "qhamming(m)", "paper_example(m)"] {
        assert!(run.stdout.contains(name), "{name}: {}", run.stdout);
    }
    let run = gcqc(&["catalog", "show", "five_qubit"]);
    assert!(run.stdout.contains("[[5,1,3]]"), "{}", run.stdout);
    let run = gcqc(&["catalog", "show", "hexacode_chain"]);
    assert!(run.stdout.contains("level 2: [[6,0,4]]"), "{}", run.stdout);
    let run = gcqc(&["catalog", "show", "paper_example(4)"]);
    assert!(run.stdout.contains("n=48 log2dim=40.3576 additive=no"), "{}", run.stdout);
    assert_eq!(gcqc(&["catalog", "show", "qhamming(99)"]).code, 2);
}
