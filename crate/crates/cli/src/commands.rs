//! Command definitions and their drivers.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gcqc::catalog::{self, CatalogObject};
use gcqc::classical::{OuterCode, SizeRecord};
use gcqc::distance::{
    certify_theorem1, verify_exhaustive, verify_lowweight, CertificateStatus, DistanceCertificate, ExhaustiveMethod,
    LowWeightOptions, UnionCode,
};
use gcqc::gc::{ExportFormat, GCCode, StabilizerExport};
use gcqc::symplectic::AdditiveSymplecticCode;

use crate::budget::Budgets;
use crate::spec::SpecSource;
use crate::{report, CliError, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_REFUTED, VERSION};

#[derive(Debug, Parser)]
#[command(name = "gcqc", version, about = "Build and verify generalized concatenated quantum codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and report its parameters.
    Build {
        /// Spec file, or `catalog:NAME`.
        spec: String,
        /// Print the JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the minimum distance.
    Verify {
        spec: String,
        #[arg(long, value_enum, default_value_t = Method::Certificate)]
        method: Method,
        /// Claimed distance; required by the low-weight scan.
        #[arg(long)]
        distance: Option<u32>,
        /// Scan threads; defaults to the machine's parallelism.
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write stabilizer generators.
    Export {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Pauli)]
        format: Format,
        /// Output file; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inspect the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Estimate the sizes of sub-alphabet outer codes.
    EstimateSize {
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List every entry.
    List,
    /// Build, verify and describe one entry.
    Show { name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Lowweight,
    Exhaustive,
    Certificate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pauli,
    Matrix,
    Json,
}

/// Runs a parsed command, writing to stdout; returns the exit code.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Build { spec, json, out } => build(&spec, json, out),
        Command::Verify { spec, method, distance, threads, json, out } => {
            verify(&spec, method, distance, threads, json, out)
        }
        Command::Export { spec, format, out } => export(&spec, format, out),
        Command::Catalog { action: CatalogAction::List } => catalog_list(),
        Command::Catalog { action: CatalogAction::Show { name } } => catalog_show(&name),
        Command::EstimateSize { spec, seed, samples, json } => estimate_size(&spec, seed, samples, json),
    }
}

/// A loaded spec and the code it builds.
pub struct Loaded {
    pub source: SpecSource,
    pub budgets: Budgets,
    pub code: GCCode,
}

pub fn load(path: &str) -> Result<Loaded, CliError> {
    let source = SpecSource::load(path)?;
    let budgets = Budgets::from_env(source.budgets())?;
    let spec = source.to_gc_spec(&budgets)?;
    let code = GCCode::build_with_budget(spec, budgets.enumeration)?;
    Ok(Loaded { source, budgets, code })
}

fn header(command: &str, budgets: &Budgets) -> serde_json::Map<String, Value> {
    let mut map = serde_json::Map::new();
    map.insert("tool".into(), json!("gcqc"));
    map.insert("version".into(), json!(VERSION));
    map.insert("command".into(), json!(command));
    map.insert("budgets".into(), serde_json::to_value(budgets).expect("budgets serialize"));
    map
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Prints text or JSON, and writes the JSON to `out` if asked.
fn emit(text: &str, report: &Value, json: bool, out: Option<PathBuf>) -> Result<(), CliError> {
    let rendered = pretty(report);
    if let Some(path) = out {
        write_file(&path, &rendered)?;
    }
    print!("{}", if json { &rendered } else { text });
    Ok(())
}

fn build(path: &str, json: bool, out: Option<PathBuf>) -> Result<u8, CliError> {
    let Loaded { budgets, code, .. } = load(path)?;
    let mut map = header("build", &budgets);
    map.insert("summary".into(), json!(report::summary_line(&code)));
    map.insert("parameters".into(), serde_json::to_value(code.parameters()).expect("parameters serialize"));
    map.insert("additivity".into(), serde_json::to_value(code.is_additive()).expect("additivity serializes"));
    let outer: Vec<String> = code.outer().iter().map(OuterCode::describe).collect();
    map.insert("outer".into(), json!(outer));
    let cert = certify_theorem1(&code, None);
    map.insert("certificate".into(), serde_json::to_value(&cert).expect("certificate serializes"));
    let text = format!("gcqc {VERSION}\n{}", report::parameters(&code, &report::budgets(&budgets)));
    emit(&text, &Value::Object(map), json, out)?;
    Ok(EXIT_OK)
}

fn verify(
    path: &str,
    method: Method,
    distance: Option<u32>,
    threads: Option<usize>,
    json: bool,
    out: Option<PathBuf>,
) -> Result<u8, CliError> {
    let Loaded { budgets, code, .. } = load(path)?;
    let cert: DistanceCertificate = match method {
        Method::Lowweight => {
            let target = distance.ok_or_else(|| CliError::Input("--method lowweight needs --distance".into()))?;
            let options = LowWeightOptions { threads, budget: budgets.scan, ..LowWeightOptions::default() };
            verify_lowweight(&code, target, options)?
        }
        Method::Exhaustive => {
            let union = UnionCode::from_gc(&code, budgets.enumeration)?;
            verify_exhaustive(&union, ExhaustiveMethod::Pairwise, distance, budgets.enumeration)?
        }
        Method::Certificate => certify_theorem1(&code, distance),
    };
    let mut map = header("verify", &budgets);
    map.insert("summary".into(), json!(report::summary_line(&code)));
    map.insert("certificate".into(), serde_json::to_value(&cert).expect("certificate serializes"));
    let text = format!(
        "gcqc {VERSION}\n{}\n{}{}\n",
        report::summary_line(&code),
        report::certificate(&cert),
        report::budgets(&budgets)
    );
    emit(&text, &Value::Object(map), json, out)?;
    Ok(match cert.status {
        CertificateStatus::ProvedExact | CertificateStatus::ProvedLowerBound => EXIT_OK,
        CertificateStatus::Refuted => EXIT_REFUTED,
        CertificateStatus::Conditional => EXIT_INCONCLUSIVE,
    })
}

/// Stabilizer of `N(S_{r-1})^N`, whose cosets the union code is made of.
fn base_export(code: &GCCode) -> Result<StabilizerExport, CliError> {
    let residual = AdditiveSymplecticCode::new(code.p(), code.n(), &code.residual_basis())?;
    Ok(StabilizerExport::from_generators(code.p(), code.n(), residual.dual().basis()))
}

fn outer_lines(code: &GCCode) -> Vec<String> {
    code.outer().iter().enumerate().map(|(i, a)| format!("A{}: {}", i + 1, a.describe())).collect()
}

fn export(path: &str, format: Format, out: Option<PathBuf>) -> Result<u8, CliError> {
    let Loaded { source, code, .. } = load(path)?;
    let additive = code.is_additive().additive;
    let stabilizer = if additive { code.export_stabilizer()?.clone() } else { base_export(&code)? };
    let text = match format {
        Format::Pauli | Format::Matrix => {
            let f = if format == Format::Pauli { ExportFormat::Pauli } else { ExportFormat::Matrix };
            let mut text = stabilizer.render(f);
            if !additive {
                text.push_str(
                    "# nonadditive: the code is a union of cosets of the normalizer of the generators above\n",
                );
                text.push_str(&format!(
                    "# selected by the outer codes, log2 dimension {:.4}\n",
                    code.parameters().log2_dimension
                ));
                for line in outer_lines(&code) {
                    text.push_str(&format!("# {line}\n"));
                }
            }
            text
        }
        Format::Json => {
            let key = if additive { "generators" } else { "base_generators" };
            let mut map = serde_json::Map::new();
            map.insert("format".into(), json!("gcqc-export"));
            map.insert("version".into(), json!(VERSION));
            map.insert("n".into(), json!(stabilizer.n));
            map.insert("k".into(), json!(code.parameters().k));
            map.insert("log2_dimension".into(), json!(code.parameters().log2_dimension));
            map.insert("p".into(), json!(stabilizer.p));
            map.insert("additive".into(), json!(additive));
            map.insert(key.into(), json!(stabilizer.paulis()));
            map.insert("outer".into(), json!(outer_lines(&code)));
            map.insert("spec".into(), source.to_value());
            pretty(&Value::Object(map))
        }
    };
    match out {
        Some(p) => write_file(&p, &text)?,
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

fn catalog_list() -> Result<u8, CliError> {
    let entries = catalog::entries();
    let width = entries.iter().map(|e| e.display_name().len()).max().unwrap_or(0);
    for e in entries {
        println!("{:width$}  {}", e.display_name(), e.summary);
    }
    Ok(EXIT_OK)
}

fn catalog_show(name: &str) -> Result<u8, CliError> {
    let (entry, _) = catalog::lookup(name)?;
    let obj = catalog::get(name)?;
    println!("{name} ({})", obj.kind());
    println!("{}", entry.summary);
    println!("verified by: {}", entry.recipe);
    match obj {
        CatalogObject::Code(c) => {
            println!("parameters: {}", c.params());
            for g in c.generators() {
                println!("  {}", g.to_pauli_string().unwrap_or_else(|_| format!("{:?}", g.to_digits())));
            }
        }
        CatalogObject::Chain(c) => {
            let sizes = c.alphabet_sizes();
            for (i, code) in c.codes().iter().enumerate() {
                let layer =
                    if i == 0 { String::new() } else { format!(", {} cosets below level {}", sizes[i - 1], i - 1) };
                println!("level {i}: {}{layer}", code.params());
            }
        }
        CatalogObject::Spec(s) => {
            let budgets = Budgets::from_env(None)?;
            let code = GCCode::build_with_budget((*s).clone(), budgets.enumeration)?;
            print!("{}", report::parameters(&code, &report::budgets(&budgets)));
        }
    }
    Ok(EXIT_OK)
}

fn estimate_size(path: &str, seed: u64, samples: u64, json: bool) -> Result<u8, CliError> {
    let Loaded { budgets, code, .. } = load(path)?;
    let params = code.parameters();
    let fixed: f64 = params.log2_dimension - params.outer_sizes.iter().map(SizeRecord::log2).sum::<f64>();
    let mut total = fixed;
    let mut levels = Vec::new();
    let mut text = format!("gcqc {VERSION}\n{}\n", report::summary_line(&code));
    for (i, a) in code.outer().iter().enumerate() {
        let (record, method) = match a {
            OuterCode::Linear(c) => (c.size(), "linear"),
            OuterCode::SubAlphabet(s) if s.is_enumerated() => (s.size().clone(), "enumerated"),
            OuterCode::SubAlphabet(s) => (s.estimate_size(seed, samples)?, "monte-carlo"),
        };
        total += record.log2();
        text.push_str(&format!("A{}: {} ({method}): {}\n", i + 1, a.describe(), report::size(&record)));
        if let OuterCode::SubAlphabet(s) = a {
            text.push_str(&format!("A{}: {}\n", i + 1, report::size(&s.pigeonhole())));
        }
        levels.push(json!({ "level": i + 1, "code": a.describe(), "method": method, "size": record }));
    }
    text.push_str(&format!("log2 dimension: {total:.4}\n{}\n", report::budgets(&budgets)));
    let mut map = header("estimate-size", &budgets);
    map.insert("seed".into(), json!(seed));
    map.insert("samples".into(), json!(samples));
    map.insert("levels".into(), json!(levels));
    map.insert("log2_dimension".into(), json!(total));
    emit(&text, &Value::Object(map), json, None)?;
    Ok(EXIT_OK)
}
