//! Named stabilizer codes, nested chains and complete GC specifications.
//!
//! Every entry checks its own parameters the first time it is requested and
//! is shared afterwards. Names take an optional integer argument, as in
//! `qhamming(3)` or `full(6)`.

mod codes;
mod examples;
mod search;

pub use codes::QHAMMING_MAX;
pub use search::{find_nested_subcode, find_nested_subcode_with_budget, SEARCH_BUDGET};

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::distance::{chain_level_distances, min_symplectic_weight};
use crate::error::{Error, Result};
use crate::gc::{GCCode, GCSpec};
use crate::symplectic::{InnerDistanceStatus, NestedStabilizerChain, StabilizerCode};

/// Codes whose normalizer has at most this many words are checked by
/// enumeration; larger ones by a weight scan.
const VERIFY_BUDGET: u64 = 1 << 16;

/// Largest length accepted by `full(n)`.
const FULL_MAX: u32 = 4096;

/// A constructed catalog object.
#[derive(Debug, Clone)]
pub enum CatalogObject {
    Code(Arc<StabilizerCode>),
    Chain(Arc<NestedStabilizerChain>),
    Spec(Arc<GCSpec>),
}

impl CatalogObject {
    pub fn kind(&self) -> &'static str {
        match self {
            CatalogObject::Code(_) => "code",
            CatalogObject::Chain(_) => "chain",
            CatalogObject::Spec(_) => "spec",
        }
    }
}

/// `[[n, k, d]]` with `d` the minimum nonzero weight of the normalizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: u32,
}

impl std::fmt::Display for CodeParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.d)
    }
}

/// Parameters an entry must reproduce.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Expected {
    Code(CodeParams),
    Chain {
        codes: Vec<CodeParams>,
        /// Minimum weights of the coset layers, deepest last.
        level_distances: Vec<u32>,
    },
    Spec {
        n: usize,
        log2_dimension: f64,
        k: Option<u64>,
        additive: bool,
        bound: u32,
    },
}

/// Tolerance on expected `log2` dimensions.
const LOG2_TOLERANCE: f64 = 5e-4;

/// A family of catalog objects sharing a constructor.
pub struct CatalogEntry {
    pub name: &'static str,
    /// Inclusive range of the integer argument, for parameterized names.
    pub argument: Option<(u32, u32)>,
    pub summary: &'static str,
    /// How the entry checks itself.
    pub recipe: &'static str,
    expected: fn(u32) -> Expected,
    build: fn(u32) -> Result<CatalogObject>,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry").field("name", &self.name).field("argument", &self.argument).finish()
    }
}

impl CatalogEntry {
    pub fn expected(&self, argument: u32) -> Expected {
        (self.expected)(argument)
    }

    /// The name as written with an argument, e.g. `qhamming(m)`.
    pub fn display_name(&self) -> String {
        match self.argument {
            Some(_) => format!("{}({})", self.name, if self.name.starts_with("full") { "n" } else { "m" }),
            None => self.name.to_string(),
        }
    }
}

fn code(n: usize, k: usize, d: u32) -> CodeParams {
    CodeParams { n, k, d }
}

fn qhamming_n(m: u32) -> usize {
    (4usize.pow(m) - 1) / 3
}

const CODE_RECIPE: &str = "minimum normalizer weight by enumeration, or by weight scan for large normalizers";
const CHAIN_RECIPE: &str = "nesting, member codes, and the minimum weight of every coset layer";
const SPEC_RECIPE: &str = "build, then compare length, dimension, additivity and the composite bound";

static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "full",
        argument: Some((1, FULL_MAX)),
        summary: "the whole space [[n,n,1]]",
        recipe: "trivial",
        expected: |n| Expected::Code(code(n as usize, n as usize, 1)),
        build: |n| Ok(CatalogObject::Code(Arc::new(StabilizerCode::full(2, n as usize)))),
    },
    CatalogEntry {
        name: "five_qubit",
        argument: None,
        summary: "cyclic five-qubit code",
        recipe: CODE_RECIPE,
        expected: |_| Expected::Code(code(5, 1, 3)),
        build: |_| verified_code(codes::five_qubit()?, code(5, 1, 3)),
    },
    CatalogEntry {
        name: "steane",
        argument: None,
        summary: "CSS code of the [7,4,3] Hamming code",
        recipe: CODE_RECIPE,
        expected: |_| Expected::Code(code(7, 1, 3)),
        build: |_| verified_code(codes::steane()?, code(7, 1, 3)),
    },
    CatalogEntry {
        name: "hexacode",
        argument: None,
        summary: "stabilizer state of the GF(4) hexacode",
        recipe: CODE_RECIPE,
        expected: |_| Expected::Code(code(6, 0, 4)),
        build: |_| verified_code(codes::hexacode()?, code(6, 0, 4)),
    },
    CatalogEntry {
        name: "iceberg6",
        argument: None,
        summary: "stabilized by XXXXXX and ZZZZZZ",
        recipe: CODE_RECIPE,
        expected: |_| Expected::Code(code(6, 4, 2)),
        build: |_| verified_code(codes::iceberg(6)?, code(6, 4, 2)),
    },
    CatalogEntry {
        name: "eight_3_3",
        argument: None,
        summary: "[[8,3,3]] code",
        recipe: CODE_RECIPE,
        expected: |_| Expected::Code(code(8, 3, 3)),
        build: |_| verified_code(codes::eight_3_3()?, code(8, 3, 3)),
    },
    CatalogEntry {
        name: "eight_6_2",
        argument: None,
        summary: "first [[8,6,2]] whose stabilizer lies inside that of eight_3_3",
        recipe: "exhaustive subgroup search, then the code recipe",
        expected: |_| Expected::Code(code(8, 6, 2)),
        build: |_| {
            let big = get_code("eight_3_3")?;
            verified_code(find_nested_subcode(&big, 6, 2)?, code(8, 6, 2))
        },
    },
    CatalogEntry {
        name: "qhamming",
        argument: Some((2, QHAMMING_MAX)),
        summary: "quantum Hamming code [[(4^m-1)/3, n-2m, 3]] from the GF(4) simplex code",
        recipe: CODE_RECIPE,
        expected: |m| {
            let n = qhamming_n(m);
            Expected::Code(code(n, n - 2 * m as usize, 3))
        },
        build: |m| {
            let n = qhamming_n(m);
            verified_code(codes::qhamming(m)?, code(n, n - 2 * m as usize, 3))
        },
    },
    CatalogEntry {
        name: "hexacode_chain",
        argument: None,
        summary: "[[6,6,1]] ⊃ [[6,4,2]] ⊃ [[6,0,4]]",
        recipe: CHAIN_RECIPE,
        expected: |_| Expected::Chain {
            codes: vec![code(6, 6, 1), code(6, 4, 2), code(6, 0, 4)],
            level_distances: vec![1, 2, 4],
        },
        build: |_| chain_of(&["full(6)", "iceberg6", "hexacode"], vec![1, 2, 4]),
    },
    CatalogEntry {
        name: "five_chain",
        argument: None,
        summary: "[[5,5,1]] ⊃ [[5,1,3]]",
        recipe: CHAIN_RECIPE,
        expected: |_| Expected::Chain { codes: vec![code(5, 5, 1), code(5, 1, 3)], level_distances: vec![1, 3] },
        build: |_| chain_of(&["full(5)", "five_qubit"], vec![1, 3]),
    },
    CatalogEntry {
        name: "steane_chain",
        argument: None,
        summary: "[[7,7,1]] ⊃ [[7,1,3]]",
        recipe: CHAIN_RECIPE,
        expected: |_| Expected::Chain { codes: vec![code(7, 7, 1), code(7, 1, 3)], level_distances: vec![1, 3] },
        build: |_| chain_of(&["full(7)", "steane"], vec![1, 3]),
    },
    CatalogEntry {
        name: "eight_chain",
        argument: None,
        summary: "[[8,8,1]] ⊃ [[8,6,2]] ⊃ [[8,3,3]]",
        recipe: CHAIN_RECIPE,
        expected: |_| Expected::Chain {
            codes: vec![code(8, 8, 1), code(8, 6, 2), code(8, 3, 3)],
            level_distances: vec![1, 2, 3],
        },
        build: |_| chain_of(&["full(8)", "eight_6_2", "eight_3_3"], vec![1, 2, 3]),
    },
    CatalogEntry {
        name: "qhamming_chain",
        argument: Some((2, QHAMMING_MAX)),
        summary: "[[n,n,1]] ⊃ qhamming(m)",
        recipe: CHAIN_RECIPE,
        expected: |m| {
            let n = qhamming_n(m);
            Expected::Chain { codes: vec![code(n, n, 1), code(n, n - 2 * m as usize, 3)], level_distances: vec![1, 3] }
        },
        build: |m| chain_of(&[&format!("full({})", qhamming_n(m)), &format!("qhamming({m})")], vec![1, 3]),
    },
    CatalogEntry {
        name: "paper_example",
        argument: Some((1, 4)),
        summary: "worked examples: 1 [[36,26,4]], 2 [[1365,1353,3]], 3 ((90,2^81.825,3)), 4 ((48,2^40.36,3))",
        recipe: SPEC_RECIPE,
        expected: example_expected,
        build: |k| verified_spec(examples::worked_example(k)?, example_expected(k)),
    },
    CatalogEntry {
        name: "steane_concatenation",
        argument: None,
        summary: "Steane chain at 65 positions with [65,63,3]_64: [[455,443,3]]",
        recipe: SPEC_RECIPE,
        expected: |_| spec_expected(455, Some(443), true, 3),
        build: |_| verified_spec(examples::steane_concatenation()?, spec_expected(455, Some(443), true, 3)),
    },
    CatalogEntry {
        name: "mixed_concatenation",
        argument: None,
        summary: "64 Steane positions and one [[21,15,3]] position with [65,63,3]_64: [[469,457,3]]",
        recipe: SPEC_RECIPE,
        expected: |_| spec_expected(469, Some(457), true, 3),
        build: |_| verified_spec(examples::mixed_concatenation()?, spec_expected(469, Some(457), true, 3)),
    },
];

fn spec_expected(n: usize, k: Option<u64>, additive: bool, bound: u32) -> Expected {
    Expected::Spec { n, log2_dimension: k.unwrap_or(0) as f64, k, additive, bound }
}

fn example_expected(k: u32) -> Expected {
    match k {
        1 => spec_expected(36, Some(26), true, 4),
        2 => spec_expected(1365, Some(1353), true, 3),
        // 18 + log2 ⌈16^18 / 17^2⌉
        3 => Expected::Spec { n: 90, log2_dimension: 81.825, k: None, additive: false, bound: 3 },
        // log2 164 + 15 + 18
        _ => Expected::Spec { n: 48, log2_dimension: 40.3576, k: None, additive: false, bound: 3 },
    }
}

fn verified_code(mut c: StabilizerCode, expected: CodeParams) -> Result<CatalogObject> {
    let w = min_symplectic_weight(c.normalizer(), expected.d, VERIFY_BUDGET)?;
    let got = code(c.n(), c.k(), w.value.unwrap_or(0));
    if got != expected || !w.exact {
        return Err(Error::Verification(format!("expected {expected}, constructed {got} (exact: {})", w.exact)));
    }
    c.set_distance(expected.d, InnerDistanceStatus::Verified);
    Ok(CatalogObject::Code(Arc::new(c)))
}

fn chain_of(names: &[&str], level_distances: Vec<u32>) -> Result<CatalogObject> {
    let codes = names.iter().map(|n| get_code(n).map(|c| (*c).clone())).collect::<Result<Vec<_>>>()?;
    let chain = NestedStabilizerChain::new(codes)?;
    let got: Vec<Option<u32>> =
        chain_level_distances(&chain, VERIFY_BUDGET).iter().map(|l| l.value().filter(|_| l.is_proved())).collect();
    let want: Vec<Option<u32>> = level_distances.iter().map(|&d| Some(d)).collect();
    if got != want {
        return Err(Error::Verification(format!("chain layer distances {got:?}, expected {level_distances:?}")));
    }
    Ok(CatalogObject::Chain(Arc::new(chain)))
}

fn verified_spec(spec: GCSpec, expected: Expected) -> Result<CatalogObject> {
    let Expected::Spec { n, log2_dimension, k, additive, bound } = expected else {
        unreachable!("spec entries carry spec expectations")
    };
    let code = GCCode::build(spec.clone())?;
    let params = code.parameters();
    let checks = [
        (params.n == n, format!("n = {}, expected {n}", params.n)),
        (params.k == k, format!("k = {:?}, expected {k:?}", params.k)),
        (
            k.is_some() || (params.log2_dimension - log2_dimension).abs() <= LOG2_TOLERANCE,
            format!("log2 dimension {:.4}, expected {log2_dimension}", params.log2_dimension),
        ),
        (
            code.is_additive().additive == additive,
            format!("additive = {}, expected {additive}", code.is_additive().additive),
        ),
        (
            params.bound.value == Some(bound) && params.bound.verified,
            format!("distance bound {:?} (verified: {}), expected {bound}", params.bound.value, params.bound.verified),
        ),
    ];
    if let Some((_, msg)) = checks.iter().find(|(ok, _)| !ok) {
        return Err(Error::Verification(msg.clone()));
    }
    Ok(CatalogObject::Spec(Arc::new(spec)))
}

/// All entry families.
pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

/// Splits `name(arg)` and finds its entry.
pub fn lookup(name: &str) -> Result<(&'static CatalogEntry, u32)> {
    let name = name.trim();
    let (base, arg) = match name.split_once('(') {
        Some((base, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(|| Error::UnknownEntry(name.into()))?;
            let value: u32 = inner.trim().parse().map_err(|_| Error::UnknownEntry(name.into()))?;
            (base.trim(), Some(value))
        }
        None => (name, None),
    };
    let entry = ENTRIES.iter().find(|e| e.name == base).ok_or_else(|| Error::UnknownEntry(name.into()))?;
    match (entry.argument, arg) {
        (None, None) => Ok((entry, 0)),
        (Some((lo, hi)), Some(v)) if (lo..=hi).contains(&v) => Ok((entry, v)),
        (Some((lo, hi)), _) => {
            Err(Error::UnknownEntry(format!("{name}: {} takes an argument in {lo}..={hi}", entry.name)))
        }
        (None, Some(_)) => Err(Error::UnknownEntry(format!("{name}: {} takes no argument", entry.name))),
    }
}

fn canonical(entry: &CatalogEntry, arg: u32) -> String {
    match entry.argument {
        Some(_) => format!("{}({arg})", entry.name),
        None => entry.name.to_string(),
    }
}

fn cache() -> &'static Mutex<HashMap<String, CatalogObject>> {
    static CACHE: OnceLock<Mutex<HashMap<String, CatalogObject>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The verified object named `name`, built on first use.
pub fn get(name: &str) -> Result<CatalogObject> {
    let (entry, arg) = lookup(name)?;
    let key = canonical(entry, arg);
    if let Some(obj) = cache().lock().expect("catalog cache").get(&key) {
        return Ok(obj.clone());
    }
    // Built outside the lock: constructors request other entries.
    let obj = (entry.build)(arg)?;
    Ok(cache().lock().expect("catalog cache").entry(key).or_insert(obj).clone())
}

fn wrong_kind(name: &str, want: &str, got: &CatalogObject) -> Error {
    Error::UnknownEntry(format!("{name} is a {}, not a {want}", got.kind()))
}

pub fn get_code(name: &str) -> Result<Arc<StabilizerCode>> {
    match get(name)? {
        CatalogObject::Code(c) => Ok(c),
        other => Err(wrong_kind(name, "code", &other)),
    }
}

pub fn get_chain(name: &str) -> Result<Arc<NestedStabilizerChain>> {
    match get(name)? {
        CatalogObject::Chain(c) => Ok(c),
        other => Err(wrong_kind(name, "chain", &other)),
    }
}

pub fn get_spec(name: &str) -> Result<Arc<GCSpec>> {
    match get(name)? {
        CatalogObject::Spec(s) => Ok(s),
        other => Err(wrong_kind(name, "spec", &other)),
    }
}

pub(crate) fn chain(name: &str) -> Result<Arc<NestedStabilizerChain>> {
    get_chain(name)
}

pub fn five_qubit() -> Result<Arc<StabilizerCode>> {
    get_code("five_qubit")
}

pub fn steane() -> Result<Arc<StabilizerCode>> {
    get_code("steane")
}

pub fn qhamming(m: u32) -> Result<Arc<StabilizerCode>> {
    get_code(&format!("qhamming({m})"))
}

pub fn hexacode_chain() -> Result<Arc<NestedStabilizerChain>> {
    get_chain("hexacode_chain")
}

pub fn eight_chain() -> Result<Arc<NestedStabilizerChain>> {
    get_chain("eight_chain")
}

pub fn five_chain() -> Result<Arc<NestedStabilizerChain>> {
    get_chain("five_chain")
}

/// Worked example `k` in `1..=4` as a complete specification.
pub fn paper_example(k: u32) -> Result<GCSpec> {
    get_spec(&format!("paper_example({k})")).map(|s| (*s).clone())
}
