//! JSON spec files and their translation into a [`GCSpec`].

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use gcqc::catalog::{self, CatalogObject};
use gcqc::classical::{LinearCode, OuterCode, SubAlphabetCode, SubAlphabetStrategy};
use gcqc::galois::FiniteField;
use gcqc::gc::{parse_generator_line, GCSpec};
use gcqc::symplectic::{NestedStabilizerChain, StabilizerCode};

use crate::budget::Budgets;
use crate::CliError;

/// A spec document: a construction, a catalog reference, or an export that
/// embeds one of these under `spec`.
#[derive(Debug, Clone)]
pub enum SpecSource {
    File(SpecFile),
    Catalog(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub p: u32,
    pub inner: InnerSpec,
    pub outer: Vec<OuterSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub label_permutations: Vec<Option<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budgets: Option<BudgetSpec>,
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BudgetSpec {
    pub enumeration: Option<u64>,
    pub scan: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum InnerSpec {
    /// One chain at every position.
    Chain(ChainSpec),
    /// One chain per position.
    Positions(Vec<ChainSpec>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChainSpec {
    /// Name of a catalog chain.
    Named(String),
    /// Codes from largest to smallest.
    Codes(Vec<CodeSpec>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CodeSpec {
    Named(String),
    Generators {
        generators: Vec<String>,
        /// Length, needed only when there are no generators.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum OuterSpec {
    Mds {
        q: u64,
        n: usize,
        k: usize,
    },
    Explicit {
        q: u64,
        generators: Vec<Vec<u32>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        distance: Option<u32>,
    },
    Subalphabet {
        parent: Box<OuterSpec>,
        s: u32,
        #[serde(default)]
        strategy: Strategy,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        samples: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    #[default]
    BestCoset,
    ZeroShift,
    MonteCarlo,
}

const DEFAULT_SAMPLES: u64 = 1_000_000;

impl SpecSource {
    /// Parses a spec document. Accepted top-level shapes: a [`SpecFile`],
    /// `{"catalog": NAME}`, or an export carrying either under `spec`.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let value: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed JSON: {e}")))?;
        Self::from_value(value, Some(text))
    }

    /// `text`, when given, is the source of `value`; parsing it again gives
    /// diagnostics with line numbers.
    fn from_value(value: Value, text: Option<&str>) -> Result<Self, CliError> {
        if let Value::Object(map) = &value {
            if let Some(inner) = map.get("spec") {
                return Self::from_value(inner.clone(), None);
            }
            if let Some(name) = map.get("catalog") {
                if map.len() != 1 {
                    return Err(CliError::Input("a catalog reference takes no other keys".into()));
                }
                return match name {
                    Value::String(s) => Ok(SpecSource::Catalog(s.clone())),
                    _ => Err(CliError::Input("field `catalog`: expected a string".into())),
                };
            }
        }
        let parsed = match text {
            Some(text) => serde_json::from_str::<SpecFile>(text),
            None => serde_json::from_value::<SpecFile>(value),
        };
        parsed.map(SpecSource::File).map_err(|e| CliError::Input(format!("invalid spec: {e}")))
    }

    pub fn load(path: &str) -> Result<Self, CliError> {
        if let Some(name) = path.strip_prefix("catalog:") {
            return Ok(SpecSource::Catalog(name.to_string()));
        }
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
        Self::parse(&text)
    }

    /// JSON form embedded in exports.
    pub fn to_value(&self) -> Value {
        match self {
            SpecSource::File(f) => serde_json::to_value(f).expect("spec serializes"),
            SpecSource::Catalog(name) => serde_json::json!({ "catalog": name }),
        }
    }

    pub fn budgets(&self) -> Option<BudgetSpec> {
        match self {
            SpecSource::File(f) => f.budgets,
            SpecSource::Catalog(_) => None,
        }
    }

    pub fn to_gc_spec(&self, budgets: &Budgets) -> Result<GCSpec, CliError> {
        match self {
            SpecSource::Catalog(name) => Ok((*catalog::get_spec(name)?).clone()),
            SpecSource::File(f) => f.to_gc_spec(budgets),
        }
    }
}

impl SpecFile {
    pub fn to_gc_spec(&self, budgets: &Budgets) -> Result<GCSpec, CliError> {
        let outer = self
            .outer
            .iter()
            .enumerate()
            .map(|(i, o)| o.build(budgets).map_err(|e| e.context(&format!("outer[{i}]"))))
            .collect::<Result<Vec<_>, _>>()?;
        let positions = match &self.inner {
            InnerSpec::Chain(c) => {
                let chain = c.build(self.p).map_err(|e| e.context("inner.chain"))?;
                vec![chain; outer.first().map_or(1, OuterCode::length)]
            }
            InnerSpec::Positions(list) => list
                .iter()
                .enumerate()
                .map(|(j, c)| c.build(self.p).map_err(|e| e.context(&format!("inner.positions[{j}]"))))
                .collect::<Result<Vec<_>, _>>()?,
        };
        if positions.is_empty() {
            return Err(CliError::Input("inner: no positions".into()));
        }
        let mut spec = GCSpec::mixed(positions, outer);
        spec.p = self.p;
        if !self.label_permutations.is_empty() {
            if self.label_permutations.len() != spec.outer.len() {
                return Err(CliError::Input(format!(
                    "label_permutations: {} entries for {} outer codes",
                    self.label_permutations.len(),
                    spec.outer.len()
                )));
            }
            spec.label_permutations = self.label_permutations.clone();
        }
        Ok(spec)
    }
}

impl ChainSpec {
    fn build(&self, p: u32) -> Result<Arc<NestedStabilizerChain>, CliError> {
        let chain = match self {
            ChainSpec::Named(name) => catalog::get_chain(name)?,
            ChainSpec::Codes(codes) => {
                let codes = codes
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c.build(p).map_err(|e| e.context(&format!("[{i}]"))))
                    .collect::<Result<Vec<_>, _>>()?;
                Arc::new(NestedStabilizerChain::new(codes)?)
            }
        };
        if chain.p() != p {
            return Err(CliError::Input(format!("chain is over p = {}, spec has p = {p}", chain.p())));
        }
        Ok(chain)
    }
}

impl CodeSpec {
    fn build(&self, p: u32) -> Result<StabilizerCode, CliError> {
        match self {
            CodeSpec::Named(name) => match catalog::get(name)? {
                CatalogObject::Code(c) => Ok((*c).clone()),
                other => Err(CliError::Input(format!("{name:?} is a {}, expected a code", other.kind()))),
            },
            CodeSpec::Generators { generators, n } => {
                let rows = generators
                    .iter()
                    .enumerate()
                    .map(|(i, g)| {
                        parse_generator_line(g, p).map_err(|e| CliError::from(e).context(&format!("generators[{i}]")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let len = match (rows.first(), n) {
                    (Some(g), _) => g.n(),
                    (None, Some(n)) => *n,
                    (None, None) => return Err(CliError::Input("an empty generator list needs `n`".into())),
                };
                Ok(StabilizerCode::new(p, len, &rows)?)
            }
        }
    }
}

impl OuterSpec {
    fn linear(&self, budgets: &Budgets) -> Result<LinearCode, CliError> {
        match self {
            OuterSpec::Mds { q, n, k } => Ok(LinearCode::mds(field(*q)?, *n, *k)?),
            OuterSpec::Explicit { q, generators, distance } => {
                let mut code = LinearCode::new(field(*q)?, generators.clone())?;
                if let Some(d) = distance {
                    code.verify_claim(*d, budgets.enumeration);
                }
                Ok(code)
            }
            OuterSpec::Subalphabet { .. } => Err(CliError::Input("a sub-alphabet parent must be linear".into())),
        }
    }

    fn build(&self, budgets: &Budgets) -> Result<OuterCode, CliError> {
        match self {
            OuterSpec::Subalphabet { parent, s, strategy, seed, samples } => {
                let parent = parent.linear(budgets).map_err(|e| e.context("parent"))?;
                let strategy = match strategy {
                    Strategy::BestCoset => SubAlphabetStrategy::BestCoset { budget: budgets.enumeration },
                    Strategy::ZeroShift => SubAlphabetStrategy::ZeroShift,
                    Strategy::MonteCarlo => SubAlphabetStrategy::MonteCarlo {
                        seed: seed.unwrap_or(0),
                        samples: samples.unwrap_or(DEFAULT_SAMPLES),
                    },
                };
                Ok(OuterCode::SubAlphabet(SubAlphabetCode::new(parent, *s, strategy)?))
            }
            linear => Ok(OuterCode::Linear(linear.linear(budgets)?)),
        }
    }
}

fn field(q: u64) -> Result<Arc<FiniteField>, CliError> {
    Ok(Arc::new(FiniteField::with_order(q)?))
}
