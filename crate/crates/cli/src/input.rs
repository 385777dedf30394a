//! JSON input documents, one per subcommand.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Deserialize;
use tropigusa::igusa::{sextic_to_quintic, QuinticModel};
use tropigusa::metgraph::MetricGraph;
use tropigusa::redtype::PredicateReading;
use tropigusa::torsion::{CycleDivisorSpec, Genus2TorsionConfig, SecondPart};
use tropigusa::valfield::{ValuedField, ValuedScalar};
use tropigusa::BigRational;

use crate::error::CliError;

/// A scalar literal: a JSON integer or a string in the scalar grammar.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn scalar(&self, field: &ValuedField) -> Result<ValuedScalar, CliError> {
        match self {
            Literal::Int(n) => Ok(ValuedScalar::int(*n)),
            Literal::Text(s) => Ok(field.parse(s)?),
        }
    }

    fn rational(&self) -> Result<BigRational, CliError> {
        match self {
            Literal::Int(n) => Ok(BigRational::from_integer((*n).into())),
            Literal::Text(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let field = ValuedField::padic(2).expect("2 is prime");
    field
        .parse(s)?
        .as_rational()
        .ok_or_else(|| CliError::input("input.scalar", format!("{s:?} is not a rational number")))
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Padic { p: u64 },
    Tadic,
}

impl FieldSpec {
    pub fn field(self) -> Result<ValuedField, CliError> {
        match self {
            FieldSpec::Padic { p } => Ok(ValuedField::padic(p)?),
            FieldSpec::Tadic => Ok(ValuedField::tadic()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reading {
    #[default]
    Strict,
    AsPrinted,
}

impl From<Reading> for PredicateReading {
    fn from(r: Reading) -> Self {
        match r {
            Reading::Strict => PredicateReading::Strict,
            Reading::AsPrinted => PredicateReading::AsPrinted,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveInput {
    pub field: FieldSpec,
    /// `c0..c5` of `P(x) = c0 + c1 x + … + c5 x^5`.
    #[serde(default)]
    pub quintic: Option<Vec<Literal>>,
    /// `c0..c6` of a sextic, together with one of its roots.
    #[serde(default)]
    pub sextic: Option<Vec<Literal>>,
    #[serde(default)]
    pub root: Option<Literal>,
    #[serde(default)]
    pub reading: Reading,
}

impl CurveInput {
    pub fn model(&self, field: &ValuedField) -> Result<QuinticModel, CliError> {
        let scalars = |cs: &[Literal]| -> Result<Vec<ValuedScalar>, CliError> {
            cs.iter().map(|c| c.scalar(field)).collect()
        };
        match (&self.quintic, &self.sextic, &self.root) {
            (Some(c), None, None) => {
                let c: [ValuedScalar; 6] = scalars(c)?.try_into().map_err(|v: Vec<_>| {
                    CliError::input(
                        "input.coefficient_count",
                        format!("quintic needs 6 coefficients, got {}", v.len()),
                    )
                })?;
                Ok(QuinticModel::from_monomial(c)?)
            }
            (None, Some(c), Some(r)) => {
                let c: [ValuedScalar; 7] = scalars(c)?.try_into().map_err(|v: Vec<_>| {
                    CliError::input(
                        "input.coefficient_count",
                        format!("sextic needs 7 coefficients, got {}", v.len()),
                    )
                })?;
                Ok(sextic_to_quintic(&c, &r.scalar(field)?)?)
            }
            _ => Err(CliError::input(
                "input.schema",
                "give either \"quintic\" or both \"sextic\" and \"root\"",
            )),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeInput {
    pub a: usize,
    pub b: usize,
    pub length: Literal,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphInput {
    pub genus: Vec<u32>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub edges: Vec<EdgeInput>,
}

impl GraphInput {
    pub fn graph(&self) -> Result<MetricGraph, CliError> {
        let triples = self
            .edges
            .iter()
            .map(|e| Ok((e.a, e.b, e.length.rational()?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        let mut g = MetricGraph::from_triples(self.genus.clone(), &triples)?;
        if let Some(labels) = &self.labels {
            if labels.len() != self.genus.len() {
                return Err(CliError::input(
                    "input.label_count",
                    format!("{} labels for {} vertices", labels.len(), self.genus.len()),
                ));
            }
            g.set_labels(labels.clone());
        }
        Ok(g)
    }
}

/// A divisor on the cycle: coefficient list, or `[multiplicity, index]` pairs.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum DivisorInput {
    Coefficients(Vec<i64>),
    Points { points: Vec<(i64, i64)> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleInput {
    pub n: usize,
    pub divisors: Vec<DivisorInput>,
}

impl CycleInput {
    pub fn specs(&self) -> Result<Vec<CycleDivisorSpec>, CliError> {
        self.divisors
            .iter()
            .map(|d| match d {
                DivisorInput::Coefficients(a) => Ok(CycleDivisorSpec::from_i64(a)?),
                DivisorInput::Points { points } => {
                    Ok(CycleDivisorSpec::from_points(self.n, points)?)
                }
            })
            .collect()
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SecondInput {
    pub bridge: usize,
    pub e2: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Genus2Input {
    pub e1: usize,
    pub i: usize,
    pub j: usize,
    #[serde(default)]
    pub second: Option<SecondInput>,
}

impl Genus2Input {
    pub fn config(&self) -> Result<Genus2TorsionConfig, CliError> {
        let cfg = Genus2TorsionConfig::new(self.e1, self.i, self.j)?;
        Ok(match &self.second {
            Some(s) => cfg.with_second(SecondPart {
                bridge: s.bridge,
                e2: s.e2,
            }),
            None => cfg,
        })
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanInput {
    pub e1_max: usize,
}

pub fn read<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input("input.read", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        let code = if e.is_data() {
            "input.schema"
        } else {
            "input.json"
        };
        CliError::input(code, format!("{}: {e}", path.display()))
    })
}
