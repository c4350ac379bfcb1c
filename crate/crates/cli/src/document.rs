//! JSON form of a fold script. Rationals are strings (`"-1/2"`, `"3"`) so
//! the document is exact.

use std::collections::BTreeMap;

use multifold::algebra::{parse_rational, poly_parse};
use multifold::compiler::{FoldScript, FoldStep, StepKind};
use multifold::simulator::paper_extents;
use multifold::Rational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::{CliError, CliResult};

pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepRecord {
    pub kind: String,
    pub params: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtentsRecord {
    pub width: String,
    pub height: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub bound: String,
    pub step_count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FoldScriptDocument {
    pub version: u32,
    pub polynomial: String,
    pub steps: Vec<StepRecord>,
    pub extents: ExtentsRecord,
    pub metadata: Metadata,
}

fn rational(v: &Rational) -> Value {
    Value::String(v.to_string())
}

fn step_record(step: &FoldStep) -> StepRecord {
    let mut params = BTreeMap::new();
    match step {
        FoldStep::OneCrease { unit } => {
            params.insert("unit".into(), rational(unit));
        }
        FoldStep::SeedPair { leading } => {
            params.insert("leading".into(), rational(leading));
        }
        FoldStep::IterationStep {
            index,
            coefficient,
            offset,
        } => {
            params.insert("index".into(), Value::from(*index));
            params.insert("coefficient".into(), rational(coefficient));
            params.insert("offset".into(), rational(offset));
        }
        _ => {}
    }
    StepRecord {
        kind: step.kind().name().to_string(),
        params,
    }
}

impl FoldScriptDocument {
    pub fn from_script(script: &FoldScript) -> CliResult<Self> {
        let extents = paper_extents(script, script.bound())?;
        Ok(FoldScriptDocument {
            version: VERSION,
            polynomial: script.source().to_string(),
            steps: script.steps().iter().map(step_record).collect(),
            extents: ExtentsRecord {
                width: extents.width.to_string(),
                height: extents.height.to_string(),
            },
            metadata: Metadata {
                bound: script.bound().to_string(),
                step_count: script.steps().len(),
            },
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Parse(format!("invalid script document: {e}")))
    }

    /// Rebuilds the script, checking the version, step count, and extents.
    pub fn to_script(&self) -> CliResult<FoldScript> {
        if self.version != VERSION {
            return Err(malformed(format!("unsupported version {}", self.version)));
        }
        if self.metadata.step_count != self.steps.len() {
            return Err(malformed(format!(
                "metadata lists {} steps but the document has {}",
                self.metadata.step_count,
                self.steps.len()
            )));
        }
        let source = poly_parse(&self.polynomial)?;
        let bound = parse_field(&self.metadata.bound, "metadata.bound")?;
        let steps = self
            .steps
            .iter()
            .enumerate()
            .map(|(i, r)| parse_step(i, r))
            .collect::<CliResult<Vec<_>>>()?;
        let script = FoldScript::from_parts(source, bound, steps);
        let extents = paper_extents(&script, script.bound())?;
        if extents.width.to_string() != self.extents.width
            || extents.height.to_string() != self.extents.height
        {
            return Err(malformed(format!(
                "extents {} x {} do not match the script (expected {} x {})",
                self.extents.width, self.extents.height, extents.width, extents.height
            )));
        }
        Ok(script)
    }
}

fn malformed(message: String) -> CliError {
    CliError::Core(multifold::Error::MalformedScript(message))
}

fn parse_field(text: &str, what: &str) -> CliResult<Rational> {
    parse_rational(text).map_err(|e| malformed(format!("{what}: {e}")))
}

fn parse_step(i: usize, record: &StepRecord) -> CliResult<FoldStep> {
    let kind = StepKind::from_name(&record.kind)
        .ok_or_else(|| malformed(format!("step {i}: unknown kind '{}'", record.kind)))?;
    let expected: &[&str] = match kind {
        StepKind::OneCrease => &["unit"],
        StepKind::SeedPair => &["leading"],
        StepKind::IterationStep => &["coefficient", "index", "offset"],
        _ => &[],
    };
    let keys: Vec<&str> = record.params.keys().map(String::as_str).collect();
    if keys != expected {
        return Err(malformed(format!(
            "step {i} ({kind}): expected params {expected:?}, found {keys:?}"
        )));
    }
    let rat = |key: &str| -> CliResult<Rational> {
        match &record.params[key] {
            Value::String(s) => parse_field(s, &format!("step {i} {key}")),
            other => Err(malformed(format!(
                "step {i} {key}: expected a \"p/q\" string, found {other}"
            ))),
        }
    };
    Ok(match kind {
        StepKind::ZeroCrease => FoldStep::ZeroCrease,
        StepKind::OneCrease => FoldStep::OneCrease { unit: rat("unit")? },
        StepKind::DiagonalReference => FoldStep::DiagonalReference,
        StepKind::PlaceSheetX => FoldStep::PlaceSheetX,
        StepKind::SeedPair => FoldStep::SeedPair {
            leading: rat("leading")?,
        },
        StepKind::IterationStep => FoldStep::IterationStep {
            index: record.params["index"]
                .as_u64()
                .and_then(|k| usize::try_from(k).ok())
                .ok_or_else(|| {
                    malformed(format!("step {i} index: expected a nonnegative integer"))
                })?,
            coefficient: rat("coefficient")?,
            offset: rat("offset")?,
        },
        StepKind::AlignmentCheck => FoldStep::AlignmentCheck,
    })
}
