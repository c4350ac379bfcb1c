use std::fmt;
use std::str::FromStr;

use multifold::algebra::{parse_decimal, parse_rational, ten_to_minus};
use multifold::Rational;
use num_traits::Signed;

use crate::{CliError, CliResult};

pub const TOLERANCE_ENV: &str = "MULTIFOLD_DEFAULT_TOL";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Svg,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Format> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "svg" => Ok(Format::Svg),
            other => Err(CliError::Usage(format!(
                "unknown format '{other}' (expected text, json, or svg)"
            ))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Svg => "svg",
        })
    }
}

/// Options shared by all commands, already parsed and validated.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub tolerance: Rational,
    pub bound: Option<Rational>,
    pub format: Format,
    pub x: Option<Rational>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            tolerance: ten_to_minus(12),
            bound: None,
            format: Format::Text,
            x: None,
        }
    }
}

impl RunConfig {
    /// Builds a config from raw flag text. `tolerance` falls back to
    /// `env_tolerance`, then to `1e-12`.
    pub fn from_flags(
        tolerance: Option<&str>,
        env_tolerance: Option<&str>,
        bound: Option<&str>,
        format: Option<&str>,
        x: Option<&str>,
    ) -> CliResult<RunConfig> {
        let usage =
            |flag: &str, e: multifold::Error| CliError::Usage(format!("invalid {flag}: {e}"));
        let tolerance = match tolerance.or(env_tolerance) {
            Some(t) => parse_decimal(t.trim()).map_err(|e| usage("--tolerance", e))?,
            None => ten_to_minus(12),
        };
        if !tolerance.is_positive() {
            return Err(CliError::Usage("--tolerance must be positive".into()));
        }
        let bound = bound
            .map(|b| parse_rational(b.trim()).map_err(|e| usage("--bound", e)))
            .transpose()?;
        if bound.as_ref().is_some_and(|b| !b.is_positive()) {
            return Err(CliError::Usage("--bound must be positive".into()));
        }
        let x = x
            .map(|x| parse_rational(x.trim()).map_err(|e| usage("--x", e)))
            .transpose()?;
        let format = format.map(str::parse).transpose()?.unwrap_or_default();
        Ok(RunConfig {
            tolerance,
            bound,
            format,
            x,
        })
    }

    /// The bound to use given the computed Cauchy bound, with a warning when
    /// an override is too small and was raised.
    pub fn effective_bound(&self, cauchy: &Rational) -> (Rational, Option<String>) {
        match &self.bound {
            Some(b) if b >= cauchy => (b.clone(), None),
            Some(b) => (
                cauchy.clone(),
                Some(format!(
                    "warning: --bound {b} is below the root bound {cauchy}; using {cauchy}"
                )),
            ),
            None => (cauchy.clone(), None),
        }
    }
}
