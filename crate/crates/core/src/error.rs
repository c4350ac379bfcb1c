use thiserror::Error;

use crate::algebra::{Interval, Rational};

/// Errors raised across the algebra, compiler, simulator, and solver layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("zero denominator at position {position}")]
    ZeroDenominator { position: usize },

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("operation requires degree >= 1, got a constant polynomial")]
    ConstantPolynomial,

    #[error("leading coefficient must be nonzero")]
    ZeroLeadingCoefficient,

    #[error("malformed fold script: {0}")]
    MalformedScript(String),

    #[error("x = {x} lies outside the sheet; allowed range is [0, {width}]")]
    OutsideSheet {
        x: Box<Rational>,
        width: Box<Rational>,
    },

    #[error("bound must be positive, got {0}")]
    NonPositiveBound(Rational),

    #[error("tolerance must be positive")]
    NonPositiveTolerance,

    #[error("no root in {0}")]
    NoRoot(Box<Interval>),

    #[error("{interval} contains {count} roots; split the interval first")]
    NotIsolated {
        interval: Box<Interval>,
        count: usize,
    },

    #[error("gap touches zero without changing sign on {0}; source is not squarefree")]
    EvenTouch(Box<Interval>),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
