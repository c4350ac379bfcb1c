//! Elaboration of fold scripts into geometry parameterized by the sliding
//! position `x` of sheet x.
//!
//! Every coordinate in a [`Scene`] is an exact polynomial in `x`; a
//! [`ConcreteScene`] is the same scene realized at one rational `x`.
//! Rolling the multifold is re-evaluation, never mutation.

mod concrete;
mod extents;
mod scene;

pub use concrete::{
    check_intersections, evaluate, Assertion, ConcreteElement, ConcreteGeometry, ConcreteScene,
    Diagnostic,
};
pub use extents::{
    element_length_subtotal, paper_extents, total_strip_length, PaperExtents, STRIP_SLACK,
};
pub use scene::{
    audit_no_unfolding, elaborate, symbolic_gap, Element, ElementRole, Geometry, IterationFrame,
    Scene, SceneBuilder,
};

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{Poly, Rational};
use crate::compiler::{FoldScript, FoldStep};

/// A coordinate as an exact polynomial in the rolling parameter `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParamScalar(Poly);

impl ParamScalar {
    pub fn new(poly: Poly) -> Self {
        ParamScalar(poly)
    }

    pub fn constant(c: Rational) -> Self {
        ParamScalar(Poly::constant(c))
    }

    /// The parameter itself.
    pub fn x() -> Self {
        ParamScalar(Poly::x())
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.eval(x)
    }

    pub fn depends_on_x(&self) -> bool {
        !self.0.is_constant()
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        ParamScalar(&self.0 + &rhs.0)
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        ParamScalar(&self.0 - &rhs.0)
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        ParamScalar(&self.0 * &rhs.0)
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar(-&self.0)
    }
}

/// Names of the independent sliding parameters the alignment depends on.
///
/// Each `PlaceSheetX` introduces one sliding sheet. A single sheet is `x`;
/// several are `x1, x2, ...`, all of which the alignment may depend on.
/// A script whose final gap is constant has no parameter at all.
pub fn free_parameters(script: &FoldScript) -> BTreeSet<String> {
    let sheets = script
        .steps()
        .iter()
        .filter(|s| matches!(s, FoldStep::PlaceSheetX))
        .count();
    match sheets {
        0 => BTreeSet::new(),
        1 => match symbolic_gap(script) {
            Ok(gap) if gap.is_constant() => BTreeSet::new(),
            _ => BTreeSet::from(["x".to_string()]),
        },
        m => (1..=m).map(|i| format!("x{i}")).collect(),
    }
}
