//! Compilation of a polynomial into an ordered fold script.
//!
//! The script is the reference setup (zero crease, one crease, diagonal
//! reference, sheet x), a seeded strip pair holding the leading coefficient,
//! one transfer iteration per remaining coefficient in Horner order, and the
//! final alignment check.

use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::algebra::{cauchy_root_bound, horner_chain, int, Poly, Rational};
use crate::error::{Error, Result};
use crate::simulator::ParamScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    ZeroCrease,
    OneCrease,
    DiagonalReference,
    PlaceSheetX,
    SeedPair,
    IterationStep,
    AlignmentCheck,
}

impl StepKind {
    pub const ALL: [StepKind; 7] = [
        StepKind::ZeroCrease,
        StepKind::OneCrease,
        StepKind::DiagonalReference,
        StepKind::PlaceSheetX,
        StepKind::SeedPair,
        StepKind::IterationStep,
        StepKind::AlignmentCheck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StepKind::ZeroCrease => "ZeroCrease",
            StepKind::OneCrease => "OneCrease",
            StepKind::DiagonalReference => "DiagonalReference",
            StepKind::PlaceSheetX => "PlaceSheetX",
            StepKind::SeedPair => "SeedPair",
            StepKind::IterationStep => "IterationStep",
            StepKind::AlignmentCheck => "AlignmentCheck",
        }
    }

    pub fn from_name(name: &str) -> Option<StepKind> {
        StepKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FoldStep {
    /// Book fold through the square, unfolded; the vertical line `u = 0`.
    ZeroCrease,
    /// Vertical crease `unit` to the right of the zero crease.
    OneCrease { unit: Rational },
    /// 45 degree crease used to orient every diagonal strip.
    DiagonalReference,
    /// The sliding sheet; its left edge sits at `u = x`.
    PlaceSheetX,
    /// Sheet of length `|a_n|` sandwiched between the first strip pair.
    SeedPair { leading: Rational },
    /// One `d -> x*d + a` transfer for coefficient `a_index`, with its
    /// vertical strip at `u = offset`.
    IterationStep {
        index: usize,
        coefficient: Rational,
        offset: Rational,
    },
    /// The final pair's inner edges must touch.
    AlignmentCheck,
}

impl FoldStep {
    pub fn kind(&self) -> StepKind {
        match self {
            FoldStep::ZeroCrease => StepKind::ZeroCrease,
            FoldStep::OneCrease { .. } => StepKind::OneCrease,
            FoldStep::DiagonalReference => StepKind::DiagonalReference,
            FoldStep::PlaceSheetX => StepKind::PlaceSheetX,
            FoldStep::SeedPair { .. } => StepKind::SeedPair,
            FoldStep::IterationStep { .. } => StepKind::IterationStep,
            FoldStep::AlignmentCheck => StepKind::AlignmentCheck,
        }
    }
}

impl fmt::Display for FoldStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoldStep::OneCrease { unit } => write!(f, "OneCrease(unit={unit})"),
            FoldStep::SeedPair { leading } => write!(f, "SeedPair(a={leading})"),
            FoldStep::IterationStep {
                index,
                coefficient,
                offset,
            } => write!(f, "IterationStep(k={index}, a={coefficient}, u={offset})"),
            other => f.write_str(other.kind().name()),
        }
    }
}

/// Horizontal offsets of the per-iteration vertical strips: `origin + k * spacing`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Placement {
    pub origin: Rational,
    pub spacing: Rational,
}

impl Placement {
    /// Strips start one unit right of the sliding range `[0, bound]`, one unit apart.
    pub fn for_bound(bound: &Rational) -> Placement {
        Placement {
            origin: bound + Rational::one(),
            spacing: Rational::one(),
        }
    }

    pub fn offset(&self, k: usize) -> Rational {
        &self.origin + &self.spacing * int(k as i64)
    }
}

/// Offset of the vertical strip for coefficient `k` of a degree-`n` script.
pub fn placement_policy(placement: &Placement, k: usize, n: usize) -> Rational {
    debug_assert!(k < n.max(1));
    placement.offset(k)
}

/// An ordered, append-only list of fold steps compiled from `source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldScript {
    source: Poly,
    bound: Rational,
    steps: Vec<FoldStep>,
}

impl FoldScript {
    /// Assembles a script without structural validation; `elaborate` checks it.
    pub fn from_parts(source: Poly, bound: Rational, steps: Vec<FoldStep>) -> FoldScript {
        FoldScript {
            source,
            bound,
            steps,
        }
    }

    pub fn source(&self) -> &Poly {
        &self.source
    }

    /// Root bound the sliding range `[0, bound]` was laid out for.
    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    pub fn steps(&self) -> &[FoldStep] {
        &self.steps
    }

    pub fn kinds(&self) -> Vec<StepKind> {
        self.steps.iter().map(FoldStep::kind).collect()
    }

    /// The first `m` steps as a script of their own.
    pub fn prefix(&self, m: usize) -> FoldScript {
        FoldScript {
            source: self.source.clone(),
            bound: self.bound.clone(),
            steps: self.steps[..m.min(self.steps.len())].to_vec(),
        }
    }

    pub fn iteration_offsets(&self) -> impl Iterator<Item = &Rational> {
        self.steps.iter().filter_map(|s| match s {
            FoldStep::IterationStep { offset, .. } => Some(offset),
            _ => None,
        })
    }

    fn push(&mut self, step: FoldStep) {
        self.steps.push(step);
    }
}

/// A pair of horizontal strip edges; `gap = other - zero_edge` is the
/// encoded signed quantity. The zero edge is the one traced back to `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripPair {
    pub zero_edge: ParamScalar,
    pub other_edge: ParamScalar,
}

impl StripPair {
    pub fn gap(&self) -> ParamScalar {
        &self.other_edge - &self.zero_edge
    }

    /// Whether the zero-locating edge is the lower one at `x`, i.e. the gap is nonnegative.
    pub fn zero_edge_is_lower(&self, x: &Rational) -> bool {
        !self.gap().eval(x).is_negative()
    }
}

pub fn seed_pair(leading: &Rational) -> Result<StripPair> {
    if leading.is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    Ok(StripPair {
        zero_edge: ParamScalar::constant(Rational::zero()),
        other_edge: ParamScalar::constant(leading.clone()),
    })
}

/// Every line one transfer iteration lays down, as functions of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationGeometry {
    pub index: usize,
    pub coefficient: Rational,
    pub input: StripPair,
    /// Diagonal of the rectangle bounded by the zero and one creases and the
    /// pair's inner edges: `v = zero_edge + d * u`.
    pub diagonal_slope: ParamScalar,
    pub diagonal_intercept: ParamScalar,
    /// Horizontal edge through the diagonal's crossing with sheet x, `zero_edge + x * d`.
    pub auxiliary: ParamScalar,
    /// Edge flush with the far side of sheet a; absent when `a = 0`.
    pub sheet_a_edge: Option<ParamScalar>,
    /// Vertical level of `Y` on the zero crease.
    pub y_level: ParamScalar,
    /// 45 degree strips through `Z` and `Y` are `v = u + intercept`.
    pub transfer_z_intercept: ParamScalar,
    pub transfer_y_intercept: ParamScalar,
    pub vertical_offset: Rational,
    pub output: StripPair,
}

/// One `d -> x*d + a` transfer.
pub fn iteration_step(
    pair: &StripPair,
    coefficient: &Rational,
    index: usize,
    offset: &Rational,
) -> IterationGeometry {
    let d = pair.gap();
    let z = pair.zero_edge.clone();
    let auxiliary = &z + &(&ParamScalar::x() * &d);
    let sheet_a_edge =
        (!coefficient.is_zero()).then(|| &auxiliary + &ParamScalar::constant(coefficient.clone()));
    let y_level = sheet_a_edge.clone().unwrap_or_else(|| auxiliary.clone());
    let shift = ParamScalar::constant(offset.clone());
    let output = StripPair {
        zero_edge: &z + &shift,
        other_edge: &y_level + &shift,
    };
    IterationGeometry {
        index,
        coefficient: coefficient.clone(),
        input: pair.clone(),
        diagonal_slope: d,
        diagonal_intercept: z.clone(),
        auxiliary,
        sheet_a_edge,
        transfer_z_intercept: z,
        transfer_y_intercept: y_level.clone(),
        y_level,
        vertical_offset: offset.clone(),
        output,
    }
}

/// Compiles `p` (degree >= 1) into its fold script.
pub fn compile(p: &Poly) -> Result<FoldScript> {
    let mut stages = compile_stages(p)?;
    Ok(stages.pop().expect("at least one stage"))
}

/// Compiles `p` for a sliding range `[0, bound]`. Bounds below the Cauchy
/// bound of `p` are raised to it.
pub fn compile_with_bound(p: &Poly, bound: &Rational) -> Result<FoldScript> {
    let mut stages = stages_for(p, Some(bound))?;
    Ok(stages.pop().expect("at least one stage"))
}

/// The script after each appended step; the last entry is `compile(p)`.
pub fn compile_stages(p: &Poly) -> Result<Vec<FoldScript>> {
    stages_for(p, None)
}

fn stages_for(p: &Poly, bound: Option<&Rational>) -> Result<Vec<FoldScript>> {
    let n = p.positive_degree()?;
    let cauchy = cauchy_root_bound(p)?;
    let bound = match bound {
        Some(b) if b > &cauchy => b.clone(),
        _ => cauchy,
    };
    let placement = Placement::for_bound(&bound);
    let chain = horner_chain(p)?;

    let mut script = FoldScript {
        source: p.clone(),
        bound,
        steps: Vec::with_capacity(n + 6),
    };
    let mut stages = Vec::with_capacity(n + 6);
    let mut append = |script: &mut FoldScript, step: FoldStep| {
        script.push(step);
        stages.push(script.clone());
    };

    append(&mut script, FoldStep::ZeroCrease);
    append(
        &mut script,
        FoldStep::OneCrease {
            unit: Rational::one(),
        },
    );
    append(&mut script, FoldStep::DiagonalReference);
    append(&mut script, FoldStep::PlaceSheetX);
    let leading = p.coeff(n);
    let mut pair = seed_pair(&leading)?;
    append(&mut script, FoldStep::SeedPair { leading });
    for k in (0..n).rev() {
        let coefficient = p.coeff(k);
        let offset = placement_policy(&placement, k, n);
        pair = iteration_step(&pair, &coefficient, k, &offset).output;
        if pair.gap().poly() != chain.partial(k) {
            return Err(Error::Internal(format!(
                "iteration {k} produced gap {} instead of {}",
                pair.gap(),
                chain.partial(k)
            )));
        }
        append(
            &mut script,
            FoldStep::IterationStep {
                index: k,
                coefficient,
                offset,
            },
        );
    }
    append(&mut script, FoldStep::AlignmentCheck);
    Ok(stages)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{negate_variable, poly_parse, rat};
    use proptest::prelude::*;

    #[test]
    fn compile_step_accounting() {
        let s = compile(&Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(s.steps().len(), 7);
        assert_eq!(
            s.kinds(),
            vec![
                StepKind::ZeroCrease,
                StepKind::OneCrease,
                StepKind::DiagonalReference,
                StepKind::PlaceSheetX,
                StepKind::SeedPair,
                StepKind::IterationStep,
                StepKind::AlignmentCheck
            ]
        );
        assert_eq!(s.steps()[4], FoldStep::SeedPair { leading: int(1) });
        assert!(matches!(
            &s.steps()[5],
            FoldStep::IterationStep { index: 0, coefficient, .. } if *coefficient == int(-1)
        ));
        assert_eq!(
            compile(&Poly::from_ints(&[-2, 0, 1]))
                .unwrap()
                .steps()
                .len(),
            8
        );
        assert_eq!(
            compile(&Poly::from_ints(&[5])),
            Err(Error::ConstantPolynomial)
        );
        assert_eq!(compile(&Poly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn one_crease_is_unit() {
        let s = compile(&Poly::x()).unwrap();
        assert_eq!(s.steps()[1], FoldStep::OneCrease { unit: int(1) });
    }

    #[test]
    fn bound_override_moves_placement() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        let wide = compile_with_bound(&p, &int(10)).unwrap();
        assert_eq!(wide.bound(), &int(10));
        assert_eq!(
            wide.iteration_offsets().cloned().collect::<Vec<_>>(),
            vec![int(12), int(11)]
        );
        assert_eq!(
            compile_with_bound(&p, &int(1)).unwrap(),
            compile(&p).unwrap()
        );
    }

    #[test]
    fn seed_examples() {
        let p = seed_pair(&int(2)).unwrap();
        assert_eq!(p.gap(), ParamScalar::constant(int(2)));
        assert!(p.zero_edge_is_lower(&int(0)));
        let q = seed_pair(&rat(-1, 2)).unwrap();
        assert_eq!(q.gap(), ParamScalar::constant(rat(-1, 2)));
        assert!(!q.zero_edge_is_lower(&int(0)));
        assert_eq!(seed_pair(&int(0)), Err(Error::ZeroLeadingCoefficient));
    }

    #[test]
    fn iteration_examples() {
        let seed = seed_pair(&int(2)).unwrap();
        let step = iteration_step(&seed, &int(3), 1, &int(4));
        assert_eq!(step.output.gap().poly(), &Poly::from_ints(&[3, 2]));
        let step2 = iteration_step(&step.output, &int(5), 0, &int(5));
        assert_eq!(step2.output.gap().poly(), &Poly::from_ints(&[5, 3, 2]));
        let d = ParamScalar::new(poly_parse("x^2 - 1/3").unwrap());
        let pair = StripPair {
            zero_edge: ParamScalar::constant(int(1)),
            other_edge: &ParamScalar::constant(int(1)) + &d,
        };
        let zero = iteration_step(&pair, &int(0), 0, &int(3));
        assert_eq!(zero.output.gap(), &ParamScalar::x() * &d);
        assert!(zero.sheet_a_edge.is_none());
        // auxiliary edge sits x*d above the zero edge
        assert_eq!(&zero.auxiliary - &pair.zero_edge, &ParamScalar::x() * &d);
    }

    #[test]
    fn placement_examples() {
        let pl = Placement::for_bound(&int(3));
        assert_eq!(placement_policy(&pl, 0, 1), pl.origin);
        assert_eq!(placement_policy(&pl, 1, 2), &pl.origin + &pl.spacing);
        assert!(pl.spacing > Rational::zero());
        assert_ne!(pl.offset(2), pl.offset(5));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-10i64..=10, 1i64..=10), 2..=9)
            .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
            .prop_filter("degree >= 1", |p| p.degree().is_some_and(|d| d >= 1))
    }

    proptest! {
        #[test]
        fn script_shape(p in arb_poly()) {
            let n = p.degree().unwrap();
            let s = compile(&p).unwrap();
            prop_assert_eq!(s.steps().len(), n + 6);
            let indices: Vec<usize> = s.steps().iter().filter_map(|st| match st {
                FoldStep::IterationStep { index, .. } => Some(*index),
                _ => None,
            }).collect();
            prop_assert_eq!(indices, (0..n).rev().collect::<Vec<_>>());
            let neg = compile(&negate_variable(&p)).unwrap();
            prop_assert_eq!(neg.kinds(), s.kinds());
        }

        #[test]
        fn stages_are_prefixes(p in arb_poly()) {
            let stages = compile_stages(&p).unwrap();
            let full = stages.last().unwrap();
            for (m, stage) in stages.iter().enumerate() {
                prop_assert_eq!(stage, &full.prefix(m + 1));
            }
        }
    }
}
