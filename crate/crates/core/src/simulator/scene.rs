use num_traits::{One, Zero};

use super::{paper_extents, PaperExtents, ParamScalar};
use crate::algebra::{Poly, Rational};
use crate::compiler::{iteration_step, seed_pair, FoldScript, FoldStep, StepKind, StripPair};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementRole {
    ZeroCrease,
    OneCrease,
    DiagonalReference,
    SheetXEdge,
    SeedZeroEdge,
    SeedOtherEdge,
    RectangleDiagonal,
    AuxiliaryEdge,
    SheetAEdge,
    TransferDiagonalZ,
    TransferDiagonalY,
    VerticalStrip,
    PairZeroEdge,
    PairOtherEdge,
}

impl ElementRole {
    pub fn name(self) -> &'static str {
        match self {
            ElementRole::ZeroCrease => "zero-crease",
            ElementRole::OneCrease => "one-crease",
            ElementRole::DiagonalReference => "diagonal-reference",
            ElementRole::SheetXEdge => "sheet-x-edge",
            ElementRole::SeedZeroEdge => "seed-zero-edge",
            ElementRole::SeedOtherEdge => "seed-other-edge",
            ElementRole::RectangleDiagonal => "rectangle-diagonal",
            ElementRole::AuxiliaryEdge => "auxiliary-edge",
            ElementRole::SheetAEdge => "sheet-a-edge",
            ElementRole::TransferDiagonalZ => "transfer-diagonal-z",
            ElementRole::TransferDiagonalY => "transfer-diagonal-y",
            ElementRole::VerticalStrip => "vertical-strip",
            ElementRole::PairZeroEdge => "pair-zero-edge",
            ElementRole::PairOtherEdge => "pair-other-edge",
        }
    }
}

/// Lines on the sheet in `(u, v)` sheet units: `u` horizontal from the zero
/// crease, `v` vertical from the seed pair's zero edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Geometry {
    VerticalLine {
        u: ParamScalar,
    },
    HorizontalEdge {
        v: ParamScalar,
    },
    /// `v = intercept + slope * u`
    DiagonalEdge {
        slope: ParamScalar,
        intercept: ParamScalar,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub id: usize,
    /// Index of the step that laid this element down.
    pub provenance: usize,
    pub role: ElementRole,
    pub geometry: Geometry,
}

/// Element ids touched by one transfer iteration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationFrame {
    pub step: usize,
    pub index: usize,
    pub coefficient: Rational,
    pub input_zero: usize,
    pub input_other: usize,
    pub diagonal: usize,
    pub auxiliary: usize,
    pub sheet_a_edge: Option<usize>,
    pub transfer_z: usize,
    pub transfer_y: usize,
    pub vertical: usize,
    pub output_zero: usize,
    pub output_other: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scene {
    pub source: Poly,
    pub bound: Rational,
    pub extents: PaperExtents,
    pub elements: Vec<Element>,
    pub final_pair: StripPair,
    /// Gap after each iteration, in script order.
    pub trace: Vec<ParamScalar>,
    pub frames: Vec<IterationFrame>,
    pub sheet_x: usize,
}

impl Scene {
    /// The alignment quantity at `x`: the final pair's signed gap.
    pub fn gap_at(&self, x: &Rational) -> Rational {
        self.final_pair.gap().eval(x)
    }
}

/// Applies fold steps one at a time, only ever appending elements.
#[derive(Clone, Debug)]
pub struct SceneBuilder {
    degree: usize,
    applied: usize,
    elements: Vec<Element>,
    sheet_x: Option<usize>,
    pair: Option<(StripPair, usize, usize)>,
    trace: Vec<ParamScalar>,
    frames: Vec<IterationFrame>,
    aligned: bool,
}

impl SceneBuilder {
    pub fn new(source: &Poly) -> Result<Self> {
        let degree = source
            .positive_degree()
            .map_err(|e| Error::MalformedScript(format!("source: {e}")))?;
        Ok(SceneBuilder {
            degree,
            applied: 0,
            elements: Vec::new(),
            sheet_x: None,
            pair: None,
            trace: Vec::new(),
            frames: Vec::new(),
            aligned: false,
        })
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// The strip pair currently encoding the running Horner value.
    pub fn current_pair(&self) -> Option<&StripPair> {
        self.pair.as_ref().map(|(p, _, _)| p)
    }

    fn expected(&self) -> Option<StepKind> {
        let n = self.degree;
        match self.applied {
            0 => Some(StepKind::ZeroCrease),
            1 => Some(StepKind::OneCrease),
            2 => Some(StepKind::DiagonalReference),
            3 => Some(StepKind::PlaceSheetX),
            4 => Some(StepKind::SeedPair),
            i if i < 5 + n => Some(StepKind::IterationStep),
            i if i == 5 + n => Some(StepKind::AlignmentCheck),
            _ => None,
        }
    }

    fn add(&mut self, role: ElementRole, geometry: Geometry) -> usize {
        let id = self.elements.len();
        self.elements.push(Element {
            id,
            provenance: self.applied,
            role,
            geometry,
        });
        id
    }

    pub fn apply(&mut self, step: &FoldStep) -> Result<()> {
        let position = self.applied;
        match self.expected() {
            Some(kind) if kind == step.kind() => {}
            Some(kind) => {
                return Err(Error::MalformedScript(format!(
                    "step {position}: expected {kind}, found {}",
                    step.kind()
                )))
            }
            None => {
                return Err(Error::MalformedScript(format!(
                    "step {position}: {} after the alignment check",
                    step.kind()
                )))
            }
        }
        match step {
            FoldStep::ZeroCrease => {
                self.add(
                    ElementRole::ZeroCrease,
                    Geometry::VerticalLine {
                        u: ParamScalar::constant(Rational::zero()),
                    },
                );
            }
            FoldStep::OneCrease { unit } => {
                if !unit.is_one() {
                    return Err(Error::MalformedScript(format!(
                        "one crease must sit at unit distance, got {unit}"
                    )));
                }
                self.add(
                    ElementRole::OneCrease,
                    Geometry::VerticalLine {
                        u: ParamScalar::constant(unit.clone()),
                    },
                );
            }
            FoldStep::DiagonalReference => {
                self.add(
                    ElementRole::DiagonalReference,
                    Geometry::DiagonalEdge {
                        slope: ParamScalar::constant(Rational::one()),
                        intercept: ParamScalar::constant(Rational::zero()),
                    },
                );
            }
            FoldStep::PlaceSheetX => {
                let id = self.add(
                    ElementRole::SheetXEdge,
                    Geometry::VerticalLine {
                        u: ParamScalar::x(),
                    },
                );
                self.sheet_x = Some(id);
            }
            FoldStep::SeedPair { leading } => {
                let pair = seed_pair(leading)
                    .map_err(|e| Error::MalformedScript(format!("step {position}: {e}")))?;
                let zero = self.add(
                    ElementRole::SeedZeroEdge,
                    Geometry::HorizontalEdge {
                        v: pair.zero_edge.clone(),
                    },
                );
                let other = self.add(
                    ElementRole::SeedOtherEdge,
                    Geometry::HorizontalEdge {
                        v: pair.other_edge.clone(),
                    },
                );
                self.pair = Some((pair, zero, other));
            }
            FoldStep::IterationStep {
                index,
                coefficient,
                offset,
            } => {
                let expected_index = self.degree - 1 - (position - 5);
                if *index != expected_index {
                    return Err(Error::MalformedScript(format!(
                        "step {position}: iteration index {index}, expected {expected_index}"
                    )));
                }
                let (pair, input_zero, input_other) =
                    self.pair.take().expect("seed precedes iterations");
                let geo = iteration_step(&pair, coefficient, *index, offset);
                let diagonal = self.add(
                    ElementRole::RectangleDiagonal,
                    Geometry::DiagonalEdge {
                        slope: geo.diagonal_slope.clone(),
                        intercept: geo.diagonal_intercept.clone(),
                    },
                );
                let auxiliary = self.add(
                    ElementRole::AuxiliaryEdge,
                    Geometry::HorizontalEdge {
                        v: geo.auxiliary.clone(),
                    },
                );
                let sheet_a_edge = geo.sheet_a_edge.as_ref().map(|v| {
                    self.add(
                        ElementRole::SheetAEdge,
                        Geometry::HorizontalEdge { v: v.clone() },
                    )
                });
                let one = ParamScalar::constant(Rational::one());
                let transfer_z = self.add(
                    ElementRole::TransferDiagonalZ,
                    Geometry::DiagonalEdge {
                        slope: one.clone(),
                        intercept: geo.transfer_z_intercept.clone(),
                    },
                );
                let transfer_y = self.add(
                    ElementRole::TransferDiagonalY,
                    Geometry::DiagonalEdge {
                        slope: one,
                        intercept: geo.transfer_y_intercept.clone(),
                    },
                );
                let vertical = self.add(
                    ElementRole::VerticalStrip,
                    Geometry::VerticalLine {
                        u: ParamScalar::constant(geo.vertical_offset.clone()),
                    },
                );
                let output_zero = self.add(
                    ElementRole::PairZeroEdge,
                    Geometry::HorizontalEdge {
                        v: geo.output.zero_edge.clone(),
                    },
                );
                let output_other = self.add(
                    ElementRole::PairOtherEdge,
                    Geometry::HorizontalEdge {
                        v: geo.output.other_edge.clone(),
                    },
                );
                self.trace.push(geo.output.gap());
                self.frames.push(IterationFrame {
                    step: position,
                    index: *index,
                    coefficient: coefficient.clone(),
                    input_zero,
                    input_other,
                    diagonal,
                    auxiliary,
                    sheet_a_edge,
                    transfer_z,
                    transfer_y,
                    vertical,
                    output_zero,
                    output_other,
                });
                self.pair = Some((geo.output, output_zero, output_other));
            }
            FoldStep::AlignmentCheck => self.aligned = true,
        }
        self.applied += 1;
        Ok(())
    }

    fn finish(self, script: &FoldScript) -> Result<Scene> {
        if !self.aligned {
            return Err(Error::MalformedScript(format!(
                "script ends after {} steps without an alignment check",
                self.applied
            )));
        }
        let extents = paper_extents(script, script.bound())?;
        let (final_pair, _, _) = self.pair.expect("aligned implies seeded");
        Ok(Scene {
            source: script.source().clone(),
            bound: script.bound().clone(),
            extents,
            elements: self.elements,
            final_pair,
            trace: self.trace,
            frames: self.frames,
            sheet_x: self.sheet_x.expect("aligned implies sheet x"),
        })
    }
}

pub fn elaborate(script: &FoldScript) -> Result<Scene> {
    let mut builder = SceneBuilder::new(script.source())?;
    for step in script.steps() {
        builder.apply(step)?;
    }
    builder.finish(script)
}

/// The final gap as a polynomial in `x`, read off the elaborated scene.
pub fn symbolic_gap(script: &FoldScript) -> Result<Poly> {
    Ok(elaborate(script)?.final_pair.gap().poly().clone())
}

/// True when every step leaves all earlier elements untouched, i.e. the
/// construction never unfolds or moves anything it already laid down.
pub fn audit_no_unfolding(script: &FoldScript) -> Result<bool> {
    let mut builder = SceneBuilder::new(script.source())?;
    let mut before: Vec<Element> = Vec::new();
    for step in script.steps() {
        builder.apply(step)?;
        let now = builder.elements();
        if now.len() < before.len() || now[..before.len()] != before[..] {
            return Ok(false);
        }
        before = now.to_vec();
    }
    Ok(true)
}
