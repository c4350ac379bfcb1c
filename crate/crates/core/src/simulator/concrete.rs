use num_traits::{One, Signed, Zero};
use std::fmt;

use super::scene::{ElementRole, Geometry, IterationFrame, Scene};
use super::PaperExtents;
use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConcreteGeometry {
    VerticalLine {
        u: Rational,
    },
    HorizontalEdge {
        v: Rational,
    },
    DiagonalEdge {
        slope: Rational,
        intercept: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcreteElement {
    pub id: usize,
    pub provenance: usize,
    pub role: ElementRole,
    pub geometry: ConcreteGeometry,
}

/// A scene realized at one position of sheet x. All fields are plain data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcreteScene {
    pub x: Rational,
    pub extents: PaperExtents,
    pub elements: Vec<ConcreteElement>,
    pub frames: Vec<IterationFrame>,
    pub sheet_x: usize,
}

impl ConcreteScene {
    fn horizontal(&self, id: usize) -> Option<&Rational> {
        match &self.elements.get(id)?.geometry {
            ConcreteGeometry::HorizontalEdge { v } => Some(v),
            _ => None,
        }
    }

    fn vertical(&self, id: usize) -> Option<&Rational> {
        match &self.elements.get(id)?.geometry {
            ConcreteGeometry::VerticalLine { u } => Some(u),
            _ => None,
        }
    }

    fn diagonal(&self, id: usize) -> Option<(&Rational, &Rational)> {
        match &self.elements.get(id)?.geometry {
            ConcreteGeometry::DiagonalEdge { slope, intercept } => Some((slope, intercept)),
            _ => None,
        }
    }

    /// Signed gap of the final strip pair, read from its two edges.
    pub fn final_gap(&self) -> Rational {
        let frame = self
            .frames
            .last()
            .expect("compiled scenes have an iteration");
        let zero = self.horizontal(frame.output_zero).expect("pair edge");
        let other = self.horizontal(frame.output_other).expect("pair edge");
        other - zero
    }

    /// Every concrete coordinate: the `u` of vertical lines, the `v` of
    /// horizontal edges, and the points each iteration aligns against
    /// (`Z`, the rectangle corner on the one crease, the crossing with sheet
    /// x, `Y`, and the two crossings with the vertical strip).
    pub fn points(&self) -> Vec<(Option<Rational>, Option<Rational>)> {
        let mut out = Vec::new();
        for e in &self.elements {
            match &e.geometry {
                ConcreteGeometry::VerticalLine { u } => out.push((Some(u.clone()), None)),
                ConcreteGeometry::HorizontalEdge { v } => out.push((None, Some(v.clone()))),
                ConcreteGeometry::DiagonalEdge { .. } => {}
            }
        }
        for f in &self.frames {
            let z = self.horizontal(f.input_zero).cloned();
            let other = self.horizontal(f.input_other).cloned();
            let aux = self.horizontal(f.auxiliary).cloned();
            let y = f
                .sheet_a_edge
                .and_then(|id| self.horizontal(id))
                .or_else(|| self.horizontal(f.auxiliary))
                .cloned();
            let u_k = self.vertical(f.vertical).cloned();
            out.push((Some(Rational::zero()), z));
            out.push((Some(Rational::one()), other));
            out.push((Some(self.x.clone()), aux));
            out.push((Some(Rational::zero()), y));
            out.push((u_k.clone(), self.horizontal(f.output_zero).cloned()));
            out.push((u_k, self.horizontal(f.output_other).cloned()));
        }
        out
    }

    /// Whether every coordinate from [`points`](Self::points) lies on the sheet.
    pub fn within_extents(&self) -> bool {
        self.points().iter().all(|(u, v)| {
            u.as_ref().is_none_or(|u| self.extents.contains_u(u))
                && v.as_ref().is_none_or(|v| self.extents.contains_v(v))
        })
    }
}

/// Realizes every coordinate of `scene` at `x`, which must lie on the sheet.
pub fn evaluate(scene: &Scene, x: &Rational) -> Result<ConcreteScene> {
    if x.is_negative() || x > &scene.extents.width {
        return Err(Error::OutsideSheet {
            x: Box::new(x.clone()),
            width: Box::new(scene.extents.width.clone()),
        });
    }
    let elements = scene
        .elements
        .iter()
        .map(|e| ConcreteElement {
            id: e.id,
            provenance: e.provenance,
            role: e.role,
            geometry: match &e.geometry {
                Geometry::VerticalLine { u } => ConcreteGeometry::VerticalLine { u: u.eval(x) },
                Geometry::HorizontalEdge { v } => ConcreteGeometry::HorizontalEdge { v: v.eval(x) },
                Geometry::DiagonalEdge { slope, intercept } => ConcreteGeometry::DiagonalEdge {
                    slope: slope.eval(x),
                    intercept: intercept.eval(x),
                },
            },
        })
        .collect();
    Ok(ConcreteScene {
        x: x.clone(),
        extents: scene.extents.clone(),
        elements,
        frames: scene.frames.clone(),
        sheet_x: scene.sheet_x,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Assertion {
    /// The rectangle diagonal runs from `Z` to the corner on the one crease
    /// and crosses sheet x exactly on the auxiliary edge, `x * d` above `Z`.
    DiagonalMeetsSheetX,
    /// The 45 degree strips through `Z` and `Y` meet the vertical strip on
    /// the new pair's edges, carrying the `Z`-`Y` distance `x * d + a` over.
    TransferPreservesGap,
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Assertion::DiagonalMeetsSheetX => "diagonal-meets-sheet-x",
            Assertion::TransferPreservesGap => "transfer-preserves-gap",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    /// Coefficient index of the iteration.
    pub index: usize,
    pub assertion: Assertion,
    pub passed: bool,
    pub detail: String,
}

/// Recomputes each iteration's intersections from the concrete lines alone.
pub fn check_intersections(cs: &ConcreteScene) -> Vec<Diagnostic> {
    let mut out = Vec::with_capacity(2 * cs.frames.len());
    for f in &cs.frames {
        let diagonal = check_diagonal(cs, f);
        out.push(Diagnostic {
            index: f.index,
            assertion: Assertion::DiagonalMeetsSheetX,
            passed: diagonal.is_ok(),
            detail: diagonal.err().unwrap_or_default(),
        });
        let transfer = check_transfer(cs, f);
        out.push(Diagnostic {
            index: f.index,
            assertion: Assertion::TransferPreservesGap,
            passed: transfer.is_ok(),
            detail: transfer.err().unwrap_or_default(),
        });
    }
    out
}

fn require<T>(value: Option<T>, what: &str) -> std::result::Result<T, String> {
    value.ok_or_else(|| format!("{what} has the wrong element kind"))
}

fn check_diagonal(cs: &ConcreteScene, f: &IterationFrame) -> std::result::Result<(), String> {
    let z = require(cs.horizontal(f.input_zero), "input zero edge")?;
    let other = require(cs.horizontal(f.input_other), "input other edge")?;
    let (slope, intercept) = require(cs.diagonal(f.diagonal), "rectangle diagonal")?;
    let sheet_u = require(cs.vertical(cs.sheet_x), "sheet x edge")?;
    let aux = require(cs.horizontal(f.auxiliary), "auxiliary edge")?;
    if intercept != z {
        return Err(format!(
            "diagonal meets the zero crease at {intercept}, Z is at {z}"
        ));
    }
    let corner = intercept + slope;
    if &corner != other {
        return Err(format!(
            "diagonal meets the one crease at {corner}, not {other}"
        ));
    }
    let crossing = intercept + slope * sheet_u;
    let expected = z + sheet_u * (other - z);
    if crossing != expected {
        return Err(format!(
            "diagonal crosses sheet x at {crossing}, expected {expected}"
        ));
    }
    if &crossing != aux {
        return Err(format!(
            "auxiliary edge at {aux}, diagonal crossing at {crossing}"
        ));
    }
    Ok(())
}

fn check_transfer(cs: &ConcreteScene, f: &IterationFrame) -> std::result::Result<(), String> {
    let z = require(cs.horizontal(f.input_zero), "input zero edge")?;
    let other = require(cs.horizontal(f.input_other), "input other edge")?;
    let aux = require(cs.horizontal(f.auxiliary), "auxiliary edge")?;
    let y = match f.sheet_a_edge {
        Some(id) => require(cs.horizontal(id), "sheet a edge")?,
        None => aux,
    };
    let expected_y = aux + &f.coefficient;
    if y != &expected_y {
        return Err(format!(
            "Y at {y}, expected auxiliary edge plus a = {expected_y}"
        ));
    }
    let u_k = require(cs.vertical(f.vertical), "vertical strip")?;
    let mut landed = Vec::with_capacity(2);
    for (line, through, out_id) in [
        (f.transfer_z, z, f.output_zero),
        (f.transfer_y, y, f.output_other),
    ] {
        let (slope, intercept) = require(cs.diagonal(line), "transfer diagonal")?;
        if !slope.is_one() {
            return Err(format!("transfer strip slope {slope} is not 45 degrees"));
        }
        if intercept != through {
            return Err(format!(
                "transfer strip meets the zero crease at {intercept}, not {through}"
            ));
        }
        let hit = intercept + slope * u_k;
        let edge = require(cs.horizontal(out_id), "output edge")?;
        if &hit != edge {
            return Err(format!("output edge at {edge}, transfer crossing at {hit}"));
        }
        landed.push(hit);
    }
    let carried = &landed[1] - &landed[0];
    let expected = &cs.x * (other - z) + &f.coefficient;
    if carried != y - z || carried != expected {
        return Err(format!(
            "carried gap {carried}, expected x*d + a = {expected}"
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, Poly};
    use crate::compiler::compile;
    use crate::simulator::elaborate;

    fn scene(p: &[i64]) -> Scene {
        elaborate(&compile(&Poly::from_ints(p)).unwrap()).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let s = scene(&[-2, 0, 1]);
        assert_eq!(evaluate(&s, &rat(3, 2)).unwrap().final_gap(), rat(1, 4));
        assert_eq!(evaluate(&s, &int(0)).unwrap().final_gap(), int(-2));
        assert!(matches!(
            evaluate(&s, &int(-1)),
            Err(Error::OutsideSheet { .. })
        ));
        let too_far = &s.extents.width + rat(1, 1000);
        assert!(evaluate(&s, &too_far).is_err());
        assert!(evaluate(&s, &s.extents.width).is_ok());
    }

    #[test]
    fn degree_one_checks() {
        let cs = evaluate(&scene(&[-1, 1]), &int(1)).unwrap();
        let diags = check_intersections(&cs);
        assert_eq!(diags.len(), 2);
        assert!(diags.iter().all(|d| d.passed), "{diags:?}");
    }

    #[test]
    fn corrupted_intercept_is_caught() {
        let s = scene(&[3, -1, 2]);
        let mut cs = evaluate(&s, &rat(2, 3)).unwrap();
        let target = cs.frames[1].diagonal;
        if let ConcreteGeometry::DiagonalEdge { intercept, .. } = &mut cs.elements[target].geometry
        {
            *intercept += rat(1, 7);
        }
        let diags = check_intersections(&cs);
        let failed: Vec<_> = diags.iter().filter(|d| !d.passed).collect();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].assertion, Assertion::DiagonalMeetsSheetX);
        assert_eq!(failed[0].index, 0);

        let mut cs = evaluate(&s, &rat(2, 3)).unwrap();
        let target = cs.frames[0].transfer_y;
        if let ConcreteGeometry::DiagonalEdge { intercept, .. } = &mut cs.elements[target].geometry
        {
            *intercept -= int(1);
        }
        let failed: Vec<_> = check_intersections(&cs)
            .into_iter()
            .filter(|d| !d.passed)
            .collect();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].assertion, Assertion::TransferPreservesGap);
    }

    #[test]
    fn coordinates_stay_on_sheet() {
        let s = scene(&[7, -3, 0, 1, 2]);
        for i in 0..=20 {
            let x = &s.bound * rat(i, 20);
            assert!(evaluate(&s, &x).unwrap().within_extents());
        }
    }
}
