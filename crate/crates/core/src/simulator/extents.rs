use num_traits::{Signed, Zero};

use crate::algebra::{int, rat, Poly, Rational};
use crate::compiler::{FoldScript, FoldStep};
use crate::error::{Error, Result};

/// Clearance kept around every coordinate, in sheet units.
const MARGIN: i64 = 1;

/// Extra strip length on top of the element inventory, as a fraction, for
/// the connecting strips and the turns where the strip enters and leaves
/// each rectangle.
pub const STRIP_SLACK: (i64, i64) = (1, 4);

/// Sheet size: `u` runs over `[0, width]`, `v` over `[-height/2, height/2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaperExtents {
    pub width: Rational,
    pub height: Rational,
}

impl PaperExtents {
    pub fn half_height(&self) -> Rational {
        &self.height / int(2)
    }

    pub fn contains_u(&self, u: &Rational) -> bool {
        !u.is_negative() && u <= &self.width
    }

    pub fn contains_v(&self, v: &Rational) -> bool {
        v.abs() <= self.half_height()
    }

    pub fn contains(&self, u: &Rational, v: &Rational) -> bool {
        self.contains_u(u) && self.contains_v(v)
    }
}

/// Finite sheet that holds every coordinate of the scene for all `x` in `[0, bound]`.
///
/// Each running Horner value `b_k` is bounded on `[0, bound]` by its
/// coefficient majorant `sum |c_j| bound^j`. The 45 degree transfers lift
/// each new pair by its strip offset, so the pairs climb by the sum of the
/// offsets; the height covers that climb plus the largest majorant on each
/// side.
pub fn paper_extents(script: &FoldScript, bound: &Rational) -> Result<PaperExtents> {
    if !bound.is_positive() {
        return Err(Error::NonPositiveBound(bound.clone()));
    }
    let mut running: Option<Poly> = None;
    let mut largest = Rational::zero();
    let mut climb = Rational::zero();
    let mut rightmost = int(1);
    for step in script.steps() {
        match step {
            FoldStep::SeedPair { leading } => {
                let b = Poly::constant(leading.clone());
                largest = largest.max(b.majorant(bound));
                running = Some(b);
            }
            FoldStep::IterationStep {
                coefficient,
                offset,
                ..
            } => {
                let prev = running.take().unwrap_or_default();
                let b = &prev.shift_up(1) + &Poly::constant(coefficient.clone());
                largest = largest.max(b.majorant(bound));
                running = Some(b);
                climb += offset.abs();
                rightmost = rightmost.max(offset.clone());
            }
            _ => {}
        }
    }
    Ok(PaperExtents {
        width: bound + &rightmost + int(MARGIN),
        height: int(2) * (largest + climb + int(MARGIN)),
    })
}

/// Summed lengths of every element a script lays down, each measured
/// against `extents`: horizontal lines span the width, vertical lines the
/// height, and diagonals are charged `width + height`.
pub fn element_length_subtotal(script: &FoldScript, extents: &PaperExtents) -> Rational {
    let w = &extents.width;
    let h = &extents.height;
    let diag = w + h;
    script
        .steps()
        .iter()
        .map(|step| match step {
            FoldStep::ZeroCrease | FoldStep::OneCrease { .. } | FoldStep::PlaceSheetX => h.clone(),
            FoldStep::DiagonalReference => diag.clone(),
            FoldStep::SeedPair { .. } => w * int(2),
            FoldStep::IterationStep { coefficient, .. } => {
                // rectangle diagonal, two transfer diagonals, vertical strip,
                // auxiliary edge, output pair, and the sheet-a edge if present
                let edges = if coefficient.is_zero() { 3 } else { 4 };
                &diag * int(3) + h + w * int(edges)
            }
            FoldStep::AlignmentCheck => Rational::zero(),
        })
        .sum()
}

/// Length of the single strip the whole apparatus is folded from, which is
/// also the side of the square it can be pleated out of.
pub fn total_strip_length(script: &FoldScript, extents: &PaperExtents) -> Rational {
    let subtotal = element_length_subtotal(script, extents);
    let slack = rat(STRIP_SLACK.0, STRIP_SLACK.1);
    &subtotal + &subtotal * slack
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compiler::compile;
    use crate::simulator::elaborate;

    #[test]
    fn height_covers_majorants() {
        let s = compile(&Poly::from_ints(&[-1, 1])).unwrap();
        let e = paper_extents(&s, &int(2)).unwrap();
        assert!(e.height >= int(6));
        let s = compile(&Poly::from_ints(&[-2, 0, 1])).unwrap();
        let e = paper_extents(&s, &int(3)).unwrap();
        assert!(e.half_height() >= int(11));
        assert!(e.width >= int(3) + int(1));
        assert_eq!(
            paper_extents(&s, &int(0)),
            Err(Error::NonPositiveBound(int(0)))
        );
    }

    #[test]
    fn extents_monotone_in_bound() {
        let s = compile(&Poly::from_ints(&[1, -3, 0, 2])).unwrap();
        let mut prev = paper_extents(&s, &rat(1, 2)).unwrap();
        for b in [int(1), rat(3, 2), int(4), int(10)] {
            let e = paper_extents(&s, &b).unwrap();
            assert!(e.width >= prev.width && e.height >= prev.height);
            prev = e;
        }
    }

    #[test]
    fn degree_one_inventory() {
        let s = compile(&Poly::from_ints(&[-1, 1])).unwrap();
        let e = PaperExtents {
            width: int(5),
            height: int(7),
        };
        let scene = elaborate(&s).unwrap();
        let by_element: Rational = scene
            .elements
            .iter()
            .map(|el| match &el.geometry {
                crate::simulator::Geometry::VerticalLine { .. } => e.height.clone(),
                crate::simulator::Geometry::HorizontalEdge { .. } => e.width.clone(),
                crate::simulator::Geometry::DiagonalEdge { .. } => &e.width + &e.height,
            })
            .sum();
        assert_eq!(element_length_subtotal(&s, &e), by_element);
        // 3 verticals + 1 diagonal setup, 2 seed edges, 8 iteration elements
        let expect = int(3 * 7 + 12) + int(2 * 5) + (int(3 * 12) + int(7) + int(4 * 5));
        assert_eq!(element_length_subtotal(&s, &e), expect);
        assert_eq!(total_strip_length(&s, &e), &expect * rat(5, 4));
    }

    #[test]
    fn strip_length_scaling() {
        let lo = compile(&Poly::from_ints(&[1, 1])).unwrap();
        let hi = compile(&Poly::from_ints(&[1, 1, 1])).unwrap();
        let e = PaperExtents {
            width: int(4),
            height: int(9),
        };
        assert!(total_strip_length(&hi, &e) > total_strip_length(&lo, &e));
        let doubled = PaperExtents {
            width: int(8),
            height: int(18),
        };
        assert!(
            element_length_subtotal(&lo, &doubled) >= int(2) * element_length_subtotal(&lo, &e)
        );
    }
}
