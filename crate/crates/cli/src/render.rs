//! SVG 1.1 rendering of a concrete scene.
//!
//! Drawing happens in sheet coordinates scaled by [`SCALE`]; a group
//! transform flips the vertical axis so `v` increases upward. Every scene
//! element becomes exactly one `<line>`, clipped to the sheet.

use std::fmt::Write;

use multifold::algebra::to_f64;
use multifold::simulator::{ConcreteGeometry, ConcreteScene, ElementRole};
use multifold::Poly;

/// Display units per sheet unit.
pub const SCALE: f64 = 100.0;

fn stroke(role: ElementRole) -> (&'static str, f64) {
    use ElementRole::*;
    match role {
        ZeroCrease | OneCrease | DiagonalReference => ("#888888", 1.0),
        SheetXEdge => ("#1f5fbf", 2.0),
        SeedZeroEdge | PairZeroEdge => ("#b22222", 1.5),
        SeedOtherEdge | PairOtherEdge => ("#222222", 1.5),
        RectangleDiagonal => ("#2e8b57", 1.0),
        TransferDiagonalZ | TransferDiagonalY => ("#6a5acd", 1.0),
        AuxiliaryEdge | SheetAEdge => ("#d2691e", 1.0),
        VerticalStrip => ("#444444", 1.0),
    }
}

/// Clips `v = intercept + slope * u` to the box; falls back to the point on
/// `u = 0` when the line misses the sheet.
fn clip_diagonal(slope: f64, intercept: f64, w: f64, half: f64) -> [f64; 4] {
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    let (u0, v0) = (0.0, intercept);
    let (du, dv) = (w, slope * w);
    for (p, q) in [(-du, u0), (du, w - u0), (-dv, v0 + half), (dv, half - v0)] {
        if p == 0.0 {
            if q < 0.0 {
                return [0.0, intercept, 0.0, intercept];
            }
            continue;
        }
        let r = q / p;
        if p < 0.0 {
            t0 = t0.max(r);
        } else {
            t1 = t1.min(r);
        }
    }
    if t0 > t1 {
        return [0.0, intercept, 0.0, intercept];
    }
    [u0 + t0 * du, v0 + t0 * dv, u0 + t1 * du, v0 + t1 * dv]
}

pub fn render_svg(cs: &ConcreteScene, source: &Poly) -> String {
    let w = to_f64(&cs.extents.width);
    let h = to_f64(&cs.extents.height);
    let half = h / 2.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
    );
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:.0}" height="{:.0}" viewBox="0 0 {:.3} {:.3}">"#,
        w * SCALE,
        h * SCALE,
        w * SCALE,
        h * SCALE
    );
    let _ = writeln!(out, "  <title>p(x) = {} at x = {}</title>", source, cs.x);
    let _ = writeln!(out, "  <desc>final gap: {}</desc>", cs.final_gap());
    let _ = writeln!(
        out,
        r#"  <g transform="translate(0 {:.3}) scale(1 -1)">"#,
        half * SCALE
    );
    let _ = writeln!(
        out,
        r##"    <rect x="0" y="{:.3}" width="{:.3}" height="{:.3}" fill="#fbf8f0" stroke="none"/>"##,
        -half * SCALE,
        w * SCALE,
        h * SCALE
    );
    for e in &cs.elements {
        let [u1, v1, u2, v2] = match &e.geometry {
            ConcreteGeometry::VerticalLine { u } => {
                let u = to_f64(u);
                [u, -half, u, half]
            }
            ConcreteGeometry::HorizontalEdge { v } => {
                let v = to_f64(v);
                [0.0, v, w, v]
            }
            ConcreteGeometry::DiagonalEdge { slope, intercept } => {
                clip_diagonal(to_f64(slope), to_f64(intercept), w, half)
            }
        };
        let (color, width) = stroke(e.role);
        let _ = writeln!(
            out,
            r#"    <line id="e{}" class="{}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{color}" stroke-width="{width}"/>"#,
            e.id,
            e.role.name(),
            u1 * SCALE,
            v1 * SCALE,
            u2 * SCALE,
            v2 * SCALE
        );
    }
    out.push_str("  </g>\n</svg>\n");
    out
}
