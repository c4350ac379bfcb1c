use std::fmt::Write;
use std::path::Path;

use multifold::algebra::{cauchy_root_bound, digits_for_tolerance, poly_parse, to_decimal};
use multifold::compiler::{compile_with_bound, FoldScript};
use multifold::reduction::reduce;
use multifold::simulator::{
    check_intersections, elaborate, evaluate, paper_extents, ConcreteGeometry, ConcreteScene,
    Diagnostic, PaperExtents,
};
use multifold::solver::{solve_complex, solve_real, ComplexRootReport, RootReport};
use multifold::{Poly, Rational};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::config::{Format, RunConfig};
use crate::document::FoldScriptDocument;
use crate::render::render_svg;
use crate::{CliError, CliResult};

/// What a command prints: the body for stdout (or `--out`) and any warnings
/// for stderr.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub warnings: Vec<String>,
}

impl Output {
    fn new(body: String) -> Self {
        Output {
            body,
            warnings: Vec::new(),
        }
    }

    fn warn(mut self, warning: Option<String>) -> Self {
        self.warnings.extend(warning);
        self
    }
}

fn json_body(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("json value serializes");
    s.push('\n');
    s
}

fn unsupported(command: &str, format: Format) -> CliError {
    CliError::Usage(format!("{command} does not support --format {format}"))
}

pub fn parse_polynomial(text: &str) -> CliResult<Poly> {
    Ok(poly_parse(text)?)
}

/// Compiles `p` using the configured bound override, if any.
fn compile_configured(p: &Poly, config: &RunConfig) -> CliResult<(FoldScript, Option<String>)> {
    let cauchy = cauchy_root_bound(p)?;
    let (bound, warning) = config.effective_bound(&cauchy);
    Ok((compile_with_bound(p, &bound)?, warning))
}

/// A script document path if `input` names an existing file, otherwise
/// polynomial text to compile.
pub fn load_script(input: &str, config: &RunConfig) -> CliResult<(FoldScript, Option<String>)> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {input}: {e}")))?;
        let script = FoldScriptDocument::from_json(&text)?.to_script()?;
        let warning = config
            .bound
            .as_ref()
            .map(|_| "warning: --bound is ignored when loading a script document".to_string());
        return Ok((script, warning));
    }
    compile_configured(&parse_polynomial(input)?, config)
}

fn extents_json(e: &PaperExtents) -> Value {
    json!({ "width": e.width.to_string(), "height": e.height.to_string() })
}

pub fn cmd_compile(polynomial: &str, config: &RunConfig) -> CliResult<Output> {
    let p = parse_polynomial(polynomial)?;
    let (script, warning) = compile_configured(&p, config)?;
    let body = match config.format {
        Format::Json => {
            let mut s = FoldScriptDocument::from_script(&script)?.to_json();
            s.push('\n');
            s
        }
        Format::Text => {
            let extents = paper_extents(&script, script.bound())?;
            let mut s = String::new();
            let _ = writeln!(s, "polynomial: {}", script.source());
            let _ = writeln!(s, "bound: {}", script.bound());
            let _ = writeln!(
                s,
                "extents: width {}, height {}",
                extents.width, extents.height
            );
            let _ = writeln!(s, "steps: {}", script.steps().len());
            for (i, step) in script.steps().iter().enumerate() {
                let _ = writeln!(s, "  {i:>3}  {step}");
            }
            s
        }
        Format::Svg => return Err(unsupported("compile", Format::Svg)),
    };
    Ok(Output::new(body).warn(warning))
}

fn geometry_text(g: &ConcreteGeometry) -> String {
    match g {
        ConcreteGeometry::VerticalLine { u } => format!("u = {u}"),
        ConcreteGeometry::HorizontalEdge { v } => format!("v = {v}"),
        ConcreteGeometry::DiagonalEdge { slope, intercept } => {
            format!("v = {intercept} + ({slope})u")
        }
    }
}

fn geometry_json(g: &ConcreteGeometry) -> Value {
    match g {
        ConcreteGeometry::VerticalLine { u } => json!({ "type": "vertical", "u": u.to_string() }),
        ConcreteGeometry::HorizontalEdge { v } => {
            json!({ "type": "horizontal", "v": v.to_string() })
        }
        ConcreteGeometry::DiagonalEdge { slope, intercept } => json!({
            "type": "diagonal",
            "slope": slope.to_string(),
            "intercept": intercept.to_string(),
        }),
    }
}

fn simulate_text(script: &FoldScript, cs: &ConcreteScene, diagnostics: &[Diagnostic]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "polynomial: {}", script.source());
    let _ = writeln!(s, "x: {}", cs.x);
    let _ = writeln!(
        s,
        "extents: width {}, height {}",
        cs.extents.width, cs.extents.height
    );
    let _ = writeln!(s, "elements: {}", cs.elements.len());
    for e in &cs.elements {
        let _ = writeln!(
            s,
            "  {:>3}  step {:>2}  {:<20} {}",
            e.id,
            e.provenance,
            e.role.name(),
            geometry_text(&e.geometry)
        );
    }
    let failed = diagnostics.iter().filter(|d| !d.passed).count();
    let _ = writeln!(
        s,
        "checks: {} passed, {failed} failed",
        diagnostics.len() - failed
    );
    for d in diagnostics.iter().filter(|d| !d.passed) {
        let _ = writeln!(s, "  FAILED k={} {}: {}", d.index, d.assertion, d.detail);
    }
    let _ = writeln!(s, "final gap: {}", cs.final_gap());
    s
}

fn simulate_json(script: &FoldScript, cs: &ConcreteScene, diagnostics: &[Diagnostic]) -> Value {
    json!({
        "polynomial": script.source().to_string(),
        "x": cs.x.to_string(),
        "extents": extents_json(&cs.extents),
        "elements": cs.elements.iter().map(|e| json!({
            "id": e.id,
            "step": e.provenance,
            "role": e.role.name(),
            "geometry": geometry_json(&e.geometry),
        })).collect::<Vec<_>>(),
        "checks": diagnostics.iter().map(|d| json!({
            "index": d.index,
            "assertion": d.assertion.to_string(),
            "passed": d.passed,
            "detail": d.detail,
        })).collect::<Vec<_>>(),
        "final_gap": cs.final_gap().to_string(),
    })
}

pub fn cmd_simulate(input: &str, config: &RunConfig) -> CliResult<Output> {
    let (script, warning) = load_script(input, config)?;
    let x = config
        .x
        .clone()
        .ok_or_else(|| CliError::Usage("simulate requires --x <rational>".into()))?;
    let scene = elaborate(&script)?;
    let cs = evaluate(&scene, &x)?;
    let diagnostics = check_intersections(&cs);
    if let Some(d) = diagnostics.iter().find(|d| !d.passed) {
        return Err(multifold::Error::Internal(format!(
            "geometry check {} failed at k={}: {}",
            d.assertion, d.index, d.detail
        ))
        .into());
    }
    let body = match config.format {
        Format::Text => simulate_text(&script, &cs, &diagnostics),
        Format::Json => json_body(simulate_json(&script, &cs, &diagnostics)),
        Format::Svg => render_svg(&cs, script.source()),
    };
    Ok(Output::new(body).warn(warning))
}

/// Renders the scene at `--x`, or at the smallest root in the sliding range
/// when no `x` is given, or at `x = 0` when there is no such root.
pub fn cmd_render(input: &str, config: &RunConfig) -> CliResult<Output> {
    if !matches!(config.format, Format::Svg | Format::Text) {
        return Err(unsupported("render", config.format));
    }
    let (script, warning) = load_script(input, config)?;
    let x = match &config.x {
        Some(x) => x.clone(),
        None => solve_real(script.source(), &config.tolerance)?
            .roots
            .into_iter()
            .map(|r| r.value)
            .find(|v| !v.is_negative() && v <= script.bound())
            .unwrap_or_else(Rational::zero),
    };
    let cs = evaluate(&elaborate(&script)?, &x)?;
    Ok(Output::new(render_svg(&cs, script.source())).warn(warning))
}

fn solve_text(report: &RootReport, complex: Option<&ComplexRootReport>, digits: usize) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "polynomial: {}", report.source);
    let _ = writeln!(s, "bound: {}", report.bound);
    if report.roots.is_empty() {
        let _ = writeln!(s, "no real roots");
    } else {
        let _ = writeln!(s, "real roots: {}", report.roots.len());
        for r in &report.roots {
            let _ = writeln!(
                s,
                "  {}  interval {}  residual {:.3e}  {}{}",
                to_decimal(&r.value, digits),
                r.isolating,
                multifold::algebra::to_f64(&r.residual),
                if r.certified {
                    "certified"
                } else {
                    "uncertified"
                },
                if r.multiplicity > 1 {
                    format!("  multiplicity {}", r.multiplicity)
                } else {
                    String::new()
                }
            );
        }
    }
    if let Some(c) = complex {
        let _ = writeln!(s, "complex roots: {}", c.pairs.len());
        for z in &c.pairs {
            let sign = if z.im.is_negative() { '-' } else { '+' };
            let _ = writeln!(
                s,
                "  {} {sign} {}i  residual {:.3e}",
                to_decimal(&z.re, digits),
                to_decimal(&z.im.abs(), digits),
                z.residual
            );
        }
    }
    s
}

fn solve_json(report: &RootReport, complex: Option<&ComplexRootReport>, digits: usize) -> Value {
    let mut v = json!({
        "polynomial": report.source.to_string(),
        "bound": report.bound.to_string(),
        "tolerance": report.tolerance.to_string(),
        "roots": report.roots.iter().map(|r| json!({
            "value": r.value.to_string(),
            "decimal": to_decimal(&r.value, digits),
            "interval": [r.isolating.lo().to_string(), r.isolating.hi().to_string()],
            "residual": r.residual.to_string(),
            "certified": r.certified,
            "multiplicity": r.multiplicity,
        })).collect::<Vec<_>>(),
    });
    if let Some(c) = complex {
        v["complex_roots"] = c
            .pairs
            .iter()
            .map(|z| {
                json!({
                    "re": z.re.to_string(),
                    "im": z.im.to_string(),
                    "re_decimal": to_decimal(&z.re, digits),
                    "im_decimal": to_decimal(&z.im, digits),
                    "residual": z.residual,
                })
            })
            .collect();
    }
    v
}

pub fn cmd_solve(polynomial: &str, complex: bool, config: &RunConfig) -> CliResult<Output> {
    let p = parse_polynomial(polynomial)?;
    let report = solve_real(&p, &config.tolerance)?;
    let complex = complex
        .then(|| solve_complex(&p, &config.tolerance))
        .transpose()?;
    let digits = digits_for_tolerance(&config.tolerance);
    let body = match config.format {
        Format::Text => solve_text(&report, complex.as_ref(), digits),
        Format::Json => json_body(solve_json(&report, complex.as_ref(), digits)),
        Format::Svg => return Err(unsupported("solve", Format::Svg)),
    };
    Ok(Output::new(body))
}

pub fn cmd_reduce(polynomial: &str, config: &RunConfig) -> CliResult<Output> {
    let p = parse_polynomial(polynomial)?;
    let r = reduce(&p)?;
    let body = match config.format {
        Format::Text => format!(
            "polynomial: {}\nq_re: {}\nq_im: {}\n",
            r.source, r.q_re, r.q_im
        ),
        Format::Json => json_body(json!({
            "polynomial": r.source.to_string(),
            "q_re": r.q_re.to_string(),
            "q_im": r.q_im.to_string(),
        })),
        Format::Svg => return Err(unsupported("reduce", Format::Svg)),
    };
    Ok(Output::new(body))
}

pub fn cmd_bound(polynomial: &str, config: &RunConfig) -> CliResult<Output> {
    let p = parse_polynomial(polynomial)?;
    let cauchy = cauchy_root_bound(&p)?;
    let (script, warning) = compile_configured(&p, config)?;
    let extents = paper_extents(&script, script.bound())?;
    let body = match config.format {
        Format::Text => format!(
            "polynomial: {p}\ncauchy bound: {cauchy}\nbound: {}\nextents: width {}, height {}\n",
            script.bound(),
            extents.width,
            extents.height
        ),
        Format::Json => json_body(json!({
            "polynomial": p.to_string(),
            "cauchy_bound": cauchy.to_string(),
            "bound": script.bound().to_string(),
            "extents": extents_json(&extents),
        })),
        Format::Svg => return Err(unsupported("bound", Format::Svg)),
    };
    Ok(Output::new(body).warn(warning))
}
