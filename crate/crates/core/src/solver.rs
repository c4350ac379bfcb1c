//! Rolling sheet x to the alignment `p(x) = 0`.
//!
//! Rolling is bisection on the simulated final gap inside an interval the
//! Sturm chain certifies to hold exactly one root. Iterates are exact
//! rationals, so the tolerance bounds both the final interval width and the
//! residual without rounding. Negative roots are found as positive roots of
//! `p(-x)`, which keeps the sliding range at `x >= 0`.

use num_traits::{Signed, Zero};
use std::cmp::Ordering;

use crate::algebra::sturm::isolate_in;
use crate::algebra::{
    cauchy_root_bound, int, negate_variable, simplest_rational, squarefree_decomposition,
    squarefree_part, sturm_chain, ten_to_minus, to_f64, Interval, Poly, Rational, SturmChain,
};
use crate::compiler::{compile, FoldScript};
use crate::error::{Error, Result};
use crate::reduction::{reduce, RealImagReduction};
use crate::simulator::{elaborate, Scene};

/// Default tolerance, `10^-12`.
pub fn default_tolerance() -> Rational {
    ten_to_minus(12)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub value: Rational,
    pub isolating: Interval,
    /// `|p(value)|`, exact.
    pub residual: Rational,
    pub certified: bool,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    pub source: Poly,
    /// Distinct real roots in increasing order.
    pub roots: Vec<RealRoot>,
    pub bound: Rational,
    pub tolerance: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexRoot {
    pub re: Rational,
    pub im: Rational,
    /// `|p(re + i im)|^2`, exact.
    pub residual_squared: Rational,
    /// `|p(re + i im)|`, rounded.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexRootReport {
    pub pairs: Vec<ComplexRoot>,
    pub reduction: RealImagReduction,
    pub tolerance: Rational,
}

fn check_tolerance(tol: &Rational) -> Result<()> {
    if tol.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveTolerance)
    }
}

/// Whether the Sturm chain of `p` counts exactly one distinct root in the
/// closed interval.
pub fn certify(p: &Poly, iv: &Interval) -> bool {
    sturm_chain(p).is_ok_and(|chain| chain.count_closed(iv.lo(), iv.hi()) == 1)
}

/// Slides sheet x across `iv` until the final pair's inner edges touch.
///
/// Returns `x*` in `iv` with `|gap(x*)| <= tol`, reached once the bracketing
/// interval is no wider than `tol`.
pub fn roll_to_alignment(script: &FoldScript, iv: &Interval, tol: &Rational) -> Result<Rational> {
    check_tolerance(tol)?;
    let scene = elaborate(script)?;
    let chain = sturm_chain(script.source())?;
    roll(&scene, &chain, iv, tol, |_| true)
}

fn roll(
    scene: &Scene,
    chain: &SturmChain,
    iv: &Interval,
    tol: &Rational,
    accept: impl Fn(&Rational) -> bool,
) -> Result<Rational> {
    let (lo, hi) = (iv.lo(), iv.hi());
    if lo.is_negative() || hi > &scene.bound {
        let x = if lo.is_negative() { lo } else { hi };
        return Err(Error::OutsideSheet {
            x: Box::new(x.clone()),
            width: Box::new(scene.bound.clone()),
        });
    }
    match chain.count_closed(lo, hi) {
        0 => return Err(Error::NoRoot(Box::new(iv.clone()))),
        1 => {}
        count => {
            return Err(Error::NotIsolated {
                interval: Box::new(iv.clone()),
                count,
            })
        }
    }
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let g_lo = scene.gap_at(&lo);
    if g_lo.is_zero() {
        return Ok(lo);
    }
    let g_hi = scene.gap_at(&hi);
    if g_hi.is_zero() {
        return Ok(hi);
    }
    let lo_positive = g_lo.is_positive();
    if lo_positive == g_hi.is_positive() {
        return Err(Error::EvenTouch(Box::new(Interval::new(lo, hi))));
    }
    let (mut g_lo, mut g_hi) = (g_lo, g_hi);
    loop {
        if &hi - &lo <= *tol {
            let simplest = simplest_rational(&lo, &hi);
            if scene.gap_at(&simplest).is_zero() && accept(&simplest) {
                return Ok(simplest);
            }
            let (best, g) = if g_lo.abs() <= g_hi.abs() {
                (&lo, &g_lo)
            } else {
                (&hi, &g_hi)
            };
            if &g.abs() <= tol && accept(best) {
                return Ok(best.clone());
            }
        }
        let mid = (&lo + &hi) / int(2);
        let g = scene.gap_at(&mid);
        if g.is_zero() {
            return Ok(mid);
        }
        if g.is_positive() == lo_positive {
            lo = mid;
            g_lo = g;
        } else {
            hi = mid;
            g_hi = g;
        }
    }
}

/// All distinct real roots of `p`, each certified and within `tol`.
pub fn solve_real(p: &Poly, tol: &Rational) -> Result<RootReport> {
    check_tolerance(tol)?;
    p.positive_degree()?;
    let s = squarefree_part(p)?;
    let bound = cauchy_root_bound(&s)?;
    let factors: Vec<(usize, SturmChain)> = squarefree_decomposition(p)?
        .into_iter()
        .enumerate()
        .filter(|(_, f)| !f.is_constant())
        .map(|(i, f)| Ok((i + 1, sturm_chain(&f)?)))
        .collect::<Result<_>>()?;
    let multiplicity = |iv: &Interval| {
        factors
            .iter()
            .find(|(_, chain)| chain.count_closed(iv.lo(), iv.hi()) > 0)
            .map_or(1, |(m, _)| *m)
    };
    let accept = |x: &Rational| &p.eval(x).abs() <= tol;

    let mut found: Vec<(Rational, Interval)> = Vec::new();
    if s.eval(&Rational::zero()).is_zero() {
        found.push((Rational::zero(), Interval::point(Rational::zero())));
    }
    for (poly, negate) in [(s.clone(), false), (negate_variable(&s), true)] {
        let script = compile(&poly)?;
        let scene = elaborate(&script)?;
        let chain = sturm_chain(&poly)?;
        for iv in isolate_in(&chain, &Rational::zero(), &bound) {
            let x = if negate {
                roll(&scene, &chain, &iv, tol, |x| accept(&-x))?
            } else {
                roll(&scene, &chain, &iv, tol, accept)?
            };
            found.push(if negate { (-x, iv.negated()) } else { (x, iv) });
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));

    let roots = found
        .into_iter()
        .map(|(value, isolating)| RealRoot {
            residual: p.eval(&value).abs(),
            certified: certify(&s, &isolating),
            multiplicity: multiplicity(&isolating),
            value,
            isolating,
        })
        .collect();
    Ok(RootReport {
        source: p.clone(),
        roots,
        bound,
        tolerance: tol.clone(),
    })
}

/// `p(re + i im)` in exact complex rational arithmetic, as `(re, im)`.
pub fn eval_complex(p: &Poly, re: &Rational, im: &Rational) -> (Rational, Rational) {
    p.coeffs()
        .iter()
        .rev()
        .fold((Rational::zero(), Rational::zero()), |(ar, ai), c| {
            let nr = &ar * re - &ai * im + c;
            let ni = &ar * im + &ai * re;
            (nr, ni)
        })
}

/// Complex roots of `p` assembled from the real roots of the real-part and
/// imaginary-part polynomials.
///
/// Both are solved to a tolerance tightened by the Lipschitz bound of `p` on
/// the root disc, so a candidate built from a true root has residual at most
/// `tol`; candidates whose exact residual exceeds `tol` are discarded.
pub fn solve_complex(p: &Poly, tol: &Rational) -> Result<ComplexRootReport> {
    check_tolerance(tol)?;
    p.positive_degree()?;
    let reduction = reduce(p)?;
    let radius = cauchy_root_bound(&squarefree_part(p)?)? + int(1);
    let lipschitz = p.derivative().majorant(&radius);
    let inner = tol / (int(2) * (lipschitz + int(1)));

    let re_roots = solve_real(&reduction.q_re, &inner)?;
    let im_roots = solve_real(&reduction.q_im, &inner)?;
    let limit = tol * tol;
    let mut pairs = Vec::new();
    for a in &re_roots.roots {
        for b in &im_roots.roots {
            let (vr, vi) = eval_complex(p, &a.value, &b.value);
            let residual_squared = &vr * &vr + &vi * &vi;
            if residual_squared <= limit {
                pairs.push(ComplexRoot {
                    re: a.value.clone(),
                    im: b.value.clone(),
                    residual: to_f64(&residual_squared).sqrt(),
                    residual_squared,
                });
            }
        }
    }
    pairs.sort_by(|x, y| match x.re.cmp(&y.re) {
        Ordering::Equal => x.im.cmp(&y.im),
        o => o,
    });
    Ok(ComplexRootReport {
        pairs,
        reduction,
        tolerance: tol.clone(),
    })
}
