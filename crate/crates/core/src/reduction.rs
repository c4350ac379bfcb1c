//! Rational polynomials carrying the real and imaginary parts of complex roots.
//!
//! For a source `p` with roots `z_i`, the sum polynomial has roots
//! `z_i + z_j` and the difference polynomial has roots `z_j - z_i`. A
//! conjugate pair `z, conj(z)` contributes `2 Re z` to the first and
//! `±2i Im z` to the second, so rescaling and folding `t -> -4x^2` turns
//! both into polynomials whose real roots include `Re z` and `Im z`.
//!
//! The bivariate resultants are computed by evaluation and interpolation:
//! the resultant in `y` is a polynomial of degree at most `n^2` in `x`, so it
//! is fixed by its values at `n^2 + 1` integer points.

use num_traits::{One, Zero};

use crate::algebra::{int, resultant, squarefree_part, Poly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealImagReduction {
    pub source: Poly,
    /// Real roots include `Re z` for every root `z` of `source`.
    pub q_re: Poly,
    /// Real roots include `Im z` for every root `z` of `source`.
    pub q_im: Poly,
}

/// `Res_y(p(y), p(x - y))`, primitive. Roots are all `z_i + z_j` over ordered pairs.
pub fn sum_roots_poly(p: &Poly) -> Result<Poly> {
    bivariate_resultant(p, |c| p.substitute_affine(&-Rational::one(), c))
}

/// `Res_y(p(y), p(y + x))`, primitive. Roots are all `z_j - z_i`; divisible by `x^n`.
pub fn diff_roots_poly(p: &Poly) -> Result<Poly> {
    bivariate_resultant(p, |c| p.substitute_affine(&Rational::one(), c))
}

fn bivariate_resultant(p: &Poly, shifted: impl Fn(&Rational) -> Poly) -> Result<Poly> {
    let n = p.positive_degree()?;
    let points = (0..=(n * n) as i64)
        .map(|c| {
            let c = int(c);
            let value = resultant(p, &shifted(&c))?;
            Ok((c, value))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::interpolate(&points).primitive_part())
}

/// `S(2x)` for `S` the sum polynomial of the squarefree part of `p`.
pub fn real_part_poly(p: &Poly) -> Result<Poly> {
    let s = squarefree_part(p)?;
    let sum = sum_roots_poly(&s)?;
    Ok(sum.scale_variable(&int(2)).primitive_part())
}

/// `x * g(-4x^2)` where `g(x^2)` is the difference polynomial of the
/// squarefree part of `p` with its factors of `x` removed.
pub fn imag_part_poly(p: &Poly) -> Result<Poly> {
    let s = squarefree_part(p)?;
    let diff = diff_roots_poly(&s)?;
    let (_, stripped) = diff.strip_x_power();
    let coeffs = stripped.coeffs();
    if coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return Err(Error::Internal(format!(
            "difference polynomial {stripped} is not even after removing x factors"
        )));
    }
    let mut out = vec![Rational::zero()];
    let mut power = Rational::one();
    for c in coeffs.iter().step_by(2) {
        out.push(c * &power);
        out.push(Rational::zero());
        power *= int(-4);
    }
    Ok(Poly::from_coeffs(out).primitive_part())
}

pub fn reduce(p: &Poly) -> Result<RealImagReduction> {
    Ok(RealImagReduction {
        source: p.clone(),
        q_re: real_part_poly(p)?,
        q_im: imag_part_poly(p)?,
    })
}
