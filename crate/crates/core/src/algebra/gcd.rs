use super::Poly;
use crate::error::{Error, Result};

/// Monic greatest common divisor over Q; `gcd(0, 0) = 0`.
///
/// Remainders are replaced by their primitive parts between steps, which
/// changes them only by a unit and keeps coefficients small.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let mut f = a.primitive_part();
    let mut g = b.primitive_part();
    while !g.is_zero() {
        let r = f.rem(&g).primitive_part();
        f = g;
        g = r;
    }
    f.monic()
}

/// `p / gcd(p, p')` made primitive: same roots, all simple.
pub fn squarefree_part(p: &Poly) -> Result<Poly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = gcd(p, &p.derivative());
    Ok(p.div_rem(&g).0.primitive_part())
}

/// Yun's decomposition: monic squarefree, pairwise coprime factors `f_1, f_2, ...`
/// with `p = c * f_1 * f_2^2 * f_3^3 * ...`. Entry `i` holds `f_{i+1}`; trailing
/// entries may be `1`.
pub fn squarefree_decomposition(p: &Poly) -> Result<Vec<Poly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = p.monic();
    let dp = p.derivative();
    let a0 = gcd(&p, &dp);
    let mut b = p.div_rem(&a0).0;
    let mut c = dp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut factors = Vec::new();
    while !b.is_constant() {
        let a = gcd(&b, &d);
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        factors.push(a);
    }
    Ok(factors)
}
