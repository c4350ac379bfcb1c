use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// `Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a)`, the determinant of the
/// Sylvester matrix.
///
/// Denominators are cleared first and the integer determinant is taken by
/// fraction-free (Bareiss) elimination, so every intermediate division is exact.
pub fn resultant(f: &Poly, g: &Poly) -> Result<Rational> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    let (fi, fd) = integer_coefficients(f);
    let (gi, gd) = integer_coefficients(g);

    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, c) in fi.iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in gi.iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    let det = bareiss_determinant(rows);
    // Res(fd*f, gd*g) = fd^n * gd^m * Res(f, g)
    let scale = num_traits::pow(fd, n) * num_traits::pow(gd, m);
    Ok(Rational::new(det, scale))
}

fn integer_coefficients(p: &Poly) -> (Vec<BigInt>, BigInt) {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    (ints, lcm)
}

fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let size = m.len();
    if size == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            let Some(pivot) = (k + 1..size).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, pivot);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
