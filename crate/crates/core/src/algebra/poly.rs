use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[k]` is the coefficient of `x^k`. The vector is empty for the zero
/// polynomial and otherwise ends in a nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, rejecting zero and constant polynomials.
    pub fn positive_degree(&self) -> Result<usize> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::ConstantPolynomial),
            Some(n) => Ok(n),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        super::eval_horner(self, x)
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Euclidean division over Q. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Integer coefficients with gcd 1 and positive leading coefficient.
    pub fn primitive_part(&self) -> Poly {
        let Some(lead) = self.leading() else {
            return Poly::zero();
        };
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let g = if lead.is_negative() { -g } else { g };
        Poly::from_coeffs(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &g))
                .collect(),
        )
    }

    /// `p(scale * y + shift)` as a polynomial in `y`.
    pub fn substitute_affine(&self, scale: &Rational, shift: &Rational) -> Poly {
        let inner = Poly::from_coeffs(vec![shift.clone(), scale.clone()]);
        self.compose(&inner)
    }

    /// `p(q(x))` by Horner's rule over polynomials.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * inner) + &Poly::constant(c.clone())
        })
    }

    /// `p(c x)`.
    pub fn scale_variable(&self, c: &Rational) -> Poly {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power *= c;
        }
        Poly::from_coeffs(coeffs)
    }

    /// Coefficient-norm majorant `sum |a_k| r^k`, an upper bound for `|p(x)|`
    /// on `|x| <= r`.
    pub fn majorant(&self, r: &Rational) -> Rational {
        let r = r.abs();
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &r + c.abs())
    }

    /// Largest `k` with `x^k` dividing `p`, and the quotient. Zero maps to `(0, 0)`.
    pub fn strip_x_power(&self) -> (usize, Poly) {
        let m = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        (
            m,
            Poly {
                coeffs: self.coeffs[m..].to_vec(),
            },
        )
    }

    /// Exact interpolation through `(x_i, y_i)` with distinct abscissae.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Poly {
        // Newton divided differences.
        let n = points.len();
        let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = &table[i] - &table[i - 1];
                let den = &points[i].0 - &points[i - level].0;
                table[i] = num / den;
            }
        }
        let mut result = Poly::zero();
        for i in (0..n).rev() {
            let factor = Poly::from_coeffs(vec![-points[i].0.clone(), Rational::one()]);
            result = &(&result * &factor) + &Poly::constant(table[i].clone());
        }
        result
    }
}

/// `q(x) = p(-x)`.
pub fn negate_variable(p: &Poly) -> Poly {
    Poly::from_coeffs(
        p.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect(),
    )
}

/// Cauchy bound `1 + max_{k<n} |a_k / a_n|`; every real root lies strictly inside.
pub fn cauchy_root_bound(p: &Poly) -> Result<Rational> {
    let n = p.positive_degree()?;
    let lead = p.coeffs[n].abs();
    let max = p.coeffs[..n]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(Rational::one() + max)
}

impl fmt::Display for Poly {
    /// Canonical text accepted by the parser, e.g. `16x^5 - 20x^3 + 5x - 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
