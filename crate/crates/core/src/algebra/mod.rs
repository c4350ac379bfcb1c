//! Exact rational and univariate polynomial arithmetic.

mod gcd;
mod horner;
mod parse;
mod poly;
mod resultant;
pub(crate) mod sturm;

pub use gcd::{gcd, squarefree_decomposition, squarefree_part};
pub use horner::{eval_horner, horner_chain, HornerChain};
pub use parse::poly_parse;
pub use poly::{cauchy_root_bound, negate_variable, Poly};
pub use resultant::resultant;
pub use sturm::{count_real_roots, isolate_real_roots, sturm_chain, Interval, SturmChain};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `num / den` from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `10^-k` as an exact rational.
pub fn ten_to_minus(k: u32) -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), k as usize))
}

/// Parses `p`, `-p`, or `p/q`. Positions in errors are byte offsets into `text`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let offset = text.len() - text.trim_start().len();
    let (num_txt, den_txt) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num: BigInt = num_txt.parse().map_err(|_| Error::Syntax {
        position: offset,
        message: format!("invalid integer {num_txt:?}"),
    })?;
    let den: BigInt = match den_txt {
        Some(d) => d.parse().map_err(|_| Error::Syntax {
            position: offset + num_txt.len() + 1,
            message: format!("invalid integer {d:?}"),
        })?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::ZeroDenominator {
            position: offset + num_txt.len() + 1,
        });
    }
    Ok(Rational::new(num, den))
}

/// Parses a decimal literal such as `0.25`, `-3`, `1e-12`, or `2.5E+3` into
/// the exact rational it denotes. A `p/q` fraction is also accepted.
pub fn parse_decimal(text: &str) -> Result<Rational> {
    let t = text.trim();
    if t.contains('/') {
        return parse_rational(t);
    }
    let bad = || Error::Syntax {
        position: 0,
        message: format!("invalid decimal {t:?}"),
    };
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => {
            let exp: i64 = t[i + 1..].parse().map_err(|_| bad())?;
            (&t[..i], exp)
        }
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    let scale = exponent - frac.len() as i64;
    let ten = BigInt::from(10);
    let magnitude = if scale >= 0 {
        Rational::from_integer(all * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(all, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(if negative { -magnitude } else { magnitude })
}

/// Decimal rendering rounded half away from zero to `digits` fractional digits.
pub fn to_decimal(value: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = value.abs() * Rational::from_integer(scale.clone());
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let mut units = q;
    if (r * 2u32).cmp(scaled.denom()) != Ordering::Less {
        units += 1u32;
    }
    let negative = value.is_negative() && !units.is_zero();
    let s = units.to_string();
    let body = if digits == 0 {
        s
    } else {
        let padded = format!("{s:0>width$}", width = digits + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - digits);
        format!("{int_part}.{frac_part}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Nearest-ish `f64`; used for reporting and rendering only.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        // Both parts overflow f64; rescale to keep the ratio.
        let shift = value.numer().bits().max(value.denom().bits()) as i64 - 1000;
        let n = (value.numer() >> shift.max(0) as usize)
            .to_f64()
            .unwrap_or(0.0);
        let d = (value.denom() >> shift.max(0) as usize)
            .to_f64()
            .unwrap_or(1.0);
        n / d
    })
}

/// Smallest number of fractional digits that resolves `tol`, i.e. `ceil(-log10 tol)`.
pub fn digits_for_tolerance(tol: &Rational) -> usize {
    let mut digits = 0usize;
    let mut step = Rational::one();
    while &step > tol && digits < 1000 {
        step /= int(10);
        digits += 1;
    }
    digits
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]`, found from continued fraction expansions.
pub fn simplest_rational(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi, "empty interval");
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_rational(&-hi, &-lo);
    }
    let floor = lo.floor();
    if &floor == lo {
        return floor;
    }
    let next = &floor + Rational::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_rational(&(hi - &floor).recip(), &(lo - &floor).recip());
    floor + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplest_rational_examples() {
        assert_eq!(simplest_rational(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_rational(&rat(-7, 4), &rat(-3, 2)), rat(-3, 2));
        assert_eq!(simplest_rational(&rat(-17, 10), &rat(-16, 10)), rat(-5, 3));
        assert_eq!(simplest_rational(&rat(-1, 2), &rat(1, 3)), int(0));
        assert_eq!(simplest_rational(&rat(5, 2), &rat(5, 2)), rat(5, 2));
        assert_eq!(simplest_rational(&rat(13, 10), &rat(22, 10)), int(2));
        let half = rat(1, 2);
        let eps = ten_to_minus(12);
        assert_eq!(
            simplest_rational(&(&half - &eps), &(&half + &eps / int(3))),
            half
        );
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 0/7 ").unwrap(), Rational::zero());
        assert!(matches!(
            parse_rational("1/0"),
            Err(Error::ZeroDenominator { .. })
        ));
        assert!(parse_rational("a/2").is_err());
    }

    #[test]
    fn parse_decimal_is_exact() {
        assert_eq!(parse_decimal("1e-12").unwrap(), ten_to_minus(12));
        assert_eq!(parse_decimal("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_decimal("-2.5E+1").unwrap(), int(-25));
        assert_eq!(parse_decimal(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_decimal("3/8").unwrap(), rat(3, 8));
        assert!(parse_decimal("1e").is_err());
        assert!(parse_decimal("").is_err());
        assert!(parse_decimal("1.2.3").is_err());
    }

    #[test]
    fn decimal_rendering_rounds_half_away() {
        assert_eq!(to_decimal(&rat(1, 4), 1), "0.3");
        assert_eq!(to_decimal(&rat(-1, 4), 1), "-0.3");
        assert_eq!(to_decimal(&rat(1, 3), 4), "0.3333");
        assert_eq!(to_decimal(&int(7), 0), "7");
        assert_eq!(to_decimal(&rat(-1, 1000), 2), "0.00");
        assert_eq!(to_decimal(&rat(12345, 100), 3), "123.450");
    }

    #[test]
    fn tolerance_digits() {
        assert_eq!(digits_for_tolerance(&ten_to_minus(12)), 12);
        assert_eq!(digits_for_tolerance(&rat(1, 2)), 1);
        assert_eq!(digits_for_tolerance(&int(1)), 0);
        assert_eq!(digits_for_tolerance(&rat(3, 1000)), 3);
    }
}
