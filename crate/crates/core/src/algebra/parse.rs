use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

const MAX_EXPONENT: usize = 4096;

/// Parses polynomial text in the variable `x`.
///
/// Grammar: a sum of terms `[+-] [c][x[^k]]` where `c` is an integer or a
/// `p/q` fraction. Whitespace is ignored between tokens; `^` is required for
/// exponents. Like terms are summed and the result is trimmed.
pub fn poly_parse(text: &str) -> Result<Poly> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
    }
    .polynomial()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            std::str::from_utf8(&self.src[start..self.pos])
                .expect("ascii digits")
                .parse()
                .expect("digit run parses")
        })
    }

    fn polynomial(mut self) -> Result<Poly> {
        let mut coeffs: Vec<Rational> = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return self.syntax("empty polynomial");
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let negative = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return self.syntax("expected '+' or '-'"),
            };
            first = false;
            self.skip_ws();
            let (degree, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, Rational::zero());
            }
            coeffs[degree] += c;
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    fn term(&mut self) -> Result<(usize, Rational)> {
        let coeff = match self.digits() {
            Some(num) => {
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den_pos = self.pos;
                    let Some(den) = self.digits() else {
                        return self.syntax("expected denominator after '/'");
                    };
                    if den.is_zero() {
                        return Err(Error::ZeroDenominator { position: den_pos });
                    }
                    Some(Rational::new(num, den))
                } else {
                    Some(Rational::from_integer(num))
                }
            }
            None => None,
        };
        self.skip_ws();
        if self.peek() != Some(b'x') {
            return match coeff {
                Some(c) => Ok((0, c)),
                None => self.syntax("expected a coefficient or 'x'"),
            };
        }
        self.pos += 1;
        self.skip_ws();
        let mut degree = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let Some(k) = self.digits() else {
                return self.syntax("expected exponent digits after '^'");
            };
            degree = match usize::try_from(k) {
                Ok(k) if k <= MAX_EXPONENT => k,
                _ => return self.syntax(format!("exponent exceeds {MAX_EXPONENT}")),
            };
        }
        Ok((degree, coeff.unwrap_or_else(Rational::one)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn parses_examples() {
        assert_eq!(poly_parse("x^2 - 2").unwrap(), Poly::from_ints(&[-2, 0, 1]));
        assert_eq!(
            poly_parse("16x^5 - 20x^3 + 5x - 1/2").unwrap(),
            Poly::from_coeffs(vec![rat(-1, 2), int(5), int(0), int(-20), int(0), int(16)])
        );
        assert!(poly_parse("0").unwrap().is_zero());
    }

    #[test]
    fn whitespace_and_like_terms() {
        assert_eq!(
            poly_parse("  - x ^ 2 +3 /4 x+ x - x^2").unwrap(),
            Poly::from_coeffs(vec![int(0), rat(7, 4), int(-2)])
        );
        assert_eq!(poly_parse("x - x").unwrap(), Poly::zero());
    }

    #[test]
    fn reports_positions() {
        assert_eq!(
            poly_parse("x^^2"),
            Err(Error::Syntax {
                position: 2,
                message: "expected exponent digits after '^'".into()
            })
        );
        assert!(matches!(
            poly_parse("x2"),
            Err(Error::Syntax { position: 1, .. })
        ));
        assert!(matches!(
            poly_parse(""),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            poly_parse("3 + "),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            poly_parse("2*x"),
            Err(Error::Syntax { position: 1, .. })
        ));
        assert_eq!(
            poly_parse("x + 1/0"),
            Err(Error::ZeroDenominator { position: 6 })
        );
    }

    #[test]
    fn display_round_trips() {
        for text in ["16x^5 - 20x^3 + 5x - 1/2", "-x + 2", "-3/4x^7 + x", "5"] {
            let p = poly_parse(text).unwrap();
            assert_eq!(p.to_string(), text);
            assert_eq!(poly_parse(&p.to_string()).unwrap(), p);
        }
    }
}
