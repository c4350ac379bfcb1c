use num_traits::Zero;

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// The nested partial results of Horner's scheme.
///
/// `partials[0]` is the constant `b_n = a_n`; each following entry is
/// `b_k = x * b_{k+1} + a_k`, ending with `b_0 = p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornerChain {
    partials: Vec<Poly>,
}

impl HornerChain {
    /// Partials in construction order `b_n, b_{n-1}, ..., b_0`.
    pub fn partials(&self) -> &[Poly] {
        &self.partials
    }

    /// `b_k`, indexed by coefficient position.
    pub fn partial(&self, k: usize) -> &Poly {
        let n = self.partials.len() - 1;
        &self.partials[n - k]
    }

    pub fn source(&self) -> &Poly {
        self.partials.last().expect("chain is never empty")
    }
}

pub fn horner_chain(p: &Poly) -> Result<HornerChain> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let mut partials = Vec::with_capacity(n + 1);
    let mut b = Poly::constant(p.coeffs()[n].clone());
    partials.push(b.clone());
    for a in p.coeffs()[..n].iter().rev() {
        b = &b.shift_up(1) + &Poly::constant(a.clone());
        partials.push(b.clone());
    }
    Ok(HornerChain { partials })
}

/// Exact `p(x)` by Horner's rule.
pub fn eval_horner(p: &Poly, x: &Rational) -> Rational {
    p.coeffs()
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, a| acc * x + a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, poly_parse, rat};
    use proptest::prelude::*;

    fn power_sum(p: &Poly, x: &Rational) -> Rational {
        let mut total = Rational::zero();
        for (k, a) in p.coeffs().iter().enumerate() {
            let mut term = a.clone();
            for _ in 0..k {
                term *= x;
            }
            total += term;
        }
        total
    }

    #[test]
    fn chain_examples() {
        let chain = horner_chain(&Poly::from_ints(&[5, 3, 2])).unwrap();
        assert_eq!(
            chain.partials(),
            &[
                Poly::from_ints(&[2]),
                Poly::from_ints(&[3, 2]),
                Poly::from_ints(&[5, 3, 2])
            ]
        );
        let chain = horner_chain(&Poly::x()).unwrap();
        assert_eq!(chain.partials(), &[Poly::one(), Poly::x()]);
        let chain = horner_chain(&Poly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(
            chain.partials(),
            &[Poly::one(), Poly::x(), Poly::from_ints(&[-2, 0, 1])]
        );
        assert_eq!(chain.partial(1), &Poly::x());
        assert_eq!(horner_chain(&Poly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn eval_examples() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        assert_eq!(eval_horner(&p, &rat(3, 2)), rat(1, 4));
        assert_eq!(power_sum(&p, &rat(3, 2)), rat(1, 4));
        assert_eq!(eval_horner(&p, &Rational::zero()), int(-2));
        let chebyshev = poly_parse("16x^5 - 20x^3 + 5x - 1/2").unwrap();
        assert!(eval_horner(&chebyshev, &rat(1, 2)).is_zero());
        assert_eq!(eval_horner(&Poly::zero(), &rat(7, 3)), Rational::zero());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-10i64..=10, 1i64..=10).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn horner_matches_power_sum(
            coeffs in prop::collection::vec(arb_rational(), 0..=9),
            x in arb_rational(),
        ) {
            let p = Poly::from_coeffs(coeffs);
            prop_assert_eq!(eval_horner(&p, &x), power_sum(&p, &x));
        }

        #[test]
        fn chain_recurrence_holds(coeffs in prop::collection::vec(arb_rational(), 1..=9)) {
            let p = Poly::from_coeffs(coeffs);
            prop_assume!(!p.is_zero());
            let chain = horner_chain(&p).unwrap();
            let n = p.degree().unwrap();
            prop_assert_eq!(chain.partial(n), &Poly::constant(p.coeff(n)));
            for k in 0..n {
                let expect = &chain.partial(k + 1).shift_up(1) + &Poly::constant(p.coeff(k));
                prop_assert_eq!(chain.partial(k), &expect);
            }
            prop_assert_eq!(chain.source(), &p);
        }
    }
}
