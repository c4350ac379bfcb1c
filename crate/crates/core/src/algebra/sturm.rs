use num_traits::{Signed, Zero};
use std::fmt;

use super::{cauchy_root_bound, int, squarefree_part, Poly, Rational};
use crate::error::Result;

/// Closed rational interval `[lo, hi]`. Root counts use the half-open
/// reading `(lo, hi]` unless stated otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    /// Panics if `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// `[-hi, -lo]`.
    pub fn negated(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Signed remainder sequence of a squarefree polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    seq: Vec<Poly>,
}

impl SturmChain {
    pub fn seq(&self) -> &[Poly] {
        &self.seq
    }

    /// The squarefree polynomial whose roots the chain counts.
    pub fn base(&self) -> &Poly {
        &self.seq[0]
    }

    /// Sign variations of the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for s in &self.seq {
            let v = s.eval(x);
            if v.is_zero() {
                continue;
            }
            let positive = v.is_positive();
            if last.is_some_and(|l| l != positive) {
                count += 1;
            }
            last = Some(positive);
        }
        count
    }

    /// Distinct roots in `(lo, hi]`.
    ///
    /// With zeros skipped the variation count is right-continuous at a
    /// simple root, so the count is exact even when an endpoint is a root.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    /// Distinct roots in `[lo, hi]`.
    pub fn count_closed(&self, lo: &Rational, hi: &Rational) -> usize {
        let at_lo = usize::from(self.base().eval(lo).is_zero());
        if lo > hi {
            return 0;
        }
        at_lo + self.count(lo, hi)
    }
}

pub fn sturm_chain(p: &Poly) -> Result<SturmChain> {
    p.positive_degree()?;
    let s0 = squarefree_part(p)?;
    let s1 = s0.derivative();
    let mut seq = vec![s0, s1];
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    Ok(SturmChain { seq })
}

/// Distinct real roots of the chain's base polynomial in `(lo, hi]`.
pub fn count_real_roots(chain: &SturmChain, iv: &Interval) -> usize {
    chain.count(iv.lo(), iv.hi())
}

/// Disjoint intervals inside `(-B, B]`, `B` the Cauchy bound, each holding
/// exactly one distinct real root, in increasing order.
pub fn isolate_real_roots(p: &Poly) -> Result<Vec<Interval>> {
    let chain = sturm_chain(p)?;
    let bound = cauchy_root_bound(p)?;
    Ok(isolate_in(&chain, &-&bound, &bound))
}

/// Isolates the roots in `(lo, hi]`. No returned interval has a root of the
/// base polynomial at its lower endpoint, so half-open and closed counts agree.
pub(crate) fn isolate_in(chain: &SturmChain, lo: &Rational, hi: &Rational) -> Vec<Interval> {
    let base = chain.base();
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone(), chain.count(lo, hi))];
    while let Some((a, b, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 && !base.eval(&a).is_zero() {
            out.push(Interval::new(a, b));
            continue;
        }
        let m = split_point(base, &a, &b);
        let left = chain.count(&a, &m);
        stack.push((m.clone(), b, count - left));
        stack.push((a, m, left));
    }
    out
}

/// A point strictly inside `(a, b)` that is not a root of `p`: the midpoint,
/// or failing that the midpoint nudged right by a doubling step. The
/// `deg + 2` nudged candidates stay below `a + 3(b - a)/4` and at most `deg`
/// of them can be roots.
pub(crate) fn split_point(p: &Poly, a: &Rational, b: &Rational) -> Rational {
    let mid = (a + b) / int(2);
    if !p.eval(&mid).is_zero() {
        return mid;
    }
    let deg = p.degree().unwrap_or(0);
    let mut step = (b - a) / Rational::from_integer(num_traits::pow(2.into(), deg + 3));
    for _ in 0..deg + 2 {
        let candidate = &mid + &step;
        if !p.eval(&candidate).is_zero() {
            return candidate;
        }
        step *= int(2);
    }
    unreachable!("more candidates than roots")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::error::Error;
    use num_traits::One;
    use proptest::prelude::*;

    #[test]
    fn chain_examples() {
        let c = sturm_chain(&Poly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(
            c.seq(),
            &[
                Poly::from_ints(&[-2, 0, 1]),
                Poly::from_ints(&[0, 2]),
                Poly::from_ints(&[2])
            ]
        );
        let c = sturm_chain(&Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(c.seq(), &[Poly::from_ints(&[-1, 1]), Poly::one()]);
        let c = sturm_chain(&Poly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(
            c.seq(),
            &[
                Poly::from_ints(&[1, 0, 1]),
                Poly::from_ints(&[0, 2]),
                Poly::from_ints(&[-1])
            ]
        );
        assert_eq!(sturm_chain(&Poly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(
            sturm_chain(&Poly::from_ints(&[3])),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn count_examples() {
        let c = sturm_chain(&Poly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(count_real_roots(&c, &Interval::new(int(-3), int(3))), 2);
        let c2 = sturm_chain(&Poly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(count_real_roots(&c2, &Interval::new(int(-10), int(10))), 0);
        assert_eq!(count_real_roots(&c, &Interval::point(rat(7, 5))), 0);
    }

    #[test]
    fn endpoint_roots_follow_half_open_rule() {
        // roots -1, 0, 2
        let p = &(&Poly::from_ints(&[1, 1]) * &Poly::x()) * &Poly::from_ints(&[-2, 1]);
        let c = sturm_chain(&p).unwrap();
        assert_eq!(c.count(&int(-1), &int(2)), 2);
        assert_eq!(c.count_closed(&int(-1), &int(2)), 3);
        assert_eq!(c.count(&int(0), &int(0)), 0);
        assert_eq!(c.count_closed(&int(0), &int(0)), 1);
        assert_eq!(c.count(&int(-2), &int(-1)), 1);
    }

    #[test]
    fn isolation_examples() {
        let ivs = isolate_real_roots(&Poly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(ivs.len(), 2);
        let sqrt2 = std::f64::consts::SQRT_2;
        let hits = |iv: &Interval, r: f64| {
            crate::algebra::to_f64(iv.lo()) < r && r <= crate::algebra::to_f64(iv.hi())
        };
        assert!(hits(&ivs[0], -sqrt2) && ivs[0].hi() <= &int(0));
        assert!(hits(&ivs[1], sqrt2) && ivs[1].lo() >= &int(0));
        assert!(isolate_real_roots(&Poly::from_ints(&[1, 0, 1]))
            .unwrap()
            .is_empty());
        let ivs = isolate_real_roots(&Poly::x()).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].lo() < &int(0) && ivs[0].hi() >= &int(0));
    }

    #[test]
    fn midpoint_root_is_nudged() {
        // root exactly at the first midpoint 0 and at 1/2
        let p = &Poly::x() * &Poly::from_coeffs(vec![rat(-1, 2), int(1)]);
        let m = split_point(&p, &int(-1), &int(1));
        assert!(m > int(0) && m < int(1));
        assert!(!p.eval(&m).is_zero());
        let ivs = isolate_in(&sturm_chain(&p).unwrap(), &int(0), &int(1));
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].lo() > &int(0) && ivs[0].contains(&rat(1, 2)));
    }

    fn linear_product() -> impl Strategy<Value = (Vec<Rational>, Poly)> {
        prop::collection::btree_set((-40i64..=40, 1i64..=4), 1..=6).prop_map(|set| {
            let mut roots: Vec<Rational> = set.into_iter().map(|(n, d)| rat(n, d)).collect();
            roots.sort();
            roots.dedup();
            let p = roots.iter().fold(Poly::one(), |acc, r| {
                &acc * &Poly::from_coeffs(vec![-r.clone(), Rational::one()])
            });
            (roots, p)
        })
    }

    proptest! {
        #[test]
        fn isolation_partitions_the_count((roots, p) in linear_product()) {
            let chain = sturm_chain(&p).unwrap();
            let b = cauchy_root_bound(&p).unwrap();
            let total = chain.count(&-&b, &b);
            prop_assert_eq!(total, roots.len());
            let ivs = isolate_real_roots(&p).unwrap();
            let sum: usize = ivs.iter().map(|iv| count_real_roots(&chain, iv)).sum();
            prop_assert_eq!(sum, total);
            for (iv, r) in ivs.iter().zip(&roots) {
                prop_assert_eq!(count_real_roots(&chain, iv), 1);
                prop_assert!(iv.lo() < r && r <= iv.hi());
            }
            for pair in ivs.windows(2) {
                prop_assert!(pair[0].hi() <= pair[1].lo());
            }
        }
    }
}
