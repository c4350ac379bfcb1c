use std::collections::BTreeSet;

use multifold::algebra::{int, poly_parse, rat, ten_to_minus, to_f64, Poly, Rational};
use multifold::compiler::{compile, FoldStep};
use multifold::simulator::{check_intersections, elaborate, evaluate, free_parameters};
use multifold::solver::{solve_complex, solve_real};
use multifold::Error;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

#[test]
fn quintic_end_to_end() {
    let p = poly_parse("16x^5 - 20x^3 + 5x - 1/2").unwrap();
    let script = compile(&p).unwrap();
    assert_eq!(script.steps().len(), 11);
    let scene = elaborate(&script).unwrap();
    assert_eq!(scene.trace.len(), 5);
    assert_eq!(evaluate(&scene, &rat(1, 2)).unwrap().final_gap(), int(0));

    let report = solve_real(&p, &ten_to_minus(12)).unwrap();
    let positive: Vec<_> = report
        .roots
        .iter()
        .filter(|r| r.value > Rational::zero())
        .collect();
    assert_eq!(positive.len(), 3);
    for root in positive {
        let cs = evaluate(&scene, &root.value).unwrap();
        assert!(cs.final_gap().abs() <= ten_to_minus(12));
        assert!(check_intersections(&cs).iter().all(|d| d.passed));
    }
}

#[test]
fn injected_second_sheet_has_two_parameters() {
    let script = compile(&poly_parse("x^2 - 2").unwrap()).unwrap();
    let mut steps = script.steps().to_vec();
    steps.insert(4, FoldStep::PlaceSheetX);
    let forged = multifold::compiler::FoldScript::from_parts(
        script.source().clone(),
        script.bound().clone(),
        steps,
    );
    assert_eq!(
        free_parameters(&forged),
        BTreeSet::from(["x1".to_string(), "x2".to_string()])
    );
    assert!(matches!(elaborate(&forged), Err(Error::MalformedScript(_))));
}

#[test]
fn zero_coefficients_skip_sheet_a() {
    let scene = elaborate(&compile(&poly_parse("x^3 - 2").unwrap()).unwrap()).unwrap();
    let present: Vec<bool> = scene
        .frames
        .iter()
        .map(|f| f.sheet_a_edge.is_some())
        .collect();
    assert_eq!(present, vec![false, false, true]);
}

fn linear_product() -> impl Strategy<Value = (Poly, usize)> {
    prop::collection::btree_set(-6i64..=6, 1..=3).prop_map(|roots| {
        let p = roots
            .iter()
            .fold(Poly::one(), |acc, r| &acc * &Poly::from_ints(&[-r, 1]));
        (p, roots.len())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn complex_solve_of_real_rooted_polys_is_real((p, count) in linear_product()) {
        let tol = ten_to_minus(10);
        let report = solve_complex(&p, &tol).unwrap();
        prop_assert_eq!(report.pairs.len(), count);
        for pair in &report.pairs {
            prop_assert!(pair.im.is_zero());
            prop_assert!(pair.residual_squared <= &tol * &tol);
        }
    }

    #[test]
    fn real_solve_residuals_within_tolerance(coeffs in prop::collection::vec(-9i64..=9, 2..=6)) {
        let mut coeffs = coeffs;
        if *coeffs.last().unwrap() == 0 {
            *coeffs.last_mut().unwrap() = 1;
        }
        let p = Poly::from_ints(&coeffs);
        let tol = ten_to_minus(12);
        let report = solve_real(&p, &tol).unwrap();
        for (a, b) in report.roots.iter().zip(report.roots.iter().skip(1)) {
            prop_assert!(a.value < b.value);
            prop_assert!(a.isolating.hi() <= b.isolating.lo());
        }
        for root in &report.roots {
            prop_assert!(root.residual <= tol);
            prop_assert!(to_f64(&root.residual) <= 1e-12);
        }
    }
}

#[test]
fn complex_pairs_for_mixed_roots() {
    // (x - 1)(x^2 + 4): roots 1 and +-2i
    let p = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[4, 0, 1]);
    let report = solve_complex(&p, &ten_to_minus(12)).unwrap();
    let got: Vec<_> = report
        .pairs
        .iter()
        .map(|c| (c.re.clone(), c.im.clone()))
        .collect();
    assert_eq!(
        got,
        vec![(int(0), int(-2)), (int(0), int(2)), (int(1), int(0))]
    );
}
