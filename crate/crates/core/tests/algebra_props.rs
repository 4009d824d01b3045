//! Properties of the normal-form engine and two-route dimension checks.
//! The elimination route never touches the Groebner machinery, so agreement
//! is an independent cross-check of the basis computation.

use proptest::prelude::*;
use qcoh_core::classical::classical_relations;
use qcoh_core::hilbert::{poly_mul, HilbertSeries, IntPoly};
use qcoh_core::ideal::IdealPresentation;
use qcoh_core::monomial::{Grading, Monomial};
use qcoh_core::poly::GradedPolynomial;
use qcoh_core::quantum::quantum_relations;
use qcoh_core::rational::ratq;
use qcoh_core::verify::component_dimension_by_elimination;

fn classical_ideal(g: u32) -> IdealPresentation {
    IdealPresentation::new(classical_relations(g).unwrap().generators(), Grading::classical())
        .unwrap()
}

fn quantum_ideal(g: u32) -> IdealPresentation {
    IdealPresentation::new(quantum_relations(g).unwrap().generators(), Grading::quantum()).unwrap()
}

/// 1 - t^k as an integer polynomial.
fn one_minus(k: u32) -> IntPoly {
    let mut p = vec![0i128; k as usize + 1];
    p[0] = 1;
    p[k as usize] = -1;
    p
}

/// The complete-intersection closed form
/// (1-t^g)(1-t^{g+1})(1-t^{g+2}) / ((1-t)(1-t^2)(1-t^3)).
fn closed_form(g: u32) -> HilbertSeries {
    let num = poly_mul(&poly_mul(&one_minus(g), &one_minus(g + 1)), &one_minus(g + 2));
    HilbertSeries::new(num, vec![1, 2, 3])
}

#[test]
fn hilbert_series_matches_the_closed_form() {
    for g in 2..=6 {
        let hs = classical_ideal(g).hilbert_series().unwrap();
        assert_eq!(hs, closed_form(g), "genus {}", g);
    }
}

#[test]
fn hilbert_coefficients_match_graded_bases() {
    for g in 2..=6 {
        let ideal = classical_ideal(g);
        let hs = ideal.hilbert_series().unwrap();
        let top = 3 * g - 3;
        let coeffs = hs.expand(top as usize + 2);
        for d in 0..=(top + 2) {
            assert_eq!(
                coeffs[d as usize],
                ideal.graded_basis(d).len() as i128,
                "genus {} degree {}",
                g,
                d
            );
        }
    }
}

#[test]
fn groebner_dimensions_match_elimination_route() {
    let grading = Grading::classical();
    for g in 2..=4 {
        let gens = classical_relations(g).unwrap().generators();
        let ideal = classical_ideal(g);
        for d in 0..=(3 * g - 3 + 2) {
            let by_elimination = component_dimension_by_elimination(&gens, &grading, d).unwrap();
            let by_groebner = ideal.graded_basis(d).len();
            assert_eq!(by_elimination, by_groebner, "genus {} degree {}", g, d);
        }
    }
}

#[test]
fn top_component_is_one_dimensional() {
    for g in 2..=6 {
        let ideal = classical_ideal(g);
        let top = 3 * g - 3;
        assert_eq!(ideal.graded_basis(top).len(), 1, "genus {}", g);
        for d in (top + 1)..=(top + 3) {
            assert!(ideal.graded_basis(d).is_empty(), "genus {} degree {}", g, d);
        }
    }
}

fn arb_poly(nvars: usize) -> impl Strategy<Value = GradedPolynomial> {
    let exp = move |max: u32| 0..=max;
    let term = (
        exp(3),
        exp(2),
        exp(2),
        if nvars == 4 { 0..=2u32 } else { 0..=0u32 },
        -12i64..=12,
        1i64..=4,
    );
    proptest::collection::vec(term, 0..6).prop_map(|terms| {
        GradedPolynomial::from_terms(terms.into_iter().map(|(a, b, g, q, num, den)| {
            (Monomial([a, b, g, q]), ratq(num, den))
        }))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_a_projection(p in arb_poly(3)) {
        for g in 2..=3 {
            let ideal = classical_ideal(g);
            let once = ideal.normal_form(&p).unwrap();
            let twice = ideal.normal_form(&once).unwrap();
            prop_assert_eq!(&once, &twice);
        }
    }

    #[test]
    fn normal_form_is_a_ring_morphism(p in arb_poly(3), q in arb_poly(3)) {
        for g in 2..=3 {
            let ideal = classical_ideal(g);
            let direct = ideal.normal_form(&(&p * &q)).unwrap();
            let reduced = ideal
                .normal_form(&(&ideal.normal_form(&p).unwrap() * &ideal.normal_form(&q).unwrap()))
                .unwrap();
            prop_assert_eq!(&direct, &reduced);
        }
    }

    #[test]
    fn normal_form_is_linear(p in arb_poly(3), q in arb_poly(3)) {
        let ideal = classical_ideal(2);
        let sum = ideal.normal_form(&(&p + &q)).unwrap();
        let parts = &ideal.normal_form(&p).unwrap() + &ideal.normal_form(&q).unwrap();
        prop_assert_eq!(&sum, &parts);
    }

    #[test]
    fn quantum_normal_form_morphism(p in arb_poly(4), q in arb_poly(4)) {
        let ideal = quantum_ideal(2);
        let direct = ideal.normal_form(&(&p * &q)).unwrap();
        let reduced = ideal
            .normal_form(&(&ideal.normal_form(&p).unwrap() * &ideal.normal_form(&q).unwrap()))
            .unwrap();
        prop_assert_eq!(&direct, &reduced);
    }
}
