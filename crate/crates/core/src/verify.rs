//! Independent cross-check routes used by the verification suite. Nothing
//! here touches the Groebner engine: graded component dimensions come from
//! exact row reduction of the multiplication maps alone, so agreement with
//! the normal-form route is a genuine two-route check.

use crate::error::Result;
use crate::linalg;
use crate::monomial::{monomials_of_degree, Grading};
use crate::poly::GradedPolynomial;
use crate::rational::Rational;
use num_traits::Zero;

/// Dimension of degree-d component of the quotient by homogeneous
/// generators, as dim R_d minus the rank of the span of all monomial
/// multiples of the generators landing in degree d.
pub fn component_dimension_by_elimination(
    generators: &[GradedPolynomial],
    grading: &Grading,
    d: u32,
) -> Result<usize> {
    let ambient = monomials_of_degree(d, grading);
    if ambient.is_empty() {
        return Ok(0);
    }
    let col_of = |m: &crate::monomial::Monomial| ambient.binary_search(m).expect("degree-d monomial");
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for gen in generators {
        let Some(gen_degree) = gen.homogeneous_degree(grading) else {
            continue;
        };
        if gen_degree > d {
            continue;
        }
        for mult in monomials_of_degree(d - gen_degree, grading) {
            let mut row = vec![Rational::zero(); ambient.len()];
            for (m, c) in gen.terms() {
                row[col_of(&m.mul(&mult))] = c.clone();
            }
            rows.push(row);
        }
    }
    let ideal_dim = linalg::rank(rows);
    Ok(ambient.len() - ideal_dim)
}
