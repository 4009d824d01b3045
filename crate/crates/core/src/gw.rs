//! Closed-form evaluators: virtual dimensions of the stable-map loci,
//! extension-bundle ranks over the Jacobian for the three stacky base
//! curves, and the Jacobian-side reduction of the degree-one three-point
//! invariants. Everything here is formal arithmetic, used as an independent
//! cross-check of the product engine.

use crate::error::{Error, Result};
use crate::rational::{rat, rat_factorial, Rational};
use num_integer::binomial;
use num_traits::Zero;

/// The three base curves entering the moduli comparison.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StackyModel {
    /// The honest projective line.
    PlainP1,
    /// One stacky mu_2 point.
    P12,
    /// Two stacky mu_2 points (not the weighted projective line P(2,2)).
    P22,
}

/// Virtual dimension of the 3-sector stable-map locus into the quotient of
/// the moduli space: (3g-6) + n_marks + (2e, or e with the half-degree
/// monodromy convention) - sum of ages.
pub fn virtual_dim_m(g: u32, n_marks: u32, e: u32, ages: &[u32], half_degree: bool) -> i64 {
    let degree_term = if half_degree { e } else { 2 * e };
    let age_sum: i64 = ages.iter().map(|&a| a as i64).sum();
    (3 * g as i64 - 6) + n_marks as i64 + degree_term as i64 - age_sum
}

/// Virtual dimension of the stable-map locus into the quotient of the
/// extension bundle: (2g-4) + 3 + g*e - sum of ages.
pub fn virtual_dim_n(g: u32, e: u32, ages: &[u32]) -> i64 {
    let age_sum: i64 = ages.iter().map(|&a| a as i64).sum();
    (2 * g as i64 - 4) + 3 + (g * e) as i64 - age_sum
}

/// Rank of the extension bundle over the Jacobian, by the orbifold
/// Riemann-Roch arithmetic of the three cases: the rank is -chi, with chi
/// split into the coarse-curve integral and one correction per stacky point.
pub fn extension_rank(model: StackyModel, g: u32) -> i64 {
    let gm1 = rat(1) - rat(g as i64); // (1 - g)
    let chi = match model {
        // -N = (1-g) - 1 + (1-g) - 1 = -2g
        StackyModel::PlainP1 => &gm1 - &rat(1) + &gm1 - rat(1),
        // -N = 5/4 (1-g) - 5/4 - (1/4 (1-g) - 1/4) = -g
        StackyModel::P12 => {
            let coarse = gm1.clone() * crate::rational::ratq(5, 4) - crate::rational::ratq(5, 4);
            let stacky = gm1.clone() * crate::rational::ratq(1, 4) - crate::rational::ratq(1, 4);
            coarse - stacky
        }
        // -N = (1-g) - 1 - ((1-g) - 1) = 0
        StackyModel::P22 => {
            let coarse = &gm1 - &rat(1);
            let stacky = &gm1 - &rat(1);
            coarse - stacky
        }
    };
    let n = -chi;
    debug_assert!(n.is_integer());
    let v: i64 = n.to_integer().try_into().expect("rank fits i64");
    v
}

/// A formal monomial omega^p [X]^x with a rational coefficient, as produced
/// by expanding the Jacobian-side integrand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianMonomial {
    pub omega_exp: u32,
    pub x_exp: u32,
    pub coefficient: Rational,
}

/// Expand (4*omega + [X])^{n1} * [X]^{2 n2 + 2}.
fn expand_integrand(n1: u32, n2: u32) -> Vec<JacobianMonomial> {
    (0..=n1)
        .map(|k| JacobianMonomial {
            omega_exp: k,
            x_exp: (n1 - k) + 2 * n2 + 2,
            coefficient: rat(binomial(n1 as i64, k as i64)) * rat(4).pow(k as i32),
        })
        .collect()
}

/// Evaluate the Jacobian-side reduction of the degree-one three-point
/// invariant with insertions a^{n1} b^{n2}:
///   expand (4w + X)^{n1} X^{2 n2 + 2},
///   substitute X^m -> (-8)^i / i! * w^i with i = m - (2g-1) (zero below),
///   integrate w^g over the Jacobian as g!.
/// Inputs violating the degree condition n1 + 2 n2 + 2 = 3g - 1 evaluate to
/// zero. The caller applies the (-1)^{g-1} sign for the curve-side value.
/// The third insertion exponent has no Jacobian-side expression and is
/// rejected when nonzero.
pub fn donaldson_evaluate(g: u32, n1: u32, n2: u32, n3: u32) -> Result<Rational> {
    if n3 != 0 {
        return Err(Error::Unsupported(
            "the third insertion has no Jacobian-side expression; n3 must be 0".into(),
        ));
    }
    if n1 + 2 * n2 + 2 != 3 * g - 1 {
        return Ok(Rational::zero());
    }
    let base = 2 * g - 1;
    let mut total = Rational::zero();
    for term in expand_integrand(n1, n2) {
        if term.x_exp < base {
            continue;
        }
        let i = term.x_exp - base;
        let omega_power = term.omega_exp + i;
        if omega_power != g {
            continue;
        }
        let substituted = term.coefficient * rat(-8).pow(i as i32) / rat_factorial(i);
        total += substituted * rat_factorial(g);
    }
    Ok(total)
}
