//! Evaluate parsed expressions to orbifold classes inside a chosen ring.

use crate::parser::Expr;
use qcoh_core::chenruan::{ChenRuanAlgebra, OrbifoldClass};
use qcoh_core::poly::GradedPolynomial;
use qcoh_core::quantum::QuantumOrbifoldPresentation;
use qcoh_core::Error as CoreError;

/// The ring a product is taken in. `Free` multiplies untwisted parts as
/// plain polynomials without any quotient; it is what relation texts and
/// cached bases are evaluated with.
pub enum Ring {
    Classical(ChenRuanAlgebra),
    Quantum(QuantumOrbifoldPresentation),
    Free(u32),
}

impl Ring {
    pub fn genus(&self) -> u32 {
        match self {
            Ring::Classical(cr) => cr.genus(),
            Ring::Quantum(q) => q.genus(),
            Ring::Free(g) => *g,
        }
    }

    fn product(&self, x: &OrbifoldClass, y: &OrbifoldClass) -> Result<OrbifoldClass, CoreError> {
        match self {
            Ring::Classical(cr) => cr.cr_product(x, y),
            Ring::Quantum(q) => q.quantum_product(x, y),
            Ring::Free(g) => {
                if !x.twisted_part().is_empty() || !y.twisted_part().is_empty() {
                    return Err(CoreError::Unsupported(
                        "sector atoms cannot be multiplied without a ring".into(),
                    ));
                }
                Ok(OrbifoldClass::from_untwisted(
                    *g,
                    x.untwisted_part() * y.untwisted_part(),
                ))
            }
        }
    }
}

pub fn eval(expr: &Expr, ring: &Ring) -> Result<OrbifoldClass, CoreError> {
    let g = ring.genus();
    match expr {
        Expr::Rational(c) => Ok(OrbifoldClass::unit(g).scale(c)),
        Expr::Var(i) => Ok(OrbifoldClass::from_untwisted(g, GradedPolynomial::var(*i))),
        Expr::Sector(elem) => OrbifoldClass::from_sector(g, *elem),
        Expr::Neg(a) => Ok(eval(a, ring)?.negate()),
        Expr::Add(a, b) => eval(a, ring)?.add(&eval(b, ring)?),
        Expr::Sub(a, b) => eval(a, ring)?.add(&eval(b, ring)?.negate()),
        Expr::Mul(a, b) => ring.product(&eval(a, ring)?, &eval(b, ring)?),
        Expr::Pow(a, e) => {
            let base = eval(a, ring)?;
            let mut acc = OrbifoldClass::unit(g);
            for _ in 0..*e {
                acc = ring.product(&acc, &base)?;
            }
            Ok(acc)
        }
    }
}

/// Evaluate a canonical polynomial text (no sector atoms) to a polynomial.
pub fn eval_polynomial_text(text: &str, genus: u32) -> Result<GradedPolynomial, String> {
    let expr = crate::parser::parse(text, genus).map_err(|e| e.to_string())?;
    let class = eval(&expr, &Ring::Free(genus)).map_err(|e| e.to_string())?;
    Ok(class.untwisted_part().clone())
}
