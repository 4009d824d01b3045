//! Canonical text rendering of orbifold classes. The output re-parses to
//! the same class, which the round-trip tests pin down.

use num_traits::{One, Signed};
use qcoh_core::chenruan::OrbifoldClass;
use qcoh_core::monomial::{ASCII_NAMES, QPARAM, UNICODE_NAMES};
use qcoh_core::rational::Rational;

/// One printed term: sign, magnitude text.
struct Term {
    negative: bool,
    body: String,
}

fn join(terms: Vec<Term>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i == 0 {
            if t.negative {
                out.push('-');
            }
        } else if t.negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&t.body);
    }
    out
}

fn q_name(unicode: bool) -> &'static str {
    if unicode {
        UNICODE_NAMES[QPARAM]
    } else {
        ASCII_NAMES[QPARAM]
    }
}

fn coeff_prefix(c: &Rational) -> (bool, Option<String>) {
    let negative = c.is_negative();
    let abs = c.abs();
    if abs.is_one() {
        (negative, None)
    } else {
        (negative, Some(abs.to_string()))
    }
}

pub fn class_text(x: &OrbifoldClass, unicode: bool) -> String {
    let names = if unicode { &UNICODE_NAMES } else { &ASCII_NAMES };
    let mut terms: Vec<Term> = Vec::new();

    // Untwisted part, in display order (degree-descending, a-major).
    let mut untwisted: Vec<_> = x.untwisted_part().terms().collect();
    untwisted.sort_by(|p, q| q.0.display_cmp(p.0));
    for (m, c) in untwisted {
        let (negative, prefix) = coeff_prefix(c);
        let mono = m.text(names);
        let body = match (m.is_one(), prefix) {
            (true, Some(p)) => p,
            (true, None) => "1".to_string(),
            (false, Some(p)) => format!("{}*{}", p, mono),
            (false, None) => mono,
        };
        terms.push(Term { negative, body });
    }

    // Twisted part, one printed term per (generator, Q-power).
    for (elem, coeff) in x.twisted_part() {
        for (m, c) in coeff.terms() {
            let (negative, prefix) = coeff_prefix(c);
            let mut body = String::new();
            if let Some(p) = prefix {
                body.push_str(&p);
                body.push('*');
            }
            body.push_str(&elem.text());
            match m.0[QPARAM] {
                0 => {}
                1 => body.push_str(&format!("*{}", q_name(unicode))),
                e => body.push_str(&format!("*{}^{}", q_name(unicode), e)),
            }
            terms.push(Term { negative, body });
        }
    }
    join(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qcoh_core::poly::{beta, qparam, GradedPolynomial};
    use qcoh_core::rational::rat;
    use qcoh_core::sector::{SectorBasisElement, TorsionClass};

    #[test]
    fn table_line_rendering() {
        let p = &beta() + &qparam().scale(&rat(4));
        let x = OrbifoldClass::from_untwisted(2, p);
        assert_eq!(class_text(&x, false), "b + 4*Q");
    }

    #[test]
    fn sector_rendering_with_q_coefficient() {
        let kappa = TorsionClass::from_bit_str(2, "1000").unwrap();
        let elem = SectorBasisElement::new(kappa, 2, 1).unwrap();
        let mut x = OrbifoldClass::zero(2);
        x.add_sector_term(elem, qparam().scale(&rat(-2)));
        assert_eq!(class_text(&x, false), "-2*t[1000]:h2:1*Q");
        let mut y = OrbifoldClass::zero(2);
        y.add_sector_term(elem, GradedPolynomial::one());
        assert_eq!(class_text(&y, false), "t[1000]:h2:1");
    }

    #[test]
    fn zero_prints_as_zero() {
        assert_eq!(class_text(&OrbifoldClass::zero(2), false), "0");
    }
}
