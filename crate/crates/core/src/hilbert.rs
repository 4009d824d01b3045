//! Hilbert series of graded quotients as exact rational functions in t.
//!
//! The series of Q[vars]/I equals N(t) / prod_i (1 - t^{w_i}) where the
//! numerator is computed from the leading-term ideal by the standard
//! colon-ideal recursion; only the monomial data of a Groebner basis enters.

use crate::monomial::{Grading, Monomial};
use std::fmt;

/// Integer polynomials in t, dense by degree.
pub type IntPoly = Vec<i128>;

pub fn poly_trim(p: &mut IntPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

pub fn poly_add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    poly_trim(&mut out);
    out
}

pub fn poly_sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let neg: IntPoly = b.iter().map(|c| -c).collect();
    poly_add(a, &neg)
}

pub fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_shift(a: &IntPoly, k: usize) -> IntPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; k];
    out.extend_from_slice(a);
    out
}

/// 1 - t^w.
fn one_minus_t(w: u32) -> IntPoly {
    let mut p = vec![0; w as usize + 1];
    p[0] = 1;
    p[w as usize] = -1;
    p
}

/// A rational function N(t) / prod (1 - t^w) over Z.
#[derive(Clone, Debug)]
pub struct HilbertSeries {
    pub numerator: IntPoly,
    pub denom_weights: Vec<u32>,
}

impl HilbertSeries {
    pub fn new(numerator: IntPoly, denom_weights: Vec<u32>) -> Self {
        let mut numerator = numerator;
        poly_trim(&mut numerator);
        HilbertSeries { numerator, denom_weights }
    }

    pub fn denominator(&self) -> IntPoly {
        let mut d = vec![1];
        for &w in &self.denom_weights {
            d = poly_mul(&d, &one_minus_t(w));
        }
        d
    }

    /// Power-series coefficients up to and including degree n.
    pub fn expand(&self, n: usize) -> IntPoly {
        let mut c = vec![0i128; n + 1];
        for (i, v) in self.numerator.iter().enumerate() {
            if i <= n {
                c[i] = *v;
            }
        }
        // Multiplying by 1/(1 - t^w) is a strided prefix sum.
        for &w in &self.denom_weights {
            let w = w as usize;
            for d in w..=n {
                c[d] += c[d - w];
            }
        }
        c
    }

    pub fn coefficient(&self, d: usize) -> i128 {
        *self.expand(d).last().unwrap_or(&0)
    }

    /// When the series is a polynomial (finite-dimensional quotient),
    /// return its coefficients; otherwise None.
    pub fn polynomial(&self) -> Option<IntPoly> {
        // Exact long division numerator / denominator in Z[t].
        let den = self.denominator();
        let mut rem = self.numerator.clone();
        poly_trim(&mut rem);
        if rem.is_empty() {
            return Some(Vec::new());
        }
        if rem.len() < den.len() {
            return None;
        }
        let lead = *den.last().unwrap(); // +-1 for products of (1 - t^w)
        debug_assert!(lead == 1 || lead == -1);
        let mut quot = vec![0i128; rem.len() - den.len() + 1];
        while rem.len() >= den.len() && !rem.is_empty() {
            let k = rem.len() - den.len();
            let c = rem.last().unwrap() / lead;
            quot[k] = c;
            let sub = poly_shift(&den.iter().map(|x| x * c).collect(), k);
            rem = poly_sub(&rem, &sub);
        }
        if rem.is_empty() {
            poly_trim(&mut quot);
            Some(quot)
        } else {
            None
        }
    }
}

/// Equality as rational functions (cross multiplication).
impl PartialEq for HilbertSeries {
    fn eq(&self, other: &Self) -> bool {
        poly_mul(&self.numerator, &other.denominator())
            == poly_mul(&other.numerator, &self.denominator())
    }
}
impl Eq for HilbertSeries {}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polynomial() {
            Some(p) => f.write_str(&poly_text(&p)),
            None => write!(f, "({}) / ({})", poly_text(&self.numerator), poly_text(&self.denominator())),
        }
    }
}

/// Render an integer polynomial in t, e.g. "1 + 16t^2 + 4t^3".
pub fn poly_text(p: &IntPoly) -> String {
    let mut parts = Vec::new();
    for (d, c) in p.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let mag = c.abs();
        let body = match (d, mag) {
            (0, m) => m.to_string(),
            (1, 1) => "t".to_string(),
            (1, m) => format!("{}t", m),
            (d, 1) => format!("t^{}", d),
            (d, m) => format!("{}t^{}", m, d),
        };
        if parts.is_empty() {
            parts.push(if *c < 0 { format!("-{}", body) } else { body });
        } else if *c < 0 {
            parts.push(format!("- {}", body));
        } else {
            parts.push(format!("+ {}", body));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

/// Numerator of the Hilbert series of R / (leading-term ideal), by the
/// colon recursion N(I + (m)) = N(I) - t^{deg m} N(I : m).
pub fn quotient_numerator(leading_terms: &[Monomial], grading: &Grading) -> IntPoly {
    let minimal = minimalize(leading_terms.to_vec());
    numerator_rec(&minimal, grading)
}

fn minimalize(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort();
    ms.dedup();
    ms.iter()
        .filter(|m| !ms.iter().any(|k| k != *m && k.divides(m)))
        .copied()
        .collect()
}

fn numerator_rec(minimal: &[Monomial], grading: &Grading) -> IntPoly {
    match minimal.split_last() {
        None => vec![1],
        Some((m, rest)) => {
            let n_rest = numerator_rec(rest, grading);
            let colon: Vec<Monomial> = rest
                .iter()
                .map(|k| k.try_div(&k.gcd(m)).expect("gcd divides"))
                .collect();
            let n_colon = numerator_rec(&minimalize(colon), grading);
            let shifted = poly_shift(&n_colon, m.degree(grading) as usize);
            poly_sub(&n_rest, &shifted)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Grading;

    #[test]
    fn free_algebra_series() {
        // Zero ideal on generators of degrees 1, 2, 3.
        let hs = HilbertSeries::new(vec![1], vec![1, 2, 3]);
        assert_eq!(hs.expand(6), vec![1, 1, 2, 3, 4, 5, 7]);
        assert!(hs.polynomial().is_none());
    }

    #[test]
    fn monomial_quotient_numerator() {
        let g = Grading::classical();
        // LT ideal (b, g, a^4) leaves standard monomials 1, a, a^2, a^3.
        let lts = vec![
            Monomial([0, 1, 0, 0]),
            Monomial([0, 0, 1, 0]),
            Monomial([4, 0, 0, 0]),
        ];
        let num = quotient_numerator(&lts, &g);
        let hs = HilbertSeries::new(num, vec![1, 2, 3]);
        assert_eq!(hs.polynomial(), Some(vec![1, 1, 1, 1]));
    }

    #[test]
    fn rational_function_equality() {
        // (1 - t^2)/(1 - t) == (1 + t)/1
        let a = HilbertSeries::new(vec![1, 0, -1], vec![1]);
        let b = HilbertSeries::new(vec![1, 1], vec![]);
        assert_eq!(a, b);
        assert_eq!(a.polynomial(), Some(vec![1, 1]));
    }

    #[test]
    fn text_rendering() {
        assert_eq!(poly_text(&vec![1, 0, 16, 4]), "1 + 16t^2 + 4t^3");
        assert_eq!(poly_text(&vec![0]), "0");
        assert_eq!(poly_text(&vec![-1, 1]), "-1 + t");
    }
}
